#include "germain/residues.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "germain/core_arith.hpp"

namespace germain {

namespace {

using u64 = std::uint64_t;

// Enumeration is O(theta); cap it so a stray argument cannot swamp memory.
constexpr u64 kThetaEnumerationLimit = 100'000'000;

void require_prime_inputs(u64 p, u64 theta) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (theta < 3 || !is_prime(theta))
    throw std::invalid_argument("theta must be a prime >= 3");
}

void require_enumerable(u64 theta) {
  if (theta > kThetaEnumerationLimit)
    throw std::out_of_range("theta exceeds the 10^8 enumeration guard");
}

}  // namespace

bool ResidueSet::contains(u64 r) const {
  return std::binary_search(residues.begin(), residues.end(), r);
}

ResidueSet pth_residues(u64 p, u64 theta) {
  require_prime_inputs(p, theta);
  require_enumerable(theta);
  std::vector<bool> seen(theta, false);
  for (u64 x = 1; x < theta; ++x) seen[mod_pow(x, p, theta)] = true;

  ResidueSet rs{p, theta, {}};
  rs.residues.reserve((theta - 1) / std::gcd(theta - 1, p));
  for (u64 r = 1; r < theta; ++r)
    if (seen[r]) rs.residues.push_back(r);
  return rs;
}

bool is_pth_power(std::int64_t a, u64 p, u64 theta) {
  require_prime_inputs(p, theta);
  // Reduce into 0..theta-1 in unsigned arithmetic; the magnitude of a
  // negative a is formed without negating INT64_MIN.
  u64 m;
  if (a >= 0) {
    m = static_cast<u64>(a) % theta;
  } else {
    u64 mag = static_cast<u64>(-(a + 1)) + 1;
    u64 rem = mag % theta;
    m = rem == 0 ? 0 : theta - rem;
  }
  if (m == 0)
    throw std::invalid_argument("is_pth_power: a must be nonzero mod theta");
  u64 g = std::gcd(theta - 1, p);
  return mod_pow(m, (theta - 1) / g, theta) == 1;
}

NcResult nc_condition(const ResidueSet& rs) {
  for (std::size_t i = 0; i + 1 < rs.residues.size(); ++i) {
    if (rs.residues[i + 1] == rs.residues[i] + 1)
      return {false, ConsecutiveWitness{rs.residues[i]}};
  }
  return {true, std::nullopt};
}

bool qualifies(u64 p, u64 theta) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("qualifies: p must be an odd prime >= 3");
  if (theta < 3 || !is_prime(theta))
    throw std::invalid_argument("qualifies: theta must be a prime >= 3");
  require_enumerable(theta);

  // When theta == p, p reduces to 0 and is not a nonzero residue, so the
  // second hypothesis holds vacuously; non-consecutivity still fails below.
  if (p % theta != 0 &&
      is_pth_power(static_cast<std::int64_t>(p % theta), p, theta))
    return false;

  // Non-consecutivity with early exit: insert residues one by one and stop
  // as soon as a neighbor is already present. Agrees with nc_condition on
  // the full set (property-tested).
  std::vector<bool> seen(theta, false);
  for (u64 x = 1; x < theta; ++x) {
    u64 r = mod_pow(x, p, theta);
    if (seen[r]) continue;
    if (seen[r - 1] || (r + 1 < theta && seen[r + 1])) return false;
    seen[r] = true;
  }
  return true;
}

}  // namespace germain
