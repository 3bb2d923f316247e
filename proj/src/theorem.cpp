#include "germain/theorem.hpp"

#include <stdexcept>

#include "germain/core_arith.hpp"

namespace germain {

namespace {

using u64 = std::uint64_t;

void require_search_args(u64 p, u64 n_max) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("p must be an odd prime >= 3");
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
}

// Builds the certificate for (p, N) if theta = 2Np+1 is a qualifying
// auxiliary prime, evaluating both hypotheses on the full residue set.
std::optional<AuxiliaryCertificate> try_certificate(u64 p, u64 n) {
  u64 theta = checked_add(checked_mul(checked_mul(2, n), p), 1);
  if (!is_prime(theta)) return std::nullopt;

  ResidueSet rs = pth_residues(p, theta);
  if (!nc_condition(rs).holds) return std::nullopt;
  if (is_pth_power(static_cast<std::int64_t>(p % theta), p, theta))
    return std::nullopt;

  AuxiliaryCertificate cert;
  cert.p = p;
  cert.n = n;
  cert.theta = theta;
  cert.residues = std::move(rs);
  cert.nc_holds = true;
  cert.p_is_pth_power = false;
  return cert;
}

}  // namespace

bool AuxiliaryCertificate::validate() const {
  if (theta != 2 * n * p + 1) return false;
  if (!nc_holds || p_is_pth_power) return false;
  if (!is_prime(p) || !is_prime(theta)) return false;
  ResidueSet fresh = pth_residues(p, theta);
  if (fresh.residues != residues.residues) return false;
  return nc_condition(fresh).holds &&
         !is_pth_power(static_cast<std::int64_t>(p % theta), p, theta);
}

std::vector<AuxiliaryCertificate> find_auxiliaries(u64 p, u64 n_max) {
  require_search_args(p, n_max);
  std::vector<AuxiliaryCertificate> out;
  for (u64 n = 1; n <= n_max; ++n) {
    if (auto cert = try_certificate(p, n)) out.push_back(std::move(*cert));
  }
  return out;
}

std::optional<AuxiliaryCertificate> case1_certificate(u64 p, u64 n_max) {
  require_search_args(p, n_max);
  for (u64 n = 1; n <= n_max; ++n) {
    if (auto cert = try_certificate(p, n)) return cert;
  }
  return std::nullopt;
}

LegendreTable legendre_table(u64 p_max, u64 n_max) {
  if (p_max < 3) throw std::invalid_argument("p_max must be >= 3");
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");

  LegendreTable table;
  for (u64 p : sieve_primes(p_max > 0 ? p_max - 1 : 0)) {
    if (p < 3) continue;
    if (auto cert = case1_certificate(p, n_max)) {
      table.rows.push_back(
          LegendreRow{p, cert->n, cert->theta, std::move(cert->residues)});
    } else {
      table.unresolved.push_back(p);
    }
  }
  return table;
}

std::vector<GermainPair> germain_primes(u64 limit) {
  std::vector<GermainPair> out;
  if (limit < 2) return out;
  if (limit > 50'000'000)
    throw std::out_of_range("germain_primes: limit exceeds 5*10^7 guard");
  // One sieve covering both p and 2p+1.
  u64 top = checked_add(checked_mul(2, limit), 1);
  std::vector<bool> composite(top + 1, false);
  for (u64 i = 2; i * i <= top; ++i) {
    if (composite[i]) continue;
    for (u64 j = i * i; j <= top; j += i) composite[j] = true;
  }
  for (u64 p = 2; p <= limit; ++p) {
    if (!composite[p] && !composite[2 * p + 1]) out.push_back({p, 2 * p + 1});
  }
  return out;
}

bool is_germain_prime(u64 p) {
  return is_prime(p) && is_prime(checked_add(checked_mul(2, p), 1));
}

}  // namespace germain
