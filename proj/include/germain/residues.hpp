#pragma once

// p-th power residues modulo a prime theta, and the two hypotheses of the
// Case 1 criterion: non-consecutivity of the residues and p itself not
// being a residue.

#include <cstdint>
#include <optional>
#include <vector>

namespace germain {

// Smallest r such that r and r+1 are both nonzero p-th power residues.
struct ConsecutiveWitness {
  std::uint64_t lower = 0;

  bool operator==(const ConsecutiveWitness&) const = default;
};

// The nonzero p-th power residues modulo theta, strictly ascending.
// They form a multiplicative subgroup of size (theta-1)/gcd(theta-1, p);
// for odd p the set is closed under r -> theta - r.
struct ResidueSet {
  std::uint64_t p = 0;
  std::uint64_t theta = 0;
  std::vector<std::uint64_t> residues;

  bool contains(std::uint64_t r) const;
};

struct NcResult {
  bool holds = false;
  std::optional<ConsecutiveWitness> witness;
};

// The exact set { x^p mod theta : 1 <= x <= theta-1 }, ascending.
// Both p and theta must be prime and theta >= 3 (std::invalid_argument).
ResidueSet pth_residues(std::uint64_t p, std::uint64_t theta);

// True iff a is a nonzero p-th power residue mod theta, decided by the
// exponent criterion a^((theta-1)/gcd(theta-1,p)) == 1 (mod theta).
// a may be negative; a == 0 (mod theta) is rejected.
bool is_pth_power(std::int64_t a, std::uint64_t p, std::uint64_t theta);

// Non-consecutivity: no r in 1..theta-2 has both r and r+1 in the set.
// Consecutive means adjacent integer representatives; the wrap pair
// (theta-1, 0) never counts because 0 is not a nonzero residue. When the
// condition fails, the witness is the smallest such r.
NcResult nc_condition(const ResidueSet& rs);

// Both hypotheses at once: non-consecutivity holds and p is not itself a
// p-th power mod theta. Defined for odd prime p >= 3 only.
bool qualifies(std::uint64_t p, std::uint64_t theta);

}  // namespace germain
