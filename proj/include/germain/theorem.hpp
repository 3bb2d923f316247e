#pragma once

// Application of the Case 1 criterion: search for qualifying auxiliary
// primes theta = 2Np+1, emit certificates, regenerate the per-exponent
// auxiliary table, and enumerate Sophie Germain primes.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "germain/residues.hpp"

namespace germain {

// Evidence that the pair (p, theta) with theta = 2Np+1 satisfies both
// hypotheses, so any solution x^p + y^p = z^p has one of x, y, z divisible
// by p^2. Only constructed when the hypotheses actually hold; validate()
// re-derives everything from scratch.
struct AuxiliaryCertificate {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::uint64_t theta = 0;
  ResidueSet residues;
  bool nc_holds = false;        // always true in a constructed certificate
  bool p_is_pth_power = true;   // always false in a constructed certificate

  static constexpr std::string_view conclusion =
      "case1-divisible-by-p-squared";

  bool validate() const;
};

// A prime p with 2p+1 also prime.
struct GermainPair {
  std::uint64_t p = 0;
  std::uint64_t safe = 0;

  bool operator==(const GermainPair&) const = default;
};

// One table row: the smallest N whose theta = 2Np+1 qualifies for p.
struct LegendreRow {
  std::uint64_t p = 0;
  std::uint64_t n_min = 0;
  std::uint64_t theta = 0;
  ResidueSet residues;
};

struct LegendreTable {
  std::vector<LegendreRow> rows;
  // Primes for which no N <= n_max qualifies; reported, never an error.
  std::vector<std::uint64_t> unresolved;
};

// One certificate per N in 1..n_max with 2Np+1 prime and qualifying,
// ascending by N. Requires odd prime p >= 3 and n_max >= 1.
std::vector<AuxiliaryCertificate> find_auxiliaries(std::uint64_t p,
                                                   std::uint64_t n_max);

// The certificate with the smallest N, or nullopt if none qualifies
// within n_max.
std::optional<AuxiliaryCertificate> case1_certificate(std::uint64_t p,
                                                      std::uint64_t n_max);

// One row per odd prime 3 <= p < p_max that acquires an auxiliary within
// n_max; the rest are listed as unresolved.
LegendreTable legendre_table(std::uint64_t p_max, std::uint64_t n_max);

// All p <= limit with p and 2p+1 prime, ascending. Sieve-based.
std::vector<GermainPair> germain_primes(std::uint64_t limit);

bool is_germain_prime(std::uint64_t p);

}  // namespace germain
