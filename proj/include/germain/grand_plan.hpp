#pragma once

// Grid machinery over theta = 2Np+1: the per-exponent non-consecutivity
// survey, the exhaustive p = 3 obstruction scan, and solution-size lower
// bounds derived from products of qualifying auxiliaries.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "germain/residues.hpp"

namespace germain {

// One (p, N) grid cell. For composite theta the per-hypothesis fields are
// absent and the cell never qualifies.
struct SurveyRow {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::uint64_t theta = 0;
  bool theta_prime = false;
  std::optional<bool> nc_holds;     // present iff theta_prime
  std::optional<bool> cond2_holds;  // present iff theta_prime
  bool qualifies = false;
  std::optional<ConsecutiveWitness> witness;
};

// Product of every qualifying auxiliary for p with N <= n_max, and the
// smallest B with B^3 >= product. Since each auxiliary divides one of
// x, y, z in any solution, max(x, y, z) must be at least B.
struct SizeBound {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> auxiliaries;
  mpz_class product = 1;
  mpz_class bound = 1;
};

// Rows for N = 1..n_max, ascending.
std::vector<SurveyRow> nc_survey(std::uint64_t p, std::uint64_t n_max);

// nc_survey for every odd prime 3 <= p < p_max, keyed by p. Rows for
// distinct p may be evaluated on `workers` threads; the output is
// byte-for-byte identical for any worker count.
std::map<std::uint64_t, std::vector<SurveyRow>> full_survey(
    std::uint64_t p_max, std::uint64_t n_max, unsigned workers = 1);

// Scans every prime theta == 1 (mod 6) up to theta_max and returns those
// qualifying for p = 3. Requires theta_max >= 13.
std::vector<std::uint64_t> libri_scan(std::uint64_t theta_max);

// The cube-root ceiling is found by exact integer bisection; no floating
// point is involved.
SizeBound size_lower_bound(std::uint64_t p, std::uint64_t n_max);

}  // namespace germain
