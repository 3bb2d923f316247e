#pragma once

// Bounded verification of the remaining arithmetic claims: exponent
// reduction, exhaustive Fermat-equation search, Case 1/2 classification,
// quadratic-form representation h^2 + n f^2, the cyclotomic form identity
// 4(x^(n^s)-1)/(x-1) = Y^2 +/- nZ^2, and the search for a pair refuting
// the 1807 power-sum claim.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include <gmpxx.h>

namespace germain {

// Thrown when a bounded witness search exhausts its region. Reported to
// the caller rather than returned as a silent absence.
struct NotFoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FermatTriple {
  std::uint64_t x = 0, y = 0, z = 0;
  std::uint64_t n = 0;

  bool operator==(const FermatTriple&) const = default;
};

enum class FltCase { case1, case2 };

// Integers h, f >= 0 with h^2 + n*f^2 = m.
struct FormWitness {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t h = 0;
  std::uint64_t f = 0;

  bool operator==(const FormWitness&) const = default;
};

// Whether h = 0 / f = 0 count as a representation. The historical intent
// is unclear, so both conventions are available; inclusive is the default.
enum class FormConvention { inclusive, strictly_positive };

enum class FormSign { plus, minus };

struct CyclotomicWitness {
  std::uint64_t n = 0;
  std::uint64_t x = 0;
  std::uint64_t s = 0;
  mpz_class value;  // 4 * (1 + x + ... + x^(n^s - 1))
  mpz_class y;
  mpz_class z;
  FormSign sign = FormSign::plus;
};

struct CounterexamplePair {
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  bool operator==(const CounterexamplePair&) const = default;
};

// Smallest odd prime dividing n, or 4 when n is a power of two. n > 2.
std::uint64_t reduce_exponent(std::uint64_t n);

// Exhaustive scan of x <= y <= bound for x^n + y^n = z^n, with z recovered
// by exact integer root extraction. Returns the lexicographically first
// solution. Requires n >= 2 and bound <= 1000.
std::optional<FermatTriple> flt_search(std::uint64_t n, std::uint64_t bound);

// case1 iff p does not divide x*y*z. p must be an odd prime and the
// components nonzero.
FltCase classify_case(std::uint64_t x, std::uint64_t y, std::uint64_t z,
                      std::uint64_t p);

// Smallest-f witness, scanning f upward with exact square testing of
// m - n*f^2. Requires m >= 1 and n >= 1.
std::optional<FormWitness> represent(
    std::uint64_t m, std::uint64_t n,
    FormConvention convention = FormConvention::inclusive);

// Smallest-Z witness for value = Y^2 +/- n Z^2, both signs attempted at
// each Z (plus first). n must be an odd prime, x >= 1, s >= 1, and
// n^s <= 30 when x >= 2. Throws NotFoundError if the search region
// Z <= sqrt(value) + 1 is exhausted.
CyclotomicWitness cyclotomic_form_witness(std::uint64_t n, std::uint64_t x,
                                          std::uint64_t s);

// First pair 1 <= a <= b <= bound (lexicographic) whose power sum
// a^n + b^n is representable while a + b is not. n must be an odd prime
// and bound <= 100; power sums are computed in checked 64-bit arithmetic.
std::optional<CounterexamplePair> claim1807_counterexample(
    std::uint64_t n, std::uint64_t bound,
    FormConvention convention = FormConvention::inclusive);

}  // namespace germain
