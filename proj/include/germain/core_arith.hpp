#pragma once

// Exact integer arithmetic used throughout the toolkit: overflow-checked
// 64-bit helpers, modular exponentiation, deterministic primality, sieving,
// and small-number factorization. Everything here is pure and deterministic;
// no floating point is used anywhere.
//
// All values are fixed-width (uint64_t) with guards that throw on overflow,
// except fermat_number, which returns an unbounded integer.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace germain {

// Checked 64-bit arithmetic. Throws std::overflow_error on wraparound.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

// (a * b) mod m without overflow, for any m that fits in 64 bits.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// Largest integer r with r*r <= n.
std::uint64_t isqrt64(std::uint64_t n);

// Exact square test: a residue filter mod 256 rejects most candidates,
// the rest are confirmed with isqrt64. No floating point.
bool is_perfect_square(std::uint64_t n);

// base^exponent mod modulus. Requires modulus >= 2 (std::invalid_argument
// otherwise). Intermediates are widened to 128 bits, so any 64-bit modulus
// is safe.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus);

// Deterministic Miller-Rabin with a fixed witness set that is proven
// correct for every 64-bit input. No randomness, no error probability.
bool is_prime(std::uint64_t n) noexcept;

// All primes <= limit, ascending. Guarded at 10^8 to bound memory.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

// Complete prime factorization of a 64-bit integer, primes ascending.
struct FactorMultiset {
  std::vector<std::pair<std::uint64_t, unsigned>> factors;

  // Reconstructs the factored input (checked).
  std::uint64_t value() const;
};

// Requires 2 <= n < 2^63. Trial division below 10^6, then Brent's cycle
// variant of Pollard rho for larger cofactors; fully deterministic.
FactorMultiset factorize(std::uint64_t n);

// ((n-1)! mod n) == n-1, with the product accumulated modulo n. Agrees
// with is_prime for every n by Wilson's theorem. The O(n) loop is guarded
// at n <= 10^6 (std::out_of_range beyond).
bool wilson_check(std::uint64_t n);

// 2^(2^k) + 1 as an exact unbounded integer. Requires k <= 7.
mpz_class fermat_number(unsigned k);

}  // namespace germain
