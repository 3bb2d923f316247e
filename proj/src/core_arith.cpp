#include "germain/core_arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace germain {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialDivisionLimit = 1'000'000;
constexpr u64 kSieveLimit = 100'000'000;
constexpr u64 kWilsonLimit = 1'000'000;

}  // namespace

u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("checked_add: 64-bit overflow");
  return r;
}

u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("checked_mul: 64-bit overflow");
  return r;
}

u64 checked_pow(u64 base, u64 exp) {
  u64 result = 1;
  while (exp > 0) {
    if (exp & 1) result = checked_mul(result, base);
    exp >>= 1;
    if (exp > 0) base = checked_mul(base, base);
  }
  return result;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((u128)a * b % m);
}

u64 isqrt64(u64 n) {
  if (n == 0) return 0;
  // Integer Newton iteration seeded one bit above sqrt(n); stays exact.
  int bits = 64 - __builtin_clzll(n);
  u64 x = 1ULL << ((bits + 1) / 2);
  u64 y = (x + n / x) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

bool is_perfect_square(u64 n) {
  static const std::array<bool, 256> square_mod_256 = [] {
    std::array<bool, 256> t{};
    for (unsigned i = 0; i < 256; ++i) t[i * i % 256] = true;
    return t;
  }();
  if (!square_mod_256[n & 255]) return false;
  u64 r = isqrt64(n);
  return r * r == n;
}

u64 mod_pow(u64 base, u64 exponent, u64 modulus) {
  if (modulus < 2)
    throw std::invalid_argument("mod_pow: modulus must be >= 2");
  u64 result = 1 % modulus;
  base %= modulus;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;

  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all n < 3.3 * 10^24, which covers
  // the full 64-bit range.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<u64> sieve_primes(u64 limit) {
  if (limit > kSieveLimit)
    throw std::out_of_range("sieve_primes: limit exceeds 10^8 guard");
  std::vector<u64> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  for (u64 i = 2; i <= limit; ++i)
    if (!composite[i]) primes.push_back(i);
  return primes;
}

u64 FactorMultiset::value() const {
  u64 v = 1;
  for (const auto& [p, e] : factors)
    for (unsigned i = 0; i < e; ++i) v = checked_mul(v, p);
  return v;
}

namespace {

// Brent's variant of Pollard rho. Returns a nontrivial factor of n, which
// must be odd, composite, and free of factors <= kTrialDivisionLimit. The
// parameters are stepped deterministically until a split is found.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 q = 1;
    const unsigned step = 128;
    u64 ys = y;
    for (u64 r = 1; d == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mul_mod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && d == 1; k += step) {
        ys = y;
        u64 count = std::min<u64>(step, r - k);
        for (u64 i = 0; i < count; ++i) {
          y = (mul_mod(y, y, n) + c) % n;
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
    }
    if (d == n) {
      // Backtrack one step at a time to recover the factor.
      d = 1;
      while (d == 1) {
        ys = (mul_mod(ys, ys, n) + c) % n;
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (d != n) return d;
  }
}

void factor_recursive(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_recursive(d, out);
  factor_recursive(n / d, out);
}

}  // namespace

FactorMultiset factorize(u64 n) {
  if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
  if (n >= (1ULL << 63))
    throw std::out_of_range("factorize: n must be < 2^63");

  std::vector<u64> primes;
  while ((n & 1) == 0) {
    primes.push_back(2);
    n >>= 1;
  }
  for (u64 d = 3; d <= kTrialDivisionLimit && d * d <= n; d += 2) {
    while (n % d == 0) {
      primes.push_back(d);
      n /= d;
    }
  }
  if (n > 1) factor_recursive(n, primes);

  std::sort(primes.begin(), primes.end());
  FactorMultiset result;
  for (u64 p : primes) {
    if (!result.factors.empty() && result.factors.back().first == p)
      ++result.factors.back().second;
    else
      result.factors.emplace_back(p, 1);
  }
  return result;
}

bool wilson_check(u64 n) {
  if (n < 2) throw std::invalid_argument("wilson_check: n must be >= 2");
  if (n > kWilsonLimit)
    throw std::out_of_range("wilson_check: n exceeds 10^6 guard");
  u64 acc = 1 % n;
  for (u64 i = 2; i < n; ++i) acc = mul_mod(acc, i, n);
  return acc == n - 1;
}

mpz_class fermat_number(unsigned k) {
  if (k > 7) throw std::out_of_range("fermat_number: k must be <= 7");
  mpz_class f = 1;
  f <<= (1u << k);
  return f + 1;
}

}  // namespace germain
