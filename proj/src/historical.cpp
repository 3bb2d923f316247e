#include "germain/historical.hpp"

#include "germain/core_arith.hpp"

namespace germain {

namespace {

using u64 = std::uint64_t;

}  // namespace

u64 reduce_exponent(u64 n) {
  if (n <= 2) throw std::invalid_argument("reduce_exponent: n must be > 2");
  u64 m = n;
  while ((m & 1) == 0) m >>= 1;
  if (m == 1) return 4;  // pure power of two
  for (u64 d = 3; d <= m / d; d += 2) {
    if (m % d == 0) return d;
  }
  return m;  // m is an odd prime
}

std::optional<FermatTriple> flt_search(u64 n, u64 bound) {
  if (n < 2) throw std::invalid_argument("flt_search: n must be >= 2");
  if (bound < 1 || bound > 1000)
    throw std::invalid_argument("flt_search: bound must be in 1..1000");

  mpz_class sum, root;
  for (u64 x = 1; x <= bound; ++x) {
    mpz_class xn;
    mpz_ui_pow_ui(xn.get_mpz_t(), x, n);
    for (u64 y = x; y <= bound; ++y) {
      mpz_ui_pow_ui(sum.get_mpz_t(), y, n);
      sum += xn;
      if (mpz_root(root.get_mpz_t(), sum.get_mpz_t(), n) != 0) {
        return FermatTriple{x, y, root.get_ui(), n};
      }
    }
  }
  return std::nullopt;
}

FltCase classify_case(u64 x, u64 y, u64 z, u64 p) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("classify_case: p must be an odd prime");
  if (x == 0 || y == 0 || z == 0)
    throw std::invalid_argument("classify_case: components must be nonzero");
  // p prime, so p | xyz iff p divides one of the components.
  bool divides = (x % p == 0) || (y % p == 0) || (z % p == 0);
  return divides ? FltCase::case2 : FltCase::case1;
}

std::optional<FormWitness> represent(u64 m, u64 n, FormConvention convention) {
  if (m < 1) throw std::invalid_argument("represent: m must be >= 1");
  if (n < 1) throw std::invalid_argument("represent: n must be >= 1");

  bool inclusive = convention == FormConvention::inclusive;
  // f <= isqrt(m/n) is exactly the range with n*f^2 <= m, so the products
  // below cannot overflow.
  u64 f_max = isqrt64(m / n);
  for (u64 f = inclusive ? 0 : 1; f <= f_max; ++f) {
    u64 rest = m - n * (f * f);
    if (is_perfect_square(rest)) {
      u64 h = isqrt64(rest);
      if (inclusive || h >= 1) return FormWitness{m, n, h, f};
    }
  }
  return std::nullopt;
}

CyclotomicWitness cyclotomic_form_witness(u64 n, u64 x, u64 s) {
  if (n < 3 || !is_prime(n))
    throw std::invalid_argument("cyclotomic_form_witness: n must be an odd prime");
  if (x < 1) throw std::invalid_argument("cyclotomic_form_witness: x must be >= 1");
  if (s < 1) throw std::invalid_argument("cyclotomic_form_witness: s must be >= 1");

  u64 k = checked_pow(n, s);
  if (x >= 2 && k > 30)
    throw std::out_of_range("cyclotomic_form_witness: n^s exceeds 30 for x >= 2");

  // Geometric sum 1 + x + ... + x^(k-1); equal to k when x = 1.
  CyclotomicWitness w;
  w.n = n;
  w.x = x;
  w.s = s;
  mpz_class sum = 0;
  if (x == 1) {
    sum = mpz_class{static_cast<unsigned long>(k)};
  } else {
    mpz_class term = 1;
    for (u64 i = 0; i < k; ++i) {
      sum += term;
      term *= static_cast<unsigned long>(x);
    }
  }
  w.value = 4 * sum;

  mpz_class zmax = sqrt(w.value) + 1;
  mpz_class nz2, candidate;
  for (mpz_class z = 0; z <= zmax; ++z) {
    nz2 = n * z * z;
    if (nz2 <= w.value) {
      candidate = w.value - nz2;
      if (mpz_perfect_square_p(candidate.get_mpz_t())) {
        w.y = sqrt(candidate);
        w.z = z;
        w.sign = FormSign::plus;
        return w;
      }
    }
    candidate = w.value + nz2;
    if (mpz_perfect_square_p(candidate.get_mpz_t())) {
      w.y = sqrt(candidate);
      w.z = z;
      w.sign = FormSign::minus;
      return w;
    }
  }
  throw NotFoundError("cyclotomic_form_witness: no witness with Z <= sqrt(value)+1");
}

std::optional<CounterexamplePair> claim1807_counterexample(
    u64 n, u64 bound, FormConvention convention) {
  if (n < 3 || !is_prime(n))
    throw std::invalid_argument("claim1807_counterexample: n must be an odd prime");
  if (bound < 1 || bound > 100)
    throw std::invalid_argument("claim1807_counterexample: bound must be in 1..100");

  for (u64 a = 1; a <= bound; ++a) {
    u64 an = checked_pow(a, n);
    for (u64 b = a; b <= bound; ++b) {
      u64 power_sum = checked_add(an, checked_pow(b, n));
      if (represent(power_sum, n, convention) &&
          !represent(a + b, n, convention)) {
        return CounterexamplePair{a, b};
      }
    }
  }
  return std::nullopt;
}

}  // namespace germain
