#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "germain/core_arith.hpp"
#include "germain/historical.hpp"

using namespace germain;
using u64 = std::uint64_t;

namespace {

// Double-loop oracle for the form h^2 + n f^2, smallest f first.
std::optional<FormWitness> naive_represent(u64 m, u64 n, bool inclusive) {
  for (u64 f = inclusive ? 0 : 1; n * f * f <= m; ++f) {
    u64 rest = m - n * f * f;
    for (u64 h = inclusive ? 0 : 1; h * h <= rest; ++h)
      if (h * h == rest) return FormWitness{m, n, h, f};
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("reduce_exponent fixtures") {
  CHECK(reduce_exponent(12) == 3);
  CHECK(reduce_exponent(8) == 4);
  CHECK(reduce_exponent(100) == 5);
  CHECK(reduce_exponent(4) == 4);
  CHECK(reduce_exponent(7) == 7);
  CHECK(reduce_exponent(22) == 11);
  CHECK(reduce_exponent(1024) == 4);
  CHECK_THROWS_AS(reduce_exponent(2), std::invalid_argument);
  CHECK_THROWS_AS(reduce_exponent(1), std::invalid_argument);
}

TEST_CASE("reduce_exponent yields 4 or the smallest odd prime factor") {
  for (u64 n = 3; n <= 2000; ++n) {
    u64 r = reduce_exponent(n);
    if (r == 4) {
      CHECK(n % 4 == 0);
      CHECK((n & (n - 1)) == 0);  // power of two
    } else {
      CHECK(r % 2 == 1);
      CHECK(is_prime(r));
      CHECK(n % r == 0);
      for (u64 d = 3; d < r; d += 2) CHECK(n % d != 0);
    }
  }
}

TEST_CASE("flt_search fixtures") {
  CHECK(flt_search(2, 5) == FermatTriple{3, 4, 5, 2});
  CHECK(flt_search(2, 100) == FermatTriple{3, 4, 5, 2});
  CHECK_FALSE(flt_search(3, 100).has_value());
  CHECK_FALSE(flt_search(4, 100).has_value());
  CHECK_FALSE(flt_search(5, 60).has_value());
  CHECK_FALSE(flt_search(2, 2).has_value());
  CHECK_THROWS_AS(flt_search(1, 10), std::invalid_argument);
  CHECK_THROWS_AS(flt_search(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(flt_search(3, 1001), std::invalid_argument);
}

TEST_CASE("flt_search verifies solutions exactly") {
  auto t = flt_search(2, 30);
  REQUIRE(t.has_value());
  CHECK(t->x * t->x + t->y * t->y == t->z * t->z);
  // A large exponent is fine; powers go through unbounded integers.
  CHECK_FALSE(flt_search(20, 40).has_value());
}

TEST_CASE("classify_case fixtures") {
  CHECK(classify_case(1, 2, 3, 5) == FltCase::case1);
  CHECK(classify_case(5, 2, 3, 5) == FltCase::case2);
  CHECK(classify_case(7, 1, 1, 7) == FltCase::case2);
  CHECK_THROWS_AS(classify_case(0, 2, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(classify_case(1, 0, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(classify_case(1, 2, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(classify_case(1, 2, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(classify_case(1, 2, 3, 2), std::invalid_argument);
}

TEST_CASE("classify_case is invariant under permutations") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<u64> pick(1, 500);
  for (u64 p : {3, 5, 7}) {
    for (int i = 0; i < 200; ++i) {
      u64 x = pick(rng), y = pick(rng), z = pick(rng);
      FltCase c = classify_case(x, y, z, p);
      CHECK(classify_case(x, z, y, p) == c);
      CHECK(classify_case(y, x, z, p) == c);
      CHECK(classify_case(z, y, x, p) == c);
    }
  }
}

TEST_CASE("represent fixtures") {
  CHECK(represent(28, 3) == FormWitness{28, 3, 5, 1});
  CHECK_FALSE(represent(5, 3).has_value());
  CHECK(represent(4, 3) == FormWitness{4, 3, 2, 0});
  CHECK(represent(1, 3) == FormWitness{1, 3, 1, 0});
  CHECK_THROWS_AS(represent(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(represent(5, 0), std::invalid_argument);
}

TEST_CASE("represent under the strictly positive convention") {
  CHECK(represent(4, 3, FormConvention::strictly_positive) ==
        FormWitness{4, 3, 1, 1});
  CHECK_FALSE(represent(9, 3, FormConvention::strictly_positive).has_value());
  CHECK(represent(9, 3) == FormWitness{9, 3, 3, 0});
  // 44289025 = 6655^2 needs f = 0, so it drops out under strict positivity.
  CHECK(represent(44289025, 5).has_value());
  CHECK_FALSE(
      represent(44289025, 5, FormConvention::strictly_positive).has_value());
}

TEST_CASE("represent agrees with the double-loop oracle") {
  for (u64 n : {1, 2, 3, 5, 7, 11}) {
    for (u64 m = 1; m <= 500; ++m) {
      for (bool inclusive : {true, false}) {
        auto convention = inclusive ? FormConvention::inclusive
                                    : FormConvention::strictly_positive;
        auto got = represent(m, n, convention);
        auto want = naive_represent(m, n, inclusive);
        REQUIRE(got == want);
      }
    }
  }
}

TEST_CASE("represent is exact at the 64-bit boundary") {
  // m = 2^64 - 1, n = 2^32: the last scanned f is 65535, where n*f^2
  // brushes against the top of the range. No representation exists.
  CHECK_FALSE(represent(~0ULL, 1ULL << 32).has_value());
  // 2^64 - 2^32 = (2^32)^2 - 2^32... not a square; but h = 2^32 - 1,
  // f = 1 gives (2^32-1)^2 + 2^32 = 2^64 - 2^32 + 1.
  auto w = represent(~0ULL - (1ULL << 32) + 2, 1ULL << 32);
  REQUIRE(w.has_value());
  CHECK(w->h == (1ULL << 32) - 1);
  CHECK(w->f == 1);
  CHECK(w->h * w->h + w->n * w->f * w->f == w->m);
}

TEST_CASE("cyclotomic witness fixtures") {
  struct Pin {
    u64 n, x, s;
    const char* value;
    const char* y;
    const char* z;
    FormSign sign;
  };
  // Frozen from an independent exhaustive smallest-Z scan.
  const Pin pins[] = {
      {5, 2, 1, "124", "12", "2", FormSign::minus},
      {3, 2, 1, "28", "5", "1", FormSign::plus},
      {3, 2, 2, "2044", "44", "6", FormSign::plus},
      {7, 2, 1, "508", "16", "6", FormSign::plus},
      {11, 2, 1, "8188", "68", "18", FormSign::plus},
      {13, 2, 1, "32764", "236", "42", FormSign::minus},
      {5, 2, 2, "134217724", "11988", "1378", FormSign::minus},
      {3, 1, 5, "972", "27", "9", FormSign::plus},
      // value is a perfect square: the Z = 0 tie resolves to plus.
      {5, 3, 1, "484", "22", "0", FormSign::plus},
  };
  for (const auto& pin : pins) {
    CAPTURE(pin.n);
    CAPTURE(pin.x);
    CAPTURE(pin.s);
    auto w = cyclotomic_form_witness(pin.n, pin.x, pin.s);
    CHECK(w.value == mpz_class(pin.value));
    CHECK(w.y == mpz_class(pin.y));
    CHECK(w.z == mpz_class(pin.z));
    CHECK(w.sign == pin.sign);
  }
}

TEST_CASE("cyclotomic witnesses satisfy the identity exactly") {
  for (u64 n : {3, 5, 7, 11, 13}) {
    for (u64 x = 1; x <= 4; ++x) {
      auto w = cyclotomic_form_witness(n, x, 1);
      mpz_class lhs = w.y * w.y;
      mpz_class rhs = w.n * w.z * w.z;
      if (w.sign == FormSign::plus)
        CHECK(lhs + rhs == w.value);
      else
        CHECK(lhs - rhs == w.value);
    }
  }
}

TEST_CASE("geometric sum matches the closed form for x >= 2") {
  // The witness search cost grows like sqrt(x^(n^s)), so the sweep keeps
  // the tower small for larger bases; the full n^s = 30 region is only
  // walked at x = 2.
  for (u64 n : {3, 5}) {
    for (u64 x = 2; x <= 6; ++x) {
      for (u64 s = 1; checked_pow(n, s) <= (x == 2 ? 30 : 9); ++s) {
        auto w = cyclotomic_form_witness(n, x, s);
        mpz_class xk;
        mpz_ui_pow_ui(xk.get_mpz_t(), x, checked_pow(n, s));
        // value * (x - 1) == 4 * (x^k - 1), exact
        CHECK(w.value * (mpz_class(x) - 1) == 4 * (xk - 1));
      }
    }
  }
}

TEST_CASE("x = 1 uses the geometric-sum value 4 * n^s") {
  CHECK(cyclotomic_form_witness(3, 1, 1).value == 12);
  CHECK(cyclotomic_form_witness(5, 1, 1).value == 20);
  CHECK(cyclotomic_form_witness(3, 1, 5).value == 972);
}

TEST_CASE("cyclotomic witness validation") {
  CHECK_THROWS_AS(cyclotomic_form_witness(2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(cyclotomic_form_witness(9, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(cyclotomic_form_witness(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(cyclotomic_form_witness(3, 2, 0), std::invalid_argument);
  // n^s = 81 > 30 with x >= 2
  CHECK_THROWS_AS(cyclotomic_form_witness(3, 2, 4), std::out_of_range);
  CHECK_NOTHROW(cyclotomic_form_witness(3, 2, 3));
}

TEST_CASE("claim1807 fixtures") {
  CHECK_FALSE(claim1807_counterexample(3, 1).has_value());
  CHECK_FALSE(claim1807_counterexample(5, 1).has_value());
  CHECK_FALSE(claim1807_counterexample(3, 100).has_value());
  CHECK_FALSE(claim1807_counterexample(5, 21).has_value());
  CHECK(claim1807_counterexample(5, 33) ==
        std::optional<CounterexamplePair>({22, 33}));
  CHECK(claim1807_counterexample(7, 12) ==
        std::optional<CounterexamplePair>({2, 12}));
  CHECK_THROWS_AS(claim1807_counterexample(4, 10), std::invalid_argument);
  CHECK_THROWS_AS(claim1807_counterexample(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(claim1807_counterexample(3, 101), std::invalid_argument);
}

TEST_CASE("claim1807 witnesses self-certify") {
  struct Found {
    u64 n, bound;
  };
  for (const auto& [n, bound] : {Found{5, 33}, Found{7, 12}}) {
    auto pair = claim1807_counterexample(n, bound);
    REQUIRE(pair.has_value());
    u64 power_sum = checked_pow(pair->a, n) + checked_pow(pair->b, n);
    auto rep = represent(power_sum, n);
    REQUIRE(rep.has_value());
    CHECK(rep->h * rep->h + n * rep->f * rep->f == power_sum);
    CHECK_FALSE(represent(pair->a + pair->b, n).has_value());
  }
}

TEST_CASE("claim1807 under the strictly positive convention") {
  // Flipping the convention changes which sums count as represented,
  // so the first witness moves. Frozen from the independent scan.
  auto strict = FormConvention::strictly_positive;
  CHECK(claim1807_counterexample(5, 33, strict) ==
        std::optional<CounterexamplePair>({1, 3}));
  CHECK(claim1807_counterexample(3, 40, strict) ==
        std::optional<CounterexamplePair>({1, 8}));
}

TEST_CASE("claim1807 near the top of the 64-bit range") {
  // 1 + 4^31 = 2^62 + 1 is representable while 5 is not; the pairs before
  // it fail the power-sum test, so (1, 4) is the first witness.
  auto w = claim1807_counterexample(31, 100);
  REQUIRE(w == std::optional<CounterexamplePair>({1, 4}));
  u64 power_sum = 1 + checked_pow(4, 31);
  auto rep = represent(power_sum, 31);
  REQUIRE(rep.has_value());
  CHECK(rep->h == 2101927807);
  CHECK(rep->f == 79023376);
  CHECK(rep->h * rep->h + 31 * rep->f * rep->f == power_sum);
  CHECK_FALSE(represent(5, 31).has_value());
}

TEST_CASE("claim1807 trips the overflow guard on huge powers") {
  // 2^67 overflows at the second pair scanned.
  CHECK_THROWS_AS(claim1807_counterexample(67, 100), std::overflow_error);
}
