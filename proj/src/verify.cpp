#include "germain/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "germain/cli.hpp"
#include "germain/core_arith.hpp"
#include "germain/grand_plan.hpp"
#include "germain/historical.hpp"
#include "germain/residues.hpp"
#include "germain/theorem.hpp"

namespace germain {

namespace {

using u64 = std::uint64_t;

// Collects failure messages; a criterion passes when none accumulate.
class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond) failures_.push_back(what);
  }

  template <typename T, typename U>
  void expect_eq(const T& got, const U& want, const std::string& what) {
    if (!(got == static_cast<T>(want))) {
      std::ostringstream os;
      os << what << " (got " << got << ", want " << want << ")";
      failures_.push_back(os.str());
    }
  }

  bool ok() const { return failures_.empty(); }

  std::string detail() const {
    std::string out;
    for (std::size_t i = 0; i < failures_.size(); ++i) {
      if (i) out += "; ";
      out += failures_[i];
    }
    return out;
  }

 private:
  std::vector<std::string> failures_;
};

// Smallest qualifying N (and its theta) per odd prime p < 100, frozen from
// an independent enumeration. The largest minimum is N = 8 at p = 61, so
// a search ceiling of 50 has ample slack.
struct MinimalAux {
  u64 p, n_min, theta;
};
constexpr MinimalAux kMinimalAuxTable[] = {
    {3, 1, 7},    {5, 1, 11},   {7, 2, 29},   {11, 1, 23},  {13, 2, 53},
    {17, 4, 137}, {19, 5, 191}, {23, 1, 47},  {29, 1, 59},  {31, 5, 311},
    {37, 2, 149}, {41, 1, 83},  {43, 2, 173}, {47, 7, 659}, {53, 1, 107},
    {59, 7, 827}, {61, 8, 977}, {67, 2, 269}, {71, 4, 569}, {73, 2, 293},
    {79, 2, 317}, {83, 1, 167}, {89, 1, 179}, {97, 2, 389},
};

void check_residue_fixture(Checker& c) {
  ResidueSet rs = pth_residues(3, 13);
  c.expect(rs.residues == std::vector<u64>{1, 5, 8, 12},
           "cubic residues mod 13 must be {1, 5, 8, 12}");
  c.expect(nc_condition(rs).holds, "no consecutive pair among {1, 5, 8, 12}");
  c.expect(!is_pth_power(3, 3, 13), "3 must not be a cubic residue mod 13");
}

void check_auxiliaries_p5(Checker& c) {
  auto certs = find_auxiliaries(5, 10);
  std::vector<u64> thetas;
  for (const auto& cert : certs) thetas.push_back(cert.theta);
  c.expect(thetas == std::vector<u64>{11, 41, 71, 101},
           "auxiliaries for p=5, N<=10 must be 11, 41, 71, 101");
  for (const auto& cert : certs)
    c.expect(cert.validate(), "certificate must revalidate");
}

void check_libri(Checker& c) {
  auto qualifying = libri_scan(100'000);
  c.expect(qualifying == std::vector<u64>{7, 13},
           "only 7 and 13 qualify for p=3 below 10^5");
}

void check_legendre_coverage(Checker& c) {
  LegendreTable table = legendre_table(100, 50);
  c.expect(table.unresolved.empty(), "every odd prime below 100 must resolve");
  c.expect_eq(table.rows.size(), std::size(kMinimalAuxTable),
              "row count for p < 100");
  u64 needed = 0;
  for (std::size_t i = 0;
       i < table.rows.size() && i < std::size(kMinimalAuxTable); ++i) {
    const auto& row = table.rows[i];
    const auto& pin = kMinimalAuxTable[i];
    c.expect(row.p == pin.p && row.n_min == pin.n_min && row.theta == pin.theta,
             "pinned minimal auxiliary for p=" + std::to_string(pin.p));
    needed = std::max(needed, row.n_min);
  }
  c.expect_eq(needed, 8, "largest minimal N over p < 100");
}

void check_germain_primes(Checker& c) {
  std::vector<u64> small;
  for (const auto& g : germain_primes(25)) small.push_back(g.p);
  c.expect(small == std::vector<u64>{2, 3, 5, 11, 23},
           "Germain primes up to 25 must be 2, 3, 5, 11, 23");

  auto pairs = germain_primes(1'000'000);
  std::vector<u64> ps;
  ps.reserve(pairs.size());
  for (const auto& g : pairs) ps.push_back(g.p);

  std::mt19937_64 rng(0x5347u);  // fixed seed: deterministic sampling
  std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
  std::uniform_int_distribution<u64> any(2, 1'000'000);
  for (int i = 0; i < 100; ++i) {
    u64 member = ps[pick(rng)];
    c.expect(is_germain_prime(member),
             "sieved value must pass the direct test: " + std::to_string(member));
    u64 probe = any(rng);
    bool in_sieve = std::binary_search(ps.begin(), ps.end(), probe);
    c.expect(in_sieve == is_germain_prime(probe),
             "sieve and direct test must agree at " + std::to_string(probe));
  }
}

void check_safe_prime_property(Checker& c) {
  for (const auto& g : germain_primes(1000)) {
    if (g.p < 3) continue;
    c.expect(qualifies(g.p, g.safe),
             "2p+1 must qualify for p=" + std::to_string(g.p));
    ResidueSet rs = pth_residues(g.p, g.safe);
    c.expect(rs.residues == std::vector<u64>{1, 2 * g.p},
             "residues mod 2p+1 must be {1, 2p} for p=" + std::to_string(g.p));
  }
}

void check_grid_multiples_of_three(Checker& c) {
  auto grid = full_survey(100, 10, 1);
  c.expect_eq(grid.size(), 24u, "odd primes below 100");
  for (const auto& [p, rows] : grid) {
    c.expect_eq(rows.size(), 10u, "rows for p=" + std::to_string(p));
    for (const auto& row : rows) {
      if (row.n % 3 == 0)
        c.expect(!row.qualifies, "N divisible by 3 must not qualify (p=" +
                                     std::to_string(p) +
                                     ", N=" + std::to_string(row.n) + ")");
    }
  }
}

void check_euler_fixtures(Checker& c) {
  c.expect_eq(mod_pow(2, 32, 641), 640, "2^32 mod 641");
  FactorMultiset fm = factorize(4294967297ULL);
  c.expect(fm.factors ==
               std::vector<std::pair<u64, unsigned>>{{641, 1}, {6700417, 1}},
           "factorization of 2^32 + 1");
  c.expect_eq(fm.value(), 4294967297ULL, "factorization reconstructs");
  for (unsigned k = 0; k <= 4; ++k)
    c.expect(is_prime(fermat_number(k).get_ui()),
             "2^(2^" + std::to_string(k) + ")+1 must be prime");
  c.expect(!is_prime(fermat_number(5).get_ui()),
           "2^(2^5)+1 must be composite");
}

void check_wilson(Checker& c) {
  for (u64 m = 2; m <= 10'000; ++m) {
    if (wilson_check(m) != is_prime(m)) {
      c.expect(false, "factorial criterion diverges at " + std::to_string(m));
      return;
    }
  }
}

void check_flt_vacuity(Checker& c) {
  for (u64 n : {3, 4, 5}) {
    c.expect(!flt_search(n, 200).has_value(),
             "no solution expected for exponent " + std::to_string(n));
  }
}

void check_size_bound(Checker& c) {
  SizeBound sb = size_lower_bound(5, 10);
  c.expect(sb.auxiliaries == std::vector<u64>{11, 41, 71, 101},
           "auxiliaries for p=5, N<=10");
  c.expect(sb.product == 3234121, "product 11*41*71*101");
  c.expect(sb.bound == 148, "cube-root ceiling of 3234121");
  mpz_class lower = (sb.bound - 1) * (sb.bound - 1) * (sb.bound - 1);
  c.expect(lower < sb.product && sb.product <= sb.bound * sb.bound * sb.bound,
           "(bound-1)^3 < product <= bound^3");
}

struct CyclotomicPin {
  u64 n, x, s;
  const char* value;
  const char* y;
  const char* z;
  FormSign sign;
};

void check_cyclotomic(Checker& c) {
  // Smallest-Z witnesses, frozen from an independent exhaustive scan.
  const CyclotomicPin pins[] = {
      {5, 2, 1, "124", "12", "2", FormSign::minus},
      {3, 2, 1, "28", "5", "1", FormSign::plus},
      {3, 2, 2, "2044", "44", "6", FormSign::plus},
  };
  for (const auto& pin : pins) {
    CyclotomicWitness w = cyclotomic_form_witness(pin.n, pin.x, pin.s);
    std::string tag = "(" + std::to_string(pin.n) + "," + std::to_string(pin.x) +
                      "," + std::to_string(pin.s) + ")";
    c.expect(w.value == mpz_class(pin.value), "value for " + tag);
    c.expect(w.y == mpz_class(pin.y) && w.z == mpz_class(pin.z) &&
                 w.sign == pin.sign,
             "smallest-Z witness for " + tag);
    // Revalidate the identity exactly from the returned fields.
    mpz_class square_term = w.y * w.y;
    mpz_class form_term = w.n * w.z * w.z;
    mpz_class recomposed =
        w.sign == FormSign::plus ? mpz_class(square_term + form_term)
                                 : mpz_class(square_term - form_term);
    c.expect(recomposed == w.value, "identity must recompose for " + tag);
    // Cross-check the geometric sum against 4(x^k - 1)/(x - 1).
    mpz_class xk;
    mpz_ui_pow_ui(xk.get_mpz_t(), pin.x, checked_pow(pin.n, pin.s));
    c.expect(w.value * (mpz_class(pin.x) - 1) == 4 * (xk - 1),
             "closed form must agree for " + tag);
  }
}

std::optional<std::pair<u64, u64>> brute_force_form_witness(u64 m, u64 n) {
  for (u64 f = 0; n * f * f <= m; ++f) {
    u64 rest = m - n * f * f;
    for (u64 h = 0; h * h <= rest; ++h)
      if (h * h == rest) return std::make_pair(h, f);
  }
  return std::nullopt;
}

void check_claim1807(Checker& c) {
  // Discovered first counterexamples (pinned): none for n=3 within the
  // full CLI range, (22, 33) for n=5, (2, 12) for n=7.
  c.expect(!claim1807_counterexample(3, 100).has_value(),
           "no counterexample for n=3 with a, b <= 100");
  auto w5 = claim1807_counterexample(5, 33);
  c.expect(w5 == std::optional<CounterexamplePair>({22, 33}),
           "first counterexample for n=5");
  auto w7 = claim1807_counterexample(7, 12);
  c.expect(w7 == std::optional<CounterexamplePair>({2, 12}),
           "first counterexample for n=7");

  // Self-certification: both representation facts hold for each witness.
  for (const auto& [pair, n] :
       {std::make_pair(w5, u64{5}), std::make_pair(w7, u64{7})}) {
    if (!pair) continue;
    u64 power_sum = checked_add(checked_pow(pair->a, n), checked_pow(pair->b, n));
    auto rep = represent(power_sum, n);
    c.expect(rep.has_value(), "power sum must be representable");
    if (rep)
      c.expect(rep->h * rep->h + n * rep->f * rep->f == power_sum,
               "power-sum witness must reconstruct");
    c.expect(!represent(pair->a + pair->b, n).has_value(),
             "a + b must not be representable");
  }

  // represent agrees with the brute-force double loop.
  for (u64 n : {3, 5, 7, 11}) {
    for (u64 m = 1; m <= 500; ++m) {
      auto got = represent(m, n);
      auto want = brute_force_form_witness(m, n);
      bool same = got.has_value() == want.has_value() &&
                  (!got || (got->h == want->first && got->f == want->second));
      if (!same) {
        c.expect(false, "represent mismatch at m=" + std::to_string(m) +
                            ", n=" + std::to_string(n));
        return;
      }
    }
  }
}

void check_worker_determinism(Checker& c) {
  auto capture = [](const char* workers) {
    std::ostringstream out, err;
    int code = cli::run({"full-survey", "--p-max", "100", "--n-max", "10",
                         "--workers", workers},
                        out, err);
    return std::make_pair(code, out.str());
  };
  auto [code1, out1] = capture("1");
  auto [code4, out4] = capture("4");
  c.expect(code1 == 0 && code4 == 0, "full-survey must exit 0");
  c.expect(out1 == out4, "worker counts 1 and 4 must emit identical bytes");
  c.expect(!out1.empty(), "survey output must be nonempty");
}

struct Criterion {
  int id;
  const char* name;
  double budget_ms;
  void (*fn)(Checker&);
};

const Criterion kCriteria[] = {
    {1, "cubic residues mod 13 satisfy both hypotheses", 1, check_residue_fixture},
    {2, "auxiliaries for p=5 within N<=10 are 11, 41, 71, 101", 10, check_auxiliaries_p5},
    {3, "only 7 and 13 qualify for p=3 up to 10^5", 5000, check_libri},
    {4, "every odd p<100 resolves within N<=50, minima pinned", 5000, check_legendre_coverage},
    {5, "Germain primes: small list and 10^6 sieve/filter agreement", 5000, check_germain_primes},
    {6, "safe-prime auxiliaries qualify with residues {1, 2p} up to 1000", 2000, check_safe_prime_property},
    {7, "no qualifying cell with N divisible by 3 (p<100, N<=10)", 5000, check_grid_multiples_of_three},
    {8, "2^32 = -1 mod 641, F5 factors, F0..F4 prime and F5 composite", 1000, check_euler_fixtures},
    {9, "factorial criterion matches primality up to 10^4", 2000, check_wilson},
    {10, "no x^n + y^n = z^n with x, y <= 200 for n in {3, 4, 5}", 3000, check_flt_vacuity},
    {11, "size bound for p=5: product 3234121, ceiling 148", 1, check_size_bound},
    {12, "cyclotomic form witnesses revalidate exactly", 100, check_cyclotomic},
    {13, "power-sum counterexamples self-certify; represent matches brute force", 2000, check_claim1807},
    {14, "full survey identical for 1 and 4 workers", 10000, check_worker_determinism},
};

}  // namespace

std::vector<CriterionResult> run_paper_checks() {
  std::vector<CriterionResult> results;
  for (const auto& crit : kCriteria) {
    CriterionResult r;
    r.id = crit.id;
    r.name = crit.name;
    r.budget_ms = crit.budget_ms;

    Checker checker;
    auto start = std::chrono::steady_clock::now();
    try {
      crit.fn(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    auto stop = std::chrono::steady_clock::now();
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();

    r.passed = checker.ok() && r.elapsed_ms <= r.budget_ms;
    r.detail = checker.detail();
    if (checker.ok() && !r.passed) r.detail = "budget exceeded";
    results.push_back(std::move(r));
  }
  return results;
}

std::string render_check_report(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& r : results) {
    os << (r.passed ? "ok  " : "FAIL") << "  " << (r.id < 10 ? " " : "")
       << r.id << "  " << r.name;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << "  (" << r.elapsed_ms << " ms, budget " << r.budget_ms << " ms)\n";
    if (!r.passed && !r.detail.empty()) os << "      " << r.detail << "\n";
    if (r.passed) ++passed;
  }
  os << passed << "/" << results.size() << " criteria passed\n";
  return os.str();
}

}  // namespace germain
