#include "germain/grand_plan.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "germain/core_arith.hpp"

namespace germain {

namespace {

using u64 = std::uint64_t;

SurveyRow survey_cell(u64 p, u64 n) {
  SurveyRow row;
  row.p = p;
  row.n = n;
  row.theta = checked_add(checked_mul(checked_mul(2, n), p), 1);
  row.theta_prime = is_prime(row.theta);
  if (!row.theta_prime) return row;

  ResidueSet rs = pth_residues(p, row.theta);
  NcResult nc = nc_condition(rs);
  row.nc_holds = nc.holds;
  row.witness = nc.witness;
  row.cond2_holds =
      !is_pth_power(static_cast<std::int64_t>(p % row.theta), p, row.theta);
  row.qualifies = nc.holds && *row.cond2_holds;
  return row;
}

}  // namespace

std::vector<SurveyRow> nc_survey(u64 p, u64 n_max) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("nc_survey: p must be an odd prime >= 3");
  if (n_max < 1) throw std::invalid_argument("nc_survey: n_max must be >= 1");
  std::vector<SurveyRow> rows;
  rows.reserve(n_max);
  for (u64 n = 1; n <= n_max; ++n) rows.push_back(survey_cell(p, n));
  return rows;
}

std::map<u64, std::vector<SurveyRow>> full_survey(u64 p_max, u64 n_max,
                                                  unsigned workers) {
  if (p_max < 3) throw std::invalid_argument("full_survey: p_max must be >= 3");
  if (n_max < 1) throw std::invalid_argument("full_survey: n_max must be >= 1");
  if (workers < 1)
    throw std::invalid_argument("full_survey: workers must be >= 1");

  std::vector<u64> primes;
  for (u64 p : sieve_primes(p_max - 1))
    if (p >= 3) primes.push_back(p);

  // Workers pull prime indices from a shared counter and write into
  // per-prime slots, so the merged result is independent of scheduling.
  std::vector<std::vector<SurveyRow>> slots(primes.size());
  if (workers == 1 || primes.size() <= 1) {
    for (std::size_t i = 0; i < primes.size(); ++i)
      slots[i] = nc_survey(primes[i], n_max);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto pull = [&] {
      try {
        for (std::size_t i = next.fetch_add(1); i < primes.size();
             i = next.fetch_add(1)) {
          slots[i] = nc_survey(primes[i], n_max);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    unsigned count = std::min<std::size_t>(workers, primes.size());
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(pull);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::map<u64, std::vector<SurveyRow>> out;
  for (std::size_t i = 0; i < primes.size(); ++i)
    out.emplace(primes[i], std::move(slots[i]));
  return out;
}

std::vector<u64> libri_scan(u64 theta_max) {
  if (theta_max < 13)
    throw std::invalid_argument("libri_scan: theta_max must be >= 13");
  std::vector<u64> out;
  for (u64 theta = 7; theta <= theta_max; theta += 6) {
    if (is_prime(theta) && qualifies(3, theta)) out.push_back(theta);
  }
  return out;
}

SizeBound size_lower_bound(u64 p, u64 n_max) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("size_lower_bound: p must be an odd prime");

  SizeBound sb;
  sb.p = p;
  for (u64 n = 1; n <= n_max; ++n) {
    u64 theta = checked_add(checked_mul(checked_mul(2, n), p), 1);
    if (is_prime(theta) && qualifies(p, theta)) {
      sb.auxiliaries.push_back(theta);
      sb.product *= theta;
    }
  }

  // Smallest B with B^3 >= product, by bisection on exact integers.
  mpz_class lo = 0, hi = 1;
  while (hi * hi * hi < sb.product) hi *= 2;
  while (lo + 1 < hi) {
    mpz_class mid = (lo + hi) / 2;
    if (mid * mid * mid >= sb.product)
      hi = mid;
    else
      lo = mid;
  }
  sb.bound = hi;
  return sb;
}

}  // namespace germain
