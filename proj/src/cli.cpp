#include "germain/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "germain/core_arith.hpp"
#include "germain/grand_plan.hpp"
#include "germain/historical.hpp"
#include "germain/residues.hpp"
#include "germain/theorem.hpp"
#include "germain/verify.hpp"

namespace germain::cli {

namespace {

using njson = nlohmann::json;  // default object type keeps keys sorted
using u64 = std::uint64_t;

// All JSON goes through one serializer so that parse + re-dump is
// byte-identical (nlohmann's default object keeps keys sorted).
std::string dump_json(const njson& j) { return j.dump(2) + "\n"; }

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string holds_str(bool b) { return b ? "holds" : "fails"; }

std::string join(const std::vector<u64>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

// Fixed-width text table: columns padded to the widest cell, two spaces
// between columns, no trailing padding on the last column.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());

  std::string out;
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size())
        out += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += '\n';
  };
  emit_row(header);
  for (const auto& row : rows) emit_row(row);
  return out;
}

std::string render_csv(const std::string& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::string out = header + "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += row[c];
    }
    out += '\n';
  }
  return out;
}

enum class Format { text, json, csv };

// The second hypothesis, stated positively: p is not a p-th power mod
// theta. Vacuously true when theta == p (p reduces to zero).
bool cond2_holds(u64 p, u64 theta) {
  if (p % theta == 0) return true;
  return !is_pth_power(static_cast<std::int64_t>(p % theta), p, theta);
}

njson survey_row_json(const SurveyRow& r) {
  njson j;
  j["p"] = r.p;
  j["n"] = r.n;
  j["theta"] = r.theta;
  j["theta_prime"] = r.theta_prime;
  j["qualifies"] = r.qualifies;
  if (r.nc_holds) j["nc_holds"] = *r.nc_holds;
  if (r.cond2_holds) j["cond2_holds"] = *r.cond2_holds;
  if (r.witness) j["witness"] = njson{{"lower", r.witness->lower}};
  return j;
}

std::vector<std::string> survey_row_cells(const SurveyRow& r, bool csv) {
  const std::string absent = csv ? "" : "-";
  return {std::to_string(r.p),
          std::to_string(r.n),
          std::to_string(r.theta),
          bool_str(r.theta_prime),
          r.nc_holds ? bool_str(*r.nc_holds) : absent,
          r.cond2_holds ? bool_str(*r.cond2_holds) : absent,
          bool_str(r.qualifies),
          r.witness ? std::to_string(r.witness->lower) : absent};
}

const char* kSurveyCsvHeader = "p,N,theta,theta_prime,nc_holds,cond2_holds,qualifies,witness";

const std::vector<std::string> kSurveyTextHeader = {
    "p", "N", "theta", "theta_prime", "nc_holds", "cond2_holds", "qualifies",
    "witness"};

njson certificate_json(const AuxiliaryCertificate& c) {
  njson j;
  j["p"] = c.p;
  j["n"] = c.n;
  j["theta"] = c.theta;
  j["residues"] = c.residues.residues;
  j["nc_holds"] = c.nc_holds;
  j["p_is_pth_power"] = c.p_is_pth_power;
  j["conclusion"] = std::string(AuxiliaryCertificate::conclusion);
  return j;
}

// ----- subcommand handlers; each returns the full output text -----

std::string cmd_residues(u64 p, u64 theta, Format fmt) {
  ResidueSet rs = pth_residues(p, theta);
  NcResult nc = nc_condition(rs);
  bool c2 = cond2_holds(p, theta);

  if (fmt == Format::json) {
    njson j;
    j["p"] = p;
    j["theta"] = theta;
    j["residues"] = rs.residues;
    j["nc_holds"] = nc.holds;
    j["cond2_holds"] = c2;
    if (nc.witness) j["witness"] = njson{{"lower", nc.witness->lower}};
    return dump_json(j);
  }
  std::ostringstream os;
  os << "p:        " << p << "\n"
     << "theta:    " << theta << "\n"
     << "count:    " << rs.residues.size() << "\n"
     << "residues: " << join(rs.residues) << "\n"
     << "nc:       " << holds_str(nc.holds);
  if (nc.witness)
    os << " (consecutive pair " << nc.witness->lower << ", "
       << nc.witness->lower + 1 << ")";
  os << "\n"
     << "cond2:    " << holds_str(c2) << "\n";
  return os.str();
}

std::string cmd_qualify(u64 p, u64 theta, Format fmt) {
  ResidueSet rs = pth_residues(p, theta);
  NcResult nc = nc_condition(rs);
  bool c2 = cond2_holds(p, theta);
  bool q = qualifies(p, theta);

  if (fmt == Format::json) {
    njson j;
    j["p"] = p;
    j["theta"] = theta;
    j["nc_holds"] = nc.holds;
    j["cond2_holds"] = c2;
    j["qualifies"] = q;
    return dump_json(j);
  }
  std::ostringstream os;
  os << "p:         " << p << "\n"
     << "theta:     " << theta << "\n"
     << "nc:        " << holds_str(nc.holds) << "\n"
     << "cond2:     " << holds_str(c2) << "\n"
     << "qualifies: " << (q ? "yes" : "no") << "\n";
  return os.str();
}

std::string cmd_aux(u64 p, u64 n_max, Format fmt) {
  auto certs = find_auxiliaries(p, n_max);

  if (fmt == Format::json) {
    njson arr = njson::array();
    for (const auto& c : certs) arr.push_back(certificate_json(c));
    return dump_json(arr);
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : certs)
    rows.push_back({std::to_string(c.n), std::to_string(c.theta),
                    join(c.residues.residues)});
  std::string out = render_table({"N", "theta", "residues"}, rows);
  out += std::to_string(certs.size()) + " qualifying auxiliaries for p=" +
         std::to_string(p) + "; conclusion: " +
         std::string(AuxiliaryCertificate::conclusion) + "\n";
  return out;
}

std::string cmd_table(u64 p_max, u64 n_max, Format fmt, std::ostream& err) {
  LegendreTable table = legendre_table(p_max, n_max);

  if (fmt == Format::json) {
    njson j;
    njson rows = njson::array();
    for (const auto& r : table.rows) {
      njson row;
      row["p"] = r.p;
      row["n_min"] = r.n_min;
      row["theta"] = r.theta;
      row["residues"] = r.residues.residues;
      rows.push_back(row);
    }
    j["rows"] = rows;
    j["unresolved"] = table.unresolved;
    return dump_json(j);
  }

  std::vector<std::vector<std::string>> rows;
  for (const auto& r : table.rows)
    rows.push_back({std::to_string(r.p), std::to_string(r.n_min),
                    std::to_string(r.theta), join(r.residues.residues)});
  if (fmt == Format::csv) {
    if (!table.unresolved.empty())
      err << "unresolved primes (no auxiliary within n_max): "
          << join(table.unresolved) << "\n";
    return render_csv("p,n_min,theta,residues", rows);
  }
  std::string out = render_table({"p", "N", "theta", "residues"}, rows);
  out += "unresolved: " +
         (table.unresolved.empty() ? std::string("none")
                                   : join(table.unresolved)) +
         "\n";
  return out;
}

std::string cmd_survey(u64 p, u64 n_max, Format fmt) {
  auto rows = nc_survey(p, n_max);

  if (fmt == Format::json) {
    njson arr = njson::array();
    for (const auto& r : rows) arr.push_back(survey_row_json(r));
    return dump_json(arr);
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) cells.push_back(survey_row_cells(r, fmt == Format::csv));
  if (fmt == Format::csv) return render_csv(kSurveyCsvHeader, cells);
  return render_table(kSurveyTextHeader, cells);
}

std::string cmd_full_survey(u64 p_max, u64 n_max, unsigned workers,
                            Format fmt) {
  auto grid = full_survey(p_max, n_max, workers);

  if (fmt == Format::json) {
    njson arr = njson::array();
    for (const auto& [p, rows] : grid) {
      njson entry;
      entry["p"] = p;
      njson jrows = njson::array();
      for (const auto& r : rows) jrows.push_back(survey_row_json(r));
      entry["rows"] = jrows;
      arr.push_back(entry);
    }
    return dump_json(arr);
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& [p, rows] : grid)
    for (const auto& r : rows) cells.push_back(survey_row_cells(r, fmt == Format::csv));
  if (fmt == Format::csv) return render_csv(kSurveyCsvHeader, cells);
  return render_table(kSurveyTextHeader, cells);
}

std::string cmd_libri(u64 theta_max, Format fmt) {
  auto qualifying = libri_scan(theta_max);

  if (fmt == Format::json) {
    njson j;
    j["theta_max"] = theta_max;
    j["qualifying"] = qualifying;
    return dump_json(j);
  }
  if (fmt == Format::csv) {
    std::vector<std::vector<std::string>> rows;
    for (u64 t : qualifying) rows.push_back({std::to_string(t)});
    return render_csv("theta", rows);
  }
  return "qualifying: " + join(qualifying) + "\n";
}

std::string cmd_bound(u64 p, u64 n_max, Format fmt) {
  SizeBound sb = size_lower_bound(p, n_max);

  if (fmt == Format::json) {
    njson j;
    j["p"] = sb.p;
    j["auxiliaries"] = sb.auxiliaries;
    j["product"] = sb.product.get_str();
    j["bound"] = sb.bound.get_str();
    return dump_json(j);
  }
  std::ostringstream os;
  os << "p:           " << sb.p << "\n"
     << "auxiliaries: " << join(sb.auxiliaries) << "\n"
     << "product:     " << sb.product.get_str() << "\n"
     << "bound:       " << sb.bound.get_str() << "\n";
  return os.str();
}

std::string cmd_germain_primes(u64 limit, Format fmt) {
  auto pairs = germain_primes(limit);

  if (fmt == Format::json) {
    njson arr = njson::array();
    for (const auto& g : pairs) {
      njson j;
      j["p"] = g.p;
      j["safe"] = g.safe;
      arr.push_back(j);
    }
    return dump_json(arr);
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& g : pairs)
    rows.push_back({std::to_string(g.p), std::to_string(g.safe)});
  if (fmt == Format::csv) return render_csv("p,safe", rows);
  return render_table({"p", "safe"}, rows);
}

std::string cmd_flt_search(u64 n, u64 bound, Format fmt) {
  auto triple = flt_search(n, bound);

  if (fmt == Format::json) {
    njson j;
    j["n"] = n;
    j["bound"] = bound;
    j["found"] = triple.has_value();
    if (triple) {
      j["x"] = triple->x;
      j["y"] = triple->y;
      j["z"] = triple->z;
    }
    return dump_json(j);
  }
  std::ostringstream os;
  if (triple) {
    os << "solution: " << triple->x << "^" << n << " + " << triple->y << "^"
       << n << " = " << triple->z << "^" << n << "\n";
  } else {
    os << "no solution with 1 <= x <= y <= " << bound << " for exponent " << n
       << "\n";
  }
  return os.str();
}

std::string cmd_forms(u64 n, u64 x, u64 s, Format fmt) {
  CyclotomicWitness w = cyclotomic_form_witness(n, x, s);
  const char* sign = w.sign == FormSign::plus ? "plus" : "minus";

  if (fmt == Format::json) {
    njson j;
    j["n"] = w.n;
    j["x"] = w.x;
    j["s"] = w.s;
    j["value"] = w.value.get_str();
    j["y"] = w.y.get_str();
    j["z"] = w.z.get_str();
    j["sign"] = sign;
    return dump_json(j);
  }
  std::ostringstream os;
  os << "n:     " << w.n << "\n"
     << "x:     " << w.x << "\n"
     << "s:     " << w.s << "\n"
     << "value: " << w.value.get_str() << "\n"
     << "form:  " << w.value.get_str() << " = " << w.y.get_str() << "^2 "
     << (w.sign == FormSign::plus ? "+" : "-") << " " << w.n << "*"
     << w.z.get_str() << "^2\n"
     << "sign:  " << sign << "\n";
  return os.str();
}

std::string cmd_claim1807(u64 n, u64 bound, FormConvention convention,
                          Format fmt) {
  auto pair = claim1807_counterexample(n, bound, convention);

  njson j;
  std::ostringstream os;
  if (!pair) {
    if (fmt == Format::json) {
      j["n"] = n;
      j["bound"] = bound;
      j["found"] = false;
      return dump_json(j);
    }
    os << "no counterexample with 1 <= a <= b <= " << bound << " for n = " << n
       << "\n";
    return os.str();
  }

  u64 power_sum = checked_add(checked_pow(pair->a, n), checked_pow(pair->b, n));
  auto power_witness = represent(power_sum, n, convention);
  if (fmt == Format::json) {
    j["n"] = n;
    j["bound"] = bound;
    j["found"] = true;
    j["a"] = pair->a;
    j["b"] = pair->b;
    j["power_sum"] = std::to_string(power_sum);
    j["h"] = power_witness->h;
    j["f"] = power_witness->f;
    return dump_json(j);
  }
  os << "counterexample: a=" << pair->a << " b=" << pair->b << "\n"
     << "a^n + b^n = " << power_sum << " = " << power_witness->h << "^2 + "
     << n << "*" << power_witness->f << "^2\n"
     << "a + b     = " << pair->a + pair->b << " has no representation h^2 + "
     << n << "*f^2\n";
  return os.str();
}

std::string cmd_fermat_numbers(unsigned count, Format fmt) {
  if (fmt == Format::json) {
    njson arr = njson::array();
    for (unsigned k = 0; k < count; ++k) {
      mpz_class f = fermat_number(k);
      njson j;
      j["k"] = k;
      j["value"] = f.get_str();
      // Primality is only decided where 64-bit arithmetic reaches (k <= 5).
      if (k <= 5) j["is_prime"] = is_prime(f.get_ui());
      arr.push_back(j);
    }
    return dump_json(arr);
  }
  std::vector<std::vector<std::string>> rows;
  for (unsigned k = 0; k < count; ++k) {
    mpz_class f = fermat_number(k);
    std::string prime = k <= 5 ? bool_str(is_prime(f.get_ui())) : "-";
    rows.push_back({std::to_string(k), f.get_str(), prime});
  }
  return render_table({"k", "value", "prime"}, rows);
}

std::string cmd_wilson(u64 limit, Format fmt) {
  if (limit < 2) throw std::invalid_argument("wilson: limit must be >= 2");
  if (limit > 1'000'000)
    throw std::out_of_range("wilson: limit exceeds 10^6 guard");
  std::vector<u64> mismatches;
  for (u64 m = 2; m <= limit; ++m)
    if (wilson_check(m) != is_prime(m)) mismatches.push_back(m);

  if (fmt == Format::json) {
    njson j;
    j["limit"] = limit;
    j["checked"] = limit - 1;
    j["all_agree"] = mismatches.empty();
    j["mismatches"] = mismatches;
    return dump_json(j);
  }
  std::ostringstream os;
  if (mismatches.empty()) {
    os << "factorial criterion agrees with is_prime for all 2 <= n <= "
       << limit << " (" << limit - 1 << " values)\n";
  } else {
    os << "MISMATCH at n = " << join(mismatches) << "\n";
  }
  return os.str();
}

std::string cmd_verify_paper(Format fmt, int& exit_code) {
  auto results = run_paper_checks();
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  exit_code = all ? 0 : 1;

  if (fmt == Format::json) {
    njson arr = njson::array();
    for (const auto& r : results) {
      njson j;
      j["id"] = r.id;
      j["name"] = r.name;
      j["passed"] = r.passed;
      j["elapsed_ms"] = r.elapsed_ms;
      j["budget_ms"] = r.budget_ms;
      j["detail"] = r.detail;
      arr.push_back(j);
    }
    return dump_json(arr);
  }
  return render_check_report(results);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Auxiliary-prime toolkit: p-th power residues, "
               "non-consecutivity surveys, Case 1 certificates, and "
               "verification of the classical fixtures"};
  app.name("germain");
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path,
                 "write output bytes to this file instead of stdout");

  // Option storage shared across subcommands; each records its own flags.
  u64 p = 0, theta = 0, n = 0, n_max = 0, p_max = 0, limit = 0, bound = 0,
      theta_max = 0, x = 1, s = 1;
  unsigned workers = 1, count = 0;
  bool strict_positive = false;

  struct SubSpec {
    CLI::App* cmd = nullptr;
    bool json = false;
    std::string format = "text";
  };
  std::map<std::string, SubSpec> subs;

  auto add_sub = [&](const std::string& name, const std::string& desc,
                     bool tabular) -> CLI::App* {
    CLI::App* cmd = app.add_subcommand(name, desc);
    auto& spec = subs[name];
    spec.cmd = cmd;
    cmd->add_flag("--json", spec.json, "emit JSON");
    if (tabular)
      cmd->add_option("--format", spec.format, "text, csv, or json")
          ->check(CLI::IsMember({"text", "csv", "json"}));
    return cmd;
  };

  CLI::App* c_residues = add_sub("residues", "p-th power residues mod theta", false);
  c_residues->add_option("--p", p, "prime exponent")->required();
  c_residues->add_option("--theta", theta, "prime modulus")->required();

  CLI::App* c_qualify = add_sub("qualify", "test both hypotheses for (p, theta)", false);
  c_qualify->add_option("--p", p, "odd prime exponent")->required();
  c_qualify->add_option("--theta", theta, "prime modulus")->required();

  CLI::App* c_aux = add_sub("aux", "qualifying auxiliaries theta = 2Np+1", false);
  c_aux->add_option("--p", p, "odd prime exponent")->required();
  c_aux->add_option("--n-max", n_max, "largest N to try")->required();

  CLI::App* c_table = add_sub("table", "smallest auxiliary per odd prime p < p-max", true);
  c_table->add_option("--p-max", p_max, "exclusive upper bound on p")->required();
  c_table->add_option("--n-max", n_max, "largest N to try (default 50)")
      ->default_val(50);

  CLI::App* c_survey = add_sub("survey", "per-N survey for one exponent", true);
  c_survey->add_option("--p", p, "odd prime exponent")->required();
  c_survey->add_option("--n-max", n_max, "largest N")->required();

  CLI::App* c_full = add_sub("full-survey", "survey for every odd prime p < p-max", true);
  c_full->add_option("--p-max", p_max, "exclusive upper bound on p")->required();
  c_full->add_option("--n-max", n_max, "largest N")->required();
  c_full->add_option("--workers", workers, "worker threads (default 1)")
      ->default_val(1);

  CLI::App* c_libri = add_sub("libri", "qualifying auxiliaries for p = 3", true);
  c_libri->add_option("--theta-max", theta_max, "scan primes 6a+1 up to here")
      ->required();

  CLI::App* c_bound = add_sub("bound", "solution-size lower bound from auxiliaries", false);
  c_bound->add_option("--p", p, "odd prime exponent")->required();
  c_bound->add_option("--n-max", n_max, "largest N")->required();

  CLI::App* c_gp = add_sub("germain-primes", "primes p with 2p+1 prime", true);
  c_gp->add_option("--limit", limit, "inclusive upper bound on p")->required();

  CLI::App* c_flt = add_sub("flt-search", "exhaustive x^n + y^n = z^n scan", false);
  c_flt->add_option("--n", n, "exponent >= 2")->required();
  c_flt->add_option("--bound", bound, "largest x, y (<= 1000)")->required();

  CLI::App* c_forms = add_sub("forms", "witness for 4(x^(n^s)-1)/(x-1) = Y^2 +/- nZ^2", false);
  c_forms->add_option("--n", n, "odd prime")->required();
  c_forms->add_option("--x", x, "base x >= 1")->required();
  c_forms->add_option("--s", s, "tower exponent (default 1)")->default_val(1);

  CLI::App* c_claim = add_sub("claim1807", "search for a power-sum counterexample", false);
  c_claim->add_option("--n", n, "odd prime")->required();
  c_claim->add_option("--bound", bound, "largest a, b (<= 100)")->required();
  c_claim->add_flag("--strict-positive", strict_positive,
                    "require h >= 1 and f >= 1 in representations");

  CLI::App* c_fermat = add_sub("fermat-numbers", "the numbers 2^(2^k) + 1", false);
  c_fermat->add_option("--count", count, "how many, starting at k = 0 (<= 8)")
      ->required();

  CLI::App* c_wilson = add_sub("wilson", "factorial primality criterion sweep", false);
  c_wilson->add_option("--limit", limit, "inclusive upper bound")->required();

  add_sub("verify-paper", "run the complete fixture suite", false);

  try {
    // CLI11 consumes the vector back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto format_of = [&](const std::string& name) {
    const auto& spec = subs.at(name);
    if (spec.json || spec.format == "json") return Format::json;
    if (spec.format == "csv") return Format::csv;
    return Format::text;
  };

  int exit_code = 0;
  std::string output;
  try {
    if (app.got_subcommand(c_residues)) {
      output = cmd_residues(p, theta, format_of("residues"));
    } else if (app.got_subcommand(c_qualify)) {
      output = cmd_qualify(p, theta, format_of("qualify"));
    } else if (app.got_subcommand(c_aux)) {
      output = cmd_aux(p, n_max, format_of("aux"));
    } else if (app.got_subcommand(c_table)) {
      output = cmd_table(p_max, n_max, format_of("table"), err);
    } else if (app.got_subcommand(c_survey)) {
      output = cmd_survey(p, n_max, format_of("survey"));
    } else if (app.got_subcommand(c_full)) {
      output = cmd_full_survey(p_max, n_max, workers, format_of("full-survey"));
    } else if (app.got_subcommand(c_libri)) {
      output = cmd_libri(theta_max, format_of("libri"));
    } else if (app.got_subcommand(c_bound)) {
      output = cmd_bound(p, n_max, format_of("bound"));
    } else if (app.got_subcommand(c_gp)) {
      output = cmd_germain_primes(limit, format_of("germain-primes"));
    } else if (app.got_subcommand(c_flt)) {
      output = cmd_flt_search(n, bound, format_of("flt-search"));
    } else if (app.got_subcommand(c_forms)) {
      output = cmd_forms(n, x, s, format_of("forms"));
    } else if (app.got_subcommand(c_claim)) {
      output = cmd_claim1807(n, bound,
                             strict_positive ? FormConvention::strictly_positive
                                             : FormConvention::inclusive,
                             format_of("claim1807"));
    } else if (app.got_subcommand(c_fermat)) {
      output = cmd_fermat_numbers(count, format_of("fermat-numbers"));
    } else if (app.got_subcommand(c_wilson)) {
      output = cmd_wilson(limit, format_of("wilson"));
    } else {
      output = cmd_verify_paper(format_of("verify-paper"), exit_code);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotFoundError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return 2;
    }
    file << output;
  } else {
    out << output;
  }
  return exit_code;
}

}  // namespace germain::cli
