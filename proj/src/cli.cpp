#include "laplace/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "laplace/bell_polynomials.hpp"
#include "laplace/coefficients.hpp"
#include "laplace/gamma_asymptotics.hpp"
#include "laplace/io_json.hpp"
#include "laplace/number_kernels.hpp"
#include "laplace/verification.hpp"

namespace laplace {

namespace {

// Shortest representation that round-trips through a double.
std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string fmt_fixed3(double v) {
  if (std::isnan(v)) return "nan";
  char b[48];
  std::snprintf(b, sizeof(b), "%.3f", v);
  return b;
}

std::string render_aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c >= width.size()) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

std::string csv_escape(const std::string& s) { return s; }  // values never need quoting here

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ProblemError("cannot write output file: " + path);
  out << text;
}

// Routes the rendered report to --out or the stream.
int emit(const CliConfig& cfg, std::ostream& out, const std::string& rendered, int code) {
  if (cfg.out_path)
    write_text_file(*cfg.out_path, rendered);
  else
    out << rendered;
  return code;
}

int effective_n_max(const CliConfig& cfg, int fallback) {
  return cfg.n_max >= 0 ? cfg.n_max : fallback;
}

// ---------------------------------------------------------------------------
// coeffs

std::string route_label(RouteChoice r) {
  switch (r) {
    case RouteChoice::direct:
      return "direct";
    case RouteChoice::wojdylo:
      return "wojdylo";
    case RouteChoice::comtet:
      return "comtet";
    case RouteChoice::all:
      return "all";
  }
  return "?";
}

int cmd_coeffs(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.input_path) {
    err << "error: coeffs requires --input PATH\n";
    return 1;
  }
  LaplaceProblem p = load_problem_file(*cfg.input_path);
  if (cfg.n_max >= 0) p.n_max = cfg.n_max;
  if (cfg.pad) p.pad = true;

  std::vector<ScaledCoefficients> results;
  std::vector<std::string> labels;
  if (cfg.route == RouteChoice::all) {
    results.push_back(coeffs_direct(p));
    results.push_back(coeffs_wojdylo(p));
    results.push_back(coeffs_comtet(p));
    labels = {"direct", "wojdylo", "comtet"};
  } else {
    const Route r = cfg.route == RouteChoice::direct    ? Route::direct
                    : cfg.route == RouteChoice::wojdylo ? Route::wojdylo
                                                        : Route::comtet;
    results.push_back(compute_coefficients(p, r));
    labels = {route_label(cfg.route)};
  }

  bool agree = true;
  for (const ScaledCoefficients& sc : results)
    if (sc.values != results.front().values) agree = false;

  std::string rendered;
  const std::vector<ExpansionTerm> terms = expansion_terms(results.front());
  if (cfg.format == OutputFormat::json) {
    rendered = dump_json(coefficients_to_json(results.front(), route_label(cfg.route)));
  } else if (cfg.format == OutputFormat::csv) {
    std::ostringstream os;
    os << "n,exponent,scaled_coefficient\n";
    for (const ExpansionTerm& t : terms)
      os << t.n << "," << t.exponent.str() << "," << results.front().values[t.n].str() << "\n";
    rendered = os.str();
  } else {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head = {"n", "exponent"};
    head.insert(head.end(), labels.begin(), labels.end());
    rows.push_back(head);
    for (const ExpansionTerm& t : terms) {
      std::vector<std::string> row = {std::to_string(t.n), t.exponent.str()};
      for (const ScaledCoefficients& sc : results) row.push_back(sc.values[t.n].str());
      rows.push_back(std::move(row));
    }
    std::ostringstream os;
    os << "scaled coefficients (route: " << route_label(cfg.route) << ")\n"
       << render_aligned(rows);
    if (results.front().padded) os << "note: short coefficient lists padded with zeros\n";
    if (cfg.route == RouteChoice::all) os << "verdict: " << (agree ? "AGREE" : "DISAGREE") << "\n";
    rendered = os.str();
  }

  if (!agree) {
    err << "error: evaluation routes disagree (implementation bug)\n";
    emit(cfg, out, rendered, 2);
    return 2;
  }
  return emit(cfg, out, rendered, 0);
}

// ---------------------------------------------------------------------------
// gamma

int cmd_gamma(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const int n_max = effective_n_max(cfg, 4);
  const StirlingCoefficients pipeline = stirling_via_pipeline(n_max);
  constexpr StirlingVariant kVariants[4] = {
      StirlingVariant::first_kind_potential, StirlingVariant::first_kind_bell,
      StirlingVariant::second_kind_potential, StirlingVariant::second_kind_bell};
  constexpr const char* kKeys[4] = {"first_kind_potential", "first_kind_bell",
                                    "second_kind_potential", "second_kind_bell"};

  std::array<std::vector<Rational>, 4> closed;
  for (int v = 0; v < 4; ++v) {
    closed[v].reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) closed[v].push_back(stirling_closed_form(n, kVariants[v]));
  }
  bool agree = true;
  for (int v = 0; v < 4; ++v)
    if (closed[v] != pipeline.gamma) agree = false;

  std::string rendered;
  if (cfg.format == OutputFormat::json) {
    Json j;
    j["n_max"] = n_max;
    Json routes;
    Json pipe = Json::array();
    for (const Rational& g : pipeline.gamma) pipe.push_back(rational_to_json(g));
    routes["pipeline"] = std::move(pipe);
    for (int v = 0; v < 4; ++v) {
      Json col = Json::array();
      for (const Rational& g : closed[v]) col.push_back(rational_to_json(g));
      routes[kKeys[v]] = std::move(col);
    }
    j["routes"] = std::move(routes);
    j["verdict"] = agree ? "AGREE" : "DISAGREE";
    rendered = dump_json(j);
  } else if (cfg.format == OutputFormat::csv) {
    std::ostringstream os;
    os << "n,pipeline,first_kind_potential,first_kind_bell,second_kind_potential,second_kind_"
          "bell\n";
    for (int n = 0; n <= n_max; ++n) {
      os << n << "," << pipeline.gamma[n].str();
      for (int v = 0; v < 4; ++v) os << "," << closed[v][n].str();
      os << "\n";
    }
    rendered = os.str();
  } else {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"n", "pipeline", "first-kind potential", "first-kind bell",
                    "second-kind potential", "second-kind bell"});
    for (int n = 0; n <= n_max; ++n) {
      std::vector<std::string> row = {std::to_string(n), pipeline.gamma[n].str()};
      for (int v = 0; v < 4; ++v) row.push_back(closed[v][n].str());
      rows.push_back(std::move(row));
    }
    std::ostringstream os;
    os << "Stirling-series coefficients by five routes\n"
       << render_aligned(rows) << "verdict: " << (agree ? "AGREE" : "DISAGREE") << "\n";
    rendered = os.str();
  }

  if (!agree) {
    err << "error: gamma routes disagree (implementation bug)\n";
    emit(cfg, out, rendered, 2);
    return 2;
  }
  return emit(cfg, out, rendered, 0);
}

// ---------------------------------------------------------------------------
// igamma

std::string polynomial_string(const QPolynomial& qp) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < static_cast<int>(qp.q.size()); ++k) {
    const Rational& c = qp.q[k];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    std::string part;
    if (k == 0) {
      part = mag.str();
    } else {
      part = (mag == Rational(1)) ? "" : mag.str() + " ";
      part += (k == 1) ? "mu" : "mu^" + std::to_string(k);
    }
    if (first) {
      os << (c.is_negative() ? "-" : "") << part;
      first = false;
    } else {
      os << (c.is_negative() ? " - " : " + ") << part;
    }
  }
  if (first) os << "0";
  return os.str();
}

int cmd_igamma(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const int n_max = effective_n_max(cfg, 3);
  std::vector<QPolynomial> qs;
  qs.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) qs.push_back(q_polynomial(n));  // dual-route checked inside
  const std::vector<Rational> diag = diagonal_coefficients(n_max);

  std::string rendered;
  if (cfg.format == OutputFormat::json) {
    Json j;
    j["n_max"] = n_max;
    Json qpolys = Json::array();
    for (const QPolynomial& qp : qs) {
      Json coeffs = Json::array();
      for (const Rational& c : qp.q) coeffs.push_back(rational_to_json(c));
      qpolys.push_back(std::move(coeffs));
    }
    j["q_polynomials"] = std::move(qpolys);
    Json d = Json::array();
    for (const Rational& c : diag) d.push_back(rational_to_json(c));
    j["diagonal"] = std::move(d);
    rendered = dump_json(j);
  } else if (cfg.format == OutputFormat::csv) {
    std::ostringstream os;
    os << "kind,n,k,value\n";
    for (const QPolynomial& qp : qs)
      for (int k = 0; k < static_cast<int>(qp.q.size()); ++k)
        os << "q," << qp.n << "," << k << "," << qp.q[k].str() << "\n";
    for (int n = 0; n <= n_max; ++n) os << "c," << n << ",0," << diag[n].str() << "\n";
    rendered = os.str();
  } else {
    std::ostringstream os;
    for (const QPolynomial& qp : qs)
      os << "Q_" << qp.n << "(mu) = " << polynomial_string(qp) << "\n";
    for (int n = 0; n <= n_max; ++n) os << "C_" << n << "(0) = " << diag[n].str() << "\n";
    rendered = os.str();
  }
  return emit(cfg, out, rendered, 0);
}

// ---------------------------------------------------------------------------
// tables

struct TablesInput {
  NormalizedSeries f;
  Rational rho = Rational(-3, 2);
};

TablesInput tables_input(const CliConfig& cfg, int n_max) {
  TablesInput t;
  if (cfg.input_path) {
    std::ifstream in(*cfg.input_path);
    if (!in) throw ProblemError("cannot open input file: " + *cfg.input_path);
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw ProblemError("cannot parse " + *cfg.input_path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("f"))
      throw ProblemError("tables input must be an object with field \"f\"");
    if (!j["f"].is_array()) throw ProblemError("input field \"f\": expected an array");
    for (std::size_t i = 0; i < j["f"].size(); ++i)
      t.f.coeffs.push_back(rational_from_json(j["f"][i], "f[" + std::to_string(i) + "]"));
    if (j.contains("rho")) t.rho = rational_from_json(j["rho"], "rho");
  } else {
    // Default: normalized tail of the x - log(1+x) kernel.
    const LaplaceProblem p = gamma_integral_problem(n_max);
    for (int k = 1; k <= n_max; ++k) t.f.coeffs.push_back(p.a[k] / p.a[0]);
  }
  return t;
}

Json triangle_to_json(const std::vector<std::vector<Rational>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json r = Json::array();
    for (const Rational& v : row) r.push_back(rational_to_json(v));
    out.push_back(std::move(r));
  }
  return out;
}

std::string triangle_text(const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> r;
    for (const Rational& v : row) r.push_back(v.str());
    cells.push_back(std::move(r));
  }
  return render_aligned(cells);
}

std::vector<std::vector<Rational>> integer_triangle_rows(StirlingKind kind, int n_max) {
  StirlingTriangle tri(kind, n_max);
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : tri.rows()) {
    std::vector<Rational> r;
    for (const Integer& v : row) r.push_back(Rational(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

// Bell triangles keyed by the series, persisted under LAPLACE_CACHE_DIR.
BellTable bell_table_cached(const NormalizedSeries& f, int n_max, std::ostream& err) {
  const char* dir = std::getenv("LAPLACE_CACHE_DIR");
  if (!dir || !*dir) return bell_table(f, n_max);
  const std::filesystem::path path = std::filesystem::path(dir) / "bell_tables.json";

  Json key = Json::array();
  for (const Rational& c : f.coeffs) key.push_back(rational_to_json(c));

  Json store;
  store["entries"] = Json::array();
  try {
    std::ifstream in(path);
    if (in) {
      Json j;
      in >> j;
      if (j.is_object() && j.contains("entries") && j["entries"].is_array()) store = j;
    }
  } catch (const std::exception& e) {
    err << "warning: ignoring unreadable bell cache: " << e.what() << "\n";
  }

  for (const Json& entry : store["entries"]) {
    try {
      if (entry.at("f") != key) continue;
      if (entry.at("n_max").get<int>() < n_max) continue;
      std::vector<std::vector<Rational>> rows;
      for (int n = 0; n <= n_max; ++n) {
        const Json& row = entry.at("rows").at(n);
        std::vector<Rational> r;
        for (int k = 0; k <= n; ++k) r.push_back(rational_from_json(row.at(k), "cache"));
        rows.push_back(std::move(r));
      }
      return BellTable(std::move(rows));
    } catch (const std::exception& e) {
      err << "warning: ignoring malformed bell cache entry: " << e.what() << "\n";
    }
  }

  BellTable fresh = bell_table(f, n_max);
  Json entry;
  entry["f"] = key;
  entry["n_max"] = n_max;
  entry["rows"] = triangle_to_json(fresh.rows());
  Json kept = Json::array();
  for (const Json& e : store["entries"])
    if (!(e.is_object() && e.contains("f") && e["f"] == key)) kept.push_back(e);
  kept.push_back(std::move(entry));
  store["entries"] = std::move(kept);
  try {
    std::filesystem::create_directories(dir);
    write_text_file(path.string(), dump_json(store));
  } catch (const std::exception& e) {
    err << "warning: cannot write bell cache: " << e.what() << "\n";
  }
  return fresh;
}

int cmd_tables(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const int n_max = effective_n_max(cfg, 6);
  const TablesInput in = tables_input(cfg, n_max);
  const BellTable bell = bell_table_cached(in.f, n_max, err);
  const PotentialRow row = potential_row(in.rho, bell);
  const PotentialTable integer_table = potential_integer_table(in.f, n_max);
  const auto first = integer_triangle_rows(StirlingKind::first_unsigned, n_max);
  const auto second = integer_triangle_rows(StirlingKind::second, n_max);

  std::string rendered;
  if (cfg.format == OutputFormat::json) {
    Json j;
    Json f = Json::array();
    for (const Rational& c : in.f.coeffs) f.push_back(rational_to_json(c));
    j["f"] = std::move(f);
    j["n_max"] = n_max;
    j["bell"] = triangle_to_json(bell.rows());
    Json pot;
    pot["rho"] = rational_to_json(in.rho);
    Json vals = Json::array();
    for (const Rational& v : row.values) vals.push_back(rational_to_json(v));
    pot["row"] = std::move(vals);
    j["potential"] = std::move(pot);
    j["potential_integer"] = triangle_to_json(integer_table.values);
    j["stirling_first"] = triangle_to_json(first);
    j["stirling_second"] = triangle_to_json(second);
    rendered = dump_json(j);
  } else if (cfg.format == OutputFormat::csv) {
    std::ostringstream os;
    os << "table,n,k,value\n";
    const auto emit_rows = [&os](const char* name, const std::vector<std::vector<Rational>>& t) {
      for (std::size_t n = 0; n < t.size(); ++n)
        for (std::size_t k = 0; k < t[n].size(); ++k)
          os << name << "," << n << "," << k << "," << t[n][k].str() << "\n";
    };
    emit_rows("bell", bell.rows());
    for (std::size_t n = 0; n < row.values.size(); ++n)
      os << "potential_row," << n << ",0," << row.values[n].str() << "\n";
    emit_rows("potential_integer", integer_table.values);
    emit_rows("stirling_first", first);
    emit_rows("stirling_second", second);
    rendered = os.str();
  } else {
    std::ostringstream os;
    os << "series tail f:";
    for (const Rational& c : in.f.coeffs) os << " " << c.str();
    os << "\n\nbell triangle B(n, k):\n" << triangle_text(bell.rows());
    os << "\npotential row rho = " << in.rho.str() << ":\n";
    std::vector<std::string> vals;
    for (const Rational& v : row.values) vals.push_back(v.str());
    os << render_aligned({vals});
    os << "\ninteger potential rows A(j, n):\n" << triangle_text(integer_table.values);
    os << "\nstirling triangle (first kind, unsigned):\n" << triangle_text(first);
    os << "\nstirling triangle (second kind):\n" << triangle_text(second);
    rendered = os.str();
  }
  return emit(cfg, out, rendered, 0);
}

// ---------------------------------------------------------------------------
// verify

std::string report_csv(const VerificationReport& r, bool with_check_column) {
  std::ostringstream os;
  os << (with_check_column ? "check,lambda,N,reference,partial_sum,abs_err,rel_err\n"
                           : "lambda,N,reference,partial_sum,abs_err,rel_err\n");
  for (std::size_t i = 0; i < r.grid.size(); ++i)
    for (std::size_t j = 0; j < r.terms.size(); ++j) {
      if (with_check_column) os << csv_escape(r.check) << ",";
      os << fmt_double(r.grid[i]) << "," << r.terms[j] << "," << fmt_double(r.reference[i]) << ","
         << fmt_double(r.partial_sums[i][j]) << "," << fmt_double(r.abs_errors[i][j]) << ","
         << fmt_double(r.rel_errors[i][j]) << "\n";
    }
  return os.str();
}

Json report_summary_json(const VerificationReport& r, const ReportVerdict& v) {
  Json j;
  j["check"] = r.check;
  j["terms"] = r.terms;
  Json orders = Json::array();
  for (double o : r.fitted_order) orders.push_back(o);
  j["fitted_order"] = std::move(orders);
  j["bounds_ok"] = v.bounds_ok;
  j["orders_ok"] = v.orders_ok;
  j["passed"] = v.passed();
  return j;
}

std::vector<OrderExpectation> integer_order_expectations(int up_to) {
  std::vector<OrderExpectation> e;
  for (int n = 1; n <= up_to; ++n) e.push_back({n, static_cast<double>(-n)});
  return e;
}

std::vector<OrderExpectation> half_step_order_expectations(int up_to) {
  std::vector<OrderExpectation> e;
  for (int n = 1; n <= up_to; ++n) e.push_back({n, -(n + 1) / 2.0});
  return e;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.lambda_min > 0) || !(cfg.lambda_min < cfg.lambda_max)) {
    err << "error: requires 0 < lambda-min < lambda-max\n";
    return 1;
  }
  if (cfg.points < 4) {
    err << "error: order fitting needs points >= 4\n";
    return 1;
  }
  const int n_terms = effective_n_max(cfg, 6);
  if (n_terms < 1) {
    err << "error: verify needs n-max >= 1\n";
    return 1;
  }

  const SweepResult sweep = route_agreement_sweep(cfg.seed, 200);
  if (!sweep.all_agree) {
    err << "error: exact route sweep found a disagreement after " << sweep.problems
        << " problems: " << sweep.first_failure << "\n";
    return 2;
  }

  const std::vector<double> grid = log_spaced_grid(cfg.lambda_min, cfg.lambda_max, cfg.points);
  const std::vector<int> m_grid = {10, 20, 40, 80};
  const int ig_terms = std::min(n_terms, 4);

  struct Entry {
    VerificationReport report;
    ReportVerdict verdict;
    std::string file;
  };
  std::vector<Entry> entries;
  {
    VerificationReport r = verify_stirling_series(grid, n_terms);
    ReportVerdict v = assess_report(r, integer_order_expectations(std::min(n_terms, 4)));
    entries.push_back({std::move(r), std::move(v), "stirling_series.csv"});
  }
  {
    VerificationReport r = verify_laplace_order(gamma_integral_problem(n_terms), grid, n_terms);
    ReportVerdict v = assess_report(r, half_step_order_expectations(std::min(n_terms, 4)));
    entries.push_back({std::move(r), std::move(v), "laplace_log_kernel.csv"});
  }
  {
    VerificationReport r =
        verify_laplace_order(gamma_integral_problem_mirror(n_terms), grid, n_terms);
    ReportVerdict v = assess_report(r, half_step_order_expectations(std::min(n_terms, 4)));
    entries.push_back({std::move(r), std::move(v), "laplace_mirror.csv"});
  }
  {
    VerificationReport r = verify_igamma_diagonal(m_grid, ig_terms);
    ReportVerdict v = assess_report(r, integer_order_expectations(std::min(ig_terms, 3)));
    entries.push_back({std::move(r), std::move(v), "igamma_diagonal.csv"});
  }

  bool all_passed = true;
  for (const Entry& e : entries) all_passed = all_passed && e.verdict.passed();

  // Artifacts: per-check CSV plus a JSON summary.
  const std::string dir = cfg.out_path.value_or(".");
  std::filesystem::create_directories(dir);
  for (const Entry& e : entries)
    write_text_file((std::filesystem::path(dir) / e.file).string(), report_csv(e.report, false));

  Json summary;
  summary["route_sweep"] = {{"all_agree", sweep.all_agree},
                            {"problems", sweep.problems},
                            {"seed", cfg.seed}};
  Json checks = Json::array();
  for (const Entry& e : entries) checks.push_back(report_summary_json(e.report, e.verdict));
  summary["checks"] = std::move(checks);
  summary["passed"] = all_passed;
  write_text_file((std::filesystem::path(dir) / "summary.json").string(), dump_json(summary));

  if (cfg.format == OutputFormat::json) {
    out << dump_json(summary);
  } else if (cfg.format == OutputFormat::csv) {
    out << "check,lambda,N,reference,partial_sum,abs_err,rel_err\n";
    for (const Entry& e : entries) {
      const std::string body = report_csv(e.report, true);
      out << body.substr(body.find('\n') + 1);
    }
  } else {
    out << "route sweep: " << sweep.problems << " problems, seed " << cfg.seed << ": AGREE\n\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"check", "bounds", "fitted orders (float)"});
    for (const Entry& e : entries) {
      std::string orders;
      for (std::size_t j = 0; j < e.report.terms.size(); ++j) {
        if (j) orders += "  ";
        orders += "N=" + std::to_string(e.report.terms[j]) + ": " +
                  fmt_fixed3(e.report.fitted_order[j]);
      }
      rows.push_back({e.report.check, e.verdict.bounds_ok ? "ok" : "FAIL", orders});
    }
    out << render_aligned(rows) << "\nartifacts written to " << dir << "\n"
        << "verdict: " << (all_passed ? "PASS" : "FAIL") << "\n";
  }

  if (!all_passed) {
    for (const Entry& e : entries)
      if (!e.verdict.passed()) err << "error: " << e.report.check << ": " << e.verdict.detail
                                   << "\n";
    return 3;
  }
  return 0;
}

int dispatch(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::coeffs:
      return cmd_coeffs(cfg, out, err);
    case Command::gamma:
      return cmd_gamma(cfg, out, err);
    case Command::igamma:
      return cmd_igamma(cfg, out, err);
    case Command::tables:
      return cmd_tables(cfg, out, err);
    case Command::verify:
      return cmd_verify(cfg, out, err);
  }
  err << "error: unknown command\n";
  return 1;
}

}  // namespace

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const char* cache_dir = std::getenv("LAPLACE_CACHE_DIR");
  if (cache_dir && *cache_dir) {
    try {
      load_triangle_cache(cache_dir);
    } catch (const std::exception& e) {
      err << "warning: ignoring triangle cache: " << e.what() << "\n";
    }
  }
  int code;
  try {
    code = dispatch(cfg, out, err);
  } catch (const ProblemError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "error: route disagreement: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: numeric verification failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (cache_dir && *cache_dir) {
    try {
      save_triangle_cache(cache_dir);
    } catch (const std::exception& e) {
      err << "warning: cannot persist triangle cache: " << e.what() << "\n";
    }
  }
  return code;
}

}  // namespace laplace
