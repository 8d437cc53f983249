// minus-one: tabulate, evaluate, verify and export the -1 polynomial catalog.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minus_one/verify.hpp"

namespace {

using namespace minus_one;
using nlohmann::json;

constexpr int exit_usage = 3;
constexpr int default_digits = 50;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flag beats MINUS_ONE_DIGITS beats the default.
int resolve_digits(int flag) {
  int digits = default_digits;
  if (const char* env = std::getenv("MINUS_ONE_DIGITS"); env && *env) {
    try {
      digits = std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("MINUS_ONE_DIGITS is not an integer: ") + env);
    }
  }
  if (flag > 0) digits = flag;
  if (digits < 15) throw UsageError("digits must be at least 15");
  return digits;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string fmt(const CNum& v, int digits) { return ParameterVector::format_complex(v, digits); }

json complex_json(const CNum& v, int digits) {
  if (v.is_real()) return v.re.str(digits);
  return json{{"re", v.re.str(digits)}, {"im", v.im.str(digits)}};
}

// ---- list

int cmd_list(bool scheme_only, const std::string& format) {
  std::vector<const FamilySpec*> rows;
  for (const auto& f : catalog()) {
    if (scheme_only && f.role != Role::scheme && f.role != Role::quasi) continue;
    rows.push_back(&f);
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto* f : rows) {
      arr.push_back({{"id", std::string(to_string(f->id))},
                     {"title", f->title},
                     {"role", std::string(to_string(f->role))},
                     {"row", f->row},
                     {"parameters", f->parameters},
                     {"admissible", f->admissible_region},
                     {"anchor", f->anchor}});
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  for (const auto* f : rows) {
    std::string params;
    for (const auto& p : f->parameters) params += (params.empty() ? "" : ",") + p;
    std::cout << std::left << std::setw(38) << to_string(f->id) << std::setw(13) << to_string(f->role) << "("
              << params << ")  " << f->admissible_region << "  [" << f->anchor << "]\n";
  }
  return 0;
}

// ---- tabulate / evaluate

ParameterVector family_parameters(FamilyId id, const std::string& text, const PrecisionContext& ctx) {
  try {
    return complete(id, parameters(id, text, ctx), ctx);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// Admissibility only matters for orthogonality, so tabulating outside the region warns.
void warn_inadmissible(FamilyId id, const ParameterVector& p, const PrecisionContext& ctx) {
  if (const std::string why = admissibility(id, p, ctx); !why.empty()) {
    std::cerr << "warning: outside the admissible region: " << why << " [" << spec(id).anchor
              << " / Orthogonality Relation]\n";
  }
}

std::vector<MonicPolynomial> anchored_generate(FamilyId id, const ParameterVector& p, long N,
                                               const PrecisionContext& ctx) {
  try {
    return generate(id, p, N, ctx);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string(e.what()) + " [" + spec(id).anchor + " / Normalized Recurrence Relation]");
  }
}

int cmd_tabulate(const std::string& family, const std::string& params, long N, int digits_flag,
                 const std::string& format) {
  const FamilyId id = family_id(family);
  const PrecisionContext ctx(resolve_digits(digits_flag));
  const ParameterVector p = family_parameters(id, params, ctx);
  const int shown = std::min(ctx.digits(), 30);
  warn_inadmissible(id, p, ctx);
  const auto P = anchored_generate(id, p, N, ctx);
  if (format == "json") {
    json rows = json::array();
    for (long n = 0; n <= N; ++n) {
      const RecurrencePair r = recurrence(id, p, n, ctx);
      json coeffs = json::array();
      for (const auto& c : P[n].coeffs()) coeffs.push_back(complex_json(c, shown));
      rows.push_back({{"n", n},
                      {"b", complex_json(r.b, shown)},
                      {"u", n == 0 ? json(nullptr) : complex_json(r.u, shown)},
                      {"coefficients", coeffs}});
    }
    std::cout << json{{"family", family}, {"params", p.str(shown)}, {"digits", ctx.digits()}, {"rows", rows}}.dump(2)
              << "\n";
    return 0;
  }
  std::cout << spec(id).title << "  " << p.str(shown) << "  (" << ctx.digits() << " digits)\n";
  for (long n = 0; n <= N; ++n) {
    const RecurrencePair r = recurrence(id, p, n, ctx);
    std::cout << "n=" << n << "  b=" << fmt(r.b, shown) << "  u=" << (n == 0 ? std::string("_") : fmt(r.u, shown))
              << "\n  P_" << n << " coefficients (x^0 ..):";
    for (const auto& c : P[n].coeffs()) std::cout << " " << fmt(c, shown);
    std::cout << "\n";
  }
  return 0;
}

int cmd_evaluate(const std::string& family, const std::string& params, long n, const std::string& at, int digits_flag) {
  const FamilyId id = family_id(family);
  const PrecisionContext ctx(resolve_digits(digits_flag));
  const ParameterVector p = family_parameters(id, params, ctx);
  CNum x;
  try {
    x = parse_complex(at, ctx);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --x: ") + e.what());
  }
  warn_inadmissible(id, p, ctx);
  const CNum v = evaluate(anchored_generate(id, p, n, ctx).back().poly(), x);
  std::cout << fmt(v, std::min(ctx.digits(), 40)) << "\n";
  return 0;
}

// ---- verify

struct Checks {
  std::set<FamilyCheck> family;
  std::set<EdgeCheck> edge;

  json names() const {
    json out = json::array();
    for (FamilyCheck c : family) out.push_back(std::string(to_string(c)));
    for (EdgeCheck c : edge) out.push_back(std::string(to_string(c)));
    return out;
  }
};

Checks parse_checks(const std::vector<std::string>& names) {
  if (names.empty()) return {all_family_checks(), all_edge_checks()};
  Checks out;
  for (const auto& n : names) {
    if (auto c = parse_family_check(n)) {
      out.family.insert(*c);
    } else if (auto e = parse_edge_check(n)) {
      out.edge.insert(*e);
    } else {
      throw UsageError("unknown check '" + n +
                       "' (closed-form, orthogonality, eigen, favard, exact, limit, ct-gt, square)");
    }
  }
  return out;
}

std::string human_report(const std::vector<CheckResult>& rs, const std::string& footer) {
  std::ostringstream o;
  std::size_t pass = 0, fail = 0, inconclusive = 0;
  for (const auto& r : rs) {
    std::string s(to_string(r.status));
    for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    o << std::left << std::setw(13) << s << r.id << " | " << r.check << " | residual " << std::setprecision(3)
      << r.residual << " tol " << r.tolerance << " | " << r.anchor;
    if (!r.notes.empty()) o << " | " << r.notes;
    o << "\n";
    (r.status == Status::pass ? pass : r.status == Status::fail ? fail : inconclusive)++;
  }
  o << pass << " passed, " << fail << " failed, " << inconclusive << " inconclusive";
  if (!footer.empty()) o << "; " << footer;
  o << "\n";
  return o.str();
}

struct VerifyOptions {
  std::string family, edge, params, tolerance, format = "human", output;
  bool all = false, no_timestamp = false;
  std::vector<std::string> checks;
  int digits = 0;
};

int cmd_verify(const VerifyOptions& o) {
  const int selectors = (o.family.empty() ? 0 : 1) + (o.edge.empty() ? 0 : 1) + (o.all ? 1 : 0);
  if (selectors != 1) throw UsageError("verify needs exactly one of --family, --edge, --all");
  if (!o.params.empty() && o.family.empty()) throw UsageError("--params applies to --family only");
  const Checks checks = parse_checks(o.checks);
  // ids are resolved before any computation
  std::optional<FamilyId> family;
  const SchemeEdge* edge = nullptr;
  if (!o.family.empty()) family = family_id(o.family);
  if (!o.edge.empty()) edge = &find_edge(o.edge);
  if (family && checks.family.empty()) throw UsageError("no family check selected");
  if (edge && checks.edge.empty()) throw UsageError("no edge check selected");
  const PrecisionContext ctx(resolve_digits(o.digits));
  SuiteLimits lim;
  if (!o.tolerance.empty()) {
    try {
      lim.tolerance = ctx.parse(o.tolerance);
    } catch (const std::exception&) {
      throw UsageError("bad --tolerance '" + o.tolerance + "'");
    }
    if (lim.tolerance->sign() <= 0) throw UsageError("--tolerance must be positive");
  }

  json config{{"digits", ctx.digits()}, {"checks", checks.names()}};
  if (lim.tolerance) config["tolerance"] = o.tolerance;
  std::vector<CheckResult> results;
  std::string footer;
  if (family) {
    config["family"] = std::string(to_string(*family));
    std::optional<ParameterVector> p;
    if (!o.params.empty()) {
      p = family_parameters(*family, o.params, ctx);
      config["params"] = p->str(ctx.digits());
    }
    results = verify_family(*family, checks.family, ctx, p, lim);
    // auxiliary families have no checks of their own; their edges stand in
    if (spec(*family).role == Role::aux || spec(*family).role == Role::helper) {
      for (const auto* e : edges_touching(*family)) {
        for (auto& r : verify_edge_suite(*e, ctx, checks.edge)) results.push_back(std::move(r));
      }
    }
  } else if (edge) {
    config["edge"] = edge->id();
    results = verify_edge_suite(*edge, ctx, checks.edge, true);
  } else {
    config["all"] = true;
    CatalogRun run = verify_all(checks.family, checks.edge, ctx, lim);
    results = std::move(run.results);
    footer = std::to_string(run.families) + " families, " + std::to_string(run.edges) + " edges";
    config["families"] = run.families;
    config["edges"] = run.edges;
  }
  // open-question findings go with the family or edge they belong to
  if (!o.all) {
    const std::string own = family ? std::string(to_string(*family)) : edge->id();
    for (auto& r : open_questions(ctx)) {
      if (r.id == own) results.push_back(std::move(r));
    }
  }
  sort_results(results);
  if (!o.no_timestamp) {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::ostringstream ts;
    ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
    config["timestamp"] = ts.str();
  }
  if (o.format == "json") {
    emit(report_json("verify", config, results).dump(2) + "\n", o.output);
  } else {
    emit(human_report(results, footer), o.output);
  }
  return exit_code(combine(results));
}

// ---- export

int cmd_export(const std::string& format, const std::string& output, bool with_status, int digits_flag) {
  EdgeStatuses statuses;
  if (with_status) {
    const PrecisionContext ctx(resolve_digits(digits_flag));
    for (const auto& e : edge_catalog()) statuses[e.id()] = combine(verify_edge_suite(e, ctx, all_edge_checks()));
  }
  if (format == "dot") {
    emit(export_dot(statuses), output);
  } else {
    emit(export_json(statuses).dump(2) + "\n", output);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catalog, verification and scheme export for the -1 orthogonal polynomials"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List catalog entries");
  bool scheme_only = false;
  std::string list_format = "human";
  list->add_flag("--scheme-only", scheme_only, "Only the 14 scheme families and the complementary quasi-family");
  list->add_option("--format", list_format)->check(CLI::IsMember({"human", "json"}));

  auto* tab = app.add_subcommand("tabulate", "Print b_n, u_n and the coefficients of P_n");
  std::string family, params, tab_format = "human";
  long N = 5;
  int digits = 0;
  tab->add_option("--family", family)->required();
  tab->add_option("--params", params, "name=value pairs, e.g. alpha=1/2,beta=3/2");
  tab->add_option("--n", N)->check(CLI::NonNegativeNumber);
  tab->add_option("--digits", digits);
  tab->add_option("--format", tab_format)->check(CLI::IsMember({"human", "json"}));

  auto* ev = app.add_subcommand("evaluate", "Evaluate P_n at a point");
  std::string at;
  ev->add_option("--family", family)->required();
  ev->add_option("--params", params);
  ev->add_option("--n", N)->required()->check(CLI::NonNegativeNumber);
  ev->add_option("--x", at)->required();
  ev->add_option("--digits", digits);

  auto* ver = app.add_subcommand("verify", "Run checks; exit 0 pass, 1 fail, 2 inconclusive");
  VerifyOptions vo;
  ver->add_option("--family", vo.family);
  ver->add_option("--edge", vo.edge, "source:target");
  ver->add_flag("--all", vo.all);
  ver->add_option("--params", vo.params);
  ver->add_option("--checks", vo.checks,
                  "Family checks closed-form, orthogonality, eigen, favard; edge checks exact, limit, ct-gt, square")
      ->delimiter(',');
  ver->add_option("--tolerance", vo.tolerance, "Override the closed-form and eigen tolerances");
  ver->add_option("--digits", vo.digits);
  ver->add_option("--format", vo.format)->check(CLI::IsMember({"human", "json"}));
  ver->add_option("--output", vo.output);
  ver->add_flag("--no-timestamp", vo.no_timestamp, "Omit the timestamp so identical runs give identical reports");

  auto* exp = app.add_subcommand("export", "Write the scheme graph");
  std::string exp_format = "dot", exp_output;
  bool with_status = false;
  exp->add_option("--format", exp_format)->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--output", exp_output);
  exp->add_flag("--with-status", with_status, "Verify every edge and attach its status");
  exp->add_option("--digits", digits);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*list) return cmd_list(scheme_only, list_format);
    if (*tab) return cmd_tabulate(family, params, N, digits, tab_format);
    if (*ev) return cmd_evaluate(family, params, N, at, digits);
    if (*ver) return cmd_verify(vo);
    if (*exp) return cmd_export(exp_format, exp_output, with_status, digits);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const UnknownIdError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const InadmissibleParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_usage;
}
