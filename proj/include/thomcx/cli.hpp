#pragma once

/**
 * @file cli.hpp
 * @brief The thomcx command line: verify, dual, ahss, basis, series.
 *
 * Exit status: 0 success, 1 usage error (bad flags, invalid prime),
 * 2 expression parse error, 3 precondition violation, 4 unreadable or
 * malformed coefficient table.
 */

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "thomcx/ahss.hpp"
#include "thomcx/algebra.hpp"
#include "thomcx/bordism.hpp"
#include "thomcx/duality.hpp"
#include "thomcx/errors.hpp"
#include "thomcx/expression.hpp"
#include "thomcx/obstruction.hpp"
#include "thomcx/steenrod.hpp"

#ifndef THOMCX_DEFAULT_OMEGA_TABLE
#define THOMCX_DEFAULT_OMEGA_TABLE "data/omega_oriented.txt"
#endif

namespace thomcx::cli {

enum ExitCode : int { Ok = 0, Usage = 1, ParseFailure = 2, Precondition = 3, TableFailure = 4 };

struct RunConfig {
  std::string command;
  long long prime = 3;
  std::string expression;
  bool has_expression = false;
  int max_degree = -1;  // -1: command default
  std::string omega_table;
  std::string format = "text";
  std::string space = "lens";
  bool signed_output = false;
};

namespace detail {

using nlohmann::json;

struct Output {
  std::ostream& out;
  const RunConfig& cfg;
  json doc;

  Output(std::ostream& o, const RunConfig& c, Prime p) : out(o), cfg(c) {
    doc = {{"prime", p.value()},
           {"command", c.command},
           {"input", c.has_expression ? json(c.expression) : json(nullptr)},
           {"result", nullptr},
           {"verdict", nullptr},
           {"assumptions", json::array()}};
  }
  bool text() const { return cfg.format == "text"; }
  void finish() {
    if (!text()) out << doc.dump(2) << "\n";
  }
};

inline FormatOptions format_options(const RunConfig& cfg) { return {cfg.signed_output}; }

inline int default_cap(const RunConfig& cfg, int fallback) {
  return cfg.max_degree >= 0 ? cfg.max_degree : fallback;
}

inline int cmd_verify(const RunConfig& cfg, Prime p, std::ostream& out) {
  const auto space = SpaceModel::lens_product(p, 2);
  const CohomologyClass x = cfg.has_expression ? parse_class(cfg.expression, space) : thom_class(space);
  const auto fmt = format_options(cfg);
  const auto integrality = is_integral(x);
  Output o(out, cfg, p);
  if (!cfg.has_expression) o.doc["input"] = to_string(x, fmt);

  if (!integrality.integral()) {
    std::string why = std::string("class is not integral (") + to_string(integrality.status) + ")";
    if (integrality.witness) why += "; beta(x) = " + to_string(*integrality.witness, fmt);
    throw std::invalid_argument(why);
  }
  const ObstructionReport report = thom_verdict(x);

  json obstructions = json::array();
  for (const auto& t : report.obstructions)
    obstructions.push_back({{"i", t.i}, {"value", to_string(t.value, fmt)}, {"degree", t.target_degree}});
  const ObstructionTerm* w = report.witness();
  o.doc["result"] = {{"class", to_string(x, fmt)},
                     {"degree", *x.degree()},
                     {"integrality", to_string(report.integrality)},
                     {"obstructions", obstructions},
                     {"witness", w ? json{{"i", w->i}, {"value", to_string(w->value, fmt)}} : json(nullptr)},
                     {"notes", report.notes}};
  o.doc["verdict"] = to_string(report.verdict);

  if (o.text()) {
    out << "prime: " << p.value() << "\n";
    out << "class: " << to_string(x, fmt) << "\n";
    out << "degree: " << *x.degree() << "\n";
    out << "integrality: " << to_string(report.integrality) << "\n";
    for (const auto& t : report.obstructions)
      out << "beta P^" << t.i << ": " << to_string(t.value, fmt) << "  (degree " << t.target_degree << ")\n";
    for (const auto& n : report.notes) out << "note: " << n << "\n";
    out << "verdict: " << to_string(report.verdict) << "\n";
    if (w) out << "witness: " << to_string(w->value, fmt) << "\n";
  }
  o.finish();
  return Ok;
}

inline int cmd_dual(const RunConfig& cfg, Prime p, std::ostream& out) {
  const auto space = SpaceModel::lens_product(p, 2);
  const CohomologyClass x = parse_class(cfg.expression, space);
  if (!x.is_homogeneous()) {
    std::string ds;
    for (int d : x.degrees()) ds += (ds.empty() ? "" : ", ") + std::to_string(d);
    throw std::invalid_argument("inhomogeneous class (degrees " + ds + ")");
  }
  const HomologyClass h = poincare_dual(x);
  const auto fmt = format_options(cfg);
  Output o(out, cfg, p);
  o.doc["result"] = {{"class", to_string(x, fmt)},
                     {"dual", to_string(h, fmt)},
                     {"degree", h.degree() ? json(*h.degree()) : json(nullptr)}};
  if (o.text()) out << to_string(h, fmt) << "\n";
  o.finish();
  return Ok;
}

inline std::string pair_text(std::pair<int, int> st) {
  return "(" + std::to_string(st.first) + ", " + std::to_string(st.second) + ")";
}

inline int cmd_ahss(const RunConfig& cfg, Prime p, std::ostream& out) {
  const int pi = p.as_int();
  const int cap = default_cap(cfg, 2 * pi + 5);
  const auto table = CoefficientTable::load(cfg.omega_table.empty() ? THOMCX_DEFAULT_OMEGA_TABLE : cfg.omega_table);
  const AHSSPage page = build_e2_page(p, table, cap);
  const StabilityReport stability = page_stability_check(page, table);
  const D5Verdict d5 = evaluate_d5_xi(p, table);

  Output o(out, cfg, p);
  json grid = json::array();
  for (const auto& [st, g] : page.grid)
    grid.push_back({{"s", st.first}, {"t", st.second}, {"group", g.to_string()}});
  auto cells = [](const std::vector<DifferentialCell>& v) {
    json a = json::array();
    for (const auto& d : v) a.push_back({{"r", d.r}, {"s", d.s}, {"t", d.t}, {"reason", d.reason}});
    return a;
  };
  const std::string verdict = d5.nontrivial ? (d5.conditional ? "nontrivial (conditional)" : "nontrivial") : "trivial";
  o.doc["result"] = {
      {"page", {{"r", page.r}, {"cap", page.cap}, {"cells", grid}}},
      {"stability",
       {{"e2_equals_e5", stability.low_differentials_vanish},
        {"degree_rule_holds", stability.degree_rule_holds},
        {"off_rows_two_primary", stability.off_rows_two_primary},
        {"first_differential_from_xi",
         stability.first_differential_from_xi ? json(*stability.first_differential_from_xi) : json(nullptr)},
        {"candidates", cells(stability.candidates)},
        {"undetermined", cells(stability.undetermined)}}},
      {"d5",
       {{"source", {d5.source.first, d5.source.second}},
        {"target", {d5.target.first, d5.target.second}},
        {"boundary", to_string(d5.boundary)},
        {"rewritten", to_string(d5.rewritten)},
        {"reduced", to_string(d5.reduced)},
        {"target_group", d5.target_group.to_string()},
        {"nontrivial", d5.nontrivial},
        {"conditional", d5.conditional}}},
      {"omega_provenance", table.provenance()}};
  o.doc["verdict"] = verdict;
  o.doc["assumptions"] = d5.assumptions;

  if (o.text()) {
    const int tmax = std::min(cap, table.max_t());
    std::size_t width = 1;
    for (const auto& [st, g] : page.grid) width = std::max(width, g.to_string().size());
    out << "E2 page, p = " << pi << ", total degree <= " << cap << "\n";
    for (int t = tmax; t >= 0; --t) {
      out << "t=" << std::setw(2) << t << " |";
      for (int s = 0; s + t <= cap; ++s) out << " " << std::setw(static_cast<int>(width)) << page.at(s, t)->to_string();
      out << "\n";
    }
    out << "      ";
    for (int s = 0; s <= cap; ++s) out << " " << std::setw(static_cast<int>(width)) << ("s=" + std::to_string(s));
    out << "\n\n";
    const bool low_candidate = std::any_of(stability.low_exceptions.begin(), stability.low_exceptions.end(),
                                           [](const DifferentialCell& d) { return d.status == DifferentialStatus::PossiblyNonzero; });
    out << "d2, d3, d4 forced zero: "
        << (stability.low_differentials_vanish ? "yes"
            : low_candidate                    ? "no"
                                               : "undecided (coefficient table ends at t = " + std::to_string(table.max_t()) + ")")
        << "\n";
    out << "degree rule (t = 0 mod 4, r = 1 mod 4) holds: " << (stability.degree_rule_holds ? "yes" : "no") << "\n";
    if (stability.first_differential_from_xi)
      out << "first possible differential from E_" << pair_text({2 * pi + 1, 0}) << ": d"
          << *stability.first_differential_from_xi << "\n";
    out << "possibly nonzero differentials:";
    for (const auto& d : stability.candidates) out << " d" << d.r << "@" << pair_text({d.s, d.t});
    out << "\n";
    if (!stability.undetermined.empty()) out << "undetermined (outside the page): " << stability.undetermined.size() << "\n";
    out << "\n";
    out << "d5: E_" << pair_text(d5.source) << " -> E_" << pair_text(d5.target) << " = " << d5.target_group.to_string() << "\n";
    for (const auto& line : d5.trace) out << "  " << line << "\n";
    out << "d5(xi_" << pi << ") = " << to_string(d5.reduced) << ", " << verdict << "\n";
    for (const auto& a : d5.assumptions) out << "assumption: " << a << "\n";
  }
  o.finish();
  return Ok;
}

inline int cmd_basis(const RunConfig& cfg, Prime p, std::ostream& out) {
  const int pi = p.as_int();
  const int cap = default_cap(cfg, 2 * pi + 4);
  const auto space = SpaceModel::classifying_product(p, 2, std::max(cap, 2 * pi + 2));
  const HomologyTable homology = integral_homology_table(p, cap);
  const auto fmt = format_options(cfg);
  Output o(out, cfg, p);
  json degrees = json::array();
  for (int n = 0; n <= cap; ++n) {
    json elems = json::array();
    std::vector<std::string> lines;
    for (const auto& b : integral_basis(n, space)) {
      lines.push_back(to_string(b.to_class(space), fmt));
      elems.push_back(lines.back());
    }
    degrees.push_back({{"degree", n}, {"group", homology.at(n).to_string()}, {"generators", elems}});
    if (o.text()) {
      out << "H_" << n << " = " << homology.at(n).to_string() << "\n";
      for (const auto& l : lines) out << "  " << l << "\n";
    }
  }
  o.doc["result"] = degrees;
  o.finish();
  return Ok;
}

inline int cmd_series(const RunConfig& cfg, Prime p, std::ostream& out) {
  const int pi = p.as_int();
  const bool lens = cfg.space == "lens";
  const int cap = default_cap(cfg, lens ? 2 * (2 * pi + 1) : 2 * pi + 6);
  const auto space = lens ? SpaceModel::lens_product(p, 2)
                          : SpaceModel::classifying_product(p, 2, std::max(cap, 2 * pi + 2));
  const auto co = poincare_series(space, lens ? std::min(cap, space.degree_cap()) : cap);
  const auto ho = mod_p_homology_dimensions(space, lens ? std::min(cap, space.degree_cap()) : cap);
  Output o(out, cfg, p);
  o.doc["result"] = {{"space", cfg.space}, {"cohomology", co}, {"homology", ho}};
  if (o.text()) {
    out << "space: " << (lens ? "L x L" : "BZ_p x BZ_p") << "\n";
    out << "degree  dim H^n  dim H_n\n";
    for (std::size_t n = 0; n < co.size(); ++n)
      out << std::setw(6) << n << "  " << std::setw(7) << co[n] << "  " << std::setw(7) << ho[n] << "\n";
  }
  o.finish();
  return Ok;
}

inline void add_common(CLI::App* sub, RunConfig& cfg, bool expr) {
  sub->add_option("--prime,-p", cfg.prime, "odd prime p >= 3")->required();
  if (expr)
    sub->add_option("--expr,-e", cfg.expression, "class expression, e.g. \"u1*v2*u2^2 - v1*u2^3\"");
  sub->add_option("--max-degree", cfg.max_degree, "degree cap (>= 2p+2)");
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--signed", cfg.signed_output, "render the coefficient p-1 as a minus sign");
}

}  // namespace detail

/// Runs one command; returns the process exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steenrod obstructions and the AHSS d5 for products of lens spaces", "thomcx"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto* verify = app.add_subcommand("verify", "integrality, beta P^i obstructions and verdict");
  auto* dual = app.add_subcommand("dual", "Poincare dual in the alpha basis");
  auto* ahss = app.add_subcommand("ahss", "E2 page, stability check and d5(xi_p)");
  auto* basis = app.add_subcommand("basis", "integral homology generators of B(Z_p x Z_p)");
  auto* series = app.add_subcommand("series", "Poincare series of cohomology and mod-p homology");
  detail::add_common(verify, cfg, true);
  detail::add_common(dual, cfg, true);
  dual->get_option("--expr")->required();
  detail::add_common(ahss, cfg, false);
  ahss->add_option("--omega-table", cfg.omega_table, "coefficient table file ('t: <group>' lines)");
  detail::add_common(basis, cfg, false);
  detail::add_common(series, cfg, false);
  series->add_option("--space", cfg.space, "lens or classifying")->check(CLI::IsMember({"lens", "classifying"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  cfg.has_expression = !cfg.expression.empty();

  std::optional<Prime> prime;
  try {
    prime.emplace(cfg.prime);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return Usage;
  }
  if (cfg.max_degree >= 0 && cfg.max_degree < 2 * prime->as_int() + 2) {
    err << "error: --max-degree must be at least 2p+2 = " << 2 * prime->as_int() + 2 << "\n";
    return Usage;
  }

  try {
    if (cfg.command == "verify") return detail::cmd_verify(cfg, *prime, out);
    if (cfg.command == "dual") return detail::cmd_dual(cfg, *prime, out);
    if (cfg.command == "ahss") return detail::cmd_ahss(cfg, *prime, out);
    if (cfg.command == "basis") return detail::cmd_basis(cfg, *prime, out);
    return detail::cmd_series(cfg, *prime, out);
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    if (cfg.has_expression) err << "  " << cfg.expression << "\n  " << std::string(e.position(), ' ') << "^\n";
    return ParseFailure;
  } catch (const table_format_error& e) {
    err << "coefficient table error: " << e.what() << "\n";
    return TableFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return Precondition;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return Precondition;
  }
}

}  // namespace thomcx::cli
