#pragma once

/**
 * @file ahss.hpp
 * @brief Atiyah-Hirzebruch spectral sequence for oriented bordism of
 *        X = B(Z_p x Z_p): coefficient table, E^2 page, and a degree
 *        argument locating the differentials that can be nonzero.
 *
 * E^2_{s,t} = H_s(X; Omega_t) = H_s(X) (x) Omega_t + Tor(H_{s-1}(X), Omega_t)
 * and d^r : E^r_{s,t} -> E^r_{s-r, t+r-1}. A differential is forced to vanish
 * when its source or target is zero on E^2, or when Hom(E^2_source, E^2_target)
 * = 0, which covers maps from p-groups into 2-groups or into free groups.
 * E^r is a subquotient of E^2, so all three arguments carry over to later pages.
 */

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thomcx/abelian_group.hpp"
#include "thomcx/duality.hpp"
#include "thomcx/errors.hpp"
#include "thomcx/modp.hpp"

namespace thomcx {

/// Omega_t for t = 0..max_t, read from "t: <group>" lines.
class CoefficientTable {
 public:
  CoefficientTable(std::map<int, AbelianGroup> rows, std::string provenance)
      : rows_(std::move(rows)), provenance_(std::move(provenance)) {
    if (rows_.empty() || rows_.begin()->first != 0) throw std::invalid_argument("coefficient table must start at t = 0");
    if (!(rows_.at(0) == AbelianGroup::free(1))) throw std::invalid_argument("Omega_0 must be Z");
    int expect = 0;
    for (const auto& [t, g] : rows_) {
      if (t != expect) throw std::invalid_argument("coefficient table is missing row t = " + std::to_string(expect));
      ++expect;
    }
  }

  static CoefficientTable parse(std::string_view text) {
    std::map<int, AbelianGroup> rows;
    std::string provenance;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (const auto hash = line.find('#'); hash != std::string::npos) {
        std::string comment = line.substr(hash + 1);
        if (!comment.empty() && comment.front() == ' ') comment.erase(0, 1);
        if (hash == line.find_first_not_of(" \t")) provenance += (provenance.empty() ? "" : "\n") + comment;
        line.erase(hash);
      }
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const auto colon = line.find(':');
      if (colon == std::string::npos) throw table_format_error("expected 't: <group>'", lineno);
      const std::string key = line.substr(0, colon);
      std::size_t used = 0;
      int t = -1;
      try {
        t = std::stoi(key, &used);
      } catch (const std::exception&) {
        throw table_format_error("row index '" + key + "' is not an integer", lineno);
      }
      if (key.find_first_not_of(" \t", used) != std::string::npos || t < 0)
        throw table_format_error("row index '" + key + "' is not a nonnegative integer", lineno);
      if (rows.count(t)) throw table_format_error("duplicate row t = " + std::to_string(t), lineno);
      std::string value = line.substr(colon + 1);
      while (!value.empty() && (value.back() == '\r' || value.back() == ' ')) value.pop_back();
      try {
        rows.emplace(t, AbelianGroup::parse(value));
      } catch (const parse_error& e) {
        throw table_format_error(e.what(), lineno);
      }
    }
    try {
      return CoefficientTable(std::move(rows), std::move(provenance));
    } catch (const std::invalid_argument& e) {
      throw table_format_error(e.what(), lineno);
    }
  }

  static CoefficientTable load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw table_format_error("cannot open coefficient table '" + path + "'", 0);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
  }

  int max_t() const { return rows_.rbegin()->first; }
  bool contains(int t) const { return rows_.count(t) != 0; }
  const AbelianGroup& at(int t) const {
    auto it = rows_.find(t);
    if (it == rows_.end()) throw std::out_of_range("coefficient table has no row t = " + std::to_string(t));
    return it->second;
  }
  const std::map<int, AbelianGroup>& rows() const noexcept { return rows_; }
  const std::string& provenance() const noexcept { return provenance_; }

  /// Every row with t != 0 mod 4 is a finite 2-group.
  bool off_rows_two_primary() const {
    for (const auto& [t, g] : rows_)
      if (t % 4 != 0 && !g.is_two_primary()) return false;
    return true;
  }

 private:
  std::map<int, AbelianGroup> rows_;
  std::string provenance_;
};

struct AHSSPage {
  int r = 2;
  Prime prime;
  int cap = 0;  // cells with s + t <= cap (and t within the coefficient table)
  std::map<std::pair<int, int>, AbelianGroup> grid;

  const AbelianGroup* at(int s, int t) const {
    auto it = grid.find({s, t});
    return it == grid.end() ? nullptr : &it->second;
  }
};

/// The E^2 page through total degree cap.
inline AHSSPage build_e2_page(Prime p, const CoefficientTable& table, int cap) {
  if (cap < 0) throw std::invalid_argument("negative degree cap");
  const int needed = std::min(cap, 5);
  if (table.max_t() < needed)
    throw std::invalid_argument("coefficient table reaches t = " + std::to_string(table.max_t()) +
                                " but the page needs rows through t = " + std::to_string(needed));
  const HomologyTable homology = integral_homology_table(p, cap);
  AHSSPage page{2, p, cap, {}};
  for (int t = 0; t <= std::min(cap, table.max_t()); ++t) {
    for (int s = 0; s + t <= cap; ++s) {
      AbelianGroup cell = tensor(homology.at(s), table.at(t));
      if (s > 0) cell += tor(homology.at(s - 1), table.at(t));
      page.grid.emplace(std::make_pair(s, t), std::move(cell));
    }
  }
  return page;
}

enum class DifferentialStatus { ForcedZero, PossiblyNonzero, Undetermined };

inline const char* to_string(DifferentialStatus s) {
  switch (s) {
    case DifferentialStatus::ForcedZero: return "forced-zero";
    case DifferentialStatus::PossiblyNonzero: return "possibly-nonzero";
    case DifferentialStatus::Undetermined: return "undetermined";
  }
  return "?";
}

struct DifferentialCell {
  int r, s, t;
  DifferentialStatus status;
  std::string reason;
};

/// d^r : E_{s,t} -> E_{s-r,t+r-1} judged on E^2.
inline DifferentialCell classify_differential(const AHSSPage& page, int r, int s, int t) {
  const AbelianGroup* source = page.at(s, t);
  if (source && source->is_zero()) return {r, s, t, DifferentialStatus::ForcedZero, "zero source"};
  if (s - r < 0) return {r, s, t, DifferentialStatus::ForcedZero, "target below s = 0"};
  const AbelianGroup* target = page.at(s - r, t + r - 1);
  if (target && target->is_zero()) return {r, s, t, DifferentialStatus::ForcedZero, "zero target"};
  if (!source || !target) return {r, s, t, DifferentialStatus::Undetermined, "outside the page"};
  if (!hom_nonzero(*source, *target))
    return {r, s, t, DifferentialStatus::ForcedZero, "Hom(" + source->to_string() + ", " + target->to_string() + ") = 0"};
  return {r, s, t, DifferentialStatus::PossiblyNonzero,
          source->to_string() + " -> " + target->to_string()};
}

struct StabilityReport {
  int cap = 0;
  /// d^2, d^3, d^4 vanish at every source in the grid, hence E^2 = E^3 = E^4 = E^5.
  bool low_differentials_vanish = true;
  std::vector<DifferentialCell> low_exceptions;  // r in {2,3,4}, not forced zero
  std::vector<DifferentialCell> candidates;      // possibly nonzero, any r
  std::vector<DifferentialCell> undetermined;
  /// Every candidate sits at t = 0 mod 4 with r = 1 mod 4.
  bool degree_rule_holds = true;
  bool off_rows_two_primary = false;
  /// Smallest r with d^r out of E_{2p+1,0} possibly nonzero.
  std::optional<int> first_differential_from_xi;
};

inline StabilityReport page_stability_check(const AHSSPage& page, const CoefficientTable& table) {
  const int p = page.prime.as_int();
  if (page.cap < 2 * p + 5)
    throw std::invalid_argument("stability check needs degree cap >= 2p+5 = " + std::to_string(2 * p + 5));
  StabilityReport report;
  report.cap = page.cap;
  report.off_rows_two_primary = table.off_rows_two_primary();
  for (int r = 2; r <= page.cap; ++r) {
    for (const auto& [cell, group] : page.grid) {
      const auto [s, t] = cell;
      if (s < r) continue;
      DifferentialCell d = classify_differential(page, r, s, t);
      if (r <= 4 && d.status != DifferentialStatus::ForcedZero) {
        report.low_differentials_vanish = false;
        report.low_exceptions.push_back(d);
      }
      if (d.status == DifferentialStatus::PossiblyNonzero) {
        if (t % 4 != 0 || r % 4 != 1) report.degree_rule_holds = false;
        if (s == 2 * p + 1 && t == 0 && !report.first_differential_from_xi) report.first_differential_from_xi = r;
        report.candidates.push_back(std::move(d));
      } else if (d.status == DifferentialStatus::Undetermined) {
        report.undetermined.push_back(std::move(d));
      }
    }
  }
  return report;
}

}  // namespace thomcx
