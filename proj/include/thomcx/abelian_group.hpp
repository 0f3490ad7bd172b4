#pragma once

/**
 * @file abelian_group.hpp
 * @brief Finitely generated abelian groups Z^r + (+)_k Z_{q_k}.
 *
 * Torsion is kept in primary form (each q_k a prime power), which makes
 * equality structural: Z_6 and Z_2 + Z_3 compare equal.
 */

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thomcx/errors.hpp"

namespace thomcx {

class AbelianGroup {
 public:
  AbelianGroup() = default;

  static AbelianGroup zero() { return {}; }
  static AbelianGroup free(int rank) {
    if (rank < 0) throw std::invalid_argument("negative free rank");
    AbelianGroup g;
    g.rank_ = rank;
    return g;
  }
  /// Z_m; m = 1 gives the zero group.
  static AbelianGroup cyclic(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("Z_0 is not a finite cyclic group; use free(1)");
    AbelianGroup g;
    g.add_cyclic(m);
    return g;
  }
  static AbelianGroup cyclic_power(std::uint64_t m, int count) {
    AbelianGroup g;
    for (int k = 0; k < count; ++k) g.add_cyclic(m);
    return g;
  }

  int rank() const noexcept { return rank_; }
  /// Prime-power orders of the cyclic torsion summands, ascending.
  const std::vector<std::uint64_t>& torsion() const noexcept { return torsion_; }
  bool is_zero() const noexcept { return rank_ == 0 && torsion_.empty(); }
  bool is_finite() const noexcept { return rank_ == 0; }

  bool has_p_torsion(std::uint64_t p) const {
    return std::any_of(torsion_.begin(), torsion_.end(), [p](std::uint64_t q) { return q % p == 0; });
  }
  /// Finite with every summand of 2-power order (or zero).
  bool is_two_primary() const {
    return rank_ == 0 && std::all_of(torsion_.begin(), torsion_.end(),
                                     [](std::uint64_t q) { return prime_of(q) == 2; });
  }
  /// Number of Z_p summands (exactly order p).
  int count_cyclic(std::uint64_t q) const {
    return static_cast<int>(std::count(torsion_.begin(), torsion_.end(), q));
  }

  friend AbelianGroup operator+(AbelianGroup a, const AbelianGroup& b) {
    a.rank_ += b.rank_;
    a.torsion_.insert(a.torsion_.end(), b.torsion_.begin(), b.torsion_.end());
    std::sort(a.torsion_.begin(), a.torsion_.end());
    return a;
  }
  AbelianGroup& operator+=(const AbelianGroup& b) { return *this = *this + b; }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

  friend AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b) {
    AbelianGroup out;
    out.rank_ = a.rank_ * b.rank_;
    for (int k = 0; k < a.rank_; ++k)
      for (auto q : b.torsion_) out.add_cyclic(q);
    for (int k = 0; k < b.rank_; ++k)
      for (auto q : a.torsion_) out.add_cyclic(q);
    for (auto x : a.torsion_)
      for (auto y : b.torsion_) out.add_cyclic(std::gcd(x, y));
    return out;
  }

  friend AbelianGroup tor(const AbelianGroup& a, const AbelianGroup& b) {
    AbelianGroup out;
    for (auto x : a.torsion_)
      for (auto y : b.torsion_) out.add_cyclic(std::gcd(x, y));
    return out;
  }

  /// Whether Hom(a, b) is nonzero.
  friend bool hom_nonzero(const AbelianGroup& a, const AbelianGroup& b) {
    if (a.rank_ > 0 && !b.is_zero()) return true;
    for (auto x : a.torsion_)
      for (auto y : b.torsion_)
        if (std::gcd(x, y) > 1) return true;
    return false;
  }

  /// "0", "Z", "Z^2", "Z_3", "Z^2 + Z_3^4 + Z_9".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<std::string> parts;
    if (rank_ == 1) parts.push_back("Z");
    if (rank_ > 1) parts.push_back("Z^" + std::to_string(rank_));
    for (std::size_t i = 0; i < torsion_.size();) {
      std::size_t j = i;
      while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
      std::string s = "Z_" + std::to_string(torsion_[i]);
      if (j - i > 1) s += "^" + std::to_string(j - i);
      parts.push_back(s);
      i = j;
    }
    std::string out = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) out += " + " + parts[k];
    return out;
  }

  /// Inverse of to_string; summands "0" | "Z" | "Z^k" | "Z_m" | "Z_m^k" joined by '+'.
  static AbelianGroup parse(std::string_view text) {
    AbelianGroup g;
    std::size_t pos = 0;
    auto skip = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto number = [&]() -> std::uint64_t {
      skip();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw parse_error("expected a number in group '" + std::string(text) + "'", pos);
      std::uint64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[pos++] - '0');
        if (v > (1ULL << 40)) throw parse_error("number too large", pos);
      }
      return v;
    };
    while (true) {
      skip();
      if (pos >= text.size()) throw parse_error("expected a group summand", pos);
      if (text[pos] == '0') {
        ++pos;
      } else if (text[pos] == 'Z') {
        ++pos;
        skip();
        std::uint64_t order = 0;
        if (pos < text.size() && text[pos] == '_') {
          ++pos;
          order = number();
          if (order < 2) throw parse_error("cyclic order must be at least 2", pos);
        }
        skip();
        std::uint64_t count = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          count = number();
        }
        if (order == 0)
          g.rank_ += static_cast<int>(count);
        else
          for (std::uint64_t k = 0; k < count; ++k) g.add_cyclic(order);
      } else {
        throw parse_error(std::string("unexpected '") + text[pos] + "' in group", pos);
      }
      skip();
      if (pos >= text.size()) break;
      if (text[pos] != '+') throw parse_error(std::string("unexpected '") + text[pos] + "' in group", pos);
      ++pos;
    }
    return g;
  }

 private:
  static std::uint64_t prime_of(std::uint64_t q) {
    for (std::uint64_t d = 2; d * d <= q; ++d)
      if (q % d == 0) return d;
    return q;
  }

  void add_cyclic(std::uint64_t m) {
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d) continue;
      std::uint64_t q = 1;
      while (m % d == 0) {
        m /= d;
        q *= d;
      }
      torsion_.push_back(q);
    }
    if (m > 1) torsion_.push_back(m);
    std::sort(torsion_.begin(), torsion_.end());
  }

  int rank_ = 0;
  std::vector<std::uint64_t> torsion_;
};

/// Degree-indexed groups, e.g. the integral homology of a space.
class HomologyTable {
 public:
  HomologyTable() = default;
  explicit HomologyTable(std::map<int, AbelianGroup> groups) : groups_(std::move(groups)) {}

  void set(int degree, AbelianGroup g) { groups_[degree] = std::move(g); }
  bool contains(int degree) const { return groups_.count(degree) != 0; }
  const AbelianGroup& at(int degree) const {
    auto it = groups_.find(degree);
    if (it == groups_.end())
      throw std::out_of_range("no group recorded in degree " + std::to_string(degree));
    return it->second;
  }
  int max_degree() const { return groups_.empty() ? -1 : groups_.rbegin()->first; }
  const std::map<int, AbelianGroup>& groups() const noexcept { return groups_; }

  friend bool operator==(const HomologyTable&, const HomologyTable&) = default;

 private:
  std::map<int, AbelianGroup> groups_;
};

}  // namespace thomcx
