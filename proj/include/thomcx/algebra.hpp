#pragma once

/**
 * @file algebra.hpp
 * @brief Mod-p cohomology of products of lens spaces L^{2p+1} and B Z_p.
 *
 * Each factor contributes Z_p[u, v]/(v^2) with |v| = 1, |u| = 2. A lens
 * factor additionally imposes u^{p+1} = 0. Classifying-space factors have
 * cells in every degree; a global degree cap makes the ring finite and any
 * monomial above the cap is read as zero.
 *
 * A monomial is stored as v_1^{e_1} u_1^{a_1} v_2^{e_2} u_2^{a_2} ... with the
 * exterior generators in increasing factor order. Products reorder exterior
 * generators into that order and pick up the Koszul sign.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thomcx/modp.hpp"

namespace thomcx {

enum class FactorKind { Lens, ClassifyingSpace };

class SpaceModel {
 public:
  /// Default cap for classifying-space factors: 2p + 6.
  static int default_degree_cap(Prime p) { return 2 * p.as_int() + 6; }

  SpaceModel(Prime p, std::vector<FactorKind> kinds, std::optional<int> degree_cap = std::nullopt)
      : prime_(p), kinds_(std::move(kinds)) {
    if (kinds_.empty()) throw std::invalid_argument("a space model needs at least one factor");
    const int pi = p.as_int();
    if (has_classifying_factor()) {
      degree_cap_ = degree_cap.value_or(default_degree_cap(p));
      if (degree_cap_ < 2 * pi + 2)
        throw std::invalid_argument("degree cap " + std::to_string(degree_cap_) +
                                    " is below 2p+2 = " + std::to_string(2 * pi + 2));
    } else {
      degree_cap_ = static_cast<int>(kinds_.size()) * (2 * pi + 1);
    }
  }

  static SpaceModel lens_product(Prime p, std::size_t factors) {
    return SpaceModel(p, std::vector<FactorKind>(factors, FactorKind::Lens));
  }
  static SpaceModel classifying_product(Prime p, std::size_t factors,
                                        std::optional<int> degree_cap = std::nullopt) {
    return SpaceModel(p, std::vector<FactorKind>(factors, FactorKind::ClassifyingSpace), degree_cap);
  }

  Prime prime() const noexcept { return prime_; }
  std::size_t factor_count() const noexcept { return kinds_.size(); }
  FactorKind kind(std::size_t i) const { return kinds_.at(i); }
  const std::vector<FactorKind>& kinds() const noexcept { return kinds_; }

  bool has_classifying_factor() const noexcept {
    return std::find(kinds_.begin(), kinds_.end(), FactorKind::ClassifyingSpace) != kinds_.end();
  }
  bool all_lens() const noexcept { return !has_classifying_factor(); }

  /// Total-degree bound; binding only when a classifying-space factor is present.
  int degree_cap() const noexcept { return degree_cap_; }

  /// Largest admissible u-exponent in factor i.
  int truncation(std::size_t i) const {
    return kind(i) == FactorKind::Lens ? prime_.as_int() : degree_cap_ / 2;
  }

  /// Largest homological index j with alpha_j nonzero in factor i.
  int max_alpha_index(std::size_t i) const {
    return kind(i) == FactorKind::Lens ? 2 * prime_.as_int() + 1 : degree_cap_;
  }

  /// Dimension of the manifold L^{2p+1} x ... (all-lens models only).
  int manifold_dimension() const {
    if (!all_lens()) throw std::invalid_argument("manifold dimension requires lens factors only");
    return static_cast<int>(kinds_.size()) * (2 * prime_.as_int() + 1);
  }

  friend bool operator==(const SpaceModel&, const SpaceModel&) = default;

 private:
  Prime prime_;
  std::vector<FactorKind> kinds_;
  int degree_cap_ = 0;
};

/// v^eps u^a in one factor.
struct FactorExponent {
  int eps = 0;
  int a = 0;
  auto operator<=>(const FactorExponent&) const = default;
};

class Monomial {
 public:
  explicit Monomial(std::size_t factors) : exps_(factors) {}
  explicit Monomial(std::vector<FactorExponent> exps) : exps_(std::move(exps)) {}

  std::size_t size() const noexcept { return exps_.size(); }
  const FactorExponent& operator[](std::size_t i) const { return exps_[i]; }
  FactorExponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<FactorExponent>& exponents() const noexcept { return exps_; }

  int degree() const noexcept {
    int d = 0;
    for (const auto& e : exps_) d += e.eps + 2 * e.a;
    return d;
  }
  int odd_count() const noexcept {
    int n = 0;
    for (const auto& e : exps_) n += e.eps;
    return n;
  }
  bool is_unit() const noexcept { return degree() == 0; }

  // Lexicographic on (factor index, eps, a).
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<FactorExponent> exps_;
};

namespace detail {

/// Sign and product of two monomials in the free graded-commutative algebra,
/// before truncation. Returns nullopt when an exterior generator repeats.
inline std::optional<std::pair<int, Monomial>> multiply_monomials(const Monomial& x, const Monomial& y) {
  Monomial out(x.size());
  int swaps = 0;
  int odd_in_y_before = 0;  // exterior generators of y in factors < i
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].eps && y[i].eps) return std::nullopt;
    // v_i from x must move past every v_j of y with j < i
    if (x[i].eps) swaps += odd_in_y_before;
    odd_in_y_before += y[i].eps;
    out[i].eps = x[i].eps + y[i].eps;
    out[i].a = x[i].a + y[i].a;
  }
  return std::make_pair((swaps % 2) ? -1 : 1, std::move(out));
}

}  // namespace detail

/// A finite F_p-linear combination of admissible monomials, kept canonical:
/// no zero coefficients, monomials in their total order.
class CohomologyClass {
 public:
  using TermMap = std::map<Monomial, std::uint32_t>;

  explicit CohomologyClass(SpaceModel space) : space_(std::move(space)) {}

  static CohomologyClass zero(const SpaceModel& space) { return CohomologyClass(space); }
  static CohomologyClass one(const SpaceModel& space) {
    return monomial(space, Monomial(space.factor_count()));
  }
  static CohomologyClass monomial(const SpaceModel& space, const Monomial& m, std::int64_t coeff = 1) {
    CohomologyClass c(space);
    c.add_term(m, Fp(coeff, space.prime()));
    return c;
  }
  /// u_i, with i a 0-based factor index.
  static CohomologyClass u(const SpaceModel& space, std::size_t i, int power = 1) {
    Monomial m(space.factor_count());
    m[checked(space, i)].a = power;
    return monomial(space, m);
  }
  /// v_i (the exterior generator nu_i), 0-based factor index.
  static CohomologyClass v(const SpaceModel& space, std::size_t i) {
    Monomial m(space.factor_count());
    m[checked(space, i)].eps = 1;
    return monomial(space, m);
  }

  const SpaceModel& space() const noexcept { return space_; }
  Prime prime() const noexcept { return space_.prime(); }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Fp coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return Fp(it == terms_.end() ? 0 : it->second, prime());
  }

  bool admissible(const Monomial& m) const {
    if (m.size() != space_.factor_count()) return false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i].eps < 0 || m[i].eps > 1 || m[i].a < 0) return false;
      if (m[i].a > space_.truncation(i)) return false;
    }
    return !space_.has_classifying_factor() || m.degree() <= space_.degree_cap();
  }

  /// Adds c*m; monomials outside the truncated ring are dropped.
  void add_term(const Monomial& m, Fp c) {
    if (c.is_zero() || !admissible(m)) return;
    auto [it, inserted] = terms_.try_emplace(m, 0);
    const Fp sum = Fp(it->second, prime()) + c;
    if (sum.is_zero())
      terms_.erase(it);
    else
      it->second = sum.value();
  }

  /// Set of degrees that occur; empty for the zero class.
  std::set<int> degrees() const {
    std::set<int> ds;
    for (const auto& [m, c] : terms_) ds.insert(m.degree());
    return ds;
  }
  bool is_homogeneous() const { return degrees().size() <= 1; }
  /// Degree of a nonzero homogeneous class; nullopt for zero or inhomogeneous classes.
  std::optional<int> degree() const {
    const auto ds = degrees();
    if (ds.size() != 1) return std::nullopt;
    return *ds.begin();
  }

  /// The part of degree d.
  CohomologyClass homogeneous_part(int d) const {
    CohomologyClass out(space_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) out.terms_.emplace(m, c);
    return out;
  }

  CohomologyClass& operator+=(const CohomologyClass& rhs) {
    require_same(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, Fp(c, prime()));
    return *this;
  }
  CohomologyClass& operator-=(const CohomologyClass& rhs) { return *this += -rhs; }

  friend CohomologyClass operator+(CohomologyClass x, const CohomologyClass& y) { return x += y; }
  friend CohomologyClass operator-(CohomologyClass x, const CohomologyClass& y) { return x -= y; }
  CohomologyClass operator-() const { return scaled(Fp(-1, prime())); }

  CohomologyClass scaled(Fp c) const {
    CohomologyClass out(space_);
    for (const auto& [m, k] : terms_) out.add_term(m, Fp(k, prime()) * c);
    return out;
  }
  friend CohomologyClass operator*(Fp c, const CohomologyClass& x) { return x.scaled(c); }
  friend CohomologyClass operator*(std::int64_t c, const CohomologyClass& x) {
    return x.scaled(Fp(c, x.prime()));
  }

  friend CohomologyClass operator*(const CohomologyClass& x, const CohomologyClass& y) {
    x.require_same(y);
    CohomologyClass out(x.space_);
    for (const auto& [mx, cx] : x.terms_) {
      for (const auto& [my, cy] : y.terms_) {
        auto prod = detail::multiply_monomials(mx, my);
        if (!prod) continue;
        Fp c = Fp(cx, x.prime()) * Fp(cy, x.prime());
        if (prod->first < 0) c = -c;
        out.add_term(prod->second, c);
      }
    }
    return out;
  }
  CohomologyClass& operator*=(const CohomologyClass& rhs) { return *this = *this * rhs; }

  CohomologyClass pow(unsigned n) const {
    CohomologyClass result = one(space_);
    for (unsigned k = 0; k < n; ++k) result *= *this;
    return result;
  }

  friend bool operator==(const CohomologyClass& x, const CohomologyClass& y) {
    return x.space_ == y.space_ && x.terms_ == y.terms_;
  }

  void require_same(const CohomologyClass& other) const {
    if (!(other.space_ == space_))
      throw std::invalid_argument("cohomology classes live in different space models");
  }

 private:
  static std::size_t checked(const SpaceModel& space, std::size_t i) {
    if (i >= space.factor_count())
      throw std::out_of_range("factor index " + std::to_string(i + 1) + " exceeds factor count " +
                              std::to_string(space.factor_count()));
    return i;
  }

  SpaceModel space_;
  TermMap terms_;
};

/// X_p = u_1 v_2 u_2^{p-1} - v_1 u_2^p in a two-factor model.
inline CohomologyClass thom_class(const SpaceModel& space) {
  if (space.factor_count() != 2)
    throw std::invalid_argument("the Thom class needs exactly two factors, got " +
                                std::to_string(space.factor_count()));
  using C = CohomologyClass;
  const int p = space.prime().as_int();
  return C::u(space, 0) * C::v(space, 1) * C::u(space, 1, p - 1) - C::v(space, 0) * C::u(space, 1, p);
}

namespace detail {

template <typename Visit>
void enumerate_monomials(const CohomologyClass& probe, Monomial& m, std::size_t i, int remaining,
                         Visit&& visit) {
  const auto& space = probe.space();
  if (i == space.factor_count()) {
    if (remaining == 0 && probe.admissible(m)) visit(m);
    return;
  }
  for (int eps = 0; eps <= 1 && eps <= remaining; ++eps) {
    for (int a = 0; eps + 2 * a <= remaining && a <= space.truncation(i); ++a) {
      m[i] = {eps, a};
      enumerate_monomials(probe, m, i + 1, remaining - eps - 2 * a, visit);
    }
  }
  m[i] = {};
}

}  // namespace detail

/// All admissible monomials of degree n, in canonical order.
inline std::vector<Monomial> monomials_of_degree(const SpaceModel& space, int n) {
  std::vector<Monomial> out;
  if (n < 0) return out;
  CohomologyClass probe(space);
  Monomial m(space.factor_count());
  detail::enumerate_monomials(probe, m, 0, n, [&](const Monomial& x) { out.push_back(x); });
  std::sort(out.begin(), out.end());
  return out;
}

/// dim H^n for n = 0..max_deg.
inline std::vector<std::size_t> poincare_series(const SpaceModel& space, int max_deg) {
  if (space.has_classifying_factor() && max_deg > space.degree_cap())
    throw std::invalid_argument("max degree " + std::to_string(max_deg) + " exceeds the degree cap " +
                                std::to_string(space.degree_cap()));
  std::vector<std::size_t> dims;
  for (int n = 0; n <= max_deg; ++n) dims.push_back(monomials_of_degree(space, n).size());
  return dims;
}

}  // namespace thomcx
