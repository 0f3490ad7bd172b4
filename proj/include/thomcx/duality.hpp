#pragma once

/**
 * @file duality.hpp
 * @brief Mod-p homology of products of B Z_p / L^{2p+1} in the alpha basis.
 *
 * alpha_j generates H_j(B Z_p; Z_p). The homology Bockstein sends alpha_j to
 * alpha_{j-1} for even j and kills odd j; on cross products it is a
 * derivation with the Koszul sign of the homological degree.
 *
 * Poincare duality on L^{2p+1} x L^{2p+1} uses the per-factor dictionary
 * D(u^a) = alpha_{2p+1-2a}, D(v u^a) = alpha_{2p-2a} and the cap-product
 * sign for cross classes
 *
 *     [M_1 x M_2] cap (x_1 x x_2) = (-1)^{|x_1| (n_2 - |x_2|)} D(x_1) x D(x_2),
 *
 * extended to k factors pairwise. With this convention D(X_p) comes out as
 * alpha_{2p-1} x alpha_2 + alpha_{2p} x alpha_1.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thomcx/abelian_group.hpp"
#include "thomcx/algebra.hpp"
#include "thomcx/expression.hpp"
#include "thomcx/modp.hpp"

namespace thomcx {

class AlphaMonomial {
 public:
  explicit AlphaMonomial(std::vector<int> indices) : idx_(std::move(indices)) {}

  std::size_t size() const noexcept { return idx_.size(); }
  int operator[](std::size_t i) const { return idx_[i]; }
  int& operator[](std::size_t i) { return idx_[i]; }
  const std::vector<int>& indices() const noexcept { return idx_; }

  int degree() const noexcept {
    int d = 0;
    for (int j : idx_) d += j;
    return d;
  }

  auto operator<=>(const AlphaMonomial&) const = default;

 private:
  std::vector<int> idx_;
};

class HomologyClass {
 public:
  using TermMap = std::map<AlphaMonomial, std::uint32_t>;

  explicit HomologyClass(SpaceModel space) : space_(std::move(space)) {}

  static HomologyClass zero(const SpaceModel& space) { return HomologyClass(space); }
  /// alpha_{j_1} x ... x alpha_{j_k}; out-of-range indices give zero.
  static HomologyClass alpha(const SpaceModel& space, std::vector<int> indices, std::int64_t coeff = 1) {
    if (indices.size() != space.factor_count())
      throw std::invalid_argument("alpha monomial has " + std::to_string(indices.size()) +
                                  " indices for a " + std::to_string(space.factor_count()) +
                                  "-factor space");
    HomologyClass h(space);
    h.add_term(AlphaMonomial(std::move(indices)), Fp(coeff, space.prime()));
    return h;
  }

  const SpaceModel& space() const noexcept { return space_; }
  Prime prime() const noexcept { return space_.prime(); }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Fp coefficient(const AlphaMonomial& m) const {
    auto it = terms_.find(m);
    return Fp(it == terms_.end() ? 0 : it->second, prime());
  }

  bool admissible(const AlphaMonomial& m) const {
    if (m.size() != space_.factor_count()) return false;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] < 0 || m[i] > space_.max_alpha_index(i)) return false;
    return !space_.has_classifying_factor() || m.degree() <= space_.degree_cap();
  }

  void add_term(const AlphaMonomial& m, Fp c) {
    if (c.is_zero() || !admissible(m)) return;
    auto [it, inserted] = terms_.try_emplace(m, 0);
    const Fp sum = Fp(it->second, prime()) + c;
    if (sum.is_zero())
      terms_.erase(it);
    else
      it->second = sum.value();
  }

  std::set<int> degrees() const {
    std::set<int> ds;
    for (const auto& [m, c] : terms_) ds.insert(m.degree());
    return ds;
  }
  std::optional<int> degree() const {
    const auto ds = degrees();
    if (ds.size() != 1) return std::nullopt;
    return *ds.begin();
  }
  bool is_homogeneous() const { return degrees().size() <= 1; }

  HomologyClass& operator+=(const HomologyClass& rhs) {
    require_same(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, Fp(c, prime()));
    return *this;
  }
  HomologyClass& operator-=(const HomologyClass& rhs) { return *this += -rhs; }
  friend HomologyClass operator+(HomologyClass x, const HomologyClass& y) { return x += y; }
  friend HomologyClass operator-(HomologyClass x, const HomologyClass& y) { return x -= y; }
  HomologyClass operator-() const { return scaled(Fp(-1, prime())); }

  HomologyClass scaled(Fp c) const {
    HomologyClass out(space_);
    for (const auto& [m, k] : terms_) out.add_term(m, Fp(k, prime()) * c);
    return out;
  }

  friend bool operator==(const HomologyClass& x, const HomologyClass& y) {
    return x.space_ == y.space_ && x.terms_ == y.terms_;
  }

  void require_same(const HomologyClass& other) const {
    if (!(other.space_ == space_))
      throw std::invalid_argument("homology classes live in different space models");
  }

 private:
  SpaceModel space_;
  TermMap terms_;
};

inline HomologyClass homology_bockstein(const HomologyClass& x) {
  HomologyClass out(x.space());
  for (const auto& [m, c] : x.terms()) {
    int preceding_degree = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const int j = m[i];
      if (j > 0 && j % 2 == 0) {
        AlphaMonomial n = m;
        n[i] = j - 1;
        Fp coeff(c, x.prime());
        if (preceding_degree % 2) coeff = -coeff;
        out.add_term(n, coeff);
      }
      preceding_degree += j;
    }
  }
  return out;
}

/// Exchanges the two factors: alpha_i x alpha_j -> (-1)^{ij} alpha_j x alpha_i.
inline HomologyClass swap_factors(const HomologyClass& x) {
  if (x.space().factor_count() != 2) throw std::invalid_argument("factor swap needs two factors");
  std::vector<FactorKind> kinds{x.space().kind(1), x.space().kind(0)};
  SpaceModel swapped(x.prime(), kinds,
                     x.space().has_classifying_factor() ? std::optional<int>(x.space().degree_cap())
                                                        : std::nullopt);
  HomologyClass out(swapped);
  for (const auto& [m, c] : x.terms()) {
    Fp coeff(c, x.prime());
    if ((m[0] * m[1]) % 2) coeff = -coeff;
    out.add_term(AlphaMonomial({m[1], m[0]}), coeff);
  }
  return out;
}

/// xi_p = alpha_2 x alpha_{2p-1} + alpha_1 x alpha_{2p}.
inline HomologyClass xi_class(const SpaceModel& space) {
  if (space.factor_count() != 2) throw std::invalid_argument("xi_p needs exactly two factors");
  const int p = space.prime().as_int();
  return HomologyClass::alpha(space, {2, 2 * p - 1}) + HomologyClass::alpha(space, {1, 2 * p});
}

/// One of the generators of H_n(B Z_p x B Z_p; Z) listed by degree parity.
struct IntegralBasisElement {
  enum class Kind { Unit, EvenDegree, OddDegree };

  int degree = 0;
  Kind kind = Kind::Unit;
  int index = 0;  // i in the generator formulas

  /// Even 2n: alpha_{2i-1} x alpha_{2n-2i+1}.
  /// Odd 2n-1: alpha_{2i} x alpha_{2n-2i-1} + alpha_{2i-1} x alpha_{2n-2i}, alpha_{-1} = 0.
  HomologyClass to_class(const SpaceModel& space) const {
    HomologyClass h(space);
    auto add = [&](int a, int b) {
      if (a >= 0 && b >= 0) h.add_term(AlphaMonomial({a, b}), Fp::one(space.prime()));
    };
    switch (kind) {
      case Kind::Unit:
        add(0, 0);
        break;
      case Kind::EvenDegree: {
        const int n = degree / 2;
        add(2 * index - 1, 2 * n - 2 * index + 1);
        break;
      }
      case Kind::OddDegree: {
        const int n = (degree + 1) / 2;
        add(2 * index, 2 * n - 2 * index - 1);
        add(2 * index - 1, 2 * n - 2 * index);
        break;
      }
    }
    return h;
  }

  friend bool operator==(const IntegralBasisElement&, const IntegralBasisElement&) = default;
};

/// Generators of H_degree(B Z_p x B Z_p; Z): one in degree 0, n in degree 2n,
/// n+1 in degree 2n-1. Each positive-degree generator spans a Z_p summand.
inline std::vector<IntegralBasisElement> integral_basis(int degree, const SpaceModel& space) {
  if (space.factor_count() != 2) throw std::invalid_argument("integral basis needs a two-factor model");
  if (degree < 0) throw std::invalid_argument("negative degree");
  using K = IntegralBasisElement::Kind;
  std::vector<IntegralBasisElement> out;
  if (degree == 0) {
    out.push_back({0, K::Unit, 0});
  } else if (degree % 2 == 0) {
    for (int i = 1; i <= degree / 2; ++i) out.push_back({degree, K::EvenDegree, i});
  } else {
    for (int i = 0; i <= (degree + 1) / 2; ++i) out.push_back({degree, K::OddDegree, i});
  }
  return out;
}

/// H_n(B Z_p x B Z_p; Z) for n = 0..max_degree, read off the integral basis.
inline HomologyTable integral_homology_table(Prime p, int max_degree) {
  const auto space = SpaceModel::classifying_product(p, 2, std::max(max_degree, 2 * p.as_int() + 2));
  HomologyTable table;
  for (int n = 0; n <= max_degree; ++n) {
    const auto basis = integral_basis(n, space);
    table.set(n, n == 0 ? AbelianGroup::free(1)
                        : AbelianGroup::cyclic_power(p.value(), static_cast<int>(basis.size())));
  }
  return table;
}

/// Number of alpha cross-monomials of each total degree 0..max_deg.
inline std::vector<std::size_t> mod_p_homology_dimensions(const SpaceModel& space, int max_deg) {
  std::vector<std::size_t> dims(static_cast<std::size_t>(std::max(max_deg + 1, 0)), 0);
  const std::size_t k = space.factor_count();
  std::vector<int> idx(k, 0);
  HomologyClass probe(space);
  // odometer over all index vectors with total degree <= max_deg
  while (true) {
    const AlphaMonomial m(idx);
    const int d = m.degree();
    if (d <= max_deg && probe.admissible(m)) ++dims[static_cast<std::size_t>(d)];
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++idx[i] <= std::min(space.max_alpha_index(i), max_deg)) break;
      idx[i] = 0;
    }
    if (i == k) break;
  }
  return dims;
}

/// Cap product with the fundamental class of L^{2p+1} x ... x L^{2p+1}.
inline HomologyClass poincare_dual(const CohomologyClass& x) {
  const SpaceModel& space = x.space();
  if (!space.all_lens()) throw std::invalid_argument("Poincare duality needs lens factors only");
  if (!x.is_homogeneous()) throw std::invalid_argument("Poincare duality needs a homogeneous class");
  const int n = 2 * space.prime().as_int() + 1;
  HomologyClass out(space);
  for (const auto& [m, c] : x.terms()) {
    std::vector<int> idx(m.size());
    std::vector<int> codeg(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      idx[i] = m[i].eps ? n - 1 - 2 * m[i].a : n - 2 * m[i].a;
      codeg[i] = n - (m[i].eps + 2 * m[i].a);
    }
    int exponent = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) exponent += (m[i].eps + 2 * m[i].a) * codeg[j];
    Fp coeff(c, x.prime());
    if (exponent % 2) coeff = -coeff;
    out.add_term(AlphaMonomial(std::move(idx)), coeff);
  }
  return out;
}

inline std::string format_alpha(const AlphaMonomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += " x ";
    out += "a" + std::to_string(m[i]);
  }
  return out;
}

/// "a5 x a2 + a6 x a1"; coefficients other than 1 are written "c*(a5 x a2)".
inline std::string to_string(const HomologyClass& h, FormatOptions opts = {}) {
  return detail::format_linear(h.terms(), h.prime().value(), opts,
                               [](const AlphaMonomial& m) { return format_alpha(m); }, "*",
                               /*parenthesize=*/true);
}

}  // namespace thomcx
