#pragma once

// Hand-rolled random generators for the property suites. Seeds are fixed so
// failures reproduce.

#include <random>
#include <vector>

#include "thomcx/algebra.hpp"
#include "thomcx/duality.hpp"

namespace gen {

inline constexpr int kCases = 500;
inline const std::vector<int> kPrimes{3, 5, 7};

class Random {
 public:
  explicit Random(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// A random space: 1-3 factors, lens or classifying.
  thomcx::SpaceModel space(thomcx::Prime p) {
    const int k = uniform(1, 3);
    std::vector<thomcx::FactorKind> kinds;
    for (int i = 0; i < k; ++i)
      kinds.push_back(coin() ? thomcx::FactorKind::Lens : thomcx::FactorKind::ClassifyingSpace);
    return thomcx::SpaceModel(p, kinds);
  }

  /// A monomial with exponents up to one past the truncation, so some fall outside the ring.
  thomcx::Monomial raw_monomial(const thomcx::SpaceModel& s) {
    thomcx::Monomial m(s.factor_count());
    for (std::size_t i = 0; i < s.factor_count(); ++i) {
      m[i].eps = uniform(0, 1);
      m[i].a = uniform(0, std::min(s.truncation(i) + 1, 6));
    }
    return m;
  }

  /// A nonzero monomial class of a degree that has basis elements.
  thomcx::CohomologyClass homogeneous(const thomcx::SpaceModel& s, int max_terms = 3) {
    const int cap = std::min(s.degree_cap(), 2 * s.prime().as_int() + 4);
    while (true) {
      const int d = uniform(0, cap);
      const auto basis = thomcx::monomials_of_degree(s, d);
      if (basis.empty()) continue;
      thomcx::CohomologyClass x(s);
      const int terms = uniform(1, max_terms);
      for (int t = 0; t < terms; ++t)
        x.add_term(basis[uniform(0, static_cast<int>(basis.size()) - 1)],
                   thomcx::Fp(uniform(1, s.prime().as_int() - 1), s.prime()));
      return x;
    }
  }

  thomcx::CohomologyClass monomial_class(const thomcx::SpaceModel& s) {
    const int cap = std::min(s.degree_cap(), 2 * s.prime().as_int() + 4);
    while (true) {
      const auto basis = thomcx::monomials_of_degree(s, uniform(0, cap));
      if (basis.empty()) continue;
      return thomcx::CohomologyClass::monomial(s, basis[uniform(0, static_cast<int>(basis.size()) - 1)]);
    }
  }

  /// Arbitrary (possibly inhomogeneous) class.
  thomcx::CohomologyClass any(const thomcx::SpaceModel& s) {
    thomcx::CohomologyClass x(s);
    const int terms = uniform(0, 4);
    for (int t = 0; t < terms; ++t) x += homogeneous(s, 1);
    return x;
  }

  thomcx::HomologyClass homology(const thomcx::SpaceModel& s) {
    thomcx::HomologyClass h(s);
    const int terms = uniform(1, 4);
    for (int t = 0; t < terms; ++t) {
      std::vector<int> idx;
      for (std::size_t i = 0; i < s.factor_count(); ++i)
        idx.push_back(uniform(0, std::min(s.max_alpha_index(i), 2 * s.prime().as_int() + 2)));
      h.add_term(thomcx::AlphaMonomial(idx), thomcx::Fp(uniform(1, s.prime().as_int() - 1), s.prime()));
    }
    return h;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace gen
