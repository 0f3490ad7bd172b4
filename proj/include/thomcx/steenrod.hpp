#pragma once

/**
 * @file steenrod.hpp
 * @brief Bockstein and odd-primary Steenrod powers on CohomologyClass.
 *
 * beta is the degree +1 derivation with beta(v_i) = u_i, beta(u_i) = 0.
 * P^i raises degree by 2i(p-1); on generators P^i(v) = 0 for i >= 1,
 * P^1(u) = u^p, and the Cartan formula extends it multiplicatively, so
 * P^i(u^n) = C(n, i) u^{n + i(p-1)}. Exterior generators are fixed by the
 * total power, hence a monomial's P^i only redistributes i over its u-exponents.
 */

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "thomcx/algebra.hpp"
#include "thomcx/modp.hpp"

namespace thomcx {

inline CohomologyClass bockstein(const CohomologyClass& x) {
  CohomologyClass out(x.space());
  const Prime p = x.prime();
  for (const auto& [m, c] : x.terms()) {
    int preceding_odd = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i].eps) continue;
      Monomial n = m;
      n[i].eps = 0;
      n[i].a += 1;
      Fp coeff(c, p);
      if (preceding_odd % 2) coeff = -coeff;
      out.add_term(n, coeff);
      ++preceding_odd;
    }
  }
  return out;
}

namespace detail {

// Distributes `remaining` powers over factors i.. of m, accumulating the
// product of the per-factor binomials C(a_k, i_k).
inline void cartan_distribute(const Monomial& m, std::size_t i, std::uint64_t remaining, Fp coeff,
                              Monomial& target, CohomologyClass& out) {
  const Prime p = out.prime();
  if (i == m.size()) {
    if (remaining == 0) out.add_term(target, coeff);
    return;
  }
  const int a = m[i].a;
  const std::uint64_t top = std::min<std::uint64_t>(remaining, static_cast<std::uint64_t>(a));
  for (std::uint64_t k = 0; k <= top; ++k) {
    const Fp b = binom_mod_p(static_cast<std::uint64_t>(a), k, p);
    if (b.is_zero()) continue;
    target[i].eps = m[i].eps;
    target[i].a = a + static_cast<int>(k) * (p.as_int() - 1);
    cartan_distribute(m, i + 1, remaining - k, coeff * b, target, out);
  }
  target[i] = m[i];
}

}  // namespace detail

/// P^i(x). Works term by term, so inhomogeneous input is handled degreewise.
inline CohomologyClass steenrod_power(std::uint64_t i, const CohomologyClass& x) {
  if (i == 0) return x;
  CohomologyClass out(x.space());
  for (const auto& [m, c] : x.terms()) {
    // unstable range: P^i vanishes on classes of degree < 2i
    if (static_cast<std::uint64_t>(m.degree()) < 2 * i) continue;
    Monomial target = m;
    detail::cartan_distribute(m, 0, i, Fp(c, x.prime()), target, out);
  }
  return out;
}

/// beta P^i(x), the obstruction class of degree |x| + 2i(p-1) + 1.
inline CohomologyClass thom_obstruction_class(const CohomologyClass& x, std::uint64_t i) {
  if (i == 0) throw std::invalid_argument("the obstruction index i must be positive");
  return bockstein(steenrod_power(i, x));
}

}  // namespace thomcx
