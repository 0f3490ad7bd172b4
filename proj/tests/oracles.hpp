#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library's algorithms; values are recomputed from first principles.

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

/// Pascal's triangle reduced mod p, rows 0..n_max.
inline std::vector<std::vector<std::uint32_t>> pascal_mod(int n_max, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> rows(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    rows[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) rows[n][k] = (rows[n - 1][k - 1] + rows[n - 1][k]) % p;
  }
  return rows;
}

/// Exact C(n, k) through factorials, for n <= 20.
inline std::uint64_t factorial_binom(std::uint64_t n, std::uint64_t k) {
  auto fact = [](std::uint64_t m) {
    std::uint64_t f = 1;
    for (std::uint64_t j = 2; j <= m; ++j) f *= j;
    return f;
  };
  if (k > n) return 0;
  return fact(n) / (fact(k) * fact(n - k));
}

/// The multiplicative inverse of a mod p by exhaustive search.
inline std::uint32_t inverse_by_search(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t b = 1; b < p; ++b)
    if ((a * b) % p == 1) return b;
  return 0;
}

/// Coefficient of u^{n + i(p-1)} in (u + u^p)^n mod p, i.e. P^i(u^n) from the
/// total power P(u) = u + u^p expanded as an n-fold product.
inline std::uint32_t total_power_coefficient(int n, int i, std::uint32_t p) {
  const int top = n * static_cast<int>(p);
  std::vector<std::uint32_t> poly(top + 1, 0);
  poly[0] = 1;
  for (int step = 0; step < n; ++step) {
    std::vector<std::uint32_t> next(top + 1, 0);
    for (int e = 0; e <= top; ++e) {
      if (!poly[e]) continue;
      if (e + 1 <= top) next[e + 1] = (next[e + 1] + poly[e]) % p;
      if (e + static_cast<int>(p) <= top) next[e + p] = (next[e + p] + poly[e]) % p;
    }
    poly = std::move(next);
  }
  const int target = n + i * (static_cast<int>(p) - 1);
  return target <= top ? poly[target] : 0;
}

// Cyclic groups: order 0 means Z, order 1 the trivial group.

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    const auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Z_m (x) Z_n by counting Z_m / n Z_m.
inline std::uint64_t cyclic_tensor(std::uint64_t m, std::uint64_t n) {
  if (m == 0) return n;
  if (n == 0) return m;
  std::vector<bool> in_image(m, false);
  for (std::uint64_t x = 0; x < m; ++x) in_image[(x * n) % m] = true;
  std::uint64_t image = 0;
  for (bool b : in_image) image += b;
  return m / image;
}

/// Tor(Z_m, Z_n) as the n-torsion of Z_m, found by counting.
inline std::uint64_t cyclic_tor(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0) return 1;
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < m; ++x)
    if ((x * n) % m == 0) ++count;
  return count;
}

/// H_i(B Z_p; Z) as a list of cyclic orders: Z, Z_p, 0, Z_p, 0, ...
inline std::vector<std::uint64_t> bzp_homology(int i, std::uint64_t p) {
  if (i == 0) return {0};
  if (i % 2 == 1) return {p};
  return {};
}

using Group = std::vector<std::uint64_t>;  // cyclic summands, 0 = Z, trivial summands dropped

inline void push_cyclic(Group& g, std::uint64_t order) {
  if (order != 1) g.push_back(order);
}

inline Group tensor_groups(const Group& a, const Group& b) {
  Group out;
  for (auto x : a)
    for (auto y : b) push_cyclic(out, cyclic_tensor(x, y));
  return out;
}

inline Group tor_groups(const Group& a, const Group& b) {
  Group out;
  for (auto x : a)
    for (auto y : b) push_cyclic(out, cyclic_tor(x, y));
  return out;
}

/// Integral Kunneth for B Z_p x B Z_p in degree n.
inline Group kunneth_bzp2(int n, std::uint64_t p) {
  Group out;
  for (int i = 0; i <= n; ++i) {
    for (auto g : tensor_groups(bzp_homology(i, p), bzp_homology(n - i, p))) out.push_back(g);
  }
  for (int i = 0; i <= n - 1; ++i) {
    for (auto g : tor_groups(bzp_homology(i, p), bzp_homology(n - 1 - i, p))) out.push_back(g);
  }
  return out;
}

/// Coefficients of a product of truncated polynomials (Poincare series).
inline std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                                         std::size_t max_deg) {
  std::vector<std::size_t> out(max_deg + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= max_deg; ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace oracle
