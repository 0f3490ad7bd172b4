#pragma once

/**
 * @file obstruction.hpp
 * @brief Realizability verdicts for integral classes.
 *
 * Thom's criterion: a realizable integral class has beta P^i(x) = 0 for every
 * i >= 1, so one nonvanishing beta P^i certifies non-realizability. Vanishing
 * of all of them proves nothing, which is why the other verdict is
 * Inconclusive rather than Realizable.
 *
 * Novikov's criterion runs the other way: no p-torsion in the degrees
 * n - 2i(p-1) - 1 makes every class of degree n realizable.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thomcx/abelian_group.hpp"
#include "thomcx/algebra.hpp"
#include "thomcx/duality.hpp"
#include "thomcx/steenrod.hpp"

namespace thomcx {

enum class IntegralityStatus { Integral, NotIntegral, Indeterminate };

inline const char* to_string(IntegralityStatus s) {
  switch (s) {
    case IntegralityStatus::Integral: return "IntegralLift";
    case IntegralityStatus::NotIntegral: return "NotInKernel";
    case IntegralityStatus::Indeterminate: return "Indeterminate";
  }
  return "?";
}

template <typename Class>
struct IntegralityResult {
  IntegralityStatus status;
  /// beta(x) when it is nonzero.
  std::optional<Class> witness;

  bool integral() const noexcept { return status == IntegralityStatus::Integral; }
};

namespace detail {

template <typename Class, typename Beta>
IntegralityResult<Class> integrality(const Class& x, Beta&& beta) {
  if (!x.is_homogeneous()) throw std::invalid_argument("integrality test needs a homogeneous class");
  // mod p reduction is injective on H_n only for n > 1
  if (x.is_zero() || x.degree().value() <= 1) return {IntegralityStatus::Indeterminate, std::nullopt};
  Class b = beta(x);
  if (b.is_zero()) return {IntegralityStatus::Integral, std::nullopt};
  return {IntegralityStatus::NotIntegral, std::move(b)};
}

}  // namespace detail

/// Whether a mod-p class lifts to an integral one: beta(x) = 0 in degree > 1.
inline IntegralityResult<CohomologyClass> is_integral(const CohomologyClass& x) {
  return detail::integrality(x, [](const CohomologyClass& c) { return bockstein(c); });
}
inline IntegralityResult<HomologyClass> is_integral(const HomologyClass& x) {
  return detail::integrality(x, [](const HomologyClass& h) { return homology_bockstein(h); });
}

enum class Verdict { NotRealizable, Inconclusive };

inline const char* to_string(Verdict v) {
  return v == Verdict::NotRealizable ? "NotRealizable" : "Inconclusive";
}

struct ObstructionTerm {
  std::uint64_t i;
  CohomologyClass value;  // beta P^i(x)
  int target_degree;      // |x| + 2i(p-1) + 1
};

struct ObstructionReport {
  CohomologyClass input;
  Prime prime;
  IntegralityStatus integrality;
  std::vector<ObstructionTerm> obstructions;
  Verdict verdict;
  std::vector<std::string> notes;

  /// First nonzero obstruction, if any.
  const ObstructionTerm* witness() const {
    for (const auto& t : obstructions)
      if (!t.value.is_zero()) return &t;
    return nullptr;
  }
};

/// Evaluates beta P^i(x) for every i with 2i <= |x|; larger i vanish by instability.
inline ObstructionReport thom_verdict(const CohomologyClass& x) {
  if (x.is_zero()) throw std::invalid_argument("the zero class is trivially realizable; nothing to test");
  if (!x.is_homogeneous()) throw std::invalid_argument("Thom's criterion needs a homogeneous class");
  const auto integrality = is_integral(x);
  if (!integrality.integral())
    throw std::invalid_argument(std::string("Thom's criterion needs an integral class; integrality is ") +
                                to_string(integrality.status));
  const int deg = *x.degree();
  const int p = x.prime().as_int();
  ObstructionReport report{x, x.prime(), integrality.status, {}, Verdict::Inconclusive, {}};
  for (std::uint64_t i = 1; 2 * i <= static_cast<std::uint64_t>(deg); ++i) {
    report.obstructions.push_back(
        {i, thom_obstruction_class(x, i), deg + 2 * static_cast<int>(i) * (p - 1) + 1});
  }
  if (report.witness()) report.verdict = Verdict::NotRealizable;
  if (x.space().all_lens()) {
    const int homology_degree = x.space().manifold_dimension() - deg;
    if (homology_degree <= 6)
      report.notes.push_back("dual homology degree " + std::to_string(homology_degree) +
                             " <= 6: every integral class in this range is realizable (Thom)");
  }
  return report;
}

enum class NovikovVerdict { Realizable, Inconclusive };

inline const char* to_string(NovikovVerdict v) {
  return v == NovikovVerdict::Realizable ? "Realizable" : "Inconclusive";
}

struct NovikovCondition {
  Prime prime;
  int i;
  int degree;  // n - 2i(p-1) - 1
  AbelianGroup group;
  bool has_p_torsion;
};

struct NovikovReport {
  int n;
  NovikovVerdict verdict;
  std::vector<NovikovCondition> conditions;
};

/// Novikov's criterion for degree n over the given odd primes.
inline NovikovReport novikov_check(const HomologyTable& table, int n, const std::vector<Prime>& primes) {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (!table.contains(n)) throw std::out_of_range("homology table has no entry in degree " + std::to_string(n));
  NovikovReport report{n, NovikovVerdict::Realizable, {}};
  for (const Prime p : primes) {
    const int step = 2 * (p.as_int() - 1);
    for (int i = 1; n - i * step - 1 >= 0; ++i) {
      const int d = n - i * step - 1;
      const AbelianGroup& g = table.at(d);
      const bool torsion = g.has_p_torsion(p.value());
      report.conditions.push_back({p, i, d, g, torsion});
      if (torsion) report.verdict = NovikovVerdict::Inconclusive;
    }
  }
  return report;
}

}  // namespace thomcx
