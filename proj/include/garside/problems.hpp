#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "garside/conjugacy.hpp"
#include "garside/element.hpp"

namespace garside {

inline constexpr std::size_t kDefaultCandidateCap = 1'000'000;

struct SearchLimits {
  std::size_t sss_cap = kDefaultSssCap;
  std::size_t candidate_cap = kDefaultCandidateCap;
};

enum class Outcome { Solution, NoSolution, ResourceLimit };

/// Solver outcome. NoSolution means the bounded search space was exhausted;
/// ResourceLimit means the solver could not decide.
template <class Payload>
struct ProblemAnswer {
  Outcome outcome = Outcome::NoSolution;
  std::optional<Payload> solution;
  std::string diagnostic;

  static ProblemAnswer solved(Payload p) { return {Outcome::Solution, std::move(p), {}}; }
  static ProblemAnswer none() { return {Outcome::NoSolution, std::nullopt, {}}; }
  static ProblemAnswer limit(std::string why) { return {Outcome::ResourceLimit, std::nullopt, std::move(why)}; }

  bool has_solution() const noexcept { return outcome == Outcome::Solution; }
};

/// h^n = g, or witness^-1 h^n witness = g in conjugacy mode.
struct PowerSolution {
  std::int64_t n;
  std::optional<Element> witness;
};

/// witness^-1 root^n witness = g.
struct RootSolution {
  Element root;
  Element witness;
};

/// witness^-1 root^n witness = g with n >= 2.
struct ProperPowerSolution {
  Element root;
  std::int64_t n;
  Element witness;
};

/// g^n = h^m, or witness^-1 g^n witness = h^m in conjugacy mode.
struct GeneralizedPowerSolution {
  std::int64_t n;
  std::int64_t m;
  std::optional<Element> witness;
};

/// Find n with h^n equal (or conjugate) to g.
ProblemAnswer<PowerSolution> solve_power(const Element& g, const Element& h, bool up_to_conjugacy,
                                         const SearchLimits& limits = {});

/// Find h with h^n conjugate to g, by enumerating candidates at the summit
/// values pinned down by t_inf(g)/n and t_sup(g)/n.
ProblemAnswer<RootSolution> solve_root_conjugacy(const Element& g, std::int64_t n,
                                                 const SearchLimits& limits = {});

/// Find h with h^n = g exactly (conjugated root).
ProblemAnswer<Element> solve_root(const Element& g, std::int64_t n, const SearchLimits& limits = {});

ProblemAnswer<ProperPowerSolution> solve_proper_power_conjugacy(const Element& g,
                                                                const SearchLimits& limits = {});

/// Find nonzero (n, m) with g^n equal (or conjugate) to h^m. Requires the
/// structure to declare a unique-root exponent; throws Unsupported otherwise.
ProblemAnswer<GeneralizedPowerSolution> solve_generalized_power(const Element& g, const Element& h,
                                                                bool up_to_conjugacy,
                                                                const SearchLimits& limits = {});

}  // namespace garside
