#include "garside/problems.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "garside/errors.hpp"
#include "garside/translation.hpp"

namespace garside {

namespace {

void require_same(const Element& g, const Element& h) {
  if (!(g.structure() == h.structure())) throw StructureMismatch("operands from different structures");
}

// Proper simples in canonical order with their left-weighted successors.
struct SequenceTable {
  std::vector<Simple> simples;
  std::vector<std::vector<std::size_t>> next;

  explicit SequenceTable(const GarsideStructure& s) {
    for (auto& x : s.enumerate_simples())
      if (!s.is_identity(x) && !s.is_delta(x)) simples.push_back(std::move(x));
    std::sort(simples.begin(), simples.end());
    next.resize(simples.size());
    for (std::size_t i = 0; i < simples.size(); ++i)
      for (std::size_t j = 0; j < simples.size(); ++j)
        if (is_left_weighted(s, simples[i], simples[j])) next[i].push_back(j);
  }
};

struct CandidateBudget {
  std::size_t used = 0;
  std::size_t cap;

  void spend() {
    if (++used > cap)
      throw ResourceLimit("root search exceeded " + std::to_string(cap) + " candidates");
  }
};

// Calls visit on Delta^inf s_1..s_len for every left-weighted sequence of
// proper simples, in lexicographic order; stops when visit returns true.
bool enumerate_normal_forms(const StructurePtr& structure, const SequenceTable& table,
                            std::int64_t inf, std::int64_t len, CandidateBudget& budget,
                            const std::function<bool(const Element&)>& visit) {
  std::vector<Simple> factors;
  std::function<bool(std::size_t, std::int64_t)> extend = [&](std::size_t last,
                                                              std::int64_t left) -> bool {
    if (left == 0) {
      budget.spend();
      return visit(from_canonical(structure, inf, factors));
    }
    auto try_one = [&](std::size_t j) {
      factors.push_back(table.simples[j]);
      bool hit = extend(j, left - 1);
      factors.pop_back();
      return hit;
    };
    if (factors.empty()) {
      for (std::size_t j = 0; j < table.simples.size(); ++j)
        if (try_one(j)) return true;
    } else {
      for (std::size_t j : table.next[last])
        if (try_one(j)) return true;
    }
    return false;
  };
  return extend(0, len);
}

}  // namespace

ProblemAnswer<PowerSolution> solve_power(const Element& g, const Element& h, bool up_to_conjugacy,
                                         const SearchLimits& limits) {
  require_same(g, h);
  using Answer = ProblemAnswer<PowerSolution>;
  const Element one = Element::identity(g.structure_ptr());
  if (g.is_identity()) return Answer::solved({0, up_to_conjugacy ? std::optional(one) : std::nullopt});
  if (h.is_identity()) return Answer::none();

  const Rational ratio = translation_number(g) / translation_number(h);
  if (!ratio.is_integer() || ratio.num() <= 0) return Answer::none();
  const std::int64_t m = ratio.num();
  const Element hm = power(h, m);

  if (!up_to_conjugacy) {
    if (hm == g) return Answer::solved({m, std::nullopt});
    if (hm == invert(g)) return Answer::solved({-m, std::nullopt});
    return Answer::none();
  }
  try {
    ConjugacyTester to_g(g, limits.sss_cap);
    if (auto w = to_g.conjugator_to_target(hm)) return Answer::solved({m, w->conjugator});
    ConjugacyTester to_inverse(invert(g), limits.sss_cap);
    if (auto w = to_inverse.conjugator_to_target(hm)) return Answer::solved({-m, w->conjugator});
  } catch (const ResourceLimit& e) {
    return Answer::limit(e.what());
  }
  return Answer::none();
}

ProblemAnswer<RootSolution> solve_root_conjugacy(const Element& g, std::int64_t n,
                                                 const SearchLimits& limits) {
  using Answer = ProblemAnswer<RootSolution>;
  if (n < 1) throw std::invalid_argument("root exponent must be >= 1");
  const StructurePtr& structure = g.structure_ptr();
  const Element one = Element::identity(structure);
  if (n == 1) return Answer::solved({g, one});
  // Torsion-free: h^n = 1 forces h = 1.
  if (g.is_identity()) return Answer::solved({one, one});

  const std::int64_t big_n = g.structure().delta_norm();
  const TranslationTriple t = translation_triple(g);
  const Rational per_root = translation_number(g, t) / Rational(n);
  const Rational inf_root = t.t_inf / Rational(n);
  const Rational sup_root = t.t_sup / Rational(n);
  // Denominator bounds every root must satisfy.
  if (per_root.den() > big_n * big_n || inf_root.den() > big_n || sup_root.den() > big_n)
    return Answer::none();

  try {
    ConjugacyTester tester(g, limits.sss_cap);
    SequenceTable table(g.structure());
    CandidateBudget budget{0, limits.candidate_cap};
    std::optional<RootSolution> found;
    // Some conjugate of a root sits at its summit values, which the brackets
    // inf_s <= t_inf <= inf_s + 1 and sup_s - 1 <= t_sup <= sup_s confine.
    for (std::int64_t inf = (inf_root - Rational(1)).ceil(); inf <= inf_root.floor() && !found; ++inf) {
      for (std::int64_t sup = std::max(sup_root.ceil(), inf);
           sup <= (sup_root + Rational(1)).floor() && !found; ++sup) {
        enumerate_normal_forms(structure, table, inf, sup - inf, budget, [&](const Element& h) {
          if (auto w = tester.conjugator_to_target(power(h, n))) {
            found = RootSolution{h, w->conjugator};
            return true;
          }
          return false;
        });
      }
    }
    if (found) return Answer::solved(std::move(*found));
  } catch (const ResourceLimit& e) {
    return Answer::limit(e.what());
  }
  return Answer::none();
}

ProblemAnswer<Element> solve_root(const Element& g, std::int64_t n, const SearchLimits& limits) {
  auto r = solve_root_conjugacy(g, n, limits);
  if (!r.has_solution()) return {r.outcome, std::nullopt, r.diagnostic};
  // w^-1 h^n w = g, so (w^-1 h w)^n = g.
  return ProblemAnswer<Element>::solved(conjugate(r.solution->root, r.solution->witness));
}

ProblemAnswer<ProperPowerSolution> solve_proper_power_conjugacy(const Element& g,
                                                                const SearchLimits& limits) {
  using Answer = ProblemAnswer<ProperPowerSolution>;
  if (g.is_identity()) return Answer::none();
  // n = t(g)/t(h) <= N t(g) since t(h) >= 1/N.
  const Rational bound = Rational(g.structure().delta_norm()) * translation_number(g);
  std::string limited;
  for (std::int64_t n = 2; n <= bound.floor(); ++n) {
    auto r = solve_root_conjugacy(g, n, limits);
    if (r.has_solution()) return Answer::solved({r.solution->root, n, r.solution->witness});
    if (r.outcome == Outcome::ResourceLimit && limited.empty())
      limited = "n=" + std::to_string(n) + ": " + r.diagnostic;
  }
  if (!limited.empty()) return Answer::limit(limited);
  return Answer::none();
}

ProblemAnswer<GeneralizedPowerSolution> solve_generalized_power(const Element& g, const Element& h,
                                                                bool up_to_conjugacy,
                                                                const SearchLimits& limits) {
  require_same(g, h);
  using Answer = ProblemAnswer<GeneralizedPowerSolution>;
  const auto r = g.structure().unique_root_exponent();
  if (!r)
    throw Unsupported(g.structure().descriptor() + " declares no unique-root exponent");
  if (g.is_identity() || h.is_identity()) return Answer::none();

  // p t(g) = q t(h) with p/q = t(h)/t(g) reduced.
  const Rational ratio = translation_number(h) / translation_number(g);
  const std::int64_t n = ratio.num() * *r;
  const std::int64_t m = ratio.den() * *r;
  const Element gn = power(g, n);
  const Element hm = power(h, m);

  if (!up_to_conjugacy) {
    if (gn == hm) return Answer::solved({n, m, std::nullopt});
    if (gn == invert(hm)) return Answer::solved({n, -m, std::nullopt});
    return Answer::none();
  }
  try {
    ConjugacyTester to_hm(hm, limits.sss_cap);
    if (auto w = to_hm.conjugator_to_target(gn)) return Answer::solved({n, m, w->conjugator});
    ConjugacyTester to_inverse(invert(hm), limits.sss_cap);
    if (auto w = to_inverse.conjugator_to_target(gn)) return Answer::solved({n, -m, w->conjugator});
  } catch (const ResourceLimit& e) {
    return Answer::limit(e.what());
  }
  return Answer::none();
}

}  // namespace garside
