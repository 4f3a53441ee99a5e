#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "garside/element.hpp"

namespace garside {

inline constexpr std::size_t kDefaultSssCap = 100'000;

/// Result of one conjugation step: conjugator^-1 * input * conjugator = result.
struct ConjugationStep {
  Element result;
  Element conjugator;
};

/// inf_s, sup_s and a conjugate realizing both; witness^-1 g witness = representative.
struct SummitData {
  std::int64_t inf_s;
  std::int64_t sup_s;
  Element representative;
  Element witness;
};

struct ConjugacyWitness {
  Element conjugator;
};

/// The super summit set of an element, each member keyed to a conjugator c
/// with c^-1 * summit.representative * c = member. Ordered canonically.
struct SuperSummitSet {
  SummitData summit;
  std::map<Element, Element> members;

  std::vector<Element> elements() const;
  bool contains(const Element& h) const { return members.count(h) != 0; }
};

/// Conjugation by tau^-r(s_1): Delta^r s_2..s_k tau^-r(s_1).
ConjugationStep cycling(const Element& g);
/// Conjugation by s_k^-1: Delta^r tau^r(s_k) s_1..s_{k-1}.
ConjugationStep decycling(const Element& g);

SummitData summit(const Element& g);

/// Closure of summit(g).representative under conjugation by simples.
/// Throws ResourceLimit once more than `cap` members are found.
SuperSummitSet super_summit_set(const Element& g, std::size_t cap = kDefaultSssCap);

std::optional<ConjugacyWitness> are_conjugate(const Element& g, const Element& h,
                                              std::size_t cap = kDefaultSssCap);

/// Repeated conjugacy queries against one fixed target, caching its super summit set.
class ConjugacyTester {
 public:
  explicit ConjugacyTester(Element target, std::size_t cap = kDefaultSssCap);

  const Element& target() const noexcept { return target_; }
  const SummitData& target_summit() const noexcept { return summit_; }

  /// A witness w with w^-1 h w = target, if h is conjugate to the target.
  std::optional<ConjugacyWitness> conjugator_to_target(const Element& h);

 private:
  Element target_;
  std::size_t cap_;
  SummitData summit_;
  std::optional<SuperSummitSet> sss_;
};

}  // namespace garside
