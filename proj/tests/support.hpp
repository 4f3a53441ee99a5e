#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "garside/cli.hpp"
#include "garside/element.hpp"
#include "garside/structures.hpp"

namespace garside {

inline void PrintTo(const Element& g, std::ostream* os) {
  *os << g.structure().descriptor() << " " << cli::format_normal_form(g);
}

inline void PrintTo(const Simple& s, std::ostream* os) { *os << "simple(" << s.norm << ")"; }

}  // namespace garside

namespace garside::test {

inline Element word(const StructurePtr& s, const std::string& text) { return cli::parse_word(s, text); }

/// Simple named by a positive word that is itself simple.
inline Simple as_simple(const StructurePtr& s, const std::string& text) {
  Element g = word(s, text);
  if (g.is_identity()) return s->identity();
  if (g.inf() == 1 && g.factors().empty()) return s->delta();
  if (g.inf() != 0 || g.factors().size() != 1) throw std::invalid_argument(text + " is not simple");
  return g.factors().front();
}

inline std::vector<Simple> proper_simples(const GarsideStructure& s) {
  std::vector<Simple> out;
  for (auto& x : s.enumerate_simples())
    if (!s.is_identity(x) && !s.is_delta(x)) out.push_back(std::move(x));
  return out;
}

/// Seeded generator of random normal forms and words.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  /// Random normal form with inf in [inf_lo, inf_hi] and len in [0, max_len].
  Element normal_form(const StructurePtr& s, std::int64_t inf_lo, std::int64_t inf_hi, std::int64_t max_len) {
    const auto proper = proper_simples(*s);
    std::int64_t len = uniform(0, max_len);
    std::vector<Simple> f;
    for (std::int64_t i = 0; i < len; ++i) {
      std::vector<const Simple*> options;
      for (const auto& x : proper)
        if (f.empty() || is_left_weighted(*s, f.back(), x)) options.push_back(&x);
      f.push_back(*options[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(options.size()) - 1))]);
    }
    return from_canonical(s, uniform(inf_lo, inf_hi), std::move(f));
  }

  /// Product of `length` random atoms, each inverted with probability `neg`.
  Element atom_word(const StructurePtr& s, std::int64_t length, double neg = 0.0) {
    Element g = Element::identity(s);
    std::bernoulli_distribution flip(neg);
    for (std::int64_t i = 0; i < length; ++i) {
      auto id = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(s->atoms().size()) - 1));
      Element a = Element::from_simple(s, s->atom(id));
      g = multiply(g, flip(rng_) ? invert(a) : a);
    }
    return g;
  }

  /// Random positive element: a product of random simples.
  Element positive(const StructurePtr& s, std::int64_t simples) {
    const auto all = s->enumerate_simples();
    std::vector<Simple> raw;
    for (std::int64_t i = 0; i < simples; ++i)
      raw.push_back(all[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(all.size()) - 1))]);
    return Element::normalize(s, 0, std::move(raw));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Small elements of B_3 and torus(4,3) on which brute-force conjugate search
/// up to length 6 reaches the summit. Shared by unit and acceptance suites.
inline std::vector<Element> curated_summit_suite() {
  std::vector<Element> suite;
  Sampler rng(20240601);
  auto b3 = braid_structure(3);
  auto t43 = torus_structure(4, 3);
  for (int i = 0; i < 25; ++i) suite.push_back(rng.normal_form(b3, -1, 1, 3));
  for (int i = 0; i < 25; ++i) suite.push_back(rng.normal_form(t43, -1, 1, 3));
  return suite;
}

}  // namespace garside::test
