#include "garside/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "garside/conjugacy.hpp"

namespace garside::oracle {

namespace {

// Generators D\{1} and their inverses as elements.
std::vector<Element> generators(const StructurePtr& structure) {
  std::vector<Element> gens;
  for (const auto& s : structure->enumerate_simples()) {
    if (structure->is_identity(s)) continue;
    Element e = Element::from_simple(structure, s);
    gens.push_back(e);
    gens.push_back(invert(e));
  }
  return gens;
}

}  // namespace

WordLengthBall::WordLengthBall(const StructurePtr& structure, std::int64_t radius) {
  const auto gens = generators(structure);
  std::deque<Element> frontier{Element::identity(structure)};
  dist_.emplace(frontier.front(), 0);
  while (!frontier.empty()) {
    Element x = std::move(frontier.front());
    frontier.pop_front();
    const std::int64_t d = dist_.at(x);
    if (d == radius) continue;
    for (const auto& s : gens) {
      Element y = multiply(x, s);
      if (dist_.emplace(y, d + 1).second) frontier.push_back(std::move(y));
    }
  }
}

std::optional<std::int64_t> WordLengthBall::distance(const Element& g) const {
  auto it = dist_.find(g);
  if (it == dist_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::int64_t> bfs_word_length(const Element& g, std::int64_t cap) {
  if (cap < 0) throw std::invalid_argument("bfs_word_length: negative cap");
  const auto gens = generators(g.structure_ptr());
  std::unordered_set<Element> seen{Element::identity(g.structure_ptr())};
  std::vector<Element> layer{Element::identity(g.structure_ptr())};
  for (std::int64_t d = 0;; ++d) {
    if (std::find(layer.begin(), layer.end(), g) != layer.end()) return d;
    if (d == cap || layer.empty()) return std::nullopt;
    std::vector<Element> next;
    for (const auto& x : layer)
      for (const auto& s : gens) {
        Element y = multiply(x, s);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    layer = std::move(next);
  }
}

std::int64_t brute_summit_inf(const Element& g, std::int64_t conj_len_cap) {
  // Conjugates reachable by one more letter depend only on the current
  // conjugate, so the search runs over conjugates rather than conjugators.
  const auto gens = generators(g.structure_ptr());
  std::vector<Element> inverses;
  for (const auto& s : gens) inverses.push_back(invert(s));
  std::unordered_set<Element> seen{g};
  std::vector<Element> layer{g};
  std::int64_t best = g.inf();
  for (std::int64_t d = 0; d < conj_len_cap && !layer.empty(); ++d) {
    std::vector<Element> next;
    for (const auto& h : layer)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Element c = multiply(multiply(inverses[i], h), gens[i]);
        if (seen.insert(c).second) {
          best = std::max(best, c.inf());
          next.push_back(std::move(c));
        }
      }
    layer = std::move(next);
  }
  return best;
}

Bracket estimate_translation(const Element& g, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("estimate_translation: n < 1");
  const std::int64_t a = summit(power(g, n)).inf_s;
  return {Rational(a, n), Rational(a + 1, n)};
}

std::vector<Element> all_normal_forms(const StructurePtr& structure, std::int64_t inf_lo,
                                      std::int64_t inf_hi, std::int64_t max_len) {
  std::vector<Simple> proper;
  for (auto& s : structure->enumerate_simples())
    if (!structure->is_identity(s) && !structure->is_delta(s)) proper.push_back(std::move(s));

  std::vector<std::vector<Simple>> sequences{{}};
  std::vector<std::vector<Simple>> layer{{}};
  for (std::int64_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Simple>> next;
    for (const auto& seq : layer)
      for (const auto& s : proper)
        if (seq.empty() || is_left_weighted(*structure, seq.back(), s)) {
          auto ext = seq;
          ext.push_back(s);
          next.push_back(std::move(ext));
        }
    sequences.insert(sequences.end(), next.begin(), next.end());
    layer = std::move(next);
  }

  std::vector<Element> out;
  for (std::int64_t r = inf_lo; r <= inf_hi; ++r)
    for (const auto& seq : sequences) out.push_back(from_canonical(structure, r, seq));
  return out;
}

}  // namespace garside::oracle
