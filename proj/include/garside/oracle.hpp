#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "garside/element.hpp"
#include "garside/rational.hpp"

// Brute-force reference computations. They rely only on normal-form
// arithmetic and are deliberately naive; tests compare the real algorithms
// against them.
namespace garside::oracle {

struct Bracket {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Ball of radius `radius` around 1 in the Cayley graph for D\{1} and its inverses.
class WordLengthBall {
 public:
  WordLengthBall(const StructurePtr& structure, std::int64_t radius);

  std::optional<std::int64_t> distance(const Element& g) const;
  std::size_t size() const noexcept { return dist_.size(); }

 private:
  std::unordered_map<Element, std::int64_t> dist_;
};

/// |g| over simples and their inverses, if it is at most cap.
std::optional<std::int64_t> bfs_word_length(const Element& g, std::int64_t cap);

/// Max inf(w^-1 g w) over words w of length <= conj_len_cap in D and D^-1.
std::int64_t brute_summit_inf(const Element& g, std::int64_t conj_len_cap);

/// [inf_s(g^n)/n, inf_s(g^n)/n + 1/n], which contains t_inf(g) for every n >= 1.
Bracket estimate_translation(const Element& g, std::int64_t n);

/// Every normal form Delta^inf s_1..s_len with inf in [inf_lo, inf_hi] and len <= max_len.
std::vector<Element> all_normal_forms(const StructurePtr& structure, std::int64_t inf_lo,
                                      std::int64_t inf_hi, std::int64_t max_len);

}  // namespace garside::oracle
