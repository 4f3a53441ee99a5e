#include "garside/structure.hpp"

#include <stdexcept>

namespace garside {

std::size_t hash_value(const Simple& s) noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto v : s.payload) {
    h ^= static_cast<std::uint16_t>(v);
    h *= 0x100000001b3ull;
  }
  return h;
}

void GarsideStructure::finalize() {
  // tau is an automorphism of the monoid, so its order is read off the atoms.
  int order = 1;
  std::vector<Simple> current = atom_simples_;
  for (;;) {
    bool fixed = true;
    for (std::size_t i = 0; i < current.size(); ++i) {
      current[i] = tau_simple(current[i]);
      if (!(current[i] == atom_simples_[i])) fixed = false;
    }
    if (fixed) break;
    ++order;
    if (order > 1'000'000) throw std::logic_error("tau has no finite order on atoms");
  }
  tau_order_ = order;
}

Simple GarsideStructure::tau_power(const Simple& s, std::int64_t k) const {
  std::int64_t steps = k % tau_order_;
  if (steps < 0) steps += tau_order_;
  Simple out = s;
  for (std::int64_t i = 0; i < steps; ++i) out = tau_simple(out);
  return out;
}

std::vector<std::size_t> GarsideStructure::atom_word(const Simple& s) const {
  std::vector<std::size_t> word;
  Simple rest = s;
  while (!is_identity(rest)) {
    bool found = false;
    for (std::size_t i = 0; i < atom_simples_.size(); ++i) {
      if (left_divides(atom_simples_[i], rest)) {
        word.push_back(i);
        rest = simple_left_divide(atom_simples_[i], rest);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("simple element has no atom divisor");
  }
  return word;
}

}  // namespace garside
