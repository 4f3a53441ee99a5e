#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "garside/structure.hpp"

namespace garside {

/// A group element in left normal form Delta^inf s_1 ... s_k.
///
/// Factors are proper simples (neither 1 nor Delta) and every adjacent pair
/// is left-weighted. Normal forms are unique, so equality is structural.
class Element {
 public:
  static Element identity(StructurePtr structure);
  static Element delta_power(StructurePtr structure, std::int64_t k);
  static Element from_simple(StructurePtr structure, const Simple& s);
  /// Delta^delta_power times the product of raw_factors, brought to normal form.
  static Element normalize(StructurePtr structure, std::int64_t delta_power,
                           std::vector<Simple> raw_factors);
  static Element from_atoms(StructurePtr structure, std::span<const std::size_t> atom_ids);

  const StructurePtr& structure_ptr() const noexcept { return structure_; }
  const GarsideStructure& structure() const noexcept { return *structure_; }
  std::int64_t inf() const noexcept { return inf_; }
  std::int64_t sup() const noexcept { return inf_ + static_cast<std::int64_t>(factors_.size()); }
  std::int64_t len() const noexcept { return static_cast<std::int64_t>(factors_.size()); }
  const std::vector<Simple>& factors() const noexcept { return factors_; }
  bool is_identity() const noexcept { return inf_ == 0 && factors_.empty(); }
  bool is_positive() const noexcept { return inf_ >= 0; }

  friend bool operator==(const Element& a, const Element& b);
  /// Canonical total order: inf, then factor payloads lexicographically.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

 private:
  Element(StructurePtr structure, std::int64_t inf, std::vector<Simple> factors)
      : structure_(std::move(structure)), inf_(inf), factors_(std::move(factors)) {}

  StructurePtr structure_;
  std::int64_t inf_ = 0;
  std::vector<Simple> factors_;

  friend Element from_canonical(StructurePtr, std::int64_t, std::vector<Simple>);
};

std::size_t hash_value(const Element& g) noexcept;

/// Wraps an already-normal factor list without renormalizing. Checked in debug builds.
Element from_canonical(StructurePtr structure, std::int64_t inf, std::vector<Simple> factors);

// Simple-level operations.

/// Left gcd of two simples; throws StructureMismatch if either is foreign.
Simple simple_meet(const GarsideStructure& s, const Simple& a, const Simple& b);
Simple right_complement(const GarsideStructure& s, const Simple& a);
/// (a c, c^-1 b) with c = right_complement(a) meet b.
std::pair<Simple, Simple> make_left_weighted_pair(const GarsideStructure& s, const Simple& a,
                                                  const Simple& b);
bool is_left_weighted(const GarsideStructure& s, const Simple& a, const Simple& b);

// Element arithmetic.

Element multiply(const Element& g, const Element& h);
Element invert(const Element& g);
Element power(const Element& g, std::int64_t n);
/// Delta^-k g Delta^k.
Element tau_element(const Element& g, std::int64_t k);
/// w^-1 g w.
Element conjugate(const Element& g, const Element& w);
Element multiply_simple_right(const Element& g, const Simple& s);
Element multiply_simple_left(const Simple& s, const Element& g);
/// s^-1 g s for a simple s.
Element conjugate_by_simple(const Element& g, const Simple& s);

/// Geodesic length over simples and their inverses.
std::int64_t word_length(const Element& g);
/// Delta meet g for positive g; throws std::invalid_argument when inf(g) < 0.
Simple lmax(const Element& g);

/// True when g satisfies every normal-form invariant (used by tests).
bool is_normal_form(const Element& g);

Element operator*(const Element& g, const Element& h);

}  // namespace garside

template <>
struct std::hash<garside::Element> {
  std::size_t operator()(const garside::Element& g) const noexcept { return garside::hash_value(g); }
};
