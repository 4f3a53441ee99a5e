#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace garside {

/// A simple element (left divisor of Delta) of some Garside structure.
///
/// The payload is opaque outside the owning structure: a permutation for
/// braids, a (letter, exponent) tag for torus groups, the concatenation of
/// the component payloads for products. `norm` is the atom length ||s||.
struct Simple {
  using Payload = boost::container::small_vector<std::int16_t, 16>;

  Payload payload;
  int norm = 0;

  friend bool operator==(const Simple& a, const Simple& b) { return a.payload == b.payload; }
  friend std::strong_ordering operator<=>(const Simple& a, const Simple& b) {
    return std::lexicographical_compare_three_way(a.payload.begin(), a.payload.end(),
                                                  b.payload.begin(), b.payload.end());
  }
};

std::size_t hash_value(const Simple& s) noexcept;

struct Atom {
  std::size_t id = 0;
  std::string name;
};

/// Primitive operations of a Garside structure, restricted to simples.
///
/// Implementations are immutable after construction; every method is a pure
/// function and safe to call concurrently. Preconditions on partial
/// operations (simple_product, simple_left_divide) are the caller's
/// responsibility and are only checked in debug builds.
class GarsideStructure {
 public:
  virtual ~GarsideStructure() = default;

  GarsideStructure(const GarsideStructure&) = delete;
  GarsideStructure& operator=(const GarsideStructure&) = delete;

  /// Canonical descriptor, e.g. "braid:3" or "product:(torus:2:3,torus:2:3)".
  const std::string& descriptor() const noexcept { return descriptor_; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const Simple& atom(std::size_t id) const { return atom_simples_.at(id); }
  const Simple& identity() const noexcept { return identity_; }
  const Simple& delta() const noexcept { return delta_; }
  /// N = ||Delta||.
  int delta_norm() const noexcept { return delta_.norm; }
  /// Order of tau on simples (equivalently on atoms).
  int tau_order() const noexcept { return tau_order_; }
  virtual std::optional<int> tau_order_hint() const { return std::nullopt; }
  /// Exponent r with g^r in a finite-index subgroup with unique roots, when known.
  virtual std::optional<std::int64_t> unique_root_exponent() const { return std::nullopt; }

  bool is_identity(const Simple& s) const noexcept { return s.norm == 0; }
  bool is_delta(const Simple& s) const noexcept { return s == delta_; }

  virtual Simple simple_meet(const Simple& a, const Simple& b) const = 0;
  /// s^-1 Delta.
  virtual Simple right_complement(const Simple& s) const = 0;
  /// Delta s^-1.
  virtual Simple left_complement(const Simple& s) const = 0;
  /// a c, defined when c <=_L right_complement(a).
  virtual Simple simple_product(const Simple& a, const Simple& c) const = 0;
  /// c^-1 b, defined when c <=_L b.
  virtual Simple simple_left_divide(const Simple& c, const Simple& b) const = 0;
  /// Delta^-1 s Delta.
  virtual Simple tau_simple(const Simple& s) const = 0;
  virtual std::vector<Simple> enumerate_simples() const = 0;
  /// True when s is a well-formed simple of this structure.
  virtual bool contains(const Simple& s) const = 0;
  /// Rebuilds a simple (with its norm) from a payload produced by this structure.
  virtual Simple simple_from_payload(Simple::Payload payload) const = 0;

  /// tau^k(s) for any integer k.
  Simple tau_power(const Simple& s, std::int64_t k) const;
  /// c <=_L s, tested as simple_meet(c, s) == c.
  bool left_divides(const Simple& c, const Simple& s) const { return simple_meet(c, s) == c; }
  /// Greedy atom spelling of s (each letter is the first atom dividing the remainder).
  std::vector<std::size_t> atom_word(const Simple& s) const;

  friend bool operator==(const GarsideStructure& a, const GarsideStructure& b) {
    return &a == &b || a.descriptor_ == b.descriptor_;
  }

 protected:
  GarsideStructure() = default;

  /// Called by each concrete constructor once atoms, identity and delta are set.
  void finalize();

  std::string descriptor_;
  std::vector<Atom> atoms_;
  std::vector<Simple> atom_simples_;
  Simple identity_;
  Simple delta_;

 private:
  int tau_order_ = 1;
};

using StructurePtr = std::shared_ptr<const GarsideStructure>;

}  // namespace garside

template <>
struct std::hash<garside::Simple> {
  std::size_t operator()(const garside::Simple& s) const noexcept { return garside::hash_value(s); }
};
