#include "garside/element.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

#include "garside/errors.hpp"

namespace garside {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Delta exponent overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Delta exponent overflow");
  return out;
}

void require_same(const Element& g, const Element& h) {
  if (!(g.structure() == h.structure()))
    throw StructureMismatch("elements of " + g.structure().descriptor() + " and " +
                            h.structure().descriptor());
}

// Replaces (a, b) by (a c, c^-1 b), c = d(a) meet b. Returns false if c = 1.
bool fix_pair(const GarsideStructure& s, Simple& a, Simple& b) {
  if (s.is_identity(b) || s.is_delta(a)) return false;
  Simple c = s.simple_meet(s.right_complement(a), b);
  if (s.is_identity(c)) return false;
  a = s.simple_product(a, c);
  b = s.simple_left_divide(c, b);
  return true;
}

// Restores left-weightedness after f[pos] was changed, moving leftwards.
void sweep_left(const GarsideStructure& s, std::vector<Simple>& f, std::size_t pos) {
  for (std::size_t i = pos; i > 0; --i)
    if (!fix_pair(s, f[i - 1], f[i])) break;
}

// Same, moving rightwards from f[pos].
void sweep_right(const GarsideStructure& s, std::vector<Simple>& f, std::size_t pos) {
  for (std::size_t i = pos; i + 1 < f.size(); ++i)
    if (!fix_pair(s, f[i], f[i + 1])) break;
}

// Bubble passes until a full pass changes nothing. Identity factors sink to
// the right, Delta factors rise to the left (a Delta passing s leaves tau(s)).
void bubble(const GarsideStructure& s, std::vector<Simple>& f) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
      if (fix_pair(s, f[i], f[i + 1])) changed = true;
  }
}

// Strips leading Deltas into the exponent and trailing identities.
Element canonical(StructurePtr structure, std::int64_t delta_power, std::vector<Simple> f) {
  const GarsideStructure& s = *structure;
  bubble(s, f);
  std::size_t lead = 0;
  while (lead < f.size() && s.is_delta(f[lead])) ++lead;
  std::size_t end = f.size();
  while (end > lead && s.is_identity(f[end - 1])) --end;
  std::vector<Simple> proper(std::make_move_iterator(f.begin() + static_cast<std::ptrdiff_t>(lead)),
                             std::make_move_iterator(f.begin() + static_cast<std::ptrdiff_t>(end)));
  return from_canonical(std::move(structure),
                        checked_add(delta_power, static_cast<std::int64_t>(lead)),
                        std::move(proper));
}

}  // namespace

Element from_canonical(StructurePtr structure, std::int64_t inf, std::vector<Simple> factors) {
  Element g(std::move(structure), inf, std::move(factors));
  assert(is_normal_form(g));
  return g;
}

Element Element::identity(StructurePtr structure) { return Element(std::move(structure), 0, {}); }

Element Element::delta_power(StructurePtr structure, std::int64_t k) {
  return Element(std::move(structure), k, {});
}

Element Element::from_simple(StructurePtr structure, const Simple& s) {
  if (!structure->contains(s)) throw StructureMismatch("simple not in " + structure->descriptor());
  if (structure->is_identity(s)) return identity(std::move(structure));
  if (structure->is_delta(s)) return delta_power(std::move(structure), 1);
  return Element(std::move(structure), 0, {s});
}

Element Element::normalize(StructurePtr structure, std::int64_t delta_power,
                           std::vector<Simple> raw_factors) {
  const GarsideStructure& s = *structure;
  std::vector<Simple> f;
  f.reserve(raw_factors.size());
  for (auto& x : raw_factors) {
    if (!s.contains(x)) throw StructureMismatch("factor not in " + s.descriptor());
    f.push_back(std::move(x));
    sweep_left(s, f, f.size() - 1);
  }
  return canonical(std::move(structure), delta_power, std::move(f));
}

Element Element::from_atoms(StructurePtr structure, std::span<const std::size_t> atom_ids) {
  std::vector<Simple> raw;
  raw.reserve(atom_ids.size());
  for (auto id : atom_ids) raw.push_back(structure->atom(id));
  return normalize(std::move(structure), 0, std::move(raw));
}

bool operator==(const Element& a, const Element& b) {
  return a.inf_ == b.inf_ && a.factors_ == b.factors_ && *a.structure_ == *b.structure_;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (auto c = a.inf_ <=> b.inf_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                b.factors_.begin(), b.factors_.end());
}

std::size_t hash_value(const Element& g) noexcept {
  std::size_t h = std::hash<std::int64_t>{}(g.inf());
  for (const auto& s : g.factors()) h = h * 1000003u ^ hash_value(s);
  return h;
}

Simple simple_meet(const GarsideStructure& s, const Simple& a, const Simple& b) {
  if (!s.contains(a) || !s.contains(b)) throw StructureMismatch("simple not in " + s.descriptor());
  return s.simple_meet(a, b);
}

Simple right_complement(const GarsideStructure& s, const Simple& a) { return s.right_complement(a); }

std::pair<Simple, Simple> make_left_weighted_pair(const GarsideStructure& s, const Simple& a,
                                                  const Simple& b) {
  Simple x = a, y = b;
  fix_pair(s, x, y);
  return {std::move(x), std::move(y)};
}

bool is_left_weighted(const GarsideStructure& s, const Simple& a, const Simple& b) {
  return s.is_identity(s.simple_meet(s.right_complement(a), b));
}

Element multiply(const Element& g, const Element& h) {
  require_same(g, h);
  const GarsideStructure& s = g.structure();
  // Delta^u a Delta^v b = Delta^(u+v) tau^v(a) b.
  std::vector<Simple> f;
  f.reserve(g.factors().size() + h.factors().size());
  for (const auto& a : g.factors()) f.push_back(s.tau_power(a, h.inf()));
  for (const auto& b : h.factors()) {
    f.push_back(b);
    sweep_left(s, f, f.size() - 1);
  }
  return canonical(g.structure_ptr(), checked_add(g.inf(), h.inf()), std::move(f));
}

Element operator*(const Element& g, const Element& h) { return multiply(g, h); }

Element invert(const Element& g) {
  // (Delta^r s_1..s_k)^-1 = Delta^(-r-k) tau^(-k-r)(d s_k) ... tau^(-1-r)(d s_1).
  const GarsideStructure& s = g.structure();
  const std::int64_t r = g.inf();
  const std::int64_t k = g.len();
  std::vector<Simple> f;
  f.reserve(g.factors().size());
  for (std::int64_t i = k; i >= 1; --i) {
    const Simple& si = g.factors()[static_cast<std::size_t>(i - 1)];
    f.push_back(s.tau_power(s.right_complement(si), -i - r));
  }
  return canonical(g.structure_ptr(), checked_add(-r, -k), std::move(f));
}

Element power(const Element& g, std::int64_t n) {
  if (n < 0) {
    if (n == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("power exponent");
    return invert(power(g, -n));
  }
  if (g.factors().empty()) return Element::delta_power(g.structure_ptr(), checked_mul(g.inf(), n));
  Element result = Element::identity(g.structure_ptr());
  Element base = g;
  while (n > 0) {
    if (n & 1) result = multiply(result, base);
    n >>= 1;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

Element tau_element(const Element& g, std::int64_t k) {
  const GarsideStructure& s = g.structure();
  std::vector<Simple> f;
  f.reserve(g.factors().size());
  for (const auto& a : g.factors()) f.push_back(s.tau_power(a, k));
  return from_canonical(g.structure_ptr(), g.inf(), std::move(f));
}

Element conjugate(const Element& g, const Element& w) { return multiply(multiply(invert(w), g), w); }

Element multiply_simple_right(const Element& g, const Simple& x) {
  const GarsideStructure& s = g.structure();
  std::vector<Simple> f = g.factors();
  f.push_back(x);
  sweep_left(s, f, f.size() - 1);
  return canonical(g.structure_ptr(), g.inf(), std::move(f));
}

Element multiply_simple_left(const Simple& x, const Element& g) {
  // x Delta^r t_1..t_k = Delta^r tau^r(x) t_1..t_k.
  const GarsideStructure& s = g.structure();
  std::vector<Simple> f;
  f.reserve(g.factors().size() + 1);
  f.push_back(s.tau_power(x, g.inf()));
  f.insert(f.end(), g.factors().begin(), g.factors().end());
  sweep_right(s, f, 0);
  return canonical(g.structure_ptr(), g.inf(), std::move(f));
}

Element conjugate_by_simple(const Element& g, const Simple& x) {
  // x^-1 = Delta^-1 (Delta x^-1).
  const GarsideStructure& s = g.structure();
  Element right = multiply_simple_right(g, x);
  Element shifted = multiply_simple_left(s.left_complement(x), right);
  return from_canonical(g.structure_ptr(), checked_add(shifted.inf(), -1), shifted.factors());
}

std::int64_t word_length(const Element& g) {
  if (g.inf() >= 0) return g.sup();
  if (g.sup() <= 0) return -g.inf();
  return g.len();
}

Simple lmax(const Element& g) {
  if (g.inf() < 0) throw std::invalid_argument("lmax of a non-positive element");
  const GarsideStructure& s = g.structure();
  if (g.inf() >= 1) return s.delta();
  if (g.factors().empty()) return s.identity();
  return g.factors().front();
}

bool is_normal_form(const Element& g) {
  const GarsideStructure& s = g.structure();
  const auto& f = g.factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!s.contains(f[i]) || s.is_identity(f[i]) || s.is_delta(f[i])) return false;
    if (i + 1 < f.size() && !is_left_weighted(s, f[i], f[i + 1])) return false;
  }
  return true;
}

}  // namespace garside
