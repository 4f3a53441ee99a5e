#include "garside/translation.hpp"

#include <stdexcept>
#include <vector>

namespace garside {

std::optional<Rational> rational_in_interval(const Rational& lo, const Rational& hi,
                                             std::int64_t max_den) {
  if (hi < lo) throw std::invalid_argument("rational_in_interval: empty interval");
  if (max_den < 1) throw std::invalid_argument("rational_in_interval: max_den < 1");
  std::optional<Rational> found;
  for (std::int64_t q = 1; q <= max_den; ++q) {
    // Smallest p with p/q >= lo.
    Rational candidate((lo * Rational(q)).ceil(), q);
    if (candidate > hi) continue;
    if (found && !(*found == candidate))
      throw std::logic_error("rational_in_interval: interval [" + lo.to_string() + ", " +
                             hi.to_string() + "] holds several candidates");
    // A second numerator for the same q would also violate uniqueness.
    Rational next = candidate + Rational(1, q);
    if (next <= hi)
      throw std::logic_error("rational_in_interval: interval [" + lo.to_string() + ", " +
                             hi.to_string() + "] holds several candidates");
    found = candidate;
  }
  return found;
}

Rational t_inf(const Element& g) {
  const std::int64_t n_delta = g.structure().delta_norm();
  if (n_delta == 1) {
    // Infinite cyclic group on Delta.
    return Rational(g.inf());
  }
  const std::int64_t n = n_delta * n_delta;
  const std::int64_t a = summit(power(g, n)).inf_s;
  auto value = rational_in_interval(Rational(a, n), Rational(a + 1, n), n_delta);
  if (!value) throw std::logic_error("t_inf: no rational with bounded denominator in bracket");
  return *value;
}

TranslationTriple translation_triple(const Element& g) {
  Rational lo = t_inf(g);
  Rational hi = -t_inf(invert(g));
  return {lo, hi, hi - lo};
}

Rational translation_number(const Element& g, const TranslationTriple& t) {
  SummitData s = summit(g);
  if (s.inf_s >= 0) return t.t_sup;
  if (s.sup_s <= 0) return -t.t_inf;
  return t.t_len;
}

Rational translation_number(const Element& g) { return translation_number(g, translation_triple(g)); }

Straightness straightness(const Element& g) {
  const std::int64_t n = g.structure().delta_norm();
  Element p = power(g, n);
  return {p.inf() == n * g.inf(), p.sup() == n * g.sup()};
}

Straightness conjugate_straightness(const Element& g) {
  const std::int64_t n = g.structure().delta_norm();
  SummitData base = summit(g);
  SummitData raised = summit(power(g, n));
  return {raised.inf_s == n * base.inf_s, raised.sup_s == n * base.sup_s};
}

QuotientContext delta_central_exponent(const GarsideStructure& s) {
  // Multiplicative order of tau on the atoms.
  std::int64_t m = 1;
  std::vector<Simple> current;
  for (const auto& a : s.atoms()) current.push_back(s.tau_simple(s.atom(a.id)));
  for (;;) {
    bool fixed = true;
    for (std::size_t i = 0; i < current.size(); ++i)
      if (!(current[i] == s.atom(i))) fixed = false;
    if (fixed) return {m};
    for (auto& c : current) c = s.tau_simple(c);
    ++m;
  }
}

Rational quotient_translation_number(const Element& g) { return translation_triple(g).t_len; }

}  // namespace garside
