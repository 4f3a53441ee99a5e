#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "garside/conjugacy.hpp"
#include "garside/element.hpp"
#include "garside/rational.hpp"

namespace garside {

/// Asymptotic inf, sup and canonical length per power: lim inf(g^n)/n etc.
struct TranslationTriple {
  Rational t_inf;
  Rational t_sup;
  Rational t_len;

  friend bool operator==(const TranslationTriple&, const TranslationTriple&) = default;
};

/// m0: least m > 0 with Delta^m central.
struct QuotientContext {
  std::int64_t m0;
};

struct Straightness {
  bool inf_straight;
  bool sup_straight;

  friend bool operator==(const Straightness&, const Straightness&) = default;
};

/// The unique rational with denominator <= max_den in the closed interval
/// [lo, hi], or nullopt if there is none. Throws std::logic_error if several
/// distinct values qualify.
std::optional<Rational> rational_in_interval(const Rational& lo, const Rational& hi,
                                             std::int64_t max_den);

/// Exact t_inf. Uses inf_s(g^(N^2)) and the fact that t_inf has denominator <= N.
Rational t_inf(const Element& g);

TranslationTriple translation_triple(const Element& g);

/// t_D(g): t_sup if inf_s >= 0, -t_inf if sup_s <= 0, else t_len.
Rational translation_number(const Element& g);
/// Same, reusing an already computed triple.
Rational translation_number(const Element& g, const TranslationTriple& t);

Straightness straightness(const Element& g);
/// Whether g is conjugate to an inf-straight (resp. sup-straight) element.
Straightness conjugate_straightness(const Element& g);

QuotientContext delta_central_exponent(const GarsideStructure& s);

/// Translation number of the image of g in G / <Delta^m0>; equals t_len(g).
Rational quotient_translation_number(const Element& g);

}  // namespace garside
