#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "garside/errors.hpp"
#include "garside/structures.hpp"
#include "support.hpp"

using namespace garside;
using garside::test::as_simple;
using garside::test::Sampler;
using garside::test::word;

namespace {

// Plain permutation model of B_n simples, used to check divisibility by
// length additivity: c <=_L s iff ||c|| + ||c^-1 s|| = ||s||.
using Perm = std::vector<int>;

Perm perm_of(const Simple& s) { return Perm(s.payload.begin(), s.payload.end()); }

int inversions(const Perm& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) n += p[i] > p[j];
  return n;
}

// (a.b)[i] = b[a[i]]: strands move by a, then by b.
Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

bool perm_left_divides(const Perm& c, const Perm& s) {
  return inversions(c) + inversions(compose(inverse(c), s)) == inversions(s);
}

Perm perm_meet(const std::vector<Perm>& all, const Perm& a, const Perm& b) {
  Perm best;
  int best_len = -1;
  for (const auto& c : all)
    if (perm_left_divides(c, a) && perm_left_divides(c, b) && inversions(c) > best_len) {
      best = c;
      best_len = inversions(c);
    }
  return best;
}

// Image in S_n: Delta maps to the reversal.
Perm permutation_image(const Element& g) {
  const auto& s = g.structure();
  Perm p = perm_of(s.identity());
  Perm delta = perm_of(s.delta());
  std::int64_t r = ((g.inf() % 2) + 2) % 2;
  for (std::int64_t i = 0; i < r; ++i) p = compose(p, delta);
  for (const auto& f : g.factors()) p = compose(p, perm_of(f));
  return p;
}

// Abelianization B_n -> Z: each atom counts 1, Delta counts N.
std::int64_t exponent_sum(const Element& g) {
  std::int64_t e = g.inf() * g.structure().delta_norm();
  for (const auto& f : g.factors()) e += f.norm;
  return e;
}

}  // namespace

TEST(SimpleMeet, MatchesDivisorEnumerationOnB3AndB4) {
  for (int n : {3, 4}) {
    auto s = braid_structure(n);
    auto all = s->enumerate_simples();
    std::vector<Perm> perms;
    for (const auto& x : all) perms.push_back(perm_of(x));
    for (const auto& a : all)
      for (const auto& b : all)
        EXPECT_EQ(perm_of(simple_meet(*s, a, b)), perm_meet(perms, perm_of(a), perm_of(b)));
  }
}

TEST(SimpleMeet, B3Fixtures) {
  auto b3 = braid_structure(3);
  EXPECT_EQ(simple_meet(*b3, as_simple(b3, "a2 a1"), as_simple(b3, "a1 a2")), b3->identity());
  for (const auto& s : b3->enumerate_simples()) EXPECT_EQ(simple_meet(*b3, s, s), s);
}

TEST(SimpleMeet, TorusChains) {
  auto t = torus_structure(5, 3);
  EXPECT_EQ(simple_meet(*t, as_simple(t, "x^2"), as_simple(t, "x^4")), as_simple(t, "x^2"));
  EXPECT_EQ(simple_meet(*t, as_simple(t, "x^2"), as_simple(t, "y^2")), t->identity());
}

TEST(SimpleMeet, RejectsForeignSimples) {
  auto b3 = braid_structure(3);
  auto b4 = braid_structure(4);
  EXPECT_THROW(simple_meet(*b3, b4->atom(0), b3->atom(0)), StructureMismatch);
}

TEST(RightComplement, Fixtures) {
  auto b3 = braid_structure(3);
  Simple d = right_complement(*b3, b3->atom(0));
  EXPECT_EQ(d, as_simple(b3, "a2 a1"));
  // sigma1 * (sigma2 sigma1) is the reversal permutation.
  EXPECT_EQ(compose(perm_of(b3->atom(0)), perm_of(d)), perm_of(b3->delta()));
  EXPECT_EQ(right_complement(*b3, b3->identity()), b3->delta());
  EXPECT_EQ(right_complement(*b3, b3->delta()), b3->identity());
}

TEST(RightComplement, NormsAreComplementaryInHomogeneousStructures) {
  for (auto s : {braid_structure(3), braid_structure(4), torus_structure(3, 3)})
    for (const auto& x : s->enumerate_simples())
      EXPECT_EQ(right_complement(*s, x).norm + x.norm, s->delta_norm()) << s->descriptor();
}

TEST(RightComplement, TorusNormsWhenExponentsDiffer) {
  // torus(5,3) is not homogeneous: ||y|| + ||y^2|| = 3 < ||Delta|| = 5.
  auto t = torus_structure(5, 3);
  for (const auto& x : t->enumerate_simples()) {
    int total = right_complement(*t, x).norm + x.norm;
    EXPECT_LE(total, t->delta_norm());
    if (x.payload[0] != 2) EXPECT_EQ(total, t->delta_norm());
    else EXPECT_EQ(total, 3);
  }
}

TEST(LeftWeightedPair, Fixtures) {
  auto b3 = braid_structure(3);
  auto [a, b] = make_left_weighted_pair(*b3, as_simple(b3, "a1 a2"), as_simple(b3, "a1"));
  EXPECT_EQ(a, b3->delta());
  EXPECT_EQ(b, b3->identity());

  Simple s1 = as_simple(b3, "a1"), s12 = as_simple(b3, "a1 a2");
  auto [c, d] = make_left_weighted_pair(*b3, s1, s12);
  EXPECT_EQ(c, s1);
  EXPECT_EQ(d, s12);

  auto [e, f] = make_left_weighted_pair(*b3, b3->identity(), s12);
  EXPECT_EQ(e, s12);
  EXPECT_EQ(f, b3->identity());
}

TEST(Normalize, Fixtures) {
  auto b3 = braid_structure(3);
  Element g = Element::normalize(b3, 0, {b3->atom(0), b3->atom(0), b3->atom(1)});
  EXPECT_EQ(g.inf(), 0);
  ASSERT_EQ(g.factors().size(), 2u);
  EXPECT_EQ(g.factors()[0], as_simple(b3, "a1"));
  EXPECT_EQ(g.factors()[1], as_simple(b3, "a1 a2"));
  EXPECT_TRUE(is_left_weighted(*b3, right_complement(*b3, g.factors()[0]), b3->identity()));
  EXPECT_EQ(simple_meet(*b3, right_complement(*b3, g.factors()[0]), g.factors()[1]), b3->identity());

  Element d = Element::normalize(b3, 0, {b3->atom(0), b3->atom(1), b3->atom(0)});
  EXPECT_EQ(d, Element::delta_power(b3, 1));

  EXPECT_EQ(Element::normalize(b3, 0, {}), Element::identity(b3));

  auto t = torus_structure(5, 3);
  std::vector<Simple> x7(7, t->atom(0));
  Element x = Element::normalize(t, 0, x7);
  EXPECT_EQ(x.inf(), 1);
  ASSERT_EQ(x.factors().size(), 1u);
  EXPECT_EQ(x.factors()[0], as_simple(t, "x^2"));
}

TEST(Normalize, AbsorbsDeltaFactorsWithTau) {
  auto b3 = braid_structure(3);
  // sigma1 . Delta = Delta . tau(sigma1) = Delta sigma2.
  Element g = Element::normalize(b3, 0, {b3->atom(0), b3->delta(), b3->identity()});
  EXPECT_EQ(g.inf(), 1);
  ASSERT_EQ(g.factors().size(), 1u);
  EXPECT_EQ(g.factors()[0], b3->atom(1));
}

TEST(Multiply, Fixtures) {
  auto b3 = braid_structure(3);
  EXPECT_EQ(word(b3, "a1") * word(b3, "a2 a1"), Element::delta_power(b3, 1));
  Element g = word(b3, "a1 a1 a2 D^-2");
  EXPECT_EQ(g * Element::identity(b3), g);
  EXPECT_EQ(Element::identity(b3) * g, g);

  auto t = torus_structure(5, 3);
  EXPECT_EQ(word(t, "x^3") * word(t, "x^4"), Element::normalize(t, 1, {as_simple(t, "x^2")}));
}

TEST(Multiply, RejectsMixedStructures) {
  EXPECT_THROW(word(braid_structure(3), "a1") * word(braid_structure(4), "a1"), StructureMismatch);
}

TEST(Invert, Fixtures) {
  auto b3 = braid_structure(3);
  Element inv = invert(word(b3, "a1"));
  EXPECT_EQ(inv.inf(), -1);
  ASSERT_EQ(inv.factors().size(), 1u);
  EXPECT_EQ(inv.factors()[0], as_simple(b3, "a1 a2"));
  EXPECT_EQ(invert(Element::delta_power(b3, 1)), Element::delta_power(b3, -1));
  EXPECT_EQ(invert(Element::identity(b3)), Element::identity(b3));
}

TEST(Power, Fixtures) {
  auto b3 = braid_structure(3);
  EXPECT_EQ(power(word(b3, "a1 a2"), 3), Element::delta_power(b3, 2));
  Element g = word(b3, "a1 a2^-1 a1");
  EXPECT_EQ(power(g, 1), g);
  EXPECT_EQ(power(g, 0), Element::identity(b3));
  EXPECT_EQ(power(g, -3), invert(power(g, 3)));

  auto t = torus_structure(5, 3);
  EXPECT_EQ(power(word(t, "x"), 25), Element::delta_power(t, 5));
}

TEST(WordLength, ThreeCases) {
  auto b3 = braid_structure(3);
  EXPECT_EQ(word_length(word(b3, "D a2")), 2);
  EXPECT_EQ(word_length(word(b3, "a1^-1")), 1);
  Element mixed = Element::normalize(b3, -1, {as_simple(b3, "a1"), as_simple(b3, "a1 a2")});
  ASSERT_EQ(mixed.inf(), -1);
  ASSERT_EQ(mixed.sup(), 1);
  EXPECT_EQ(word_length(mixed), 2);
}

TEST(TauElement, Fixtures) {
  auto b3 = braid_structure(3);
  EXPECT_EQ(tau_element(word(b3, "a1"), 1), word(b3, "a2"));
  EXPECT_EQ(tau_element(word(b3, "a1"), 1), conjugate(word(b3, "a1"), Element::delta_power(b3, 1)));
  EXPECT_EQ(tau_element(Element::delta_power(b3, 4), 1), Element::delta_power(b3, 4));
  auto t = torus_structure(5, 3);
  EXPECT_EQ(tau_element(word(t, "x^2"), 1), word(t, "x^2"));
  EXPECT_EQ(t->tau_simple(t->atom(0)), t->atom(0));
  EXPECT_EQ(t->tau_simple(t->atom(1)), t->atom(1));
}

TEST(Lmax, Fixtures) {
  auto b3 = braid_structure(3);
  EXPECT_EQ(lmax(word(b3, "a1 a1 a2")), as_simple(b3, "a1"));
  EXPECT_EQ(lmax(word(b3, "D a1 a2 a2")), b3->delta());
  auto t = torus_structure(5, 3);
  EXPECT_EQ(lmax(word(t, "x^3")), as_simple(t, "x^3"));
  EXPECT_EQ(lmax(Element::identity(t)), t->identity());
  EXPECT_THROW(lmax(word(b3, "a1^-1")), std::invalid_argument);
}

class CoreProperties : public ::testing::TestWithParam<const char*> {
 protected:
  StructurePtr s = cli::parse_structure(GetParam());
  Sampler rng{static_cast<std::uint64_t>(std::hash<std::string>{}(GetParam()))};
};

TEST_P(CoreProperties, GroupLawsAndNormalFormValidity) {
  for (int i = 0; i < 150; ++i) {
    Element g = rng.atom_word(s, rng.uniform(0, 8), 0.4);
    Element h = rng.atom_word(s, rng.uniform(0, 8), 0.4);
    Element k = rng.atom_word(s, rng.uniform(0, 5), 0.4);
    for (const Element* e : {&g, &h, &k}) ASSERT_TRUE(is_normal_form(*e));
    Element gh = g * h;
    EXPECT_TRUE(is_normal_form(gh));
    EXPECT_TRUE(is_normal_form(invert(g)));
    EXPECT_TRUE(g * invert(g) == Element::identity(s));
    EXPECT_TRUE(invert(g) * g == Element::identity(s));
    EXPECT_EQ((g * h) * k, g * (h * k));
    EXPECT_EQ(Element::normalize(s, g.inf(), g.factors()), g);
    EXPECT_EQ(conjugate_by_simple(g, s->atom(0)), conjugate(g, Element::from_simple(s, s->atom(0))));
    // inf(gh) >= inf g + inf h.
    EXPECT_GE(gh.inf(), g.inf() + h.inf());
    // |inf(h^-1 g h) - inf(g)| <= len(h).
    EXPECT_LE(std::abs(conjugate(g, h).inf() - g.inf()), h.len());
    // tau preserves inf, sup, len.
    Element tg = tau_element(g, 1);
    EXPECT_EQ(tg.inf(), g.inf());
    EXPECT_EQ(tg.len(), g.len());
    EXPECT_EQ(tau_element(g, s->tau_order()), g);
  }
}

TEST_P(CoreProperties, LmaxLaws) {
  const auto simples = s->enumerate_simples();
  for (int i = 0; i < 150; ++i) {
    Element a = rng.positive(s, rng.uniform(0, 4));
    Element b = rng.positive(s, rng.uniform(0, 4));
    EXPECT_EQ(lmax(a * b), lmax(a * Element::from_simple(s, lmax(b))));
    EXPECT_EQ(lmax(tau_element(a, 1)), s->tau_simple(lmax(a)));
    const Simple& x = simples[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(simples.size()) - 1))];
    Simple head = lmax(Element::from_simple(s, x) * a);
    EXPECT_EQ(simple_meet(*s, x, head), x);
  }
}

TEST_P(CoreProperties, WordProductMatchesNormalize) {
  for (int i = 0; i < 100; ++i) {
    std::vector<std::size_t> ids;
    for (int k = 0, n = static_cast<int>(rng.uniform(0, 10)); k < n; ++k)
      ids.push_back(static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(s->atoms().size()) - 1)));
    Element by_mult = Element::identity(s);
    for (auto id : ids) by_mult = by_mult * Element::from_simple(s, s->atom(id));
    EXPECT_EQ(Element::from_atoms(s, ids), by_mult);
  }
}

INSTANTIATE_TEST_SUITE_P(Structures, CoreProperties,
                         ::testing::Values("braid:3", "braid:4", "braid:5", "torus:5:3", "torus:2:3",
                                           "product:(torus:2:3,torus:2:3)", "product:(braid:3,torus:3:2)"),
                         [](const auto& info) {
                           std::string name = info.param;
                           for (auto& c : name)
                             if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                           return name;
                         });

TEST(CoreBraidHomomorphisms, PermutationAndExponentSum) {
  Sampler rng(99);
  for (int n : {3, 4, 5}) {
    auto s = braid_structure(n);
    for (int i = 0; i < 200; ++i) {
      Element g = rng.atom_word(s, rng.uniform(0, 10), 0.5);
      Element h = rng.atom_word(s, rng.uniform(0, 10), 0.5);
      EXPECT_EQ(permutation_image(g * h), compose(permutation_image(g), permutation_image(h)));
      EXPECT_EQ(exponent_sum(g * h), exponent_sum(g) + exponent_sum(h));
      EXPECT_EQ(exponent_sum(invert(g)), -exponent_sum(g));
    }
  }
}
