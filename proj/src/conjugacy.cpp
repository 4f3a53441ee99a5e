#include "garside/conjugacy.hpp"

#include <deque>
#include <stdexcept>
#include <string>

#include "garside/errors.hpp"

namespace garside {

namespace {

Element simple_element(const Element& like, const Simple& s) {
  return Element::from_simple(like.structure_ptr(), s);
}

// Raises inf by cycling until N consecutive cyclings fail to, then lowers
// sup by decycling likewise; repeats until neither phase improves. Each phase
// resumes from its last improving state, so unproductive steps never enter
// the witness.
SummitData run_summit(const Element& g) {
  const std::int64_t patience = g.structure().delta_norm();
  Element current = g;
  Element witness = Element::identity(g.structure_ptr());

  auto phase = [&](auto step, auto better) {
    bool improved_any = false;
    Element probe = current;
    Element probe_witness = witness;
    std::int64_t misses = 0;
    while (probe.len() > 0 && misses < patience) {
      ConjugationStep next = step(probe);
      probe_witness = multiply(probe_witness, next.conjugator);
      probe = std::move(next.result);
      if (better(probe, current)) {
        current = probe;
        witness = probe_witness;
        misses = 0;
        improved_any = true;
      } else {
        ++misses;
      }
    }
    return improved_any;
  };
  auto raises_inf = [](const Element& a, const Element& b) { return a.inf() > b.inf(); };
  auto lowers_sup = [](const Element& a, const Element& b) { return a.sup() < b.sup(); };

  for (;;) {
    bool a = phase(cycling, raises_inf);
    bool b = phase(decycling, lowers_sup);
    if (!a && !b) break;
  }
  return SummitData{current.inf(), current.sup(), current, witness};
}

}  // namespace

std::vector<Element> SuperSummitSet::elements() const {
  std::vector<Element> out;
  out.reserve(members.size());
  for (const auto& [h, c] : members) out.push_back(h);
  return out;
}

ConjugationStep cycling(const Element& g) {
  if (g.factors().empty()) return {g, Element::identity(g.structure_ptr())};
  const GarsideStructure& s = g.structure();
  Simple a = s.tau_power(g.factors().front(), -g.inf());
  std::vector<Simple> rest(g.factors().begin() + 1, g.factors().end());
  Element tail = from_canonical(g.structure_ptr(), g.inf(), std::move(rest));
  return {multiply_simple_right(tail, a), simple_element(g, a)};
}

ConjugationStep decycling(const Element& g) {
  if (g.factors().empty()) return {g, Element::identity(g.structure_ptr())};
  const Simple& last = g.factors().back();
  std::vector<Simple> rest(g.factors().begin(), g.factors().end() - 1);
  Element head = from_canonical(g.structure_ptr(), g.inf(), std::move(rest));
  return {multiply_simple_left(last, head), invert(simple_element(g, last))};
}

SummitData summit(const Element& g) { return run_summit(g); }

SuperSummitSet super_summit_set(const Element& g, std::size_t cap) {
  SuperSummitSet out{summit(g), {}};
  const Element& rep = out.summit.representative;
  const std::vector<Simple> simples = g.structure().enumerate_simples();

  out.members.emplace(rep, Element::identity(g.structure_ptr()));
  std::deque<Element> frontier{rep};
  while (!frontier.empty()) {
    Element h = std::move(frontier.front());
    frontier.pop_front();
    const Element to_h = out.members.at(h);
    for (const auto& s : simples) {
      if (g.structure().is_identity(s)) continue;
      Element c = conjugate_by_simple(h, s);
      if (c.inf() != out.summit.inf_s || c.sup() != out.summit.sup_s) continue;
      if (out.members.count(c)) continue;
      if (out.members.size() >= cap)
        throw ResourceLimit("super summit set exceeds cap of " + std::to_string(cap) + " elements");
      out.members.emplace(c, multiply(to_h, simple_element(g, s)));
      frontier.push_back(std::move(c));
    }
  }
  return out;
}

ConjugacyTester::ConjugacyTester(Element target, std::size_t cap)
    : target_(std::move(target)), cap_(cap), summit_(summit(target_)) {}

std::optional<ConjugacyWitness> ConjugacyTester::conjugator_to_target(const Element& h) {
  if (!(h.structure() == target_.structure()))
    throw StructureMismatch("conjugacy test across structures");
  // inf(h) <= inf_s and sup(h) >= sup_s hold for every conjugate of the target.
  if (h.inf() > summit_.inf_s || h.sup() < summit_.sup_s) return std::nullopt;
  SummitData hs = summit(h);
  if (hs.inf_s != summit_.inf_s || hs.sup_s != summit_.sup_s) return std::nullopt;
  if (!sss_) {
    sss_ = super_summit_set(target_, cap_);
  }
  auto it = sss_->members.find(hs.representative);
  if (it == sss_->members.end()) return std::nullopt;
  // wt^-1 t wt = rep_t, c^-1 rep_t c = rep_h, wh^-1 h wh = rep_h;
  // so W = wh c^-1 wt^-1 gives W^-1 h W = t.
  Element w = multiply(multiply(hs.witness, invert(it->second)), invert(sss_->summit.witness));
  if (!(conjugate(h, w) == target_)) throw std::logic_error("conjugacy witness failed verification");
  return ConjugacyWitness{std::move(w)};
}

std::optional<ConjugacyWitness> are_conjugate(const Element& g, const Element& h, std::size_t cap) {
  if (!(g.structure() == h.structure())) throw StructureMismatch("conjugacy test across structures");
  ConjugacyTester tester(h, cap);
  auto w = tester.conjugator_to_target(g);
  if (!w) return std::nullopt;
  return w;
}

}  // namespace garside
