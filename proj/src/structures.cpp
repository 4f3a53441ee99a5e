#include "garside/structures.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace garside {

namespace {

// Permutation braids. A simple s is stored as the map "strand starting at
// position i ends at position s[i]"; the product a.b is then (a.b)[i] =
// b[a[i]] and ||s|| is the inversion count.
class BraidStructure final : public GarsideStructure {
 public:
  explicit BraidStructure(int n) : n_(n) {
    descriptor_ = "braid:" + std::to_string(n);
    identity_ = make(identity_perm());
    Simple::Payload rev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rev[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(n - 1 - i);
    delta_ = make(rev);
    for (int i = 0; i + 1 < n; ++i) {
      atoms_.push_back({static_cast<std::size_t>(i), "a" + std::to_string(i + 1)});
      Simple::Payload p = identity_perm();
      std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i) + 1]);
      atom_simples_.push_back(make(p));
    }
    finalize();
  }

  std::optional<int> tau_order_hint() const override { return n_ > 2 ? 2 : 1; }

  std::optional<std::int64_t> unique_root_exponent() const override {
    // Exponent of S_n: g^r is pure exactly when r kills the underlying permutation.
    std::int64_t r = 1;
    for (int k = 2; k <= n_; ++k) r = std::lcm(r, static_cast<std::int64_t>(k));
    return r;
  }

  Simple simple_meet(const Simple& a, const Simple& b) const override {
    // Greedy: peel off atoms sigma_i dividing both remainders. sigma_i <=_L x
    // iff strands at positions i, i+1 cross in x, i.e. x[i] > x[i+1].
    Simple::Payload meet = identity_perm();
    Simple::Payload ra = a.payload, rb = b.payload;
    for (;;) {
      int i = 0;
      for (; i + 1 < n_; ++i)
        if (ra[i] > ra[i + 1] && rb[i] > rb[i + 1]) break;
      if (i + 1 >= n_) break;
      std::swap(ra[i], ra[i + 1]);
      std::swap(rb[i], rb[i + 1]);
      for (auto& v : meet) {
        if (v == i) v = static_cast<std::int16_t>(i + 1);
        else if (v == i + 1) v = static_cast<std::int16_t>(i);
      }
    }
    return make(meet);
  }

  Simple right_complement(const Simple& s) const override {
    // x[s[j]] = n-1-j.
    Simple::Payload x(s.payload.size());
    for (int j = 0; j < n_; ++j) x[s.payload[j]] = static_cast<std::int16_t>(n_ - 1 - j);
    return make(x, delta_norm() - s.norm);
  }

  Simple left_complement(const Simple& s) const override {
    // y[j] = s^-1[n-1-j].
    Simple::Payload inv = inverse(s.payload), y(s.payload.size());
    for (int j = 0; j < n_; ++j) y[j] = inv[n_ - 1 - j];
    return make(y, delta_norm() - s.norm);
  }

  Simple simple_product(const Simple& a, const Simple& c) const override {
    Simple::Payload p(a.payload.size());
    for (int j = 0; j < n_; ++j) p[j] = c.payload[a.payload[j]];
    assert(inversions(p) == a.norm + c.norm);
    return make(p, a.norm + c.norm);
  }

  Simple simple_left_divide(const Simple& c, const Simple& b) const override {
    // b = c.x, so x[c[j]] = b[j].
    Simple::Payload x(b.payload.size());
    for (int j = 0; j < n_; ++j) x[c.payload[j]] = b.payload[j];
    assert(inversions(x) == b.norm - c.norm);
    return make(x, b.norm - c.norm);
  }

  Simple tau_simple(const Simple& s) const override {
    Simple::Payload t(s.payload.size());
    for (int j = 0; j < n_; ++j) t[j] = static_cast<std::int16_t>(n_ - 1 - s.payload[n_ - 1 - j]);
    return make(t, s.norm);
  }

  std::vector<Simple> enumerate_simples() const override {
    std::vector<Simple> out;
    Simple::Payload p = identity_perm();
    do {
      out.push_back(make(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  bool contains(const Simple& s) const override {
    if (static_cast<int>(s.payload.size()) != n_) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (auto v : s.payload) {
      if (v < 0 || v >= n_ || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
    }
    return inversions(s.payload) == s.norm;
  }

  Simple simple_from_payload(Simple::Payload payload) const override { return make(std::move(payload)); }

 private:
  Simple::Payload identity_perm() const {
    Simple::Payload p(static_cast<std::size_t>(n_));
    std::iota(p.begin(), p.end(), std::int16_t{0});
    return p;
  }

  static Simple::Payload inverse(const Simple::Payload& p) {
    Simple::Payload inv(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) inv[static_cast<std::size_t>(p[j])] = static_cast<std::int16_t>(j);
    return inv;
  }

  static int inversions(const Simple::Payload& p) {
    int count = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++count;
    return count;
  }

  static Simple make(Simple::Payload p) {
    int norm = inversions(p);
    return Simple{std::move(p), norm};
  }
  static Simple make(Simple::Payload p, int norm) { return Simple{std::move(p), norm}; }

  int n_;
};

// Payload {tag, exponent}: tag 0 = 1, 1 = x^e, 2 = y^e, 3 = Delta.
class TorusStructure final : public GarsideStructure {
 public:
  TorusStructure(int n, int m) : n_(n), m_(m) {
    descriptor_ = "torus:" + std::to_string(n) + ":" + std::to_string(m);
    identity_ = make(kOne, 0);
    delta_ = make(kDelta, 0);
    atoms_ = {{0, "x"}, {1, "y"}};
    atom_simples_ = {make(kX, 1), make(kY, 1)};
    finalize();
  }

  std::optional<int> tau_order_hint() const override { return 1; }

  Simple simple_meet(const Simple& a, const Simple& b) const override {
    if (tag(a) == kDelta) return b;
    if (tag(b) == kDelta) return a;
    if (tag(a) == kOne || tag(b) == kOne || tag(a) != tag(b)) return identity_;
    return make(tag(a), std::min(exp(a), exp(b)));
  }

  Simple right_complement(const Simple& s) const override {
    switch (tag(s)) {
      case kOne: return delta_;
      case kDelta: return identity_;
      default: return make(tag(s), chain(tag(s)) - exp(s));
    }
  }

  Simple left_complement(const Simple& s) const override { return right_complement(s); }

  Simple simple_product(const Simple& a, const Simple& c) const override {
    if (tag(c) == kOne) return a;
    if (tag(a) == kOne) return c;
    assert(tag(a) == tag(c) && exp(a) + exp(c) <= chain(tag(a)));
    return make(tag(a), exp(a) + exp(c));
  }

  Simple simple_left_divide(const Simple& c, const Simple& b) const override {
    if (tag(c) == kOne) return b;
    if (tag(b) == kDelta) {
      if (tag(c) == kDelta) return identity_;
      return make(tag(c), chain(tag(c)) - exp(c));
    }
    assert(tag(b) == tag(c) && exp(c) <= exp(b));
    return make(tag(b), exp(b) - exp(c));
  }

  Simple tau_simple(const Simple& s) const override { return s; }

  std::vector<Simple> enumerate_simples() const override {
    std::vector<Simple> out{identity_};
    for (int i = 1; i < n_; ++i) out.push_back(make(kX, i));
    for (int j = 1; j < m_; ++j) out.push_back(make(kY, j));
    out.push_back(delta_);
    return out;
  }

  bool contains(const Simple& s) const override {
    if (s.payload.size() != 2) return false;
    Simple canon;
    switch (tag(s)) {
      case kOne: canon = identity_; break;
      case kDelta: canon = delta_; break;
      case kX:
      case kY:
        if (exp(s) <= 0 || exp(s) >= chain(tag(s))) return false;
        canon = make(tag(s), exp(s));
        break;
      default: return false;
    }
    return canon == s && canon.norm == s.norm;
  }

  Simple simple_from_payload(Simple::Payload payload) const override {
    return make(payload[0], payload[1]);
  }

 private:
  static constexpr std::int16_t kOne = 0, kX = 1, kY = 2, kDelta = 3;

  static std::int16_t tag(const Simple& s) { return s.payload[0]; }
  static int exp(const Simple& s) { return s.payload[1]; }
  int chain(std::int16_t t) const { return t == kX ? n_ : m_; }

  Simple make(std::int16_t t, int e) const {
    // x^N and y^M are both Delta.
    if ((t == kX || t == kY) && e == chain(t)) t = kDelta;
    if ((t == kX || t == kY) && e == 0) t = kOne;
    int norm = 0;
    if (t == kDelta) norm = std::max(n_, m_);
    else if (t != kOne) norm = e;
    Simple s;
    s.payload = {t, static_cast<std::int16_t>(t == kX || t == kY ? e : 0)};
    s.norm = norm;
    return s;
  }

  int n_, m_;
};

class ProductStructure final : public GarsideStructure {
 public:
  ProductStructure(StructurePtr left, StructurePtr right)
      : left_(std::move(left)), right_(std::move(right)) {
    descriptor_ = "product:(" + left_->descriptor() + "," + right_->descriptor() + ")";
    width_ = left_->identity().payload.size();
    identity_ = join(left_->identity(), right_->identity());
    delta_ = join(left_->delta(), right_->delta());
    for (const auto& a : left_->atoms()) {
      atoms_.push_back({atoms_.size(), "L." + a.name});
      atom_simples_.push_back(join(left_->atom(a.id), right_->identity()));
    }
    for (const auto& a : right_->atoms()) {
      atoms_.push_back({atoms_.size(), "R." + a.name});
      atom_simples_.push_back(join(left_->identity(), right_->atom(a.id)));
    }
    finalize();
  }

  std::optional<int> tau_order_hint() const override {
    auto a = left_->tau_order_hint(), b = right_->tau_order_hint();
    if (!a || !b) return std::nullopt;
    return std::lcm(*a, *b);
  }

  std::optional<std::int64_t> unique_root_exponent() const override {
    // G0 = G0_left x G0_right inherits unique roots componentwise.
    auto a = left_->unique_root_exponent(), b = right_->unique_root_exponent();
    if (!a || !b) return std::nullopt;
    return std::lcm(*a, *b);
  }

  Simple simple_meet(const Simple& a, const Simple& b) const override {
    return join(left_->simple_meet(l(a), l(b)), right_->simple_meet(r(a), r(b)));
  }
  Simple right_complement(const Simple& s) const override {
    return join(left_->right_complement(l(s)), right_->right_complement(r(s)));
  }
  Simple left_complement(const Simple& s) const override {
    return join(left_->left_complement(l(s)), right_->left_complement(r(s)));
  }
  Simple simple_product(const Simple& a, const Simple& c) const override {
    return join(left_->simple_product(l(a), l(c)), right_->simple_product(r(a), r(c)));
  }
  Simple simple_left_divide(const Simple& c, const Simple& b) const override {
    return join(left_->simple_left_divide(l(c), l(b)), right_->simple_left_divide(r(c), r(b)));
  }
  Simple tau_simple(const Simple& s) const override {
    return join(left_->tau_simple(l(s)), right_->tau_simple(r(s)));
  }

  std::vector<Simple> enumerate_simples() const override {
    std::vector<Simple> out;
    auto ls = left_->enumerate_simples();
    auto rs = right_->enumerate_simples();
    out.reserve(ls.size() * rs.size());
    for (const auto& a : ls)
      for (const auto& b : rs) out.push_back(join(a, b));
    return out;
  }

  bool contains(const Simple& s) const override {
    if (s.payload.size() != identity_.payload.size()) return false;
    Simple a = l(s), b = r(s);
    if (!left_->contains(a) || !right_->contains(b)) return false;
    return s.norm == a.norm + b.norm;
  }

  Simple simple_from_payload(Simple::Payload payload) const override {
    Simple s{std::move(payload), 0};
    return join(l(s), r(s));
  }

 private:
  Simple l(const Simple& s) const {
    return left_->simple_from_payload(
        Simple::Payload(s.payload.begin(), s.payload.begin() + static_cast<std::ptrdiff_t>(width_)));
  }
  Simple r(const Simple& s) const {
    return right_->simple_from_payload(
        Simple::Payload(s.payload.begin() + static_cast<std::ptrdiff_t>(width_), s.payload.end()));
  }

  static Simple join(const Simple& a, const Simple& b) {
    Simple out;
    out.payload.reserve(a.payload.size() + b.payload.size());
    out.payload.assign(a.payload.begin(), a.payload.end());
    out.payload.insert(out.payload.end(), b.payload.begin(), b.payload.end());
    out.norm = a.norm + b.norm;
    return out;
  }

  StructurePtr left_, right_;
  std::size_t width_ = 0;
};

}  // namespace

StructurePtr braid_structure(int strands, int max_strands) {
  if (strands < 2 || strands > max_strands)
    throw std::out_of_range("braid strand count must be in [2, " + std::to_string(max_strands) + "]");
  return std::make_shared<BraidStructure>(strands);
}

StructurePtr torus_structure(int x_exponent, int y_exponent) {
  if (x_exponent < 2 || y_exponent < 2)
    throw std::out_of_range("torus exponents must be at least 2");
  if (x_exponent > kMaxTorusExponent || y_exponent > kMaxTorusExponent)
    throw std::out_of_range("torus exponents must be at most " + std::to_string(kMaxTorusExponent));
  return std::make_shared<TorusStructure>(x_exponent, y_exponent);
}

StructurePtr product_structure(StructurePtr left, StructurePtr right) {
  if (!left || !right) throw std::invalid_argument("null component structure");
  return std::make_shared<ProductStructure>(std::move(left), std::move(right));
}

}  // namespace garside
