#include "bsk/poly.hpp"

#include <algorithm>
#include <unordered_map>

namespace bsk {

Poly::Poly(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(std::move(order)) {
  if (!ring_) throw InvalidInput("polynomial without a ring");
}

Poly Poly::constant(RingPtr ring, const Rational& c, MonomialOrder order) {
  return monomial(ring, Monomial(ring->nvars()), c, std::move(order));
}

Poly Poly::variable(RingPtr ring, std::size_t index, MonomialOrder order) {
  if (index >= ring->nvars()) throw InvalidInput("variable index out of range");
  Monomial m(ring->nvars());
  m.set(index, 1);
  return monomial(std::move(ring), std::move(m), 1, std::move(order));
}

Poly Poly::monomial(RingPtr ring, Monomial m, const Rational& c, MonomialOrder order) {
  if (m.size() != ring->nvars()) throw RingMismatch("monomial length does not match the ring");
  Poly p(std::move(ring), std::move(order));
  Rational r = p.ring_->reduce(c);
  if (r != 0) p.terms_.push_back(Term{std::move(m), std::move(r)});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms, MonomialOrder order) {
  Poly p(std::move(ring), std::move(order));
  for (auto& t : terms) {
    if (t.mono.size() != p.ring_->nvars()) throw RingMismatch("monomial length does not match the ring");
    t.coeff = p.ring_->reduce(t.coeff);
  }
  normalize(*p.ring_, p.order_, terms);
  p.terms_ = std::move(terms);
  return p;
}

void Poly::normalize(const Ring& ring, const MonomialOrder& order, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = ring.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms = std::move(out);
}

void Poly::check_ring(const Poly& other) const {
  if (!ring_->same_as(*other.ring_)) throw RingMismatch("polynomials live in different rings");
}

bool Poly::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

const Term& Poly::leading() const {
  if (terms_.empty()) throw InvalidInput("zero polynomial has no leading term");
  return terms_.front();
}

Degree Poly::degree() const {
  if (terms_.empty()) return Degree::neg_infinity();
  long d = 0;
  for (const auto& t : terms_) d = std::max<long>(d, t.mono.degree());
  return Degree(d);
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

Poly Poly::homogeneous_part(long degree) const {
  Poly r(ring_, order_);
  for (const auto& t : terms_) {
    if (t.mono.degree() == degree) r.terms_.push_back(t);
  }
  return r;
}

Rational Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

bool Poly::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[var] != 0; });
}

Poly Poly::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  Poly r(ring_, order);
  r.terms_ = terms_;
  std::sort(r.terms_.begin(), r.terms_.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return r;
}

Poly Poly::operator+(const Poly& other) const {
  check_ring(other);
  const Poly& rhs = other.order_ == order_ ? other : other.with_order(order_);
  Poly r(ring_, order_);
  r.terms_.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < rhs.terms_.size()) {
    int c;
    if (i == terms_.size()) {
      c = -1;
    } else if (j == rhs.terms_.size()) {
      c = 1;
    } else {
      c = order_.compare(terms_[i].mono, rhs.terms_[j].mono);
    }
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(rhs.terms_[j++]);
    } else {
      Rational s = ring_->add(terms_[i].coeff, rhs.terms_[j].coeff);
      if (s != 0) r.terms_.push_back(Term{terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = ring_->neg(t.coeff);
  return r;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
  check_ring(other);
  if (is_zero() || other.is_zero()) return Poly(ring_, order_);
  if (other.terms_.size() == 1) return mul_term(other.terms_[0].mono, other.terms_[0].coeff);
  if (terms_.size() == 1) return other.with_order(order_).mul_term(terms_[0].mono, terms_[0].coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      Rational c = ring_->mul(a.coeff, b.coeff);
      auto [it, inserted] = acc.try_emplace(a.mono * b.mono, c);
      if (!inserted) it->second = ring_->add(it->second, c);
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back(Term{m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order_.compare(a.mono, b.mono) > 0; });
  Poly r(ring_, order_);
  r.terms_ = std::move(terms);
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Rational cc = ring_->reduce(c);
  if (cc == 0) return Poly(ring_, order_);
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = ring_->mul(t.coeff, cc);
  return r;
}

Poly operator*(const Rational& c, const Poly& p) { return p * c; }

Poly Poly::mul_term(const Monomial& m, const Rational& c) const {
  Rational cc = ring_->reduce(c);
  Poly r(ring_, order_);
  if (cc == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order of the terms.
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, ring_->mul(t.coeff, cc)});
  return r;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(ring_, 1, order_);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = ring_->div(1, leading_coeff());
  return *this * inv;
}

Poly Poly::remap(const RingPtr& target, std::span<const std::optional<std::size_t>> var_map) const {
  if (var_map.size() != ring_->nvars()) throw RingMismatch("variable map length does not match the ring");
  if (target->characteristic() != ring_->characteristic()) throw RingMismatch("coefficient fields differ");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.mono[i] == 0 || !var_map[i]) continue;
      m.set(*var_map[i], m[*var_map[i]] + t.mono[i]);
    }
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return from_terms(target, std::move(terms), order_);
}

Poly Poly::substitute(std::span<const Poly> values) const {
  if (values.size() != ring_->nvars()) throw RingMismatch("substitution length does not match the ring");
  if (values.empty()) return *this;
  const RingPtr& target = values[0].ring();
  std::vector<std::vector<Poly>> powers(values.size());
  Poly result(target, values[0].order());
  for (const auto& t : terms_) {
    Poly term = constant(target, t.coeff, values[0].order());
    for (std::size_t i = 0; i < values.size(); ++i) {
      const int e = t.mono[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, 1, values[0].order()));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * values[i]);
      term = term * pw[e];
    }
    result += term;
  }
  return result;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->nvars()) throw RingMismatch("evaluation point has the wrong dimension");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int k = 0; k < t.mono[i]; ++k) v = ring_->mul(v, point[i]);
    }
    sum = ring_->add(sum, v);
  }
  return sum;
}

bool Poly::operator==(const Poly& other) const {
  if (!ring_->same_as(*other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  const Poly& rhs = other.order_ == order_ ? other : other.with_order(order_);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != rhs.terms_[i].mono || terms_[i].coeff != rhs.terms_[i].coeff) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

RingPtr projective_ring(const RingPtr& affine) {
  if (affine->index_of(kHomogenizingVariable)) {
    throw InvalidInput("affine ring already uses the homogenizing variable name z0");
  }
  return affine->with_prepended({std::string(kHomogenizingVariable)});
}

RingPtr affine_ring(const RingPtr& projective) {
  if (projective->nvars() == 0) throw InvalidInput("projective ring has no homogenizing variable");
  std::vector<std::string> names(projective->names().begin() + 1, projective->names().end());
  return Ring::make(std::move(names), projective->characteristic());
}

Poly homogenize(const Poly& affine_poly, long degree, const RingPtr& projective) {
  const auto& affine = *affine_poly.ring();
  if (projective->nvars() != affine.nvars() + 1) throw RingMismatch("projective ring must have one more variable");
  if (!affine_poly.is_zero() && affine_poly.degree().value() > degree) {
    throw InvalidInput("homogenization degree " + std::to_string(degree) + " is below the polynomial degree " +
                       affine_poly.degree().to_string());
  }
  std::vector<Term> terms;
  terms.reserve(affine_poly.size());
  for (const auto& t : affine_poly.terms()) {
    std::vector<int> e(projective->nvars());
    e[0] = static_cast<int>(degree - t.mono.degree());
    for (std::size_t i = 0; i < affine.nvars(); ++i) e[i + 1] = t.mono[i];
    terms.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return Poly::from_terms(projective, std::move(terms), affine_poly.order());
}

Poly homogenize(const Poly& affine_poly, long degree) {
  return homogenize(affine_poly, degree, projective_ring(affine_poly.ring()));
}

Poly dehomogenize(const Poly& projective_poly, const RingPtr& affine) {
  const auto& proj = *projective_poly.ring();
  if (proj.nvars() != affine->nvars() + 1) throw RingMismatch("affine ring must have one fewer variable");
  std::vector<std::optional<std::size_t>> map(proj.nvars());
  for (std::size_t i = 1; i < proj.nvars(); ++i) map[i] = i - 1;
  return projective_poly.remap(affine, map);
}

Poly dehomogenize(const Poly& projective_poly) {
  return dehomogenize(projective_poly, affine_ring(projective_poly.ring()));
}

}  // namespace bsk
