#include "bsk/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bsk/error.hpp"

namespace bsk {

Ring::Ring(std::vector<std::string> names, unsigned long characteristic)
    : names_(std::move(names)), characteristic_(characteristic), modulus_(characteristic) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InvalidInput("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw InvalidInput("duplicate variable '" + names_[i] + "'");
    }
  }
  if (characteristic_ != 0 && mpz_probab_prime_p(modulus_.get_mpz_t(), 30) == 0) {
    throw InvalidInput("characteristic " + std::to_string(characteristic_) + " is not prime");
  }
}

RingPtr Ring::make(std::vector<std::string> names, unsigned long characteristic) {
  return std::make_shared<const Ring>(std::move(names), characteristic);
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool Ring::same_as(const Ring& other) const noexcept {
  return this == &other || (characteristic_ == other.characteristic_ && names_ == other.names_);
}

RingPtr Ring::with_prepended(const std::vector<std::string>& names) const {
  std::vector<std::string> all = names;
  all.insert(all.end(), names_.begin(), names_.end());
  return make(std::move(all), characteristic_);
}

RingPtr Ring::with_appended(const std::vector<std::string>& names) const {
  std::vector<std::string> all = names_;
  all.insert(all.end(), names.begin(), names.end());
  return make(std::move(all), characteristic_);
}

RingPtr Ring::with_characteristic(unsigned long p) const { return make(names_, p); }

Rational Ring::reduce(const Rational& c) const {
  if (characteristic_ == 0) return c;
  Integer num = c.get_num() % modulus_;
  Integer den = c.get_den() % modulus_;
  if (den == 0) throw InvalidInput("denominator divisible by the characteristic");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t());
  Integer r = (num * inv) % modulus_;
  if (r < 0) r += modulus_;
  return Rational(r);
}

Rational Ring::add(const Rational& a, const Rational& b) const {
  if (characteristic_ == 0) return a + b;
  Integer r = (a.get_num() + b.get_num()) % modulus_;
  return Rational(r);
}

Rational Ring::sub(const Rational& a, const Rational& b) const {
  if (characteristic_ == 0) return a - b;
  Integer r = (a.get_num() - b.get_num()) % modulus_;
  if (r < 0) r += modulus_;
  return Rational(r);
}

Rational Ring::mul(const Rational& a, const Rational& b) const {
  if (characteristic_ == 0) return a * b;
  Integer r = (a.get_num() * b.get_num()) % modulus_;
  return Rational(r);
}

Rational Ring::div(const Rational& a, const Rational& b) const {
  if (b == 0) throw InvalidInput("division by zero coefficient");
  if (characteristic_ == 0) return a / b;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), b.get_num_mpz_t(), modulus_.get_mpz_t());
  Integer r = (a.get_num() * inv) % modulus_;
  return Rational(r);
}

Rational Ring::neg(const Rational& a) const {
  if (characteristic_ == 0) return -a;
  if (a == 0) return a;
  return Rational(modulus_ - a.get_num());
}

// ---------------------------------------------------------------------------

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw InvalidInput("negative exponent");
    degree_ += e;
  }
}

void Monomial::set(std::size_t i, int e) {
  if (e < 0) throw InvalidInput("negative exponent");
  degree_ += e - exps_.at(i);
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] -= divisor.exps_[i];
    if (r.exps_[i] < 0) throw InvalidInput("monomial division is not exact");
  }
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  r.degree_ = std::accumulate(r.exps_.begin(), r.exps_.end(), 0);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  r.degree_ = std::accumulate(r.exps_.begin(), r.exps_.end(), 0);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int e : exps_) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------

MonomialOrder MonomialOrder::with_priority(std::vector<std::size_t> priority) const {
  std::vector<std::size_t> sorted = priority;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw InvalidInput("variable priority is not a permutation");
  }
  MonomialOrder r = *this;
  r.priority_ = std::move(priority);
  return r;
}

int MonomialOrder::grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                 std::size_t hi) const {
  long da = 0;
  long db = 0;
  for (std::size_t r = lo; r < hi; ++r) {
    da += a[var(r)];
    db += b[var(r)];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t r = hi; r-- > lo;) {
    int ea = a[var(r)];
    int eb = b[var(r)];
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  if (!priority_.empty() && priority_.size() != n) {
    throw InvalidInput("monomial order priority length does not match the ring");
  }
  switch (kind_) {
    case Kind::Grevlex:
      if (priority_.empty()) {
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        for (std::size_t i = n; i-- > 0;) {
          if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
      }
      return grevlex_range(a, b, 0, n);
    case Kind::Lex:
      for (std::size_t r = 0; r < n; ++r) {
        int ea = a[var(r)];
        int eb = b[var(r)];
        if (ea != eb) return ea > eb ? 1 : -1;
      }
      return 0;
    case Kind::Elimination: {
      const std::size_t k = std::min(block_, n);
      if (int c = grevlex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, n);
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Grevlex: os << "grevlex"; break;
    case Kind::Lex: os << "lex"; break;
    case Kind::Elimination: os << "elimination(" << block_ << ")"; break;
  }
  return os.str();
}

}  // namespace bsk
