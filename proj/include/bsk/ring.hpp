#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bsk/rational.hpp"

namespace bsk {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Variable names plus the coefficient field: Q when characteristic is 0,
/// GF(p) otherwise. In GF(p) coefficients are stored as integers in [0, p).
class Ring {
 public:
  explicit Ring(std::vector<std::string> names, unsigned long characteristic = 0);

  static RingPtr make(std::vector<std::string> names, unsigned long characteristic = 0);

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  unsigned long characteristic() const noexcept { return characteristic_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Same variables and same coefficient field.
  bool same_as(const Ring& other) const noexcept;

  RingPtr with_prepended(const std::vector<std::string>& names) const;
  RingPtr with_appended(const std::vector<std::string>& names) const;
  RingPtr with_characteristic(unsigned long p) const;

  Rational reduce(const Rational& c) const;
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational div(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;

 private:
  std::vector<std::string> names_;
  unsigned long characteristic_;
  Integer modulus_;
};

/// Exponent vector; the total degree is cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int e);
  const std::vector<int>& exponents() const noexcept { return exps_; }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const noexcept { return exps_ != other.exps_; }

  std::size_t hash() const noexcept;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Total orders on monomials refining divisibility and compatible with
/// multiplication. The variable priority list names variables from largest
/// to smallest; empty means the ring's own order.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// First `block` variables (by priority) eliminated: any monomial involving
  /// them beats any monomial that does not. Grevlex inside each block.
  static MonomialOrder elimination(std::size_t block) { return MonomialOrder(Kind::Elimination, block); }

  MonomialOrder with_priority(std::vector<std::size_t> priority) const;

  Kind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }

  /// -1, 0 or 1.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder& other) const noexcept {
    return kind_ == other.kind_ && block_ == other.block_ && priority_ == other.priority_;
  }
  bool operator!=(const MonomialOrder& other) const noexcept { return !(*this == other); }

  std::string to_string() const;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  std::size_t var(std::size_t rank) const { return priority_.empty() ? rank : priority_[rank]; }
  int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const;

  Kind kind_;
  std::size_t block_;
  std::vector<std::size_t> priority_;
};

}  // namespace bsk
