#pragma once

#include <compare>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bsk/error.hpp"
#include "bsk/ring.hpp"

namespace bsk {

/// Total degree with a -infinity value for the zero polynomial, so that
/// deg(pq) = deg p + deg q holds without special cases.
class Degree {
 public:
  constexpr Degree(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  static constexpr Degree neg_infinity() { return Degree(kNegInf); }

  constexpr bool is_neg_infinity() const { return value_ == kNegInf; }
  long value() const {
    if (is_neg_infinity()) throw InvalidInput("degree of the zero polynomial is -infinity");
    return value_;
  }

  constexpr Degree operator+(Degree other) const {
    if (is_neg_infinity() || other.is_neg_infinity()) return neg_infinity();
    return Degree(value_ + other.value_);
  }
  constexpr auto operator<=>(const Degree&) const = default;

  std::string to_string() const { return is_neg_infinity() ? "-inf" : std::to_string(value_); }

 private:
  static constexpr long kNegInf = std::numeric_limits<long>::min();
  long value_;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse distributed polynomial. Terms are nonzero and sorted strictly
/// decreasing by the polynomial's monomial order.
class Poly {
 public:
  explicit Poly(RingPtr ring, MonomialOrder order = MonomialOrder::grevlex());

  static Poly constant(RingPtr ring, const Rational& c, MonomialOrder order = MonomialOrder::grevlex());
  static Poly variable(RingPtr ring, std::size_t index, MonomialOrder order = MonomialOrder::grevlex());
  static Poly monomial(RingPtr ring, Monomial m, const Rational& c = 1,
                       MonomialOrder order = MonomialOrder::grevlex());
  /// Combines like terms, drops zeros, sorts.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms, MonomialOrder order = MonomialOrder::grevlex());

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  const Term& leading() const;
  const Monomial& leading_monomial() const { return leading().mono; }
  const Rational& leading_coeff() const { return leading().coeff; }

  Degree degree() const;
  bool is_homogeneous() const;
  /// Homogeneous component of the given total degree.
  Poly homogeneous_part(long degree) const;
  Rational coefficient(const Monomial& m) const;
  bool involves(std::size_t var) const;

  Poly with_order(const MonomialOrder& order) const;

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator-() const;
  Poly operator*(const Poly& other) const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& other) { return *this = *this + other; }
  Poly& operator-=(const Poly& other) { return *this = *this - other; }
  Poly& operator*=(const Poly& other) { return *this = *this * other; }

  Poly mul_term(const Monomial& m, const Rational& c) const;
  Poly pow(unsigned exponent) const;
  Poly monic() const;

  /// Moves the polynomial into `target`; var_map[i] is the target index of
  /// source variable i. Variables mapped to nullopt are set to 1.
  Poly remap(const RingPtr& target, std::span<const std::optional<std::size_t>> var_map) const;
  /// Substitutes polynomials (all in one ring) for the variables.
  Poly substitute(std::span<const Poly> values) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Same ring and same polynomial (term order is irrelevant).
  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

 private:
  void check_ring(const Poly& other) const;
  static void normalize(const Ring& ring, const MonomialOrder& order, std::vector<Term>& terms);

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

Poly operator*(const Rational& c, const Poly& p);

std::string format(const Poly& p);
std::string format(const Monomial& m, const Ring& ring);

/// Grammar: terms joined by + or -, each a `*`-separated product of
/// rational constants (`a` or `a/b`) and variable powers `name^k` (k >= 1).
/// Whitespace is ignored and `#` comments run to end of line.
Poly parse_poly(std::string_view text, const RingPtr& ring, MonomialOrder order = MonomialOrder::grevlex());

/// Parses a `vars: a, b, c` header line (without the rest of a file).
std::vector<std::string> parse_vars_line(std::string_view line);

struct IdealFile {
  RingPtr ring;
  std::vector<Poly> polys;
};

/// `vars:` header, then one polynomial per line.
IdealFile parse_ideal_file(std::string_view text, unsigned long characteristic = 0);
std::string format_ideal_file(const Ring& ring, std::span<const Poly> polys);

// Homogenization dictionary between the affine ring z1..zN and the
// projective ring z0..zN, z0 being the homogenizing variable.

inline constexpr std::string_view kHomogenizingVariable = "z0";

RingPtr projective_ring(const RingPtr& affine);
/// Drops the first variable (z0) of a projective ring.
RingPtr affine_ring(const RingPtr& projective);

/// z0^d * F(z'/z0); requires d >= deg F.
Poly homogenize(const Poly& affine_poly, long degree, const RingPtr& projective);
Poly homogenize(const Poly& affine_poly, long degree);
/// Sets z0 = 1.
Poly dehomogenize(const Poly& projective_poly, const RingPtr& affine);
Poly dehomogenize(const Poly& projective_poly);

}  // namespace bsk
