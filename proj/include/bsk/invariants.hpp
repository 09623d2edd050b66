#pragma once

#include <span>
#include <vector>

#include "bsk/groebner.hpp"

namespace bsk {

/// Integer polynomial in t, coefficient of t^i at index i, no trailing zeros.
using TPoly = std::vector<Integer>;

/// Hilbert series numerator / (1 - t)^nvars of S/J plus the derived
/// dimension and degree data.
class HilbertData {
 public:
  HilbertData(TPoly numerator, std::size_t nvars);

  const TPoly& numerator() const noexcept { return numerator_; }
  std::size_t nvars() const noexcept { return nvars_; }
  /// True for S/S (numerator 0).
  bool is_unit_ideal() const noexcept { return numerator_.empty(); }
  /// Numerator with all (1 - t) factors removed.
  const TPoly& reduced_numerator() const noexcept { return reduced_; }
  /// Krull dimension of S/J (order of the pole at t = 1).
  long krull_dimension() const;
  /// dim_k (S/J)_degree, read off the series.
  Integer hilbert_function(long degree) const;
  /// Coefficients of the Hilbert polynomial in the degree variable, lowest first.
  std::vector<Rational> hilbert_polynomial() const;

 private:
  TPoly numerator_;
  std::size_t nvars_;
  TPoly reduced_;
  long pole_order_ = 0;
};

/// Standard recursion on the leading-term ideal: N(I + (m)) = N(I) - t^deg m N(I : m).
TPoly hilbert_numerator(std::span<const Monomial> monomial_generators, std::size_t nvars);
/// Requires a basis of a homogeneous ideal.
TPoly hilbert_numerator(const GroebnerBasis& basis);
HilbertData hilbert_data(const GroebnerBasis& basis);

/// Degree of the Hilbert polynomial; -1 for the empty projective scheme.
long proj_dimension(const HilbertData& h);
/// Normalized leading coefficient of the Hilbert polynomial.
Integer proj_degree(const HilbertData& h);

/// Codimension of V(J) in the affine cone; infinite for the unit ideal.
class Codimension {
 public:
  static Codimension finite(long value) { return Codimension(value, false); }
  static Codimension infinite() { return Codimension(0, true); }
  bool is_infinite() const noexcept { return infinite_; }
  long value() const;
  bool at_least(long k) const noexcept { return infinite_ || value_ >= k; }
  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }
  bool operator==(const Codimension& o) const noexcept {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }

 private:
  Codimension(long value, bool infinite) : value_(value), infinite_(infinite) {}
  long value_;
  bool infinite_;
};

Codimension codimension(const Ideal& homogeneous_ideal, const Budget& budget = {});

/// The leading-term ideal contains a pure power of every variable, i.e. the
/// affine cone is zero-dimensional and the projective zero set is empty.
bool projectively_empty(const GroebnerBasis& basis);

/// J_X: saturation of the homogenized generators of I_V by z0, in the ring z0..zN.
Ideal projective_closure(const Ideal& affine_ideal, const Budget& budget = {});

/// Whether J_X + (f_1..f_m) + (z0) has no projective zeros. Inputs live in
/// the projective ring with z0 at index 0.
bool empty_at_infinity(std::span<const Poly> homogenized_generators, const Ideal& projective_ideal,
                       const Budget& budget = {});

/// Whether the f_j have no common zero anywhere on X.
bool no_common_zeros(std::span<const Poly> homogenized_generators, const Ideal& projective_ideal,
                     const Budget& budget = {});

std::string format_tpoly(const TPoly& p);

}  // namespace bsk
