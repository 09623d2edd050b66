#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsk/rational.hpp"

namespace bsk {

/// Maximal codimension of the distinguished varieties at infinity.
struct CInfinity {
  enum class Mode { MinusInfinity, Explicit, UpperBoundMu };
  Mode mode = Mode::UpperBoundMu;
  long value = 0;  // Explicit only

  static CInfinity minus_infinity() { return {Mode::MinusInfinity, 0}; }
  static CInfinity explicit_value(long c) { return {Mode::Explicit, c}; }
  static CInfinity upper_bound_mu() { return {Mode::UpperBoundMu, 0}; }
  std::string to_string() const;
};

struct BoundInputs {
  long N = 1;  // ambient dimension
  long n = 1;  // dim X
  long m = 1;  // number of generators
  long d = 1;  // max generator degree
  long deg_phi = 0;
  Integer deg_x = 1;
  long reg_x = 1;
  long ell = 1;
  std::optional<long> mu_zero;
  std::optional<long> mu_prime;
  CInfinity c_inf;
  /// Caller asserts X arithmetically Cohen-Macaulay.
  bool cohen_macaulay = false;
  /// Caller asserts the f_j have no common zeros on X (projectively).
  bool no_common_zeros = false;

  /// Canonical one-line echo, the basis of the inputs hash.
  std::string to_string() const;
};

/// Throws InvalidInput on violated invariants (including explicit c > mu).
void validate(const BoundInputs& in);

long mu(const BoundInputs& in);
/// d^{c_inf}, 0 in MinusInfinity mode.
Integer d_power_c(const BoundInputs& in);

Integer hickel_bound_i(const BoundInputs& in);
/// First entry only; requires cohen_macaulay and m <= n.
Integer hickel_bound_i_cm(const BoundInputs& in);
Integer hickel_bound_ii(const BoundInputs& in);
Integer power_bound(const BoundInputs& in);

struct MacaulayBounds {
  Integer projective_space;  // max(deg phi, d(n+1) - n)
  Integer on_variety;        // max(deg phi, (d-1)(n+1) + reg X)
};
MacaulayBounds macaulay_bound(const BoundInputs& in);

Integer jelonek_bound(const BoundInputs& in);
/// deg phi + 2(2d)^{2^N - 1}; asymptotic surrogate.
Integer hermann_bound(const BoundInputs& in);
Integer multiplicity_cap(long d, long codim, const Integer& deg_x);

/// Regularity estimates for X: (n+1)(deg X - 1) + 1, and deg X - (N - n) in the aCM case.
Integer mumford_regularity_bound(long n, const Integer& deg_x);
Integer cm_regularity_bound(long N, long n, const Integer& deg_x);

struct BoundEntry {
  std::string name;
  std::optional<Integer> value;
  std::string note;  // reason when not applicable, label otherwise
};

struct BoundReport {
  BoundInputs inputs;
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& name) const;
  std::string format_table() const;
  /// One line per bound: name, value, applicability, inputs hash.
  std::string format_records() const;
  std::uint64_t inputs_hash() const;
};

BoundReport comparison_bounds(const BoundInputs& in);

std::uint64_t fnv1a(const std::string& text);

}  // namespace bsk
