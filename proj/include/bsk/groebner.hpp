#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "bsk/poly.hpp"

namespace bsk {

/// Resource caps for Buchberger runs. Exceeding either raises BudgetExhausted.
struct Budget {
  std::size_t max_pairs = 200000;
  int max_degree = 256;
};

class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Poly> generators = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Poly>& generators() const noexcept { return generators_; }
  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_homogeneous() const;

  Ideal operator+(const Ideal& other) const;
  Ideal with(const Poly& extra) const;

 private:
  RingPtr ring_;
  std::vector<Poly> generators_;
};

struct BuchbergerOptions {
  Budget budget;
  /// Module mode: these variables mark free-module components, and every
  /// term carries exactly one of them. Pairs in different components are skipped.
  std::vector<std::size_t> component_vars;
};

/// Immutable; normal_form is safe to call concurrently.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Poly> basis, bool reduced);

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Poly>& basis() const noexcept { return basis_; }
  bool reduced() const noexcept { return reduced_; }
  bool is_unit() const;
  std::vector<Monomial> leading_monomials() const;

  /// Full reduction: no term of the result is divisible by a leading monomial.
  Poly normal_form(const Poly& p) const;
  /// Same, picking the reducer uniformly at random among eligible elements.
  Poly normal_form(const Poly& p, std::mt19937_64& rng) const;
  bool contains(const Poly& p) const { return normal_form(p).is_zero(); }

  /// Every S-polynomial of basis pairs reduces to zero.
  bool satisfies_buchberger_criterion(const std::vector<std::size_t>& component_vars = {}) const;

 private:
  Poly reduce(const Poly& p, std::mt19937_64* rng) const;

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Poly> basis_;
  bool reduced_;
};

Poly s_polynomial(const Poly& f, const Poly& g);

/// Reduced, monic Groebner basis sorted by decreasing leading monomial.
/// Normal pair selection with the coprime and chain criteria.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex(),
                         const BuchbergerOptions& options = {});

/// Generators of the ideal intersected with the subring without the first
/// `count` variables (same ring, polynomials free of those variables).
Ideal eliminate(const Ideal& ideal, std::size_t count, const Budget& budget = {});

/// (I : f^inf) by adjoining t and eliminating it from I + (1 - t f).
Ideal saturate(const Ideal& ideal, const Poly& f, const Budget& budget = {});

bool membership(const Poly& p, const Ideal& ideal, const Budget& budget = {});

/// Equality of ideals via reduced grevlex bases.
bool same_ideal(const Ideal& a, const Ideal& b, const Budget& budget = {});

}  // namespace bsk
