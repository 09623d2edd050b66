#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bsk/poly.hpp"

namespace bsk {

/// Univariate polynomial in t: exponent -> nonzero coefficient.
using TSeries = std::map<long, Rational>;

/// Curve branch t -> (gamma_1(t), ..., gamma_N(t)) through gamma(0).
struct BranchParam {
  RingPtr ring;
  std::vector<TSeries> components;

  BranchParam(RingPtr ring, std::vector<TSeries> components);
  std::vector<Rational> base_point() const;
  /// Every component is c t^a.
  bool is_monomial() const;
  std::string to_string() const;
};

/// t-adic order of p(gamma(t)); nullopt when p vanishes on the branch.
std::optional<long> vanishing_order(const Poly& p, const BranchParam& branch);
TSeries pullback(const Poly& p, const BranchParam& branch);

/// ord(phi) >= k * min_j ord(F_j) on every branch.
bool bs_exponent_check(std::span<const Poly> generators, const Poly& phi, const Rational& k,
                       std::span<const BranchParam> branches);

/// min over branches of ord(phi) / min_j ord(F_j); nullopt when unbounded.
std::optional<Rational> max_bs_exponent(std::span<const Poly> generators, const Poly& phi,
                                        std::span<const BranchParam> branches);

/// For a monomial branch parametrizing its curve germ (value semigroup S
/// generated by the component orders) and g pulling back to c t^e: the
/// smallest integer mu >= 0 such that every function of order >= (1+mu) e
/// is divisible by g in the local ring.
long local_bs_number(const Poly& g, const BranchParam& branch);

/// phi in the integral closure of I^k: k * (convex combination of the
/// generators) <= exponent(phi) componentwise.
bool monomial_integral_closure(const Monomial& phi, std::span<const Monomial> region, long k);

/// `branch: z1 = t^5; z2 = t^2` lines; unnamed variables map to 0.
BranchParam parse_branch(std::string_view line, const RingPtr& ring);
std::vector<BranchParam> parse_branches(std::string_view text, const RingPtr& ring);

}  // namespace bsk
