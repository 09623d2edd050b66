#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsk/bounds.hpp"
#include "bsk/certificate.hpp"
#include "bsk/localorder.hpp"
#include "bsk/resolution.hpp"

namespace bsk {

struct InstanceParams {
  std::optional<long> mu_zero;
  std::optional<long> mu_prime;
  std::optional<CInfinity> c_inf;  // unset or "auto": decided by the emptiness test at infinity
  std::optional<Integer> deg_x;
  std::optional<long> reg_x;
  std::optional<long> n;
  bool smooth = false;
  bool cohen_macaulay = false;
  std::map<std::size_t, long> cofactor_caps;  // 0-based cofactor position
  std::optional<std::size_t> budget_pairs;
  std::optional<std::size_t> budget_matrix;
  std::optional<long> rho_max;
};

/// Sections: vars:, variety:, generators:, target:, power:, branches:, params:.
/// A file without section headers is a plain ideal file (vars line + polynomials),
/// read as the variety.
struct InstanceFile {
  RingPtr ring;
  std::vector<Poly> variety;
  std::vector<Poly> generators;
  std::optional<Poly> target;
  long power = 1;
  std::vector<BranchParam> branches;
  InstanceParams params;

  MembershipInstance membership() const;
};

InstanceFile parse_instance(std::string_view text, unsigned long characteristic = 0);

/// Invariants of the projective closure X of V (V = C^N when the variety is empty).
struct VarietyInvariants {
  Ideal closure;  // J_X in z0..zN
  long n = 0;
  Integer deg_x;
  long reg_x = 1;
};
VarietyInvariants variety_invariants(const RingPtr& ring, const std::vector<Poly>& variety, const Budget& budget = {});

/// Bound inputs from the instance: params first, then `computed`, then the
/// trivial values for V = C^N. c_inf "auto" runs the emptiness test at infinity.
BoundInputs bound_inputs(const InstanceFile& file, const std::optional<VarietyInvariants>& computed,
                         const Budget& budget = {});

/// 1-based line number of a character offset.
std::size_t line_of(std::string_view text, std::size_t offset);

}  // namespace bsk
