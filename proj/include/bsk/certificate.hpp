#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsk/groebner.hpp"

namespace bsk {

struct MembershipInstance {
  RingPtr ring;  // affine ring z1..zN, characteristic 0
  Ideal variety;
  std::vector<Poly> generators;
  Poly target;
  long power = 1;

  void validate() const;
};

using MultiIndex = std::vector<int>;

/// All I with |I| = power, e_1 first (decreasing lex).
std::vector<MultiIndex> multi_indices(std::size_t m, long power);
Poly power_product(const std::vector<Poly>& generators, const MultiIndex& index);
/// "Q1" for power 1, "Q[2,0]" otherwise.
std::string cofactor_label(const MultiIndex& index);

struct Certificate {
  std::vector<std::pair<MultiIndex, Poly>> cofactors;  // in multi_indices order
  Degree degree = Degree::neg_infinity();             // max deg(F^I Q_I) over nonzero Q_I
  bool verified = false;
};

struct SearchOptions {
  /// Degree cap on Q_I keyed by cofactor position.
  std::map<std::size_t, long> cofactor_caps;
  std::size_t max_nonzeros = 200000;
  std::size_t max_cofactors = 500;
  Budget budget;
};

/// Exact search over all Q_I with deg(F^I Q_I) <= rho; nullopt proves infeasibility.
std::optional<Certificate> search_at_degree(const MembershipInstance& inst, long rho, const SearchOptions& options = {});

struct MinimalDegree {
  std::optional<long> rho_min;  // nullopt: not found at any rho <= rho_max
  std::optional<Certificate> certificate;
};
MinimalDegree minimal_degree(const MembershipInstance& inst, long rho_max, const SearchOptions& options = {});

/// Recomputes NF(phi - sum F^I Q_I) modulo the variety ideal.
bool verify(const MembershipInstance& inst, const Certificate& cert, const Budget& budget = {});

struct ProjectiveLift {
  RingPtr ring;                  // z0..zN
  std::vector<Poly> f;           // homogenized F^I
  std::vector<Poly> q;           // homogenized Q_I at rho - deg F^I
  Poly phi;                      // z0^{rho - deg Phi} * homogenized Phi
  Ideal closure;                 // J_X
  bool holds = false;
};

/// Homogenized identity sum f^I q_I = z0^{rho - deg Phi} phi checked modulo J_X.
/// Throws Error if it fails.
ProjectiveLift projective_lift(const MembershipInstance& inst, const Certificate& cert, long rho,
                               const std::optional<Ideal>& closure = std::nullopt, const Budget& budget = {});

std::string format_certificate(const MembershipInstance& inst, const Certificate& cert);

}  // namespace bsk
