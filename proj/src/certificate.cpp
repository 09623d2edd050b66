#include "bsk/certificate.hpp"

#include <algorithm>
#include <unordered_map>

#include "bsk/error.hpp"
#include "bsk/invariants.hpp"
#include "bsk/linalg.hpp"

namespace bsk {

namespace {

void monomials_up_to(std::size_t nvars, long degree, std::vector<Monomial>& out) {
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i == nvars) {
      out.emplace_back(e);
      return;
    }
    for (long k = 0; k <= left; ++k) {
      e[i] = static_cast<int>(k);
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  if (degree >= 0) rec(rec, 0, degree);
  std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
}

struct Prepared {
  GroebnerBasis gb;
  std::vector<MultiIndex> indices;
  std::vector<Poly> products;
};

Prepared prepare(const MembershipInstance& inst, const SearchOptions& options) {
  inst.validate();
  BuchbergerOptions bo;
  bo.budget = options.budget;
  auto indices = multi_indices(inst.generators.size(), inst.power);
  if (indices.size() > options.max_cofactors) {
    throw BudgetExhausted(std::to_string(indices.size()) + " cofactors exceed the cap of " +
                          std::to_string(options.max_cofactors));
  }
  std::vector<Poly> products;
  for (const auto& I : indices) products.push_back(power_product(inst.generators, I));
  return {buchberger(inst.variety, MonomialOrder::grevlex(), bo), std::move(indices), std::move(products)};
}

Poly residual(const MembershipInstance& inst, const std::vector<Poly>& products, const Certificate& cert) {
  Poly r = inst.target;
  for (std::size_t k = 0; k < cert.cofactors.size(); ++k) r -= products[k] * cert.cofactors[k].second;
  return r;
}

std::optional<Certificate> search_prepared(const MembershipInstance& inst, const Prepared& prep, long rho,
                                           const SearchOptions& options) {
  const RingPtr& ring = inst.ring;
  std::vector<Monomial> row_monos;
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  std::vector<SparseEquation> rows;
  auto row = [&](const Monomial& m) -> SparseEquation& {
    auto [it, inserted] = row_of.emplace(m, rows.size());
    if (inserted) rows.emplace_back();
    return rows[it->second];
  };

  // Columns: (cofactor k, monomial) pairs, in order.
  std::vector<std::pair<std::size_t, Monomial>> columns;
  std::size_t nonzeros = 0;
  for (std::size_t k = 0; k < prep.products.size(); ++k) {
    long limit = rho - prep.products[k].degree().value();
    if (auto cap = options.cofactor_caps.find(k); cap != options.cofactor_caps.end()) {
      limit = std::min(limit, cap->second);
    }
    std::vector<Monomial> monos;
    monomials_up_to(ring->nvars(), limit, monos);
    const Poly reduced = prep.gb.normal_form(prep.products[k]);
    for (const auto& alpha : monos) {
      const std::size_t col = columns.size();
      columns.emplace_back(k, alpha);
      Poly image = prep.gb.normal_form(reduced.mul_term(alpha, Rational(1)));
      for (const auto& t : image.terms()) row(t.mono).entries.emplace_back(col, t.coeff);
      nonzeros += image.size();
      if (nonzeros > options.max_nonzeros) {
        throw BudgetExhausted("certificate system exceeds the matrix budget of " +
                              std::to_string(options.max_nonzeros) + " entries");
      }
    }
  }
  const Poly target = prep.gb.normal_form(inst.target);
  for (const auto& t : target.terms()) row(t.mono).rhs = t.coeff;

  auto solution = solve_sparse(columns.size(), std::move(rows), options.max_nonzeros);
  if (!solution) return std::nullopt;

  Certificate cert;
  std::vector<std::vector<Term>> terms(prep.products.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if ((*solution)[c] != 0) terms[columns[c].first].push_back(Term{columns[c].second, (*solution)[c]});
  }
  for (std::size_t k = 0; k < prep.products.size(); ++k) {
    Poly q = Poly::from_terms(ring, std::move(terms[k]));
    if (!q.is_zero()) cert.degree = std::max(cert.degree, prep.products[k].degree() + q.degree());
    cert.cofactors.emplace_back(prep.indices[k], std::move(q));
  }
  if (!prep.gb.normal_form(residual(inst, prep.products, cert)).is_zero()) {
    throw Error("certificate failed verification at rho " + std::to_string(rho));
  }
  cert.verified = true;
  return cert;
}

}  // namespace

void MembershipInstance::validate() const {
  if (!ring) throw InvalidInput("membership instance without a ring");
  if (ring->characteristic() != 0) throw InvalidInput("certificates are computed in characteristic 0");
  if (generators.empty()) throw InvalidInput("membership instance needs at least one generator");
  if (power < 1) throw InvalidInput("power must be at least 1");
  auto check = [&](const Poly& p) {
    if (!p.ring()->same_as(*ring)) throw RingMismatch("membership instance mixes rings");
  };
  for (const auto& f : generators) {
    check(f);
    if (f.is_zero()) throw InvalidInput("generators must be nonzero");
  }
  for (const auto& g : variety.generators()) check(g);
  check(target);
}

std::vector<MultiIndex> multi_indices(std::size_t m, long power) {
  std::vector<MultiIndex> out;
  MultiIndex cur(m, 0);
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i + 1 == m) {
      cur[i] = static_cast<int>(left);
      out.push_back(cur);
      return;
    }
    for (long k = left; k >= 0; --k) {
      cur[i] = static_cast<int>(k);
      self(self, i + 1, left - k);
    }
  };
  if (m > 0) rec(rec, 0, power);
  return out;
}

Poly power_product(const std::vector<Poly>& generators, const MultiIndex& index) {
  Poly p = Poly::constant(generators.at(0).ring(), 1);
  for (std::size_t j = 0; j < index.size(); ++j) {
    if (index[j]) p = p * generators[j].pow(static_cast<unsigned>(index[j]));
  }
  return p;
}

std::string cofactor_label(const MultiIndex& index) {
  long total = 0;
  for (int e : index) total += e;
  if (total == 1) {
    for (std::size_t j = 0; j < index.size(); ++j) {
      if (index[j]) return "Q" + std::to_string(j + 1);
    }
  }
  std::string out = "Q[";
  for (std::size_t j = 0; j < index.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(index[j]);
  }
  return out + "]";
}

std::optional<Certificate> search_at_degree(const MembershipInstance& inst, long rho, const SearchOptions& options) {
  return search_prepared(inst, prepare(inst, options), rho, options);
}

MinimalDegree minimal_degree(const MembershipInstance& inst, long rho_max, const SearchOptions& options) {
  if (rho_max < 0) throw InvalidInput("rho_max must be nonnegative");
  const Prepared prep = prepare(inst, options);
  for (long rho = 0; rho <= rho_max; ++rho) {
    if (auto cert = search_prepared(inst, prep, rho, options)) return {rho, std::move(cert)};
  }
  return {};
}

bool verify(const MembershipInstance& inst, const Certificate& cert, const Budget& budget) {
  inst.validate();
  auto indices = multi_indices(inst.generators.size(), inst.power);
  if (cert.cofactors.size() != indices.size()) return false;
  std::vector<Poly> products;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (cert.cofactors[k].first != indices[k]) return false;
    if (!cert.cofactors[k].second.ring()->same_as(*inst.ring)) throw RingMismatch("cofactor ring differs");
    products.push_back(power_product(inst.generators, indices[k]));
  }
  BuchbergerOptions bo;
  bo.budget = budget;
  return buchberger(inst.variety, MonomialOrder::grevlex(), bo).normal_form(residual(inst, products, cert)).is_zero();
}

ProjectiveLift projective_lift(const MembershipInstance& inst, const Certificate& cert, long rho,
                               const std::optional<Ideal>& closure, const Budget& budget) {
  if (!cert.degree.is_neg_infinity() && cert.degree.value() > rho) {
    throw InvalidInput("certificate degree exceeds rho");
  }
  const RingPtr proj = projective_ring(inst.ring);
  ProjectiveLift lift{proj, {}, {}, Poly(proj), Ideal(proj), false};
  if (closure) {
    lift.closure = *closure;
  } else if (!inst.variety.is_zero()) {
    lift.closure = projective_closure(inst.variety, budget);
  }
  // Phi may exceed rho only modulo the variety; homogenize everything at the larger degree.
  long top = rho;
  if (!inst.target.is_zero()) top = std::max(top, inst.target.degree().value());

  const Poly z0 = Poly::variable(proj, 0);
  Poly lhs(proj);
  for (const auto& [index, q] : cert.cofactors) {
    Poly f = power_product(inst.generators, index);
    const long df = f.degree().value();
    Poly fh = homogenize(f, df, proj);
    Poly qh = q.is_zero() ? Poly(proj) : homogenize(q, top - df, proj);
    lhs += fh * qh;
    lift.f.push_back(std::move(fh));
    lift.q.push_back(std::move(qh));
  }
  if (!inst.target.is_zero()) {
    const long dphi = inst.target.degree().value();
    lift.phi = z0.pow(static_cast<unsigned>(top - dphi)) * homogenize(inst.target, dphi, proj);
  }
  BuchbergerOptions bo;
  bo.budget = budget;
  lift.holds = buchberger(lift.closure, MonomialOrder::grevlex(), bo).normal_form(lhs - lift.phi).is_zero();
  if (!lift.holds) throw Error("homogenized identity fails modulo the projective closure");
  return lift;
}

std::string format_certificate(const MembershipInstance& inst, const Certificate& cert) {
  std::string out = "vars: ";
  for (std::size_t i = 0; i < inst.ring->nvars(); ++i) {
    if (i) out += ", ";
    out += inst.ring->name(i);
  }
  out += '\n';
  for (const auto& [index, q] : cert.cofactors) out += "# " + cofactor_label(index) + "\n" + format(q) + '\n';
  out += "rho: " + cert.degree.to_string() + '\n';
  out += std::string("verified: ") + (cert.verified ? "true" : "false") + '\n';
  return out;
}

}  // namespace bsk
