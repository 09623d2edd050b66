#include "bsk/invariants.hpp"

#include <algorithm>

namespace bsk {

namespace {

void trim(TPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

TPoly mul(const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

TPoly sub_shifted(TPoly a, const TPoly& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= b[j];
  trim(a);
  return a;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

TPoly numerator_rec(std::vector<Monomial> gens) {
  if (gens.empty()) return {1};
  for (const auto& g : gens) {
    if (g.is_one()) return {};
  }
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && pairwise_coprime; ++j) {
      pairwise_coprime = gens[i].coprime(gens[j]);
    }
  }
  if (pairwise_coprime) {
    TPoly r{1};
    for (const auto& g : gens) {
      TPoly f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] = -1;
      r = mul(r, f);
    }
    return r;
  }
  // Split off the generator of largest degree.
  Monomial pivot = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g / g.gcd(pivot));
  TPoly first = numerator_rec(gens);
  TPoly second = numerator_rec(minimalize(std::move(colon)));
  return sub_shifted(std::move(first), second, static_cast<std::size_t>(pivot.degree()));
}

Integer binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

TPoly hilbert_numerator(std::span<const Monomial> monomial_generators, std::size_t nvars) {
  std::vector<Monomial> gens(monomial_generators.begin(), monomial_generators.end());
  for (const auto& g : gens) {
    if (g.size() != nvars) throw RingMismatch("monomial length does not match the ring");
  }
  return numerator_rec(minimalize(std::move(gens)));
}

TPoly hilbert_numerator(const GroebnerBasis& basis) {
  for (const auto& g : basis.basis()) {
    if (!g.is_homogeneous()) throw InvalidInput("Hilbert series requires a homogeneous ideal");
  }
  auto lms = basis.leading_monomials();
  return hilbert_numerator(lms, basis.ring()->nvars());
}

HilbertData hilbert_data(const GroebnerBasis& basis) {
  return HilbertData(hilbert_numerator(basis), basis.ring()->nvars());
}

HilbertData::HilbertData(TPoly numerator, std::size_t nvars) : numerator_(std::move(numerator)), nvars_(nvars) {
  trim(numerator_);
  reduced_ = numerator_;
  if (reduced_.empty()) return;
  // Synthetic division by (1 - t) while t = 1 is a root.
  while (true) {
    Integer at_one = 0;
    for (const auto& c : reduced_) at_one += c;
    if (at_one != 0) break;
    // p(t) = (1 - t) q(t)  <=>  q_i = sum_{j <= i} p_j.
    TPoly q(reduced_.size() - 1, 0);
    Integer running = 0;
    for (std::size_t i = 0; i + 1 < reduced_.size(); ++i) {
      running += reduced_[i];
      q[i] = running;
    }
    reduced_ = std::move(q);
    trim(reduced_);
    ++pole_order_;
  }
}

long HilbertData::krull_dimension() const {
  if (is_unit_ideal()) throw InvalidInput("unit ideal has no dimension");
  return static_cast<long>(nvars_) - pole_order_;
}

Integer HilbertData::hilbert_function(long degree) const {
  Integer sum = 0;
  const long n = static_cast<long>(nvars_);
  for (std::size_t i = 0; i < numerator_.size(); ++i) {
    const long k = degree - static_cast<long>(i);
    if (k < 0) break;
    sum += numerator_[i] * (n == 0 ? Integer(k == 0 ? 1 : 0) : binomial(k + n - 1, n - 1));
  }
  return sum;
}

std::vector<Rational> HilbertData::hilbert_polynomial() const {
  const long r = krull_dimension();
  if (r == 0) return {};
  // HP(D) = sum_i h_i * C(D - i + r - 1, r - 1); interpolate from r sample points.
  std::vector<Rational> coeffs(static_cast<std::size_t>(r), 0);
  const long base = static_cast<long>(reduced_.size()) + 1;
  // Newton forward differences at D = base, base+1, ...
  std::vector<Rational> values;
  for (long k = 0; k < r; ++k) {
    Rational v = 0;
    for (std::size_t i = 0; i < reduced_.size(); ++i) {
      v += Rational(reduced_[i] * binomial(base + k - static_cast<long>(i) + r - 1, r - 1));
    }
    values.push_back(v);
  }
  // Newton basis C(D - base, j) expanded to the monomial basis.
  std::vector<Rational> diffs = values;
  std::vector<Rational> newton;
  for (long j = 0; j < r; ++j) {
    newton.push_back(diffs[0]);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  std::vector<Rational> basis{1};  // coefficients of C(D - base, j)
  for (long j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += newton[j] * basis[i];
    // basis <- basis * (D - base - j) / (j + 1)
    std::vector<Rational> next(basis.size() + 1, 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= basis[i] * Rational(base + j);
    }
    for (auto& c : next) c /= Rational(j + 1);
    basis = std::move(next);
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

long proj_dimension(const HilbertData& h) {
  if (h.is_unit_ideal()) throw InvalidInput("projective dimension of the unit ideal");
  return h.krull_dimension() - 1;
}

Integer proj_degree(const HilbertData& h) {
  if (h.is_unit_ideal() || h.krull_dimension() == 0) throw InvalidInput("degree of the empty projective scheme");
  Integer sum = 0;
  for (const auto& c : h.reduced_numerator()) sum += c;
  return sum;
}

long Codimension::value() const {
  if (infinite_) throw InvalidInput("infinite codimension has no finite value");
  return value_;
}

Codimension codimension(const Ideal& homogeneous_ideal, const Budget& budget) {
  BuchbergerOptions options;
  options.budget = budget;
  auto gb = buchberger(homogeneous_ideal, MonomialOrder::grevlex(), options);
  if (gb.is_unit()) return Codimension::infinite();
  HilbertData h = hilbert_data(gb);
  return Codimension::finite(static_cast<long>(h.nvars()) - h.krull_dimension());
}

bool projectively_empty(const GroebnerBasis& basis) {
  const std::size_t n = basis.ring()->nvars();
  std::vector<bool> has_power(n, false);
  for (const auto& lm : basis.leading_monomials()) {
    if (lm.is_one()) return true;
    std::size_t support = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (lm[i] != 0) {
        ++support;
        var = i;
      }
    }
    if (support == 1) has_power[var] = true;
  }
  return std::all_of(has_power.begin(), has_power.end(), [](bool b) { return b; });
}

Ideal projective_closure(const Ideal& affine_ideal, const Budget& budget) {
  RingPtr proj = projective_ring(affine_ideal.ring());
  std::vector<Poly> gens;
  for (const auto& g : affine_ideal.generators()) gens.push_back(homogenize(g, g.degree().value(), proj));
  Ideal homogenized(proj, std::move(gens));
  if (homogenized.is_zero()) return homogenized;
  return saturate(homogenized, Poly::variable(proj, 0), budget);
}

bool empty_at_infinity(std::span<const Poly> homogenized_generators, const Ideal& projective_ideal,
                       const Budget& budget) {
  Ideal total = projective_ideal + Ideal(projective_ideal.ring(), {homogenized_generators.begin(),
                                                                  homogenized_generators.end()});
  total = total.with(Poly::variable(projective_ideal.ring(), 0));
  BuchbergerOptions options;
  options.budget = budget;
  return projectively_empty(buchberger(total, MonomialOrder::grevlex(), options));
}

bool no_common_zeros(std::span<const Poly> homogenized_generators, const Ideal& projective_ideal,
                     const Budget& budget) {
  Ideal total = projective_ideal + Ideal(projective_ideal.ring(), {homogenized_generators.begin(),
                                                                  homogenized_generators.end()});
  BuchbergerOptions options;
  options.budget = budget;
  return projectively_empty(buchberger(total, MonomialOrder::grevlex(), options));
}

std::string format_tpoly(const TPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Integer mag = abs(p[i]);
    if (out.empty()) {
      if (p[i] < 0) out += "-";
    } else {
      out += p[i] < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace bsk
