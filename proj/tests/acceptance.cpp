// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "bsk/bench.hpp"
#include "bsk/bounds.hpp"
#include "bsk/certificate.hpp"
#include "bsk/error.hpp"
#include "bsk/groebner.hpp"
#include "bsk/invariants.hpp"
#include "bsk/localorder.hpp"
#include "bsk/resolution.hpp"

using namespace bsk;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

Poly P(const RingPtr& R, const std::string& s) { return parse_poly(s, R); }

MembershipInstance kollar(const std::string& phi = "1", long power = 1) {
  auto R = Ring::make({"z1", "z2"});
  return MembershipInstance{R, Ideal(R), {P(R, "z1^2"), P(R, "z1*z2 - 1")}, P(R, phi), power};
}

BoundInputs kollar_inputs() {
  BoundInputs in;
  in.N = in.n = in.m = in.d = 2;
  in.deg_phi = 0;
  in.deg_x = 1;
  in.reg_x = 1;
  in.mu_zero = 0;
  in.c_inf = CInfinity::explicit_value(2);
  return in;
}

Integer ipow(long b, long e) { return pow(Integer(b), static_cast<unsigned long>(e)); }

BoundInputs random_inputs(std::mt19937_64& rng, bool restrict_affine) {
  auto u = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  while (true) {
    BoundInputs in;
    in.N = u(1, 6);
    in.n = u(1, in.N);
    in.m = u(1, 6);
    in.d = u(1, 6);
    in.deg_phi = u(0, 30);
    in.deg_x = restrict_affine ? 1 : u(1, 10);
    in.reg_x = restrict_affine ? 1 : u(1, 10);
    in.mu_zero = restrict_affine ? 0 : u(0, 5);
    const long mu = std::min(in.m, in.n);
    const long mode = u(0, 2);
    if (mode == 0) {
      // No distinguished varieties; the affine-space comparison only holds for m > n.
      if (restrict_affine && in.m <= in.n) continue;
      in.c_inf = CInfinity::minus_infinity();
    } else if (mode == 1) {
      in.c_inf = CInfinity::explicit_value(u(restrict_affine ? 1 : 0, mu));
    } else {
      in.c_inf = CInfinity::upper_bound_mu();
    }
    return in;
  }
}

// Criterion 1
void kollar_sharpness() {
  auto inst = kollar();
  auto res = minimal_degree(inst, 10);
  expect(res.rho_min && *res.rho_min == 4, "minimal degree is not 4");
  expect(res.certificate && res.certificate->verified && verify(inst, *res.certificate), "certificate not verified");
  expect(res.certificate->degree == Degree(4), "certificate degree is not 4");
  SearchOptions capped;
  capped.cofactor_caps[0] = 1;
  for (long rho : {4, 6, 8}) expect(!search_at_degree(inst, rho, capped), "found a certificate with deg Q1 <= 1");
}

// Criterion 2
void bound_conformance() {
  auto in = kollar_inputs();
  const Integer h = hickel_bound_i(in);
  expect(h == 8, "hickel_i is " + h.get_str());
  expect(h >= 4, "negative slack");
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 500; ++i) {
    auto r = random_inputs(rng, true);
    const long mu = std::min(r.m, r.n);
    Integer dc = d_power_c(r);
    Integer expr = std::max(Integer(r.deg_phi + mu * dc), Integer(r.d * std::min(r.m, r.n + 1) - r.n));
    expect(hickel_bound_i(r) == expr, "affine-space expression differs at " + r.to_string());
  }
}

// Criterion 3
void macaulay_regime() {
  int accepted = 0;
  for (std::uint64_t seed = 1; accepted < 20; ++seed) {
    auto file = macaulay_generic_instance(2, 2, seed);
    const auto proj = projective_ring(file.ring);
    std::vector<Poly> h;
    for (const auto& f : file.generators) h.push_back(homogenize(f, 2, proj));
    if (!empty_at_infinity(h, Ideal(proj))) continue;
    ++accepted;
    auto res = minimal_degree(file.membership(), 4);
    expect(res.rho_min && *res.rho_min <= 4, "seed " + std::to_string(seed) + ": no certificate at rho <= 4");
    expect(verify(file.membership(), *res.certificate), "seed " + std::to_string(seed) + ": unverified certificate");
  }
  for (long d = 1; d <= 10; ++d) {
    for (long n = 1; n <= 10; ++n) {
      expect((d - 1) * (n + 1) + 1 == d * (n + 1) - n, "projective space identity");
      BoundInputs in;
      in.N = in.n = n;
      in.m = n + 1;
      in.d = d;
      auto mac = macaulay_bound(in);
      expect(mac.projective_space == mac.on_variety, "Macaulay variants differ on projective space");
    }
  }
}

// Criterion 4
void cusp() {
  for (int p : {3, 5, 7}) {
    const std::string ps = std::to_string(p);
    auto R = Ring::make({"z1", "z2"});
    Ideal I(R, {P(R, "z2"), P(R, "z1^2 - z2^" + ps)});
    expect(!membership(P(R, "z1"), I), "z1 in the ideal for p=" + ps);
    std::vector<Poly> F = {P(R, "z2")};
    std::vector<BranchParam> origin = {parse_branch("branch: z1 = t^" + ps + "; z2 = t^2", R)};
    const Rational k((p - 1) / 2);
    expect(bs_exponent_check(F, P(R, "z1"), k, origin), "exponent (p-1)/2 fails for p=" + ps);
    expect(!bs_exponent_check(F, P(R, "z1"), k + 1, origin), "exponent (p+1)/2 passes for p=" + ps);
    Ideal J = projective_closure(Ideal(R, {P(R, "z1^2 - z2^" + ps)}));
    expect(regularity(minimal_resolution(J)) == p, "regularity is not p for p=" + ps);
    expect(proj_degree(hilbert_data(buchberger(J))) == p, "degree is not p for p=" + ps);
  }
}

// Criterion 5
void resolutions() {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("z" + std::to_string(i));
    expect(regularity(minimal_resolution(Ideal(Ring::make(names)))) == 1, "reg of projective space is not 1");
  }
  auto R4 = Ring::make({"z0", "z1", "z2", "z3"});
  auto R3 = Ring::make({"z0", "z1", "z2"});
  Ideal cubic(R4, {P(R4, "z0*z2 - z1^2"), P(R4, "z0*z3 - z1*z2"), P(R4, "z1*z3 - z2^2")});
  auto res = minimal_resolution(cubic);
  auto b = betti(res);
  expect(b.at(1, 2) == 3 && b.at(2, 3) == 2 && b.entries().size() == 3, "twisted cubic Betti table");
  expect(regularity(res) == 2, "twisted cubic regularity");

  struct Member {
    Ideal ideal;
    bool pure;
  };
  std::vector<Member> corpus = {
      {cubic, true},
      {Ideal(R4, {P(R4, "z0*z2"), P(R4, "z0*z3"), P(R4, "z1*z2"), P(R4, "z1*z3")}), true},
      {Ideal(R4, {P(R4, "z0*z3 - z1*z2"), P(R4, "z0^2 + z1^2 - z2*z3")}), true},
      {Ideal(R3, {P(R3, "z0*z1"), P(R3, "z1*z2"), P(R3, "z0*z2")}), true},
      {Ideal(R3, {P(R3, "z1^2*z0^3 - z2^5")}), true},
      {Ideal(R3, {P(R3, "z0^2"), P(R3, "z0*z1")}), false},
      {Ideal(R4, {P(R4, "z0*z2"), P(R4, "z0*z3"), P(R4, "z1*z2"), P(R4, "z1*z3"), P(R4, "z0^2")}), false},
  };
  for (const auto& member : corpus) {
    auto r = minimal_resolution(member.ideal);
    // Oracles: exactness at the level of Hilbert series and vanishing compositions.
    TPoly alt;
    const BettiTable table = betti(r);
    for (const auto& [key, count] : table.entries()) {
      auto d = static_cast<std::size_t>(key.second);
      if (alt.size() <= d) alt.resize(d + 1, Integer(0));
      alt[d] += (key.first % 2 ? -1 : 1) * count;
    }
    while (!alt.empty() && alt.back() == 0) alt.pop_back();
    TPoly num = hilbert_numerator(buchberger(member.ideal));
    while (!num.empty() && num.back() == 0) num.pop_back();
    expect(alt == num, "Betti numbers disagree with the Hilbert series");
    for (std::size_t k = 1; k < r.steps.size(); ++k) {
      for (const auto& row : matrix_product(r.steps[k - 1].matrix, r.steps[k].matrix, r.ring)) {
        for (const auto& e : row) expect(e.is_zero(), "consecutive maps do not compose to zero");
      }
    }
    const long codim = codimension(member.ideal).value();
    for (const auto& [k, c] : bef_codims(r)) {
      const long kk = static_cast<long>(k);
      expect(c.at_least(kk), "Fitting codimension below k");
      if (member.pure && kk >= 1 + codim) expect(c.at_least(kk + 1), "Fitting codimension below k+1 on a pure member");
    }
  }
}

// Criterion 6
void power_version() {
  auto inst = kollar("z1^4", 2);
  BoundInputs in = kollar_inputs();
  in.deg_phi = 4;
  in.ell = 2;
  const Integer bound = power_bound(in);
  auto res = minimal_degree(inst, bound.get_si());
  expect(res.rho_min.has_value(), "no power certificate up to the bound");
  expect(verify(inst, *res.certificate), "power certificate not verified");
  expect(res.certificate->degree.value() <= bound, "power certificate exceeds the bound");
  std::mt19937_64 rng(77);
  for (int i = 0; i < 500; ++i) {
    auto r = random_inputs(rng, false);
    expect(power_bound(r) == hickel_bound_i(r), "power(ell=1) differs at " + r.to_string());
  }
}

// Criterion 7
void properties() {
  auto R3 = Ring::make({"x", "y", "z"});
  std::vector<Ideal> corpus = {
      Ideal(R3, {P(R3, "x^2 - y*z"), P(R3, "y^2 - x*z")}),
      Ideal(R3, {P(R3, "x*y - 1"), P(R3, "y^2 - z")}),
      Ideal(R3, {P(R3, "x^3 - y"), P(R3, "x*z - y^2 + 1"), P(R3, "z^2 - x")}),
      Ideal(R3, {P(R3, "x*y*z - 1"), P(R3, "x + y + z")}),
      Ideal(R3, {P(R3, "x^2 + y^2 + z^2 - 1"), P(R3, "x - y*z")}),
  };
  std::mt19937_64 rng(5);
  auto random_poly = [&](const RingPtr& R, int max_degree) {
    std::vector<Term> terms;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < n; ++t) {
      Monomial m(R->nvars());
      const int deg = static_cast<int>(rng() % (max_degree + 1));
      for (int k = 0; k < deg; ++k) {
        const std::size_t v = rng() % R->nvars();
        m.set(v, m[v] + 1);
      }
      terms.push_back(Term{m, Rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3)});
      terms.back().coeff.canonicalize();
    }
    return Poly::from_terms(R, std::move(terms));
  };
  int checked = 0;
  for (const auto& I : corpus) {
    auto gb = buchberger(I);
    expect(gb.satisfies_buchberger_criterion(), "Buchberger criterion fails");
    for (int i = 0; i < 40; ++i, ++checked) {
      Poly p = random_poly(R3, 5);
      expect(gb.normal_form(p, rng) == gb.normal_form(p), "normal form depends on reduction order");
      const long d = p.is_zero() ? 0 : p.degree().value();
      expect(dehomogenize(homogenize(p, d + static_cast<long>(rng() % 3), projective_ring(R3)), R3) == p,
             "homogenize/dehomogenize round trip");
    }
  }
  expect(checked == 200, "confluence sample size");

  auto R2 = Ring::make({"z1", "z2"});
  std::vector<Ideal> varieties = {Ideal(R2), Ideal(R2, {P(R2, "z1^2 - z2^3")}), Ideal(R2, {P(R2, "z1*z2 - 1")})};
  int certificates = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Poly> gens;
    while (gens.size() < 1 + trial % 2) {
      Poly g = random_poly(R2, 2);
      if (!g.is_zero()) gens.push_back(g);
    }
    Poly phi = trial % 2 ? gens[0] * random_poly(R2, 1) : random_poly(R2, 2);
    MembershipInstance inst{R2, varieties[trial % varieties.size()], gens, phi, 1};
    bool before = false;
    for (long rho = 0; rho <= 4; ++rho) {
      auto cert = search_at_degree(inst, rho);
      expect(!before || cert.has_value(), "feasibility not monotone in rho");
      if (cert) {
        ++certificates;
        expect(cert->verified && verify(inst, *cert), "returned certificate does not verify");
        expect(projective_lift(inst, *cert, rho).holds, "projective identity fails");
      }
      before = cert.has_value();
    }
  }
  expect(certificates > 10, "too few certificates exercised");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Kollar sharpness: rho_min = 4, capped search NotFound", 5, kollar_sharpness},
      {2, "bound conformance: hickel_i = 8 >= 4, affine-space sweep", 1, bound_conformance},
      {3, "Macaulay regime: 20 generic instances rho_min <= 4, projective space identity", 60, macaulay_regime},
      {4, "cusp p = 3, 5, 7: non-membership, exponents, regularity, degree", 10, cusp},
      {5, "resolutions: reg P^n, twisted cubic, Buchsbaum-Eisenbud codimensions", 30, resolutions},
      {6, "power version: certificate within power bound, ell = 1 sweep", 10, power_version},
      {7, "property suites: criterion, confluence, soundness, round trip, lift, monotonicity", 60, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.limit_s) {
      ok = false;
      detail = "took longer than " + std::to_string(c.limit_s) + " s";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << secs << " s)";
    if (!ok) line << " -- " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++failed;
  }
  return failed ? 1 : 0;
}
