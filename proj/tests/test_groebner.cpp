#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"

using namespace bsk;
using bsk::testing::ideal;
using bsk::testing::P;

namespace {

bool basis_equals(const GroebnerBasis& gb, const std::vector<Poly>& expected) {
  if (gb.basis().size() != expected.size()) return false;
  return std::all_of(expected.begin(), expected.end(), [&](const Poly& e) {
    return std::any_of(gb.basis().begin(), gb.basis().end(), [&](const Poly& g) { return g == e; });
  });
}

}  // namespace

TEST_CASE("buchberger on small ideals") {
  auto R = Ring::make({"x", "y"});
  CHECK(basis_equals(buchberger(ideal(R, {"x", "y"})), testing::polys(R, {"x", "y"})));
  // S(x^2 - y, x) = -y, so y joins and x^2 - y becomes redundant.
  CHECK(basis_equals(buchberger(ideal(R, {"x^2 - y", "x"})), testing::polys(R, {"x", "y"})));

  auto C = Ring::make({"z1", "z2"});
  CHECK(basis_equals(buchberger(ideal(C, {"z2", "z1^2 - z2^5"})), testing::polys(C, {"z2", "z1^2"})));

  CHECK(buchberger(ideal(R, {"x*y - 1", "x"})).is_unit());
  CHECK(buchberger(Ideal(R)).basis().empty());
}

TEST_CASE("reduced bases are canonical") {
  auto R = Ring::make({"x", "y", "z"});
  auto a = buchberger(ideal(R, {"x^2 - y*z", "x*y - z^2", "y^2 - x*z"}));
  auto b = buchberger(ideal(R, {"y^2 - x*z + x^2 - y*z", "x*y - z^2", "x^2 - y*z"}));
  CHECK(basis_equals(a, b.basis()));
  for (const auto& g : a.basis()) {
    CHECK(g.leading_coeff() == 1);
    for (const auto& h : a.basis()) {
      if (&g == &h) continue;
      for (const auto& t : g.terms()) CHECK_FALSE(h.leading_monomial().divides(t.mono));
    }
  }
}

TEST_CASE("normal forms") {
  auto R = Ring::make({"x", "y"});
  auto gb = buchberger(ideal(R, {"x^2 - y"}));
  CHECK(gb.normal_form(P(R, "x^2")) == P(R, "y"));

  auto C = Ring::make({"z1", "z2"});
  auto cusp = buchberger(ideal(C, {"z2", "z1^2 - z2^5"}));
  CHECK(cusp.normal_form(P(C, "z1")) == P(C, "z1"));

  std::mt19937_64 rng(2);
  auto I = ideal(R, {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"});
  auto G = buchberger(I);
  for (int i = 0; i < 50; ++i) {
    Poly h = testing::random_poly(R, rng, 3, 4);
    Poly g = I.generators()[0] * testing::random_poly(R, rng, 2, 3) + I.generators()[1] * h;
    CHECK(G.normal_form(g).is_zero());
    Poly p = testing::random_poly(R, rng, 4, 5, true);
    Poly q = testing::random_poly(R, rng, 4, 5, true);
    Rational a(3, 2), b(-5);
    CHECK(G.normal_form(p * a + q * b) == G.normal_form(p) * a + G.normal_form(q) * b);
    const Poly nf = G.normal_form(p);
    for (const auto& t : nf.terms()) {
      for (const auto& lm : G.leading_monomials()) CHECK_FALSE(lm.divides(t.mono));
    }
  }
}

TEST_CASE("Buchberger criterion and confluence on a corpus") {
  auto R3 = Ring::make({"x", "y", "z"});
  auto R4 = Ring::make({"z0", "z1", "z2", "z3"});
  std::vector<Ideal> corpus = {
      ideal(R3, {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"}),
      ideal(R3, {"x*y - z^2", "y^3 - x*z + 1", "x^2 - y"}),
      ideal(R4, {"z0*z2 - z1^2", "z0*z3 - z1*z2", "z1*z3 - z2^2"}),
      ideal(R3, {"x^2*z - y^3", "x*y*z - 1"}),
      ideal(R3, {"1/3*x^2 + y*z", "x*z - 2/5*y^2", "z^3 - x"}),
  };
  std::mt19937_64 rng(17);
  for (const auto& I : corpus) {
    for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(1)}) {
      auto G = buchberger(I, order);
      CHECK(G.satisfies_buchberger_criterion());
      for (const auto& f : I.generators()) CHECK(G.contains(f));
    }
    auto G = buchberger(I);
    // A non-reduced generating set still reaches the same normal form.
    std::vector<Poly> padded = G.basis();
    for (const auto& g : I.generators()) padded.push_back(g);
    GroebnerBasis loose(I.ring(), G.order(), padded, false);
    for (int i = 0; i < 40; ++i) {
      Poly p = testing::random_poly(I.ring(), rng, 5, 6);
      Poly nf = G.normal_form(p);
      CHECK(G.normal_form(p, rng) == nf);
      CHECK(loose.normal_form(p, rng) == nf);
    }
  }
}

TEST_CASE("budget exhaustion is an error") {
  auto R = Ring::make({"x", "y", "z"});
  Budget tiny;
  tiny.max_pairs = 1;
  BuchbergerOptions opts;
  opts.budget = tiny;
  CHECK_THROWS_AS(buchberger(ideal(R, {"x^2 - y*z", "x*y - z^2", "y^2 - x*z"}), MonomialOrder::grevlex(), opts),
                  BudgetExhausted);
  opts.budget = Budget{};
  opts.budget.max_degree = 2;
  CHECK_THROWS_AS(buchberger(ideal(R, {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"}), MonomialOrder::grevlex(), opts),
                  BudgetExhausted);
}

TEST_CASE("elimination") {
  auto R = Ring::make({"t", "x", "y"});
  // Substituting t = y into t*x - 1 leaves x*y - 1.
  CHECK(same_ideal(eliminate(ideal(R, {"t*x - 1", "y - t"}), 1), ideal(R, {"x*y - 1"})));
  auto I = ideal(R, {"x"});
  CHECK(same_ideal(eliminate(I, 0), I));

  auto S = Ring::make({"x", "y"});
  Ideal e = eliminate(ideal(S, {"x - 1", "y - x^2"}), 1);
  CHECK(same_ideal(e, ideal(S, {"y - 1"})));
  for (const auto& g : e.generators()) CHECK_FALSE(g.involves(0));
}

TEST_CASE("saturation") {
  auto R = Ring::make({"z0", "x"});
  Ideal I = ideal(R, {"x*z0", "z0^2"});
  Poly z0 = P(R, "z0");
  // z0^2 lies in I, so 1 * z0^2 in I puts 1 in the saturation.
  Ideal sat = saturate(I, z0);
  CHECK(same_ideal(sat, ideal(R, {"1"})));
  for (const auto& g : sat.generators()) CHECK(membership(g * z0.pow(2), I));

  auto R3 = Ring::make({"z0", "x", "y"});
  Ideal I3 = ideal(R3, {"x*z0", "y*z0^2"});
  Ideal sat3 = saturate(I3, P(R3, "z0"));
  CHECK(same_ideal(sat3, ideal(R3, {"x", "y"})));
  // Membership oracle: g is in the saturation iff g*z0^k is in I for some k <= 2.
  for (const auto& g : sat3.generators()) CHECK(membership(g * P(R3, "z0^2"), I3));

  auto S = Ring::make({"x", "y"});
  CHECK(same_ideal(saturate(ideal(S, {"x"}), P(S, "y")), ideal(S, {"x"})));

  auto Pr = Ring::make({"z0", "z1", "z2"});
  Ideal cusp = ideal(Pr, {"z1^2*z0^3 - z2^5"});
  CHECK(same_ideal(saturate(cusp, P(Pr, "z0")), cusp));
  CHECK_THROWS_AS(saturate(cusp, Poly(Pr)), InvalidInput);

  // Random colon checks: f*g in I implies g in (I : f^inf).
  std::mt19937_64 rng(23);
  auto T = Ring::make({"x", "y", "z"});
  for (int i = 0; i < 5; ++i) {
    Poly f = testing::random_poly(T, rng, 1, 2) + P(T, "x");
    Poly g = testing::random_poly(T, rng, 2, 3);
    Poly h = testing::random_poly(T, rng, 2, 2);
    Ideal J(T, {f * g, h * f});
    Ideal satJ = saturate(J, f);
    for (const auto& gen : J.generators()) CHECK(membership(gen, satJ));
    CHECK(membership(g, satJ));
    CHECK(membership(h, satJ));
  }
}

TEST_CASE("membership") {
  auto C = Ring::make({"z1", "z2"});
  Ideal I = ideal(C, {"z2", "z1^2 - z2^5"});
  CHECK_FALSE(membership(P(C, "z1"), I));
  CHECK(membership(P(C, "z1^2"), I));
  CHECK(membership(Poly(C), I));
  CHECK(membership(Poly(C), Ideal(C)));
  for (const auto& g : I.generators()) CHECK(membership(g, I));
}

TEST_CASE("groebner over a prime field") {
  auto R = Ring::make({"x", "y", "z"}, 32003);
  auto G = buchberger(ideal(R, {"x^2 - y*z", "x*y - z^2", "y^2 - x*z"}));
  CHECK(G.satisfies_buchberger_criterion());
  CHECK(G.contains(P(R, "x^3 - z^3")));
}
