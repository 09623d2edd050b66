#include "bsk/invariants.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bsk;
using bsk::testing::ideal;
using bsk::testing::P;

namespace {

// Counts monomials of degree D outside the leading-term ideal by enumeration.
Integer standard_monomials(const GroebnerBasis& gb, std::size_t nvars, int degree) {
  Integer count = 0;
  std::vector<int> e(nvars, 0);
  auto lms = gb.leading_monomials();
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars || nvars == 0) {
      if (nvars) e[i] = left;
      if (nvars == 0 && left != 0) return;
      Monomial m(e);
      for (const auto& lm : lms) {
        if (lm.divides(m)) return;
      }
      ++count;
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return count;
}

TPoly T(std::initializer_list<long> c) {
  TPoly p;
  for (long v : c) p.emplace_back(v);
  return p;
}

}  // namespace

TEST_CASE("hilbert numerators") {
  auto R3 = Ring::make({"z0", "z1", "z2"});
  CHECK(hilbert_numerator(buchberger(Ideal(R3))) == T({1}));
  CHECK(hilbert_numerator(buchberger(ideal(R3, {"z1^2*z0^3 - z2^5"}))) == T({1, 0, 0, 0, 0, -1}));

  auto R4 = Ring::make({"z0", "z1", "z2", "z3"});
  auto cubic = buchberger(ideal(R4, {"z0*z2 - z1^2", "z0*z3 - z1*z2", "z1*z3 - z2^2"}));
  CHECK(hilbert_numerator(cubic) == T({1, 0, -3, 2}));

  CHECK_THROWS_AS(hilbert_numerator(buchberger(ideal(R3, {"z1^2 - z0"}))), InvalidInput);
}

TEST_CASE("series expansion matches brute-force standard monomial counts") {
  auto R3 = Ring::make({"z0", "z1", "z2"});
  auto R4 = Ring::make({"z0", "z1", "z2", "z3"});
  std::vector<Ideal> corpus = {
      Ideal(R3),
      ideal(R3, {"z1^2*z0^3 - z2^5"}),
      ideal(R3, {"z1^2*z0 - z2^3"}),
      ideal(R3, {"z0", "z1", "z2"}),
      ideal(R4, {"z0*z2 - z1^2", "z0*z3 - z1*z2", "z1*z3 - z2^2"}),
      ideal(R4, {"z0*z2", "z0*z3", "z1*z2", "z1*z3"}),
      ideal(R4, {"z0^2 + z1^2 - z2^2", "z0*z3 - z1*z2 + z3^2"}),
  };
  for (const auto& I : corpus) {
    auto gb = buchberger(I);
    HilbertData h = hilbert_data(gb);
    for (int D = 0; D <= 8; ++D) CHECK(h.hilbert_function(D) == standard_monomials(gb, I.ring()->nvars(), D));
    // Leading-term ideal under another order gives the same numerator.
    CHECK(hilbert_numerator(buchberger(I, MonomialOrder::lex())) == h.numerator());
    if (!h.is_unit_ideal() && h.krull_dimension() > 0) {
      auto hp = h.hilbert_polynomial();
      for (int D = 10; D <= 14; ++D) {
        Rational v = 0, pw = 1;
        for (const auto& c : hp) {
          v += c * pw;
          pw *= D;
        }
        CHECK(v == Rational(h.hilbert_function(D)));
      }
    }
  }
}

TEST_CASE("projective dimension and degree") {
  auto R3 = Ring::make({"z0", "z1", "z2"});
  HilbertData plane = hilbert_data(buchberger(Ideal(R3)));
  CHECK(proj_dimension(plane) == 2);
  CHECK(proj_degree(plane) == 1);

  for (int p : {3, 5, 7}) {
    std::string cusp = "z1^2*z0^" + std::to_string(p - 2) + " - z2^" + std::to_string(p);
    HilbertData h = hilbert_data(buchberger(ideal(R3, {cusp.c_str()})));
    CHECK(proj_dimension(h) == 1);
    CHECK(proj_degree(h) == p);
  }

  HilbertData empty = hilbert_data(buchberger(ideal(R3, {"z0", "z1", "z2"})));
  CHECK(proj_dimension(empty) == -1);
  CHECK_THROWS_AS(proj_degree(empty), InvalidInput);
  HilbertData unit = hilbert_data(buchberger(ideal(R3, {"1"})));
  CHECK_THROWS_AS(proj_dimension(unit), InvalidInput);

  auto R4 = Ring::make({"z0", "z1", "z2", "z3"});
  HilbertData cubic = hilbert_data(buchberger(ideal(R4, {"z0*z2 - z1^2", "z0*z3 - z1*z2", "z1*z3 - z2^2"})));
  CHECK(proj_dimension(cubic) == 1);
  CHECK(proj_degree(cubic) == 3);
  CHECK(cubic.hilbert_polynomial() == std::vector<Rational>{1, 3});

  HilbertData p3 = hilbert_data(buchberger(Ideal(R4)));
  CHECK(proj_degree(p3) == 1);
}

TEST_CASE("codimension") {
  auto R4 = Ring::make({"z0", "z1", "z2", "z3"});
  CHECK(codimension(ideal(R4, {"z0*z2 - z1^2", "z0*z3 - z1*z2", "z1*z3 - z2^2"})) == Codimension::finite(2));
  CHECK(codimension(ideal(R4, {"z0", "z1", "z2", "z3"})) == Codimension::finite(4));
  CHECK(codimension(ideal(R4, {"1"})).is_infinite());
  CHECK(codimension(Ideal(R4)) == Codimension::finite(0));
}

TEST_CASE("projective closure") {
  auto A = Ring::make({"z1", "z2"});
  Ideal JX = projective_closure(ideal(A, {"z1^2 - z2^5"}));
  CHECK(same_ideal(JX, ideal(JX.ring(), {"z1^2*z0^3 - z2^5"})));

  // Twisted cubic from its affine chart: closure needs the quadrics not in the homogenized generators.
  auto A3 = Ring::make({"z1", "z2", "z3"});
  Ideal cubic = projective_closure(ideal(A3, {"z2 - z1^2", "z3 - z1^3"}));
  CHECK(same_ideal(cubic, ideal(cubic.ring(), {"z0*z2 - z1^2", "z0*z3 - z1*z2", "z1*z3 - z2^2"})));
}

TEST_CASE("empty at infinity") {
  auto P1 = Ring::make({"z0", "z1"});
  auto f = testing::polys(P1, {"z1^2", "z1^2 - 2*z0*z1 + z0^2"});
  CHECK(empty_at_infinity(f, Ideal(P1)));
  CHECK_FALSE(empty_at_infinity(testing::polys(P1, {"z0"}), Ideal(P1)));

  // Kollar data for m = n = 2, d = 2: {z0 = z1 = 0} lies at infinity.
  auto P2 = Ring::make({"z0", "z1", "z2"});
  CHECK_FALSE(empty_at_infinity(testing::polys(P2, {"z1^2", "z1*z2 - z0^2"}), Ideal(P2)));
  CHECK(no_common_zeros(testing::polys(P2, {"z1^2", "z2^2", "z0^2 - z1*z2"}), Ideal(P2)));
  CHECK_FALSE(no_common_zeros(testing::polys(P2, {"z1^2", "z1*z2 - z0^2"}), Ideal(P2)));

  // Invariance under random invertible linear changes of z1..zN.
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> c(-3, 3);
  auto data = std::vector<std::vector<Poly>>{testing::polys(P2, {"z1^2", "z1*z2 - z0^2"}),
                                             testing::polys(P2, {"z1^2 + z0*z2", "z2^2 - z0*z1", "z1*z2"}),
                                             testing::polys(P2, {"z1*z2", "z1^2 - z0^2"})};
  for (const auto& fs : data) {
    const bool expected = empty_at_infinity(fs, Ideal(P2));
    for (int trial = 0; trial < 5; ++trial) {
      int a, b, cc, d;
      do {
        a = c(rng); b = c(rng); cc = c(rng); d = c(rng);
      } while (a * d - b * cc == 0);
      std::vector<Poly> sub = {P(P2, "z0"), P(P2, "z1") * Rational(a) + P(P2, "z2") * Rational(b),
                               P(P2, "z1") * Rational(cc) + P(P2, "z2") * Rational(d)};
      std::vector<Poly> moved;
      for (const auto& g : fs) moved.push_back(g.substitute(sub));
      CHECK(empty_at_infinity(moved, Ideal(P2)) == expected);
    }
  }
}
