#include <algorithm>
#include <random>

#include "bsk/resolution.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bsk;
using bsk::testing::ideal;
using bsk::testing::P;

namespace {

// sum_k (-1)^k beta_{k,d} t^d, to compare with the Hilbert numerator of S/J.
TPoly betti_numerator(const BettiTable& table) {
  TPoly out;
  for (const auto& [key, count] : table.entries()) {
    auto d = static_cast<std::size_t>(key.second);
    if (out.size() <= d) out.resize(d + 1, Integer(0));
    out[d] += (key.first % 2 ? -1 : 1) * count;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

TPoly trimmed(TPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

void check_complex(const FreeResolution& res) {
  const auto& ring = res.ring;
  for (std::size_t k = 0; k < res.steps.size(); ++k) {
    const auto& step = res.steps[k];
    REQUIRE(step.matrix.size() == step.target.rank());
    for (std::size_t i = 0; i < step.target.rank(); ++i) {
      REQUIRE(step.matrix[i].size() == step.source.rank());
      for (std::size_t j = 0; j < step.source.rank(); ++j) {
        const Poly& e = step.matrix[i][j];
        if (e.is_zero()) continue;
        CHECK(e.is_homogeneous());
        CHECK(e.degree().value() == step.source.twists[j] - step.target.twists[i]);
        CHECK_FALSE(e.is_constant());
      }
    }
    if (k > 0) {
      auto product = matrix_product(res.steps[k - 1].matrix, step.matrix, ring);
      for (const auto& row : product) {
        for (const auto& e : row) CHECK(e.is_zero());
      }
    }
  }
  CHECK(res.length() <= ring->nvars());
}

Ideal twisted_cubic(const RingPtr& R) {
  return ideal(R, {"z0*z2 - z1^2", "z0*z3 - z1*z2", "z1*z3 - z2^2"});
}

}  // namespace

TEST_CASE("koszul complex of two variables") {
  auto R = Ring::make({"x", "y"});
  auto res = minimal_resolution(ideal(R, {"x", "y"}));
  REQUIRE(res.length() == 2);
  CHECK(res.steps[0].source.twists == std::vector<long>{1, 1});
  CHECK(res.steps[1].source.twists == std::vector<long>{2});
  auto col = res.steps[1].column(0);
  // Unique up to scalar: (-y, x).
  CHECK(col[0] * P(R, "x") + col[1] * P(R, "y") == Poly(R));
  CHECK(col[0].monic() == P(R, "y"));
  CHECK(col[1].monic() == P(R, "x"));
  check_complex(res);
  CHECK(regularity(res) == 1);
}

TEST_CASE("principal ideals") {
  auto R = Ring::make({"z0", "z1", "z2"});
  for (int p : {3, 5, 7}) {
    auto f = "z1^2*z0^" + std::to_string(p - 2) + " - z2^" + std::to_string(p);
    auto res = minimal_resolution(Ideal(R, {P(R, f)}));
    REQUIRE(res.length() == 1);
    CHECK(res.steps[0].source.twists == std::vector<long>{p});
    CHECK(regularity(res) == p);
    auto b = betti(res);
    CHECK(b.at(1, p) == 1);
    CHECK(b.at(0, 0) == 1);
  }
}

TEST_CASE("twisted cubic") {
  auto R = Ring::make({"z0", "z1", "z2", "z3"});
  auto res = minimal_resolution(twisted_cubic(R));
  REQUIRE(res.length() == 2);
  CHECK(res.steps[0].source.twists == std::vector<long>{2, 2, 2});
  CHECK(res.steps[1].source.twists == std::vector<long>{3, 3});
  check_complex(res);
  CHECK(regularity(res) == 2);
  auto b = betti(res);
  CHECK(b.at(1, 2) == 3);
  CHECK(b.at(2, 3) == 2);
  CHECK(b.format() ==
        "       0 1 2\n"
        "total: 1 3 2\n"
        "    0: 1 . .\n"
        "    1: . 3 2\n");

  CHECK(generic_rank(res, 1) == 1);
  CHECK(generic_rank(res, 2) == 2);
  auto codims = bef_codims(res);
  REQUIRE(codims.size() == 2);
  CHECK(codims[0].second == Codimension::finite(2));
  CHECK(codims[1].second == Codimension::finite(2));
}

TEST_CASE("linear spaces and the empty ideal") {
  auto R = Ring::make({"z0", "z1", "z2"});
  auto zero = minimal_resolution(Ideal(R));
  CHECK(zero.length() == 0);
  CHECK(regularity(zero) == 1);

  auto point = minimal_resolution(ideal(R, {"z1", "z2"}));
  CHECK(regularity(point) == 1);
  CHECK(betti(point).at(2, 2) == 1);

  auto maximal = minimal_resolution(ideal(R, {"z0", "z1", "z2"}));
  CHECK(maximal.length() == 3);
  CHECK(betti(maximal).at(2, 2) == 3);
  CHECK(betti(maximal).at(3, 3) == 1);
  check_complex(maximal);
}

TEST_CASE("betti numbers match hilbert numerators") {
  auto R3 = Ring::make({"z0", "z1", "z2"});
  auto R4 = Ring::make({"z0", "z1", "z2", "z3"});
  std::vector<Ideal> corpus = {
      ideal(R3, {"z1^2*z0 - z2^3"}),
      ideal(R3, {"z0^2", "z0*z1", "z1^3"}),
      ideal(R3, {"z0*z1", "z1*z2", "z0*z2"}),
      ideal(R3, {"z0^2 - z1*z2", "z1^2 - z0*z2"}),
      twisted_cubic(R4),
      ideal(R4, {"z0*z2", "z0*z3", "z1*z2", "z1*z3"}),
      ideal(R4, {"z0*z3 - z1*z2", "z0^2 + z1^2 - z2*z3"}),
      ideal(R4, {"z0^2", "z1^2", "z2^2", "z0*z1*z2*z3"}),
  };
  for (const auto& I : corpus) {
    auto res = minimal_resolution(I);
    check_complex(res);
    auto gb = buchberger(I);
    CHECK(betti_numerator(betti(res)) == trimmed(hilbert_numerator(gb)));
  }
}

TEST_CASE("regularity does not depend on generator order or redundancy") {
  auto R = Ring::make({"z0", "z1", "z2", "z3"});
  auto gens = twisted_cubic(R).generators();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 4; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    auto extra = gens;
    extra.push_back(gens[0] * P(R, "z1") + gens[1] * P(R, "z3"));
    auto res = minimal_resolution(Ideal(R, extra));
    CHECK(regularity(res) == 2);
    CHECK(res.steps[0].source.rank() == 3);
  }
}

TEST_CASE("buchsbaum-eisenbud codimensions") {
  auto R4 = Ring::make({"z0", "z1", "z2", "z3"});
  // Two skew lines: pure of codimension 2 but not arithmetically Cohen-Macaulay.
  auto skew = ideal(R4, {"z0*z2", "z0*z3", "z1*z2", "z1*z3"});
  auto res = minimal_resolution(skew);
  REQUIRE(res.length() == 3);
  auto codims = bef_codims(res);
  for (const auto& [k, c] : codims) CHECK(c.at_least(static_cast<long>(k)));
  CHECK(codims[2].second.at_least(4));

  auto R3 = Ring::make({"z0", "z1", "z2"});
  auto ci = minimal_resolution(ideal(R3, {"z0^2 - z1*z2", "z1^2 - z0*z2"}));
  for (const auto& [k, c] : bef_codims(ci)) CHECK(c.at_least(static_cast<long>(k)));
  CHECK_THROWS_AS(bef_codims(res, 1), BudgetExhausted);
}

TEST_CASE("cohen-macaulay regularity bound") {
  auto R4 = Ring::make({"z0", "z1", "z2", "z3"});
  auto R3 = Ring::make({"z0", "z1", "z2"});
  // Arithmetically Cohen-Macaulay examples: reg(S/J) <= deg - codim.
  std::vector<Ideal> corpus = {twisted_cubic(R4), ideal(R3, {"z1^2*z0 - z2^3"}),
                               ideal(R4, {"z0*z3 - z1*z2", "z0^2 + z1^2 - z2*z3"})};
  for (const auto& I : corpus) {
    auto res = minimal_resolution(I);
    auto data = hilbert_data(buchberger(I));
    long codim = static_cast<long>(I.ring()->nvars()) - data.krull_dimension();
    CHECK(regularity(res) - 1 <= proj_degree(data).get_si() - codim);
  }
}

TEST_CASE("syzygies reject inhomogeneous columns") {
  auto R = Ring::make({"x", "y"});
  ResolutionStep step;
  step.target.twists = {0};
  step.source.twists = {1};
  step.matrix = {{P(R, "x + y^2")}};
  CHECK_THROWS_AS(syzygies(step), InvalidInput);
  CHECK_THROWS_AS(minimal_resolution(ideal(R, {"x - 1"})), InvalidInput);
}

TEST_CASE("determinants") {
  auto R = Ring::make({"a", "b", "c", "d"});
  PolyMatrix m = {{P(R, "a"), P(R, "b")}, {P(R, "c"), P(R, "d")}};
  CHECK(determinant(m, R) == P(R, "a*d - b*c"));
  PolyMatrix id = {{P(R, "1"), P(R, "0"), P(R, "0")}, {P(R, "0"), P(R, "a"), P(R, "0")}, {P(R, "0"), P(R, "0"), P(R, "b")}};
  CHECK(determinant(id, R) == P(R, "a*b"));
}
