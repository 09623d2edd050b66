#include "bsk/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bsk {

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!g.ring()->same_as(*ring_)) throw RingMismatch("ideal generator lives in a different ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Poly& g) { return g.is_homogeneous(); });
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!ring_->same_as(*other.ring_)) throw RingMismatch("ideals live in different rings");
  std::vector<Poly> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::with(const Poly& extra) const {
  std::vector<Poly> gens = generators_;
  gens.push_back(extra);
  return Ideal(ring_, std::move(gens));
}

// ---------------------------------------------------------------------------

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Poly> basis, bool reduced)
    : ring_(std::move(ring)), order_(std::move(order)), basis_(std::move(basis)), reduced_(reduced) {
  for (auto& g : basis_) g = g.with_order(order_);
}

bool GroebnerBasis::is_unit() const {
  return std::any_of(basis_.begin(), basis_.end(), [](const Poly& g) { return !g.is_zero() && g.is_constant(); });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& g : basis_) out.push_back(g.leading_monomial());
  return out;
}

Poly GroebnerBasis::normal_form(const Poly& p) const { return reduce(p, nullptr); }

Poly GroebnerBasis::normal_form(const Poly& p, std::mt19937_64& rng) const { return reduce(p, &rng); }

namespace {

Poly reduce_by(const std::vector<Poly>& basis_, const RingPtr& ring_, const MonomialOrder& order_, const Poly& p,
               std::mt19937_64* rng) {
  if (!p.ring()->same_as(*ring_)) throw RingMismatch("normal form across different rings");
  const Ring& ring = *ring_;
  auto cmp = [&order_](const Monomial& a, const Monomial& b) { return order_.compare(a, b) > 0; };
  std::map<Monomial, Rational, decltype(cmp)> work(cmp);
  for (const auto& t : p.terms()) work.emplace(t.mono, t.coeff);

  std::vector<Term> remainder;
  std::vector<std::size_t> eligible;
  while (!work.empty()) {
    auto top = work.begin();
    const Monomial mono = top->first;
    const Rational coeff = top->second;
    eligible.clear();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i].leading_monomial().divides(mono)) {
        eligible.push_back(i);
        if (!rng) break;
      }
    }
    if (eligible.empty()) {
      remainder.push_back(Term{mono, coeff});
      work.erase(top);
      continue;
    }
    std::size_t pick = eligible.front();
    if (rng) pick = eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(*rng)];
    const Poly& g = basis_[pick];
    const Monomial shift = mono / g.leading_monomial();
    const Rational factor = ring.div(coeff, g.leading_coeff());
    work.erase(top);
    for (std::size_t k = 1; k < g.terms().size(); ++k) {
      const Term& t = g.terms()[k];
      Rational delta = ring.neg(ring.mul(factor, t.coeff));
      auto [it, inserted] = work.try_emplace(t.mono * shift, delta);
      if (!inserted) {
        it->second = ring.add(it->second, delta);
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return Poly::from_terms(ring_, std::move(remainder), order_);
}

}  // namespace

Poly GroebnerBasis::reduce(const Poly& p, std::mt19937_64* rng) const {
  return reduce_by(basis_, ring_, order_, p, rng);
}

namespace {

int marker_degree(const Monomial& m, const std::vector<std::size_t>& component_vars) {
  int d = 0;
  for (std::size_t v : component_vars) d += m[v];
  return d;
}

}  // namespace

bool GroebnerBasis::satisfies_buchberger_criterion(const std::vector<std::size_t>& component_vars) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      const Monomial l = basis_[i].leading_monomial().lcm(basis_[j].leading_monomial());
      if (!component_vars.empty() && marker_degree(l, component_vars) > 1) continue;
      if (!normal_form(s_polynomial(basis_[i], basis_[j])).is_zero()) return false;
    }
  }
  return true;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const Ring& ring = *f.ring();
  Poly a = f.mul_term(l / f.leading_monomial(), ring.div(1, f.leading_coeff()));
  Poly b = g.with_order(f.order()).mul_term(l / g.leading_monomial(), ring.div(1, g.leading_coeff()));
  return a - b;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

std::vector<Poly> interreduce(const RingPtr& ring, const MonomialOrder& order, std::vector<Poly> polys) {
  // Drop elements whose leading monomial is divisible by another one.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < polys.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = polys[i].leading_monomial();
      const auto& lj = polys[j].leading_monomial();
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(polys[i].monic());
  }
  std::vector<Poly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    GroebnerBasis rest(ring, order, std::move(others), false);
    // The leading term is irreducible by the others, so only the tail changes.
    reduced.push_back(rest.normal_form(minimal[i]).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return reduced;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const BuchbergerOptions& options) {
  const RingPtr& ring = ideal.ring();
  const auto& markers = options.component_vars;
  std::vector<Poly> basis;
  for (const auto& g : ideal.generators()) basis.push_back(g.with_order(order).monic());
  if (basis.empty()) return GroebnerBasis(ring, order, {}, true);
  if (markers.empty()) {
    for (const auto& g : basis) {
      if (g.is_constant()) return GroebnerBasis(ring, order, {Poly::constant(ring, 1, order)}, true);
    }
  }

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
      if (!markers.empty() && marker_degree(l, markers) > 1) continue;
      pending.push_back(Pair{i, j, std::move(l)});
      open.emplace(i, j);
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  std::size_t processed = 0;
  while (!pending.empty()) {
    // Normal strategy: smallest lcm first, ties broken by the order, then indices.
    auto best = pending.begin();
    for (auto it = pending.begin() + 1; it != pending.end(); ++it) {
      if (it->lcm.degree() != best->lcm.degree()) {
        if (it->lcm.degree() < best->lcm.degree()) best = it;
        continue;
      }
      int c = order.compare(it->lcm, best->lcm);
      if (c < 0 || (c == 0 && std::make_pair(it->j, it->i) < std::make_pair(best->j, best->i))) best = it;
    }
    Pair pair = std::move(*best);
    pending.erase(best);
    open.erase({pair.i, pair.j});

    if (++processed > options.budget.max_pairs) {
      throw BudgetExhausted("Groebner basis: pair budget of " + std::to_string(options.budget.max_pairs) +
                            " exhausted");
    }
    if (pair.lcm.degree() > options.budget.max_degree) {
      throw BudgetExhausted("Groebner basis: degree budget of " + std::to_string(options.budget.max_degree) +
                            " exhausted");
    }
    const Monomial& li = basis[pair.i].leading_monomial();
    const Monomial& lj = basis[pair.j].leading_monomial();
    if (li.coprime(lj)) continue;

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis[k].leading_monomial().divides(pair.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
      if (!open.count(key(pair.i, k)) && !open.count(key(pair.j, k))) chain = true;
    }
    if (chain) continue;

    Poly h = reduce_by(basis, ring, order, s_polynomial(basis[pair.i], basis[pair.j]), nullptr);
    if (h.is_zero()) continue;
    if (markers.empty() && h.is_constant()) return GroebnerBasis(ring, order, {Poly::constant(ring, 1, order)}, true);
    basis.push_back(h.monic());
    add_pairs_for(basis.size() - 1);
  }
  return GroebnerBasis(ring, order, interreduce(ring, order, std::move(basis)), true);
}

Ideal eliminate(const Ideal& ideal, std::size_t count, const Budget& budget) {
  if (count == 0) return ideal;
  if (count > ideal.ring()->nvars()) throw InvalidInput("cannot eliminate more variables than the ring has");
  BuchbergerOptions options;
  options.budget = budget;
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::elimination(count), options);
  std::vector<Poly> kept;
  for (const auto& g : gb.basis()) {
    bool free = true;
    for (std::size_t v = 0; v < count && free; ++v) free = !g.involves(v);
    if (free) kept.push_back(g.with_order(MonomialOrder::grevlex()));
  }
  return Ideal(ideal.ring(), std::move(kept));
}

Ideal saturate(const Ideal& ideal, const Poly& f, const Budget& budget) {
  if (f.is_zero()) throw InvalidInput("saturation by the zero polynomial");
  const RingPtr& ring = ideal.ring();
  std::string tname = "sat_t";
  while (ring->index_of(tname)) tname += "_";
  RingPtr extended = ring->with_prepended({tname});
  std::vector<std::optional<std::size_t>> up(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i) up[i] = i + 1;

  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.remap(extended, up));
  Poly t = Poly::variable(extended, 0);
  gens.push_back(Poly::constant(extended, 1) - t * f.remap(extended, up));
  Ideal eliminated = eliminate(Ideal(extended, std::move(gens)), 1, budget);

  std::vector<std::optional<std::size_t>> down(extended->nvars());
  for (std::size_t i = 1; i < extended->nvars(); ++i) down[i] = i - 1;
  std::vector<Poly> result;
  for (const auto& g : eliminated.generators()) result.push_back(g.remap(ring, down));
  BuchbergerOptions options;
  options.budget = budget;
  return Ideal(ring, buchberger(Ideal(ring, std::move(result)), MonomialOrder::grevlex(), options).basis());
}

bool membership(const Poly& p, const Ideal& ideal, const Budget& budget) {
  if (p.is_zero()) return true;
  BuchbergerOptions options;
  options.budget = budget;
  return buchberger(ideal, MonomialOrder::grevlex(), options).contains(p.with_order(MonomialOrder::grevlex()));
}

bool same_ideal(const Ideal& a, const Ideal& b, const Budget& budget) {
  BuchbergerOptions options;
  options.budget = budget;
  auto ga = buchberger(a, MonomialOrder::grevlex(), options).basis();
  auto gb = buchberger(b, MonomialOrder::grevlex(), options).basis();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (ga[i] != gb[i]) return false;
  }
  return true;
}

}  // namespace bsk
