#include "bsk/localorder.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "bsk/error.hpp"

namespace bsk {

namespace {

TSeries multiply(const TSeries& a, const TSeries& b) {
  TSeries out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Rational& slot = out[ea + eb];
      slot += ca * cb;
      if (slot == 0) out.erase(ea + eb);
    }
  }
  return out;
}

std::optional<long> order_of(const TSeries& s) {
  if (s.empty()) return std::nullopt;
  return s.begin()->first;
}

// Orders of the generators on one branch: min over j, nullopt if all vanish identically.
std::optional<long> generator_order(std::span<const Poly> generators, const BranchParam& branch) {
  std::optional<long> best;
  for (const auto& f : generators) {
    auto o = vanishing_order(f, branch);
    if (o && (!best || *o < *best)) best = o;
  }
  return best;
}

// Phase-one simplex with Bland's rule: is {x >= 0 : A x = b} nonempty? Requires b >= 0.
bool feasible(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  const std::size_t width = cols + rows + 1;
  std::vector<std::vector<Rational>> T(rows, std::vector<Rational>(width));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) T[i][j] = A[i][j];
    T[i][cols + i] = 1;
    T[i][width - 1] = b[i];
    basis[i] = cols + i;
  }
  // Reduced costs of the sum of artificials.
  std::vector<Rational> cost(width);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      if (j < cols || j == width - 1) cost[j] -= T[i][j];
    }
  }
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][width - 1] / T[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot happen for a bounded phase one
    const Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const Rational f = T[i][enter];
      for (std::size_t j = 0; j < width; ++j) T[i][j] -= f * T[leave][j];
    }
    const Rational f = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= f * T[leave][j];
    basis[leave] = enter;
  }
  return cost[width - 1] == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BranchParam::BranchParam(RingPtr r, std::vector<TSeries> comps) : ring(std::move(r)), components(std::move(comps)) {
  if (!ring) throw InvalidInput("branch without a ring");
  if (components.size() != ring->nvars()) throw InvalidInput("branch needs one component per variable");
  bool moving = false;
  for (auto& c : components) {
    for (auto it = c.begin(); it != c.end();) {
      if (it->first < 0) throw InvalidInput("branch components must have nonnegative exponents");
      it = it->second == 0 ? c.erase(it) : std::next(it);
    }
    moving = moving || std::any_of(c.begin(), c.end(), [](const auto& t) { return t.first > 0; });
  }
  if (!moving) throw InvalidInput("branch is constant");
}

std::vector<Rational> BranchParam::base_point() const {
  std::vector<Rational> out;
  for (const auto& c : components) {
    auto it = c.find(0);
    out.push_back(it == c.end() ? Rational(0) : it->second);
  }
  return out;
}

bool BranchParam::is_monomial() const {
  return std::all_of(components.begin(), components.end(), [](const TSeries& c) { return c.size() <= 1; });
}

std::string BranchParam::to_string() const {
  auto tr = Ring::make({"t"});
  std::string out = "branch:";
  for (std::size_t i = 0; i < components.size(); ++i) {
    std::vector<Term> terms;
    for (const auto& [e, c] : components[i]) terms.push_back(Term{Monomial(std::vector<int>{static_cast<int>(e)}), c});
    out += (i ? "; " : " ") + ring->name(i) + " = " + format(Poly::from_terms(tr, std::move(terms)));
  }
  return out;
}

TSeries pullback(const Poly& p, const BranchParam& branch) {
  if (!p.ring()->same_as(*branch.ring)) throw RingMismatch("branch and polynomial live in different rings");
  std::vector<std::vector<TSeries>> powers(branch.components.size());
  auto power = [&](std::size_t i, int e) -> const TSeries& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(TSeries{{0, Rational(1)}});
    while (static_cast<int>(cache.size()) <= e) cache.push_back(multiply(cache.back(), branch.components[i]));
    return cache[e];
  };
  TSeries out;
  for (const auto& t : p.terms()) {
    TSeries term{{0, t.coeff}};
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i]) term = multiply(term, power(i, t.mono[i]));
    }
    for (const auto& [e, c] : term) {
      Rational& slot = out[e];
      slot += c;
      if (slot == 0) out.erase(e);
    }
  }
  return out;
}

std::optional<long> vanishing_order(const Poly& p, const BranchParam& branch) { return order_of(pullback(p, branch)); }

bool bs_exponent_check(std::span<const Poly> generators, const Poly& phi, const Rational& k,
                       std::span<const BranchParam> branches) {
  if (branches.empty()) throw InvalidInput("bs_exponent_check needs at least one branch");
  if (k < 0) throw InvalidInput("exponent must be nonnegative");
  for (const auto& b : branches) {
    auto of = generator_order(generators, b);
    auto op = vanishing_order(phi, b);
    if (!op) continue;
    if (!of) {
      if (k > 0) return false;
      continue;
    }
    if (Rational(*op) < k * *of) return false;
  }
  return true;
}

std::optional<Rational> max_bs_exponent(std::span<const Poly> generators, const Poly& phi,
                                        std::span<const BranchParam> branches) {
  if (branches.empty()) throw InvalidInput("max_bs_exponent needs at least one branch");
  std::optional<Rational> best;
  for (const auto& b : branches) {
    auto of = generator_order(generators, b);
    if (!of) throw InvalidInput("generators vanish identically on " + b.to_string());
    if (*of == 0) throw InvalidInput("generators do not all vanish at the base point of " + b.to_string());
    auto op = vanishing_order(phi, b);
    if (!op) continue;
    Rational r(*op, *of);
    r.canonicalize();
    if (!best || r < *best) best = r;
  }
  return best;
}

long local_bs_number(const Poly& g, const BranchParam& branch) {
  if (!branch.is_monomial()) throw InvalidInput("local_bs_number needs a monomial branch");
  const TSeries pulled = pullback(g, branch);
  if (pulled.size() != 1) throw InvalidInput("local_bs_number needs g to pull back to a monomial");
  const long e = pulled.begin()->first;
  if (e == 0) return 0;  // g is a unit

  std::vector<long> gens;
  for (const auto& c : branch.components) {
    if (!c.empty() && c.begin()->first > 0) gens.push_back(c.begin()->first);
  }
  long g0 = 0;
  for (long a : gens) g0 = std::gcd(g0, a);
  if (g0 != 1) throw InvalidInput("branch parametrization is not primitive (exponent gcd " + std::to_string(g0) + ")");

  // Membership in the semigroup until min(gens) consecutive members appear.
  const long smallest = *std::min_element(gens.begin(), gens.end());
  std::vector<bool> in{true};
  long run = 1;
  while (run < smallest || static_cast<long>(in.size()) < e + 1) {
    const long s = static_cast<long>(in.size());
    bool member = std::any_of(gens.begin(), gens.end(), [&](long a) { return a <= s && in[s - a]; });
    in.push_back(member);
    run = member ? run + 1 : 0;
  }
  const long conductor = static_cast<long>(in.size()) - run;
  auto member = [&](long s) { return s >= conductor || (s >= 0 && in[s]); };

  long bad = -1;
  for (long s = 0; s < conductor + e; ++s) {
    if (member(s) && !member(s - e)) bad = s;
  }
  return bad < 0 ? 0 : bad / e;
}

bool monomial_integral_closure(const Monomial& phi, std::span<const Monomial> region, long k) {
  if (k < 1) throw InvalidInput("closure exponent must be at least 1");
  if (region.empty()) throw InvalidInput("empty Newton region");
  const std::size_t n = phi.size();
  for (const auto& a : region) {
    if (a.size() != n) throw InvalidInput("Newton region exponent vectors differ in length");
  }
  // Variables: lambda_a (one per generator), then slacks s_i.
  // k * sum lambda_a a_i + s_i = phi_i;  sum lambda_a = 1.
  const std::size_t g = region.size();
  std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(g + n));
  std::vector<Rational> b(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < g; ++a) A[i][a] = k * region[a][i];
    A[i][g + i] = 1;
    b[i] = phi[i];
  }
  for (std::size_t a = 0; a < g; ++a) A[n][a] = 1;
  b[n] = 1;
  return feasible(A, b);
}

BranchParam parse_branch(std::string_view line, const RingPtr& ring) {
  std::string_view body = trim(line);
  constexpr std::string_view kPrefix = "branch:";
  if (body.substr(0, kPrefix.size()) != kPrefix) throw ParseError("expected 'branch:'", 0);
  body.remove_prefix(kPrefix.size());
  auto tr = Ring::make({"t"});
  std::vector<TSeries> comps(ring->nvars());
  std::vector<bool> seen(ring->nvars(), false);
  const std::size_t base = line.size() - body.size();
  std::size_t offset = 0;
  while (offset <= body.size()) {
    std::size_t end = body.find(';', offset);
    if (end == std::string_view::npos) end = body.size();
    std::string_view piece = body.substr(offset, end - offset);
    const std::size_t at = base + offset;
    if (!trim(piece).empty()) {
      const std::size_t eq = piece.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected 'variable = series'", at);
      const std::string name(trim(piece.substr(0, eq)));
      auto idx = ring->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", at);
      if (seen[*idx]) throw ParseError("variable '" + name + "' given twice", at);
      seen[*idx] = true;
      Poly s = parse_poly(piece.substr(eq + 1), tr);
      for (const auto& t : s.terms()) comps[*idx][t.mono[0]] = t.coeff;
    }
    offset = end + 1;
  }
  return BranchParam(ring, std::move(comps));
}

std::vector<BranchParam> parse_branches(std::string_view text, const RingPtr& ring) {
  std::vector<BranchParam> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    out.push_back(parse_branch(line, ring));
  }
  return out;
}

}  // namespace bsk
