#include "bsk/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <functional>
#include <limits>
#include <sstream>

namespace bsk {

namespace {

std::vector<std::string> marker_names(const Ring& base, const std::string& prefix, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) {
    std::string name = prefix + std::to_string(i);
    while (base.index_of(name)) name += "_";
    names.push_back(name);
  }
  return names;
}

// Layout of an extended ring: [front markers][base variables][back markers].
struct ModuleRing {
  RingPtr ring;
  std::size_t front = 0;
  std::size_t nbase = 0;
  std::size_t back = 0;

  ModuleRing(const RingPtr& base, std::size_t front_count, std::size_t back_count)
      : front(front_count), nbase(base->nvars()), back(back_count) {
    ring = base->with_prepended(marker_names(*base, "@f", front_count))
               ->with_appended(marker_names(*base, "@e", back_count));
  }

  std::vector<std::size_t> markers() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < front; ++i) out.push_back(i);
    for (std::size_t i = 0; i < back; ++i) out.push_back(front + nbase + i);
    return out;
  }

  Poly lift(const Poly& p) const {
    std::vector<std::optional<std::size_t>> map(nbase);
    for (std::size_t i = 0; i < nbase; ++i) map[i] = front + i;
    return p.remap(ring, map);
  }

  Poly front_marker(std::size_t i) const { return Poly::variable(ring, i); }
  Poly back_marker(std::size_t i) const { return Poly::variable(ring, front + nbase + i); }

  // Splits an element with only back markers into its vector of base polynomials.
  std::vector<Poly> to_vector(const Poly& p, const RingPtr& base) const {
    std::vector<std::vector<Term>> parts(back);
    for (const auto& t : p.terms()) {
      std::vector<int> e(nbase);
      for (std::size_t i = 0; i < nbase; ++i) e[i] = t.mono[front + i];
      std::size_t comp = back;
      for (std::size_t i = 0; i < back; ++i) {
        if (t.mono[front + nbase + i]) comp = i;
      }
      if (comp == back) throw Error("module element term without a component");
      parts[comp].push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    std::vector<Poly> out;
    for (auto& terms : parts) out.push_back(Poly::from_terms(base, std::move(terms)));
    return out;
  }

  bool has_front_marker(const Poly& p) const {
    for (const auto& t : p.terms()) {
      for (std::size_t i = 0; i < front; ++i) {
        if (t.mono[i]) return true;
      }
    }
    return false;
  }
};

long vector_degree(const std::vector<Poly>& v, const std::vector<long>& twists) {
  std::optional<long> degree;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!v[i].is_homogeneous()) throw InvalidInput("module element is not homogeneous");
    const long d = v[i].degree().value() + twists[i];
    if (degree && *degree != d) throw InvalidInput("module element is not homogeneous");
    degree = d;
  }
  if (!degree) throw InvalidInput("zero module element has no degree");
  return *degree;
}

bool is_zero_vector(const std::vector<Poly>& v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

}  // namespace

std::vector<Poly> ResolutionStep::column(std::size_t j) const {
  std::vector<Poly> col;
  for (const auto& row : matrix) col.push_back(row.at(j));
  return col;
}

std::vector<std::vector<Poly>> minimal_generators(const RingPtr& ring, const std::vector<long>& twists,
                                                  std::vector<std::vector<Poly>> vectors, const Budget& budget) {
  std::vector<std::pair<long, std::vector<Poly>>> sorted;
  for (auto& v : vectors) {
    if (v.size() != twists.size()) throw InvalidInput("module element has the wrong rank");
    if (is_zero_vector(v)) continue;
    const long d = vector_degree(v, twists);
    sorted.emplace_back(d, std::move(v));
  }
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  ModuleRing mr(ring, 0, twists.size());
  BuchbergerOptions options;
  options.budget = budget;
  options.component_vars = mr.markers();
  auto embed = [&](const std::vector<Poly>& v) {
    Poly e(mr.ring);
    for (std::size_t i = 0; i < v.size(); ++i) e += mr.lift(v[i]) * mr.back_marker(i);
    return e;
  };

  std::vector<std::vector<Poly>> kept;
  std::vector<Poly> kept_embedded;
  std::optional<GroebnerBasis> gb;
  for (auto& [d, v] : sorted) {
    Poly e = embed(v);
    if (gb && gb->contains(e)) continue;
    kept.push_back(std::move(v));
    kept_embedded.push_back(std::move(e));
    gb = buchberger(Ideal(mr.ring, kept_embedded), MonomialOrder::grevlex(), options);
  }
  return kept;
}

ResolutionStep syzygies(const ResolutionStep& step, const Budget& budget) {
  RingPtr base = step.matrix.empty() || step.matrix[0].empty() ? nullptr : step.matrix[0][0].ring();
  if (!base) throw InvalidInput("syzygies of an empty matrix");
  const std::size_t t = step.target.rank();
  const std::size_t s = step.source.rank();
  for (std::size_t j = 0; j < s; ++j) {
    auto col = step.column(j);
    if (!is_zero_vector(col) && vector_degree(col, step.target.twists) != step.source.twists[j]) {
      throw InvalidInput("column degree does not match the source twist");
    }
  }

  // Generators col_j + e_j under a position-over-term order with the target
  // components first; basis elements free of target markers are syzygies.
  ModuleRing mr(base, t, s);
  std::vector<Poly> gens;
  for (std::size_t j = 0; j < s; ++j) {
    Poly g = mr.back_marker(j);
    for (std::size_t i = 0; i < t; ++i) g += mr.lift(step.matrix[i][j]) * mr.front_marker(i);
    gens.push_back(std::move(g));
  }
  BuchbergerOptions options;
  options.budget = budget;
  options.component_vars = mr.markers();
  auto gb = buchberger(Ideal(mr.ring, std::move(gens)), MonomialOrder::elimination(t), options);

  ResolutionStep out;
  out.target = step.source;
  std::vector<std::vector<Poly>> columns;
  std::vector<long> degrees;
  for (const auto& g : gb.basis()) {
    if (mr.has_front_marker(g)) continue;
    auto v = mr.to_vector(g, base);
    degrees.push_back(vector_degree(v, step.source.twists));
    columns.push_back(std::move(v));
  }
  out.source.twists = degrees;
  out.matrix.assign(s, std::vector<Poly>());
  for (std::size_t i = 0; i < s; ++i) {
    for (const auto& c : columns) out.matrix[i].push_back(c[i]);
  }
  return out;
}

FreeResolution minimal_resolution(const Ideal& ideal, const Budget& budget) {
  if (!ideal.is_homogeneous()) throw InvalidInput("minimal resolution requires a homogeneous ideal");
  const RingPtr& ring = ideal.ring();
  FreeResolution res{ring, ideal, {}, true};

  std::vector<std::vector<Poly>> gens;
  for (const auto& g : ideal.generators()) gens.push_back({g.with_order(MonomialOrder::grevlex())});
  gens = minimal_generators(ring, {0}, std::move(gens), budget);
  if (gens.empty()) return res;

  ResolutionStep first;
  first.target.twists = {0};
  first.matrix.assign(1, {});
  for (const auto& g : gens) {
    first.source.twists.push_back(g[0].degree().value());
    first.matrix[0].push_back(g[0]);
  }
  res.steps.push_back(std::move(first));

  while (true) {
    const ResolutionStep& last = res.steps.back();
    ResolutionStep syz = syzygies(last, budget);
    std::vector<std::vector<Poly>> cols;
    for (std::size_t j = 0; j < syz.source.rank(); ++j) cols.push_back(syz.column(j));
    cols = minimal_generators(ring, last.source.twists, std::move(cols), budget);
    if (cols.empty()) break;
    if (res.steps.size() >= ring->nvars()) throw Error("resolution longer than the number of variables");
    ResolutionStep next;
    next.target = last.source;
    next.matrix.assign(next.target.rank(), {});
    for (const auto& c : cols) {
      next.source.twists.push_back(vector_degree(c, next.target.twists));
      for (std::size_t i = 0; i < c.size(); ++i) next.matrix[i].push_back(c[i]);
    }
    res.steps.push_back(std::move(next));
  }
  return res;
}

long BettiTable::at(std::size_t k, long d) const {
  auto it = entries_.find({k, d});
  return it == entries_.end() ? 0 : it->second;
}

std::string BettiTable::format() const {
  std::size_t max_k = 0;
  long min_row = 0;
  long max_row = 0;
  bool first = true;
  for (const auto& [key, count] : entries_) {
    const long row = key.second - static_cast<long>(key.first);
    max_k = std::max(max_k, key.first);
    if (first) {
      min_row = max_row = row;
      first = false;
    }
    min_row = std::min(min_row, row);
    max_row = std::max(max_row, row);
  }
  std::vector<long> totals(max_k + 1, 0);
  for (const auto& [key, count] : entries_) totals[key.first] += count;

  std::size_t width = 1;
  for (long v : totals) width = std::max(width, std::to_string(v).size());
  std::size_t label = std::string("total:").size();
  for (long r = min_row; r <= max_row; ++r) label = std::max(label, std::to_string(r).size() + 1);

  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  os << pad("", label);
  for (std::size_t k = 0; k <= max_k; ++k) os << ' ' << pad(std::to_string(k), width);
  os << '\n' << pad("total:", label);
  for (long v : totals) os << ' ' << pad(std::to_string(v), width);
  os << '\n';
  for (long r = min_row; r <= max_row; ++r) {
    os << pad(std::to_string(r) + ":", label);
    for (std::size_t k = 0; k <= max_k; ++k) {
      long v = at(k, r + static_cast<long>(k));
      os << ' ' << pad(v ? std::to_string(v) : ".", width);
    }
    os << '\n';
  }
  return os.str();
}

BettiTable betti(const FreeResolution& resolution) {
  if (!resolution.minimal) throw InvalidInput("Betti numbers need a minimal resolution");
  std::map<std::pair<std::size_t, long>, long> entries;
  entries[{0, 0}] = 1;
  for (std::size_t k = 0; k < resolution.steps.size(); ++k) {
    for (long d : resolution.steps[k].source.twists) ++entries[{k + 1, d}];
  }
  return BettiTable(std::move(entries));
}

long regularity(const FreeResolution& resolution) {
  if (!resolution.minimal) throw InvalidInput("regularity needs a minimal resolution");
  for (const auto& step : resolution.steps) {
    for (const auto& row : step.matrix) {
      for (const auto& e : row) {
        if (!e.is_zero() && e.is_constant()) throw InvalidInput("resolution has a unit entry, not minimal");
      }
    }
  }
  if (resolution.steps.empty()) return 1;
  long best = std::numeric_limits<long>::min();
  for (std::size_t k = 0; k < resolution.steps.size(); ++k) {
    for (long d : resolution.steps[k].source.twists) best = std::max(best, d - static_cast<long>(k + 1));
  }
  return best + 1;
}

PolyMatrix matrix_product(const PolyMatrix& a, const PolyMatrix& b, const RingPtr& ring) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  PolyMatrix out(rows, std::vector<Poly>(cols, Poly(ring)));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != inner) throw InvalidInput("matrix dimensions do not match");
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t k = 0; k < inner; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Poly determinant(const PolyMatrix& m, const RingPtr& ring) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(ring, 1);
  if (n == 1) return m[0][0];
  Poly det(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      minor.push_back(std::move(row));
    }
    Poly term = m[0][j] * determinant(minor, ring);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

namespace {

std::size_t rank_over(const Ring& field, std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational f = field.div(rows[r][c], rows[rank][c]);
      for (std::size_t k = c; k < ncols; ++k) rows[r][k] = field.sub(rows[r][k], field.mul(f, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::size_t generic_rank(const FreeResolution& resolution, std::size_t k, std::uint64_t seed) {
  if (k == 0 || k > resolution.steps.size()) throw InvalidInput("resolution step out of range");
  // Exactness: rank F_j = r_j + r_{j+1}, and r_{M+1} = 0.
  std::size_t expected = 0;
  for (std::size_t j = resolution.steps.size(); j >= k; --j) {
    expected = resolution.steps[j - 1].source.rank() - expected;
  }
  const ResolutionStep& step = resolution.steps[k - 1];
  const Ring& field = *resolution.ring;
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<Rational> point;
    for (std::size_t v = 0; v < field.nvars(); ++v) {
      point.push_back(field.reduce(Rational(static_cast<long>(rng() % 2001) - 1000)));
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : step.matrix) {
      std::vector<Rational> values;
      for (const auto& e : row) values.push_back(e.evaluate(point));
      rows.push_back(std::move(values));
    }
    best = std::max(best, rank_over(field, std::move(rows)));
    if (best == expected) return expected;
  }
  throw Error("generic rank " + std::to_string(best) + " of step " + std::to_string(k) +
              " disagrees with the alternating rank sum " + std::to_string(expected) + "; complex is not exact");
}

Ideal fitting_ideal(const FreeResolution& resolution, std::size_t k, std::size_t minor_cap) {
  const std::size_t r = generic_rank(resolution, k);
  if (r > minor_cap) {
    throw BudgetExhausted("minor size " + std::to_string(r) + " exceeds the cap of " + std::to_string(minor_cap));
  }
  const ResolutionStep& step = resolution.steps[k - 1];
  const RingPtr& ring = resolution.ring;
  std::vector<Poly> minors;
  if (r == 0) return Ideal(ring, {Poly::constant(ring, 1)});
  for_each_subset(step.target.rank(), r, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(step.source.rank(), r, [&](const std::vector<std::size_t>& cols) {
      PolyMatrix sub;
      for (std::size_t i : rows) {
        std::vector<Poly> row;
        for (std::size_t j : cols) row.push_back(step.matrix[i][j]);
        sub.push_back(std::move(row));
      }
      Poly d = determinant(sub, ring);
      if (!d.is_zero()) minors.push_back(std::move(d));
    });
  });
  return Ideal(ring, std::move(minors));
}

std::vector<std::pair<std::size_t, Codimension>> bef_codims(const FreeResolution& resolution, std::size_t minor_cap,
                                                            const Budget& budget) {
  std::vector<std::pair<std::size_t, Codimension>> out;
  for (std::size_t k = 1; k <= resolution.steps.size(); ++k) {
    out.emplace_back(k, codimension(fitting_ideal(resolution, k, minor_cap), budget));
  }
  return out;
}

}  // namespace bsk
