#include "bsk/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bsk/error.hpp"

namespace bsk {

namespace {

// Column ncols holds the right-hand side.
using IntRow = std::vector<std::pair<std::size_t, Integer>>;

void remove_content(IntRow& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(const SparseEquation& eq, std::size_t ncols) {
  Integer den = 1;
  for (const auto& [c, v] : eq.entries) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), eq.rhs.get_den_mpz_t());
  IntRow row;
  row.reserve(eq.entries.size() + 1);
  std::size_t last = 0;
  bool first = true;
  for (const auto& [c, v] : eq.entries) {
    if (c >= ncols) throw InvalidInput("equation references a column out of range");
    if (!first && c <= last) throw InvalidInput("equation entries must be sorted by column without repeats");
    first = false;
    last = c;
    if (v == 0) continue;
    row.emplace_back(c, Integer(v.get_num() * (den / v.get_den())));
  }
  if (eq.rhs != 0) row.emplace_back(ncols, Integer(eq.rhs.get_num() * (den / eq.rhs.get_den())));
  remove_content(row);
  return row;
}

// target <- p * target - a * pivot, where p and a are the entries at the pivot column.
IntRow combine(const IntRow& target, const IntRow& pivot) {
  const Integer& p = pivot.front().second;
  const Integer& a = target.front().second;
  Integer g = gcd(p, a);
  Integer pm = p / g;
  Integer am = a / g;
  IntRow out;
  out.reserve(target.size() + pivot.size());
  std::size_t i = 1;
  std::size_t j = 1;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
      out.emplace_back(target[i].first, Integer(pm * target[i].second));
      ++i;
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      out.emplace_back(pivot[j].first, Integer(-am * pivot[j].second));
      ++j;
    } else {
      Integer v = pm * target[i].second - am * pivot[j].second;
      if (v != 0) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  remove_content(out);
  return out;
}

}  // namespace

std::optional<std::vector<Rational>> solve_sparse(std::size_t ncols, std::vector<SparseEquation> equations,
                                                  std::size_t max_nonzeros, LinearSolveStats* stats) {
  std::vector<IntRow> rows;
  rows.reserve(equations.size());
  std::size_t nonzeros = 0;
  for (const auto& eq : equations) {
    IntRow r = to_integer_row(eq, ncols);
    nonzeros += r.size();
    if (nonzeros > max_nonzeros) {
      throw BudgetExhausted("linear system exceeds the matrix budget of " + std::to_string(max_nonzeros) +
                            " entries");
    }
    if (!r.empty()) rows.push_back(std::move(r));
  }
  equations.clear();

  // Active rows bucketed by leading column; each bucket ordered by row id.
  std::map<std::size_t, std::set<std::size_t>> by_lead;
  for (std::size_t i = 0; i < rows.size(); ++i) by_lead[rows[i].front().first].insert(i);

  std::vector<std::size_t> pivot_rows;
  while (!by_lead.empty()) {
    auto bucket = by_lead.begin();
    const std::size_t col = bucket->first;
    std::set<std::size_t> candidates = std::move(bucket->second);
    by_lead.erase(bucket);
    if (col == ncols) return std::nullopt;  // 0 = nonzero
    std::size_t pivot = *candidates.begin();
    for (std::size_t r : candidates) {
      if (rows[r].size() < rows[pivot].size()) pivot = r;
    }
    pivot_rows.push_back(pivot);
    for (std::size_t r : candidates) {
      if (r == pivot) continue;
      IntRow reduced = combine(rows[r], rows[pivot]);
      nonzeros += reduced.size();
      if (nonzeros > 8 * max_nonzeros) {
        throw BudgetExhausted("linear system fill-in exceeds the matrix budget");
      }
      rows[r] = std::move(reduced);
      if (!rows[r].empty()) by_lead[rows[r].front().first].insert(r);
    }
  }

  std::vector<Rational> x(ncols, 0);
  for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
    const IntRow& row = rows[*it];
    Rational acc = 0;
    for (std::size_t k = 1; k < row.size(); ++k) {
      if (row[k].first == ncols) {
        acc += Rational(row[k].second);
      } else {
        acc -= Rational(row[k].second) * x[row[k].first];
      }
    }
    x[row.front().first] = acc / Rational(row.front().second);
  }
  if (stats) {
    stats->rank = pivot_rows.size();
    stats->nonzeros = nonzeros;
  }
  return x;
}

std::size_t dense_rank(std::vector<std::vector<Rational>> rows) {
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
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < ncols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace bsk
