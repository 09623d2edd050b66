#include "bsk/bench.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "bsk/error.hpp"
#include "bsk/invariants.hpp"

namespace bsk {

namespace {

std::string var(long i) { return "z" + std::to_string(i); }

RingPtr affine_space_ring(long n) {
  std::vector<std::string> names;
  for (long i = 1; i <= n; ++i) names.push_back(var(i));
  return Ring::make(names);
}

std::string pw(const std::string& v, long e) {
  if (e == 0) return "1";
  return e == 1 ? v : v + "^" + std::to_string(e);
}

std::string str(const std::optional<Integer>& v) { return v ? v->get_str() : ""; }

// Bound columns shared by all families.
void fill_bounds(BenchRow& row, const BoundInputs& in) {
  auto report = comparison_bounds(in);
  auto get = [&](const char* name) -> std::optional<Integer> {
    const BoundEntry* e = report.find(name);
    return e ? e->value : std::nullopt;
  };
  row.hickel_i = get("hickel_i");
  row.macaulay = get("macaulay");
  row.jelonek = get("jelonek");
  row.hermann = get("hermann");
}

void solve_row(BenchRow& row, const MembershipInstance& inst, long rho_max, const BenchConfig& config) {
  SearchOptions options;
  options.budget = config.budget;
  options.max_nonzeros = config.max_nonzeros;
  try {
    auto result = minimal_degree(inst, rho_max, options);
    if (!result.rho_min) {
      row.rho_min = "none";
      return;
    }
    row.rho_min = std::to_string(*result.rho_min);
    if (row.hickel_i) row.slack = *row.hickel_i - *result.rho_min;
  } catch (const BudgetExhausted&) {
    row.rho_min = "budget";
  }
}

template <typename Fn>
BenchRow timed(const BenchConfig& config, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  BenchRow row = fn();
  if (config.timing) {
    row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return row;
}

long scan_limit(const BenchRow& row, long fallback) {
  if (row.hickel_i && *row.hickel_i <= 64) return row.hickel_i->get_si();
  return fallback;
}

}  // namespace

InstanceFile kollar_instance(long d, long m, long n) {
  if (d < 1 || m < 2 || m > n) throw InvalidInput("kollar family needs d >= 1 and 2 <= m <= n");
  InstanceFile file;
  file.ring = affine_space_ring(n);
  const std::string tail = pw(var(m), d - 1);
  auto times = [&](const std::string& a) { return tail == "1" ? a : a + "*" + tail; };
  file.generators.push_back(parse_poly(pw(var(1), d), file.ring));
  for (long j = 2; j < m; ++j) {
    file.generators.push_back(parse_poly(times(var(j - 1)) + " - " + pw(var(j), d), file.ring));
  }
  file.generators.push_back(parse_poly(times(var(m - 1)) + " - 1", file.ring));
  file.target = Poly::constant(file.ring, 1);
  file.params.smooth = true;
  file.params.mu_zero = 0;
  file.params.c_inf = CInfinity::explicit_value(m);
  return file;
}

InstanceFile macaulay_generic_instance(long d, long n, std::uint64_t seed, const BenchConfig& config) {
  if (d < 1 || n < 1) throw InvalidInput("macaulay-generic family needs d >= 1 and n >= 1");
  InstanceFile file;
  file.ring = affine_space_ring(n);
  const RingPtr proj = projective_ring(file.ring);
  std::mt19937_64 rng(seed);
  std::vector<Monomial> monos;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == e.size()) {
      monos.emplace_back(e);
      return;
    }
    for (long k = 0; k <= left; ++k) {
      e[i] = static_cast<int>(k);
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, d);
  auto sample = [&]() {
    while (true) {
      std::vector<Term> terms;
      for (const auto& mono : monos) {
        const long c = static_cast<long>(rng() % 7) - 3;
        if (c != 0) terms.push_back(Term{mono, Rational(c)});
      }
      Poly f = Poly::from_terms(file.ring, std::move(terms));
      if (!f.is_zero() && f.degree() == Degree(d)) return f;
    }
  };
  for (int attempt = 0; attempt < config.max_resamples; ++attempt) {
    std::vector<Poly> gens;
    std::vector<Poly> homog;
    for (long j = 0; j <= n; ++j) {
      gens.push_back(sample());
      homog.push_back(homogenize(gens.back(), d, proj));
    }
    if (no_common_zeros(homog, Ideal(proj), config.budget)) {
      file.generators = std::move(gens);
      file.target = Poly::constant(file.ring, 1);
      file.params.smooth = true;
      file.params.mu_zero = 0;
      return file;
    }
  }
  throw Error("macaulay-generic: no admissible sample after " + std::to_string(config.max_resamples) + " tries");
}

InstanceFile cusp_instance(long p) {
  if (p < 3 || p % 2 == 0) throw InvalidInput("cusp family needs odd p >= 3");
  InstanceFile file;
  file.ring = Ring::make({"z1", "z2"});
  file.variety.push_back(parse_poly("z1^2 - z2^" + std::to_string(p), file.ring));
  file.generators.push_back(parse_poly("z2", file.ring));
  file.target = parse_poly("z1", file.ring);
  file.branches.push_back(parse_branch("branch: z1 = t^" + std::to_string(p) + "; z2 = t^2", file.ring));
  file.params.mu_zero = cusp_mu_zero(p);
  file.params.n = 1;
  file.params.deg_x = p;
  file.params.reg_x = p;
  return file;
}

long cusp_mu_zero(long p) {
  auto R = Ring::make({"z1", "z2"});
  auto origin = parse_branch("branch: z1 = t^" + std::to_string(p) + "; z2 = t^2", R);
  auto S = Ring::make({"z0", "z1", "z2"});
  // Chart z1 = 1 at the point (0:1:0).
  auto infinity = parse_branch("branch: z0 = t^" + std::to_string(p) + "; z1 = 1; z2 = t^" + std::to_string(p - 2), S);
  return std::max(local_bs_number(parse_poly("z2", R), origin), local_bs_number(parse_poly("z2", S), infinity));
}

BenchRow bench_kollar(long d, long m, long n, const BenchConfig& config) {
  return timed(config, [&] {
    BenchRow row{"kollar", "d=" + std::to_string(d) + ";m=" + std::to_string(m) + ";n=" + std::to_string(n)};
    auto file = kollar_instance(d, m, n);
    fill_bounds(row, bound_inputs(file, std::nullopt, config.budget));
    solve_row(row, file.membership(), scan_limit(row, 64), config);
    return row;
  });
}

BenchRow bench_macaulay_generic(long d, long n, std::uint64_t seed, const BenchConfig& config) {
  return timed(config, [&] {
    BenchRow row{"macaulay-generic", "d=" + std::to_string(d) + ";n=" + std::to_string(n) + ";seed=" + std::to_string(seed)};
    auto file = macaulay_generic_instance(d, n, seed, config);
    fill_bounds(row, bound_inputs(file, std::nullopt, config.budget));
    solve_row(row, file.membership(), scan_limit(row, 64), config);
    return row;
  });
}

BenchRow bench_cusp(long p, const BenchConfig& config) {
  return timed(config, [&] {
    BenchRow row{"cusp", "p=" + std::to_string(p)};
    auto file = cusp_instance(p);
    fill_bounds(row, bound_inputs(file, std::nullopt, config.budget));
    solve_row(row, file.membership(), scan_limit(row, 64), config);
    row.bs_number = local_bs_number(file.generators[0], file.branches[0]);
    return row;
  });
}

std::map<std::string, std::vector<long>> parse_ranges(const std::vector<std::string>& args) {
  std::map<std::string, std::vector<long>> out;
  for (const auto& arg : args) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidInput("expected key=value or key=a..b, got '" + arg + "'");
    const std::string key = arg.substr(0, eq);
    const std::string value = arg.substr(eq + 1);
    auto number = [&](const std::string& s) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != s.size()) throw InvalidInput("invalid number '" + s + "' in '" + arg + "'");
      return v;
    };
    std::vector<long> values;
    if (auto dots = value.find(".."); dots != std::string::npos) {
      const long lo = number(value.substr(0, dots));
      const long hi = number(value.substr(dots + 2));
      if (hi < lo) throw InvalidInput("empty range in '" + arg + "'");
      for (long v = lo; v <= hi; ++v) values.push_back(v);
    } else {
      values.push_back(number(value));
    }
    out[key] = std::move(values);
  }
  return out;
}

std::vector<BenchRow> run_bench(const std::string& family, const std::map<std::string, std::vector<long>>& params,
                                std::uint64_t seed, const BenchConfig& config) {
  std::vector<std::string> keys;
  std::map<std::string, std::vector<long>> values;
  if (family == "kollar") {
    keys = {"d", "m", "n"};
    values = {{"d", {2}}, {"m", {2}}};
  } else if (family == "macaulay-generic") {
    keys = {"d", "n", "seed"};
    values = {{"d", {2}}, {"n", {2}}, {"seed", {static_cast<long>(seed)}}};
  } else if (family == "cusp") {
    keys = {"p"};
    values = {{"p", {3, 5, 7}}};
  } else {
    throw InvalidInput("unknown bench family '" + family + "' (kollar, macaulay-generic, cusp)");
  }
  for (const auto& [k, v] : params) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
      throw InvalidInput("family " + family + " has no parameter '" + k + "'");
    }
    values[k] = v;
  }

  std::vector<BenchRow> rows;
  std::map<std::string, long> current;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == keys.size()) {
      if (family == "kollar") {
        rows.push_back(bench_kollar(current["d"], current["m"], current["n"], config));
      } else if (family == "macaulay-generic") {
        rows.push_back(bench_macaulay_generic(current["d"], current["n"], static_cast<std::uint64_t>(current["seed"]), config));
      } else {
        rows.push_back(bench_cusp(current["p"], config));
      }
      return;
    }
    const std::string& key = keys[i];
    auto it = values.find(key);
    if (it == values.end()) {
      // kollar n defaults to m
      current[key] = current["m"];
      rec(i + 1);
      return;
    }
    for (long v : it->second) {
      current[key] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return rows;
}

std::string format_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "# bsk-bench v1\n";
  os << "family,params,rho_min,hickel_i,macaulay,jelonek,hermann,slack,ms,bs_number\n";
  for (const auto& r : rows) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", r.ms);
    os << r.family << ',' << r.params << ',' << r.rho_min << ',' << str(r.hickel_i) << ',' << str(r.macaulay) << ','
       << str(r.jelonek) << ',' << str(r.hermann) << ',' << str(r.slack) << ',' << (r.ms == 0 ? "0" : ms) << ','
       << (r.bs_number ? std::to_string(*r.bs_number) : "") << '\n';
  }
  return os.str();
}

}  // namespace bsk
