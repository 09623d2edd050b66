#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bsk/bench.hpp"
#include "bsk/bounds.hpp"
#include "bsk/certificate.hpp"
#include "bsk/error.hpp"
#include "bsk/instance.hpp"
#include "bsk/invariants.hpp"
#include "bsk/resolution.hpp"

using namespace bsk;

namespace {

constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

const char* kMuZeroHint =
    "hickel_i: needs muZero (cusp z1^2 = z2^p: muZero = max((p-1)/2, ceil((p-3)(p-1)/(p-2))); smooth: 0)";

struct Globals {
  std::optional<std::size_t> budget_pairs;
  std::optional<std::size_t> budget_matrix;
  std::optional<unsigned long> characteristic;
  std::uint64_t seed = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InstanceFile load(const std::string& path, unsigned long characteristic = 0) {
  const std::string text = read_file(path);
  try {
    return parse_instance(text, characteristic);
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + std::to_string(line_of(text, e.position())) + ": " + e.message(), e.position());
  }
}

Budget budget_for(const Globals& g, const InstanceFile& file) {
  Budget b;
  if (file.params.budget_pairs) b.max_pairs = *file.params.budget_pairs;
  if (g.budget_pairs) b.max_pairs = *g.budget_pairs;
  return b;
}

std::size_t matrix_budget(const Globals& g, const InstanceFile& file) {
  std::size_t m = SearchOptions{}.max_nonzeros;
  if (file.params.budget_matrix) m = *file.params.budget_matrix;
  if (g.budget_matrix) m = *g.budget_matrix;
  return m;
}

std::string format_hilbert_polynomial(const std::vector<Rational>& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Rational& c = coeffs[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const std::string power = i == 0 ? "" : (i == 1 ? "D" : "D^" + std::to_string(i));
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += power;
    }
  }
  return out.empty() ? "0" : out;
}

// J for resolve/invariants: the file's polynomials as given, or the projective closure.
Ideal target_ideal(const InstanceFile& file, bool homogenize_saturate, const Budget& budget) {
  Ideal I(file.ring, file.variety);
  if (homogenize_saturate) return projective_closure(I, budget);
  if (!I.is_homogeneous()) {
    throw InvalidInput("ideal is not homogeneous; pass --homogenize-saturate to use its projective closure");
  }
  return I;
}

int cmd_membership(const Globals& g, const std::string& path, std::optional<long> rho, bool minimal,
                   std::optional<long> rho_max, const std::vector<std::string>& caps) {
  InstanceFile file = load(path);
  for (const auto& c : caps) {
    std::string text = "vars: x\nparams:\ncapGen = " + c + "\n";
    try {
      auto parsed = parse_instance(text);
      for (const auto& [k, v] : parsed.params.cofactor_caps) file.params.cofactor_caps[k] = v;
    } catch (const ParseError& e) {
      throw ParseError("--cap-gen " + c + ": " + e.message(), 0);
    }
  }
  MembershipInstance inst = file.membership();
  SearchOptions options;
  options.budget = budget_for(g, file);
  options.max_nonzeros = matrix_budget(g, file);
  options.cofactor_caps = file.params.cofactor_caps;

  std::optional<Certificate> cert;
  long limit = 0;
  if (minimal || !rho) {
    limit = rho_max.value_or(file.params.rho_max.value_or(rho.value_or(20)));
    auto result = minimal_degree(inst, limit, options);
    if (result.rho_min) {
      std::cout << "rho_min: " << *result.rho_min << '\n';
      cert = std::move(result.certificate);
    }
  } else {
    limit = *rho;
    cert = search_at_degree(inst, limit, options);
  }
  if (!cert) {
    std::cout << "not in ideal at rho<=" << limit << '\n';
    return 0;
  }
  if (!verify(inst, *cert, options.budget)) throw Error("certificate failed independent verification");
  projective_lift(inst, *cert, cert->degree.is_neg_infinity() ? 0 : cert->degree.value(), std::nullopt, options.budget);
  std::cout << format_certificate(inst, *cert);
  return 0;
}

int cmd_bounds(const Globals& g, const std::string& path, bool compute, bool records) {
  InstanceFile file = load(path);
  const Budget budget = budget_for(g, file);
  std::optional<VarietyInvariants> inv;
  if (compute) {
    inv = variety_invariants(file.ring, file.variety, budget);
    std::cout << "computed: n=" << inv->n << " degX=" << inv->deg_x << " regX=" << inv->reg_x << '\n';
  }
  BoundReport report = comparison_bounds(bound_inputs(file, inv, budget));
  for (auto& e : report.entries) {
    if (!e.value && e.note.find("needs muZero") != std::string::npos) e.note = kMuZeroHint;
  }
  std::cout << (records ? report.format_records() : report.format_table());
  return 0;
}

int cmd_resolve(const Globals& g, const std::string& path, bool homogenize_saturate) {
  InstanceFile file = load(path);
  const Budget budget = budget_for(g, file);
  Ideal J = target_ideal(file, homogenize_saturate, budget);
  FreeResolution res = minimal_resolution(J, budget);
  std::cout << betti(res).format();
  std::cout << "reg X: " << regularity(res) << '\n';
  for (std::size_t k = 1; k <= res.length(); ++k) {
    std::cout << "bef k=" << k << ": ";
    try {
      Ideal fitting = fitting_ideal(res, k);
      std::cout << "codim " << codimension(fitting, budget).to_string() << " (need >= " << k << ")\n";
    } catch (const BudgetExhausted& e) {
      std::cout << "skipped (" << e.what() << ")\n";
    }
  }
  return 0;
}

int cmd_invariants(const Globals& g, const std::string& path, bool homogenize_saturate) {
  InstanceFile file = load(path, g.characteristic.value_or(0));
  const Budget budget = budget_for(g, file);
  Ideal J = target_ideal(file, homogenize_saturate, budget);
  BuchbergerOptions bo;
  bo.budget = budget;
  GroebnerBasis gb = buchberger(J, MonomialOrder::grevlex(), bo);
  std::cout << "characteristic: " << file.ring->characteristic() << '\n';
  std::cout << "groebner basis: " << gb.basis().size() << " elements\n";
  if (gb.is_unit()) {
    std::cout << "unit ideal\n";
    return 0;
  }
  HilbertData h = hilbert_data(gb);
  std::cout << "hilbert numerator: " << format_tpoly(h.numerator()) << '\n';
  std::cout << "hilbert polynomial: " << format_hilbert_polynomial(h.hilbert_polynomial()) << '\n';
  std::cout << "codim: " << codimension(J, budget).to_string() << '\n';
  const long dim = proj_dimension(h);
  std::cout << "dim: " << dim << '\n';
  if (dim >= 0) std::cout << "degree: " << proj_degree(h) << '\n';
  return 0;
}

int cmd_bench(const Globals& g, const std::string& family, const std::vector<std::string>& ranges,
              const std::string& csv, bool no_timing) {
  BenchConfig config;
  if (g.budget_pairs) config.budget.max_pairs = *g.budget_pairs;
  if (g.budget_matrix) config.max_nonzeros = *g.budget_matrix;
  config.timing = !no_timing;
  auto rows = run_bench(family, parse_ranges(ranges), g.seed, config);
  const std::string text = format_csv(rows);
  if (csv.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(csv, std::ios::binary);
    if (!out) throw Error("cannot write " + csv);
    out << text;
    std::cout << "wrote " << rows.size() << " rows to " << csv << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bsk: effective Briancon-Skoda degree bounds and membership certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--budget-pairs", g.budget_pairs, "Buchberger pair budget");
  app.add_option("--budget-matrix", g.budget_matrix, "certificate matrix nonzero budget");
  auto* char_opt = app.add_option("--char", g.characteristic, "prime characteristic (invariants only)");
  app.add_option("--seed", g.seed, "random seed");

  std::string file;
  std::optional<long> rho;
  std::optional<long> rho_max;
  bool minimal = false;
  std::vector<std::string> caps;
  auto* membership = app.add_subcommand("membership", "search for a degree-bounded certificate");
  membership->add_option("file", file, "instance file")->required();
  membership->add_option("--rho", rho, "search at this degree");
  membership->add_flag("--min", minimal, "smallest feasible degree");
  membership->add_option("--rho-max", rho_max, "scan limit for --min (default 20)");
  membership->add_option("--cap-gen", caps, "j:k, cofactor of generator j has degree <= k");

  bool compute = false;
  bool records = false;
  auto* bounds = app.add_subcommand("bounds", "evaluate the degree bounds");
  bounds->add_option("file", file, "instance file")->required();
  bounds->add_flag("--compute-invariants", compute, "compute n, deg X, reg X from the variety");
  bounds->add_flag("--records", records, "machine-readable output");

  bool homogenize_saturate = false;
  auto* resolve = app.add_subcommand("resolve", "minimal free resolution, Betti table, regularity");
  resolve->add_option("file", file, "ideal or instance file")->required();
  resolve->add_flag("--homogenize-saturate", homogenize_saturate, "resolve the projective closure");

  auto* invariants = app.add_subcommand("invariants", "Hilbert series, dimension, degree");
  invariants->add_option("file", file, "ideal or instance file")->required();
  invariants->add_flag("--homogenize-saturate", homogenize_saturate, "use the projective closure");

  std::string family;
  std::vector<std::string> ranges;
  std::string csv;
  bool no_timing = false;
  auto* bench = app.add_subcommand("bench", "benchmark families against the bounds");
  bench->add_option("family", family, "kollar | macaulay-generic | cusp")->required();
  bench->add_option("params", ranges, "key=v or key=a..b");
  bench->add_option("--csv", csv, "write CSV here");
  bench->add_flag("--no-timing", no_timing, "write ms = 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (char_opt->count() && !invariants->parsed()) throw InvalidInput("--char applies to invariants only");
    if (membership->parsed()) return cmd_membership(g, file, rho, minimal, rho_max, caps);
    if (bounds->parsed()) return cmd_bounds(g, file, compute, records);
    if (resolve->parsed()) return cmd_resolve(g, file, homogenize_saturate);
    if (invariants->parsed()) return cmd_invariants(g, file, homogenize_saturate);
    if (bench->parsed()) return cmd_bench(g, family, ranges, csv, no_timing);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.message() << '\n';
    return kExitParse;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
