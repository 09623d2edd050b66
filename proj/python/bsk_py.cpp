#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bsk/bench.hpp"
#include "bsk/bounds.hpp"
#include "bsk/certificate.hpp"
#include "bsk/error.hpp"
#include "bsk/instance.hpp"
#include "bsk/invariants.hpp"
#include "bsk/localorder.hpp"
#include "bsk/resolution.hpp"

namespace py = pybind11;
using namespace bsk;

namespace {

py::object to_py(const Integer& z) { return py::module_::import("builtins").attr("int")(z.get_str()); }

std::vector<Poly> parse_all(const std::vector<std::string>& texts, const RingPtr& ring) {
  std::vector<Poly> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, ring));
  return out;
}

std::vector<std::string> format_all(const std::vector<Poly>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(format(p));
  return out;
}

MonomialOrder order_named(const std::string& name, std::size_t nvars) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  if (name.rfind("elim", 0) == 0) {
    const std::size_t k = std::stoul(name.substr(name.find(':') + 1));
    if (k > nvars) throw InvalidInput("elimination block larger than the ring");
    return MonomialOrder::elimination(k);
  }
  throw InvalidInput("unknown order '" + name + "' (grevlex, lex, elim:k)");
}

std::vector<std::string> groebner_basis(const std::vector<std::string>& vars, const std::vector<std::string>& gens,
                                        const std::string& order, unsigned long characteristic, std::size_t max_pairs) {
  auto R = Ring::make(vars, characteristic);
  BuchbergerOptions options;
  options.budget.max_pairs = max_pairs;
  return format_all(buchberger(Ideal(R, parse_all(gens, R)), order_named(order, vars.size()), options).basis());
}

bool py_membership(const std::string& p, const std::vector<std::string>& vars, const std::vector<std::string>& gens,
                   unsigned long characteristic) {
  auto R = Ring::make(vars, characteristic);
  return membership(parse_poly(p, R), Ideal(R, parse_all(gens, R)));
}

std::string normal_form(const std::string& p, const std::vector<std::string>& vars,
                        const std::vector<std::string>& gens) {
  auto R = Ring::make(vars);
  return format(buchberger(Ideal(R, parse_all(gens, R))).normal_form(parse_poly(p, R)));
}

py::dict hilbert(const std::vector<std::string>& vars, const std::vector<std::string>& gens,
                 unsigned long characteristic) {
  auto R = Ring::make(vars, characteristic);
  Ideal I(R, parse_all(gens, R));
  auto h = hilbert_data(buchberger(I));
  py::list numerator;
  for (const auto& c : h.numerator()) numerator.append(to_py(c));
  py::dict out;
  out["numerator"] = numerator;
  out["dim"] = proj_dimension(h);
  out["degree"] = proj_dimension(h) >= 0 ? to_py(proj_degree(h)) : py::object(py::none());
  out["codim"] = codimension(I).to_string();
  return out;
}

py::dict resolve(const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
  auto R = Ring::make(vars);
  auto res = minimal_resolution(Ideal(R, parse_all(gens, R)));
  auto b = betti(res);
  py::dict betti_dict;
  for (const auto& [key, count] : b.entries()) betti_dict[py::make_tuple(key.first, key.second)] = count;
  py::list bef;
  for (std::size_t k = 1; k <= res.length(); ++k) {
    try {
      bef.append(codimension(fitting_ideal(res, k)).to_string());
    } catch (const BudgetExhausted&) {
      bef.append(py::none());
    }
  }
  py::list twists;
  for (const auto& step : res.steps) twists.append(step.source.twists);
  py::dict out;
  out["betti"] = betti_dict;
  out["twists"] = twists;
  out["regularity"] = regularity(res);
  out["table"] = b.format();
  out["bef_codims"] = bef;
  return out;
}

std::vector<std::string> projective_closure_py(const std::vector<std::string>& vars,
                                               const std::vector<std::string>& gens) {
  auto R = Ring::make(vars);
  return format_all(projective_closure(Ideal(R, parse_all(gens, R))).generators());
}

py::dict certificate_dict(const MembershipInstance& inst, const Certificate& cert) {
  py::list cofactors;
  for (const auto& [index, q] : cert.cofactors) cofactors.append(py::make_tuple(index, format(q)));
  py::dict out;
  out["cofactors"] = cofactors;
  out["degree"] = cert.degree.is_neg_infinity() ? py::object(py::none()) : py::object(py::int_(cert.degree.value()));
  out["verified"] = cert.verified;
  out["text"] = format_certificate(inst, cert);
  return out;
}

MembershipInstance make_instance(const std::vector<std::string>& vars, const std::vector<std::string>& generators,
                                 const std::string& target, const std::vector<std::string>& variety, long power) {
  auto R = Ring::make(vars);
  MembershipInstance inst{R, Ideal(R, parse_all(variety, R)), parse_all(generators, R), parse_poly(target, R), power};
  inst.validate();
  return inst;
}

SearchOptions search_options(const std::map<std::size_t, long>& caps, std::size_t max_nonzeros) {
  SearchOptions options;
  for (const auto& [j, k] : caps) {
    if (j == 0) throw InvalidInput("cofactor caps are 1-based");
    options.cofactor_caps[j - 1] = k;
  }
  options.max_nonzeros = max_nonzeros;
  return options;
}

py::object search(const std::vector<std::string>& vars, const std::vector<std::string>& generators,
                  const std::string& target, long rho, const std::vector<std::string>& variety, long power,
                  const std::map<std::size_t, long>& caps, std::size_t max_nonzeros) {
  auto inst = make_instance(vars, generators, target, variety, power);
  auto cert = search_at_degree(inst, rho, search_options(caps, max_nonzeros));
  if (!cert) return py::none();
  return certificate_dict(inst, *cert);
}

py::dict minimal(const std::vector<std::string>& vars, const std::vector<std::string>& generators,
                 const std::string& target, long rho_max, const std::vector<std::string>& variety, long power,
                 const std::map<std::size_t, long>& caps, std::size_t max_nonzeros) {
  auto inst = make_instance(vars, generators, target, variety, power);
  auto res = minimal_degree(inst, rho_max, search_options(caps, max_nonzeros));
  py::dict out;
  out["rho_min"] = res.rho_min ? py::object(py::int_(*res.rho_min)) : py::object(py::none());
  out["certificate"] = res.certificate ? py::object(certificate_dict(inst, *res.certificate)) : py::object(py::none());
  return out;
}

BoundInputs inputs_from(const py::dict& d) {
  BoundInputs in;
  for (auto item : d) {
    const std::string key = py::str(item.first);
    const py::handle v = item.second;
    if (key == "N") in.N = v.cast<long>();
    else if (key == "n") in.n = v.cast<long>();
    else if (key == "m") in.m = v.cast<long>();
    else if (key == "d") in.d = v.cast<long>();
    else if (key == "degPhi") in.deg_phi = v.cast<long>();
    else if (key == "degX") in.deg_x = Integer(py::str(v).cast<std::string>());
    else if (key == "regX") in.reg_x = v.cast<long>();
    else if (key == "ell") in.ell = v.cast<long>();
    else if (key == "muZero") in.mu_zero = v.is_none() ? std::nullopt : std::optional<long>(v.cast<long>());
    else if (key == "muPrime") in.mu_prime = v.is_none() ? std::nullopt : std::optional<long>(v.cast<long>());
    else if (key == "cm") in.cohen_macaulay = v.cast<bool>();
    else if (key == "noCommonZeros") in.no_common_zeros = v.cast<bool>();
    else if (key == "cInf") {
      if (py::isinstance<py::str>(v)) {
        const std::string s = v.cast<std::string>();
        if (s == "mu") in.c_inf = CInfinity::upper_bound_mu();
        else if (s == "minusInfinity") in.c_inf = CInfinity::minus_infinity();
        else throw InvalidInput("cInf must be an integer, 'mu' or 'minusInfinity'");
      } else {
        in.c_inf = CInfinity::explicit_value(v.cast<long>());
      }
    } else {
      throw InvalidInput("unknown bound input '" + key + "'");
    }
  }
  return in;
}

py::dict bounds(const py::dict& inputs) {
  auto report = comparison_bounds(inputs_from(inputs));
  py::dict out;
  for (const auto& e : report.entries) out[py::str(e.name)] = e.value ? to_py(*e.value) : py::object(py::none());
  return out;
}

py::object single_bound(const std::string& name, const py::dict& inputs) {
  auto in = inputs_from(inputs);
  if (name == "hickel_i") return to_py(hickel_bound_i(in));
  if (name == "hickel_i_cm") return to_py(hickel_bound_i_cm(in));
  if (name == "hickel_ii") return to_py(hickel_bound_ii(in));
  if (name == "power") return to_py(power_bound(in));
  if (name == "macaulay") return to_py(macaulay_bound(in).projective_space);
  if (name == "macaulay_x") return to_py(macaulay_bound(in).on_variety);
  if (name == "jelonek") return to_py(jelonek_bound(in));
  if (name == "hermann") return to_py(hermann_bound(in));
  throw InvalidInput("unknown bound '" + name + "'");
}

std::vector<BranchParam> branches_from(const std::vector<std::string>& lines, const RingPtr& R) {
  std::vector<BranchParam> out;
  for (const auto& l : lines) out.push_back(parse_branch(l, R));
  return out;
}

py::object py_vanishing_order(const std::string& p, const std::vector<std::string>& vars, const std::string& branch) {
  auto R = Ring::make(vars);
  auto o = vanishing_order(parse_poly(p, R), parse_branch(branch, R));
  return o ? py::object(py::int_(*o)) : py::object(py::none());
}

py::object py_max_bs_exponent(const std::vector<std::string>& generators, const std::string& phi,
                              const std::vector<std::string>& vars, const std::vector<std::string>& branches) {
  auto R = Ring::make(vars);
  auto r = max_bs_exponent(parse_all(generators, R), parse_poly(phi, R), branches_from(branches, R));
  return r ? py::object(py::str(r->get_str())) : py::object(py::none());
}

bool py_bs_exponent_check(const std::vector<std::string>& generators, const std::string& phi, const std::string& k,
                          const std::vector<std::string>& vars, const std::vector<std::string>& branches) {
  auto R = Ring::make(vars);
  Rational kk(k);
  kk.canonicalize();
  return bs_exponent_check(parse_all(generators, R), parse_poly(phi, R), kk, branches_from(branches, R));
}

long py_local_bs_number(const std::string& g, const std::vector<std::string>& vars, const std::string& branch) {
  auto R = Ring::make(vars);
  return local_bs_number(parse_poly(g, R), parse_branch(branch, R));
}

bool py_monomial_closure(const std::vector<int>& phi, const std::vector<std::vector<int>>& region, long k) {
  std::vector<Monomial> gens;
  for (const auto& a : region) gens.emplace_back(a);
  return monomial_integral_closure(Monomial(phi), gens, k);
}

std::string py_bench(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed,
                     bool timing) {
  BenchConfig config;
  config.timing = timing;
  return format_csv(run_bench(family, parse_ranges(params), seed, config));
}

}  // namespace

PYBIND11_MODULE(_bsk, m) {
  m.doc() = "Exact polynomial engine for effective Briancon-Skoda degree bounds";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", base.ptr());
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<RingMismatch>(m, "RingMismatch", base.ptr());

  m.def("groebner_basis", &groebner_basis, py::arg("vars"), py::arg("gens"), py::arg("order") = "grevlex",
        py::arg("characteristic") = 0, py::arg("max_pairs") = Budget{}.max_pairs);
  m.def("membership", &py_membership, py::arg("poly"), py::arg("vars"), py::arg("gens"),
        py::arg("characteristic") = 0);
  m.def("normal_form", &normal_form, py::arg("poly"), py::arg("vars"), py::arg("gens"));
  m.def("hilbert", &hilbert, py::arg("vars"), py::arg("gens"), py::arg("characteristic") = 0);
  m.def("resolve", &resolve, py::arg("vars"), py::arg("gens"));
  m.def("projective_closure", &projective_closure_py, py::arg("vars"), py::arg("gens"));
  m.def("search_at_degree", &search, py::arg("vars"), py::arg("generators"), py::arg("target"), py::arg("rho"),
        py::arg("variety") = std::vector<std::string>{}, py::arg("power") = 1,
        py::arg("caps") = std::map<std::size_t, long>{}, py::arg("max_nonzeros") = SearchOptions{}.max_nonzeros);
  m.def("minimal_degree", &minimal, py::arg("vars"), py::arg("generators"), py::arg("target"), py::arg("rho_max"),
        py::arg("variety") = std::vector<std::string>{}, py::arg("power") = 1,
        py::arg("caps") = std::map<std::size_t, long>{}, py::arg("max_nonzeros") = SearchOptions{}.max_nonzeros);
  m.def("bounds", &bounds, py::arg("inputs"));
  m.def("bound", &single_bound, py::arg("name"), py::arg("inputs"));
  m.def("multiplicity_cap",
        [](long d, long codim, long deg_x) { return to_py(multiplicity_cap(d, codim, Integer(deg_x))); });
  m.def("vanishing_order", &py_vanishing_order, py::arg("poly"), py::arg("vars"), py::arg("branch"));
  m.def("bs_exponent_check", &py_bs_exponent_check, py::arg("generators"), py::arg("phi"), py::arg("k"),
        py::arg("vars"), py::arg("branches"));
  m.def("max_bs_exponent", &py_max_bs_exponent, py::arg("generators"), py::arg("phi"), py::arg("vars"),
        py::arg("branches"));
  m.def("local_bs_number", &py_local_bs_number, py::arg("g"), py::arg("vars"), py::arg("branch"));
  m.def("monomial_integral_closure", &py_monomial_closure, py::arg("phi"), py::arg("region"), py::arg("k"));
  m.def("bench", &py_bench, py::arg("family"), py::arg("params") = std::vector<std::string>{}, py::arg("seed") = 1,
        py::arg("timing") = false);
}
