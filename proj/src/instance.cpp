#include "bsk/instance.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "bsk/error.hpp"
#include "bsk/invariants.hpp"

namespace bsk {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

enum class Section { None, Variety, Generators, Target, Power, Branches, Params };

std::optional<Section> section_of(const std::string& head) {
  static const std::map<std::string, Section> kSections = {
      {"variety", Section::Variety}, {"generators", Section::Generators}, {"target", Section::Target},
      {"power", Section::Power},     {"branches", Section::Branches},     {"params", Section::Params}};
  auto it = kSections.find(head);
  if (it == kSections.end()) return std::nullopt;
  return it->second;
}

long parse_long(const std::string& text, std::size_t at, const std::string& what) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("expected an integer for " + what + ", got '" + text + "'", at);
  }
  return v;
}

bool parse_bool(const std::string& text, std::size_t at, const std::string& what) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  throw ParseError("expected true or false for " + what + ", got '" + text + "'", at);
}

void apply_param(InstanceParams& p, const std::string& key, const std::string& value, std::size_t at) {
  auto nonneg = [&](const std::string& what) {
    long v = parse_long(value, at, what);
    if (v < 0) throw ParseError(what + " must be nonnegative", at);
    return v;
  };
  if (key == "muZero") {
    p.mu_zero = nonneg(key);
  } else if (key == "muPrime") {
    p.mu_prime = nonneg(key);
  } else if (key == "cInf") {
    if (value == "auto") {
      p.c_inf.reset();
    } else if (value == "mu") {
      p.c_inf = CInfinity::upper_bound_mu();
    } else if (value == "minusInfinity") {
      p.c_inf = CInfinity::minus_infinity();
    } else {
      p.c_inf = CInfinity::explicit_value(nonneg(key));
    }
  } else if (key == "degX") {
    p.deg_x = nonneg(key);
  } else if (key == "regX") {
    p.reg_x = nonneg(key);
  } else if (key == "n") {
    p.n = nonneg(key);
  } else if (key == "smooth") {
    p.smooth = parse_bool(value, at, key);
  } else if (key == "cm") {
    p.cohen_macaulay = parse_bool(value, at, key);
  } else if (key == "capGen") {
    // j:k, generator j (1-based) has cofactor degree at most k
    const auto colon = value.find(':');
    if (colon == std::string::npos) throw ParseError("capGen expects j:k", at);
    const long j = parse_long(trim(value.substr(0, colon)), at, "capGen index");
    if (j < 1) throw ParseError("capGen index is 1-based", at);
    p.cofactor_caps[static_cast<std::size_t>(j - 1)] = parse_long(trim(value.substr(colon + 1)), at, "capGen degree");
  } else if (key == "budgetPairs") {
    p.budget_pairs = static_cast<std::size_t>(nonneg(key));
  } else if (key == "budgetMatrix") {
    p.budget_matrix = static_cast<std::size_t>(nonneg(key));
  } else if (key == "rhoMax") {
    p.rho_max = nonneg(key);
  } else {
    throw ParseError("unknown parameter '" + key + "'", at);
  }
}

}  // namespace

std::size_t line_of(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

InstanceFile parse_instance(std::string_view text, unsigned long characteristic) {
  InstanceFile file;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t offset = 0;
  Section section = Section::None;
  bool saw_section = false;
  bool saw_power = false;
  std::vector<Poly> loose;  // polynomials before any section

  while (std::getline(in, raw)) {
    const std::size_t line_start = offset;
    offset += raw.size() + 1;
    std::string line = raw.substr(0, raw.find('#'));
    const std::size_t indent = line.find_first_not_of(" \t");
    if (indent == std::string::npos) continue;
    const std::string body = trim(line);
    const std::size_t at = line_start + indent;

    if (!file.ring) {
      try {
        file.ring = Ring::make(parse_vars_line(body), characteristic);
      } catch (const ParseError& e) {
        throw ParseError(e.message(), at);
      } catch (const InvalidInput& e) {
        throw ParseError(e.what(), at);
      }
      continue;
    }

    // Section header, possibly with an inline value ("power: 2", "target: 1").
    std::string inline_value;
    if (auto colon = body.find(':'); colon != std::string::npos) {
      if (auto s = section_of(trim(body.substr(0, colon)))) {
        section = *s;
        saw_section = true;
        inline_value = trim(body.substr(colon + 1));
        if (inline_value.empty()) continue;
      }
    }
    const std::string item = inline_value.empty() ? body : inline_value;
    const std::size_t item_at = inline_value.empty() ? at : line_start + line.find(inline_value);

    auto poly = [&]() {
      try {
        return parse_poly(item, file.ring);
      } catch (const ParseError& e) {
        throw ParseError(e.message(), item_at + e.position());
      }
    };
    switch (section) {
      case Section::None:
        loose.push_back(poly());
        break;
      case Section::Variety:
        file.variety.push_back(poly());
        break;
      case Section::Generators: {
        Poly g = poly();
        if (g.is_zero()) throw ParseError("generators must be nonzero", item_at);
        file.generators.push_back(std::move(g));
        break;
      }
      case Section::Target:
        if (file.target) throw ParseError("target given twice", item_at);
        file.target = poly();
        break;
      case Section::Power:
        if (saw_power) throw ParseError("power given twice", item_at);
        saw_power = true;
        file.power = parse_long(item, item_at, "power");
        if (file.power < 1) throw ParseError("power must be at least 1", item_at);
        break;
      case Section::Branches:
        try {
          file.branches.push_back(parse_branch(item, file.ring));
        } catch (const ParseError& e) {
          throw ParseError(e.message(), item_at + e.position());
        } catch (const InvalidInput& e) {
          throw ParseError(e.what(), item_at);
        }
        break;
      case Section::Params: {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", item_at);
        apply_param(file.params, trim(item.substr(0, eq)), trim(item.substr(eq + 1)), item_at);
        break;
      }
    }
  }
  if (!file.ring) throw ParseError("missing 'vars:' header", 0);
  if (!loose.empty()) {
    if (saw_section) throw ParseError("polynomials before the first section", 0);
    file.variety = std::move(loose);
  }
  if (file.params.smooth && !file.params.mu_zero) file.params.mu_zero = 0;
  return file;
}

MembershipInstance InstanceFile::membership() const {
  if (generators.empty()) throw InvalidInput("instance has no generators: section");
  if (!target) throw InvalidInput("instance has no target: section");
  MembershipInstance inst{ring, Ideal(ring, variety), generators, *target, power};
  inst.validate();
  return inst;
}

}  // namespace bsk

namespace bsk {

VarietyInvariants variety_invariants(const RingPtr& ring, const std::vector<Poly>& variety, const Budget& budget) {
  const RingPtr proj = projective_ring(ring);
  VarietyInvariants out{Ideal(proj), 0, 1, 1};
  if (!variety.empty()) out.closure = projective_closure(Ideal(ring, variety), budget);
  BuchbergerOptions bo;
  bo.budget = budget;
  const auto gb = buchberger(out.closure, MonomialOrder::grevlex(), bo);
  if (gb.is_unit()) throw InvalidInput("the variety is empty");
  const auto h = hilbert_data(gb);
  out.n = proj_dimension(h);
  if (out.n < 1) throw InvalidInput("the variety must have positive dimension");
  out.deg_x = proj_degree(h);
  out.reg_x = regularity(minimal_resolution(out.closure, budget));
  return out;
}

BoundInputs bound_inputs(const InstanceFile& file, const std::optional<VarietyInvariants>& computed,
                         const Budget& budget) {
  if (file.generators.empty()) throw InvalidInput("instance has no generators: section");
  const InstanceParams& p = file.params;
  BoundInputs in;
  in.N = static_cast<long>(file.ring->nvars());
  in.m = static_cast<long>(file.generators.size());
  in.d = 0;
  for (const auto& f : file.generators) in.d = std::max(in.d, f.degree().value());
  in.d = std::max(in.d, 1l);
  in.deg_phi = file.target && !file.target->is_zero() ? file.target->degree().value() : 0;
  in.ell = file.power;
  in.mu_prime = p.mu_prime;
  in.cohen_macaulay = p.cohen_macaulay;

  const bool affine_space = file.variety.empty();
  auto pick = [&](const auto& given, auto from_computed, auto trivial, const char* name) {
    using T = std::decay_t<decltype(trivial)>;
    if (given) return T(*given);
    if (computed) return T(from_computed());
    if (affine_space) return trivial;
    throw InvalidInput(std::string("bounds: ") + name + " not given; add it to params: or use --compute-invariants");
  };
  in.n = pick(p.n, [&] { return computed->n; }, in.N, "n");
  in.deg_x = pick(p.deg_x, [&] { return computed->deg_x; }, Integer(1), "degX");
  in.reg_x = pick(p.reg_x, [&] { return computed->reg_x; }, 1l, "regX");
  in.mu_zero = p.mu_zero;
  if (!in.mu_zero && affine_space) in.mu_zero = 0;
  if (affine_space) in.cohen_macaulay = true;

  // Homogenized generators against J_X decide c_inf (auto) and the Macaulay hypothesis.
  const RingPtr proj = projective_ring(file.ring);
  std::vector<Poly> fh;
  for (const auto& f : file.generators) fh.push_back(homogenize(f, f.degree().value(), proj));
  Ideal closure = computed ? computed->closure
                           : (affine_space ? Ideal(proj) : projective_closure(Ideal(file.ring, file.variety), budget));
  if (p.c_inf) {
    in.c_inf = *p.c_inf;
  } else {
    in.c_inf = empty_at_infinity(fh, closure, budget) ? CInfinity::minus_infinity() : CInfinity::upper_bound_mu();
  }
  in.no_common_zeros = no_common_zeros(fh, closure, budget);
  return in;
}

}  // namespace bsk
