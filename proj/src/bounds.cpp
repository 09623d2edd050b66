#include "bsk/bounds.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "bsk/error.hpp"

namespace bsk {

namespace {

constexpr long kMaxHermannAmbient = 20;

Integer max(const Integer& a, const Integer& b) { return a < b ? b : a; }

Integer I(long v) { return Integer(v); }

long min_m_n1(const BoundInputs& in) { return std::min(in.m, in.n + 1); }

long need_mu_zero(const BoundInputs& in, const char* bound) {
  if (!in.mu_zero) throw InvalidInput(std::string(bound) + ": needs muZero");
  return *in.mu_zero;
}

// (d - 1) min(m, n+1) + reg X
Integer regularity_entry(const BoundInputs& in) { return I(in.d - 1) * min_m_n1(in) + in.reg_x; }

}  // namespace

std::string CInfinity::to_string() const {
  switch (mode) {
    case Mode::MinusInfinity:
      return "minusInfinity";
    case Mode::Explicit:
      return std::to_string(value);
    case Mode::UpperBoundMu:
      return "mu";
  }
  return "?";
}

std::string BoundInputs::to_string() const {
  std::ostringstream os;
  os << "N=" << N << " n=" << n << " m=" << m << " d=" << d << " degPhi=" << deg_phi << " degX=" << deg_x
     << " regX=" << reg_x << " ell=" << ell << " muZero=" << (mu_zero ? std::to_string(*mu_zero) : "-")
     << " muPrime=" << (mu_prime ? std::to_string(*mu_prime) : "-") << " cInf=" << c_inf.to_string()
     << " cm=" << (cohen_macaulay ? 1 : 0) << " noCommonZeros=" << (no_common_zeros ? 1 : 0);
  return os.str();
}

void validate(const BoundInputs& in) {
  auto fail = [](const std::string& what) { throw InvalidInput("inconsistent bound inputs: " + what); };
  if (in.n < 1 || in.n > in.N) fail("need 1 <= n <= N");
  if (in.m < 1) fail("need m >= 1");
  if (in.d < 1) fail("need d >= 1");
  if (in.ell < 1) fail("need ell >= 1");
  if (in.deg_phi < 0) fail("need degPhi >= 0");
  if (in.deg_x < 1) fail("need degX >= 1");
  if (in.reg_x < 1) fail("need regX >= 1");
  if (in.mu_zero && *in.mu_zero < 0) fail("need muZero >= 0");
  if (in.mu_prime && *in.mu_prime < 0) fail("need muPrime >= 0");
  if (in.c_inf.mode == CInfinity::Mode::Explicit) {
    if (in.c_inf.value < 0) fail("need cInf >= 0");
    if (in.c_inf.value > mu(in)) {
      fail("cInf = " + std::to_string(in.c_inf.value) + " exceeds mu = min(m, n) = " + std::to_string(mu(in)));
    }
  }
}

long mu(const BoundInputs& in) { return std::min(in.m, in.n); }

Integer d_power_c(const BoundInputs& in) {
  switch (in.c_inf.mode) {
    case CInfinity::Mode::MinusInfinity:
      return 0;
    case CInfinity::Mode::Explicit:
      return pow(I(in.d), static_cast<unsigned long>(in.c_inf.value));
    case CInfinity::Mode::UpperBoundMu:
      return pow(I(in.d), static_cast<unsigned long>(mu(in)));
  }
  return 0;
}

Integer hickel_bound_i(const BoundInputs& in) {
  validate(in);
  const long mu0 = need_mu_zero(in, "hickel_i");
  Integer first = in.deg_phi + I(mu(in) + mu0) * d_power_c(in) * in.deg_x;
  return max(first, regularity_entry(in));
}

Integer hickel_bound_i_cm(const BoundInputs& in) {
  validate(in);
  if (!in.cohen_macaulay) throw InvalidInput("hickel_i_cm: X not asserted Cohen-Macaulay");
  if (in.m > in.n) throw InvalidInput("hickel_i_cm: needs m <= n");
  const long mu0 = need_mu_zero(in, "hickel_i_cm");
  return in.deg_phi + I(in.m + mu0) * d_power_c(in) * in.deg_x;
}

Integer hickel_bound_ii(const BoundInputs& in) {
  validate(in);
  if (!in.mu_prime) throw InvalidInput("hickel_ii: needs muPrime");
  Integer first = in.deg_phi + I(mu(in)) * d_power_c(in) * in.deg_x + *in.mu_prime;
  return max(first, regularity_entry(in));
}

Integer power_bound(const BoundInputs& in) {
  validate(in);
  const long mu0 = need_mu_zero(in, "power");
  const long k = min_m_n1(in);
  Integer first = in.deg_phi + I(mu(in) + mu0 + in.ell - 1) * d_power_c(in) * in.deg_x;
  Integer second = I(in.d) * (k + in.ell - 1) - k + in.reg_x;
  return max(first, second);
}

MacaulayBounds macaulay_bound(const BoundInputs& in) {
  validate(in);
  return {max(I(in.deg_phi), I(in.d) * (in.n + 1) - in.n), max(I(in.deg_phi), I(in.d - 1) * (in.n + 1) + in.reg_x)};
}

Integer jelonek_bound(const BoundInputs& in) {
  validate(in);
  const long c = in.m <= in.n ? 1 : 2;
  return c * pow(I(in.d), static_cast<unsigned long>(mu(in))) * in.deg_x;
}

Integer hermann_bound(const BoundInputs& in) {
  validate(in);
  if (in.N > kMaxHermannAmbient) throw InvalidInput("hermann: N too large to evaluate");
  const unsigned long e = (1ul << in.N) - 1;
  return in.deg_phi + 2 * pow(I(2 * in.d), e);
}

Integer multiplicity_cap(long d, long codim, const Integer& deg_x) {
  if (codim < 0) throw InvalidInput("multiplicity_cap: negative codimension");
  return pow(I(d), static_cast<unsigned long>(codim)) * deg_x;
}

Integer mumford_regularity_bound(long n, const Integer& deg_x) { return I(n + 1) * (deg_x - 1) + 1; }

Integer cm_regularity_bound(long N, long n, const Integer& deg_x) { return deg_x - (N - n); }

const BoundEntry* BoundReport::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t BoundReport::inputs_hash() const { return fnv1a(inputs.to_string()); }

std::string BoundReport::format_table() const {
  std::size_t name_w = 5;
  std::size_t value_w = 5;
  for (const auto& e : entries) {
    name_w = std::max(name_w, e.name.size());
    value_w = std::max(value_w, e.value ? e.value->get_str().size() : std::string("n/a").size());
  }
  std::ostringstream os;
  os << "inputs: " << inputs.to_string() << '\n';
  os << std::left << std::setw(static_cast<int>(name_w)) << "bound" << "  " << std::right
     << std::setw(static_cast<int>(value_w)) << "value" << "  note\n";
  for (const auto& e : entries) {
    os << std::left << std::setw(static_cast<int>(name_w)) << e.name << "  " << std::right
       << std::setw(static_cast<int>(value_w)) << (e.value ? e.value->get_str() : "n/a");
    if (!e.note.empty()) os << "  " << e.note;
    os << '\n';
  }
  return os.str();
}

std::string BoundReport::format_records() const {
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  const std::uint64_t h = inputs_hash();
  for (const auto& e : entries) {
    os << e.name << '\t' << (e.value ? e.value->get_str() : "-") << '\t'
       << (e.value ? "applicable" : "not-applicable") << '\t' << std::setw(16) << h << '\n';
  }
  return os.str();
}

BoundReport comparison_bounds(const BoundInputs& in) {
  validate(in);
  BoundReport report{in, {}};
  auto add = [&](const std::string& name, auto&& fn, std::string label = "") {
    try {
      report.entries.push_back({name, fn(), std::move(label)});
    } catch (const InvalidInput& e) {
      report.entries.push_back({name, std::nullopt, e.what()});
    }
  };
  add("hickel_i", [&] { return hickel_bound_i(in); });
  if (in.cohen_macaulay && in.m <= in.n) add("hickel_i_cm", [&] { return hickel_bound_i_cm(in); });
  if (in.mu_prime) add("hickel_ii", [&] { return hickel_bound_ii(in); });
  if (in.ell > 1) add("power", [&] { return power_bound(in); });
  if (in.no_common_zeros) {
    auto mac = macaulay_bound(in);
    if (in.n == in.N) report.entries.push_back({"macaulay", mac.projective_space, ""});
    report.entries.push_back({"macaulay_x", mac.on_variety, ""});
  }
  add("jelonek", [&] { return jelonek_bound(in); });
  add("hermann", [&] { return hermann_bound(in); }, "asymptotic comparison only");
  report.entries.push_back({"reg_mumford", mumford_regularity_bound(in.n, in.deg_x), "regularity estimate"});
  return report;
}

}  // namespace bsk
