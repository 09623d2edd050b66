#include <cctype>
#include <sstream>

#include "bsk/poly.hpp"

namespace bsk {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring, const MonomialOrder& order)
      : text_(strip_comments(text)), ring_(ring), order_(order) {}

  Poly parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    std::vector<Term> terms;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    for (skip_ws(); pos_ < text_.size(); skip_ws()) {
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return Poly::from_terms(ring_, std::move(terms), order_);
  }

 private:
  static std::string strip_comments(std::string_view text) {
    std::string s(text);
    bool in_comment = false;
    for (char& c : s) {
      if (c == '\n') {
        in_comment = false;
      } else if (c == '#' || in_comment) {
        in_comment = true;
        c = ' ';
      }
    }
    return s;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Term term(bool negative) {
    Term t{Monomial(ring_->nvars()), negative ? -1 : 1};
    factor(t);
    for (skip_ws(); peek() == '*'; skip_ws()) {
      ++pos_;
      factor(t);
    }
    return t;
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void factor(Term& t) {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(integer());
      skip_ws();
      if (peek() == '/') {
        const std::size_t slash = pos_++;
        Integer den = integer();
        if (den == 0) throw ParseError("zero denominator", slash);
        value /= Rational(den);
      }
      t.coeff *= value;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto index = ring_->index_of(name);
      if (!index) throw ParseError("unknown variable '" + name + "'", start);
      int exponent = 1;
      skip_ws();
      if (peek() == '^') {
        const std::size_t caret = pos_++;
        Integer k = integer();
        if (k < 1 || !k.fits_sint_p()) throw ParseError("exponent must be a positive integer", caret);
        exponent = static_cast<int>(k.get_si());
      }
      t.mono.set(*index, t.mono[*index] + exponent);
      return;
    }
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string text_;
  const RingPtr& ring_;
  const MonomialOrder& order_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string without_comment(std::string_view line) {
  auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring, MonomialOrder order) {
  return PolyParser(text, ring, order).parse();
}

std::string format(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    Rational magnitude = negative ? Rational(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += format(t.mono, *p.ring());
    }
  }
  return out;
}

std::vector<std::string> parse_vars_line(std::string_view line) {
  std::string body = without_comment(line);
  if (body.rfind("vars:", 0) != 0) throw ParseError("expected 'vars:' header", 0);
  std::vector<std::string> names;
  std::stringstream ss(body.substr(5));
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string name = trim(item);
    if (name.empty()) continue;
    for (char c : name) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        throw ParseError("invalid variable name '" + name + "'", 0);
      }
    }
    if (std::isdigit(static_cast<unsigned char>(name[0]))) throw ParseError("invalid variable name '" + name + "'", 0);
    names.push_back(name);
  }
  return names;
}

IdealFile parse_ideal_file(std::string_view text, unsigned long characteristic) {
  std::istringstream in{std::string(text)};
  std::string line;
  IdealFile file;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    std::string body = without_comment(line);
    if (body.empty()) continue;
    if (!file.ring) {
      try {
        file.ring = Ring::make(parse_vars_line(body), characteristic);
      } catch (const ParseError& e) {
        throw ParseError(e.message(), line_start);
      }
      continue;
    }
    try {
      file.polys.push_back(parse_poly(body, file.ring));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), line_start + e.position());
    }
  }
  if (!file.ring) throw ParseError("missing 'vars:' header", 0);
  return file;
}

std::string format_ideal_file(const Ring& ring, std::span<const Poly> polys) {
  std::string out = "vars: ";
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (i) out += ", ";
    out += ring.name(i);
  }
  out += '\n';
  for (const auto& p : polys) out += format(p) + '\n';
  return out;
}

}  // namespace bsk
