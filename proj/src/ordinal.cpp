#include "ncg/ordinal.hpp"

#include <cctype>
#include <stdexcept>

namespace ncg {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r < a) throw std::overflow_error("ordinal coefficient overflow");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) throw std::overflow_error("ordinal coefficient overflow");
  return a * b;
}

}  // namespace

Ordinal Ordinal::natural(std::uint64_t n) {
  Ordinal o;
  if (n > 0) o.terms_.push_back(Term{Ordinal(), n});
  return o;
}

Ordinal Ordinal::omega() { return omega_pow(natural(1)); }

Ordinal Ordinal::omega_pow(const Ordinal& exponent, std::uint64_t coefficient) {
  if (coefficient == 0) throw std::invalid_argument("omega_pow: zero coefficient");
  Ordinal o;
  o.terms_.push_back(Term{exponent, coefficient});
  return o;
}

bool Ordinal::is_natural() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::uint64_t Ordinal::natural_value() const {
  if (!is_natural()) throw std::logic_error("natural_value on a transfinite ordinal");
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

Ordinal::Kind Ordinal::classify() const {
  if (terms_.empty()) return Kind::Zero;
  return terms_.back().exponent.is_zero() ? Kind::Successor : Kind::Limit;
}

Ordinal Ordinal::omega_part() const {
  Ordinal o = *this;
  if (!o.terms_.empty() && o.terms_.back().exponent.is_zero()) o.terms_.pop_back();
  return o;
}

std::uint64_t Ordinal::finite_part() const {
  if (!terms_.empty() && terms_.back().exponent.is_zero()) return terms_.back().coefficient;
  return 0;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return (a <=> b) == std::strong_ordering::equal; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = a.terms_[i].exponent <=> b.terms_[i].exponent;
    if (c != std::strong_ordering::equal) return c;
    auto d = a.terms_[i].coefficient <=> b.terms_[i].coefficient;
    if (d != std::strong_ordering::equal) return d;
  }
  return a.terms_.size() <=> b.terms_.size();
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms_[0].exponent;
  Ordinal r;
  for (const auto& t : a.terms_) {
    if (t.exponent > lead) {
      r.terms_.push_back(t);
    } else {
      break;  // smaller or equal exponents are absorbed / merged
    }
  }
  r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
  // Merge a's term of exponent `lead`, if present, into b's leading term.
  std::size_t keep = r.terms_.size() - b.terms_.size();
  if (keep < a.terms_.size() && a.terms_[keep].exponent == lead) {
    r.terms_[keep].coefficient = checked_add(r.terms_[keep].coefficient, a.terms_[keep].coefficient);
  }
  return r;
}

Ordinal operator*(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  Ordinal result;
  const Ordinal& alead = a.terms_[0].exponent;
  for (const auto& t : b.terms_) {
    Ordinal part;
    if (!t.exponent.is_zero()) {
      // a * w^e * c = w^(lead(a)+e) * c for e > 0.
      part = Ordinal::omega_pow(alead + t.exponent, t.coefficient);
    } else {
      // a * m: multiply the leading coefficient, keep the tail.
      part = a;
      part.terms_[0].coefficient = checked_mul(part.terms_[0].coefficient, t.coefficient);
    }
    result = result + part;
  }
  return result;
}

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out += "+";
    first = false;
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w";
    if (!(t.exponent == natural(1))) {
      std::string e = t.exponent.to_string();
      bool compound = e.find('+') != std::string::npos || e.find('*') != std::string::npos;
      out += "^";
      out += compound ? "(" + e + ")" : e;
    }
    if (t.coefficient != 1) {
      out += "*";
      out += std::to_string(t.coefficient);
    }
  }
  return out;
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("ordinal parse error at position " + std::to_string(pos) + ": " + what);
  }

  std::uint64_t parse_nat() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected number");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::uint64_t d = static_cast<std::uint64_t>(s[pos] - '0');
      if (v > (UINT64_MAX - d) / 10) fail("number too large");
      v = v * 10 + d;
      ++pos;
    }
    return v;
  }

  Ordinal parse_term() {
    skip_ws();
    if (pos >= s.size()) fail("expected term");
    if (s[pos] == 'w') {
      ++pos;
      Ordinal exponent = Ordinal::natural(1);
      if (eat('^')) exponent = parse_exponent();
      std::uint64_t coefficient = 1;
      if (eat('*')) {
        coefficient = parse_nat();
        if (coefficient == 0) fail("zero coefficient");
      }
      return Ordinal::omega_pow(exponent, coefficient);
    }
    return Ordinal::natural(parse_nat());
  }

  Ordinal parse_exponent() {
    skip_ws();
    if (eat('(')) {
      Ordinal e = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    return parse_term();
  }

  Ordinal parse_sum() {
    Ordinal acc = parse_term();
    while (eat('+')) acc = acc + parse_term();
    return acc;
  }
};

}  // namespace

Ordinal Ordinal::parse(std::string_view text) {
  Parser p{text};
  Ordinal o = p.parse_sum();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return o;
}

}  // namespace ncg
