#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ncg {

/// Countable ordinal below epsilon_0 in Cantor normal form:
/// w^e1*c1 + w^e2*c2 + ... with e1 > e2 > ... and every ci >= 1.
/// The empty sum is 0. Values are immutable once constructed and all
/// arithmetic is exact.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;

  static Ordinal natural(std::uint64_t n);
  static Ordinal omega();
  /// w^exponent * coefficient (coefficient >= 1).
  static Ordinal omega_pow(const Ordinal& exponent, std::uint64_t coefficient = 1);

  /// Parses the textual grammar used by the CLI: `0`, `n`, `w`, `w^<ord>`,
  /// `*<nat>` and `+`, with parentheses allowed around compound exponents.
  /// Terms are folded left-to-right with ordinal addition, so any term order
  /// is accepted and normalized. Throws std::invalid_argument on bad input.
  static Ordinal parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_natural() const;
  /// Value of a natural-number ordinal; pre: is_natural().
  std::uint64_t natural_value() const;

  enum class Kind { Zero, Successor, Limit };
  Kind classify() const;

  /// Largest limit ordinal <= *this, or 0 when none exists.
  Ordinal omega_part() const;
  /// The unique m with *this == omega_part() + m.
  std::uint64_t finite_part() const;

  std::string to_string() const;

  const std::vector<Term>& cnf_terms() const { return terms_; }

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

  /// Ordinal sum (non-commutative).
  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
  /// Ordinal product (non-commutative).
  friend Ordinal operator*(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

}  // namespace ncg
