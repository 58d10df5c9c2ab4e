#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncg/ordinal.hpp"
#include "ncg/sampling.hpp"
#include "oracles.hpp"

using ncg::Ordinal;

namespace {

Ordinal O(const char* s) { return Ordinal::parse(s); }

/// Random ordinal below epsilon_0 with bounded nesting.
Ordinal random_ordinal(ncg::Rng& rng, int depth = 2) {
  int terms = rng.uniform(0, 3);
  Ordinal acc;
  for (int i = 0; i < terms; ++i) {
    Ordinal exp = depth > 0 && rng.uniform(0, 2) > 0 ? random_ordinal(rng, depth - 1)
                                                     : Ordinal::natural(rng.uniform(0, 4));
    acc = acc + Ordinal::omega_pow(exp, rng.uniform(1, 5));
  }
  if (rng.uniform(0, 1)) acc = acc + Ordinal::natural(rng.uniform(0, 6));
  return acc;
}

}  // namespace

TEST_CASE("comparison follows the CNF order") {
  CHECK((O("w*2+3") <=> O("w*3")) == std::strong_ordering::less);
  CHECK(O("w") == O("w"));
  CHECK((O("w^2") <=> O("w*5+9")) == std::strong_ordering::greater);
  CHECK(O("0") < O("1"));
  CHECK(O("w^w") > O("w^5*9+w*3"));
}

TEST_CASE("addition") {
  CHECK(O("1") + O("w") == O("w"));
  CHECK(O("w") + O("1") == O("w+1"));
  CHECK(O("w*2+3") + O("w+1") == O("w*3+1"));
  CHECK((Ordinal() + O("w^2")) == O("w^2"));
  CHECK((O("w^2") + Ordinal()) == O("w^2"));
}

TEST_CASE("multiplication") {
  CHECK(O("1") * O("w+1") == O("w+1"));  // the extension bound at alpha = beta = 1
  CHECK(O("2") * O("w") == O("w"));
  CHECK(O("w+1") * O("w") == O("w^2"));
  CHECK(O("w+1") * O("2") == O("w*2+1"));
  CHECK(O("w*2") * O("w^2*3") == O("w^3*3"));
  CHECK((O("w") * Ordinal()).is_zero());
}

TEST_CASE("omega_part and classification") {
  CHECK(O("w*2+3").omega_part() == O("w*2"));
  CHECK(O("5").omega_part().is_zero());
  CHECK(O("w^2").omega_part() == O("w^2"));
  CHECK(Ordinal().classify() == Ordinal::Kind::Zero);
  CHECK(O("w+1").classify() == Ordinal::Kind::Successor);
  CHECK(O("w^2").classify() == Ordinal::Kind::Limit);  // omega * omega
  CHECK((O("w") * O("w")).classify() == Ordinal::Kind::Limit);
}

TEST_CASE("rendering and parsing round trip") {
  const char* samples[] = {"0", "7", "w", "w+1", "w*2+1", "w^2*3+w*4+9", "w^w", "w^(w+1)*2+w"};
  for (const char* s : samples) CHECK(O(s).to_string() == s);
  CHECK_THROWS_AS(Ordinal::parse("w^"), std::invalid_argument);
  CHECK_THROWS_AS(Ordinal::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Ordinal::parse("w*0"), std::invalid_argument);
  // Out-of-order sums normalize through ordinal addition.
  CHECK(O("1+w") == O("w"));
}

TEST_CASE("algebraic properties on random ordinals") {
  ncg::Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    Ordinal a = random_ordinal(rng), b = random_ordinal(rng), c = random_ordinal(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + Ordinal() == a);
    CHECK(Ordinal() + a == a);
    CHECK(a * Ordinal::natural(1) == a);
    CHECK(Ordinal::natural(1) * a == a);
    if (!b.is_zero()) CHECK(a < a + b);
    // Left addition is strictly monotone in the right argument.
    if (b < c) CHECK(a + b < a + c);
    // alpha = omega_part(alpha) + m.
    CHECK(a.omega_part() + Ordinal::natural(a.finite_part()) == a);
    auto kind = a.omega_part().classify();
    CHECK((kind == Ordinal::Kind::Zero || kind == Ordinal::Kind::Limit));
  }
}

TEST_CASE("agreement with the coefficient-vector oracle below omega^omega") {
  ncg::Rng rng(77);
  for (int i = 0; i < 300; ++i) {
    ncg::testing::OrdVec va, vb;
    Ordinal a, b;
    int ta = rng.uniform(0, 2), tb = rng.uniform(0, 2);
    for (int j = ta; j >= 0; --j) {
      std::uint64_t coeff = rng.uniform(0, 4);
      if (!coeff) continue;
      va = add(va, j ? ncg::testing::OrdVec::omega_times(coeff, j)
                     : ncg::testing::OrdVec::nat(coeff));
      a = a + (j ? Ordinal::omega_pow(Ordinal::natural(j), coeff) : Ordinal::natural(coeff));
    }
    for (int j = tb; j >= 0; --j) {
      std::uint64_t coeff = rng.uniform(0, 4);
      if (!coeff) continue;
      vb = add(vb, j ? ncg::testing::OrdVec::omega_times(coeff, j)
                     : ncg::testing::OrdVec::nat(coeff));
      b = b + (j ? Ordinal::omega_pow(Ordinal::natural(j), coeff) : Ordinal::natural(coeff));
    }
    CHECK((a + b).to_string() == add(va, vb).str());
    CHECK((a * b).to_string() == mul(va, vb).str());
  }
}
