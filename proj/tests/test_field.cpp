#include "doctest.h"

#include <random>

#include "threeweight/errors.hpp"
#include "threeweight/field.hpp"

using namespace threeweight;

namespace {

// digit-wise addition, independent of the Zech table path
Code digit_add(const FieldTower& t, Code a, Code b) {
  Code out = 0;
  Code mult = 1;
  for (int i = 0; i < t.m(); ++i) {
    const Code da = a % static_cast<Code>(t.p());
    const Code db = b % static_cast<Code>(t.p());
    out += ((da + db) % static_cast<Code>(t.p())) * mult;
    a /= static_cast<Code>(t.p());
    b /= static_cast<Code>(t.p());
    mult *= static_cast<Code>(t.p());
  }
  return out;
}

// multiplication through the polynomial ring, independent of the log tables
Code poly_mul(const FieldTower& t, Code a, Code b) {
  const int p = t.p();
  std::vector<std::uint8_t> ca, cb;
  for (int i = 0; i < t.m(); ++i) {
    ca.push_back(static_cast<std::uint8_t>(a % static_cast<Code>(p)));
    cb.push_back(static_cast<std::uint8_t>(b % static_cast<Code>(p)));
    a /= static_cast<Code>(p);
    b /= static_cast<Code>(p);
  }
  const PolyGFp prod = (PolyGFp(p, ca) * PolyGFp(p, cb)).mod(t.modulus());
  Code out = 0;
  Code mult = 1;
  for (int i = 0; i < t.m(); ++i) {
    out += static_cast<Code>(prod.coeff(i)) * mult;
    mult *= static_cast<Code>(p);
  }
  return out;
}

}  // namespace

TEST_CASE("build_tower validates its frame") {
  CHECK_THROWS_AS(FieldTower::build(4, 3, 1), Error);   // p not prime
  CHECK_THROWS_AS(FieldTower::build(2, 3, 1), Error);   // p even
  CHECK_THROWS_AS(FieldTower::build(3, 4, 1), Error);   // s = 4 even
  CHECK_THROWS_AS(FieldTower::build(3, 3, 3), Error);   // s = 1 < 3
  CHECK_THROWS_AS(FieldTower::build(3, 6, 4), Error);   // e does not divide m
}

TEST_CASE("pi is primitive of order p^m - 1") {
  const FieldTower t = FieldTower::build(3, 3, 1);
  CHECK(t.group_order() == 26);
  CHECK(t.pow(t.pi(), 26) == t.one());
  CHECK(t.pow(t.pi(), 13) != t.one());
  CHECK(t.pow(t.pi(), 2) != t.one());
  // a primitive element is a nonsquare
  CHECK(t.quadratic_character(t.pi(), SubfieldKind::Full) == -1);
}

TEST_CASE("gamma generates the subfield, lambda is a nonsquare twice over") {
  const FieldTower t = FieldTower::build(3, 6, 2);
  CHECK(t.q() == 9);
  // gamma has order 8 and gamma^4 = -1 in GF(9)
  CHECK(t.pow(t.gamma(), 8) == t.one());
  CHECK(t.pow(t.gamma(), 4) == t.neg(t.one()));
  for (int d : {1, 2, 4})
    CHECK(t.pow(t.gamma(), d) != t.one());
  CHECK(t.in_subfield(t.lambda()));
  // lambda^{(q-1)/2} = -1 in GF(q), and s odd makes it a nonsquare upstairs
  CHECK(t.pow(t.lambda(), (t.q() - 1) / 2) == t.neg(t.one()));
  CHECK(t.quadratic_character(t.lambda(), SubfieldKind::Q) == -1);
  CHECK(t.quadratic_character(t.lambda(), SubfieldKind::Full) == -1);
}

TEST_CASE("zech addition and log multiplication against independent routes") {
  for (auto [p, m, e] : {std::tuple{3, 3, 1}, {3, 6, 2}, {5, 3, 1}}) {
    const FieldTower t = FieldTower::build(p, m, e);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::int64_t> pick(0, t.order() - 1);
    for (int i = 0; i < 300; ++i) {
      const Code a = static_cast<Code>(pick(rng));
      const Code b = static_cast<Code>(pick(rng));
      CHECK(t.add(a, b) == digit_add(t, a, b));
      CHECK(t.mul(a, b) == poly_mul(t, a, b));
      CHECK(t.add(a, t.neg(a)) == 0);
      if (a != 0) CHECK(t.mul(a, t.inv(a)) == t.one());
    }
  }
}

TEST_CASE("traces: zeros, constants, Newton, transitivity, linearity") {
  const FieldTower t = FieldTower::build(3, 3, 1);
  CHECK(t.trace_to_prime(0) == 0);
  CHECK(t.trace_to_prime(t.one()) == 0);  // three copies of 1
  // Tr(pi) = sum of the conjugates = -(coefficient of x^{m-1} in the modulus)
  Code s = t.add(t.add(t.pi(), t.frob(t.pi(), 1)), t.frob(t.pi(), 2));
  CHECK(t.in_prime_field(s));
  CHECK(static_cast<int>(s) == t.trace_to_prime(t.pi()));
  CHECK(t.trace_to_prime(t.pi()) == (3 - t.modulus().coeff(2)) % 3);

  const FieldTower t2 = FieldTower::build(3, 6, 2);
  CHECK(t2.trace_to_subfield(0) == 0);
  // s = 3 copies of 1, reduced mod 3
  CHECK(t2.trace_to_subfield(t2.one()) == 0);
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<std::int64_t> pick(0, t2.order() - 1);
  for (int i = 0; i < 100; ++i) {
    const Code x = static_cast<Code>(pick(rng));
    const Code y = static_cast<Code>(pick(rng));
    // transitivity through the middle field
    const Code mid = t2.trace_to_subfield(x);
    CHECK(t2.in_subfield(mid));
    CHECK(t2.trace_q_to_prime(mid) == t2.trace_to_prime(x));
    // additivity and prime-scalar linearity
    CHECK(t2.trace_to_prime(t2.add(x, y)) ==
          (t2.trace_to_prime(x) + t2.trace_to_prime(y)) % 3);
    CHECK(t2.trace_to_subfield(t2.add(x, y)) ==
          t2.add(t2.trace_to_subfield(x), t2.trace_to_subfield(y)));
    for (int c = 0; c < 3; ++c)
      CHECK(t2.trace_to_prime(t2.mul(t2.scalar(c), x)) == (c * t2.trace_to_prime(x)) % 3);
  }
}

TEST_CASE("quadratic characters") {
  const FieldTower t = FieldTower::build(3, 6, 2);
  CHECK(t.quadratic_character(t.one(), SubfieldKind::Q) == 1);
  CHECK(t.quadratic_character(0, SubfieldKind::Q) == 0);
  CHECK(t.quadratic_character(2, SubfieldKind::Prime) == -1);  // squares of GF(3) are {1}
  CHECK_THROWS_AS(t.quadratic_character(t.pi(), SubfieldKind::Q), Error);
  CHECK_THROWS_AS(t.quadratic_character(t.gamma(), SubfieldKind::Prime), Error);

  // eta0 = eta1 on GF(p)* when e is odd: exhaustive over GF(p)*
  const FieldTower t3 = FieldTower::build(3, 9, 3);
  for (int c = 1; c < 3; ++c)
    CHECK(t3.quadratic_character(static_cast<Code>(c), SubfieldKind::Prime) ==
          t3.quadratic_character(static_cast<Code>(c), SubfieldKind::Q));
  const FieldTower t5 = FieldTower::build(5, 3, 1);
  for (int c = 1; c < 5; ++c)
    CHECK(t5.quadratic_character(static_cast<Code>(c), SubfieldKind::Prime) ==
          t5.quadratic_character(static_cast<Code>(c), SubfieldKind::Q));
}

TEST_CASE("Frobenius x -> x^q fixes exactly the subfield") {
  for (auto [p, m, e] : {std::tuple{3, 3, 1}, {3, 6, 2}, {5, 3, 1}}) {
    const FieldTower t = FieldTower::build(p, m, e);
    std::int64_t fixed = 0;
    for (std::int64_t x = 0; x < t.order(); ++x) {
      const Code c = static_cast<Code>(x);
      if (t.frob(c, t.e()) == c) {
        ++fixed;
        CHECK(t.in_subfield(c));
      }
    }
    CHECK(fixed == t.q());
  }
}

TEST_CASE("negative Frobenius powers invert") {
  const FieldTower t = FieldTower::build(3, 6, 2);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> pick(0, t.order() - 1);
  for (int i = 0; i < 50; ++i) {
    const Code x = static_cast<Code>(pick(rng));
    CHECK(t.frob(t.frob(x, 2), -2) == x);
    CHECK(t.frob(x, -2) == t.frob(x, t.m() - 2));
  }
}
