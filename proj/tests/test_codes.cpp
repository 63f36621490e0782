#include "doctest.h"

#include <random>

#include "threeweight/codes.hpp"
#include "threeweight/errors.hpp"

using namespace threeweight;

TEST_CASE("validate: regimes and rejections") {
  const CodeSpec a = validate(3, 3, 2);
  CHECK(a.regime == Regime::KeEvenEOdd);
  CHECK(a.e == 1);
  CHECK(a.s == 3);
  CHECK(a.u == 5);
  CHECK(a.n == 26);
  CHECK(a.dim == 6);

  const CodeSpec b = validate(3, 6, 2);
  CHECK(b.regime == Regime::KOverEOdd);
  CHECK(b.e == 2);
  CHECK(b.s == 3);

  CHECK_THROWS_AS(validate(3, 6, 4), Error);       // k/e even with e even
  CHECK(validate(3, 6, 4, true).regime == Regime::Unsupported);
  CHECK_THROWS_AS(validate(3, 4, 2), Error);       // s even
  CHECK_THROWS_AS(validate(3, 3, 3), Error);       // s = 1
  CHECK_THROWS_AS(validate(9, 3, 2), Error);       // p not prime
  CHECK_THROWS_AS(validate(2, 3, 2), Error);       // p even

  // exactly one regime for admissible triples
  for (int m = 3; m <= 7; ++m)
    for (int k = 1; k <= 8; ++k) {
      try {
        const CodeSpec s = validate(3, m, k, true);
        const bool a_side = k % 2 == 0 && s.e % 2 == 1;
        const bool b_side = (k / s.e) % 2 == 1;
        CHECK(((s.regime == Regime::KeEvenEOdd) == a_side));
        CHECK(((s.regime == Regime::KOverEOdd) == b_side));
        CHECK(a_side + b_side <= 1);
      } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidParams);
      }
    }
}

TEST_CASE("min_poly: identity, the three degree-m factors, subfield degree") {
  const FieldTower t = FieldTower::build(3, 3, 1);
  CHECK(min_poly(t, t.one()).to_string() == "2,1");  // x - 1
  CHECK_THROWS_AS(min_poly(t, 0), Error);

  const CodeSpec spec = validate(3, 3, 2);
  const std::int64_t n = spec.n;
  const PolyGFp h0 = min_poly(t, t.inv(t.pi()));
  const PolyGFp h1 = min_poly(t, t.inv(t.neg(t.pi())));
  const PolyGFp h2 = min_poly(t, t.exp((n - spec.u_mod_n()) % n));
  CHECK(h0.degree() == 3);
  CHECK(h1.degree() == 3);
  CHECK(h2.degree() == 3);
  CHECK(h0 != h1);
  CHECK(h1 != h2);
  CHECK(h0 != h2);

  const FieldTower t62 = FieldTower::build(3, 6, 2);
  CHECK(min_poly(t62, t62.gamma()).degree() == t62.e());

  // min_poly(x) divides x^{p^m} - x
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> pick(1, t.order() - 1);
  for (int i = 0; i < 30; ++i) {
    const PolyGFp mp = min_poly(t, static_cast<Code>(pick(rng)));
    PolyGFp xq = PolyGFp::x_pow_minus_one(3, t.order() - 1) * PolyGFp::x(3);
    // x^{p^m} - x = x * (x^{p^m - 1} - 1)
    CHECK(PolyGFp::divmod(xq, mp).second.is_zero());
  }
}

TEST_CASE("code polynomials: frozen values and the division oracle") {
  {
    const CodeSpec spec = validate(3, 3, 2);
    const FieldTower t = FieldTower::build(3, 3, 1);
    const CodePolynomials cp = code_polynomials(spec, t);
    CHECK(cp.h1.to_string() == "2,2,0,1");
    CHECK(cp.h2.to_string() == "1,1,2,1");
    CHECK(cp.g.degree() == 20);
    CHECK(cp.h.degree() == 6);
    CHECK(cp.g * cp.h == PolyGFp::x_pow_minus_one(3, 26));
    // h2 is squarefree and irreducible of degree m
    CHECK(PolyGFp::gcd(cp.h2, cp.h2.derivative()).degree() == 0);
    CHECK(is_irreducible(cp.h2));
    // a root of h2 generates a degree-m extension: its minimal polynomial
    // is h2 itself
    CHECK(min_poly(t, t.exp((spec.n - spec.u_mod_n()) % spec.n)) == cp.h2);
    // the dual generator reproduces the published string
    CHECK(dual_generator(cp.h, spec.n).to_string() == "2,1,0,2,0,2,1");
  }
  {
    const CodeSpec spec = validate(3, 5, 4);
    const FieldTower t = FieldTower::build(3, 5, 1);
    const CodePolynomials cp = code_polynomials(spec, t);
    CHECK(cp.h.degree() == 10);
    CHECK(PolyGFp::divmod(PolyGFp::x_pow_minus_one(3, 242), cp.h).second.is_zero());
    CHECK(dual_generator(cp.h, spec.n).to_string() == "2,0,2,0,0,0,1,1,1,2,1");
  }
}

TEST_CASE("codeword entries: zeros, cyclic shift, weight identity") {
  const CodeSpec spec = validate(3, 3, 2);
  const FieldTower t = FieldTower::build(3, 3, 1);
  const QuadSpace sp(t);

  for (std::int64_t idx = 0; idx < spec.n; ++idx)
    CHECK(codeword_entry(spec, t, 0, 0, idx) == 0);
  CHECK_THROWS_AS(codeword_entry(spec, t, 1, 1, 26), Error);

  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::int64_t> pick(0, t.order() - 1);
  const std::int64_t u = spec.u_mod_n();
  for (int i = 0; i < 20; ++i) {
    const Code a = static_cast<Code>(pick(rng));
    const Code b = static_cast<Code>(pick(rng));
    // cyclic shift: entries of (a, b) shifted once are the entries of
    // (a * (-pi), b * pi^u)
    const Code a2 = t.mul(a, t.neg(t.pi()));
    const Code b2 = t.mul(b, t.exp(u));
    for (std::int64_t idx = 0; idx + 1 < spec.n; ++idx)
      CHECK(codeword_entry(spec, t, a, b, idx + 1) == codeword_entry(spec, t, a2, b2, idx));
    // subcode consistency for a = 0: multiplying b by pi^u shifts by one
    for (std::int64_t idx = 0; idx + 1 < spec.n; ++idx)
      CHECK(codeword_entry(spec, t, 0, b, idx + 1) ==
            codeword_entry(spec, t, 0, t.mul(b, t.exp(u)), idx));
    // weight from entries equals the exponential-sum form
    std::int64_t w = 0;
    for (std::int64_t idx = 0; idx < spec.n; ++idx)
      if (codeword_entry(spec, t, a, b, idx) != 0) ++w;
    CHECK(w == 27 - 9 - s_sum(spec, sp, a, b) / 6);
  }
}

TEST_CASE("enumerated distributions reproduce the published enumerators") {
  {
    const CodeSpec spec = validate(3, 3, 2);
    const FieldTower t = FieldTower::build(3, 3, 1);
    const QuadSpace sp(t);
    const WeightDistribution d = enumerate_distribution(spec, t, sp);
    const std::map<std::int64_t, std::int64_t> want{{0, 1}, {15, 312}, {18, 260}, {21, 156}};
    CHECK(d.entries == want);
    CHECK(d.min_nonzero_weight() == 15);
    CHECK(d == predicted_distribution(spec));
    // brute force agrees with the fast path
    EnumerateOptions brute;
    brute.brute_force_only = true;
    CHECK(enumerate_distribution(spec, t, sp, brute).entries == want);
  }
  {
    const CodeSpec spec = validate(5, 3, 2);
    const FieldTower t = FieldTower::build(5, 3, 1);
    const QuadSpace sp(t);
    const std::map<std::int64_t, std::int64_t> want{{0, 1}, {90, 3720}, {100, 9424}, {110, 2480}};
    CHECK(enumerate_distribution(spec, t, sp).entries == want);
  }
  {
    const CodeSpec spec = validate(5, 3, 1);
    const FieldTower t = FieldTower::build(5, 3, 1);
    const QuadSpace sp(t);
    const std::map<std::int64_t, std::int64_t> want{{0, 1}, {80, 1860}, {100, 12524}, {120, 1240}};
    const WeightDistribution d = enumerate_distribution(spec, t, sp);
    CHECK(d.entries == want);
    CHECK(d == predicted_distribution(spec));
  }
}

TEST_CASE("predicted distributions: closed forms for the published examples") {
  CHECK(predicted_distribution(validate(3, 5, 4)).entries ==
        std::map<std::int64_t, std::int64_t>{{0, 1}, {153, 21780}, {162, 19844}, {171, 17424}});
  CHECK(predicted_distribution(validate(3, 6, 2)).entries ==
        std::map<std::int64_t, std::int64_t>{{0, 1}, {432, 32760}, {486, 472472}, {540, 26208}});
  const WeightDistribution big = predicted_distribution(validate(3, 9, 3));
  CHECK(big.min_nonzero_weight() == 12636);
  CHECK(big.entries.at(12636) == 7439796);
  CHECK(big.entries.at(13122) == 373072310);
  CHECK(big.entries.at(13608) == 6908382);
  CHECK(big.entries.size() == 4);  // three nonzero weights plus zero
  CHECK_THROWS_AS(predicted_distribution(validate(3, 6, 4, true)), Error);
}

TEST_CASE("distribution invariants and budget errors") {
  WeightDistribution d = predicted_distribution(validate(3, 3, 2));
  CHECK_NOTHROW(d.check());
  d.entries[15] += 1;
  CHECK_THROWS_AS(d.check(), Error);

  const CodeSpec spec = validate(3, 3, 2);
  const FieldTower t = FieldTower::build(3, 3, 1);
  const QuadSpace sp(t);
  EnumerateOptions opt;
  opt.pair_budget = 10;
  CHECK_THROWS_AS(enumerate_distribution(spec, t, sp, opt), Error);
}

TEST_CASE("dual certification: d = 4 with a verified witness at (3,3,2)") {
  const CodeSpec spec = validate(3, 3, 2);
  const FieldTower t = FieldTower::build(3, 3, 1);
  const DualCertificate cert = dual_min_distance_certify(spec, t);
  CHECK(cert.d == 4);
  CHECK(cert.n == 26);
  CHECK(cert.dim == 20);
  CHECK(cert.packing_bound == 4);
  CHECK(cert.optimal);
  // deterministic first hit in lexicographic order
  CHECK(cert.witness_positions == std::vector<std::int64_t>{0, 1, 3, 9});
  CHECK(cert.witness_coeffs == std::vector<int>{1, 1, 1, 1});
  // re-verify against both defining equations
  Code za = 0, zb = 0;
  const std::int64_t la = t.log(t.neg(t.pi()));
  for (std::size_t i = 0; i < 4; ++i) {
    const Code c = t.scalar(cert.witness_coeffs[i]);
    za = t.add(za, t.mul(c, t.exp(la * cert.witness_positions[i] % spec.n)));
    zb = t.add(zb, t.mul(c, t.exp(spec.u_mod_n() * cert.witness_positions[i] % spec.n)));
  }
  CHECK(za == 0);
  CHECK(zb == 0);
  // budget gate
  CHECK_THROWS_AS(dual_min_distance_certify(spec, t, 10), Error);
}

TEST_CASE("sphere packing bound values") {
  CHECK(sphere_packing_max_d(26, 20, 3) == 4);
  CHECK(sphere_packing_max_d(242, 232, 3) == 4);
  CHECK(sphere_packing_max_d(10, 10, 3) == 1);  // full space
  const int d124 = sphere_packing_max_d(124, 6, 5);
  CHECK(d124 >= 95);
  CHECK(d124 == 119);  // Singleton-capped
  CHECK_THROWS_AS(sphere_packing_max_d(10, 11, 3), Error);
  CHECK_THROWS_AS(sphere_packing_max_d(10, 0, 3), Error);
}
