#include "doctest.h"

#include "threeweight/cycint.hpp"
#include "threeweight/errors.hpp"

using namespace threeweight;

TEST_CASE("integers round-trip, including negatives") {
  for (std::int64_t v : {0LL, 1LL, 7LL, -1LL, -5LL, 1000000LL}) {
    const CycInt z = CycInt::integer(3, v);
    CHECK(z.is_integer());
    CHECK(z.as_integer() == v);
  }
}

TEST_CASE("the all-ones relation collapses to zero") {
  CycInt z(5);
  for (int j = 0; j < 5; ++j) z += CycInt::zeta_power(5, j);
  CHECK(z == CycInt::integer(5, 0));
}

TEST_CASE("zeta is not an integer and conjugation inverts it") {
  const CycInt z = CycInt::zeta_power(3, 1);
  CHECK_FALSE(z.is_integer());
  CHECK_THROWS_AS(z.as_integer(), Error);
  CHECK(z * z.conjugate() == CycInt::integer(3, 1));
  CHECK(z.conjugate().conjugate() == z);
  CHECK(z.magnitude_squared() == 1);
}

TEST_CASE("small arithmetic identities in Z[zeta_3]") {
  const CycInt z = CycInt::zeta_power(3, 1);
  // 1 + zeta + zeta^2 = 0
  CHECK(CycInt::integer(3, 1) + z + z * z == CycInt::integer(3, 0));
  // |1 + zeta|^2 = (1+zeta)(1+zeta^{-1}) = 2 + zeta + zeta^2 = 1
  CHECK((CycInt::integer(3, 1) + z).magnitude_squared() == 1);
  // zeta^order wraps
  CHECK(CycInt::zeta_power(3, 4) == CycInt::zeta_power(3, 1));
  CHECK(CycInt::zeta_power(3, -1) == CycInt::zeta_power(3, 2));
}

TEST_CASE("from_counts bins and scalar multiplication") {
  const CycInt s = CycInt::from_counts({4, 1, 1});  // 4 + zeta + zeta^2 = 3
  CHECK(s.is_integer());
  CHECK(s.as_integer() == 3);
  CHECK((s * std::int64_t{-2}).as_integer() == -6);
}
