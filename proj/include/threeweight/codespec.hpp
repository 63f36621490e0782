#pragma once

#include <cstdint>
#include <string>

namespace threeweight {

/// Parameter regimes with a closed-form weight distribution. The two
/// supported regimes partition the admissible (p, m, k): either k/e is odd,
/// or k/e is even -- which forces k even -- and then e must be odd to be
/// covered. "k/e even with e even" has no closed form here.
enum class Regime { KeEvenEOdd, KOverEOdd, Unsupported };

std::string regime_name(Regime r);

/// Validated parameter set plus derived constants.
struct CodeSpec {
  int p = 0;
  int m = 0;
  int k = 0;
  int e = 0;           // gcd(m, k)
  int s = 0;           // m / e, odd and >= 3
  std::int64_t q = 0;  // p^e
  std::int64_t pm = 0; // p^m
  std::int64_t n = 0;  // p^m - 1, code length
  int dim = 0;         // 2m
  std::int64_t u = 0;  // (p^k + 1) / 2
  Regime regime = Regime::Unsupported;

  /// u reduced modulo the group order p^m - 1 (the only form arithmetic uses).
  std::int64_t u_mod_n() const;
  /// Number of (a, b) pairs, p^{2m}; throws on 64-bit overflow.
  std::int64_t pair_count() const;
};

/// Checks p odd prime, s = m/gcd(m,k) odd and >= 3, and assigns the regime.
/// Throws InvalidParams on a bad frame and UnsupportedRegime when k/e is
/// even with e even, unless allow_unsupported is set (brute-force analysis).
CodeSpec validate(int p, int m, int k, bool allow_unsupported = false);

}  // namespace threeweight
