#include "threeweight/codespec.hpp"

#include <numeric>

#include "threeweight/errors.hpp"

namespace threeweight {

namespace {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::int64_t checked_pow(std::int64_t base, int exp, const char* what) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (std::int64_t{1} << 62) / base)
      throw Error(Errc::InvalidParams, std::string(what) + " does not fit in 64 bits");
    r *= base;
  }
  return r;
}

}  // namespace

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::KeEvenEOdd: return "k_even_e_odd";
    case Regime::KOverEOdd: return "k_over_e_odd";
    case Regime::Unsupported: return "unsupported";
  }
  return "unknown";
}

std::int64_t CodeSpec::u_mod_n() const {
  // (p^k + 1)/2 mod n, computed as ((p^k mod 2n) + 1)/2; p^k is odd and
  // 2n is even, so the residue keeps the parity and the halving is exact.
  const std::int64_t two_n = 2 * n;
  std::int64_t r = 1 % two_n;
  for (int i = 0; i < k; ++i) r = r * p % two_n;
  return ((r + 1) / 2) % n;
}

std::int64_t CodeSpec::pair_count() const {
  return checked_pow(p, 2 * m, "p^{2m}");
}

CodeSpec validate(int p, int m, int k, bool allow_unsupported) {
  if (!is_odd_prime(p)) throw Error(Errc::InvalidParams, "p must be an odd prime");
  if (m < 1) throw Error(Errc::InvalidParams, "m must be positive");
  if (k < 1) throw Error(Errc::InvalidParams, "k must be positive");

  CodeSpec spec;
  spec.p = p;
  spec.m = m;
  spec.k = k;
  spec.e = std::gcd(m, k);
  spec.s = m / spec.e;
  if (spec.s % 2 == 0) throw Error(Errc::InvalidParams, "s = m/gcd(m,k) must be odd");
  if (spec.s < 3) throw Error(Errc::InvalidParams, "s = m/gcd(m,k) must be at least 3");

  spec.q = checked_pow(p, spec.e, "p^e");
  spec.pm = checked_pow(p, m, "p^m");
  spec.n = spec.pm - 1;
  spec.dim = 2 * m;
  spec.u = (checked_pow(p, k, "p^k") + 1) / 2;

  const int k_over_e = k / spec.e;
  if (k_over_e % 2 == 1) {
    spec.regime = Regime::KOverEOdd;
  } else if (spec.e % 2 == 1) {
    // k/e even with e odd is the same condition as k even with e odd
    spec.regime = Regime::KeEvenEOdd;
  } else {
    spec.regime = Regime::Unsupported;
    if (!allow_unsupported)
      throw Error(Errc::UnsupportedRegime,
                  "k/e even with e even has no closed-form weight distribution");
  }
  return spec;
}

}  // namespace threeweight
