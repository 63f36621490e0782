#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace threeweight {

/// Dense polynomial over GF(p), coefficients stored low degree first.
/// Canonical form keeps no trailing zero coefficients; the zero polynomial
/// has an empty coefficient vector and degree() == -1.
class PolyGFp {
 public:
  PolyGFp() = default;
  PolyGFp(int p, std::vector<std::uint8_t> coeffs);

  static PolyGFp zero(int p) { return PolyGFp(p, {}); }
  static PolyGFp one(int p) { return PolyGFp(p, {1}); }
  static PolyGFp x(int p) { return PolyGFp(p, {0, 1}); }
  static PolyGFp constant(int p, int value);
  /// x^n - 1 (n >= 1).
  static PolyGFp x_pow_minus_one(int p, std::int64_t n);
  /// Parse "c0,c1,...,cd" as written by to_string().
  static PolyGFp parse(int p, const std::string& text);

  int p() const { return p_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  int coeff(std::int64_t i) const;
  const std::vector<std::uint8_t>& coeffs() const { return coeffs_; }

  PolyGFp operator+(const PolyGFp& rhs) const;
  PolyGFp operator-(const PolyGFp& rhs) const;
  PolyGFp operator*(const PolyGFp& rhs) const;
  bool operator==(const PolyGFp& rhs) const = default;

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<PolyGFp, PolyGFp> divmod(const PolyGFp& num, const PolyGFp& den);
  PolyGFp mod(const PolyGFp& den) const { return divmod(*this, den).second; }

  PolyGFp derivative() const;
  static PolyGFp gcd(PolyGFp a, PolyGFp b);

  PolyGFp make_monic() const;
  /// x^{deg} * f(1/x) / f(0); requires f(0) != 0.
  PolyGFp reciprocal_monic() const;

  /// Coefficient string "c0,c1,...,cd" (low degree first); zero -> "0".
  std::string to_string() const;

 private:
  void trim();
  int p_ = 0;
  std::vector<std::uint8_t> coeffs_;
};

/// a * b mod f, with f monic of degree >= 1.
PolyGFp polymulmod(const PolyGFp& a, const PolyGFp& b, const PolyGFp& f);

/// base^e mod f (e >= 0).
PolyGFp polypowmod(const PolyGFp& base, std::int64_t e, const PolyGFp& f);

/// True when f is irreducible over GF(p) (degree >= 1).
bool is_irreducible(const PolyGFp& f);

/// True when f is primitive: irreducible and the class of x generates the
/// multiplicative group of GF(p^deg f).
bool is_primitive(const PolyGFp& f);

/// Lexicographically smallest (by coefficient vector, low degree first)
/// monic primitive polynomial of the given degree over GF(p).
PolyGFp smallest_primitive_poly(int p, int degree);

}  // namespace threeweight
