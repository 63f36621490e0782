#include "threeweight/poly.hpp"

#include <algorithm>
#include <sstream>

#include "threeweight/errors.hpp"

namespace threeweight {

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t ipow_checked(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (std::int64_t{1} << 62) / base)
      throw Error(Errc::InvalidParams, "p^m does not fit in 64 bits");
    r *= base;
  }
  return r;
}

}  // namespace

PolyGFp::PolyGFp(int p, std::vector<std::uint8_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  if (p < 2) throw Error(Errc::InvalidParams, "polynomial characteristic < 2");
  for (auto c : coeffs_)
    if (c >= p) throw Error(Errc::InvalidParams, "coefficient out of range");
  trim();
}

PolyGFp PolyGFp::constant(int p, int value) {
  int v = ((value % p) + p) % p;
  if (v == 0) return zero(p);
  return PolyGFp(p, {static_cast<std::uint8_t>(v)});
}

PolyGFp PolyGFp::x_pow_minus_one(int p, std::int64_t n) {
  if (n < 1) throw Error(Errc::InvalidParams, "x^n - 1 needs n >= 1");
  std::vector<std::uint8_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = static_cast<std::uint8_t>(p - 1);
  c.back() = 1;
  return PolyGFp(p, std::move(c));
}

PolyGFp PolyGFp::parse(int p, const std::string& text) {
  std::vector<std::uint8_t> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = std::stoi(item);
    if (v < 0 || v >= p) throw Error(Errc::InvalidParams, "coefficient out of range: " + item);
    c.push_back(static_cast<std::uint8_t>(v));
  }
  return PolyGFp(p, std::move(c));
}

int PolyGFp::coeff(std::int64_t i) const {
  if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

void PolyGFp::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyGFp PolyGFp::operator+(const PolyGFp& rhs) const {
  std::vector<std::uint8_t> c(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = static_cast<std::uint8_t>((coeff(i) + rhs.coeff(i)) % p_);
  return PolyGFp(p_, std::move(c));
}

PolyGFp PolyGFp::operator-(const PolyGFp& rhs) const {
  std::vector<std::uint8_t> c(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = static_cast<std::uint8_t>((coeff(i) - rhs.coeff(i) + p_) % p_);
  return PolyGFp(p_, std::move(c));
}

PolyGFp PolyGFp::operator*(const PolyGFp& rhs) const {
  if (is_zero() || rhs.is_zero()) return zero(p_);
  std::vector<std::uint8_t> c(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      c[i + j] = static_cast<std::uint8_t>((c[i + j] + coeffs_[i] * rhs.coeffs_[j]) % p_);
  }
  return PolyGFp(p_, std::move(c));
}

std::pair<PolyGFp, PolyGFp> PolyGFp::divmod(const PolyGFp& num, const PolyGFp& den) {
  if (den.is_zero()) throw Error(Errc::DomainError, "polynomial division by zero");
  const int p = num.p_;
  if (num.degree() < den.degree()) return {zero(p), num};
  // modular inverse of the leading coefficient
  int lead = den.coeffs_.back();
  int inv = 0;
  for (int i = 1; i < p; ++i)
    if ((lead * i) % p == 1) { inv = i; break; }
  std::vector<std::uint8_t> rem(num.coeffs_);
  std::vector<std::uint8_t> quo(num.coeffs_.size() - den.coeffs_.size() + 1, 0);
  const int dd = den.degree();
  for (std::int64_t i = num.degree(); i >= dd; --i) {
    int c = (rem[static_cast<std::size_t>(i)] * inv) % p;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - dd)] = static_cast<std::uint8_t>(c);
    for (int j = 0; j <= dd; ++j) {
      auto& r = rem[static_cast<std::size_t>(i - dd + j)];
      r = static_cast<std::uint8_t>((r + p * p - c * den.coeffs_[static_cast<std::size_t>(j)] % p) % p);
    }
  }
  rem.resize(static_cast<std::size_t>(std::max(dd, 0)));
  return {PolyGFp(p, std::move(quo)), PolyGFp(p, std::move(rem))};
}

PolyGFp PolyGFp::derivative() const {
  if (degree() < 1) return zero(p_);
  std::vector<std::uint8_t> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    c[i - 1] = static_cast<std::uint8_t>((coeffs_[i] * (i % p_)) % p_);
  return PolyGFp(p_, std::move(c));
}

PolyGFp PolyGFp::gcd(PolyGFp a, PolyGFp b) {
  while (!b.is_zero()) {
    PolyGFp r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.make_monic();
}

PolyGFp PolyGFp::make_monic() const {
  if (is_zero() || coeffs_.back() == 1) return *this;
  int lead = coeffs_.back();
  int inv = 0;
  for (int i = 1; i < p_; ++i)
    if ((lead * i) % p_ == 1) { inv = i; break; }
  std::vector<std::uint8_t> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    c[i] = static_cast<std::uint8_t>((coeffs_[i] * inv) % p_);
  return PolyGFp(p_, std::move(c));
}

PolyGFp PolyGFp::reciprocal_monic() const {
  if (is_zero() || coeffs_[0] == 0)
    throw Error(Errc::DomainError, "reciprocal needs a nonzero constant term");
  std::vector<std::uint8_t> c(coeffs_.rbegin(), coeffs_.rend());
  return PolyGFp(p_, std::move(c)).make_monic();
}

std::string PolyGFp::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << static_cast<int>(coeffs_[i]);
  }
  return os.str();
}

PolyGFp polymulmod(const PolyGFp& a, const PolyGFp& b, const PolyGFp& f) {
  return (a * b).mod(f);
}

PolyGFp polypowmod(const PolyGFp& base, std::int64_t e, const PolyGFp& f) {
  PolyGFp result = PolyGFp::one(base.p());
  PolyGFp acc = base.mod(f);
  while (e > 0) {
    if (e & 1) result = polymulmod(result, acc, f);
    acc = polymulmod(acc, acc, f);
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const PolyGFp& f) {
  const int p = f.p();
  const int m = f.degree();
  if (m < 1) return false;
  if (m == 1) return true;
  // x^{p^m} == x mod f, and x^{p^{m/l}} != x for prime divisors l of m.
  const PolyGFp x = PolyGFp::x(p);
  PolyGFp xp = x;  // x^{p^i} mod f, maintained by repeated p-th powering
  std::vector<PolyGFp> frob_chain;
  frob_chain.push_back(xp);
  for (int i = 1; i <= m; ++i) {
    xp = polypowmod(xp, p, f);
    frob_chain.push_back(xp);
  }
  if (!(frob_chain[static_cast<std::size_t>(m)] == x.mod(f))) return false;
  for (std::int64_t l : {2, 3, 5, 7, 11, 13}) {
    if (l > m) break;
    if (m % l) continue;
    PolyGFp diff = frob_chain[static_cast<std::size_t>(m / l)] - x.mod(f);
    if (PolyGFp::gcd(diff, f).degree() != 0) return false;
  }
  // handle prime divisors of m above 13 (m is small here, so this is moot,
  // but keep the test complete)
  for (int l = 17; l <= m; ++l) {
    bool lp = true;
    for (int d = 2; d * d <= l; ++d)
      if (l % d == 0) { lp = false; break; }
    if (!lp || m % l) continue;
    PolyGFp diff = frob_chain[static_cast<std::size_t>(m / l)] - x.mod(f);
    if (PolyGFp::gcd(diff, f).degree() != 0) return false;
  }
  return true;
}

bool is_primitive(const PolyGFp& f) {
  const int p = f.p();
  const int m = f.degree();
  if (m < 1 || f.coeff(0) == 0 || !f.is_monic()) return false;
  if (!is_irreducible(f)) return false;
  const std::int64_t n = ipow_checked(p, m) - 1;
  const PolyGFp one = PolyGFp::one(p);
  if (!(polypowmod(PolyGFp::x(p), n, f) == one)) return false;
  for (std::int64_t l : prime_factors(n))
    if (polypowmod(PolyGFp::x(p), n / l, f) == one) return false;
  return true;
}

PolyGFp smallest_primitive_poly(int p, int degree) {
  // Odometer over coefficient vectors (c0,...,c_{m-1}), c0 most significant
  // in the lexicographic order, candidate f = c0 + c1 x + ... + x^m.
  std::vector<std::uint8_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = 1;
  const std::int64_t total = ipow_checked(p, degree);
  for (std::int64_t it = 0; it < total; ++it) {
    std::int64_t v = it;
    for (int i = degree - 1; i >= 0; --i) {
      c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v % p);
      v /= p;
    }
    if (c[0] == 0) continue;  // x | f, never primitive
    PolyGFp f(p, c);
    if (is_primitive(f)) return f;
  }
  throw Error(Errc::InternalInconsistency, "no primitive polynomial found");
}

}  // namespace threeweight
