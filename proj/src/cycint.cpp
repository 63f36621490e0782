#include "threeweight/cycint.hpp"

#include <algorithm>

#include "threeweight/errors.hpp"

namespace threeweight {

CycInt::CycInt(int p) : p_(p), c_(static_cast<std::size_t>(p), 0) {
  if (p < 2) throw Error(Errc::InvalidParams, "zeta order must be >= 2");
}

CycInt CycInt::integer(int p, std::int64_t v) {
  CycInt z(p);
  z.c_[0] = v;
  z.canonicalize();
  return z;
}

CycInt CycInt::zeta_power(int p, std::int64_t j) {
  CycInt z(p);
  std::int64_t r = j % p;
  if (r < 0) r += p;
  z.c_[static_cast<std::size_t>(r)] = 1;
  return z;
}

CycInt CycInt::from_counts(std::vector<std::int64_t> counts) {
  CycInt z(static_cast<int>(counts.size()));
  z.c_ = std::move(counts);
  z.canonicalize();
  return z;
}

void CycInt::canonicalize() {
  const std::int64_t mn = *std::min_element(c_.begin(), c_.end());
  if (mn != 0)
    for (auto& v : c_) v -= mn;
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
  for (int i = 0; i < p_; ++i) c_[static_cast<std::size_t>(i)] += rhs.c_[static_cast<std::size_t>(i)];
  canonicalize();
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
  for (int i = 0; i < p_; ++i) c_[static_cast<std::size_t>(i)] -= rhs.c_[static_cast<std::size_t>(i)];
  canonicalize();
  return *this;
}

CycInt CycInt::operator+(const CycInt& rhs) const {
  CycInt z = *this;
  z += rhs;
  return z;
}

CycInt CycInt::operator-(const CycInt& rhs) const {
  CycInt z = *this;
  z -= rhs;
  return z;
}

CycInt CycInt::operator*(const CycInt& rhs) const {
  CycInt z(p_);
  for (int i = 0; i < p_; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < p_; ++j) {
      int k = i + j;
      if (k >= p_) k -= p_;
      z.c_[static_cast<std::size_t>(k)] += c_[static_cast<std::size_t>(i)] * rhs.c_[static_cast<std::size_t>(j)];
    }
  }
  z.canonicalize();
  return z;
}

CycInt CycInt::operator*(std::int64_t scalar) const {
  CycInt z(p_);
  for (int i = 0; i < p_; ++i) z.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] * scalar;
  z.canonicalize();
  return z;
}

CycInt CycInt::conjugate() const {
  CycInt z(p_);
  z.c_[0] = c_[0];
  for (int i = 1; i < p_; ++i) z.c_[static_cast<std::size_t>(p_ - i)] = c_[static_cast<std::size_t>(i)];
  z.canonicalize();
  return z;
}

bool CycInt::is_integer() const {
  for (int i = 2; i < p_; ++i)
    if (c_[static_cast<std::size_t>(i)] != c_[1]) return false;
  return true;
}

std::int64_t CycInt::as_integer() const {
  if (!is_integer())
    throw Error(Errc::NonIntegerSum, "cyclotomic value is not a rational integer");
  return c_[0] - c_[1];
}

std::int64_t CycInt::magnitude_squared() const {
  return ((*this) * conjugate()).as_integer();
}

}  // namespace threeweight
