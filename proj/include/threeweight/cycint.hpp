#pragma once

#include <cstdint>
#include <vector>

namespace threeweight {

/// Element of Z[zeta_p] held as a length-p counting vector (c_0,...,c_{p-1})
/// for sum_j c_j zeta_p^j. The representation is unique only modulo the
/// relation sum_j zeta_p^j = 0; the canonical form subtracts the coordinate
/// minimum so that min_j c_j = 0. The value is a rational integer exactly
/// when c_1 = ... = c_{p-1} in canonical form, and then equals c_0 - c_1.
///
/// All exponential sums in the workbench live here; no floating-point root
/// of unity is ever materialized.
class CycInt {
 public:
  explicit CycInt(int p);
  static CycInt integer(int p, std::int64_t v);
  static CycInt zeta_power(int p, std::int64_t j);
  /// Build from raw bin counts (index j = multiplicity of zeta^j).
  static CycInt from_counts(std::vector<std::int64_t> counts);

  int p() const { return p_; }
  const std::vector<std::int64_t>& counts() const { return c_; }

  CycInt& operator+=(const CycInt& rhs);
  CycInt& operator-=(const CycInt& rhs);
  CycInt operator+(const CycInt& rhs) const;
  CycInt operator-(const CycInt& rhs) const;
  /// Convolution with zeta^p = 1 folding.
  CycInt operator*(const CycInt& rhs) const;
  CycInt operator*(std::int64_t scalar) const;
  bool operator==(const CycInt& rhs) const = default;

  /// Complex conjugate, zeta -> zeta^{-1}.
  CycInt conjugate() const;

  bool is_integer() const;
  /// Throws NonIntegerSum when the value is not rational.
  std::int64_t as_integer() const;
  /// |z|^2 = z * conj(z), always a rational integer.
  std::int64_t magnitude_squared() const;

 private:
  void canonicalize();
  int p_;
  std::vector<std::int64_t> c_;
};

}  // namespace threeweight
