#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "threeweight/poly.hpp"

namespace threeweight {

/// Element of GF(p^m) encoded as an integer in [0, p^m): base-p digits,
/// least significant first, are the polynomial-basis coordinates.
using Code = std::uint32_t;

enum class SubfieldKind { Prime, Q, Full };

/// The chain GF(p) < GF(q) = GF(p^e) < GF(q^s) = GF(p^m) with a fixed
/// primitive element pi (the class of x modulo a deterministic primitive
/// polynomial), the subfield generator gamma = pi^{(p^m-1)/(q-1)}, and the
/// fixed nonsquare lambda = gamma.
///
/// Towers are immutable after construction; every operation is a pure
/// function of immutable state and safe to call concurrently.
class FieldTower {
 public:
  /// Requires: p an odd prime, e | m, s = m/e odd and >= 3.
  /// The discrete-log/Zech tables bound the supported size to p^m <= 2^24.
  static FieldTower build(int p, int m, int e) { return FieldTower(p, m, e); }
  static std::unique_ptr<FieldTower> build_unique(int p, int m, int e) {
    return std::unique_ptr<FieldTower>(new FieldTower(p, m, e));
  }

  // the address of a tower is part of its identity (QuadSpace and friends
  // keep references), so towers stay where they are built
  FieldTower(const FieldTower&) = delete;
  FieldTower& operator=(const FieldTower&) = delete;
  FieldTower(FieldTower&&) = delete;
  FieldTower& operator=(FieldTower&&) = delete;

  int p() const { return p_; }
  int m() const { return m_; }
  int e() const { return e_; }
  int s() const { return s_; }
  std::int64_t order() const { return order_; }        // p^m
  std::int64_t group_order() const { return n_; }      // p^m - 1
  std::int64_t q() const { return q_; }                // p^e
  const PolyGFp& modulus() const { return modulus_; }

  Code pi() const { return exp_[1]; }
  Code gamma() const { return gamma_; }
  Code lambda() const { return lambda_; }
  Code one() const { return 1; }
  /// Embedding of a prime-field scalar (reduced mod p).
  Code scalar(int v) const;

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  /// a^t with t arbitrary (negative allowed; a nonzero when t < 0).
  Code pow(Code a, std::int64_t t) const;
  /// Frobenius power a^{p^t}; t may be any integer (reduced mod m).
  Code frob(Code a, int t) const;

  Code exp(std::int64_t logval) const;  // pi^{logval mod n}
  std::int64_t log(Code a) const;       // DomainError on 0

  /// Trace onto GF(p), returned as an int in [0, p).
  int trace_to_prime(Code a) const { return trace_p_[a]; }
  /// Trace onto GF(q) (sum of the s conjugates under x -> x^q).
  Code trace_to_subfield(Code a) const { return trace_q_[a]; }
  /// Trace GF(q) -> GF(p) for an element of the subfield.
  int trace_q_to_prime(Code a) const;

  bool in_prime_field(Code a) const { return a < static_cast<Code>(p_); }
  bool in_subfield(Code a) const;  // GF(q) membership

  /// Quadratic character of the named subfield: 0 at zero, +1 on nonzero
  /// squares, -1 on nonsquares. DomainError when a is outside the subfield.
  int quadratic_character(Code a, SubfieldKind where) const;
  /// eta_1, the quadratic character of GF(q).
  int eta1(Code a) const { return quadratic_character(a, SubfieldKind::Q); }

 private:
  FieldTower(int p, int m, int e);
  void build_tables();

  int p_ = 0, m_ = 0, e_ = 0, s_ = 0;
  std::int64_t order_ = 0, n_ = 0, q_ = 0;
  PolyGFp modulus_;
  Code gamma_ = 0, lambda_ = 0;
  std::int64_t subfield_log_step_ = 0;  // n / (q - 1)

  static constexpr std::int64_t kZechZero = -1;  // marks 1 + pi^i == 0
  std::vector<Code> exp_;            // exp_[i] = code of pi^i, i in [0, n)
  std::vector<std::int64_t> log_;    // log_[code], log_[0] unused
  std::vector<std::int64_t> zech_;   // zech_[i] = log(1 + pi^i) or kZechZero
  std::vector<std::uint8_t> trace_p_;
  std::vector<Code> trace_q_;
};

}  // namespace threeweight
