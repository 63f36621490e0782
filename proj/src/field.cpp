#include "threeweight/field.hpp"

#include <numeric>

#include "threeweight/errors.hpp"

namespace threeweight {

namespace {

constexpr std::int64_t kMaxTableOrder = std::int64_t{1} << 24;

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FieldTower::FieldTower(int p, int m, int e) {
  if (!is_odd_prime(p)) throw Error(Errc::InvalidParams, "p must be an odd prime");
  if (m < 1) throw Error(Errc::InvalidParams, "m must be positive");
  if (e < 1 || m % e != 0) throw Error(Errc::InvalidParams, "e must divide m");
  const int s = m / e;
  if (s % 2 == 0) throw Error(Errc::InvalidParams, "s = m/e must be odd");
  if (s < 3) throw Error(Errc::InvalidParams, "s = m/e must be at least 3");

  std::int64_t order = 1;
  for (int i = 0; i < m; ++i) {
    order *= p;
    if (order > kMaxTableOrder)
      throw Error(Errc::BudgetExceeded, "p^m exceeds the 2^24 table limit");
  }

  p_ = p;
  m_ = m;
  e_ = e;
  s_ = s;
  order_ = order;
  n_ = order - 1;
  q_ = 1;
  for (int i = 0; i < e; ++i) q_ *= p;
  modulus_ = smallest_primitive_poly(p, m);
  build_tables();
  subfield_log_step_ = n_ / (q_ - 1);
  gamma_ = exp_[static_cast<std::size_t>(subfield_log_step_)];
  lambda_ = gamma_;  // a generator of GF(q)* is always a nonsquare
}

void FieldTower::build_tables() {
  const int p = p_;
  const std::size_t order = static_cast<std::size_t>(order_);
  const std::size_t n = static_cast<std::size_t>(n_);

  exp_.assign(n, 0);
  log_.assign(order, 0);

  // walk pi^0, pi^1, ... by multiplying digit vectors by x mod modulus
  std::vector<int> cur(static_cast<std::size_t>(m_), 0);
  cur[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Code code = 0;
    std::int64_t mult = 1;
    for (int d = 0; d < m_; ++d) {
      code += static_cast<Code>(cur[static_cast<std::size_t>(d)] * mult);
      mult *= p;
    }
    exp_[i] = code;
    log_[code] = static_cast<std::int64_t>(i);
    // cur *= x mod modulus
    int carry = cur[static_cast<std::size_t>(m_ - 1)];
    for (int d = m_ - 1; d > 0; --d) cur[static_cast<std::size_t>(d)] = cur[static_cast<std::size_t>(d - 1)];
    cur[0] = 0;
    if (carry) {
      for (int d = 0; d < m_; ++d) {
        int mc = modulus_.coeff(d);
        if (mc)
          cur[static_cast<std::size_t>(d)] =
              (cur[static_cast<std::size_t>(d)] + (p - mc) * carry) % p;
      }
    }
  }
  if (exp_[0] != 1)
    throw Error(Errc::InternalInconsistency, "exponent table does not start at 1");

  // digit-wise addition of 1, giving the Zech logarithm table
  zech_.assign(n, kZechZero);
  for (std::size_t i = 0; i < n; ++i) {
    Code c = exp_[i];
    // add 1 to digit 0 (mod p), digits are independent
    Code low = c % static_cast<Code>(p);
    Code sum = c - low + (low + 1) % static_cast<Code>(p);
    if (sum != 0) zech_[i] = log_[sum];
  }

  // trace tables
  trace_p_.assign(order, 0);
  trace_q_.assign(order, 0);
  std::vector<std::int64_t> pmod(static_cast<std::size_t>(m_), 0);
  std::int64_t pw = 1;
  for (int i = 0; i < m_; ++i) {
    pmod[static_cast<std::size_t>(i)] = pw;
    pw = pw * p % n_;
  }
  for (std::size_t codeval = 1; codeval < order; ++codeval) {
    const std::int64_t L = log_[codeval];
    // trace to GF(p): sum of all m Frobenius conjugates (digit add)
    std::vector<int> acc(static_cast<std::size_t>(m_), 0);
    for (int i = 0; i < m_; ++i) {
      Code conj = exp_[static_cast<std::size_t>(L * pmod[static_cast<std::size_t>(i)] % n_)];
      Code v = conj;
      for (int d = 0; d < m_; ++d) {
        acc[static_cast<std::size_t>(d)] = (acc[static_cast<std::size_t>(d)] + static_cast<int>(v % static_cast<Code>(p))) % p;
        v /= static_cast<Code>(p);
      }
    }
    for (int d = 1; d < m_; ++d)
      if (acc[static_cast<std::size_t>(d)] != 0)
        throw Error(Errc::InternalInconsistency, "prime trace left the prime field");
    trace_p_[codeval] = static_cast<std::uint8_t>(acc[0]);

    // trace to GF(q): sum of the s conjugates under x -> x^{p^e}
    std::vector<int> accq(static_cast<std::size_t>(m_), 0);
    for (int i = 0; i < s_; ++i) {
      Code conj = exp_[static_cast<std::size_t>(L * pmod[static_cast<std::size_t>((i * e_) % m_)] % n_)];
      Code v = conj;
      for (int d = 0; d < m_; ++d) {
        accq[static_cast<std::size_t>(d)] = (accq[static_cast<std::size_t>(d)] + static_cast<int>(v % static_cast<Code>(p))) % p;
        v /= static_cast<Code>(p);
      }
    }
    Code qcode = 0;
    std::int64_t mult = 1;
    for (int d = 0; d < m_; ++d) {
      qcode += static_cast<Code>(accq[static_cast<std::size_t>(d)] * mult);
      mult *= p;
    }
    trace_q_[codeval] = qcode;
  }
}

Code FieldTower::scalar(int v) const {
  int r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Code>(r);
}

Code FieldTower::add(Code a, Code b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::int64_t la = log_[a], lb = log_[b];
  std::int64_t d = lb - la;
  if (d < 0) d += n_;
  const std::int64_t z = zech_[static_cast<std::size_t>(d)];
  if (z == kZechZero) return 0;
  std::int64_t r = la + z;
  if (r >= n_) r -= n_;
  return exp_[static_cast<std::size_t>(r)];
}

Code FieldTower::neg(Code a) const {
  if (a == 0) return 0;
  std::int64_t r = log_[a] + n_ / 2;  // -1 = pi^{n/2}, n even for odd p
  if (r >= n_) r -= n_;
  return exp_[static_cast<std::size_t>(r)];
}

Code FieldTower::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  std::int64_t r = log_[a] + log_[b];
  if (r >= n_) r -= n_;
  return exp_[static_cast<std::size_t>(r)];
}

Code FieldTower::inv(Code a) const {
  if (a == 0) throw Error(Errc::DomainError, "inverse of zero");
  return exp_[static_cast<std::size_t>((n_ - log_[a]) % n_)];
}

Code FieldTower::pow(Code a, std::int64_t t) const {
  if (a == 0) {
    if (t < 0) throw Error(Errc::DomainError, "negative power of zero");
    return t == 0 ? 1 : 0;
  }
  std::int64_t r = static_cast<std::int64_t>(
      (static_cast<__int128>(log_[a]) * (((t % n_) + n_) % n_)) % n_);
  return exp_[static_cast<std::size_t>(r)];
}

Code FieldTower::frob(Code a, int t) const {
  if (a == 0) return 0;
  int tm = ((t % m_) + m_) % m_;
  std::int64_t pw = 1;
  for (int i = 0; i < tm; ++i) pw = pw * p_ % n_;
  return exp_[static_cast<std::size_t>(log_[a] * pw % n_)];
}

Code FieldTower::exp(std::int64_t logval) const {
  std::int64_t r = logval % n_;
  if (r < 0) r += n_;
  return exp_[static_cast<std::size_t>(r)];
}

std::int64_t FieldTower::log(Code a) const {
  if (a == 0) throw Error(Errc::DomainError, "log of zero");
  return log_[a];
}

int FieldTower::trace_q_to_prime(Code a) const {
  if (!in_subfield(a)) throw Error(Errc::DomainError, "element not in GF(q)");
  if (a == 0) return 0;
  std::vector<int> acc(static_cast<std::size_t>(m_), 0);
  const std::int64_t L = log_[a];
  std::int64_t pw = 1;
  for (int i = 0; i < e_; ++i) {
    Code conj = exp_[static_cast<std::size_t>(L * pw % n_)];
    Code v = conj;
    for (int d = 0; d < m_; ++d) {
      acc[static_cast<std::size_t>(d)] = (acc[static_cast<std::size_t>(d)] + static_cast<int>(v % static_cast<Code>(p_))) % p_;
      v /= static_cast<Code>(p_);
    }
    pw = pw * p_ % n_;
  }
  for (int d = 1; d < m_; ++d)
    if (acc[static_cast<std::size_t>(d)] != 0)
      throw Error(Errc::InternalInconsistency, "subfield trace left the prime field");
  return acc[0];
}

bool FieldTower::in_subfield(Code a) const {
  if (a == 0) return true;
  return log_[a] % subfield_log_step_ == 0;
}

int FieldTower::quadratic_character(Code a, SubfieldKind where) const {
  switch (where) {
    case SubfieldKind::Prime: {
      if (!in_prime_field(a))
        throw Error(Errc::DomainError, "element not in GF(p)");
      if (a == 0) return 0;
      // Euler's criterion in GF(p)
      std::int64_t r = 1, base = a;
      for (int ex = (p_ - 1) / 2; ex > 0; ex >>= 1) {
        if (ex & 1) r = r * base % p_;
        base = base * base % p_;
      }
      return r == 1 ? 1 : -1;
    }
    case SubfieldKind::Q: {
      if (!in_subfield(a)) throw Error(Errc::DomainError, "element not in GF(q)");
      if (a == 0) return 0;
      return (log_[a] / subfield_log_step_) % 2 == 0 ? 1 : -1;
    }
    case SubfieldKind::Full: {
      if (a == 0) return 0;
      return log_[a] % 2 == 0 ? 1 : -1;
    }
  }
  throw Error(Errc::DomainError, "unknown subfield");
}

}  // namespace threeweight
