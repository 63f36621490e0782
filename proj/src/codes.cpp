#include "threeweight/codes.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "threeweight/errors.hpp"

namespace threeweight {

namespace {

using boost::multiprecision::cpp_int;

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// (-pi)^t and pi^{u t} tables for the dual-code equations and the
// definition-level codeword sweeps
struct CheckTables {
  std::vector<Code> apow;  // (-pi)^t
  std::vector<Code> bpow;  // pi^{u t}
};

CheckTables build_check_tables(const CodeSpec& spec, const FieldTower& t) {
  const std::int64_t n = spec.n;
  CheckTables tabs;
  tabs.apow.resize(static_cast<std::size_t>(n));
  tabs.bpow.resize(static_cast<std::size_t>(n));
  const std::int64_t la = t.log(t.neg(t.pi()));
  const std::int64_t u = spec.u_mod_n();
  for (std::int64_t i = 0; i < n; ++i) {
    tabs.apow[static_cast<std::size_t>(i)] = t.exp(la * i % n);
    tabs.bpow[static_cast<std::size_t>(i)] = t.exp(u % n * i % n);
  }
  return tabs;
}

std::int64_t weight_by_entries(const FieldTower& t, const CheckTables& tabs, Code a, Code b) {
  std::int64_t w = 0;
  const std::size_t n = tabs.apow.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Code v = t.add(t.mul(a, tabs.apow[i]), t.mul(b, tabs.bpow[i]));
    if (t.trace_to_prime(v) != 0) ++w;
  }
  return w;
}

int threads_or_default(int threads, std::int64_t work) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (work < 4096) return 1;
  return std::min<std::int64_t>(threads, 8);
}

}  // namespace

void WeightDistribution::check() const {
  std::int64_t total = 0;
  std::int64_t weighted = 0;
  for (const auto& [w, c] : entries) {
    if (w < 0 || w > n) throw Error(Errc::InternalInconsistency, "weight out of range");
    if (c < 0) throw Error(Errc::InternalInconsistency, "negative weight count");
    total += c;
    weighted += w * c;
  }
  if (total != ipow(p, dim))
    throw Error(Errc::InternalInconsistency, "weight counts do not sum to p^dim");
  auto it = entries.find(0);
  if (it == entries.end() || it->second != 1)
    throw Error(Errc::InternalInconsistency, "weight zero must occur exactly once");
  if (weighted != n * (p - 1) * ipow(p, dim - 1))
    throw Error(Errc::InternalInconsistency, "average-weight identity failed");
}

std::int64_t WeightDistribution::min_nonzero_weight() const {
  for (const auto& [w, c] : entries)
    if (w > 0 && c > 0) return w;
  throw Error(Errc::InternalInconsistency, "no nonzero weight present");
}

std::string WeightDistribution::to_csv() const {
  std::ostringstream os;
  for (const auto& [w, c] : entries) os << w << ',' << c << '\n';
  return os.str();
}

PolyGFp min_poly(const FieldTower& t, Code x) {
  if (x == 0) throw Error(Errc::DomainError, "minimal polynomial of zero");
  // collect the distinct Frobenius conjugates
  std::vector<Code> conj;
  Code c = x;
  do {
    conj.push_back(c);
    c = t.frob(c, 1);
  } while (c != x);

  std::vector<Code> poly{1};  // low degree first, big-field coefficients
  for (Code r : conj) {
    std::vector<Code> next(poly.size() + 1, 0);
    const Code mr = t.neg(r);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] = t.add(next[j + 1], poly[j]);
      next[j] = t.add(next[j], t.mul(mr, poly[j]));
    }
    poly = std::move(next);
  }
  std::vector<std::uint8_t> coeffs(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (!t.in_prime_field(poly[i]))
      throw Error(Errc::InternalInconsistency, "minimal polynomial left GF(p)");
    coeffs[i] = static_cast<std::uint8_t>(poly[i]);
  }
  return PolyGFp(t.p(), std::move(coeffs));
}

CodePolynomials code_polynomials(const CodeSpec& spec, const FieldTower& t) {
  if (t.p() != spec.p || t.m() != spec.m || t.e() != spec.e)
    throw Error(Errc::InvalidParams, "tower does not match the spec");
  const std::int64_t n = spec.n;
  CodePolynomials out;
  out.h1 = min_poly(t, t.inv(t.neg(t.pi())));
  out.h2 = min_poly(t, t.exp((n - spec.u_mod_n()) % n));
  if (out.h1.degree() != spec.m || out.h2.degree() != spec.m)
    throw Error(Errc::InternalInconsistency, "parity-check factor degree is not m");
  if (out.h1 == out.h2)
    throw Error(Errc::InternalInconsistency, "parity-check factors coincide");
  out.h = out.h1 * out.h2;
  auto [g, rem] = PolyGFp::divmod(PolyGFp::x_pow_minus_one(spec.p, n), out.h);
  if (!rem.is_zero())
    throw Error(Errc::InternalInconsistency, "parity-check polynomial does not divide x^n - 1");
  out.g = g;
  return out;
}

PolyGFp dual_generator(const PolyGFp& h, std::int64_t /*n*/) {
  return h.reciprocal_monic();
}

int codeword_entry(const CodeSpec& spec, const FieldTower& t, Code a, Code b, std::int64_t idx) {
  if (idx < 0 || idx >= spec.n) throw Error(Errc::DomainError, "coordinate index out of range");
  const std::int64_t n = spec.n;
  const std::int64_t la = t.log(t.neg(t.pi()));
  const Code x1 = t.exp(la * (idx % n) % n);
  const Code x2 = t.exp(spec.u_mod_n() * (idx % n) % n);
  return t.trace_to_prime(t.add(t.mul(a, x1), t.mul(b, x2)));
}

WeightDistribution enumerate_distribution(const CodeSpec& spec, const FieldTower& t,
                                          const QuadSpace& space, const EnumerateOptions& opt) {
  const std::int64_t pairs = spec.pair_count();
  if (pairs > opt.pair_budget)
    throw Error(Errc::BudgetExceeded,
                "p^{2m} = " + std::to_string(pairs) + " exceeds the enumeration budget of " +
                    std::to_string(opt.pair_budget));

  WeightDistribution dist;
  dist.n = spec.n;
  dist.dim = spec.dim;
  dist.p = spec.p;

  const std::int64_t order = t.order();
  const std::int64_t base = spec.pm - spec.pm / spec.p;  // p^m - p^{m-1}
  const bool regime_a = spec.regime == Regime::KeEvenEOdd;
  const bool brute = opt.brute_force_only || spec.regime == Regime::Unsupported;
  const CheckTables tabs = build_check_tables(spec, t);

  const int nthreads = threads_or_default(opt.threads, brute ? pairs * spec.n : pairs);
  std::vector<std::map<std::int64_t, std::int64_t>> partial(static_cast<std::size_t>(nthreads));

  auto work = [&](int who) {
    auto& local = partial[static_cast<std::size_t>(who)];
    for (std::int64_t ac = who; ac < order; ac += nthreads) {
      const Code a = static_cast<Code>(ac);
      const Code na = t.neg(a);
      for (std::int64_t bc = 0; bc < order; ++bc) {
        const Code b = static_cast<Code>(bc);
        std::int64_t w;
        if (brute) {
          w = weight_by_entries(t, tabs, a, b);
        } else {
          std::int64_t v;
          if (regime_a) {
            const QuadForm pos{a, b, spec.k, std::nullopt};
            const QuadForm neg{na, b, spec.k, std::nullopt};
            v = space.character_sum_over_scalars(space.classify(pos)) +
                space.character_sum_over_scalars(space.classify(neg));
          } else {
            const QuadForm form{a, b, spec.k, std::nullopt};
            v = 2 * space.character_sum_over_scalars(space.classify(form));
          }
          if (v % (2 * spec.p) != 0)
            throw Error(Errc::InternalInconsistency, "character sum not divisible by 2p");
          w = base - v / (2 * spec.p);
        }
        local[w] += 1;
      }
    }
  };

  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(work, i);
    for (auto& th : pool) th.join();
  }
  for (const auto& part : partial)
    for (const auto& [w, c] : part) dist.entries[w] += c;

  if (!brute) {
    // definition-level cross-check: everything at toy scale, a fixed-seed
    // sample beyond
    if (pairs <= 6561) {
      for (std::int64_t ac = 0; ac < order; ++ac)
        for (std::int64_t bc = 0; bc < order; ++bc) {
          const Code a = static_cast<Code>(ac), b = static_cast<Code>(bc);
          const std::int64_t ws = weight_by_entries(t, tabs, a, b);
          const std::int64_t vf =
              regime_a ? s_sum(spec, space, a, b, SumPath::Fast) : t_sum(spec, space, a, b, SumPath::Fast);
          if (ws != base - vf / (2 * spec.p))
            throw Error(Errc::OracleMismatch, "fast weight disagrees with the codeword sweep");
        }
    } else {
      std::mt19937_64 rng(opt.sample_seed);
      std::uniform_int_distribution<std::int64_t> pick(0, order - 1);
      for (int i = 0; i < opt.sample_pairs; ++i) {
        const Code a = static_cast<Code>(pick(rng));
        const Code b = static_cast<Code>(pick(rng));
        const std::int64_t ws = weight_by_entries(t, tabs, a, b);
        const std::int64_t vf =
            regime_a ? s_sum(spec, space, a, b, SumPath::Fast) : t_sum(spec, space, a, b, SumPath::Fast);
        if (ws != base - vf / (2 * spec.p))
          throw Error(Errc::OracleMismatch, "fast weight disagrees with the codeword sweep");
      }
    }
  }

  dist.check();
  return dist;
}

WeightDistribution predicted_distribution(const CodeSpec& spec) {
  if (spec.regime == Regime::Unsupported)
    throw Error(Errc::UnsupportedRegime, "no closed-form distribution for this regime");
  WeightDistribution dist;
  dist.n = spec.n;
  dist.dim = spec.dim;
  dist.p = spec.p;

  const std::int64_t pm = spec.pm;
  const std::int64_t base = pm - pm / spec.p;
  const std::int64_t half_me = ipow(spec.p, (spec.m - spec.e) / 2);  // p^{(m-e)/2}
  const std::int64_t pme = ipow(spec.p, spec.m - spec.e);            // p^{m-e}
  const std::int64_t step = ipow(spec.p, (spec.m + spec.e - 2) / 2); // p^{(m+e-2)/2}

  dist.entries[0] = 1;
  if (spec.regime == Regime::KeEvenEOdd) {
    const std::int64_t delta = (spec.p - 1) / 2 * step;
    dist.entries[base - delta] = (pme + half_me) * (pm - 1);
    dist.entries[base] = (pm - 2 * pme + 1) * (pm - 1);
    dist.entries[base + delta] = (pme - half_me) * (pm - 1);
  } else {
    const std::int64_t delta = (spec.p - 1) * step;
    dist.entries[base - delta] = (pme + half_me) * (pm - 1) / 2;
    dist.entries[base] = (pm - pme + 1) * (pm - 1);
    dist.entries[base + delta] = (pme - half_me) * (pm - 1) / 2;
  }
  dist.check();
  return dist;
}

DualCertificate dual_min_distance_certify(const CodeSpec& spec, const FieldTower& t,
                                          std::int64_t n_budget) {
  const std::int64_t n = spec.n;
  if (n > n_budget)
    throw Error(Errc::BudgetExceeded, "dual search needs n <= " + std::to_string(n_budget));

  DualCertificate cert;
  cert.n = n;
  cert.dim = n - spec.dim;
  cert.packing_bound = sphere_packing_max_d(n, cert.dim, spec.p);

  const CheckTables tabs = build_check_tables(spec, t);
  const int p = spec.p;
  const std::int64_t u = spec.u_mod_n();
  const std::int64_t g = std::gcd(u, n);

  // modular inverse of u/g modulo n/g, for solving u t = r (mod n)
  const std::int64_t nn = n / g;
  std::int64_t uinv = 0;
  {
    std::int64_t a0 = (u / g) % nn, x0 = 1, x1 = 0, m0 = nn;
    std::int64_t a1 = m0;
    while (a1 != 0) {
      const std::int64_t qd = a0 / a1;
      a0 -= qd * a1;
      std::swap(a0, a1);
      x0 -= qd * x1;
      std::swap(x0, x1);
    }
    uinv = ((x0 % nn) + nn) % nn;
  }
  // all t with u t = r (mod n), ascending
  auto solve_u = [&](std::int64_t r, std::vector<std::int64_t>& out) {
    out.clear();
    if (r % g != 0) return;
    std::int64_t t0 = static_cast<std::int64_t>(
        (static_cast<__int128>(uinv) * ((r / g) % nn)) % nn);
    for (std::int64_t j = 0; j < g; ++j) out.push_back(t0 + j * nn);
  };

  auto verify_witness = [&](const std::vector<std::int64_t>& pos, const std::vector<int>& cf) {
    Code za = 0, zb = 0;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      za = t.add(za, t.mul(t.scalar(cf[i]), tabs.apow[static_cast<std::size_t>(pos[i])]));
      zb = t.add(zb, t.mul(t.scalar(cf[i]), tabs.bpow[static_cast<std::size_t>(pos[i])]));
    }
    if (za != 0 || zb != 0)
      throw Error(Errc::InternalInconsistency, "dual witness fails the defining equations");
  };

  // weight 1: c (-pi)^t = 0 has no solution with c != 0
  for (std::int64_t t1 = 0; t1 < n; ++t1)
    if (tabs.apow[static_cast<std::size_t>(t1)] == 0 || tabs.bpow[static_cast<std::size_t>(t1)] == 0)
      throw Error(Errc::InternalInconsistency, "power table contains zero");

  // weight 2 (c1 = 1 after scaling)
  for (std::int64_t t1 = 0; t1 < n; ++t1)
    for (std::int64_t t2 = t1 + 1; t2 < n; ++t2)
      for (int c2 = 1; c2 < p; ++c2) {
        const Code c2c = t.scalar(c2);
        if (t.add(tabs.apow[static_cast<std::size_t>(t1)], t.mul(c2c, tabs.apow[static_cast<std::size_t>(t2)])) == 0 &&
            t.add(tabs.bpow[static_cast<std::size_t>(t1)], t.mul(c2c, tabs.bpow[static_cast<std::size_t>(t2)])) == 0) {
          cert.d = 2;
          cert.witness_positions = {t1, t2};
          cert.witness_coeffs = {1, c2};
          verify_witness(cert.witness_positions, cert.witness_coeffs);
          cert.optimal = cert.d == cert.packing_bound;
          return cert;
        }
      }

  // weight 3 (c1 = 1 after scaling): fix t1 < t2 and solve for the third term
  {
    std::vector<std::int64_t> cands;
    for (std::int64_t t1 = 0; t1 < n; ++t1)
      for (std::int64_t t2 = t1 + 1; t2 < n; ++t2)
        for (int c2 = 1; c2 < p; ++c2) {
          const Code c2c = t.scalar(c2);
          const Code sa = t.add(tabs.apow[static_cast<std::size_t>(t1)], t.mul(c2c, tabs.apow[static_cast<std::size_t>(t2)]));
          const Code sb = t.add(tabs.bpow[static_cast<std::size_t>(t1)], t.mul(c2c, tabs.bpow[static_cast<std::size_t>(t2)]));
          if (sa == 0 || sb == 0) continue;  // a third nonzero term cannot cancel a zero sum
          for (int c3 = 1; c3 < p; ++c3) {
            const Code target = t.mul(t.neg(sb), t.inv(t.scalar(c3)));
            solve_u(t.log(target), cands);
            for (std::int64_t t3 : cands) {
              if (t3 <= t2) continue;
              if (t.add(sa, t.mul(t.scalar(c3), tabs.apow[static_cast<std::size_t>(t3)])) == 0) {
                cert.d = 3;
                cert.witness_positions = {t1, t2, t3};
                cert.witness_coeffs = {1, c2, c3};
                verify_witness(cert.witness_positions, cert.witness_coeffs);
                cert.optimal = cert.d == cert.packing_bound;
                return cert;
              }
            }
          }
        }
  }

  // weight 4: lexicographic over (t1 < t2 < t3, coefficients), first hit
  {
    std::vector<std::int64_t> cands;
    for (std::int64_t t1 = 0; t1 < n; ++t1)
      for (std::int64_t t2 = t1 + 1; t2 < n; ++t2)
        for (std::int64_t t3 = t2 + 1; t3 < n; ++t3)
          for (int c1 = 1; c1 < p; ++c1)
            for (int c2 = 1; c2 < p; ++c2)
              for (int c3 = 1; c3 < p; ++c3) {
                const Code sa = t.add(t.add(t.mul(t.scalar(c1), tabs.apow[static_cast<std::size_t>(t1)]),
                                            t.mul(t.scalar(c2), tabs.apow[static_cast<std::size_t>(t2)])),
                                      t.mul(t.scalar(c3), tabs.apow[static_cast<std::size_t>(t3)]));
                const Code sb = t.add(t.add(t.mul(t.scalar(c1), tabs.bpow[static_cast<std::size_t>(t1)]),
                                            t.mul(t.scalar(c2), tabs.bpow[static_cast<std::size_t>(t2)])),
                                      t.mul(t.scalar(c3), tabs.bpow[static_cast<std::size_t>(t3)]));
                if (sa == 0 || sb == 0) continue;
                for (int c4 = 1; c4 < p; ++c4) {
                  const Code target = t.mul(t.neg(sb), t.inv(t.scalar(c4)));
                  solve_u(t.log(target), cands);
                  for (std::int64_t t4 : cands) {
                    if (t4 <= t3) continue;
                    if (t.add(sa, t.mul(t.scalar(c4), tabs.apow[static_cast<std::size_t>(t4)])) == 0) {
                      cert.d = 4;
                      cert.witness_positions = {t1, t2, t3, t4};
                      cert.witness_coeffs = {c1, c2, c3, c4};
                      verify_witness(cert.witness_positions, cert.witness_coeffs);
                      cert.optimal = cert.d == cert.packing_bound;
                      return cert;
                    }
                  }
                }
              }
  }

  throw Error(Errc::WitnessNotFound,
              "no dual word of weight <= 4 found; the packing bound guarantees one");
}

int sphere_packing_max_d(std::int64_t n, std::int64_t dim, int p) {
  if (n < 1 || dim < 1 || dim > n)
    throw Error(Errc::InvalidParams, "sphere packing needs 0 < dim <= n");
  const cpp_int bound = boost::multiprecision::pow(cpp_int(p), static_cast<unsigned>(n - dim));
  cpp_int volume = 1;   // sum_{i <= t} C(n,i)(p-1)^i
  cpp_int binom = 1;    // C(n, t)
  cpp_int powq = 1;     // (p-1)^t
  int best = 0;
  for (std::int64_t t = 0; t <= n; ++t) {
    if (t > 0) {
      binom = binom * (n - t + 1) / t;
      powq *= (p - 1);
      volume += binom * powq;
    }
    if (volume <= bound)
      best = static_cast<int>(2 * t + 2);
    else
      break;
  }
  return static_cast<int>(std::min<std::int64_t>(best, n - dim + 1));
}

}  // namespace threeweight
