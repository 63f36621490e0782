#include "threeweight/quadform.hpp"

#include <algorithm>
#include <thread>

#include "threeweight/errors.hpp"

namespace threeweight {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// subfield element order used for lexicographic polynomial comparison:
// 0 first, then gamma^0, gamma^1, ...
std::int64_t subfield_index(const FieldTower& t, Code c) {
  if (c == 0) return 0;
  return 1 + t.log(c) / (t.group_order() / (t.q() - 1));
}

int threads_or_default(int threads, std::int64_t work) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (work < 4096) return 1;
  return std::min<std::int64_t>(threads, 8);
}

}  // namespace

QuadSpace::QuadSpace(const FieldTower& tower) : tower_(&tower), gq_(tower.p()) {
  pick_basis();
  build_coords();
  build_gauss_base();
  eta_m1_ = tower_->eta1(tower_->neg(1));
}

void QuadSpace::pick_basis() {
  const FieldTower& t = *tower_;
  const int s = t.s();
  const std::int64_t order = t.order();

  // proper divisors of s bound the degree of elements to skip
  std::vector<int> proper;
  for (int d = 1; d < s; ++d)
    if (s % d == 0) proper.push_back(d);

  std::vector<Code> best;        // coefficients of the current best min-poly
  std::vector<std::int64_t> best_key;

  std::vector<Code> conj(static_cast<std::size_t>(s));
  for (std::int64_t xc = 1; xc < order; ++xc) {
    Code x = static_cast<Code>(xc);
    bool degenerate = false;
    for (int d : proper)
      if (t.frob(x, d * t.e()) == x) { degenerate = true; break; }
    if (degenerate) continue;

    // min-poly over GF(q): product of (X - x^{q^i}), coefficients in GF(q)
    conj[0] = x;
    for (int i = 1; i < s; ++i) conj[static_cast<std::size_t>(i)] = t.frob(conj[static_cast<std::size_t>(i - 1)], t.e());
    std::vector<Code> poly{1};  // low degree first throughout
    for (int i = 0; i < s; ++i) {
      std::vector<Code> next(poly.size() + 1, 0);
      const Code mr = t.neg(conj[static_cast<std::size_t>(i)]);
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j + 1] = t.add(next[j + 1], poly[j]);
        next[j] = t.add(next[j], t.mul(mr, poly[j]));
      }
      poly = std::move(next);
    }
    for (std::size_t j = 0; j + 1 < poly.size(); ++j)
      if (!t.in_subfield(poly[j]))
        throw Error(Errc::InternalInconsistency, "minimal polynomial left GF(q)");

    std::vector<std::int64_t> key(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) key[i] = subfield_index(t, poly[i]);
    if (best.empty() || key < best_key) {
      best = poly;
      best_key = key;
    }
  }
  if (best.empty())
    throw Error(Errc::InternalInconsistency, "no degree-s element found");
  min_poly_ = best;

  // beta = smallest-code root of the chosen polynomial
  Code beta = 0;
  for (std::int64_t xc = 1; xc < order; ++xc) {
    Code x = static_cast<Code>(xc);
    Code acc = 0;
    for (std::size_t i = min_poly_.size(); i-- > 0;)
      acc = t.add(t.mul(acc, x), min_poly_[i]);
    if (acc == 0) { beta = x; break; }
  }
  if (beta == 0)
    throw Error(Errc::InternalInconsistency, "basis polynomial has no root");

  basis_.resize(static_cast<std::size_t>(s));
  basis_[0] = 1;
  for (int i = 1; i < s; ++i) basis_[static_cast<std::size_t>(i)] = t.mul(basis_[static_cast<std::size_t>(i - 1)], beta);
}

void QuadSpace::build_coords() {
  const FieldTower& t = *tower_;
  const int s = t.s();
  // invert the Gram matrix Tr_{q^s/q}(beta_i beta_j) over GF(q)
  std::vector<Code> aug(static_cast<std::size_t>(s) * 2 * s, 0);
  auto at = [&](int i, int j) -> Code& { return aug[static_cast<std::size_t>(i) * 2 * s + j]; };
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j)
      at(i, j) = t.trace_to_subfield(t.mul(basis_[static_cast<std::size_t>(i)], basis_[static_cast<std::size_t>(j)]));
    at(i, s + i) = 1;
  }
  for (int col = 0; col < s; ++col) {
    int piv = -1;
    for (int i = col; i < s; ++i)
      if (at(i, col) != 0) { piv = i; break; }
    if (piv < 0) throw Error(Errc::InternalInconsistency, "trace form is degenerate");
    if (piv != col)
      for (int j = 0; j < 2 * s; ++j) std::swap(at(piv, j), at(col, j));
    const Code inv = t.inv(at(col, col));
    for (int j = 0; j < 2 * s; ++j) at(col, j) = t.mul(at(col, j), inv);
    for (int i = 0; i < s; ++i) {
      if (i == col || at(i, col) == 0) continue;
      const Code f = at(i, col);
      for (int j = 0; j < 2 * s; ++j)
        at(i, j) = t.sub(at(i, j), t.mul(f, at(col, j)));
    }
  }
  gram_inv_.assign(static_cast<std::size_t>(s) * s, 0);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      gram_inv_[static_cast<std::size_t>(i) * s + j] = at(i, s + j);

  // spot-check: coords really invert the basis expansion
  for (int i = 0; i < s; ++i) {
    auto c = coords(basis_[static_cast<std::size_t>(i)]);
    for (int j = 0; j < s; ++j)
      if (c[static_cast<std::size_t>(j)] != (i == j ? 1u : 0u))
        throw Error(Errc::InternalInconsistency, "dual-basis coordinates are wrong");
  }
}

void QuadSpace::build_gauss_base() {
  const FieldTower& t = *tower_;
  std::vector<std::int64_t> bins(static_cast<std::size_t>(t.p()), 0);
  bins[0] += 1;  // z = 0
  const std::int64_t step = t.group_order() / (t.q() - 1);
  for (std::int64_t j = 0; j < t.q() - 1; ++j) {
    const Code z = t.exp(j * step);
    bins[static_cast<std::size_t>(t.trace_q_to_prime(t.mul(z, z)))] += 1;
  }
  gq_ = CycInt::from_counts(bins);
}

std::vector<Code> QuadSpace::coords(Code x) const {
  const FieldTower& t = *tower_;
  const int s = t.s();
  std::vector<Code> tr(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) tr[static_cast<std::size_t>(j)] = t.trace_to_subfield(t.mul(x, basis_[static_cast<std::size_t>(j)]));
  std::vector<Code> out(static_cast<std::size_t>(s), 0);
  for (int i = 0; i < s; ++i) {
    Code acc = 0;
    for (int j = 0; j < s; ++j)
      acc = t.add(acc, t.mul(gram_inv_[static_cast<std::size_t>(i) * s + j], tr[static_cast<std::size_t>(j)]));
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

Code QuadSpace::eval(const QuadForm& f, Code x) const {
  const FieldTower& t = *tower_;
  const Code x2 = t.mul(x, x);
  const Code xk1 = t.mul(x, t.frob(x, f.k));
  return t.trace_to_subfield(t.add(t.mul(f.a, x2), t.mul(f.b, xk1)));
}

int QuadSpace::radical_rank(const QuadForm& f) const {
  if (f.cached_rank) return *f.cached_rank;
  const FieldTower& t = *tower_;
  const int s = t.s();
  const Code bk = t.frob(f.b, f.k);
  const Code ak2 = t.mul(t.scalar(2), t.frob(f.a, f.k));

  // columns of the linearized kernel map in GF(q)-coordinates
  std::vector<std::vector<Code>> col(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) {
    const Code x = basis_[static_cast<std::size_t>(j)];
    const Code lx = t.add(t.add(t.mul(bk, t.frob(x, 2 * f.k)), t.mul(ak2, t.frob(x, f.k))), t.mul(f.b, x));
    col[static_cast<std::size_t>(j)] = coords(lx);
  }
  // Gaussian elimination over GF(q)
  std::vector<std::vector<Code>> mat(static_cast<std::size_t>(s), std::vector<Code>(static_cast<std::size_t>(s)));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  int rank = 0;
  int row = 0;
  for (int colix = 0; colix < s && row < s; ++colix) {
    int piv = -1;
    for (int i = row; i < s; ++i)
      if (mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(colix)] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(mat[static_cast<std::size_t>(piv)], mat[static_cast<std::size_t>(row)]);
    const Code inv = t.inv(mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(colix)]);
    for (int i = row + 1; i < s; ++i) {
      const Code fct = t.mul(mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(colix)], inv);
      if (fct == 0) continue;
      for (int j = colix; j < s; ++j)
        mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            t.sub(mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], t.mul(fct, mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)]));
    }
    ++row;
    ++rank;
  }
  f.cached_rank = rank;
  return rank;
}

MatGFq QuadSpace::symmetric_matrix(const QuadForm& f) const {
  const FieldTower& t = *tower_;
  const int s = t.s();
  MatGFq a(s);
  const Code inv2 = t.scalar((t.p() + 1) / 2);  // 1/2 in GF(p)
  for (int i = 0; i < s; ++i) a.at(i, i) = eval(f, basis_[static_cast<std::size_t>(i)]);
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      const Code qij = eval(f, t.add(basis_[static_cast<std::size_t>(i)], basis_[static_cast<std::size_t>(j)]));
      const Code off = t.mul(t.sub(qij, t.add(a.at(i, i), a.at(j, j))), inv2);
      a.at(i, j) = off;
      a.at(j, i) = off;
    }
  return a;
}

DiagResult QuadSpace::diagonalize(MatGFq a) const {
  const FieldTower& t = *tower_;
  const int s = a.n;
  DiagResult out;
  int start = 0;
  while (start < s) {
    int piv = -1;
    for (int i = start; i < s; ++i)
      if (a.at(i, i) != 0) { piv = i; break; }
    if (piv < 0) {
      // repair: pull a nonzero off-diagonal entry onto the diagonal by a
      // simultaneous row and column addition
      bool found = false;
      for (int i = start; i < s && !found; ++i)
        for (int j = i + 1; j < s && !found; ++j)
          if (a.at(i, j) != 0) {
            for (int c = start; c < s; ++c) a.at(i, c) = t.add(a.at(i, c), a.at(j, c));
            for (int r = start; r < s; ++r) a.at(r, i) = t.add(a.at(r, i), a.at(r, j));
            found = true;
          }
      if (!found) break;  // remaining block is zero
      continue;
    }
    if (piv != start) {
      for (int c = 0; c < s; ++c) std::swap(a.at(piv, c), a.at(start, c));
      for (int r = 0; r < s; ++r) std::swap(a.at(r, piv), a.at(r, start));
    }
    const Code d = a.at(start, start);
    out.diag.push_back(d);
    const Code dinv = t.inv(d);
    for (int i = start + 1; i < s; ++i) {
      const Code fct = t.mul(a.at(i, start), dinv);
      if (fct == 0) continue;
      for (int c = start; c < s; ++c) a.at(i, c) = t.sub(a.at(i, c), t.mul(fct, a.at(start, c)));
      for (int r = start; r < s; ++r) a.at(r, i) = t.sub(a.at(r, i), t.mul(fct, a.at(r, start)));
    }
    ++start;
  }
  out.rank = static_cast<int>(out.diag.size());
  return out;
}

FormClass QuadSpace::classify(const QuadForm& f) const {
  const DiagResult d = diagonalize(symmetric_matrix(f));
  FormClass cls;
  cls.rank = d.rank;
  Code prod = 1;
  for (Code di : d.diag) prod = tower_->mul(prod, di);
  cls.eta = d.rank == 0 ? 1 : tower_->eta1(prod);
  return cls;
}

CycInt QuadSpace::gauss_sum(const QuadForm& f) const {
  const FieldTower& t = *tower_;
  // direct counting over GF(q^s)
  std::vector<std::int64_t> bins(static_cast<std::size_t>(t.p()), 0);
  const std::int64_t order = t.order();
  for (std::int64_t xc = 0; xc < order; ++xc) {
    const Code x = static_cast<Code>(xc);
    const Code inner = t.add(t.mul(f.a, t.mul(x, x)), t.mul(f.b, t.mul(x, t.frob(x, f.k))));
    bins[static_cast<std::size_t>(t.trace_to_prime(inner))] += 1;
  }
  const CycInt direct = CycInt::from_counts(std::move(bins));

  // closed form through the diagonalization: eta_1(Delta) * G_q^r * q^{s-r}
  const FormClass cls = classify(f);
  CycInt closed = CycInt::integer(t.p(), ipow(t.q(), t.s() - cls.rank));
  for (int i = 0; i < cls.rank; ++i) closed = closed * gq_;
  if (cls.eta < 0) closed = closed * std::int64_t{-1};

  if (!(direct == closed))
    throw Error(Errc::OracleMismatch, "gauss sum: direct count and closed form disagree");
  return direct;
}

std::int64_t QuadSpace::character_sum_over_scalars(const FormClass& cls) const {
  if (cls.rank % 2 == 1) return 0;
  const FieldTower& t = *tower_;
  std::int64_t v = (t.p() - 1) * ipow(t.q(), t.s() - cls.rank / 2);
  if (cls.eta < 0) v = -v;
  if (eta_m1_ < 0 && (cls.rank / 2) % 2 == 1) v = -v;
  return v;
}

namespace {

// direct O(p^m) evaluation shared by s_sum and t_sum: bins the prime traces
// of the two summand families over all x and every y in GF(p)*.
std::int64_t direct_double_sum(const CodeSpec& spec, const FieldTower& t, Code a, Code b,
                               bool negate_second_b) {
  const int p = spec.p;
  std::vector<std::int64_t> bins(static_cast<std::size_t>(p), 0);
  const Code lam = t.lambda();
  const Code na = t.neg(a);
  const Code nb = negate_second_b ? t.neg(b) : b;
  const int kk = spec.k % spec.m;
  const std::int64_t order = t.order();
  for (std::int64_t xc = 0; xc < order; ++xc) {
    const Code x = static_cast<Code>(xc);
    const Code x2 = t.mul(x, x);
    const Code xk1 = t.mul(x, t.frob(x, kk));
    const int v1 = t.trace_to_prime(t.add(t.mul(a, x2), t.mul(b, xk1)));
    const int v2 = t.trace_to_prime(t.mul(lam, t.add(t.mul(na, x2), t.mul(nb, xk1))));
    for (int y = 1; y < p; ++y) {
      bins[static_cast<std::size_t>(v1 * y % p)] += 1;
      bins[static_cast<std::size_t>(v2 * y % p)] += 1;
    }
  }
  return CycInt::from_counts(std::move(bins)).as_integer();
}

}  // namespace

std::int64_t s_sum(const CodeSpec& spec, const QuadSpace& space, Code a, Code b, SumPath path) {
  if (spec.regime != Regime::KeEvenEOdd)
    throw Error(Errc::RegimeError, "S(a,b) is defined for k even with e odd");
  const FieldTower& t = space.tower();
  std::int64_t fast = 0, direct = 0;
  if (path != SumPath::Direct) {
    const QuadForm pos{a, b, spec.k, std::nullopt};
    const QuadForm neg{t.neg(a), b, spec.k, std::nullopt};
    fast = space.character_sum_over_scalars(space.classify(pos)) +
           space.character_sum_over_scalars(space.classify(neg));
    if (path == SumPath::Fast) return fast;
  }
  direct = direct_double_sum(spec, t, a, b, /*negate_second_b=*/false);
  if (path == SumPath::Checked && direct != fast)
    throw Error(Errc::OracleMismatch, "S(a,b): fast path disagrees with direct counting");
  return direct;
}

std::int64_t t_sum(const CodeSpec& spec, const QuadSpace& space, Code a, Code b, SumPath path) {
  if (spec.regime != Regime::KOverEOdd)
    throw Error(Errc::RegimeError, "T(a,b) is defined for odd k/e");
  const FieldTower& t = space.tower();
  std::int64_t fast = 0, direct = 0;
  if (path != SumPath::Direct) {
    const QuadForm form{a, b, spec.k, std::nullopt};
    fast = 2 * space.character_sum_over_scalars(space.classify(form));
    if (path == SumPath::Fast) return fast;
  }
  direct = direct_double_sum(spec, t, a, b, /*negate_second_b=*/true);
  if (path == SumPath::Checked && direct != fast)
    throw Error(Errc::OracleMismatch, "T(a,b): fast path disagrees with direct counting");
  return direct;
}

ValueDistribution value_distribution(const CodeSpec& spec, const QuadSpace& space, int threads) {
  if (spec.regime == Regime::Unsupported)
    throw Error(Errc::RegimeError, "value distribution needs a supported regime");
  const FieldTower& t = space.tower();
  const std::int64_t order = t.order();
  const bool regime_a = spec.regime == Regime::KeEvenEOdd;
  const int nthreads = threads_or_default(threads, order * order);

  std::vector<ValueDistribution> partial(static_cast<std::size_t>(nthreads));
  auto work = [&](int who) {
    ValueDistribution& local = partial[static_cast<std::size_t>(who)];
    for (std::int64_t ac = who; ac < order; ac += nthreads) {
      const Code a = static_cast<Code>(ac);
      const Code na = t.neg(a);
      for (std::int64_t bc = 0; bc < order; ++bc) {
        const Code b = static_cast<Code>(bc);
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
        local.counts[v] += 1;
        local.first_moment += v;
        local.second_moment += v * v;
      }
    }
  };

  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(work, i);
    for (auto& th : pool) th.join();
  }

  ValueDistribution out;
  for (const auto& part : partial) {
    for (const auto& [v, c] : part.counts) out.counts[v] += c;
    out.first_moment += part.first_moment;
    out.second_moment += part.second_moment;
  }
  return out;
}

std::array<std::int64_t, 4> intersection_set_counts(const CodeSpec& spec, const QuadSpace& space) {
  if (spec.regime == Regime::Unsupported)
    throw Error(Errc::RegimeError, "intersection sets need a supported regime");
  const FieldTower& t = space.tower();
  const Code lam = t.lambda();
  const Code nlam = t.neg(lam);
  const Code one = 1;
  const Code none = t.neg(one);

  // per-set coefficients (alpha1, alpha2, beta1, beta2) of
  //   alpha1 y1 x1^2 + alpha2 y2 x2^2 = 0
  //   beta1 y1 x1^{p^k+1} + beta2 y2 x2^{p^k+1} = 0
  std::array<std::array<Code, 4>, 4> coef;
  if (spec.regime == Regime::KeEvenEOdd) {
    coef = {{{one, none, one, none},
             {one, lam, one, nlam},
             {nlam, none, lam, none},
             {nlam, lam, lam, nlam}}};
  } else {
    coef = {{{one, none, one, none},
             {one, lam, one, lam},
             {nlam, none, nlam, none},
             {nlam, lam, nlam, lam}}};
  }

  const std::int64_t order = t.order();
  const std::int64_t n = t.group_order();
  const std::int64_t uk1 = (spec.u_mod_n() * 2) % n;  // (p^k + 1) mod n
  const int p = spec.p;

  std::array<std::int64_t, 4> out{};
  for (int setix = 0; setix < 4; ++setix) {
    const auto [a1, a2, b1, b2] = coef[static_cast<std::size_t>(setix)];
    // (x1, x2) = (0, 0) satisfies both equations for every (y1, y2)
    std::int64_t count = static_cast<std::int64_t>(p - 1) * (p - 1);
    for (int y1 = 1; y1 < p; ++y1) {
      for (int y2 = 1; y2 < p; ++y2) {
        const Code c1num = t.neg(t.mul(a1, t.scalar(y1)));
        const Code c1 = t.mul(c1num, t.inv(t.mul(a2, t.scalar(y2))));
        const Code c2num = t.neg(t.mul(b1, t.scalar(y1)));
        const Code c2 = t.mul(c2num, t.inv(t.mul(b2, t.scalar(y2))));
        for (std::int64_t x1c = 1; x1c < order; ++x1c) {
          const Code x1 = static_cast<Code>(x1c);
          const std::int64_t lx = t.log(x1);
          // x2^2 = c1 * x1^2 has solutions iff the log is even
          const Code rhs1 = t.mul(c1, t.exp(2 * lx));
          const std::int64_t l1 = t.log(rhs1);
          if (l1 % 2 != 0) continue;
          // both square roots share the same (p^k+1)-th power
          const std::int64_t lroot = l1 / 2;
          const Code lhs2 = t.exp(lroot * uk1 % n);
          const Code rhs2 = t.mul(c2, t.exp(lx * uk1 % n));
          if (lhs2 == rhs2) count += 2;
        }
      }
    }
    out[static_cast<std::size_t>(setix)] = count;
  }
  return out;
}

}  // namespace threeweight
