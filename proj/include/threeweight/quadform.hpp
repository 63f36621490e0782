#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "threeweight/codespec.hpp"
#include "threeweight/cycint.hpp"
#include "threeweight/field.hpp"

namespace threeweight {

/// The quadratic form Q_{a,b}(x) = Tr_{q^s/q}(a x^2 + b x^{1+p^k}) on
/// GF(q^s), viewed over GF(q). The polarized bilinear form is GF(q)-linear
/// because e | k. The cached rank is a per-object memo; a single form object
/// is not meant to be shared across threads.
struct QuadForm {
  Code a = 0;
  Code b = 0;
  int k = 0;
  mutable std::optional<int> cached_rank;
};

/// Dense symmetric s x s matrix over GF(q), entries as big-field codes.
struct MatGFq {
  explicit MatGFq(int n) : n(n), v(static_cast<std::size_t>(n) * n, 0) {}
  Code& at(int i, int j) { return v[static_cast<std::size_t>(i) * n + j]; }
  Code at(int i, int j) const { return v[static_cast<std::size_t>(i) * n + j]; }
  int n;
  std::vector<Code> v;
};

struct DiagResult {
  std::vector<Code> diag;  // the nonzero diagonal entries d_1..d_r
  int rank = 0;
};

/// Congruence invariants of a form: its rank and eta_1(d_1 ... d_r)
/// (+1 for rank zero, where the product is empty).
struct FormClass {
  int rank = 0;
  int eta = 1;
};

/// The GF(q)-vector-space view of GF(q^s): a fixed polynomial basis
/// {1, beta, ..., beta^{s-1}} for a deterministic root beta of the
/// lexicographically smallest monic degree-s irreducible over GF(q),
/// dual-basis coordinates, and the base quadratic Gauss sum of GF(q).
/// Immutable after construction and safe to share across threads.
class QuadSpace {
 public:
  explicit QuadSpace(const FieldTower& tower);

  const FieldTower& tower() const { return *tower_; }
  Code basis(int i) const { return basis_[static_cast<std::size_t>(i)]; }
  /// Coefficients (low degree first, monic) of the basis minimal polynomial,
  /// as subfield element codes.
  const std::vector<Code>& basis_min_poly() const { return min_poly_; }

  /// GF(q)-coordinates of x in the fixed basis.
  std::vector<Code> coords(Code x) const;

  /// Q_{a,b}(x), an element of GF(q).
  Code eval(const QuadForm& f, Code x) const;

  /// Rank via the radical: s minus the GF(q)-dimension of the kernel of
  /// L(x) = b^{p^k} x^{p^{2k}} + 2 a^{p^k} x^{p^k} + b x.
  int radical_rank(const QuadForm& f) const;

  /// Gram-style matrix A with Q(sum x_i beta_i) = X A X^T.
  MatGFq symmetric_matrix(const QuadForm& f) const;

  /// Symmetric congruence diagonalization (odd characteristic).
  DiagResult diagonalize(MatGFq a) const;

  /// Rank and eta_1(Delta) via symmetric_matrix + diagonalize.
  FormClass classify(const QuadForm& f) const;

  /// sum_x zeta_p^{Tr_{q/p}(Q_{a,b}(x))}, computed both by direct counting
  /// and by the diagonal closed form eta_1(Delta) G_q^r q^{s-r}; throws
  /// OracleMismatch if the two routes disagree.
  CycInt gauss_sum(const QuadForm& f) const;

  /// The base quadratic Gauss sum G_q = sum_{z in GF(q)} zeta_p^{Tr_{q/p}(z^2)}.
  const CycInt& gauss_base() const { return gq_; }
  int eta1_minus_one() const { return eta_m1_; }

  /// The per-form contribution to the S/T fast paths:
  /// (p-1) eta_1(Delta) eta_1(-1)^{r/2} q^{s-r/2} for even rank r (any
  /// constant multiple of the form contributes the same), zero for odd rank.
  /// Odd-rank contributions cancel out of S and T either by the e-odd
  /// vanishing of sum_y eta_1(y) or, for e even, by pairing with the
  /// -lambda twin; both hypotheses are forced by the supported regimes.
  std::int64_t character_sum_over_scalars(const FormClass& cls) const;

 private:
  void pick_basis();
  void build_coords();
  void build_gauss_base();

  const FieldTower* tower_;
  std::vector<Code> basis_;
  std::vector<Code> min_poly_;
  std::vector<Code> gram_inv_;  // s x s, row-major
  CycInt gq_;
  int eta_m1_ = 1;
};

enum class SumPath { Direct, Fast, Checked };

/// S(a,b): the regime-A double character sum. Checked mode runs both the
/// direct O(p^m) count and the rank/eta fast path and insists they agree.
std::int64_t s_sum(const CodeSpec& spec, const QuadSpace& space, Code a, Code b,
                   SumPath path = SumPath::Checked);

/// T(a,b): the regime-B analogue.
std::int64_t t_sum(const CodeSpec& spec, const QuadSpace& space, Code a, Code b,
                   SumPath path = SumPath::Checked);

struct ValueDistribution {
  std::map<std::int64_t, std::int64_t> counts;
  std::int64_t first_moment = 0;
  std::int64_t second_moment = 0;
};

/// Exact value distribution of S (regime A) or T (regime B) over all
/// p^{2m} pairs, via the fast rank path; includes the first two power
/// moments. The sweep is split into disjoint chunks merged by commutative
/// count addition, so the result is schedule-independent.
ValueDistribution value_distribution(const CodeSpec& spec, const QuadSpace& space,
                                     int threads = 0);

/// Exact cardinalities of the four solution sets entering the second-moment
/// identity (S_1..S_4 in regime A, T_1..T_4 in regime B), counted over
/// GF(p)* x GF(p)* x GF(q^s) x GF(q^s) by solving for x_2.
std::array<std::int64_t, 4> intersection_set_counts(const CodeSpec& spec,
                                                    const QuadSpace& space);

}  // namespace threeweight
