#pragma once

// Order-reducing morphisms of Butson classes.
//
// For a prime p with p^2 | k and t = k / p, let M be the p x p monomial
// matrix with ones on the subdiagonal and zeta_t in the top-right corner.
// Its minimal polynomial is x^p - zeta_t, so zeta_k^a -> M^a embeds
// Z[zeta_k] into p x p matrices over Z[zeta_t]. Applying the embedding
// entrywise to H in BH(n, k) and multiplying by I_n (x) C for any C in
// BH(p, p) yields a member of BH(np, t).
//
// When p divides k but p^2 does not, zeta -> zeta^p permutes the primitive
// t-th roots, x^p - zeta_t acquires a linear factor and the embedding is no
// longer injective; such parameters are rejected.

#include <optional>
#include <vector>

#include "butson/bh_matrix.hpp"

namespace butson {

bool is_prime(int p) noexcept;

/// Validated (k, p, t = k / p) with p prime and p^2 | k.
class MorphismParams {
 public:
  /// Throws PreconditionError (kNotPrime or kPSquare).
  MorphismParams(int k, int p);

  int source_order() const noexcept { return k_; }
  int prime() const noexcept { return p_; }
  int target_order() const noexcept { return t_; }

  friend bool operator==(const MorphismParams&, const MorphismParams&) = default;

 private:
  int k_;
  int p_;
  int t_;
};

/// zeta_t^u * M^v with 0 <= u < t and 0 <= v < p. Column c of M^v has its
/// single nonzero entry in row (c + v) mod p, equal to zeta_t^{[c + v >= p]}.
struct MonomialImage {
  int u;
  int v;

  friend bool operator==(const MonomialImage&, const MonomialImage&) = default;
};

/// Image of zeta_k^a: u = floor(a / p), v = a mod p (a reduced mod k first).
MonomialImage psi_scalar(std::int64_t a, const MorphismParams& params);

/// Product in the monomial group, using M^p = zeta_t I.
MonomialImage compose(const MonomialImage& x, const MonomialImage& y, const MorphismParams& params);

/// Conjugate transpose, which is psi_scalar(-a) when x = psi_scalar(a).
MonomialImage adjoint(const MonomialImage& x, const MorphismParams& params);

/// Entrywise image of a matrix: an n x n grid of p x p monomial blocks.
class PsiImage {
 public:
  PsiImage(const MorphismParams& params, int n, std::vector<MonomialImage> blocks);

  const MorphismParams& params() const noexcept { return params_; }
  int order() const noexcept { return n_; }
  const MonomialImage& block(int i, int j) const noexcept {
    return blocks_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }

 private:
  MorphismParams params_;
  int n_;
  std::vector<MonomialImage> blocks_;
};

/// Throws PreconditionError(kRootOrder) when H.k differs from params.k.
PsiImage psi_matrix(const BhMatrix& h, const MorphismParams& params);

/// H^psi (I_n (x) C) written directly in exponents of zeta_t. C must be a
/// verified p x p matrix whose entries are p-th roots of unity.
BhMatrix expand(const BhMatrix& h, const BhMatrix& c, const MorphismParams& params);

struct ReduceOptions {
  /// Re-verify the output; throws std::logic_error if a valid input produced
  /// an invalid output.
  bool post_check = false;
};

/// BH(n, k) -> BH(np, k/p). C defaults to the Fourier matrix of order p.
BhMatrix reduce_once(const BhMatrix& h, int p, const std::optional<BhMatrix>& c = std::nullopt,
                     ReduceOptions options = {});

/// Primes (ascending, with multiplicity) that take root order k to k / m.
struct ReductionPlan {
  int source_order;
  int factor;
  int target_order;
  std::vector<int> primes;
};

/// Requires m | k and every prime divisor of k to divide t = k / m.
ReductionPlan plan_reduction(int k, int m);

/// Applies reduce_once along plan_reduction(H.k, m): BH(n, k) -> BH(mn, k/m).
BhMatrix reduce_full(const BhMatrix& h, int m, ReduceOptions options = {});

struct ReachableTarget {
  int factor;
  int order;
  int root_order;
};

/// Every (m n, k / m) with m > 1 for which plan_reduction(k, m) succeeds.
std::vector<ReachableTarget> reachable_targets(int n, int k);

}  // namespace butson
