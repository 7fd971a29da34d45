#include "butson/morphism.hpp"

#include <stdexcept>
#include <string>

#include "butson/errors.hpp"

namespace butson {

namespace {

int mod(std::int64_t a, int m) {
  auto r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::vector<int> prime_factors(int k) {
  std::vector<int> out;
  for (int q = 2; q * q <= k; ++q) {
    while (k % q == 0) {
      out.push_back(q);
      k /= q;
    }
  }
  if (k > 1) out.push_back(k);
  return out;
}

}  // namespace

bool is_prime(int p) noexcept {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

MorphismParams::MorphismParams(int k, int p) : k_(k), p_(p), t_(0) {
  if (!is_prime(p)) throw PreconditionError(Condition::kNotPrime, std::to_string(p) + " is not prime");
  if (k < 1 || k % (static_cast<std::int64_t>(p) * p) != 0) {
    throw PreconditionError(
        Condition::kPSquare,
        "p=" + std::to_string(p) + ", k=" + std::to_string(k) +
            "; zeta -> zeta^p permutes the primitive (k/p)-th roots of unity, so x^p - zeta_{k/p} "
            "has a linear factor and no order-reducing embedding exists");
  }
  t_ = k / p;
}

MonomialImage psi_scalar(std::int64_t a, const MorphismParams& params) {
  const int r = mod(a, params.source_order());
  const int p = params.prime();
  return MonomialImage{(r / p) % params.target_order(), r % p};
}

MonomialImage compose(const MonomialImage& x, const MonomialImage& y, const MorphismParams& params) {
  const int p = params.prime();
  const int t = params.target_order();
  const int shift = x.v + y.v;
  const int carry = shift >= p ? 1 : 0;
  return MonomialImage{(x.u + y.u + carry) % t, shift - carry * p};
}

MonomialImage adjoint(const MonomialImage& x, const MorphismParams& params) {
  const int t = params.target_order();
  if (x.v == 0) return MonomialImage{mod(-x.u, t), 0};
  return MonomialImage{mod(-x.u - 1, t), params.prime() - x.v};
}

PsiImage::PsiImage(const MorphismParams& params, int n, std::vector<MonomialImage> blocks)
    : params_(params), n_(n), blocks_(std::move(blocks)) {
  if (blocks_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("block count does not match order");
  }
}

PsiImage psi_matrix(const BhMatrix& h, const MorphismParams& params) {
  if (h.root_order() != params.source_order()) {
    throw PreconditionError(Condition::kRootOrder, "matrix has k=" + std::to_string(h.root_order()) +
                                                       ", morphism expects k=" +
                                                       std::to_string(params.source_order()));
  }
  std::vector<MonomialImage> blocks;
  blocks.reserve(h.exponents().size());
  for (auto e : h.exponents()) blocks.push_back(psi_scalar(e, params));
  return PsiImage(params, h.order(), std::move(blocks));
}

BhMatrix expand(const BhMatrix& h, const BhMatrix& c, const MorphismParams& params) {
  const int p = params.prime();
  const int t = params.target_order();
  if (c.order() != p) {
    throw PreconditionError(Condition::kWitnessShape,
                            "C has order " + std::to_string(c.order()) + ", expected p=" + std::to_string(p));
  }
  if (p % c.root_order() != 0) {
    throw PreconditionError(Condition::kWitnessRoots, "C has root order " + std::to_string(c.root_order()) +
                                                          ", which does not divide p=" + std::to_string(p));
  }
  if (!verify(c)) throw PreconditionError(Condition::kWitnessInvalid, "C is not in BH(p, p)");
  const PsiImage image = psi_matrix(h, params);

  const int n = h.order();
  if (static_cast<std::int64_t>(n) * p > kMaxMatrixOrder) {
    throw UnsupportedOrder("expanded order " + std::to_string(static_cast<std::int64_t>(n) * p) + " exceeds " +
                           std::to_string(kMaxMatrixOrder));
  }
  const int np = n * p;
  // zeta_p = zeta_t^{t/p}; this needs p | t, guaranteed by p^2 | k.
  const int scale = t / c.root_order();
  std::vector<std::int32_t> exps(static_cast<std::size_t>(np) * static_cast<std::size_t>(np));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto [u, v] = image.block(i, j);
      for (int r = 0; r < p; ++r) {
        // Row r of M^v picks out row c of C.
        const int src = mod(r - v, p);
        const int base = u + (src + v >= p ? 1 : 0);
        const auto crow = c.row(src);
        auto* out = exps.data() + static_cast<std::size_t>(i * p + r) * np + static_cast<std::size_t>(j) * p;
        for (int s = 0; s < p; ++s) out[s] = (base + crow[s] * scale) % t;
      }
    }
  }
  return BhMatrix(np, t, std::move(exps));
}

BhMatrix reduce_once(const BhMatrix& h, int p, const std::optional<BhMatrix>& c, ReduceOptions options) {
  const MorphismParams params(h.root_order(), p);
  BhMatrix out = c ? expand(h, *c, params) : expand(h, fourier(p), params);
  if (options.post_check && !verify(out) && verify(h)) {
    throw std::logic_error("reduce_once produced an invalid matrix from a valid input");
  }
  return out;
}

ReductionPlan plan_reduction(int k, int m) {
  if (k < 1 || m < 1 || k % m != 0) {
    throw PreconditionError(Condition::kFactorDivides,
                            "m=" + std::to_string(m) + " does not divide k=" + std::to_string(k));
  }
  const int t = k / m;
  int last = 0;
  for (int q : prime_factors(k)) {
    if (q == last) continue;
    last = q;
    if (t % q != 0) {
      throw PreconditionError(Condition::kPrimeCoverage, "prime " + std::to_string(q) + " of k=" +
                                                             std::to_string(k) + " does not divide t=" +
                                                             std::to_string(t));
    }
  }
  return ReductionPlan{k, m, t, prime_factors(m)};
}

BhMatrix reduce_full(const BhMatrix& h, int m, ReduceOptions options) {
  const ReductionPlan plan = plan_reduction(h.root_order(), m);
  BhMatrix current = h;
  for (int p : plan.primes) current = reduce_once(current, p, std::nullopt, options);
  return current;
}

std::vector<ReachableTarget> reachable_targets(int n, int k) {
  std::vector<ReachableTarget> out;
  for (int m = 2; m <= k; ++m) {
    if (k % m != 0) continue;
    try {
      const auto plan = plan_reduction(k, m);
      out.push_back(ReachableTarget{m, n * m, plan.target_order});
    } catch (const PreconditionError&) {
    }
  }
  return out;
}

const char* condition_name(Condition c) noexcept {
  switch (c) {
    case Condition::kNotPrime: return "p is not prime";
    case Condition::kPSquare: return "p^2 does not divide k";
    case Condition::kRootOrder: return "root order mismatch";
    case Condition::kWitnessShape: return "C is not p x p";
    case Condition::kWitnessRoots: return "C entries are not p-th roots of unity";
    case Condition::kWitnessInvalid: return "C is not Butson-Hadamard";
    case Condition::kFactorDivides: return "m does not divide k";
    case Condition::kPrimeCoverage: return "prime of k does not divide t";
  }
  return "unknown condition";
}

}  // namespace butson
