#include "butson/bh_matrix.hpp"

#include <numeric>
#include <string>

#include "butson/errors.hpp"

namespace butson {

namespace {

void check_shape(int n, int k, std::size_t entries) {
  if (n < 1 || n > kMaxMatrixOrder) {
    throw UnsupportedOrder("matrix order " + std::to_string(n) + " outside [1, " +
                           std::to_string(kMaxMatrixOrder) + "]");
  }
  if (k < 1 || k > kMaxRootOrder) {
    throw UnsupportedOrder("root order " + std::to_string(k) + " outside [1, " +
                           std::to_string(kMaxRootOrder) + "]");
  }
  if (entries != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("expected " + std::to_string(n) + "x" + std::to_string(n) +
                                " exponents, got " + std::to_string(entries));
  }
}

}  // namespace

BhMatrix::BhMatrix(int n, int k, std::span<const std::int64_t> exps) : n_(n), k_(k) {
  check_shape(n, k, exps.size());
  exps_.reserve(exps.size());
  for (auto e : exps) {
    auto r = e % k;
    if (r < 0) r += k;
    exps_.push_back(static_cast<std::int32_t>(r));
  }
}

BhMatrix::BhMatrix(int n, int k, std::vector<std::int32_t> exps) : n_(n), k_(k), exps_(std::move(exps)) {
  check_shape(n, k, exps_.size());
  for (auto& e : exps_) {
    e %= k;
    if (e < 0) e += k;
  }
}

BhMatrix fourier(int m) {
  check_shape(m, m, static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  std::vector<std::int32_t> exps(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      exps[static_cast<std::size_t>(i) * m + j] =
          static_cast<std::int32_t>((static_cast<std::int64_t>(i) * j) % m);
    }
  }
  return BhMatrix(m, m, std::move(exps));
}

BhMatrix kronecker(const BhMatrix& a, const BhMatrix& b) {
  const std::int64_t n64 = static_cast<std::int64_t>(a.order()) * b.order();
  const std::int64_t l64 = std::lcm<std::int64_t>(a.root_order(), b.root_order());
  if (n64 > kMaxMatrixOrder) {
    throw UnsupportedOrder("Kronecker product order " + std::to_string(n64) + " exceeds " +
                           std::to_string(kMaxMatrixOrder));
  }
  if (l64 > kMaxRootOrder) {
    throw UnsupportedOrder("Kronecker product root order " + std::to_string(l64) + " exceeds " +
                           std::to_string(kMaxRootOrder));
  }
  const int n = static_cast<int>(n64);
  const int l = static_cast<int>(l64);
  const int nb = b.order();
  const int sa = l / a.root_order();
  const int sb = l / b.root_order();
  std::vector<std::int32_t> exps(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; j < a.order(); ++j) {
      const int ea = a.at(i, j) * sa;
      for (int r = 0; r < nb; ++r) {
        for (int s = 0; s < nb; ++s) {
          exps[static_cast<std::size_t>(i * nb + r) * n + (j * nb + s)] = (ea + b.at(r, s) * sb) % l;
        }
      }
    }
  }
  return BhMatrix(n, l, std::move(exps));
}

CycloElement gram_entry(const BhMatrix& a, int i, int j) {
  const int k = a.root_order();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(k), 0);
  const auto ri = a.row(i);
  const auto rj = a.row(j);
  for (std::size_t l = 0; l < ri.size(); ++l) {
    int d = ri[l] - rj[l];
    if (d < 0) d += k;
    ++counts[static_cast<std::size_t>(d)];
  }
  return CycloElement(k, std::move(counts));
}

VerifyReport verify(const BhMatrix& a) {
  const int n = a.order();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      CycloElement g = gram_entry(a, i, j);
      if (i == j) g.add_root(0, -n);
      if (!g.is_zero()) return VerifyReport{GramWitness{i, j, g.reduced()}};
    }
  }
  return VerifyReport{};
}

}  // namespace butson
