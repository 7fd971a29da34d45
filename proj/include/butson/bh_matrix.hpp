#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "butson/cyclotomic.hpp"

namespace butson {

/// Largest matrix order accepted by constructors and generators.
inline constexpr int kMaxMatrixOrder = 1 << 14;

/// An n x n matrix whose (i, j) entry is zeta_k^{exps[i][j]}.
///
/// Exponents are always normalized into [0, k). Whether the matrix is
/// actually Butson-Hadamard is a property established by verify(), not an
/// invariant of the type.
class BhMatrix {
 public:
  /// `exps` is row-major with n*n entries; any integers are accepted and
  /// reduced mod k.
  BhMatrix(int n, int k, std::span<const std::int64_t> exps);
  BhMatrix(int n, int k, std::vector<std::int32_t> exps);

  int order() const noexcept { return n_; }
  int root_order() const noexcept { return k_; }

  std::int32_t at(int i, int j) const noexcept {
    return exps_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
  }
  std::span<const std::int32_t> row(int i) const noexcept {
    return {exps_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n_),
            static_cast<std::size_t>(n_)};
  }
  std::span<const std::int32_t> exponents() const noexcept { return exps_; }

  friend bool operator==(const BhMatrix&, const BhMatrix&) = default;

 private:
  int n_;
  int k_;
  std::vector<std::int32_t> exps_;
};

/// The character table of Z/m: entry (i, j) is zeta_m^{ij}, 0-based.
BhMatrix fourier(int m);

/// A (x) B over the common root order lcm(k_A, k_B).
BhMatrix kronecker(const BhMatrix& a, const BhMatrix& b);

/// Entry (i, j) of H H^*, i.e. sum_l zeta_k^{e[i][l] - e[j][l]}.
CycloElement gram_entry(const BhMatrix& a, int i, int j);

struct GramWitness {
  int row_i;
  int row_j;
  CycloElement residue;  // (H H^* - n I)_{ij} reduced mod Phi_k
};

struct VerifyReport {
  std::optional<GramWitness> witness;

  bool valid() const noexcept { return !witness.has_value(); }
  explicit operator bool() const noexcept { return valid(); }
};

/// Exact check of H H^* = n I. Reports the lexicographically first failing
/// row pair (i <= j).
VerifyReport verify(const BhMatrix& a);

}  // namespace butson
