#pragma once

// Exact arithmetic in the cyclotomic integers Z[zeta_k].
//
// An element is stored as a dense count vector over the k powers of zeta_k,
// so sums of roots of unity are accumulated by incrementing one slot. The
// representation is not canonical: two count vectors denote the same element
// iff their difference is divisible by the k-th cyclotomic polynomial, which
// is what is_zero() decides.

#include <cstdint>
#include <span>
#include <vector>

namespace butson {

/// Ascending-degree integer coefficients.
using Poly = std::vector<std::int64_t>;

/// Largest root order k supported by the cyclotomic routines.
inline constexpr int kMaxRootOrder = 10000;
/// Largest |count| accepted when building an element from raw counts.
inline constexpr std::int64_t kMaxCount = std::int64_t{1} << 20;

struct CycloContext {
  int order;
  Poly phi_coeffs;  // Phi_k, ascending degree, monic of degree phi(k)

  int degree() const noexcept { return static_cast<int>(phi_coeffs.size()) - 1; }
};

/// Memoized Phi_k. The returned reference stays valid for the program
/// lifetime and is safe to read from any thread.
const CycloContext& cyclo_context(int k);

/// Coefficients of Phi_k, obtained by exact division of x^k - 1 by the
/// cyclotomic polynomials of the proper divisors of k.
/// Throws UnsupportedOrder when k is outside [1, kMaxRootOrder].
Poly cyclotomic_poly(int k);

/// Euler's totient.
int euler_phi(int k);

class CycloElement {
 public:
  /// The zero element of Z[zeta_k].
  explicit CycloElement(int k);
  /// Takes ownership of raw counts; counts.size() must equal k and every
  /// |count| must be at most kMaxCount.
  CycloElement(int k, std::vector<std::int64_t> counts);

  static CycloElement zero(int k) { return CycloElement(k); }
  static CycloElement one(int k) { return root(k, 0); }
  /// zeta_k^a for any integer a (reduced mod k).
  static CycloElement root(int k, std::int64_t a);
  /// The rational integer c embedded as c * zeta_k^0.
  static CycloElement integer(int k, std::int64_t c);

  int order() const noexcept { return order_; }
  std::span<const std::int64_t> counts() const noexcept { return counts_; }
  std::int64_t count(int a) const { return counts_.at(static_cast<std::size_t>(a)); }

  /// counts[a mod k] += multiplicity, overflow-checked.
  void add_root(std::int64_t a, std::int64_t multiplicity = 1);

  CycloElement& operator+=(const CycloElement& rhs);
  CycloElement& operator-=(const CycloElement& rhs);
  friend CycloElement operator+(CycloElement lhs, const CycloElement& rhs) { return lhs += rhs; }
  friend CycloElement operator-(CycloElement lhs, const CycloElement& rhs) { return lhs -= rhs; }
  CycloElement operator-() const;
  /// Cyclic convolution: exponents add mod k.
  friend CycloElement operator*(const CycloElement& lhs, const CycloElement& rhs);

  /// Complex conjugation, zeta^a -> zeta^{-a}.
  CycloElement conj() const;

  /// Canonical representative: the remainder modulo Phi_k, padded with
  /// zeros to length k. Two elements are equal iff their reductions are.
  CycloElement reduced() const;

  /// Decides whether the element vanishes, i.e. whether Phi_k divides the
  /// count polynomial.
  bool is_zero() const;

  /// Equality in Z[zeta_k] (not equality of count vectors).
  bool equals(const CycloElement& rhs) const;

  /// Count vectors compare equal element-wise.
  bool same_counts(const CycloElement& rhs) const noexcept {
    return order_ == rhs.order_ && counts_ == rhs.counts_;
  }

 private:
  Poly remainder() const;

  int order_;
  std::vector<std::int64_t> counts_;
};

// Free-function spellings of the ring operations.
CycloElement elem_from_root(int k, std::int64_t a);
CycloElement elem_add(const CycloElement& x, const CycloElement& y);
CycloElement elem_mul(const CycloElement& x, const CycloElement& y);
CycloElement elem_conj(const CycloElement& x);
bool elem_is_zero(const CycloElement& x);

namespace detail {
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
}  // namespace detail

}  // namespace butson
