#include "butson/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "butson/errors.hpp"

namespace butson {

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
  return r;
}

}  // namespace detail

namespace {

using detail::checked_add;
using detail::checked_mul;

void check_order(int k) {
  if (k < 1 || k > kMaxRootOrder) {
    throw UnsupportedOrder("root order " + std::to_string(k) + " outside [1, " +
                           std::to_string(kMaxRootOrder) + "]");
  }
}

std::int64_t mod_k(std::int64_t a, int k) {
  const std::int64_t r = a % k;
  return r < 0 ? r + k : r;
}

// Divides `num` in place by the monic `den`; `num` is left holding the
// remainder (degree < deg den) and the quotient is returned.
Poly divide_monic(Poly& num, const Poly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) return {};
  Poly quot(num.size() - dd, 0);
  for (std::size_t top = num.size() - 1; top + 1 > dd; --top) {
    const std::int64_t c = num[top];
    if (c == 0) continue;
    const std::size_t shift = top - dd;
    quot[shift] = c;
    for (std::size_t i = 0; i <= dd; ++i) {
      num[shift + i] = checked_add(num[shift + i], -checked_mul(c, den[i]));
    }
  }
  num.resize(dd);
  return quot;
}

class PhiTable {
 public:
  const CycloContext& get(int k) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(k); it != table_.end()) return *it->second;
    }
    // Divisors are resolved before taking the exclusive lock; each recursive
    // get() manages its own locking.
    auto ctx = std::make_unique<CycloContext>(CycloContext{k, compute(k)});
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(k, std::move(ctx));
    return *it->second;
  }

 private:
  Poly compute(int k) {
    Poly num(static_cast<std::size_t>(k) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(k)] = 1;
    for (int d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      Poly rem = num;
      Poly quot = divide_monic(rem, get(d).phi_coeffs);
      if (std::any_of(rem.begin(), rem.end(), [](std::int64_t c) { return c != 0; })) {
        throw std::logic_error("cyclotomic division left a remainder");
      }
      num = std::move(quot);
    }
    return num;
  }

  std::shared_mutex mutex_;
  std::map<int, std::unique_ptr<const CycloContext>> table_;
};

PhiTable& phi_table() {
  static PhiTable table;
  return table;
}

}  // namespace

const CycloContext& cyclo_context(int k) {
  check_order(k);
  return phi_table().get(k);
}

Poly cyclotomic_poly(int k) { return cyclo_context(k).phi_coeffs; }

int euler_phi(int k) {
  int result = k;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

CycloElement::CycloElement(int k) : order_(k) {
  check_order(k);
  counts_.assign(static_cast<std::size_t>(k), 0);
}

CycloElement::CycloElement(int k, std::vector<std::int64_t> counts)
    : order_(k), counts_(std::move(counts)) {
  check_order(k);
  if (counts_.size() != static_cast<std::size_t>(k)) {
    throw std::invalid_argument("count vector length " + std::to_string(counts_.size()) +
                                " differs from order " + std::to_string(k));
  }
  for (auto c : counts_) {
    if (c > kMaxCount || c < -kMaxCount) {
      throw OverflowError("count " + std::to_string(c) + " exceeds the 2^20 envelope");
    }
  }
}

CycloElement CycloElement::root(int k, std::int64_t a) {
  CycloElement e(k);
  e.counts_[static_cast<std::size_t>(mod_k(a, k))] = 1;
  return e;
}

CycloElement CycloElement::integer(int k, std::int64_t c) {
  CycloElement e(k);
  e.counts_[0] = c;
  return e;
}

void CycloElement::add_root(std::int64_t a, std::int64_t multiplicity) {
  auto& slot = counts_[static_cast<std::size_t>(mod_k(a, order_))];
  slot = checked_add(slot, multiplicity);
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
  if (order_ != rhs.order_) {
    throw OrderMismatch("cannot add elements of orders " + std::to_string(order_) + " and " +
                        std::to_string(rhs.order_));
  }
  for (std::size_t a = 0; a < counts_.size(); ++a) counts_[a] = checked_add(counts_[a], rhs.counts_[a]);
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) { return *this += -rhs; }

CycloElement CycloElement::operator-() const {
  CycloElement r(order_);
  for (std::size_t a = 0; a < counts_.size(); ++a) r.counts_[a] = checked_mul(counts_[a], -1);
  return r;
}

CycloElement operator*(const CycloElement& lhs, const CycloElement& rhs) {
  if (lhs.order_ != rhs.order_) {
    throw OrderMismatch("cannot multiply elements of orders " + std::to_string(lhs.order_) +
                        " and " + std::to_string(rhs.order_));
  }
  const std::size_t k = lhs.counts_.size();
  CycloElement r(lhs.order_);
  for (std::size_t a = 0; a < k; ++a) {
    if (lhs.counts_[a] == 0) continue;
    for (std::size_t b = 0; b < k; ++b) {
      if (rhs.counts_[b] == 0) continue;
      auto& slot = r.counts_[(a + b) % k];
      slot = checked_add(slot, checked_mul(lhs.counts_[a], rhs.counts_[b]));
    }
  }
  return r;
}

CycloElement CycloElement::conj() const {
  const std::size_t k = counts_.size();
  CycloElement r(order_);
  for (std::size_t a = 0; a < k; ++a) r.counts_[(k - a) % k] = counts_[a];
  return r;
}

Poly CycloElement::remainder() const {
  // The dense vector is already folded modulo x^k - 1, so the dividend has
  // degree < k.
  Poly num(counts_.begin(), counts_.end());
  divide_monic(num, cyclo_context(order_).phi_coeffs);
  return num;
}

CycloElement CycloElement::reduced() const {
  Poly rem = remainder();
  rem.resize(counts_.size(), 0);
  CycloElement r(order_);
  r.counts_ = std::move(rem);
  return r;
}

bool CycloElement::is_zero() const {
  if (std::all_of(counts_.begin(), counts_.end(), [](std::int64_t c) { return c == 0; })) {
    return true;
  }
  const Poly rem = remainder();
  return std::all_of(rem.begin(), rem.end(), [](std::int64_t c) { return c == 0; });
}

bool CycloElement::equals(const CycloElement& rhs) const { return (*this - rhs).is_zero(); }

CycloElement elem_from_root(int k, std::int64_t a) { return CycloElement::root(k, a); }
CycloElement elem_add(const CycloElement& x, const CycloElement& y) { return x + y; }
CycloElement elem_mul(const CycloElement& x, const CycloElement& y) { return x * y; }
CycloElement elem_conj(const CycloElement& x) { return x.conj(); }
bool elem_is_zero(const CycloElement& x) { return x.is_zero(); }

}  // namespace butson
