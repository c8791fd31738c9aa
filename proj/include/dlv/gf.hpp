#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "dlv/errors.hpp"

namespace dlv {

// Element of GF(q), q = p^e <= kMaxQ.  The value is an index 0..q-1 whose
// base-p digits are the coordinates in the power basis of the modulus root:
// x = c0 + c1*a + ... + c_{e-1}*a^{e-1}  <->  c0 + c1*p + ... + c_{e-1}*p^{e-1}.
using FF = uint8_t;

// A finite field GF(p^e) with table-driven arithmetic.  Immutable after
// construction; build one with Field::make.  Two fields made from the same
// (p, e) are structurally identical: the modulus is the lexicographically
// smallest monic irreducible of degree e over GF(p), coefficients compared
// low-degree-first.
class Field {
 public:
  static constexpr int kMaxQ = 64;

  static std::shared_ptr<const Field> make(int p, int e);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }

  // Modulus coefficients c0..ce (ce = 1), as integers 0..p-1.
  const std::vector<int>& modulus() const { return modulus_; }

  FF zero() const { return 0; }
  FF one() const { return 1; }

  FF add(FF a, FF b) const { return add_[idx(a, b)]; }
  FF sub(FF a, FF b) const { return add_[idx(a, neg_[b])]; }
  FF neg(FF a) const { return neg_[a]; }
  FF mul(FF a, FF b) const { return mul_[idx(a, b)]; }
  FF inv(FF a) const {
    if (a == 0) throw Error("division by zero in GF(q)");
    return inv_[a];
  }
  FF div(FF a, FF b) const { return mul(a, inv(b)); }

  FF pow(FF a, uint64_t n) const;

  // Embeds an integer via reduction mod p (prime subfield).
  FF from_int(long long v) const;
  // Packs power-basis coordinates (length e, each reduced mod p).
  FF from_coords(const std::vector<int>& coords) const;
  std::vector<int> coords(FF a) const;

  bool same(const Field& other) const { return p_ == other.p_ && e_ == other.e_; }

 private:
  Field() = default;
  int idx(FF a, FF b) const { return int(a) * q_ + int(b); }

  int p_ = 0, e_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<FF> add_, mul_;  // q*q tables
  std::vector<FF> neg_, inv_;  // q tables
};

using FieldPtr = std::shared_ptr<const Field>;

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a && b && a->same(*b);
}

}  // namespace dlv
