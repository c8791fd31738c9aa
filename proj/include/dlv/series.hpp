#pragma once

#include <string>

#include "dlv/poly.hpp"

namespace dlv {

// Precision sentinel for exactly known series (finite Laurent polynomials).
inline constexpr int kExactPrec = 1 << 28;

// Truncated Laurent series sum_{i >= lead} c_i * v^{-i}, known modulo
// v^{-(prec+1)}.  lead may be negative (positive powers of v).  Stored
// coefficients start at lead and may end before prec; missing trailing
// coefficients are zero.  Canonical form strips leading zeros without
// increasing the claimed precision.  Values with prec == kExactPrec are exact.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  // zero known exactly
  LaurentSeries(FieldPtr k, Var v) : k_(std::move(k)), v_(v), lead_(kExactPrec + 1), prec_(kExactPrec) {}
  LaurentSeries(FieldPtr k, Var v, int lead, int prec, std::vector<FF> coeffs);

  static LaurentSeries zero(const FieldPtr& k, Var v) { return LaurentSeries(k, v); }
  // zero known only modulo v^{-(prec+1)}
  static LaurentSeries zero_to(const FieldPtr& k, Var v, int prec);
  static LaurentSeries constant(const FieldPtr& k, Var v, FF c);
  static LaurentSeries one(const FieldPtr& k, Var v) { return constant(k, v, 1); }
  // c * v^{-i}, exact
  static LaurentSeries monomial(const FieldPtr& k, Var v, FF c, int i);
  // exact image of a polynomial in v (exponent m of v becomes index -m)
  static LaurentSeries from_poly(const Poly& p);

  const FieldPtr& field() const { return k_; }
  Var var() const { return v_; }
  int lead() const { return lead_; }
  int prec() const { return prec_; }
  bool is_exact() const { return prec_ >= kExactPrec; }
  // true when every certified coefficient vanishes
  bool is_zero_to_prec() const { return c_.empty(); }
  FF coeff(int i) const;

  // Certified valuation: index of the first nonzero coefficient.  Throws
  // InvZero when no nonzero coefficient is visible.
  int val() const;
  // Lower bound on the valuation that is also valid for the zero series
  // (prec + 1 when zero to precision).
  int val_lower_bound() const { return c_.empty() ? prec_ + 1 : lead_; }
  // Raw stored coefficients from lead(); trailing range up to prec() is zero.
  const std::vector<FF>& stored_coeffs() const { return c_; }

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator-() const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries scaled(FF c) const;
  // multiply by v^{m} (shift indices by -m); exact
  LaurentSeries shifted_tpow(int m) const;
  // Inverse to the maximal provable precision, capped at prec_cap.  Exact
  // non-monomial inputs need an explicit cap.
  LaurentSeries inverse(int prec_cap = kExactPrec) const;
  LaurentSeries operator/(const LaurentSeries& o) const { return *this * o.inverse(); }
  // x -> x^q: exponent scaling (coefficients are fixed by Frobenius of GF(q))
  LaurentSeries q_power() const;
  // restrict the claimed precision to at most p
  LaurentSeries truncated(int p) const;
  // divide by (v^Q - v), Q a power of q; linear-time prefix recurrence
  LaurentSeries divided_by_tq_minus_t(int Q, int prec_cap = kExactPrec) const;

  // throws PrecisionExhausted unless prec() >= p
  void require_prec(int p) const;

  bool equal_to_prec(const LaurentSeries& o, int through) const;
  bool operator==(const LaurentSeries& o) const;

  std::string str() const;

 private:
  void canonicalize();

  FieldPtr k_;
  Var v_ = Var::t;
  int lead_ = 0, prec_ = -1;
  std::vector<FF> c_;
};

// Element of k[[Z]]/Z^N (equally k[[T^{-1}]]/T^{-N}): exactly N stored
// coefficients, low order first.
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(FieldPtr k, int n) : k_(std::move(k)), c_(n, 0) {}
  TruncSeries(FieldPtr k, std::vector<FF> coeffs) : k_(std::move(k)), c_(std::move(coeffs)) {}

  static TruncSeries one(const FieldPtr& k, int n);

  const FieldPtr& field() const { return k_; }
  int modulus() const { return int(c_.size()); }
  FF coeff(int i) const { return (i >= 0 && i < int(c_.size())) ? c_[i] : FF(0); }
  const std::vector<FF>& coeffs() const { return c_; }
  bool is_one() const;

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries scaled(FF c) const;
  // requires a unit constant term
  TruncSeries inverse() const;
  TruncSeries truncated(int n) const;

  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

  // number of leading coefficients agreeing with o
  int agree_prefix(const TruncSeries& o) const;

  // machine format [c0,c1,...]
  std::string str() const;

 private:
  FieldPtr k_;
  std::vector<FF> c_;
};

// --------------------------- transport t -> T ------------------------------

// The coefficient-wise isomorphism sum a_i t^i -> sum a_i T^i.
LaurentSeries iota(const LaurentSeries& x);
LaurentSeries iota(const Poly& p_in_t);

// Splits a series in T into its polynomial part (positive powers, variable T)
// and its tail in k[[T^{-1}]]/T^{-N}; requires certified coefficients through
// T^{-(N-1)}.
struct IotaSplit {
  Poly poly_part;
  TruncSeries tail;
};
IotaSplit iota_split(const LaurentSeries& x_in_T, int N);

// Scales by the inverse of the leading coefficient; throws InvZero on zero
// input.
LaurentSeries monic_normalize(const LaurentSeries& x);

}  // namespace dlv
