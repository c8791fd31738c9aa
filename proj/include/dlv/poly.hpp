#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dlv/gf.hpp"

namespace dlv {

enum class Var : uint8_t { x, t, T, y, Z };

const char* var_name(Var v);

// Dense univariate polynomial over GF(q) in canonical form (no trailing
// zeros).  The zero polynomial has degree kNegInf.
class Poly {
 public:
  static constexpr int kNegInf = -1;  // degree marker for the zero polynomial

  Poly() = default;
  Poly(FieldPtr k, Var v) : k_(std::move(k)), v_(v) {}
  Poly(FieldPtr k, Var v, std::vector<FF> coeffs);

  static Poly zero(const FieldPtr& k, Var v) { return Poly(k, v); }
  static Poly constant(const FieldPtr& k, Var v, FF c);
  static Poly one(const FieldPtr& k, Var v) { return constant(k, v, 1); }
  static Poly variable(const FieldPtr& k, Var v, int power = 1);

  const FieldPtr& field() const { return k_; }
  Var var() const { return v_; }
  int degree() const { return int(c_.size()) - 1; }  // kNegInf when zero
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  FF coeff(int i) const { return (i >= 0 && i < int(c_.size())) ? c_[i] : FF(0); }
  FF leading() const { return c_.empty() ? FF(0) : c_.back(); }
  const std::vector<FF>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(FF c) const;
  // Multiplication by var^k.
  Poly shifted(int k) const;

  // Quotient and remainder; throws on zero divisor.
  std::pair<Poly, Poly> divrem(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divrem(d).first; }
  Poly operator%(const Poly& d) const { return divrem(d).second; }

  Poly monic() const;
  FF eval(FF a) const;
  Poly pow(uint64_t n) const;
  // a(v)^q = a(v^q): exponent scaling, coefficients fixed by the q-power
  // Frobenius of GF(q).
  Poly q_power() const;
  Poly derivative() const;
  // Coefficient-wise retag to another variable (used by the t -> T transport).
  Poly retag(Var v) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string str() const;

 private:
  FieldPtr k_;
  Var v_ = Var::t;
  std::vector<FF> c_;
};

// Monic gcd; gcd(0,0) = 0.
Poly gcd(Poly a, Poly b);

// Canonical order: by degree, then coefficients compared low-degree-first as
// integers 0..q-1.
bool poly_less(const Poly& a, const Poly& b);

// Parses the repo-wide polynomial text format: terms `c*v^k` joined by `+`
// (or `-`), coefficients as integers for e = 1 or bracketed coordinate lists
// `[a0,a1,...]` for e > 1; whitespace insignificant.
Poly parse_poly(const FieldPtr& k, Var v, const std::string& text);

}  // namespace dlv
