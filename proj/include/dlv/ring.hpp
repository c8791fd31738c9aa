#pragma once

#include "dlv/factor.hpp"
#include "dlv/matrix.hpp"
#include "dlv/series.hpp"

namespace dlv {

class BaseRing;
using RingPtr = std::shared_ptr<const BaseRing>;

// Element of R = k[t][y]/(g): coordinates on the basis 1, y, ..., y^{d-1},
// each a polynomial in t.
class RingElement {
 public:
  RingElement() = default;
  RingElement(RingPtr R, std::vector<Poly> coords);

  static RingElement zero(const RingPtr& R);
  static RingElement one(const RingPtr& R);
  static RingElement from_poly(const RingPtr& R, const Poly& p_in_t);

  const RingPtr& ring() const { return R_; }
  const std::vector<Poly>& coords() const { return c_; }
  const Poly& coord(int j) const { return c_[j]; }
  bool is_zero() const;

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;
  RingElement scaled_poly(const Poly& p) const;  // multiply by an element of k[t]
  RingElement q_power() const;                   // r -> r^q
  // max t-degree over coordinates (kNegInf for zero)
  int t_degree() const;

  bool operator==(const RingElement& o) const;

  std::string str() const;

 private:
  RingPtr R_;
  std::vector<Poly> c_;
};

// The coefficient ring R = k[t][y]/(g), free of rank d over k[t]; d = 1 with
// g = y encodes R = k[t].  Immutable; reduction data y^j mod g is precomputed
// through j <= max(2d-2, q(d-1)).
class BaseRing : public std::enable_shared_from_this<BaseRing> {
 public:
  // g: coefficients in y (low first), entries are polynomials in t; must be
  // monic in y and squarefree as a polynomial in y over k(t).
  static RingPtr make(const FieldPtr& k, const std::vector<Poly>& g);
  static RingPtr make_kt(const FieldPtr& k);  // R = k[t]

  const FieldPtr& field() const { return k_; }
  int rank() const { return d_; }
  const std::vector<Poly>& modulus() const { return g_; }
  // coordinates of y^j mod g for 0 <= j <= table_degree()
  const std::vector<Poly>& y_power_coords(int j) const;
  int table_degree() const { return int(ytab_.size()) - 1; }
  // max t-degree appearing in the reduction table rows used by one q-power
  // step (0 when d = 1)
  int tau_degree_drop() const { return tau_drop_; }

  RingElement y() const;  // the generator (zero when d = 1... never needed then)

  std::string extension_str() const;  // "none" or the g text

 private:
  friend class RingElement;
  BaseRing() = default;

  FieldPtr k_;
  int d_ = 1;
  std::vector<Poly> g_;                      // y-coefficients, low first
  std::vector<std::vector<Poly>> ytab_;      // ytab_[j] = coords of y^j mod g
  int tau_drop_ = 0;
};

// A maximal ideal m = (P, h(y)) of R: P monic irreducible in t, h a monic
// irreducible factor of g mod P over k[t]/P.
struct MaxIdeal {
  Poly P;
  FqPoly h;  // coefficients reduced mod P
  int deg_k = 0;

  std::string str() const;
};

// All maximal ideals with residue degree deg_k <= D, canonically ordered.
std::vector<MaxIdeal> max_ideals_up_to(const RingPtr& R, int D);

// Finite k[t]-module presented by the matrix of t.
struct FiniteKtModule {
  MatrixK t_mat;
  int dim() const { return t_mat.rows(); }
};

// |M| = det(T - t | M), monic of degree dim.
Poly module_size(const FiniteKtModule& M);

// The residue field R/m as a k-algebra with its t- and tau-actions.
// Elements are polynomials in y of degree < deg_y h whose coefficients are
// polynomials in t of degree < deg P.
class ResidueField {
 public:
  ResidueField(RingPtr R, MaxIdeal m);

  const RingPtr& ring() const { return R_; }
  const MaxIdeal& ideal() const { return m_; }
  int dim() const { return dim_; }

  using Elem = std::vector<Poly>;  // y-coordinates, low first, deg_t < deg P

  Elem zero() const;
  Elem one() const;
  Elem reduce(const RingElement& r) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem mul_t(const Elem& a) const;
  Elem frobenius(const Elem& a) const;  // x -> x^q

  std::vector<FF> to_coords(const Elem& a) const;   // flatten to k^dim
  Elem from_coords(const std::vector<FF>& v) const;
  Elem basis_elem(int i) const;

  MatrixK t_matrix() const;
  MatrixK tau_matrix() const;
  MatrixK mul_matrix(const RingElement& r) const;  // multiplication operator

  // |R/m| = P(T)^{deg_y h}; agrees with char_poly(t_matrix()) and is cheap.
  Poly size_poly() const;

 private:
  RingPtr R_;
  MaxIdeal m_;
  FqCtx Fp_;  // k[t]/(P)
  int dim_ = 0;
};

// Element of K_infinity = R (x)_{k[t]} k((t^{-1})) in coordinates on
// 1, y, ..., y^{d-1}.
class KInf {
 public:
  KInf() = default;
  KInf(RingPtr R, std::vector<LaurentSeries> coords);

  static KInf zero(const RingPtr& R);
  static KInf one(const RingPtr& R);
  static KInf from_ring(const RingElement& r);            // exact
  static KInf monomial(const RingPtr& R, int tpow, int j);  // t^{tpow} y^j, exact

  const RingPtr& ring() const { return R_; }
  const std::vector<LaurentSeries>& coords() const { return c_; }
  const LaurentSeries& coord(int j) const { return c_[j]; }

  KInf operator+(const KInf& o) const;
  KInf operator-(const KInf& o) const;
  KInf operator-() const;
  KInf operator*(const KInf& o) const;
  KInf scaled(FF c) const;
  KInf mul_series(const LaurentSeries& s) const;  // scalar from k((t^{-1}))
  KInf mul_ring(const RingElement& r) const;
  KInf tau() const;  // x -> x^q with y-reduction
  KInf tau_pow(int j) const;
  KInf shifted_tpow(int m) const;  // multiply by t^m
  KInf divided_by_tq_minus_t(int Q, int prec_cap = kExactPrec) const;
  KInf truncated(int p) const;

  // min over coordinates of certified valuation lower bounds
  int val_lower_bound() const;
  int min_prec() const;
  bool is_exact() const;
  bool is_zero_to_prec() const;
  void require_prec(int p) const;
  bool equal_to_prec(const KInf& o, int through) const;

  // Quotient by R: drop all coefficients of t^{-i} with i <= 0 in every
  // coordinate.  Exact inputs only.
  KInf reduced_mod_R() const;

  std::string str() const;

 private:
  RingPtr R_;
  std::vector<LaurentSeries> c_;
};

// Parses RingElement text `p0(t) + p1(t)*y + ...` (terms may mix t- and
// y-powers, coefficients integer or bracketed coordinate lists).
RingElement parse_ring_element(const RingPtr& R, const std::string& text);

}  // namespace dlv
