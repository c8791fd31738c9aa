#pragma once

#include <optional>

#include "dlv/ring.hpp"

namespace dlv {

// Twisted polynomial sum_j a_j tau^j over R, with tau r = r^q tau.
class TwistedPoly {
 public:
  TwistedPoly() = default;
  explicit TwistedPoly(RingPtr R) : R_(std::move(R)) {}
  TwistedPoly(RingPtr R, std::vector<RingElement> coeffs);

  static TwistedPoly tau_term(const RingElement& a, int j);

  const RingPtr& ring() const { return R_; }
  int tau_degree() const { return int(a_.size()) - 1; }
  const std::vector<RingElement>& coeffs() const { return a_; }
  RingElement coeff(int j) const;
  bool is_zero() const { return a_.empty(); }
  bool has_tau_free_part() const { return !a_.empty() && !a_[0].is_zero(); }

  TwistedPoly operator+(const TwistedPoly& o) const;
  TwistedPoly operator-(const TwistedPoly& o) const;
  TwistedPoly operator-() const;
  // composition product: (a tau^i)(b tau^j) = a b^{q^i} tau^{i+j}
  TwistedPoly operator*(const TwistedPoly& o) const;

  // matrix of the action on a residue field
  MatrixK act_matrix(const ResidueField& l) const;
  // exact action on K_infinity coordinates
  KInf act(const KInf& x) const;

  // max t-degree over all coefficient coordinates (kNegInf when zero)
  int t_degree_bound() const;

  bool operator==(const TwistedPoly& o) const;

 private:
  RingPtr R_;
  std::vector<RingElement> a_;  // a_[j] = coefficient of tau^j
};

// Drinfeld module of rank n: phi(t) = t + r_1 tau + ... + r_n tau^n.
class DrinfeldModule {
 public:
  DrinfeldModule() = default;  // empty shell; build real modules with make
  static DrinfeldModule make(RingPtr R, std::vector<RingElement> coeffs);
  static DrinfeldModule carlitz(const RingPtr& R);   // t + tau
  static DrinfeldModule trivial(const RingPtr& R);   // rank 0

  const RingPtr& ring() const { return R_; }
  int rank() const { return int(r_.size()); }
  const RingElement& r(int j) const { return r_[j - 1]; }  // 1-based
  const std::vector<RingElement>& coeffs() const { return r_; }

  // valuation drop of multiplication by r_j on K_infinity coordinates
  int mul_drop(int j) const { return drops_[j - 1]; }

 private:
  RingPtr R_;
  std::vector<RingElement> r_;
  std::vector<int> drops_;
};

TwistedPoly phi_t(const DrinfeldModule& E);

// |R/m| / |E(R/m)| in 1 + T^{-1} k[[T^{-1}]] mod T^{-N}.
TruncSeries euler_factor(const DrinfeldModule& E, const MaxIdeal& m, int N);

struct EulerDiagnostics {
  // largest prefix unchanged when the factors of the top two degrees were
  // appended (empirical stabilization witness)
  int stabilized_prefix = 0;
  int ideal_count = 0;
};

std::pair<TruncSeries, EulerDiagnostics> euler_product(const DrinfeldModule& E, int D, int N);

// ----------------------------- exp and log ---------------------------------

// Coefficients e_0 = 1, e_1, ..., e_imax of exp_E with certified valuation
// lower bounds; each coefficient carries at least the requested precision.
class ExpSeries {
 public:
  static ExpSeries make(const DrinfeldModule& E, int imax, int prec);

  const DrinfeldModule& module() const { return E_; }
  int imax() const { return int(e_.size()) - 1; }
  int prec() const { return prec_; }
  const KInf& coeff(int i) const { return e_[i]; }
  int val_bound(int i) const { return vals_[i]; }
  const std::vector<int>& val_bounds() const { return vals_; }

 private:
  friend class LogSeries;
  DrinfeldModule E_;
  int prec_ = 0;
  std::vector<KInf> e_;
  std::vector<int> vals_;
};

// Compositional inverse coefficients l_0 = 1, l_1, ... obtained by the
// triangular inversion of an ExpSeries.
class LogSeries {
 public:
  static LogSeries make(const ExpSeries& exp);

  const DrinfeldModule& module() const { return exp_.module(); }
  const ExpSeries& exp() const { return exp_; }
  int imax() const { return int(l_.size()) - 1; }
  int prec() const { return exp_.prec(); }
  const KInf& coeff(int i) const { return l_[i]; }
  int val_bound(int i) const { return vals_[i]; }

 private:
  ExpSeries exp_;
  std::vector<KInf> l_;
  std::vector<int> vals_;
};

// Linear tail bound val(c_i) >= A q^i - B, verified on the computed range and
// shown to propagate inductively through the defining recursion.
struct TailCert {
  int A = 1;
  long long B = 0;
};

// Certificate for the exp coefficients at slope A; nullopt when the inductive
// step cannot be verified at this imax.
std::optional<TailCert> exp_tail_certificate(const ExpSeries& s, int A);
// Certificate for the log coefficients at slope A_l (requires a valid exp
// certificate; both use the tau-drop-adjusted induction).
std::optional<TailCert> log_tail_certificate(const LogSeries& l, int A_l);

// sum e_i x^{q^i} to the target precision; throws TailNotCertified when the
// certificate cannot dominate the tail, PrecisionExhausted when computed
// terms carry too little precision.
KInf exp_eval(const ExpSeries& s, const KInf& x, int target_prec);
KInf log_eval(const LogSeries& s, const KInf& x, int target_prec);

// Builders that grow imax and prec until evaluation at arguments of
// valuation >= vx_min is certified to the target precision.
ExpSeries exp_series_for(const DrinfeldModule& E, int vx_min, int target_prec);
LogSeries log_series_for(const DrinfeldModule& E, int vx_min, int target_prec);

// ceil(tau_degree_drop / (q-1)): the valuation correction for iterated
// Frobenius in extension-ring coordinates (0 when d = 1).
int tau_drop_slack(const RingPtr& R);

}  // namespace dlv
