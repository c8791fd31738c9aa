#include "dlv/drinfeld.hpp"

#include <algorithm>

namespace dlv {

namespace {
long long sat_pow(long long q, int e) {
  long long r = 1;
  const long long cap = 1ll << 42;
  for (int i = 0; i < e; ++i) {
    r *= q;
    if (r > cap) return cap;
  }
  return r;
}
}  // namespace

// ------------------------------- TwistedPoly -------------------------------

TwistedPoly::TwistedPoly(RingPtr R, std::vector<RingElement> coeffs)
    : R_(std::move(R)), a_(std::move(coeffs)) {
  while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
}

TwistedPoly TwistedPoly::tau_term(const RingElement& a, int j) {
  std::vector<RingElement> c(j + 1, RingElement::zero(a.ring()));
  c[j] = a;
  return TwistedPoly(a.ring(), std::move(c));
}

RingElement TwistedPoly::coeff(int j) const {
  if (j < 0 || j > tau_degree()) return RingElement::zero(R_);
  return a_[j];
}

TwistedPoly TwistedPoly::operator+(const TwistedPoly& o) const {
  std::vector<RingElement> c(std::max(a_.size(), o.a_.size()), RingElement::zero(R_));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a_.size()) c[i] = c[i] + a_[i];
    if (i < o.a_.size()) c[i] = c[i] + o.a_[i];
  }
  return TwistedPoly(R_, std::move(c));
}

TwistedPoly TwistedPoly::operator-() const {
  std::vector<RingElement> c(a_);
  for (auto& x : c) x = -x;
  return TwistedPoly(R_, std::move(c));
}

TwistedPoly TwistedPoly::operator-(const TwistedPoly& o) const { return *this + (-o); }

TwistedPoly TwistedPoly::operator*(const TwistedPoly& o) const {
  if (is_zero() || o.is_zero()) return TwistedPoly(R_);
  std::vector<RingElement> c(a_.size() + o.a_.size() - 1, RingElement::zero(R_));
  for (size_t i = 0; i < a_.size(); ++i) {
    if (a_[i].is_zero()) continue;
    for (size_t j = 0; j < o.a_.size(); ++j) {
      if (o.a_[j].is_zero()) continue;
      RingElement b = o.a_[j];
      for (size_t s = 0; s < i; ++s) b = b.q_power();
      c[i + j] = c[i + j] + a_[i] * b;
    }
  }
  return TwistedPoly(R_, std::move(c));
}

MatrixK TwistedPoly::act_matrix(const ResidueField& l) const {
  const FieldPtr& k = R_->field();
  MatrixK m(k, l.dim(), l.dim());
  MatrixK taupow = MatrixK::identity(k, l.dim());
  MatrixK tau = l.tau_matrix();
  for (int j = 0; j <= tau_degree(); ++j) {
    if (j > 0) taupow = tau * taupow;
    if (!a_[j].is_zero()) m = m + l.mul_matrix(a_[j]) * taupow;
  }
  return m;
}

KInf TwistedPoly::act(const KInf& x) const {
  KInf out = KInf::zero(R_);
  KInf power = x;
  for (int j = 0; j <= tau_degree(); ++j) {
    if (j > 0) power = power.tau();
    if (!a_[j].is_zero()) out = out + power.mul_ring(a_[j]);
  }
  return out;
}

int TwistedPoly::t_degree_bound() const {
  int d = Poly::kNegInf;
  for (const auto& a : a_) d = std::max(d, a.t_degree());
  return d;
}

bool TwistedPoly::operator==(const TwistedPoly& o) const { return a_ == o.a_; }

// ------------------------------ DrinfeldModule -----------------------------

DrinfeldModule DrinfeldModule::make(RingPtr R, std::vector<RingElement> coeffs) {
  if (!coeffs.empty() && coeffs.back().is_zero())
    throw Error("DrinfeldModule: leading coefficient r_n must be nonzero");
  DrinfeldModule E;
  E.R_ = std::move(R);
  E.r_ = std::move(coeffs);
  const int d = E.R_->rank();
  for (const auto& rj : E.r_) {
    int drop = 0;
    for (int l = 0; l < d; ++l) {
      // t-degree of r_j * y^l
      std::vector<Poly> bc(d, Poly::zero(E.R_->field(), Var::t));
      bc[l] = Poly::one(E.R_->field(), Var::t);
      RingElement basis(E.R_, std::move(bc));
      drop = std::max(drop, (rj * basis).t_degree());
    }
    E.drops_.push_back(std::max(drop, 0));
  }
  return E;
}

DrinfeldModule DrinfeldModule::carlitz(const RingPtr& R) {
  return make(R, {RingElement::one(R)});
}

DrinfeldModule DrinfeldModule::trivial(const RingPtr& R) { return make(R, {}); }

TwistedPoly phi_t(const DrinfeldModule& E) {
  const RingPtr& R = E.ring();
  std::vector<RingElement> c(E.rank() + 1, RingElement::zero(R));
  c[0] = RingElement::from_poly(R, Poly::variable(R->field(), Var::t));
  for (int j = 1; j <= E.rank(); ++j) c[j] = E.r(j);
  return TwistedPoly(R, std::move(c));
}

// ------------------------------- Euler factors -----------------------------

TruncSeries euler_factor(const DrinfeldModule& E, const MaxIdeal& m, int N) {
  if (N < 1) throw Error("euler_factor: N must be >= 1");
  ResidueField l(E.ring(), m);
  Poly num = l.size_poly();
  Poly den = phi_t(E).act_matrix(l).char_poly(Var::T);
  const int d = l.dim();
  const FieldPtr& k = E.ring()->field();
  std::vector<FF> nc(N, 0), dc(N, 0);
  for (int i = 0; i < N && i <= d; ++i) {
    nc[i] = num.coeff(d - i);
    dc[i] = den.coeff(d - i);
  }
  return TruncSeries(k, std::move(nc)) * TruncSeries(k, std::move(dc)).inverse();
}

std::pair<TruncSeries, EulerDiagnostics> euler_product(const DrinfeldModule& E, int D, int N) {
  if (D < 1) throw Error("euler_product: D must be >= 1");
  auto ideals = max_ideals_up_to(E.ring(), D);
  const FieldPtr& k = E.ring()->field();
  TruncSeries partial = TruncSeries::one(k, N);  // product over deg <= D-2
  TruncSeries full = TruncSeries::one(k, N);
  for (const auto& m : ideals) {
    TruncSeries f = euler_factor(E, m, N);
    full = full * f;
    if (m.deg_k <= D - 2) partial = partial * f;
  }
  EulerDiagnostics diag;
  diag.ideal_count = int(ideals.size());
  diag.stabilized_prefix = full.agree_prefix(partial);
  return {full, diag};
}

// ----------------------------- exp / log series ----------------------------

int tau_drop_slack(const RingPtr& R) {
  const int q = R->field()->q();
  const int c = R->tau_degree_drop();
  return (c + q - 2) / (q - 1);
}

ExpSeries ExpSeries::make(const DrinfeldModule& E, int imax, int prec) {
  if (imax < 0) throw Error("exp_series: imax must be >= 0");
  const RingPtr& R = E.ring();
  const int q = R->field()->q();
  ExpSeries s;
  s.E_ = E;
  s.prec_ = prec;
  s.e_.push_back(KInf::one(R));  // e_0 = 1, exact
  s.vals_.push_back(0);
  long long Q = 1;
  for (int i = 1; i <= imax; ++i) {
    Q *= q;  // q^i
    if (Q > (1ll << 30)) throw Error("exp_series: q^imax out of range");
    KInf acc = KInf::zero(R).truncated(prec + int(Q));
    for (int j = 1; j <= std::min(E.rank(), i); ++j) {
      KInf w = s.e_[i - j];
      for (int sstep = 0; sstep < j; ++sstep) w = w.tau();
      acc = acc + w.mul_ring(E.r(j));
    }
    KInf ei = acc.divided_by_tq_minus_t(int(Q), prec).truncated(prec);
    s.e_.push_back(ei);
    s.vals_.push_back(ei.val_lower_bound());
  }
  return s;
}

LogSeries LogSeries::make(const ExpSeries& exp) {
  LogSeries l;
  l.exp_ = exp;
  const DrinfeldModule& E = exp.module();
  const RingPtr& R = E.ring();
  l.l_.push_back(KInf::one(R));
  l.vals_.push_back(0);
  const int prec = exp.prec();
  for (int m = 1; m <= exp.imax(); ++m) {
    KInf acc = KInf::zero(R).truncated(prec);
    for (int i = 1; i <= m; ++i) {
      if (exp.coeff(i).is_zero_to_prec() && exp.coeff(i).is_exact()) continue;
      KInf w = l.l_[m - i];
      for (int sstep = 0; sstep < i; ++sstep) w = w.tau();
      acc = acc + exp.coeff(i) * w;
    }
    KInf lm = (-acc).truncated(prec);
    l.l_.push_back(lm);
    l.vals_.push_back(lm.val_lower_bound());
  }
  return l;
}

std::optional<TailCert> exp_tail_certificate(const ExpSeries& s, int A) {
  const DrinfeldModule& E = s.module();
  const RingPtr& R = E.ring();
  const int q = R->field()->q();
  const int cpr = tau_drop_slack(R);
  const int imax = s.imax();
  if (imax < E.rank()) return std::nullopt;  // the inductive step needs i > n
  long long B = 0;
  for (int i = 0; i <= imax; ++i)
    B = std::max(B, A * sat_pow(q, i) - s.val_bound(i));
  if (B < 0) B = 0;
  // step: q^{imax+1} + B + c' >= max_j q^j (B + c') + D_j
  long long lhs = sat_pow(q, imax + 1) + B + cpr;
  for (int j = 1; j <= E.rank(); ++j) {
    long long rhs = sat_pow(q, j) * (B + cpr) + E.mul_drop(j);
    if (lhs < rhs) return std::nullopt;
  }
  return TailCert{A, B};
}

std::optional<TailCert> log_tail_certificate(const LogSeries& l, int A_l) {
  const ExpSeries& e = l.exp();
  const DrinfeldModule& E = e.module();
  const RingPtr& R = E.ring();
  const int q = R->field()->q();
  const int cpr = tau_drop_slack(R);
  const int imax = l.imax();

  long long B_l = 0;
  for (int i = 0; i <= imax; ++i)
    B_l = std::max(B_l, A_l * sat_pow(q, i) - l.val_bound(i));
  if (B_l < 0) B_l = 0;
  // an exp certificate (A_e, B_e) supports the log induction when
  // A_e >= B_l + c' and q(A_e - B_l - c') + c' + B_l >= B_e
  for (int Ae = 8; Ae >= 1; --Ae) {
    auto ecert = exp_tail_certificate(e, Ae);
    if (!ecert) continue;
    if (ecert->A < B_l + cpr) continue;
    if (q * (ecert->A - B_l - cpr) + cpr + B_l < ecert->B) continue;
    return TailCert{A_l, B_l};
  }
  return std::nullopt;
}

namespace {

KInf eval_series(const std::vector<const KInf*>& coeffs, const KInf& x, int target_prec) {
  KInf acc = KInf::zero(x.ring()).truncated(target_prec);
  KInf power = x;  // x^{q^i}
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) power = power.tau();
    if (coeffs[i]->is_zero_to_prec() && coeffs[i]->is_exact()) continue;
    KInf term = (*coeffs[i]) * power;
    if (term.min_prec() < target_prec)
      throw PrecisionExhausted("series evaluation: a computed term carries precision " +
                               std::to_string(term.min_prec()) + " < target " +
                               std::to_string(target_prec));
    acc = acc + term.truncated(target_prec);
  }
  return acc.truncated(target_prec);
}

void check_tail(const TailCert& cert, int q, int imax, int vx, int cpr, int target) {
  long long slope = cert.A + vx - cpr;
  if (slope < 1)
    throw TailNotCertified("argument valuation " + std::to_string(vx) +
                           " below the certified convergence ball (need val >= " +
                           std::to_string(cpr + 1 - cert.A) + ")");
  long long tail = sat_pow(q, imax + 1) * slope - cert.B + cpr;
  if (tail <= target)
    throw TailNotCertified("tail bound " + std::to_string(tail) +
                           " does not exceed target precision " + std::to_string(target) +
                           " (imax too small)");
}

}  // namespace

KInf exp_eval(const ExpSeries& s, const KInf& x, int target_prec) {
  const RingPtr& R = s.module().ring();
  const int q = R->field()->q();
  const int cpr = tau_drop_slack(R);
  if (x.is_zero_to_prec() && x.is_exact()) return KInf::zero(R).truncated(target_prec);
  int vx = x.val_lower_bound();
  int A = std::max(1, 1 + cpr - vx);
  auto cert = exp_tail_certificate(s, A);
  if (!cert)
    throw TailNotCertified("exp tail certificate unavailable at slope " + std::to_string(A));
  check_tail(*cert, q, s.imax(), vx, cpr, target_prec);
  std::vector<const KInf*> cs;
  for (int i = 0; i <= s.imax(); ++i) cs.push_back(&s.coeff(i));
  return eval_series(cs, x, target_prec);
}

KInf log_eval(const LogSeries& s, const KInf& x, int target_prec) {
  const RingPtr& R = s.module().ring();
  const int q = R->field()->q();
  const int cpr = tau_drop_slack(R);
  if (x.is_zero_to_prec() && x.is_exact()) return KInf::zero(R).truncated(target_prec);
  int vx = x.val_lower_bound();
  int A = std::max(1, 1 + cpr - vx);
  auto cert = log_tail_certificate(s, A);
  if (!cert)
    throw TailNotCertified("log tail certificate unavailable at slope " + std::to_string(A) +
                           " (argument outside the certified convergence ball?)");
  check_tail(*cert, q, s.imax(), vx, cpr, target_prec);
  std::vector<const KInf*> cs;
  for (int i = 0; i <= s.imax(); ++i) cs.push_back(&s.coeff(i));
  return eval_series(cs, x, target_prec);
}

ExpSeries exp_series_for(const DrinfeldModule& E, int vx_min, int target_prec) {
  const RingPtr& R = E.ring();
  const int q = R->field()->q();
  const int cpr = tau_drop_slack(R);
  int A = std::max(1, 1 + cpr - vx_min);
  for (int imax = std::max(1, E.rank()); imax <= 40; ++imax) {
    long long Q1 = sat_pow(q, imax + 1);
    // precision must expose valuations up to the largest certificate slope,
    // or the computed val bounds saturate and B grows with q^imax
    long long needed_prec =
        target_prec + sat_pow(q, imax) * (std::max(0, -vx_min) + 9) + cpr + 4;
    if (needed_prec > (1 << 24)) break;
    ExpSeries s = ExpSeries::make(E, imax, int(needed_prec));
    auto cert = exp_tail_certificate(s, A);
    if (!cert) continue;
    long long slope = cert->A + vx_min - cpr;
    if (slope >= 1 && Q1 * slope - cert->B + cpr > target_prec) return s;
  }
  throw TailNotCertified("exp_series_for: could not certify evaluation at val >= " +
                         std::to_string(vx_min));
}

LogSeries log_series_for(const DrinfeldModule& E, int vx_min, int target_prec) {
  const RingPtr& R = E.ring();
  const int q = R->field()->q();
  const int cpr = tau_drop_slack(R);
  int A = std::max(1, 1 + cpr - vx_min);
  for (int imax = std::max(1, E.rank()); imax <= 40; ++imax) {
    long long Q1 = sat_pow(q, imax + 1);
    long long needed_prec =
        target_prec + sat_pow(q, imax) * (std::max(0, -vx_min) + 9) + cpr + 4;
    if (needed_prec > (1 << 24)) break;
    ExpSeries s = ExpSeries::make(E, imax, int(needed_prec));
    LogSeries l = LogSeries::make(s);
    auto cert = log_tail_certificate(l, A);
    if (!cert) continue;
    long long slope = cert->A + vx_min - cpr;
    if (slope >= 1 && Q1 * slope - cert->B + cpr > target_prec) return l;
  }
  throw TailNotCertified("log_series_for: could not certify evaluation at val >= " +
                         std::to_string(vx_min));
}

}  // namespace dlv
