#include "dlv/series.hpp"

#include <algorithm>
#include <sstream>

namespace dlv {

namespace {
int clamp_prec(long long p) {
  return p >= kExactPrec ? kExactPrec : int(p);
}
}  // namespace

LaurentSeries::LaurentSeries(FieldPtr k, Var v, int lead, int prec, std::vector<FF> coeffs)
    : k_(std::move(k)), v_(v), lead_(lead), prec_(clamp_prec(prec)), c_(std::move(coeffs)) {
  if (prec_ < kExactPrec && int(c_.size()) > prec_ - lead_ + 1)
    c_.resize(std::max(0, prec_ - lead_ + 1));
  canonicalize();
}

void LaurentSeries::canonicalize() {
  size_t i = 0;
  while (i < c_.size() && c_[i] == 0) ++i;
  if (i > 0) {
    c_.erase(c_.begin(), c_.begin() + i);
    lead_ += int(i);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) lead_ = prec_ + 1;
  if (prec_ < lead_ - 1) throw PrecisionExhausted("series carries no certified coefficients");
}

LaurentSeries LaurentSeries::zero_to(const FieldPtr& k, Var v, int prec) {
  LaurentSeries r(k, v);
  r.prec_ = clamp_prec(prec);
  r.lead_ = r.prec_ + 1;
  return r;
}

LaurentSeries LaurentSeries::constant(const FieldPtr& k, Var v, FF c) {
  return monomial(k, v, c, 0);
}

LaurentSeries LaurentSeries::monomial(const FieldPtr& k, Var v, FF c, int i) {
  LaurentSeries r(k, v);
  if (c != 0) {
    r.lead_ = i;
    r.c_ = {c};
  }
  return r;
}

LaurentSeries LaurentSeries::from_poly(const Poly& p) {
  LaurentSeries r(p.field(), p.var());
  if (p.is_zero()) return r;
  int d = p.degree();
  std::vector<FF> c(d + 1, 0);
  for (int m = 0; m <= d; ++m) c[d - m] = p.coeff(m);  // index -m holds coeff of v^m
  r.lead_ = -d;
  r.c_ = std::move(c);
  r.canonicalize();
  return r;
}

FF LaurentSeries::coeff(int i) const {
  if (i > prec_) throw PrecisionExhausted("coefficient beyond certified precision");
  if (i < lead_ || i >= lead_ + int(c_.size())) return 0;
  return c_[i - lead_];
}

int LaurentSeries::val() const {
  if (c_.empty()) throw InvZero("no nonzero coefficient visible");
  return lead_;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  if (!same_field(k_, o.k_) || v_ != o.v_) throw Error("series add: mismatched field/variable");
  int prec = std::min(prec_, o.prec_);
  if (c_.empty() && o.c_.empty()) return zero_to(k_, v_, prec);
  // support bounds ignore empty (zero-to-precision) operands
  int lo = c_.empty() ? o.lead_ : (o.c_.empty() ? lead_ : std::min(lead_, o.lead_));
  int end_a = c_.empty() ? lo : lead_ + int(c_.size());
  int end_b = o.c_.empty() ? lo : o.lead_ + int(o.c_.size());
  int hi = std::min(prec, std::max(end_a, end_b) - 1);
  if (hi < lo) return zero_to(k_, v_, prec);
  std::vector<FF> c(hi - lo + 1, 0);
  for (int i = 0; i < int(c_.size()); ++i) {
    int idx = lead_ + i;
    if (idx >= lo && idx <= hi) c[idx - lo] = c_[i];
  }
  for (int i = 0; i < int(o.c_.size()); ++i) {
    int idx = o.lead_ + i;
    if (idx >= lo && idx <= hi) c[idx - lo] = k_->add(c[idx - lo], o.c_[i]);
  }
  return LaurentSeries(k_, v_, lo, prec, std::move(c));
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.c_) c = k_->neg(c);
  return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  if (!same_field(k_, o.k_) || v_ != o.v_) throw Error("series mul: mismatched field/variable");
  long long va = val_lower_bound(), vb = o.val_lower_bound();
  int prec = (is_exact() && o.is_exact())
                 ? kExactPrec
                 : clamp_prec(std::min(va + o.prec_, vb + static_cast<long long>(prec_)));
  if (c_.empty() || o.c_.empty()) return zero_to(k_, v_, prec);
  int lo = lead_ + o.lead_;
  int hi = int(std::min<long long>(
      prec, static_cast<long long>(lead_) + o.lead_ + int(c_.size()) + int(o.c_.size()) - 2));
  if (hi < lo) return zero_to(k_, v_, prec);
  std::vector<FF> c(hi - lo + 1, 0);
  for (int i = 0; i < int(c_.size()); ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < int(o.c_.size()); ++j) {
      int idx = lead_ + i + o.lead_ + j;
      if (idx > hi) break;
      c[idx - lo] = k_->add(c[idx - lo], k_->mul(c_[i], o.c_[j]));
    }
  }
  return LaurentSeries(k_, v_, lo, prec, std::move(c));
}

LaurentSeries LaurentSeries::scaled(FF s) const {
  if (s == 0) return zero_to(k_, v_, prec_);
  LaurentSeries r = *this;
  for (auto& c : r.c_) c = k_->mul(c, s);
  r.canonicalize();
  return r;
}

LaurentSeries LaurentSeries::shifted_tpow(int m) const {
  LaurentSeries r = *this;
  r.lead_ -= m;
  if (!is_exact()) r.prec_ -= m;
  if (r.c_.empty()) r.lead_ = r.prec_ + 1;
  return r;
}

LaurentSeries LaurentSeries::inverse(int prec_cap) const {
  if (c_.empty()) throw InvZero("inverse: no nonzero coefficient visible");
  int v = lead_;
  FF cv_inv = k_->inv(c_[0]);
  if (c_.size() == 1 && is_exact()) {
    return monomial(k_, v_, cv_inv, -v);  // exact monomial inverse
  }
  long long rel = is_exact() ? static_cast<long long>(kExactPrec)
                             : static_cast<long long>(prec_) - v;
  long long result_prec = std::min<long long>(-v + rel, prec_cap);
  if (result_prec >= kExactPrec)
    throw Error("inverse of an exact series requires a precision cap");
  int m = int(result_prec + v);  // relative terms needed
  if (m < 0) throw PrecisionExhausted("inverse: no certified coefficients at this cap");
  std::vector<FF> b(m + 1, 0);
  b[0] = 1;
  for (int j = 1; j <= m; ++j) {
    FF acc = 0;
    int jmax = std::min(j, int(c_.size()) - 1);
    for (int i = 1; i <= jmax; ++i)
      acc = k_->add(acc, k_->mul(k_->mul(c_[i], cv_inv), b[j - i]));
    b[j] = k_->neg(acc);
  }
  for (auto& x : b) x = k_->mul(x, cv_inv);
  return LaurentSeries(k_, v_, -v, int(result_prec), std::move(b));
}

LaurentSeries LaurentSeries::q_power() const {
  const int q = k_->q();
  long long p = is_exact() ? kExactPrec : static_cast<long long>(prec_) * q + (q - 1);
  if (c_.empty()) return zero_to(k_, v_, clamp_prec(p));
  long long new_lead = static_cast<long long>(lead_) * q;
  if (new_lead > clamp_prec(p)) return zero_to(k_, v_, clamp_prec(p));
  std::vector<FF> c((c_.size() - 1) * q + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) c[i * q] = k_->pow(c_[i], q);
  return LaurentSeries(k_, v_, int(new_lead), clamp_prec(p), std::move(c));
}

LaurentSeries LaurentSeries::truncated(int p) const {
  if (p >= prec_) return *this;
  LaurentSeries r = *this;
  r.prec_ = p;
  if (r.lead_ > p) {
    r.c_.clear();
    r.lead_ = p + 1;
  } else if (int(r.c_.size()) > p - r.lead_ + 1) {
    r.c_.resize(p - r.lead_ + 1);
  }
  r.canonicalize();
  return r;
}

LaurentSeries LaurentSeries::divided_by_tq_minus_t(int Q, int prec_cap) const {
  // x / (v^Q - v) = shift(x, Q) * sum_k v^{-k(Q-1)}
  LaurentSeries w = shifted_tpow(-Q);
  long long p = std::min<long long>(w.prec_, prec_cap);
  if (p >= kExactPrec)
    throw Error("division of an exact series by v^Q - v requires a precision cap");
  if (w.c_.empty()) return zero_to(k_, v_, int(p));
  int lo = w.lead_;
  if (lo > p) return zero_to(k_, v_, int(p));
  std::vector<FF> y(size_t(p - lo + 1), 0);
  for (int i = 0; i < int(y.size()); ++i) {
    FF acc = (i < int(w.c_.size())) ? w.c_[i] : FF(0);
    int prev = i - (Q - 1);
    if (prev >= 0) acc = k_->add(acc, y[prev]);
    y[i] = acc;
  }
  return LaurentSeries(k_, v_, lo, int(p), std::move(y));
}

void LaurentSeries::require_prec(int p) const {
  if (prec_ < p)
    throw PrecisionExhausted("series certified only to precision " + std::to_string(prec_) +
                             ", need " + std::to_string(p));
}

bool LaurentSeries::equal_to_prec(const LaurentSeries& o, int through) const {
  require_prec(through);
  o.require_prec(through);
  int lo = std::min(val_lower_bound(), o.val_lower_bound());
  for (int i = lo; i <= through; ++i)
    if (coeff(i) != o.coeff(i)) return false;
  return true;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
  return same_field(k_, o.k_) && v_ == o.v_ && lead_ == o.lead_ && prec_ == o.prec_ && c_ == o.c_;
}

std::string LaurentSeries::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const int e = k_->e();
  for (int i = 0; i < int(c_.size()); ++i) {
    FF c = c_[i];
    if (c == 0) continue;
    int expo = -(lead_ + i);
    if (!first) os << " + ";
    first = false;
    bool unit = (c == 1);
    if (!unit || expo == 0) {
      if (e == 1) {
        os << int(c);
      } else {
        auto cs = k_->coords(c);
        os << '[';
        for (size_t j = 0; j < cs.size(); ++j) os << (j ? "," : "") << cs[j];
        os << ']';
      }
      if (expo != 0) os << '*';
    }
    if (expo != 0) {
      os << var_name(v_);
      if (expo != 1) os << '^' << expo;
    }
  }
  return os.str();
}

// ------------------------------- TruncSeries -------------------------------

TruncSeries TruncSeries::one(const FieldPtr& k, int n) {
  TruncSeries r(k, n);
  if (n > 0) r.c_[0] = 1;
  return r;
}

bool TruncSeries::is_one() const {
  if (c_.empty()) return true;
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  int n = std::min(modulus(), o.modulus());
  TruncSeries r(k_, n);
  for (int i = 0; i < n; ++i) r.c_[i] = k_->add(c_[i], o.c_[i]);
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  int n = std::min(modulus(), o.modulus());
  TruncSeries r(k_, n);
  for (int i = 0; i < n; ++i) r.c_[i] = k_->sub(c_[i], o.c_[i]);
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  int n = std::min(modulus(), o.modulus());
  TruncSeries r(k_, n);
  for (int i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j + i < n; ++j)
      r.c_[i + j] = k_->add(r.c_[i + j], k_->mul(c_[i], o.c_[j]));
  }
  return r;
}

TruncSeries TruncSeries::scaled(FF s) const {
  TruncSeries r(k_, modulus());
  for (int i = 0; i < modulus(); ++i) r.c_[i] = k_->mul(c_[i], s);
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (c_.empty() || c_[0] == 0) throw InvZero("TruncSeries inverse: constant term not a unit");
  int n = modulus();
  TruncSeries r(k_, n);
  FF c0i = k_->inv(c_[0]);
  r.c_[0] = c0i;
  for (int j = 1; j < n; ++j) {
    FF acc = 0;
    for (int i = 1; i <= j; ++i) acc = k_->add(acc, k_->mul(c_[i], r.c_[j - i]));
    r.c_[j] = k_->neg(k_->mul(acc, c0i));
  }
  return r;
}

TruncSeries TruncSeries::truncated(int n) const {
  std::vector<FF> c(c_.begin(), c_.begin() + std::min<size_t>(n, c_.size()));
  c.resize(n, 0);
  return TruncSeries(k_, std::move(c));
}

int TruncSeries::agree_prefix(const TruncSeries& o) const {
  int n = std::min(modulus(), o.modulus());
  for (int i = 0; i < n; ++i)
    if (c_[i] != o.c_[i]) return i;
  return n;
}

std::string TruncSeries::str() const {
  std::ostringstream os;
  os << '[';
  const int e = k_ ? k_->e() : 1;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    if (e == 1) {
      os << int(c_[i]);
    } else {
      auto cs = k_->coords(c_[i]);
      os << '[';
      for (size_t j = 0; j < cs.size(); ++j) os << (j ? "," : "") << cs[j];
      os << ']';
    }
  }
  os << ']';
  return os.str();
}

// --------------------------- transport t -> T ------------------------------

LaurentSeries iota(const LaurentSeries& x) {
  if (x.var() != Var::t) throw Error("iota: expected a series in t");
  // coefficient-wise transport: identical data, retagged variable
  return LaurentSeries(x.field(), Var::T, x.lead(), x.prec(), x.stored_coeffs());
}

LaurentSeries iota(const Poly& p_in_t) {
  if (p_in_t.var() != Var::t) throw Error("iota: expected a polynomial in t");
  return LaurentSeries::from_poly(p_in_t.retag(Var::T));
}

IotaSplit iota_split(const LaurentSeries& x_in_T, int N) {
  if (x_in_T.var() != Var::T) throw Error("iota_split: expected a series in T");
  x_in_T.require_prec(N - 1);
  const FieldPtr& k = x_in_T.field();
  std::vector<FF> poly;
  int lo = x_in_T.val_lower_bound();
  if (lo < 0) {
    poly.assign(-lo + 1, 0);
    for (int i = lo; i < 0; ++i) poly[-i] = x_in_T.coeff(i);
  }
  std::vector<FF> tail(N, 0);
  for (int i = 0; i < N; ++i) tail[i] = x_in_T.coeff(i);
  return IotaSplit{Poly(k, Var::T, std::move(poly)), TruncSeries(k, std::move(tail))};
}

LaurentSeries monic_normalize(const LaurentSeries& x) {
  int v = x.val();  // throws InvZero on zero input
  return x.scaled(x.field()->inv(x.coeff(v)));
}

}  // namespace dlv
