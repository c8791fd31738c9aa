#include "dlv/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dlv {

namespace {

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (!same_field(a->field(), b->field()) || a->rank() != b->rank()) return false;
  return a->modulus() == b->modulus();
}

// Pseudo-remainder sequence test: gcd_y(a, b) over k(t) is a unit.
bool y_gcd_is_trivial(const FieldPtr& k, std::vector<Poly> a, std::vector<Poly> b) {
  auto ydeg = [](const std::vector<Poly>& f) {
    int d = int(f.size()) - 1;
    while (d >= 0 && f[d].is_zero()) --d;
    return d;
  };
  auto strip_content = [&](std::vector<Poly>& f) {
    Poly c = Poly::zero(k, Var::t);
    for (const auto& x : f) c = gcd(c, x);
    if (c.degree() > 0)
      for (auto& x : f) x = x / c;
  };
  int da = ydeg(a), db = ydeg(b);
  while (db >= 0) {
    if (db == 0) return true;
    // pseudo-remainder of a by b
    int steps = da - db + 1;
    if (steps < 0) {
      std::swap(a, b);
      std::swap(da, db);
      continue;
    }
    Poly lb = b[db];
    for (int s = 0; s < steps; ++s) {
      int cur = ydeg(a);
      if (cur < db) break;
      std::vector<Poly> na(std::max(a.size(), size_t(cur + 1)), Poly::zero(k, Var::t));
      for (int i = 0; i <= cur; ++i) na[i] = a[i] * lb;
      Poly top = a[cur];
      for (int j = 0; j <= db; ++j) na[cur - db + j] = na[cur - db + j] - top * b[j];
      na.resize(cur + 1);
      a = std::move(na);
    }
    strip_content(a);
    std::swap(a, b);
    da = ydeg(a);
    db = ydeg(b);
  }
  return false;  // gcd = a with ydeg(a) >= 1
}

}  // namespace

// ------------------------------- RingElement -------------------------------

RingElement::RingElement(RingPtr R, std::vector<Poly> coords)
    : R_(std::move(R)), c_(std::move(coords)) {
  if (int(c_.size()) != R_->rank()) throw Error("RingElement: wrong coordinate count");
}

RingElement RingElement::zero(const RingPtr& R) {
  return RingElement(R, std::vector<Poly>(R->rank(), Poly::zero(R->field(), Var::t)));
}

RingElement RingElement::one(const RingPtr& R) {
  auto c = std::vector<Poly>(R->rank(), Poly::zero(R->field(), Var::t));
  c[0] = Poly::one(R->field(), Var::t);
  return RingElement(R, std::move(c));
}

RingElement RingElement::from_poly(const RingPtr& R, const Poly& p_in_t) {
  auto c = std::vector<Poly>(R->rank(), Poly::zero(R->field(), Var::t));
  c[0] = p_in_t;
  return RingElement(R, std::move(c));
}

bool RingElement::is_zero() const {
  for (const auto& p : c_)
    if (!p.is_zero()) return false;
  return true;
}

RingElement RingElement::operator+(const RingElement& o) const {
  if (!same_ring(R_, o.R_)) throw Error("RingElement add: mismatched rings");
  std::vector<Poly> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] = c[i] + o.c_[i];
  return RingElement(R_, std::move(c));
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator-() const {
  std::vector<Poly> c(c_);
  for (auto& p : c) p = -p;
  return RingElement(R_, std::move(c));
}

RingElement RingElement::operator*(const RingElement& o) const {
  if (!same_ring(R_, o.R_)) throw Error("RingElement mul: mismatched rings");
  const int d = R_->rank();
  std::vector<Poly> prod(2 * d - 1, Poly::zero(R_->field(), Var::t));
  for (int i = 0; i < d; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) prod[i + j] = prod[i + j] + c_[i] * o.c_[j];
  }
  std::vector<Poly> out(d, Poly::zero(R_->field(), Var::t));
  for (int j = 0; j < 2 * d - 1; ++j) {
    if (prod[j].is_zero()) continue;
    if (j < d) {
      out[j] = out[j] + prod[j];
    } else {
      const auto& red = R_->y_power_coords(j);
      for (int l = 0; l < d; ++l) out[l] = out[l] + prod[j] * red[l];
    }
  }
  return RingElement(R_, std::move(out));
}

RingElement RingElement::scaled_poly(const Poly& p) const {
  std::vector<Poly> c(c_);
  for (auto& x : c) x = x * p;
  return RingElement(R_, std::move(c));
}

RingElement RingElement::q_power() const {
  const int d = R_->rank();
  const int q = R_->field()->q();
  std::vector<Poly> out(d, Poly::zero(R_->field(), Var::t));
  for (int j = 0; j < d; ++j) {
    if (c_[j].is_zero()) continue;
    Poly cq = c_[j].q_power();
    if (j == 0) {
      out[0] = out[0] + cq;
    } else {
      const auto& red = R_->y_power_coords(j * q);
      for (int l = 0; l < d; ++l) out[l] = out[l] + cq * red[l];
    }
  }
  return RingElement(R_, std::move(out));
}

int RingElement::t_degree() const {
  int d = Poly::kNegInf;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

bool RingElement::operator==(const RingElement& o) const {
  return same_ring(R_, o.R_) && c_ == o.c_;
}

std::string RingElement::str() const {
  std::ostringstream os;
  bool first = true;
  const FieldPtr& k = R_->field();
  for (int j = int(c_.size()) - 1; j >= 0; --j) {
    const Poly& p = c_[j];
    for (int a = p.degree(); a >= 0; --a) {
      FF c = p.coeff(a);
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      bool unit = (c == 1);
      bool has_var = (a > 0 || j > 0);
      if (!unit || !has_var) {
        if (k->e() == 1) {
          os << int(c);
        } else {
          auto cs = k->coords(c);
          os << '[';
          for (size_t i = 0; i < cs.size(); ++i) os << (i ? "," : "") << cs[i];
          os << ']';
        }
        if (has_var) os << '*';
      }
      if (a > 0) {
        os << 't';
        if (a > 1) os << '^' << a;
        if (j > 0) os << '*';
      }
      if (j > 0) {
        os << 'y';
        if (j > 1) os << '^' << j;
      }
    }
  }
  return first ? "0" : os.str();
}

// -------------------------------- BaseRing ---------------------------------

RingPtr BaseRing::make(const FieldPtr& k, const std::vector<Poly>& g) {
  std::vector<Poly> gg = g;
  while (!gg.empty() && gg.back().is_zero()) gg.pop_back();
  int d = int(gg.size()) - 1;
  if (d < 1) throw Error("ring_make: extension polynomial must have positive y-degree");
  if (!gg[d].is_one()) throw Error("ring_make: extension polynomial must be monic in y");
  for (const auto& c : gg)
    if (c.var() != Var::t || !same_field(c.field(), k))
      throw Error("ring_make: coefficients must be polynomials in t over k");
  if (d > 1) {
    // derivative in y
    std::vector<Poly> dg(d, Poly::zero(k, Var::t));
    for (int j = 1; j <= d; ++j) dg[j - 1] = gg[j].scaled(k->from_int(j));
    if (!y_gcd_is_trivial(k, gg, dg))
      throw Error("ring_make: extension polynomial is not squarefree over k(t)");
  }

  auto R = std::shared_ptr<BaseRing>(new BaseRing());
  R->k_ = k;
  R->d_ = d;
  R->g_ = gg;

  const int jmax = std::max(2 * d - 2, k->q() * (d - 1));
  R->ytab_.reserve(jmax + 1);
  // y^0 = 1
  {
    std::vector<Poly> c(d, Poly::zero(k, Var::t));
    c[0] = Poly::one(k, Var::t);
    R->ytab_.push_back(std::move(c));
  }
  for (int j = 1; j <= jmax; ++j) {
    // y^(j) = y * y^(j-1), reduced via y^d = -(g_0 + ... + g_{d-1} y^{d-1})
    const auto& prev = R->ytab_.back();
    std::vector<Poly> cur(d, Poly::zero(k, Var::t));
    Poly top = (d >= 1) ? prev[d - 1] : Poly::zero(k, Var::t);
    for (int l = d - 1; l >= 1; --l) cur[l] = prev[l - 1];
    // subtract top * g_l from each coordinate
    if (!top.is_zero())
      for (int l = 0; l < d; ++l) cur[l] = cur[l] - top * gg[l];
    R->ytab_.push_back(std::move(cur));
  }

  int drop = 0;
  for (int j = 0; j < d; ++j) {
    const auto& row = R->ytab_[size_t(j) * k->q()];
    for (const auto& p : row) drop = std::max(drop, p.degree());
  }
  R->tau_drop_ = std::max(drop, 0);
  return R;
}

RingPtr BaseRing::make_kt(const FieldPtr& k) {
  // g = y
  std::vector<Poly> g = {Poly::zero(k, Var::t), Poly::one(k, Var::t)};
  return make(k, g);
}

const std::vector<Poly>& BaseRing::y_power_coords(int j) const {
  if (j < 0 || j > table_degree()) throw Error("y_power_coords: index beyond reduction table");
  return ytab_[j];
}

RingElement BaseRing::y() const {
  auto self = shared_from_this();
  std::vector<Poly> c(d_, Poly::zero(k_, Var::t));
  if (d_ > 1)
    c[1] = Poly::one(k_, Var::t);
  // d == 1: y = 0 in k[t] (g = y)
  return RingElement(self, std::move(c));
}

std::string BaseRing::extension_str() const {
  if (d_ == 1) return "none";
  RingElement lower(shared_from_this(), std::vector<Poly>(g_.begin(), g_.begin() + d_));
  std::ostringstream os;
  os << 'y';
  if (d_ > 1) os << '^' << d_;
  std::string rest = lower.str();
  if (rest != "0") os << " + " << rest;
  return os.str();
}

// ------------------------------ maximal ideals ------------------------------

std::string MaxIdeal::str() const {
  std::ostringstream os;
  os << "(" << P.str();
  if (fqp_deg(h) >= 1 && !(fqp_deg(h) == 1 && h[0].is_zero())) {
    os << ", ";
    bool first = true;
    for (int j = fqp_deg(h); j >= 0; --j) {
      const Poly& c = h[j];
      if (c.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      if (!c.is_one() || j == 0) {
        os << c.str();
        if (j > 0) os << '*';
      }
      if (j > 0) {
        os << 'y';
        if (j > 1) os << '^' << j;
      }
    }
  }
  os << ")";
  return os.str();
}

std::vector<MaxIdeal> max_ideals_up_to(const RingPtr& R, int D) {
  if (D < 1) throw Error("max_ideals_up_to: degree bound must be >= 1");
  const FieldPtr& k = R->field();
  std::vector<MaxIdeal> out;
  for (const Poly& P : irreducibles_up_to(k, Var::t, D)) {
    FqCtx Fp(k, P);
    FqPoly gP;
    for (const Poly& c : R->modulus()) gP.push_back(Fp.reduce(c));
    fqp_strip(gP);
    auto factors = fq_factor(Fp, gP);
    for (auto& fm : factors) {
      int degk = P.degree() * fqp_deg(fm.first);
      if (degk <= D) out.push_back(MaxIdeal{P, fm.first, degk});
    }
  }
  std::sort(out.begin(), out.end(), [](const MaxIdeal& a, const MaxIdeal& b) {
    if (a.deg_k != b.deg_k) return a.deg_k < b.deg_k;
    if (a.P != b.P) return poly_less(a.P, b.P);
    int da = fqp_deg(a.h), db = fqp_deg(b.h);
    if (da != db) return da < db;
    for (int i = 0; i <= da; ++i)
      if (!(a.h[i] == b.h[i])) return poly_less(a.h[i], b.h[i]);
    return false;
  });
  return out;
}

Poly module_size(const FiniteKtModule& M) { return M.t_mat.char_poly(Var::T); }

// ------------------------------ residue fields ------------------------------

ResidueField::ResidueField(RingPtr R, MaxIdeal m)
    : R_(std::move(R)), m_(std::move(m)), Fp_(R_->field(), m_.P) {
  dim_ = m_.deg_k;
}

ResidueField::Elem ResidueField::zero() const { return Elem(fqp_deg(m_.h), Fp_.zero()); }

ResidueField::Elem ResidueField::one() const {
  Elem e = zero();
  e[0] = Fp_.one();
  return e;
}

ResidueField::Elem ResidueField::reduce(const RingElement& r) const {
  FqPoly v;
  for (const Poly& c : r.coords()) v.push_back(Fp_.reduce(c));
  v = fqp_rem(Fp_, std::move(v), m_.h);
  v.resize(fqp_deg(m_.h), Fp_.zero());
  return v;
}

ResidueField::Elem ResidueField::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

ResidueField::Elem ResidueField::mul(const Elem& a, const Elem& b) const {
  FqPoly r = fqp_rem(Fp_, fqp_mul(Fp_, a, b), m_.h);
  r.resize(fqp_deg(m_.h), Fp_.zero());
  return r;
}

ResidueField::Elem ResidueField::mul_t(const Elem& a) const {
  Elem r = a;
  Poly t = Poly::variable(R_->field(), Var::t);
  for (auto& c : r) c = Fp_.reduce(c * t);
  return r;
}

ResidueField::Elem ResidueField::frobenius(const Elem& a) const {
  const int q = R_->field()->q();
  FqPoly base = a;
  fqp_strip(base);
  FqPoly r = {Fp_.one()};
  int n = q;
  FqPoly acc = base;
  while (n) {
    if (n & 1) r = fqp_rem(Fp_, fqp_mul(Fp_, r, acc), m_.h);
    if (n >>= 1) acc = fqp_rem(Fp_, fqp_mul(Fp_, acc, acc), m_.h);
  }
  // reduce element coefficients by Frobenius of Fp too: the q-power of a
  // coefficient c(t) mod P is c(t)^q mod P, already handled by fqp_mul chains
  r.resize(fqp_deg(m_.h), Fp_.zero());
  return r;
}

std::vector<FF> ResidueField::to_coords(const Elem& a) const {
  const int dp = m_.P.degree();
  const int dh = fqp_deg(m_.h);
  std::vector<FF> v(size_t(dp) * dh, 0);
  for (int b = 0; b < dh; ++b)
    for (int t = 0; t < dp; ++t) v[size_t(b) * dp + t] = b < int(a.size()) ? a[b].coeff(t) : FF(0);
  return v;
}

ResidueField::Elem ResidueField::from_coords(const std::vector<FF>& v) const {
  const int dp = m_.P.degree();
  const int dh = fqp_deg(m_.h);
  Elem e(dh, Fp_.zero());
  for (int b = 0; b < dh; ++b) {
    std::vector<FF> c(v.begin() + size_t(b) * dp, v.begin() + size_t(b + 1) * dp);
    e[b] = Poly(R_->field(), Var::t, std::move(c));
  }
  return e;
}

ResidueField::Elem ResidueField::basis_elem(int i) const {
  std::vector<FF> v(dim_, 0);
  v[i] = 1;
  return from_coords(v);
}

MatrixK ResidueField::t_matrix() const {
  MatrixK M(R_->field(), dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    auto col = to_coords(mul_t(basis_elem(i)));
    for (int r = 0; r < dim_; ++r) M.at(r, i) = col[r];
  }
  return M;
}

MatrixK ResidueField::tau_matrix() const {
  MatrixK M(R_->field(), dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    auto col = to_coords(frobenius(basis_elem(i)));
    for (int r = 0; r < dim_; ++r) M.at(r, i) = col[r];
  }
  return M;
}

MatrixK ResidueField::mul_matrix(const RingElement& r) const {
  Elem rr = reduce(r);
  MatrixK M(R_->field(), dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    auto col = to_coords(mul(rr, basis_elem(i)));
    for (int rr2 = 0; rr2 < dim_; ++rr2) M.at(rr2, i) = col[rr2];
  }
  return M;
}

Poly ResidueField::size_poly() const {
  return m_.P.retag(Var::T).pow(uint64_t(fqp_deg(m_.h)));
}

// ---------------------------------- KInf -----------------------------------

KInf::KInf(RingPtr R, std::vector<LaurentSeries> coords)
    : R_(std::move(R)), c_(std::move(coords)) {
  if (int(c_.size()) != R_->rank()) throw Error("KInf: wrong coordinate count");
}

KInf KInf::zero(const RingPtr& R) {
  return KInf(R, std::vector<LaurentSeries>(R->rank(),
                                            LaurentSeries::zero(R->field(), Var::t)));
}

KInf KInf::one(const RingPtr& R) {
  auto c = std::vector<LaurentSeries>(R->rank(), LaurentSeries::zero(R->field(), Var::t));
  c[0] = LaurentSeries::one(R->field(), Var::t);
  return KInf(R, std::move(c));
}

KInf KInf::from_ring(const RingElement& r) {
  std::vector<LaurentSeries> c;
  for (const Poly& p : r.coords()) c.push_back(LaurentSeries::from_poly(p));
  return KInf(r.ring(), std::move(c));
}

KInf KInf::monomial(const RingPtr& R, int tpow, int j) {
  auto c = std::vector<LaurentSeries>(R->rank(), LaurentSeries::zero(R->field(), Var::t));
  c[j] = LaurentSeries::monomial(R->field(), Var::t, 1, -tpow);
  return KInf(R, std::move(c));
}

KInf KInf::operator+(const KInf& o) const {
  if (!same_ring(R_, o.R_)) throw Error("KInf add: mismatched rings");
  std::vector<LaurentSeries> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] = c[i] + o.c_[i];
  return KInf(R_, std::move(c));
}

KInf KInf::operator-(const KInf& o) const { return *this + (-o); }

KInf KInf::operator-() const {
  std::vector<LaurentSeries> c(c_);
  for (auto& s : c) s = -s;
  return KInf(R_, std::move(c));
}

KInf KInf::operator*(const KInf& o) const {
  if (!same_ring(R_, o.R_)) throw Error("KInf mul: mismatched rings");
  const int d = R_->rank();
  std::vector<LaurentSeries> prod(2 * d - 1, LaurentSeries::zero(R_->field(), Var::t));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) prod[i + j] = prod[i + j] + c_[i] * o.c_[j];
  std::vector<LaurentSeries> out(d, LaurentSeries::zero(R_->field(), Var::t));
  for (int j = 0; j < 2 * d - 1; ++j) {
    if (j < d) {
      out[j] = out[j] + prod[j];
    } else {
      const auto& red = R_->y_power_coords(j);
      for (int l = 0; l < d; ++l)
        out[l] = out[l] + prod[j] * LaurentSeries::from_poly(red[l]);
    }
  }
  return KInf(R_, std::move(out));
}

KInf KInf::scaled(FF s) const {
  std::vector<LaurentSeries> c(c_);
  for (auto& x : c) x = x.scaled(s);
  return KInf(R_, std::move(c));
}

KInf KInf::mul_series(const LaurentSeries& s) const {
  std::vector<LaurentSeries> c(c_);
  for (auto& x : c) x = x * s;
  return KInf(R_, std::move(c));
}

KInf KInf::mul_ring(const RingElement& r) const { return *this * KInf::from_ring(r); }

KInf KInf::tau() const {
  const int d = R_->rank();
  const int q = R_->field()->q();
  std::vector<LaurentSeries> out(d, LaurentSeries::zero(R_->field(), Var::t));
  for (int j = 0; j < d; ++j) {
    LaurentSeries xq = c_[j].q_power();
    if (j == 0) {
      out[0] = out[0] + xq;
    } else {
      const auto& red = R_->y_power_coords(j * q);
      for (int l = 0; l < d; ++l)
        out[l] = out[l] + xq * LaurentSeries::from_poly(red[l]);
    }
  }
  return KInf(R_, std::move(out));
}

KInf KInf::tau_pow(int j) const {
  KInf r = *this;
  for (int i = 0; i < j; ++i) r = r.tau();
  return r;
}

KInf KInf::shifted_tpow(int m) const {
  std::vector<LaurentSeries> c(c_);
  for (auto& x : c) x = x.shifted_tpow(m);
  return KInf(R_, std::move(c));
}

KInf KInf::divided_by_tq_minus_t(int Q, int prec_cap) const {
  std::vector<LaurentSeries> c(c_);
  for (auto& x : c) x = x.divided_by_tq_minus_t(Q, prec_cap);
  return KInf(R_, std::move(c));
}

KInf KInf::truncated(int p) const {
  std::vector<LaurentSeries> c(c_);
  for (auto& x : c) x = x.truncated(p);
  return KInf(R_, std::move(c));
}

int KInf::val_lower_bound() const {
  int v = kExactPrec + 1;
  for (const auto& x : c_) v = std::min(v, x.val_lower_bound());
  return v;
}

int KInf::min_prec() const {
  int p = kExactPrec;
  for (const auto& x : c_) p = std::min(p, x.prec());
  return p;
}

bool KInf::is_exact() const { return min_prec() >= kExactPrec; }

bool KInf::is_zero_to_prec() const {
  for (const auto& x : c_)
    if (!x.is_zero_to_prec()) return false;
  return true;
}

void KInf::require_prec(int p) const {
  for (const auto& x : c_) x.require_prec(p);
}

bool KInf::equal_to_prec(const KInf& o, int through) const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].equal_to_prec(o.c_[i], through)) return false;
  return true;
}

KInf KInf::reduced_mod_R() const {
  std::vector<LaurentSeries> c;
  for (const auto& x : c_) {
    x.require_prec(0);
    const auto& st = x.stored_coeffs();
    int lead = x.val_lower_bound();
    int lo = std::max(1, lead);
    std::vector<FF> cc;
    for (int idx = lo; idx < lead + int(st.size()); ++idx) cc.push_back(st[idx - lead]);
    c.push_back(LaurentSeries(x.field(), Var::t, lo, x.prec(), std::move(cc)));
  }
  return KInf(R_, std::move(c));
}

std::string KInf::str() const {
  std::ostringstream os;
  for (int j = 0; j < int(c_.size()); ++j) {
    if (j) os << " + y^" << j << "*(";
    os << c_[j].str();
    if (j) os << ")";
  }
  return os.str();
}

// --------------------------- RingElement parsing ----------------------------

RingElement parse_ring_element(const RingPtr& R, const std::string& text) {
  const FieldPtr& k = R->field();
  // tokenize a sum of product terms over factors: coeff | t^a | y^b
  RingElement result = RingElement::zero(R);
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto integer = [&]() -> long long {
    skip();
    size_t s = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (s == i) throw ConfigError("ring element parse: expected integer");
    return std::stoll(text.substr(s, i - s));
  };
  bool negate = false;
  skip();
  if (i < text.size() && text[i] == '-') {
    ++i;
    negate = true;
  }
  while (true) {
    FF coeff = k->one();
    int tpow = 0, ypow = 0;
    bool saw = false;
    while (true) {
      skip();
      if (i >= text.size()) break;
      char c = text[i];
      if (c == '[') {
        ++i;
        std::vector<int> coords;
        skip();
        if (i < text.size() && text[i] != ']') {
          coords.push_back(int(integer()));
          skip();
          while (i < text.size() && text[i] == ',') {
            ++i;
            coords.push_back(int(integer()));
            skip();
          }
        }
        if (i >= text.size() || text[i] != ']')
          throw ConfigError("ring element parse: unterminated coordinate list");
        ++i;
        if (int(coords.size()) != k->e())
          throw ConfigError("ring element parse: coordinate list length must equal e");
        for (int& x : coords) x = ((x % k->p()) + k->p()) % k->p();
        coeff = k->mul(coeff, k->from_coords(coords));
        saw = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = k->mul(coeff, k->from_int(integer()));
        saw = true;
      } else if (c == 't' || c == 'y') {
        ++i;
        int p = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          p = int(integer());
        }
        if (c == 't') tpow += p;
        else ypow += p;
        saw = true;
      } else {
        throw ConfigError(std::string("ring element parse: unexpected character '") + c + "'");
      }
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!saw) throw ConfigError("ring element parse: empty term");
    // build coeff * t^tpow * y^ypow
    Poly tp = Poly::constant(k, Var::t, negate ? k->neg(coeff) : coeff).shifted(tpow);
    RingElement term = RingElement::from_poly(R, tp);
    if (ypow > 0) {
      RingElement ye = R->y();
      for (int s = 0; s < ypow; ++s) term = term * ye;
    }
    result = result + term;
    skip();
    if (i >= text.size()) break;
    char op = text[i];
    if (op == '+') negate = false;
    else if (op == '-') negate = true;
    else throw ConfigError("ring element parse: expected '+' or '-'");
    ++i;
  }
  return result;
}

}  // namespace dlv
