#include "dlv/factor.hpp"

#include <algorithm>

namespace dlv {

// -------------------------- fast scan over GF(q) ---------------------------
// Raw coefficient buffers (low order first, explicit length) to keep the
// irreducibility scan allocation-free.
namespace {

struct RawPolyOps {
  const Field* k;

  static int deg(const std::vector<FF>& a) {
    int d = int(a.size()) - 1;
    while (d >= 0 && a[d] == 0) --d;
    return d;
  }

  void rem_inplace(std::vector<FF>& a, const std::vector<FF>& f, int df) const {
    // f monic of degree df
    for (int i = deg(a); i >= df; --i) {
      FF c = a[i];
      if (c == 0) continue;
      a[i] = 0;
      for (int j = 0; j < df; ++j) a[i - df + j] = k->sub(a[i - df + j], k->mul(c, f[j]));
    }
  }

  std::vector<FF> mulmod(const std::vector<FF>& a, const std::vector<FF>& b,
                         const std::vector<FF>& f, int df) const {
    std::vector<FF> r(2 * df, 0);
    int da = deg(a), db = deg(b);
    for (int i = 0; i <= da; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j <= db; ++j) r[i + j] = k->add(r[i + j], k->mul(a[i], b[j]));
    }
    rem_inplace(r, f, df);
    r.resize(df);
    return r;
  }

  std::vector<FF> powmod(std::vector<FF> base, uint64_t n, const std::vector<FF>& f,
                         int df) const {
    std::vector<FF> r(df, 0);
    r[0] = 1;
    while (n) {
      if (n & 1) r = mulmod(r, base, f, df);
      if (n >>= 1) base = mulmod(base, base, f, df);
    }
    return r;
  }

  // gcd(a, f) is trivial (a unit) ?
  bool gcd_is_trivial(std::vector<FF> a, std::vector<FF> b) const {
    int db = deg(b);
    while (db >= 0) {
      if (db == 0) return true;
      // a mod b
      FF linv = k->inv(b[db]);
      for (int i = deg(a); i >= db; --i) {
        if (i >= int(a.size()) || a[i] == 0) continue;
        FF c = k->mul(a[i], linv);
        a[i] = 0;
        for (int j = 0; j < db; ++j) a[i - db + j] = k->sub(a[i - db + j], k->mul(c, b[j]));
      }
      a.swap(b);
      db = deg(b);
    }
    return false;  // b == 0: gcd = a, nontrivial here since deg a >= 1
  }
};

bool raw_is_irreducible(const Field* k, const std::vector<FF>& f, int n) {
  if (n <= 0) return false;
  if (n == 1) return true;
  RawPolyOps ops{k};
  const int q = k->q();
  std::vector<FF> h(n, 0);
  if (n > 1) h[1] = 1;  // u
  std::vector<FF> hx(n, 0);
  for (int i = 1; i <= n / 2; ++i) {
    h = ops.powmod(h, q, f, n);  // u^(q^i) mod f
    hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = k->sub(hx[1], 1);  // h - u
    if (RawPolyOps::deg(hx) < 0) return false;  // u^(q^i) = u: factors of degree | i
    if (!ops.gcd_is_trivial(hx, f)) return false;
  }
  return true;
}

}  // namespace

bool is_irreducible(const Poly& f) {
  if (f.is_zero()) return false;
  Poly m = f.monic();
  std::vector<FF> c = m.coeffs();
  return raw_is_irreducible(f.field().get(), c, m.degree());
}

std::vector<Poly> irreducibles_up_to(const FieldPtr& k, Var v, int d) {
  if (d < 1) throw Error("irreducibles_up_to: degree bound must be >= 1");
  std::vector<Poly> out;
  const int q = k->q();
  for (int n = 1; n <= d; ++n) {
    long long count = 1;
    for (int i = 0; i < n; ++i) count *= q;
    std::vector<FF> c(n + 1, 0);
    c[n] = 1;
    std::vector<Poly> level;
    for (long long code = 0; code < count; ++code) {
      long long x = code;
      for (int i = 0; i < n; ++i) {
        c[i] = FF(x % q);
        x /= q;
      }
      if (n == 1 || (c[0] != 0 && raw_is_irreducible(k.get(), c, n))) {
        level.emplace_back(k, v, c);
      }
    }
    std::sort(level.begin(), level.end(), poly_less);
    for (auto& p : level) out.push_back(std::move(p));
  }
  return out;
}

// ------------------------------ quotient field -----------------------------

FqCtx::FqCtx(FieldPtr k_, Poly P_) : k(std::move(k_)), P(std::move(P_)) {
  if (!P.is_monic() || P.degree() < 1) throw Error("FqCtx: modulus must be monic of degree >= 1");
  card = 1;
  for (int i = 0; i < P.degree(); ++i) card *= k->q();
}

Poly FqCtx::inv(const Poly& a) const {
  if (a.is_zero()) throw Error("FqCtx: inverse of zero");
  // extended Euclid on (P, a)
  Poly r0 = P, r1 = reduce(a);
  Poly s0 = zero(), s1 = one();
  while (!r1.is_zero()) {
    auto [q_, r2] = r0.divrem(r1);
    Poly s2 = s0 - q_ * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd = unit constant since P irreducible
  return reduce(s0.scaled(k->inv(r0.leading())));
}

Poly FqCtx::pow(Poly a, long long n) const {
  Poly r = one();
  a = reduce(a);
  while (n) {
    if (n & 1) r = mul(r, a);
    if (n >>= 1) a = mul(a, a);
  }
  return r;
}

Poly FqCtx::from_index(long long n) const {
  std::vector<FF> c;
  const int q = k->q();
  while (n) {
    c.push_back(FF(n % q));
    n /= q;
  }
  return Poly(k, P.var(), std::move(c));
}

int fqp_deg(const FqPoly& f) {
  int d = int(f.size()) - 1;
  while (d >= 0 && f[d].is_zero()) --d;
  return d;
}

void fqp_strip(FqPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

FqPoly fqp_monic(const FqCtx& F, const FqPoly& f) {
  FqPoly r = f;
  fqp_strip(r);
  if (r.empty()) return r;
  Poly li = F.inv(r.back());
  for (auto& c : r) c = F.mul(c, li);
  return r;
}

FqPoly fqp_mul(const FqCtx& F, const FqPoly& a, const FqPoly& b) {
  int da = fqp_deg(a), db = fqp_deg(b);
  if (da < 0 || db < 0) return {};
  FqPoly r(da + db + 1, F.zero());
  for (int i = 0; i <= da; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j <= db; ++j) r[i + j] = F.reduce(r[i + j] + a[i] * b[j]);
  }
  fqp_strip(r);
  return r;
}

FqPoly fqp_rem(const FqCtx& F, FqPoly a, const FqPoly& b) {
  int db = fqp_deg(b);
  if (db < 0) throw Error("fqp_rem: zero divisor");
  Poly linv = F.inv(b[db]);
  for (int i = fqp_deg(a); i >= db; --i) {
    if (i >= int(a.size()) || a[i].is_zero()) continue;
    Poly c = F.mul(a[i], linv);
    a[i] = F.zero();
    for (int j = 0; j < db; ++j) a[i - db + j] = F.reduce(a[i - db + j] - c * b[j]);
  }
  fqp_strip(a);
  return a;
}

FqPoly fqp_div_exact(const FqCtx& F, FqPoly a, const FqPoly& b) {
  int db = fqp_deg(b);
  if (db < 0) throw Error("fqp_div: zero divisor");
  Poly linv = F.inv(b[db]);
  int da = fqp_deg(a);
  if (da < db) return {};
  FqPoly q(da - db + 1, F.zero());
  for (int i = da; i >= db; --i) {
    if (int(a.size()) <= i) continue;
    Poly c = F.mul(a[i], linv);
    if (c.is_zero()) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] = F.reduce(a[i - db + j] - c * b[j]);
  }
  return q;
}

FqPoly fqp_gcd(const FqCtx& F, FqPoly a, FqPoly b) {
  fqp_strip(a);
  fqp_strip(b);
  while (fqp_deg(b) >= 0) {
    FqPoly r = fqp_rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fqp_monic(F, a);
}

bool fqp_equal(const FqPoly& a, const FqPoly& b) {
  int da = fqp_deg(a), db = fqp_deg(b);
  if (da != db) return false;
  for (int i = 0; i <= da; ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

namespace {

FqPoly fqp_powmod(const FqCtx& F, FqPoly base, long long n, const FqPoly& f) {
  FqPoly r = {F.one()};
  base = fqp_rem(F, std::move(base), f);
  while (n) {
    if (n & 1) r = fqp_rem(F, fqp_mul(F, r, base), f);
    if (n >>= 1) base = fqp_rem(F, fqp_mul(F, base, base), f);
  }
  return r;
}

FqPoly fqp_derivative(const FqCtx& F, const FqPoly& f) {
  if (fqp_deg(f) < 1) return {};
  FqPoly r(f.size() - 1, F.zero());
  for (size_t i = 1; i < f.size(); ++i)
    r[i - 1] = F.reduce(f[i].scaled(F.k->from_int(long(i))));
  fqp_strip(r);
  return r;
}

// p-th root of an element of F = k[u]/(P): x -> x^p is a bijection with
// inverse x -> x^(card/p).
Poly fq_pth_root(const FqCtx& F, const Poly& c) {
  return F.pow(c, F.card / F.k->p());
}

// p-th root of a polynomial whose exponents are all multiples of p.
FqPoly fqp_pth_root(const FqCtx& F, const FqPoly& f) {
  const int p = F.k->p();
  FqPoly r((fqp_deg(f)) / p + 1, F.zero());
  for (int i = 0; i * p <= fqp_deg(f); ++i) r[i] = fq_pth_root(F, f[i * p]);
  fqp_strip(r);
  return r;
}

uint64_t splitmix64(uint64_t& s) {
  uint64_t z = (s += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Deterministic trial polynomial of degree < n over F.
FqPoly fqp_trial(const FqCtx& F, int n, uint64_t& state) {
  FqPoly w(n, F.zero());
  for (int i = 0; i < n; ++i) w[i] = F.from_index(long(splitmix64(state) % uint64_t(F.card)));
  fqp_strip(w);
  return w;
}

// Equal-degree splitting: f monic squarefree, all irreducible factors of
// degree dd.  Appends factors to out.
void fq_equal_degree(const FqCtx& F, const FqPoly& f, int dd, std::vector<FqPoly>& out,
                     uint64_t& state) {
  int n = fqp_deg(f);
  if (n == dd) {
    out.push_back(f);
    return;
  }
  FqPoly g;
  while (true) {
    FqPoly w = fqp_trial(F, n, state);
    if (fqp_deg(w) < 1) continue;
    FqPoly u;
    if (F.k->p() != 2) {
      // w^((card^dd - 1)/2) via the norm chain w^(1+card+...+card^(dd-1))
      FqPoly z = fqp_rem(F, w, f), acc = z;
      for (int i = 1; i < dd; ++i) {
        z = fqp_powmod(F, z, F.card, f);
        acc = fqp_rem(F, fqp_mul(F, acc, z), f);
      }
      u = fqp_powmod(F, acc, (F.card - 1) / 2, f);
      if (!u.empty()) u[0] = F.reduce(u[0] - F.one());
      fqp_strip(u);
    } else {
      // char 2: absolute trace sum_{i < s*dd} w^(2^i), card = 2^s
      int bits = 0;
      for (long long c = F.card; c > 1; c >>= 1) ++bits;
      FqPoly z = fqp_rem(F, w, f), acc = z;
      for (int i = 1; i < bits * dd; ++i) {
        z = fqp_rem(F, fqp_mul(F, z, z), f);
        if (fqp_deg(acc) < fqp_deg(z)) acc.resize(z.size(), F.zero());
        for (size_t j = 0; j < z.size(); ++j) acc[j] = F.reduce(acc[j] + z[j]);
        fqp_strip(acc);
      }
      u = acc;
    }
    g = fqp_gcd(F, u, f);
    if (fqp_deg(g) > 0 && fqp_deg(g) < n) break;
  }
  fq_equal_degree(F, g, dd, out, state);
  fq_equal_degree(F, fqp_monic(F, fqp_div_exact(F, f, g)), dd, out, state);
}

// Distinct-degree split of a monic squarefree f.
void fq_squarefree_factor(const FqCtx& F, FqPoly f, std::vector<FqPoly>& out, uint64_t& state) {
  FqPoly u = {F.zero(), F.one()};  // the outer variable
  FqPoly h = u;
  int dd = 0;
  while (fqp_deg(f) > 0) {
    ++dd;
    if (2 * dd > fqp_deg(f)) {
      out.push_back(f);
      break;
    }
    h = fqp_powmod(F, h, F.card, f);
    FqPoly hx = h;
    if (hx.size() < 2) hx.resize(2, F.zero());
    hx[1] = F.reduce(hx[1] - F.one());
    fqp_strip(hx);
    FqPoly g = fqp_gcd(F, hx, f);
    if (fqp_deg(g) > 0) {
      fq_equal_degree(F, g, dd, out, state);
      f = fqp_monic(F, fqp_div_exact(F, f, g));
      h = fqp_rem(F, h, f);
    }
  }
}

bool fqp_less(const FqPoly& a, const FqPoly& b) {
  int da = fqp_deg(a), db = fqp_deg(b);
  if (da != db) return da < db;
  for (int i = 0; i <= da; ++i) {
    if (!(a[i] == b[i])) return poly_less(a[i], b[i]);
  }
  return false;
}

}  // namespace

std::vector<std::pair<FqPoly, int>> fq_factor(const FqCtx& F, const FqPoly& f_in) {
  FqPoly f = f_in;
  fqp_strip(f);
  if (f.empty()) throw Error("fq_factor: zero polynomial");
  std::vector<std::pair<FqPoly, int>> out;
  if (fqp_deg(f) == 0) return out;
  f = fqp_monic(F, f);

  // squarefree decomposition in characteristic p
  uint64_t state = 0x5EEDC0DEu;
  struct Item {
    FqPoly f;
    int mult;
  };
  std::vector<Item> stack = {{f, 1}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    if (fqp_deg(it.f) == 0) continue;
    FqPoly d = fqp_derivative(F, it.f);
    if (fqp_deg(d) < 0) {
      // all exponents divisible by p
      stack.push_back({fqp_pth_root(F, it.f), it.mult * F.k->p()});
      continue;
    }
    FqPoly g = fqp_gcd(F, it.f, d);
    FqPoly w = fqp_monic(F, fqp_div_exact(F, it.f, g));
    int i = 1;
    while (fqp_deg(w) > 0) {
      FqPoly y = fqp_gcd(F, w, g);
      FqPoly fac = fqp_monic(F, fqp_div_exact(F, w, y));
      if (fqp_deg(fac) > 0) {
        std::vector<FqPoly> irr;
        fq_squarefree_factor(F, fac, irr, state);
        for (auto& pf : irr) out.emplace_back(std::move(pf), it.mult * i);
      }
      w = std::move(y);
      g = fqp_div_exact(F, g, w);
      ++i;
    }
    if (fqp_deg(g) > 0) stack.push_back({fqp_pth_root(F, g), it.mult * F.k->p()});
  }

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (!fqp_equal(a.first, b.first)) return fqp_less(a.first, b.first);
    return a.second < b.second;
  });
  // merge equal factors (can arise from the p-th power branch)
  std::vector<std::pair<FqPoly, int>> merged;
  for (auto& pr : out) {
    if (!merged.empty() && fqp_equal(merged.back().first, pr.first))
      merged.back().second += pr.second;
    else
      merged.push_back(std::move(pr));
  }
  return merged;
}

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
  if (f.is_zero()) throw Error("factor: zero polynomial");
  const FieldPtr& k = f.field();
  if (f.var() == Var::x) throw Error("factor: variable x is reserved for field moduli");
  // run in the trivial quotient k[x]/(x) ~= k, with f's coefficients constant
  FqCtx F(k, Poly::variable(k, Var::x));
  FqPoly g(f.degree() + 1, F.zero());
  for (int i = 0; i <= f.degree(); ++i) g[i] = Poly::constant(k, Var::x, f.coeff(i));
  auto fq = fq_factor(F, g);
  std::vector<std::pair<Poly, int>> out;
  for (auto& [fac, mult] : fq) {
    std::vector<FF> c(fac.size());
    for (size_t i = 0; i < fac.size(); ++i) c[i] = fac[i].is_zero() ? FF(0) : fac[i].coeff(0);
    out.emplace_back(Poly(k, f.var(), std::move(c)), mult);
  }
  return out;
}

}  // namespace dlv
