#include "dlv/gf.hpp"

#include <algorithm>

namespace dlv {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over Z/p, coefficient vectors without trailing zeros.
using ZpPoly = std::vector<int>;

void strip(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly mulmod_p(const ZpPoly& a, const ZpPoly& b, int p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  strip(r);
  return r;
}

// Remainder of a by monic b.
ZpPoly rem_p(ZpPoly a, const ZpPoly& b, int p) {
  strip(a);
  int db = int(b.size()) - 1;
  while (int(a.size()) - 1 >= db) {
    int shift = int(a.size()) - 1 - db;
    int c = a.back();
    for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    strip(a);
  }
  return a;
}

bool divides_p(const ZpPoly& d, const ZpPoly& f, int p) { return rem_p(f, d, p).empty(); }

// Trial division by all monic polynomials of degree 1..deg(f)/2.
bool irreducible_p(const ZpPoly& f, int p) {
  int n = int(f.size()) - 1;
  for (int dd = 1; dd <= n / 2; ++dd) {
    long long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      ZpPoly d(dd + 1, 0);
      d[dd] = 1;
      long long c = code;
      for (int i = 0; i < dd; ++i) {
        d[i] = int(c % p);
        c /= p;
      }
      if (divides_p(d, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

std::shared_ptr<const Field> Field::make(int p, int e) {
  if (!is_prime(p)) throw Error("field_make: p is not prime");
  if (e < 1) throw Error("field_make: extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxQ) throw Error("field_make: q = p^e exceeds the configured bound");
  }

  auto F = std::shared_ptr<Field>(new Field());
  F->p_ = p;
  F->e_ = e;
  F->q_ = int(q);

  // Modulus: degree-1 convention x for e = 1, else the lex-smallest monic
  // irreducible (coefficients compared low-degree-first).
  F->modulus_.assign(e + 1, 0);
  F->modulus_[e] = 1;
  if (e > 1) {
    std::vector<int> c(e, 0);
    bool found = false;
    while (!found) {
      ZpPoly f(c.begin(), c.end());
      f.push_back(1);
      if (irreducible_p(f, p)) {
        for (int i = 0; i < e; ++i) F->modulus_[i] = c[i];
        found = true;
        break;
      }
      // lexicographic successor: last coordinate is least significant
      int i = e - 1;
      while (i >= 0 && c[i] == p - 1) c[i--] = 0;
      if (i < 0) throw Error("field_make: no irreducible modulus found");
      ++c[i];
    }
  }

  const int Q = F->q_;
  auto unpack = [&](int v) {
    ZpPoly a;
    while (v) {
      a.push_back(v % p);
      v /= p;
    }
    return a;
  };
  auto pack = [&](const ZpPoly& a) {
    int v = 0;
    for (int i = int(a.size()) - 1; i >= 0; --i) v = v * p + a[i];
    return FF(v);
  };
  ZpPoly mod(F->modulus_.begin(), F->modulus_.end());

  F->add_.assign(Q * Q, 0);
  F->mul_.assign(Q * Q, 0);
  F->neg_.assign(Q, 0);
  F->inv_.assign(Q, 0);
  for (int a = 0; a < Q; ++a) {
    ZpPoly pa = unpack(a);
    for (int b = 0; b < Q; ++b) {
      ZpPoly pb = unpack(b);
      ZpPoly s(std::max(pa.size(), pb.size()), 0);
      for (size_t i = 0; i < s.size(); ++i) {
        int x = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
        s[i] = x % p;
      }
      strip(s);
      F->add_[a * Q + b] = pack(s);
      F->mul_[a * Q + b] = pack(rem_p(mulmod_p(pa, pb, p), mod, p));
    }
  }
  for (int a = 0; a < Q; ++a) {
    ZpPoly pa = unpack(a);
    ZpPoly na(pa.size(), 0);
    for (size_t i = 0; i < pa.size(); ++i) na[i] = (p - pa[i]) % p;
    strip(na);
    F->neg_[a] = pack(na);
  }
  for (int a = 1; a < Q; ++a)
    for (int b = 1; b < Q; ++b)
      if (F->mul_[a * Q + b] == 1) {
        F->inv_[a] = FF(b);
        break;
      }
  return F;
}

FF Field::pow(FF a, uint64_t n) const {
  FF r = 1, base = a;
  while (n) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

FF Field::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  return FF(r);
}

FF Field::from_coords(const std::vector<int>& coords) const {
  if (int(coords.size()) != e_) throw Error("from_coords: wrong coordinate count");
  int v = 0;
  for (int i = e_ - 1; i >= 0; --i) {
    int c = coords[i] % p_;
    if (c < 0) c += p_;
    v = v * p_ + c;
  }
  return FF(v);
}

std::vector<int> Field::coords(FF a) const {
  std::vector<int> c(e_, 0);
  int v = a;
  for (int i = 0; i < e_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

}  // namespace dlv
