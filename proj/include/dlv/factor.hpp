#pragma once

#include "dlv/poly.hpp"

namespace dlv {

// No factor of degree <= deg(f)/2 (Rabin-style scan with early exit).
bool is_irreducible(const Poly& f);

// All monic irreducibles of degree <= d in the given variable, ordered by
// degree then lexicographically (coefficients low-degree-first).
std::vector<Poly> irreducibles_up_to(const FieldPtr& k, Var v, int d);

// Complete factorization into monic irreducibles with multiplicities,
// canonically sorted; leading coefficient of f times the product of the
// factors reproduces f.  Deterministic across runs.
std::vector<std::pair<Poly, int>> factor(const Poly& f);

// ---------------------------------------------------------------------------
// Quotient field F = k[u]/(P), P monic irreducible.  Elements are Poly of
// degree < deg P in P's variable.  Used to factor the ring extension modulus
// g modulo a prime P; with deg P = 1 this degenerates to k itself.

struct FqCtx {
  FieldPtr k;
  Poly P;
  long long card = 0;  // q^deg(P)

  FqCtx(FieldPtr k_, Poly P_);

  Poly zero() const { return Poly::zero(k, P.var()); }
  Poly one() const { return Poly::one(k, P.var()); }
  Poly reduce(const Poly& a) const { return a % P; }
  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly mul(const Poly& a, const Poly& b) const { return (a * b) % P; }
  Poly inv(const Poly& a) const;
  Poly pow(Poly a, long long n) const;
  // n-th element in the fixed enumeration (base-q digit expansion).
  Poly from_index(long long n) const;
};

// Polynomial over the quotient field: coefficient list, low order first, in a
// separate (positional) outer variable.  Canonical form strips trailing zeros.
using FqPoly = std::vector<Poly>;

int fqp_deg(const FqPoly& f);
void fqp_strip(FqPoly& f);
FqPoly fqp_monic(const FqCtx& F, const FqPoly& f);
FqPoly fqp_mul(const FqCtx& F, const FqPoly& a, const FqPoly& b);
FqPoly fqp_rem(const FqCtx& F, FqPoly a, const FqPoly& b);
FqPoly fqp_gcd(const FqCtx& F, FqPoly a, FqPoly b);
bool fqp_equal(const FqPoly& a, const FqPoly& b);

// Complete factorization over the quotient field (squarefree decomposition,
// distinct-degree splitting, deterministic equal-degree splitting).
std::vector<std::pair<FqPoly, int>> fq_factor(const FqCtx& F, const FqPoly& f);

}  // namespace dlv
