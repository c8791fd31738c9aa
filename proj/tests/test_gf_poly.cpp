#include <random>

#include "dlv/factor.hpp"
#include "dlv/gf.hpp"
#include "dlv/poly.hpp"
#include "doctest.h"

using namespace dlv;

namespace {
Poly rand_poly(std::mt19937_64& rng, const FieldPtr& k, Var v, int maxdeg) {
  int d = int(rng() % (maxdeg + 1));
  std::vector<FF> c(d + 1);
  for (auto& x : c) x = FF(rng() % k->q());
  return Poly(k, v, std::move(c));
}
}  // namespace

TEST_CASE("field construction picks the lex-smallest irreducible modulus") {
  auto F2 = Field::make(2, 1);
  CHECK(F2->modulus() == std::vector<int>{0, 1});  // x

  auto F4 = Field::make(2, 2);
  CHECK(F4->modulus() == std::vector<int>{1, 1, 1});  // x^2 + x + 1

  auto F9 = Field::make(3, 2);
  CHECK(F9->modulus() == std::vector<int>{1, 0, 1});  // x^2 + 1

  CHECK_THROWS_AS(Field::make(4, 1), Error);   // composite p
  CHECK_THROWS_AS(Field::make(2, 7), Error);   // q > 64
  CHECK_THROWS_AS(Field::make(2, 0), Error);
}

TEST_CASE("field arithmetic satisfies the field axioms on all elements") {
  for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}}) {
    auto k = Field::make(p, e);
    const int q = k->q();
    for (int a = 0; a < q; ++a) {
      CHECK(k->add(FF(a), 0) == FF(a));
      CHECK(k->mul(FF(a), 1) == FF(a));
      CHECK(k->add(FF(a), k->neg(FF(a))) == 0);
      if (a != 0) {
        CHECK(k->mul(FF(a), k->inv(FF(a))) == 1);
        // Frobenius fixes GF(q): a^q = a
        CHECK(k->pow(FF(a), q) == FF(a));
      }
      for (int b = 0; b < q; ++b) {
        CHECK(k->add(FF(a), FF(b)) == k->add(FF(b), FF(a)));
        CHECK(k->mul(FF(a), FF(b)) == k->mul(FF(b), FF(a)));
        for (int c = 0; c < q && q <= 9; ++c) {
          CHECK(k->mul(FF(a), k->add(FF(b), FF(c))) ==
                k->add(k->mul(FF(a), FF(b)), k->mul(FF(a), FF(c))));
        }
      }
    }
    // coords round trip
    for (int a = 0; a < q; ++a) CHECK(k->from_coords(k->coords(FF(a))) == FF(a));
  }
}

TEST_CASE("polynomial arithmetic basics") {
  auto k2 = Field::make(2, 1);
  auto k3 = Field::make(3, 1);

  // gcd(t^2 + t, t) = t over GF(2)
  Poly a = parse_poly(k2, Var::t, "t^2 + t");
  Poly b = parse_poly(k2, Var::t, "t");
  CHECK(gcd(a, b) == b);

  // (t + 1)^2 = t^2 + 1 over GF(2)
  Poly c = parse_poly(k2, Var::t, "t + 1");
  CHECK(c * c == parse_poly(k2, Var::t, "t^2 + 1"));

  // divrem(t^3, t^2 + 1) over GF(3): quotient t, remainder 2t
  Poly f = parse_poly(k3, Var::t, "t^3");
  Poly g = parse_poly(k3, Var::t, "t^2 + 1");
  auto [quot, rem] = f.divrem(g);
  CHECK(quot == parse_poly(k3, Var::t, "t"));
  CHECK(rem == parse_poly(k3, Var::t, "2*t"));

  CHECK_THROWS_AS(f.divrem(Poly::zero(k3, Var::t)), Error);
  CHECK(Poly::zero(k3, Var::t).degree() == Poly::kNegInf);
}

TEST_CASE("q-power agrees with repeated multiplication") {
  std::mt19937_64 rng(11);
  for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    auto k = Field::make(p, e);
    for (int it = 0; it < 100; ++it) {
      Poly f = rand_poly(rng, k, Var::t, 6);
      CHECK(f.q_power() == f.pow(k->q()));
    }
  }
}

TEST_CASE("polynomial text format round-trips") {
  std::mt19937_64 rng(12);
  for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    auto k = Field::make(p, e);
    for (int it = 0; it < 50; ++it) {
      Poly f = rand_poly(rng, k, Var::t, 8);
      CHECK(parse_poly(k, Var::t, f.str()) == f);
    }
  }
  auto k4 = Field::make(2, 2);
  Poly g = parse_poly(k4, Var::t, "[0,1]*t^2 + [1,1]");
  CHECK(g.degree() == 2);
  CHECK(g.coeff(2) == k4->from_coords({0, 1}));
  CHECK(parse_poly(k4, Var::t, g.str()) == g);
}

TEST_CASE("eval is a ring morphism point") {
  auto k3 = Field::make(3, 1);
  std::mt19937_64 rng(13);
  for (int it = 0; it < 50; ++it) {
    Poly f = rand_poly(rng, k3, Var::t, 5), g = rand_poly(rng, k3, Var::t, 5);
    FF a = FF(rng() % 3);
    CHECK((f * g).eval(a) == k3->mul(f.eval(a), g.eval(a)));
    CHECK((f + g).eval(a) == k3->add(f.eval(a), g.eval(a)));
  }
}
