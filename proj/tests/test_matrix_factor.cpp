#include <map>
#include <random>

#include "dlv/factor.hpp"
#include "dlv/matrix.hpp"
#include "doctest.h"

using namespace dlv;

namespace {
MatrixK rand_matrix(std::mt19937_64& rng, const FieldPtr& k, int n) {
  MatrixK m(k, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = FF(rng() % k->q());
  return m;
}

MatrixK companion(const FieldPtr& k, const Poly& f) {
  int n = f.degree();
  MatrixK m(k, n, n);
  for (int i = 1; i < n; ++i) m.at(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) m.at(i, n - 1) = k->neg(f.coeff(i));
  return m;
}

// Evaluate p at a square matrix.
MatrixK eval_at_matrix(const Poly& p, const MatrixK& A) {
  MatrixK r(A.field(), A.rows(), A.cols());
  MatrixK power = MatrixK::identity(A.field(), A.rows());
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) != 0) r = r + power.scaled(p.coeff(i));
    if (i < p.degree()) power = power * A;
  }
  return r;
}
}  // namespace

TEST_CASE("char_poly on the spec examples") {
  auto k2 = Field::make(2, 1);
  MatrixK z(k2, 3, 3);
  CHECK(z.char_poly(Var::T) == parse_poly(k2, Var::T, "T^3"));

  MatrixK id = MatrixK::identity(k2, 2);
  CHECK(id.char_poly(Var::T) == parse_poly(k2, Var::T, "T^2 + 1"));

  Poly f = parse_poly(k2, Var::T, "T^2 + T + 1");
  CHECK(companion(k2, f).char_poly(Var::T) == f);

  MatrixK rect(k2, 2, 3);
  CHECK_THROWS_AS(rect.char_poly(Var::T), Error);
}

TEST_CASE("Cayley-Hamilton holds exactly for random matrices") {
  std::mt19937_64 rng(21);
  for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    auto k = Field::make(p, e);
    for (int n = 1; n <= 6; ++n) {
      for (int rep = 0; rep < 8; ++rep) {
        MatrixK A = rand_matrix(rng, k, n);
        Poly chi = A.char_poly(Var::T);
        CHECK(chi.is_monic());
        CHECK(chi.degree() == n);
        CHECK(eval_at_matrix(chi.retag(Var::T), A).is_zero());
      }
    }
  }
}

TEST_CASE("kernel vectors are annihilated and complete") {
  std::mt19937_64 rng(22);
  auto k = Field::make(3, 1);
  for (int rep = 0; rep < 30; ++rep) {
    int rows = 1 + int(rng() % 6), cols = 1 + int(rng() % 6);
    MatrixK A(k, rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) A.at(i, j) = FF(rng() % 3);
    auto ker = A.kernel();
    CHECK(int(ker.size()) == cols - A.rank());
    for (const auto& v : ker) {
      auto img = A.apply(v);
      for (FF x : img) CHECK(x == 0);
    }
  }
}

TEST_CASE("factor on the spec examples") {
  auto k2 = Field::make(2, 1);
  auto fs = factor(parse_poly(k2, Var::t, "t^2 + t"));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].first == parse_poly(k2, Var::t, "t"));
  CHECK(fs[0].second == 1);
  CHECK(fs[1].first == parse_poly(k2, Var::t, "t + 1"));
  CHECK(fs[1].second == 1);

  fs = factor(parse_poly(k2, Var::t, "t^2 + 1"));
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].first == parse_poly(k2, Var::t, "t + 1"));
  CHECK(fs[0].second == 2);

  CHECK(is_irreducible(parse_poly(k2, Var::t, "t^4 + t + 1")));
  auto fs2 = factor(parse_poly(k2, Var::t, "t^4 + t + 1"));
  REQUIRE(fs2.size() == 1);
  CHECK(fs2[0].second == 1);

  CHECK_THROWS_AS(factor(Poly::zero(k2, Var::t)), Error);
}

TEST_CASE("factor reassembly over random polynomials") {
  std::mt19937_64 rng(23);
  for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    auto k = Field::make(p, e);
    int done = 0;
    while (done < 70) {
      int d = 1 + int(rng() % 12);
      std::vector<FF> c(d + 1);
      for (auto& x : c) x = FF(rng() % k->q());
      Poly f(k, Var::t, std::move(c));
      if (f.degree() < 1) continue;
      ++done;
      auto fs = factor(f);
      Poly prod = Poly::constant(k, Var::t, f.leading());
      for (auto& [fac, mult] : fs) {
        CHECK(fac.is_monic());
        CHECK(is_irreducible(fac));
        prod = prod * fac.pow(mult);
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("factor output is deterministic across calls") {
  auto k3 = Field::make(3, 1);
  Poly f = parse_poly(k3, Var::t, "t^9 + 2*t^6 + t^3 + 2*t + 1");
  auto a = factor(f), b = factor(f);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].first == b[i].first);
    CHECK(a[i].second == b[i].second);
  }
}

TEST_CASE("irreducibles_up_to matches the spec examples and the counting identity") {
  auto k2 = Field::make(2, 1);
  auto irr2 = irreducibles_up_to(k2, Var::t, 2);
  REQUIRE(irr2.size() == 3);
  CHECK(irr2[0] == parse_poly(k2, Var::t, "t"));
  CHECK(irr2[1] == parse_poly(k2, Var::t, "t + 1"));
  CHECK(irr2[2] == parse_poly(k2, Var::t, "t^2 + t + 1"));

  auto irr3 = irreducibles_up_to(k2, Var::t, 3);
  int deg3 = 0;
  for (const auto& f : irr3)
    if (f.degree() == 3) ++deg3;
  CHECK(deg3 == 2);

  auto k3 = Field::make(3, 1);
  auto irr1 = irreducibles_up_to(k3, Var::t, 1);
  REQUIRE(irr1.size() == 3);
  CHECK(irr1[0] == parse_poly(k3, Var::t, "t"));
  CHECK(irr1[1] == parse_poly(k3, Var::t, "t + 1"));
  CHECK(irr1[2] == parse_poly(k3, Var::t, "t + 2"));

  // sum_{e | d} e * N_e = q^d for d <= 8
  for (auto [p, e] : {std::pair{2, 1}, {3, 1}}) {
    auto k = Field::make(p, e);
    const int q = k->q();
    auto irr = irreducibles_up_to(k, Var::t, 8);
    std::map<int, long long> N;
    for (const auto& f : irr) N[f.degree()]++;
    for (int d = 1; d <= 8; ++d) {
      long long total = 0;
      for (int dd = 1; dd <= d; ++dd)
        if (d % dd == 0) total += dd * N[dd];
      long long qd = 1;
      for (int i = 0; i < d; ++i) qd *= q;
      CHECK(total == qd);
    }
  }
}
