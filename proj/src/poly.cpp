#include "dlv/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dlv {

const char* var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::t: return "t";
    case Var::T: return "T";
    case Var::y: return "y";
    case Var::Z: return "Z";
  }
  return "?";
}

namespace {
void check_compat(const Poly& a, const Poly& b, const char* op) {
  if (!same_field(a.field(), b.field()) || a.var() != b.var())
    throw Error(std::string(op) + ": mismatched field or variable");
}
}  // namespace

Poly::Poly(FieldPtr k, Var v, std::vector<FF> coeffs)
    : k_(std::move(k)), v_(v), c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const FieldPtr& k, Var v, FF c) {
  Poly r(k, v);
  if (c != 0) r.c_ = {c};
  return r;
}

Poly Poly::variable(const FieldPtr& k, Var v, int power) {
  Poly r(k, v);
  r.c_.assign(power + 1, 0);
  r.c_[power] = 1;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check_compat(*this, o, "poly add");
  std::vector<FF> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = k_->add(coeff(int(i)), o.coeff(int(i)));
  return Poly(k_, v_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<FF> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = k_->neg(c_[i]);
  return Poly(k_, v_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  check_compat(*this, o, "poly mul");
  if (is_zero() || o.is_zero()) return Poly(k_, v_);
  std::vector<FF> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = k_->add(r[i + j], k_->mul(c_[i], o.c_[j]));
  }
  return Poly(k_, v_, std::move(r));
}

Poly Poly::scaled(FF c) const {
  if (c == 0) return Poly(k_, v_);
  std::vector<FF> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = k_->mul(c_[i], c);
  return Poly(k_, v_, std::move(r));
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return *this;
  if (k < 0) throw Error("poly shift: negative power");
  std::vector<FF> r(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), r.begin() + k);
  return Poly(k_, v_, std::move(r));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
  check_compat(*this, d, "poly divrem");
  if (d.is_zero()) throw Error("poly divrem: division by zero polynomial");
  Poly q(k_, v_), r = *this;
  FF lead_inv = k_->inv(d.leading());
  int dd = d.degree();
  std::vector<FF> qc(std::max(0, degree() - dd + 1), 0);
  while (r.degree() >= dd) {
    int shift = r.degree() - dd;
    FF c = k_->mul(r.leading(), lead_inv);
    qc[shift] = c;
    // r -= c * v^shift * d
    std::vector<FF> rc = r.c_;
    for (int i = 0; i <= dd; ++i)
      rc[shift + i] = k_->sub(rc[shift + i], k_->mul(c, d.c_[i]));
    r = Poly(k_, v_, std::move(rc));
  }
  return {Poly(k_, v_, std::move(qc)), r};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(k_->inv(leading()));
}

FF Poly::eval(FF a) const {
  FF r = 0;
  for (int i = int(c_.size()) - 1; i >= 0; --i) r = k_->add(k_->mul(r, a), c_[i]);
  return r;
}

Poly Poly::pow(uint64_t n) const {
  Poly r = Poly::one(k_, v_), base = *this;
  while (n) {
    if (n & 1) r = r * base;
    if (n >>= 1) base = base * base;
  }
  return r;
}

Poly Poly::q_power() const {
  if (is_zero()) return *this;
  int q = k_->q();
  std::vector<FF> r((c_.size() - 1) * q + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i * q] = k_->pow(c_[i], q);
  return Poly(k_, v_, std::move(r));
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly(k_, v_);
  std::vector<FF> r(c_.size() - 1, 0);
  for (size_t i = 1; i < c_.size(); ++i) {
    FF m = k_->from_int(long(i));
    r[i - 1] = k_->mul(c_[i], m);
  }
  return Poly(k_, v_, std::move(r));
}

Poly Poly::retag(Var v) const {
  Poly r = *this;
  r.v_ = v;
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return same_field(k_, o.k_) && v_ == o.v_ && c_ == o.c_;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  const int e = k_->e();
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    FF c = c_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    bool unit_coeff = (c == 1);
    if (!unit_coeff || i == 0) {
      if (e == 1) {
        os << int(c);
      } else {
        auto cs = k_->coords(c);
        os << '[';
        for (size_t j = 0; j < cs.size(); ++j) os << (j ? "," : "") << cs[j];
        os << ']';
      }
      if (i > 0) os << '*';
    }
    if (i > 0) {
      os << var_name(v_);
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

namespace {

struct Lexer {
  const std::string& s;
  size_t i = 0;
  explicit Lexer(const std::string& str) : s(str) {}
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  char get() {
    skip();
    return i < s.size() ? s[i++] : '\0';
  }
  long long integer() {
    skip();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ConfigError("polynomial parse: expected integer near '" +
                                      s.substr(start, 8) + "'");
    return std::stoll(s.substr(start, i - start));
  }
};

FF parse_coefficient(Lexer& lx, const FieldPtr& k) {
  if (lx.peek() == '[') {
    lx.get();
    std::vector<int> coords;
    if (lx.peek() != ']') {
      coords.push_back(int(lx.integer()));
      while (lx.peek() == ',') {
        lx.get();
        coords.push_back(int(lx.integer()));
      }
    }
    if (lx.get() != ']') throw ConfigError("polynomial parse: unterminated coordinate list");
    if (int(coords.size()) != k->e())
      throw ConfigError("polynomial parse: coordinate list length must equal e");
    for (int& c : coords) c = ((c % k->p()) + k->p()) % k->p();
    return k->from_coords(coords);
  }
  long long v = lx.integer();
  return k->from_int(v);
}

}  // namespace

Poly parse_poly(const FieldPtr& k, Var v, const std::string& text) {
  Lexer lx(text);
  Poly result = Poly::zero(k, v);
  bool negate = false;
  if (lx.peek() == '-') {
    lx.get();
    negate = true;
  }
  while (true) {
    // one term: product of coefficient and variable-power factors
    FF coeff = k->one();
    int power = 0;
    bool saw_factor = false;
    while (true) {
      char c = lx.peek();
      if (c == '[' || std::isdigit(static_cast<unsigned char>(c))) {
        coeff = k->mul(coeff, parse_coefficient(lx, k));
        saw_factor = true;
      } else if (std::string(var_name(v)) == std::string(1, c)) {
        lx.get();
        int p = 1;
        if (lx.peek() == '^') {
          lx.get();
          p = int(lx.integer());
          if (p < 0) throw ConfigError("polynomial parse: negative exponent");
        }
        power += p;
        saw_factor = true;
      } else {
        throw ConfigError(std::string("polynomial parse: unexpected character '") + c +
                          "' (variable is " + var_name(v) + ")");
      }
      if (lx.peek() == '*') {
        lx.get();
        continue;
      }
      break;
    }
    if (!saw_factor) throw ConfigError("polynomial parse: empty term");
    Poly term = Poly::constant(k, v, negate ? k->neg(coeff) : coeff).shifted(power);
    result = result + term;
    if (lx.done()) break;
    char op = lx.get();
    if (op == '+') negate = false;
    else if (op == '-') negate = true;
    else throw ConfigError("polynomial parse: expected '+' or '-'");
  }
  return result;
}

}  // namespace dlv
