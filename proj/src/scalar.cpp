#include "qfgl/scalar.hpp"

#include <map>
#include <ostream>

namespace qfgl {

Scalar::Scalar(long value) : num_(Rational(value)) {}
Scalar::Scalar(const Integer& value) : num_(Rational(value)) {}
Scalar::Scalar(const Rational& value) : num_(value) {}
Scalar::Scalar(LaurentPoly numerator) : num_(std::move(numerator)) {}

Scalar::Scalar(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  canonicalize();
}

Scalar Scalar::q_poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) {
    c.emplace_back(v);
    c.emplace_back(0);
  }
  return Scalar(LaurentPoly(std::move(c), 0));
}

Rational Scalar::as_rational() const {
  if (!is_rational_constant()) throw MathError("scalar is not a rational constant: " + to_string());
  return num_.coeff(0);
}

void Scalar::canonicalize() {
  if (den_.is_zero()) throw MathError("division by zero");
  if (num_.is_zero()) {
    den_ = LaurentPoly(Rational(1));
    return;
  }
  if (const int v = den_.valuation(); v != 0) {
    num_ = num_.shifted(-v);
    den_ = den_.shifted(-v);
  }
  if (!den_.is_constant()) {
    const int v = num_.valuation();
    LaurentPoly n = num_.shifted(-v);
    LaurentPoly g = poly_gcd(n, den_);
    if (!g.is_one()) {
      n = poly_exact_div(n, g);
      den_ = poly_exact_div(den_, g);
    }
    num_ = n.shifted(v);
  }
  if (den_.is_constant()) {
    num_ *= Rational(1 / den_.coeff(0));
    den_ = LaurentPoly(Rational(1));
    return;
  }
  const Integer l = den_.denominator_lcm();
  const Integer c = (den_ * Rational(l)).numerator_gcd();
  Rational f(l, c);
  f.canonicalize();
  if (den_.lowest_coeff() < 0) f = -f;
  den_ *= f;
  num_ *= f;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (o.den_.is_one()) {
    // gcd(a + c*b, b) = gcd(a, b) = 1: already canonical.
    num_ += o.num_ * den_;
    if (num_.is_zero()) den_ = LaurentPoly(Rational(1));
    return *this;
  }
  if (den_.is_one()) {
    LaurentPoly n = num_ * o.den_ + o.num_;
    num_ = std::move(n);
    den_ = o.den_;
    if (num_.is_zero()) den_ = LaurentPoly(Rational(1));
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw MathError("division by zero");
  if (o.is_rational_constant()) {
    num_ *= Rational(1 / o.num_.coeff(0));
    return *this;
  }
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

std::string format_poly(const LaurentPoly& p, char variable, int exponent_divisor) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = p.valuation(); e <= p.degree(); ++e) {
    Rational c = p.coeff(e);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const int k = e / exponent_divisor;
    if (k == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_str() + "*";
    out += variable;
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string Scalar::to_string() const {
  const bool in_q = lives_in_q();
  const char var = in_q ? 'q' : 's';
  const int div = in_q ? 2 : 1;
  const Rational l(num_.denominator_lcm());
  const LaurentPoly n = num_ * l;
  const LaurentPoly d = den_ * l;
  std::string ns = format_poly(n, var, div);
  if (d.is_one()) return ns;
  std::string ds = format_poly(d, var, div);
  if (n.term_count() > 1) ns = "(" + ns + ")";
  if (d.term_count() > 1) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

Scalar pow(const Scalar& base, int exponent) {
  if (exponent < 0) return Scalar(1) / pow(base, -exponent);
  Scalar result(1);
  Scalar b = base;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= b;
    if (e > 1) b *= b;
  }
  return result;
}

namespace {

// Cyclotomic polynomials as polynomials in q (not s).
class CyclotomicTable {
 public:
  const LaurentPoly& get(int d) {
    if (auto it = table_.find(d); it != table_.end()) return it->second;
    LaurentPoly p = LaurentPoly::monomial(1, d) - LaurentPoly(Rational(1));
    for (int e = 1; e < d; ++e) {
      if (d % e == 0) p = poly_exact_div(p, get(e));
    }
    return table_.emplace(d, std::move(p)).first->second;
  }

 private:
  std::map<int, LaurentPoly> table_;
};

int euler_totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

void require_q(const Scalar& x, const char* what) {
  if (!x.lives_in_q()) throw MathError(std::string(what) + ": element involves odd powers of s");
}

}  // namespace

Scalar cyclotomic(int d) {
  if (d < 1) throw MathError("cyclotomic: d must be positive");
  CyclotomicTable table;
  return Scalar(table.get(d).substitute_power(2));
}

bool is_cromulent(const Scalar& x) {
  require_q(x, "is_cromulent");
  const LaurentPoly& num = x.numerator();
  if (num.valuation() < 0 || !num.has_integer_coefficients()) return false;
  LaurentPoly den = x.denominator().halve_exponents();
  // phi(d) >= sqrt(d / 2), so only d <= 2 deg^2 can contribute a factor.
  CyclotomicTable table;
  const int bound = 2 * den.degree() * den.degree() + 2;
  for (int d = 2; d <= bound && den.degree() > 0; ++d) {
    if (euler_totient(d) > den.degree()) continue;
    const LaurentPoly& phi = table.get(d);
    for (;;) {
      auto [quo, rem] = poly_divmod(den, phi);
      if (!rem.is_zero()) break;
      den = std::move(quo);
    }
  }
  return den.is_one();
}

RingMembership membership(const Scalar& x) {
  RingMembership m;
  if (!x.lives_in_q()) return m;
  const bool poly = x.is_laurent_polynomial();
  const bool integral = x.numerator().has_integer_coefficients();
  m.in_Z_q_laurent = poly && integral;
  m.in_Q_q = poly && x.numerator().valuation() >= 0;
  m.in_Z_q = m.in_Q_q && integral;
  m.in_cromulent = is_cromulent(x);
  return m;
}

Rational eval_q0(const Scalar& x) {
  require_q(x, "eval_q0");
  if (x.numerator().valuation() < 0) throw MathError("eval_q0: pole at q = 0");
  return Rational(x.numerator().coeff(0) / x.denominator().coeff(0));
}

Rational eval_q1(const Scalar& x) {
  require_q(x, "eval_q1");
  const Rational d = x.denominator().evaluate(1);
  if (d == 0) throw MathError("eval_q1: pole at q = 1");
  return Rational(x.numerator().evaluate(1) / d);
}

}  // namespace qfgl
