#include "qfgl/laurent.hpp"

#include <algorithm>

namespace qfgl {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw MathError("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly::LaurentPoly(std::vector<Rational> coeffs, int valuation)
    : coeffs_(std::move(coeffs)), val_(valuation) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  return LaurentPoly({c}, exponent);
}

void LaurentPoly::normalize() {
  auto hi = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Rational& c) { return c != 0; });
  coeffs_.erase(hi.base(), coeffs_.end());
  auto lo = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  val_ += static_cast<int>(lo - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), lo);
  if (coeffs_.empty()) val_ = 0;
}

bool LaurentPoly::is_one() const { return val_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }

bool LaurentPoly::is_constant() const { return coeffs_.empty() || (val_ == 0 && coeffs_.size() == 1); }

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
}

Rational LaurentPoly::coeff(int exponent) const {
  const int i = exponent - val_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

bool LaurentPoly::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integral(c); });
}

bool LaurentPoly::is_even() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0 && (val_ + static_cast<int>(i)) % 2 != 0) return false;
  }
  return true;
}

Integer LaurentPoly::denominator_lcm() const {
  Integer l = 1;
  for (const auto& c : coeffs_) {
    if (c != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  return l;
}

Integer LaurentPoly::numerator_gcd() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.val_ += by;
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k < 1) throw MathError("substitute_power requires k >= 1");
  if (k == 1 || is_zero()) return *this;
  std::vector<Rational> out((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(k)] = coeffs_[i];
  return LaurentPoly(std::move(out), val_ * k);
}

LaurentPoly LaurentPoly::halve_exponents() const {
  if (!is_even()) throw MathError("halve_exponents: odd exponent present");
  if (is_zero()) return *this;
  std::vector<Rational> out((coeffs_.size() + 1) / 2);
  for (std::size_t i = 0; i < coeffs_.size(); i += 2) out[i / 2] = coeffs_[i];
  return LaurentPoly(std::move(out), val_ / 2);
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0) {
    if (val_ < 0) throw MathError("evaluate: negative power at zero");
    return val_ == 0 ? coeffs_[0] : Rational(0);
  }
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  Rational scale = 1;
  Rational base = val_ >= 0 ? x : Rational(1 / x);
  for (int i = 0; i < std::abs(val_); ++i) scale *= base;
  return acc * scale;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(val_, o.val_);
  const int hi = std::max(degree(), o.degree());
  if (lo < val_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(val_ - lo), Rational(0));
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  val_ = lo;
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    coeffs_[static_cast<std::size_t>(o.val_ - lo) + i] += o.coeffs_[i];
  }
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) return *this = LaurentPoly();
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  Rational t;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out[i + j] += t;
    }
  }
  return LaurentPoly(std::move(out), a.val_ + b.val_);
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  if (a.valuation() < 0 || b.valuation() < 0) throw MathError("poly_divmod: negative exponents");
  const int db = b.degree();
  const Rational lead = b.highest_coeff();
  std::vector<Rational> rem(static_cast<std::size_t>(std::max(a.degree(), db) + 1));
  for (int e = a.valuation(); e <= a.degree(); ++e) rem[static_cast<std::size_t>(e)] = a.coeff(e);
  std::vector<Rational> bc(static_cast<std::size_t>(db + 1));
  for (int e = b.valuation(); e <= db; ++e) bc[static_cast<std::size_t>(e)] = b.coeff(e);
  const int da = a.is_zero() ? -1 : a.degree();
  std::vector<Rational> quo(static_cast<std::size_t>(std::max(da - db + 1, 0)));
  Rational t;
  for (int e = da; e >= db; --e) {
    const Rational& top = rem[static_cast<std::size_t>(e)];
    if (top == 0) continue;
    Rational f = top / lead;
    quo[static_cast<std::size_t>(e - db)] = f;
    for (int k = 0; k <= db; ++k) {
      if (bc[static_cast<std::size_t>(k)] == 0) continue;
      mpq_mul(t.get_mpq_t(), f.get_mpq_t(), bc[static_cast<std::size_t>(k)].get_mpq_t());
      rem[static_cast<std::size_t>(e - db + k)] -= t;
    }
  }
  return {LaurentPoly(std::move(quo), 0), LaurentPoly(std::move(rem), 0)};
}

LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw MathError("poly_exact_div: non-zero remainder");
  return q;
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return LaurentPoly(Rational(1));
  return a * Rational(1 / a.highest_coeff());
}

}  // namespace qfgl
