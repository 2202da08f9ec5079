#include "qfgl/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace qfgl {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw MathError(message);
}

}  // namespace

QSeries::QSeries(int order) {
  require(order >= 0, "q-series order must be non-negative");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries::QSeries(int order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  require(order >= 0, "q-series order must be non-negative");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries QSeries::one(int order) { return monomial(1, 0, order); }

QSeries QSeries::monomial(const Rational& c, int exponent, int order) {
  QSeries r(order);
  if (exponent >= 0 && exponent <= order) r.c_[static_cast<std::size_t>(exponent)] = c;
  return r;
}

const Rational& QSeries::operator[](int k) const {
  require(k >= 0 && k <= order(), "q-series index beyond truncation order");
  return c_[static_cast<std::size_t>(k)];
}

void QSeries::set(int k, Rational value) {
  require(k >= 0 && k <= order(), "q-series index beyond truncation order");
  c_[static_cast<std::size_t>(k)] = std::move(value);
}

bool QSeries::has_integer_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return is_integral(c); });
}

bool QSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c == 0; });
}

QSeries QSeries::truncated(int order) const {
  require(order <= this->order(), "cannot extend a truncated q-series");
  return QSeries(order, std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
}

QSeries QSeries::shifted(int k) const {
  require(k >= 0, "shift must be non-negative");
  QSeries r(order());
  for (int i = 0; i + k <= order(); ++i) r.c_[static_cast<std::size_t>(i + k)] = c_[static_cast<std::size_t>(i)];
  return r;
}

QSeries QSeries::reciprocal() const {
  require(c_[0] != 0, "q-series reciprocal: constant term is zero");
  QSeries r(order());
  const Rational inv = 1 / c_[0];
  for (int k = 0; k <= order(); ++k) {
    Rational acc = k == 0 ? Rational(1) : Rational(0);
    for (int j = 1; j <= k; ++j) {
      if (c_[static_cast<std::size_t>(j)] == 0) continue;
      acc -= c_[static_cast<std::size_t>(j)] * r.c_[static_cast<std::size_t>(k - j)];
    }
    r.c_[static_cast<std::size_t>(k)] = acc * inv;
  }
  return r;
}

Scalar QSeries::to_scalar() const {
  std::vector<Rational> s(2 * c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) s[2 * k] = c_[k];
  return Scalar(LaurentPoly(std::move(s), 0));
}

std::optional<int> QSeries::first_difference(const QSeries& o) const {
  const int n = std::min(order(), o.order());
  for (int k = 0; k <= n; ++k) {
    if (c_[static_cast<std::size_t>(k)] != o.c_[static_cast<std::size_t>(k)]) return k;
  }
  return std::nullopt;
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.order(), b.order());
  QSeries r(n);
  Rational t;
  for (int i = 0; i <= n; ++i) {
    const Rational& ai = a.c_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      const Rational& bj = b.c_[static_cast<std::size_t>(j)];
      if (bj == 0) continue;
      mpq_mul(t.get_mpq_t(), ai.get_mpq_t(), bj.get_mpq_t());
      r.c_[static_cast<std::size_t>(i + j)] += t;
    }
  }
  return r;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  os << to_scalar() << " + O(q^" << order() + 1 << ")";
  return os.str();
}

QSeries pow(const QSeries& base, int exponent) {
  if (exponent < 0) return pow(base.reciprocal(), -exponent);
  QSeries result = QSeries::one(base.order());
  QSeries b = base;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result = result * b;
    if (e > 1) b = b * b;
  }
  return result;
}

QSeries q_expand(const Scalar& x, int order) {
  if (!x.lives_in_q()) throw MathError("q_expand: element involves odd powers of s");
  const LaurentPoly num = x.numerator().halve_exponents();
  const LaurentPoly den = x.denominator().halve_exponents();
  if (num.valuation() < 0) throw MathError("q_expand: pole at q = 0");
  QSeries n(order);
  for (int k = 0; k <= std::min(order, num.degree()); ++k) n.set(k, num.coeff(k));
  QSeries d(order);
  for (int k = 0; k <= std::min(order, den.degree()); ++k) d.set(k, den.coeff(k));
  return n * d.reciprocal();
}

// ---------------------------------------------------------------------------

QTSeries::QTSeries(int t_order, int q_order) : q_order_(q_order) {
  require(t_order >= 0 && q_order >= 0, "orders must be non-negative");
  c_.assign(static_cast<std::size_t>(t_order) + 1, QSeries(q_order));
}

QTSeries QTSeries::one(int t_order, int q_order) {
  QTSeries r(t_order, q_order);
  r.c_[0] = QSeries::one(q_order);
  return r;
}

const QSeries& QTSeries::operator[](int k) const {
  require(k >= 0 && k <= t_order(), "t-degree beyond truncation order");
  return c_[static_cast<std::size_t>(k)];
}

void QTSeries::set(int k, QSeries value) {
  require(k >= 0 && k <= t_order(), "t-degree beyond truncation order");
  require(value.order() >= q_order_, "q-order of coefficient too small");
  c_[static_cast<std::size_t>(k)] = value.truncated(q_order_);
}

Rational QTSeries::coeff(int t_degree, int q_degree) const { return (*this)[t_degree][q_degree]; }

void QTSeries::add_to(int t_degree, int q_degree, const Rational& value) {
  require(t_degree >= 0 && t_degree <= t_order(), "t-degree beyond truncation order");
  auto& s = c_[static_cast<std::size_t>(t_degree)];
  s.set(q_degree, s[q_degree] + value);
}

QTSeries QTSeries::truncated(int t_order, int q_order) const {
  require(t_order <= this->t_order() && q_order <= q_order_, "cannot extend a truncated series");
  QTSeries r(t_order, q_order);
  for (int k = 0; k <= t_order; ++k) r.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)].truncated(q_order);
  return r;
}

QTSeries QTSeries::negate_t() const {
  QTSeries r = *this;
  for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
  return r;
}

QSeries QTSeries::evaluate_t(const Rational& value) const {
  QSeries r(q_order_);
  Rational power = 1;
  for (const auto& c : c_) {
    r += c * power;
    power *= value;
  }
  return r;
}

QSeries QTSeries::substitute_t(const Rational& c, int m) const {
  require(m >= 0, "substitute_t: exponent must be non-negative");
  QSeries r(q_order_);
  Rational power = 1;
  for (int k = 0; k <= t_order() && k * m <= q_order_; ++k) {
    r += c_[static_cast<std::size_t>(k)].shifted(k * m) * power;
    power *= c;
  }
  return r;
}

QTSeries QTSeries::t_log_derivative() const {
  QTSeries deriv(t_order(), q_order_);
  for (int k = 1; k <= t_order(); ++k) deriv.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)] * Rational(k);
  return deriv * reciprocal();
}

QTSeries QTSeries::reciprocal() const {
  const QSeries inv0 = c_[0].reciprocal();
  QTSeries r(t_order(), q_order_);
  for (int k = 0; k <= t_order(); ++k) {
    QSeries acc = k == 0 ? QSeries::one(q_order_) : QSeries(q_order_);
    for (int j = 1; j <= k; ++j) {
      if (c_[static_cast<std::size_t>(j)].is_zero()) continue;
      acc -= c_[static_cast<std::size_t>(j)] * r.c_[static_cast<std::size_t>(k - j)];
    }
    r.c_[static_cast<std::size_t>(k)] = acc * inv0;
  }
  return r;
}

std::optional<std::pair<int, int>> QTSeries::first_difference(const QTSeries& o) const {
  const int nt = std::min(t_order(), o.t_order());
  for (int k = 0; k <= nt; ++k) {
    if (auto d = c_[static_cast<std::size_t>(k)].first_difference(o.c_[static_cast<std::size_t>(k)])) {
      return std::make_pair(k, *d);
    }
  }
  return std::nullopt;
}

QTSeries& QTSeries::operator+=(const QTSeries& o) {
  *this = truncated(std::min(t_order(), o.t_order()), std::min(q_order_, o.q_order_));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

QTSeries& QTSeries::operator-=(const QTSeries& o) {
  *this = truncated(std::min(t_order(), o.t_order()), std::min(q_order_, o.q_order_));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

QTSeries operator*(const QTSeries& a, const QTSeries& b) {
  const int nt = std::min(a.t_order(), b.t_order());
  const int nq = std::min(a.q_order_, b.q_order_);
  QTSeries r(nt, nq);
  for (int i = 0; i <= nt; ++i) {
    if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= nt; ++j) {
      if (b.c_[static_cast<std::size_t>(j)].is_zero()) continue;
      r.c_[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

}  // namespace qfgl
