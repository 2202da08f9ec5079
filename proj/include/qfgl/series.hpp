#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qfgl/scalar.hpp"

namespace qfgl {

// Truncated power series in one variable. Coefficients of degree 0..order are
// stored and exact; nothing is claimed beyond order.
class Series {
 public:
  Series(std::string variable, int order);
  Series(std::string variable, int order, std::vector<Scalar> coeffs);

  // The series consisting of the variable itself.
  static Series identity(std::string variable, int order);
  static Series constant(std::string variable, int order, const Scalar& c);

  const std::string& variable() const { return var_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& operator[](int k) const;
  void set(int k, Scalar value);
  std::span<const Scalar> coefficients() const { return c_; }

  Series truncated(int order) const;
  Series derivative() const;
  Series transform(const std::function<Scalar(const Scalar&)>& fn) const;

  // Lowest degree where the two series differ (common order), if any.
  std::optional<int> first_difference(const Series& o) const;

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Scalar& c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Scalar& c) { return a *= c; }
  friend Series operator*(const Scalar& c, Series a) { return a *= c; }
  friend Series operator*(const Series& a, const Series& b);
  // Requires an invertible constant term in b.
  friend Series operator/(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) = default;

  std::string to_string() const;

 private:
  std::string var_;
  std::vector<Scalar> c_;
};

// f(g(T)); requires g(0) = 0. Order is min(order f, order g).
Series compose(const Series& f, const Series& g);
// Compositional inverse, solved degree by degree. Requires f(0) = 0 and f'(0) != 0.
Series reverse(const Series& f);
// Formal logarithm of a series with constant term 1.
Series log1(const Series& f);
// Formal exponential of a series with zero constant term.
Series exp0(const Series& f);
// f^c := exp0(c * log1(f)); requires f(0) = 1.
Series pow_formal(const Series& f, const Scalar& c);

// Power series in V variables truncated by total degree.
template <int V>
class MultiSeries {
 public:
  using Exponent = std::array<int, V>;

  MultiSeries(std::array<std::string, V> variables, int order);

  const std::array<std::string, V>& variables() const { return vars_; }
  int order() const { return layout_->order; }
  std::size_t size() const { return c_.size(); }

  const Scalar& coeff(const Exponent& e) const;
  void set(const Exponent& e, Scalar value);
  // Monomials in graded lexicographic order (total degree, then exponents ascending).
  std::span<const Exponent> monomials() const { return layout_->monomials; }
  const Scalar& at(std::size_t index) const { return c_[index]; }

  MultiSeries truncated(int order) const;
  MultiSeries transform(const std::function<Scalar(const Scalar&)>& fn) const;
  // First monomial (graded order) where the series differ, up to the common order.
  std::optional<Exponent> first_difference(const MultiSeries& o) const;

  MultiSeries operator-() const;
  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  MultiSeries& operator*=(const Scalar& c);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator*(MultiSeries a, const Scalar& c) { return a *= c; }
  friend MultiSeries operator*(const Scalar& c, MultiSeries a) { return a *= c; }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) { return a.multiply(b); }
  // Requires an invertible constant term in b.
  friend MultiSeries operator/(const MultiSeries& a, const MultiSeries& b) { return a.divide(b); }
  friend bool operator==(const MultiSeries& a, const MultiSeries& b) { return a.equals(b); }

  MultiSeries multiply(const MultiSeries& o) const;
  MultiSeries divide(const MultiSeries& o) const;
  bool equals(const MultiSeries& o) const;

 private:
  struct Layout {
    int order = 0;
    std::vector<Exponent> monomials;
    std::vector<std::size_t> degree_start;  // size order + 2
    std::vector<int> lookup;                // (order + 1)^V entries
    std::size_t index(const Exponent& e) const;
  };
  static std::shared_ptr<const Layout> make_layout(int order);
  void require_compatible(const MultiSeries& o) const;

  std::array<std::string, V> vars_;
  std::shared_ptr<const Layout> layout_;
  std::vector<Scalar> c_;
};

using BiSeries = MultiSeries<2>;
using TriSeries = MultiSeries<3>;

extern template class MultiSeries<2>;
extern template class MultiSeries<3>;

// Series in one variable placed into slot `slot` of a V-variable series.
template <int V>
MultiSeries<V> embed(const Series& f, std::array<std::string, V> variables, int slot);
// Bivariate series placed into two slots of a trivariate series.
TriSeries embed(const BiSeries& f, std::array<std::string, 3> variables, std::array<int, 2> slots);

// f(g), g with zero constant term. Order is min(order f, order g).
template <int V>
MultiSeries<V> compose(const Series& f, const MultiSeries<V>& g);
// exp of a multivariate series with zero constant term.
template <int V>
MultiSeries<V> exp0(const MultiSeries<V>& g);
// F(U, V) for bivariate F and trivariate U, V with zero constant terms.
TriSeries substitute(const BiSeries& f, const TriSeries& u, const TriSeries& v);

BiSeries swap_variables(const BiSeries& f);
// F(X, 0) and F(0, Y).
Series restrict_second_zero(const BiSeries& f);
Series restrict_first_zero(const BiSeries& f);

// f^{c t} as a series in (t, T): sum over m of binom(c t, m) (f - 1)^m.
// Requires f(0) = 1; total order equals order f.
BiSeries pow_bivariate(const Series& f, const Scalar& c, const std::string& t_variable = "t");

// Polynomial in two variables (no truncation), keyed by exponent pair.
class BiPoly {
 public:
  BiPoly() = default;
  void add_term(int i, int j, const Scalar& c);
  Scalar coeff(int i, int j) const;
  int total_degree() const;
  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<std::array<int, 2>, Scalar>>& terms() const { return terms_; }
  BiPoly transform(const std::function<Scalar(const Scalar&)>& fn) const;
  BiPoly swapped() const;
  BiSeries to_series(std::array<std::string, 2> variables, int order) const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

 private:
  // Sorted by exponent, no zero coefficients.
  std::vector<std::pair<std::array<int, 2>, Scalar>> terms_;
};

std::string monomial_string(std::span<const std::string> variables, std::span<const int> exponents);

}  // namespace qfgl
