#pragma once

#include <string>
#include <vector>

#include "qfgl/qseries.hpp"
#include "qfgl/report.hpp"
#include "qfgl/scalar.hpp"

namespace qfgl {

// Sign conventions
// ----------------
//   stored:      lambda_t(L) = 1 + t L for a line L = q^m, exponential over sums
//   negated:     lambda_{-t} is obtained from the stored element by t -> -t
//   Adams/ghost: sum_{k>=1} psi^k(a) t^k = -t d/dt log lambda_{-t}(a)
//   lambda^k(a): coefficient of t^k in lambda_t(a)
//              = (-1)^k * coefficient of t^k in lambda_{-t}(a)

// q -> q^k on an element living in q.
Scalar adams(const Scalar& a, int k);

// Element of K_T with its q-expansion at q = 0.
struct QExpandable {
  Scalar exact;
  QSeries expansion;

  // Expansion coefficients are integers (a virtual representation).
  bool is_virtual_representation() const { return expansion.has_integer_coefficients(); }
};

QExpandable q_expandable(const Scalar& a, int q_order);

// Truncated element of 1 + t R[[t]]; addition is series multiplication.
struct WittElement {
  QTSeries body;

  friend bool operator==(const WittElement&, const WittElement&) = default;
};

WittElement witt_unit(int t_order, int q_order);
WittElement witt_add(const WittElement& a, const WittElement& b);
WittElement witt_negate(const WittElement& a);
// n-th ghost component: coefficient of t^n in -t d/dt log(w(-t)).
QSeries witt_ghost(const WittElement& w, int n);

// prod_n (1 + t q^n)^{a_n} over the expansion a = sum a_n q^n, truncated at
// (t_order, q-order of the expansion). Requires integer a_n.
WittElement lambda_t(const QExpandable& a, int t_order);
// The same product with t replaced by a rational value factor by factor. Exact
// when every factor is a polynomial in t (a_n >= 0) or 1 + value q^n is a unit.
QSeries lambda_at(const QExpandable& a, const Rational& t_value);

// psi^1..psi^K read off from a lambda_t element through the Newton identity.
std::vector<QSeries> newton_adams_from_lambda(const WittElement& w, int K);

// e_k(1, q, q^2, ..., q^{q_order}) from power sums by Newton's recursion.
QSeries elementary_geometric(int k, int q_order);

enum class LambdaVerdict { kTriangular, kBinomial, kBoth, kNeither };

struct LambdaKResult {
  int k = 0;
  // q^{k(k+1)/2} / ([k]_q! (1 - q)^k)
  Scalar triangular_variant;
  // q^{k(k-1)/2} / ([k]_q! (1 - q)^k)
  Scalar binomial_variant;
  // lambda^k((1 - q)^{-1}) from the Witt element, sign convention applied.
  QSeries witt_coefficient;
  QSeries elementary_oracle;
  bool witt_matches_oracle = false;
  bool triangular_matches = false;
  bool binomial_matches = false;
  LambdaVerdict verdict = LambdaVerdict::kNeither;
};

LambdaKResult lambda_k_closed(int k, int q_order);
std::string to_string(LambdaVerdict v);

struct ThomClassResult {
  QSeries value;
  std::string route;
  // lambda_{-t}((1 - q)^{-1}) at t = 1 read literally, including the n = 0 factor.
  QSeries literal;
};

// lambda_{-1}((1 - q)^{-1}) read as the product over n >= 1.
ThomClassResult thom_class(int q_order);

struct Exercise32Result {
  Scalar mobius_value;
  // q * lambda_{-t}(24/(1 - q)) at t = 1, substituted factor by factor.
  QSeries direct_substitution;
  // q * lambda_{-t}(24/(1 - q)) at t = q.
  QSeries shift_substitution;
  QSeries discriminant;
  VerificationReport report;
  // "b" when only the shift reading realizes the discriminant.
  std::string selected;
};

Exercise32Result exercise32(int q_order);

}  // namespace qfgl
