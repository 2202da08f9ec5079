#pragma once

#include <optional>
#include <string>

#include "qfgl/report.hpp"
#include "qfgl/series.hpp"

namespace qfgl {

// F = numerator / denominator as polynomials in (X, Y).
struct ClosedForm {
  BiPoly numerator;
  BiPoly denominator;
};

struct FormalGroupLaw {
  BiSeries series;
  std::optional<ClosedForm> closed;
};

// Expansion of a closed form to total order N.
FormalGroupLaw law_from_closed(const ClosedForm& closed, int order);
// Cross-multiplied comparison: a.num * b.den == b.num * a.den.
bool closed_forms_equal(const ClosedForm& a, const ClosedForm& b);

// X + Y + XY.
FormalGroupLaw multiplicative_law(int order);

// (1 - q)^{-1} log [Q](T) = sum_k [k]_q T^k / k.
Series log_chi(int order);
// [Q^{-1}](exp((1 - q) T)).
Series exp_chi(int order);

// (X + Y + (1 + q) XY) / (1 + q XY) expanded to total order N.
FormalGroupLaw f_chi_closed(int order);
// exp_chi(log_chi(X) + log_chi(Y)).
FormalGroupLaw f_chi_from_log(int order);
// (X + Y - (1 + q) XY)/(1 - q XY): [Q^-1]([Q](X) [Q](Y)) expanded by hand. Its
// logarithm has derivative 1/((1 - T)(1 - qT)), i.e. it is the law of log_chi;
// f_chi_closed has derivative 1/(1 + (1 + q)T - qT^2) instead.
FormalGroupLaw f_chi_log_closed(int order);

// Unit, commutativity and associativity, each to total order min(N, order of F).
VerificationReport verify_fgl(const FormalGroupLaw& law, int order);

// q^{1/2} F(q^{-1/2} X, q^{-1/2} Y) computed by rescaling f_chi_closed over Q(s).
FormalGroupLaw drinfeld_form(int order);
// (X + Y + (s^{-1} + s) XY) / (1 + XY).
FormalGroupLaw drinfeld_closed(int order);
// Both routes agree (series and closed forms) and the rescaled law is a formal group law.
VerificationReport drinfeld_check(int order);

// (n + 1) [T^{n+1}] log_chi: the image of CP^n, 1 + q + ... + q^n.
Scalar cp_image(int n);

// iota with F(T, iota(T)) = 0, solved degree by degree.
Series fgl_inverse(const FormalGroupLaw& law, int order);

// Which exponent c makes 1 - exp(-t log_chi(T)) = 1 - [Q](T)^{-c t} hold.
struct CartierResult {
  VerificationReport candidates;
  // Name of the unique passing candidate under the 1 - e^{-u} reading, if any.
  std::optional<std::string> selected;
};

inline constexpr const char* kCartierDeterminant = "c = 1 - q";
inline constexpr const char* kCartierDerived = "c = 1/(1 - q)";

// Compares coefficients t^a T^b with a <= t_order, b <= T_order.
CartierResult cartier_check(int t_order, int T_order);
// 1 - [Q](T)^{-c t} as a series in (t, T) of total order N.
BiSeries cartier_rhs(const Scalar& c, int order);

}  // namespace qfgl
