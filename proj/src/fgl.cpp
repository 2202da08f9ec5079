#include "qfgl/fgl.hpp"

#include "qfgl/mobius.hpp"

namespace qfgl {

namespace {

const std::array<std::string, 2> kXY{"X", "Y"};
const std::array<std::string, 3> kXYZ{"X", "Y", "Z"};

std::string describe(std::span<const std::string> vars, std::span<const int> e, const Scalar& lhs, const Scalar& rhs) {
  return "coefficient of " + monomial_string(vars, e) + ": " + lhs.to_string() + " vs " + rhs.to_string();
}

template <int V>
CheckResult compare(std::string name, const MultiSeries<V>& lhs, const MultiSeries<V>& rhs, std::vector<int> order) {
  CheckResult c{std::move(name), std::move(order), true, {}, {}};
  if (auto diff = lhs.first_difference(rhs)) {
    c.passed = false;
    c.failing_index.assign(diff->begin(), diff->end());
    c.detail = describe(lhs.variables(), *diff, lhs.coeff(*diff), rhs.coeff(*diff));
  }
  return c;
}

CheckResult compare(std::string name, const Series& lhs, const Series& rhs, int order) {
  CheckResult c{std::move(name), {order}, true, {}, {}};
  if (auto k = lhs.first_difference(rhs)) {
    c.passed = false;
    c.failing_index = {*k};
    c.detail = "coefficient of " + lhs.variable() + "^" + std::to_string(*k) + ": " + lhs[*k].to_string() + " vs " +
               rhs[*k].to_string();
  }
  return c;
}

}  // namespace

FormalGroupLaw law_from_closed(const ClosedForm& closed, int order) {
  return {closed.numerator.to_series(kXY, order) / closed.denominator.to_series(kXY, order), closed};
}

bool closed_forms_equal(const ClosedForm& a, const ClosedForm& b) {
  return a.numerator * b.denominator == b.numerator * a.denominator;
}

FormalGroupLaw multiplicative_law(int order) {
  ClosedForm closed;
  closed.numerator.add_term(1, 0, 1);
  closed.numerator.add_term(0, 1, 1);
  closed.numerator.add_term(1, 1, 1);
  closed.denominator.add_term(0, 0, 1);
  return law_from_closed(closed, order);
}

Series log_chi(int order) {
  if (order < 1) throw MathError("log_chi: order must be at least 1");
  const Series bracket_q = mob_apply(Q_matrix(), Series::identity("T", order));
  return log1(bracket_q) * (Scalar(1) / mob_det(Q_matrix()));
}

Series exp_chi(int order) {
  if (order < 1) throw MathError("exp_chi: order must be at least 1");
  const Series scaled = Series::identity("T", order) * mob_det(Q_matrix());
  return mob_apply(Q_inv_matrix(), exp0(scaled));
}

FormalGroupLaw f_chi_closed(int order) {
  if (order < 2) throw MathError("f_chi_closed: order must be at least 2");
  const Scalar q = Scalar::q();
  ClosedForm closed;
  closed.numerator.add_term(1, 0, 1);
  closed.numerator.add_term(0, 1, 1);
  closed.numerator.add_term(1, 1, Scalar(1) + q);
  closed.denominator.add_term(0, 0, 1);
  closed.denominator.add_term(1, 1, q);
  return law_from_closed(closed, order);
}

FormalGroupLaw f_chi_from_log(int order) {
  if (order < 2) throw MathError("f_chi_from_log: order must be at least 2");
  const Series log = log_chi(order);
  const BiSeries sum = embed<2>(log, kXY, 0) + embed<2>(log, kXY, 1);
  return {compose(exp_chi(order), sum), std::nullopt};
}

FormalGroupLaw f_chi_log_closed(int order) {
  if (order < 2) throw MathError("f_chi_log_closed: order must be at least 2");
  const Scalar q = Scalar::q();
  ClosedForm closed;
  closed.numerator.add_term(1, 0, 1);
  closed.numerator.add_term(0, 1, 1);
  closed.numerator.add_term(1, 1, -(Scalar(1) + q));
  closed.denominator.add_term(0, 0, 1);
  closed.denominator.add_term(1, 1, -q);
  return law_from_closed(closed, order);
}

VerificationReport verify_fgl(const FormalGroupLaw& law, int order) {
  const int n = std::min(order, law.series.order());
  const BiSeries f = law.series.truncated(n);
  VerificationReport report;

  CheckResult unit = compare("unit F(X,0) = X", restrict_second_zero(f), Series::identity("X", n), n);
  if (unit.passed) {
    unit = compare("unit F(0,Y) = Y", restrict_first_zero(f), Series::identity("Y", n), n);
  }
  unit.name = "unit";
  report.add(unit);

  report.add(compare("commutativity", f, swap_variables(f), {n}));

  const TriSeries u = embed(f, kXYZ, {0, 1});
  const TriSeries v = embed(f, kXYZ, {1, 2});
  const TriSeries x = embed<3>(Series::identity("X", n), kXYZ, 0);
  const TriSeries z = embed<3>(Series::identity("Z", n), kXYZ, 2);
  report.add(compare("associativity", substitute(f, u, z), substitute(f, x, v), {n}));
  return report;
}

FormalGroupLaw drinfeld_form(int order) {
  const FormalGroupLaw chi = f_chi_closed(order);
  // Coefficient of X^i Y^j picks up s * s^{-(i+j)}.
  BiSeries rescaled(kXY, order);
  const auto monos = chi.series.monomials();
  for (std::size_t i = 0; i < monos.size(); ++i) {
    rescaled.set(monos[i], chi.series.at(i) * Scalar::s_power(1 - monos[i][0] - monos[i][1]));
  }
  ClosedForm closed;
  for (const auto& [e, c] : chi.closed->numerator.terms()) {
    closed.numerator.add_term(e[0], e[1], c * Scalar::s_power(1 - e[0] - e[1]));
  }
  for (const auto& [e, c] : chi.closed->denominator.terms()) {
    closed.denominator.add_term(e[0], e[1], c * Scalar::s_power(-e[0] - e[1]));
  }
  return {rescaled, closed};
}

FormalGroupLaw drinfeld_closed(int order) {
  ClosedForm closed;
  closed.numerator.add_term(1, 0, 1);
  closed.numerator.add_term(0, 1, 1);
  closed.numerator.add_term(1, 1, Scalar::s_power(-1) + Scalar::s());
  closed.denominator.add_term(0, 0, 1);
  closed.denominator.add_term(1, 1, 1);
  return law_from_closed(closed, order);
}

VerificationReport drinfeld_check(int order) {
  const FormalGroupLaw rescaled = drinfeld_form(order);
  const FormalGroupLaw displayed = drinfeld_closed(order);
  VerificationReport report;
  report.add(compare("rescaled series = displayed closed form", rescaled.series, displayed.series, {order}));
  CheckResult closed{"rescaled closed form = displayed closed form", {}, true, {}, {}};
  if (!closed_forms_equal(*rescaled.closed, *displayed.closed)) {
    closed.passed = false;
    closed.detail = "cross-multiplied numerators differ";
  }
  report.add(closed);
  const VerificationReport axioms = verify_fgl(rescaled, order);
  for (CheckResult c : axioms.checks()) {
    c.name = "rescaled law: " + c.name;
    report.add(std::move(c));
  }
  return report;
}

Scalar cp_image(int n) {
  if (n < 0) throw MathError("cp_image: n must be non-negative");
  return log_chi(n + 1)[n + 1] * Scalar(n + 1);
}

Series fgl_inverse(const FormalGroupLaw& law, int order) {
  const int n = std::min(order, law.series.order());
  const BiSeries& f = law.series;
  const Scalar& linear = f.coeff({0, 1});
  if (linear.is_zero()) throw MathError("fgl_inverse: law is not invertible in the second variable");
  Series iota("T", n);
  for (int m = 1; m <= n; ++m) {
    // [T^m] F(T, iota) with iota_m still zero; iota_m enters only through f_01.
    std::vector<Series> powers{Series::constant("T", m, 1)};
    const Series partial = iota.truncated(m);
    for (int j = 1; j <= m; ++j) powers.push_back(powers.back() * partial);
    Scalar acc;
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; i + j <= n && j <= m; ++j) {
        const Scalar& c = f.coeff({i, j});
        if (c.is_zero() || m - i < 0) continue;
        const Scalar& p = powers[static_cast<std::size_t>(j)][m - i];
        if (!p.is_zero()) acc += c * p;
      }
    }
    iota.set(m, -acc / linear);
  }
  return iota;
}

BiSeries cartier_rhs(const Scalar& c, int order) {
  const Series bracket_q = mob_apply(Q_matrix(), Series::identity("T", order));
  BiSeries power = pow_bivariate(bracket_q, -c, "t");
  BiSeries one({"t", "T"}, order);
  one.set({0, 0}, 1);
  return one - power;
}

CartierResult cartier_check(int t_order, int T_order) {
  if (t_order < 2 || T_order < 2) throw MathError("cartier_check: orders must be at least 2");
  const int n = t_order + T_order;
  const std::array<std::string, 2> tT{"t", "T"};
  // u = t log_chi(T)
  BiSeries u(tT, n);
  const Series log = log_chi(n);
  for (int k = 1; k + 1 <= n; ++k) u.set({1, k}, log[k]);
  BiSeries one(tT, n);
  one.set({0, 0}, 1);
  const BiSeries lhs_standard = one - exp0(-u);  // 1 - e^{-u}
  const BiSeries lhs_alternative = exp0(u) - one;  // e^u - 1

  const Scalar q = Scalar::q();
  const std::vector<std::pair<std::string, Scalar>> candidates{{kCartierDeterminant, Scalar(1) - q},
                                                               {kCartierDerived, Scalar(1) / (Scalar(1) - q)}};
  CartierResult result;
  int passing = 0;
  for (const auto& [name, c] : candidates) {
    const BiSeries rhs = cartier_rhs(c, n);
    for (int alt = 0; alt < 2; ++alt) {
      const BiSeries& lhs = alt == 0 ? lhs_standard : lhs_alternative;
      CheckResult check{name + (alt == 0 ? ", exp(u) read as 1 - e^{-u}" : ", exp(u) read as e^u - 1"),
                        {t_order, T_order},
                        true,
                        {},
                        {}};
      for (int a = 0; a <= t_order && check.passed; ++a) {
        for (int b = 0; b <= T_order; ++b) {
          if (lhs.coeff({a, b}) != rhs.coeff({a, b})) {
            check.passed = false;
            check.failing_index = {a, b};
            check.detail = describe(tT, check.failing_index, lhs.coeff({a, b}), rhs.coeff({a, b}));
            break;
          }
        }
      }
      if (alt == 0 && check.passed) {
        ++passing;
        result.selected = name;
      }
      result.candidates.add(std::move(check));
    }
  }
  if (passing != 1) result.selected.reset();
  return result;
}

}  // namespace qfgl
