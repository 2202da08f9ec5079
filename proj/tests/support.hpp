#pragma once

#include "oracles.hpp"
#include "qfgl/qseries.hpp"
#include "qfgl/scalar.hpp"

namespace support {

inline qfgl::Scalar scalar_from(const oracle::Poly& p) {
  std::vector<qfgl::Rational> c(2 * p.size());
  for (std::size_t k = 0; k < p.size(); ++k) c[2 * k] = p[k];
  return qfgl::Scalar(qfgl::LaurentPoly(std::move(c), 0));
}

inline qfgl::QSeries qseries_from(const oracle::Poly& p, int order) {
  qfgl::QSeries r(order);
  for (int k = 0; k <= order && k < static_cast<int>(p.size()); ++k) r.set(k, p[static_cast<std::size_t>(k)]);
  return r;
}

inline qfgl::Scalar parse_q(std::initializer_list<long> c) { return qfgl::Scalar::q_poly(c); }

}  // namespace support
