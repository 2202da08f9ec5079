#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qfgl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an operation is applied outside its domain: division by zero,
/// a pole at an evaluation point, a violated series precondition.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace qfgl
