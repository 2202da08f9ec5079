#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qfgl/report.hpp"
#include "qfgl/scalar.hpp"

namespace qfgl {

// CP^{n_1} x ... x CP^{n_r}; no factors is the point.
struct Variety {
  std::string name;
  std::vector<int> factors;

  int dimension() const;
};

// Hodge numbers h^{i,j}, keyed by (i, j); zero entries are not stored.
class HodgePoly {
 public:
  HodgePoly() = default;
  static HodgePoly one();

  long long coeff(int i, int j) const;
  void add(int i, int j, long long value);
  const std::map<std::pair<int, int>, long long>& terms() const { return terms_; }
  bool is_symmetric() const;

  friend HodgePoly operator*(const HodgePoly& a, const HodgePoly& b);
  friend bool operator==(const HodgePoly&, const HodgePoly&) = default;

  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, long long> terms_;
};

HodgePoly hodge(const Variety& v);

// Y^i Z^j -> (-1)^{i+j} Y^dim. Forcing chi(CP^1) = 2 rules out reading
// Y -> iY, Z -> iY literally, which sends 1 + YZ to 1 - Y^2.
struct EulerSpecialization {
  long long chi = 0;
  // No odd total degree (imaginary part under the literal substitution) and
  // every Hodge index within the dimension.
  bool ok = false;
  // Literal substitution Y -> iY, Z -> iY: real part by power of Y, and
  // whether any odd total degree occurred.
  std::map<int, long long> literal_real;
  bool literal_has_imaginary_part = false;
};

EulerSpecialization euler_specialize(const HodgePoly& h, int dim);

// YZ -> q; throws MathError when some h^{i,j} with i != j is non-zero.
Scalar yz_to_q(const HodgePoly& h);

// Highest weight n -> multiplicity of V_n (the (n+1)-dimensional irrep).
struct SL2Rep {
  std::map<int, long long> multiplicities;

  static SL2Rep irreducible(int n, long long multiplicity = 1);
  bool is_effective() const;
  // Negative multiplicities present.
  bool is_virtual() const { return !is_effective(); }
  long long dimension() const;
  // Top weight with non-zero multiplicity; -1 for the zero representation.
  int top_weight() const;
  std::string to_string() const;

  friend SL2Rep operator+(const SL2Rep& a, const SL2Rep& b);
  friend bool operator==(const SL2Rep& a, const SL2Rep& b);
};

SL2Rep cg_tensor(const SL2Rep& a, const SL2Rep& b);
// sum_n m_n (s^n + s^{n-2} + ... + s^{-n}).
Scalar character(const SL2Rep& r);
// Inverse of character; throws MathError if x is not an integral symmetric
// Laurent polynomial in s.
SL2Rep rep_from_character(const Scalar& x);
// s^w character(r) for the top weight w; requires an effective r.
Scalar qdim_normalized(const SL2Rep& r);
// k-th exterior power via e_k of the weight multiset; requires an effective r.
SL2Rep lambda_rep(const SL2Rep& r, int k);
// Tensor product of V_{n_i} over the factors (diagonal Lefschetz action).
SL2Rep rep_of_variety(const Variety& v);

// yz_to_q(hodge(v)), qdim_normalized(rep_of_variety(v)) and prod cp_image(n_i),
// compared pairwise.
VerificationReport diagram_check(const Variety& v);

class CatalogError : public std::runtime_error {
 public:
  CatalogError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Lines "name n1 n2 ... nr"; blank lines and lines starting with '#' are skipped.
std::vector<Variety> parse_catalog(std::istream& in);
// CP^{n1} x ... x CP^{nr} for every factor list of the given length with entries in [0, max_n].
std::vector<Variety> enumerate_products(int factors, int max_n);
Variety product_of_projective_spaces(std::vector<int> factors);

}  // namespace qfgl
