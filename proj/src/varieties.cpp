#include "qfgl/varieties.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "qfgl/fgl.hpp"

namespace qfgl {

int Variety::dimension() const { return std::accumulate(factors.begin(), factors.end(), 0); }

HodgePoly HodgePoly::one() {
  HodgePoly h;
  h.add(0, 0, 1);
  return h;
}

long long HodgePoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? 0 : it->second;
}

void HodgePoly::add(int i, int j, long long value) {
  if (i < 0 || j < 0) throw MathError("HodgePoly: negative exponent");
  long long& slot = terms_[{i, j}];
  slot += value;
  if (slot == 0) terms_.erase({i, j});
}

bool HodgePoly::is_symmetric() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return coeff(t.first.second, t.first.first) == t.second; });
}

HodgePoly operator*(const HodgePoly& a, const HodgePoly& b) {
  HodgePoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add(ea.first + eb.first, ea.second + eb.second, ca * cb);
  }
  return r;
}

std::string HodgePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const auto [i, j] = e;
    long long magnitude = c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (magnitude < 0) magnitude = -magnitude;
    first = false;
    std::string mono;
    auto part = [&](char v, int k) {
      if (k == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (k > 1) mono += "^" + std::to_string(k);
    };
    part('Y', i);
    part('Z', j);
    if (mono.empty()) {
      os << magnitude;
    } else {
      if (magnitude != 1) os << magnitude << "*";
      os << mono;
    }
  }
  return os.str();
}

HodgePoly hodge(const Variety& v) {
  HodgePoly h = HodgePoly::one();
  for (int n : v.factors) {
    if (n < 0) throw MathError("hodge: negative factor dimension");
    HodgePoly cp;
    for (int k = 0; k <= n; ++k) cp.add(k, k, 1);
    h = h * cp;
  }
  return h;
}

EulerSpecialization euler_specialize(const HodgePoly& h, int dim) {
  EulerSpecialization r;
  r.ok = true;
  for (const auto& [e, c] : h.terms()) {
    const auto [i, j] = e;
    const int d = i + j;
    r.chi += d % 2 == 0 ? c : -c;
    if (i > dim || j > dim) r.ok = false;
    if (d % 2 == 1) {
      r.ok = false;
      r.literal_has_imaginary_part = true;
    } else {
      long long& slot = r.literal_real[d];
      slot += (d / 2) % 2 == 0 ? c : -c;
      if (slot == 0) r.literal_real.erase(d);
    }
  }
  return r;
}

Scalar yz_to_q(const HodgePoly& h) {
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : h.terms()) {
    const auto [i, j] = e;
    if (i != j) {
      throw MathError("yz_to_q: off-diagonal Hodge number h^{" + std::to_string(i) + "," + std::to_string(j) + "}");
    }
    if (coeffs.size() <= static_cast<std::size_t>(2 * i)) coeffs.resize(static_cast<std::size_t>(2 * i) + 1);
    coeffs[static_cast<std::size_t>(2 * i)] = Rational(Integer(std::to_string(c)));
  }
  return Scalar(LaurentPoly(std::move(coeffs), 0));
}

// ---------------------------------------------------------------------------

SL2Rep SL2Rep::irreducible(int n, long long multiplicity) {
  if (n < 0) throw MathError("SL2Rep: negative highest weight");
  SL2Rep r;
  if (multiplicity != 0) r.multiplicities[n] = multiplicity;
  return r;
}

bool SL2Rep::is_effective() const {
  return std::all_of(multiplicities.begin(), multiplicities.end(), [](const auto& m) { return m.second >= 0; });
}

long long SL2Rep::dimension() const {
  long long d = 0;
  for (const auto& [n, m] : multiplicities) d += m * (n + 1);
  return d;
}

int SL2Rep::top_weight() const {
  for (auto it = multiplicities.rbegin(); it != multiplicities.rend(); ++it) {
    if (it->second != 0) return it->first;
  }
  return -1;
}

std::string SL2Rep::to_string() const {
  std::string out;
  for (auto it = multiplicities.rbegin(); it != multiplicities.rend(); ++it) {
    const auto [n, m] = *it;
    if (m == 0) continue;
    if (out.empty()) {
      if (m < 0) out += "-";
    } else {
      out += m < 0 ? " - " : " + ";
    }
    const long long a = m < 0 ? -m : m;
    if (a != 1) out += std::to_string(a) + "*";
    out += "V" + std::to_string(n);
  }
  return out.empty() ? "0" : out;
}

SL2Rep operator+(const SL2Rep& a, const SL2Rep& b) {
  SL2Rep r = a;
  for (const auto& [n, m] : b.multiplicities) {
    long long& slot = r.multiplicities[n];
    slot += m;
    if (slot == 0) r.multiplicities.erase(n);
  }
  return r;
}

bool operator==(const SL2Rep& a, const SL2Rep& b) {
  auto nonzero = [](const SL2Rep& r) {
    std::map<int, long long> m;
    for (const auto& [n, c] : r.multiplicities) {
      if (c != 0) m[n] = c;
    }
    return m;
  };
  return nonzero(a) == nonzero(b);
}

SL2Rep cg_tensor(const SL2Rep& a, const SL2Rep& b) {
  SL2Rep r;
  for (const auto& [m, cm] : a.multiplicities) {
    for (const auto& [n, cn] : b.multiplicities) {
      for (int k = std::abs(m - n); k <= m + n; k += 2) r = r + SL2Rep::irreducible(k, cm * cn);
    }
  }
  return r;
}

namespace {

LaurentPoly string_character(int n) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(2 * n) + 1);
  for (std::size_t k = 0; k < coeffs.size(); k += 2) coeffs[k] = 1;
  return LaurentPoly(std::move(coeffs), -n);
}

Rational to_rational(long long v) { return Rational(Integer(std::to_string(v))); }

}  // namespace

Scalar character(const SL2Rep& r) {
  LaurentPoly acc;
  for (const auto& [n, m] : r.multiplicities) acc += string_character(n) * to_rational(m);
  return Scalar(acc);
}

SL2Rep rep_from_character(const Scalar& x) {
  if (!x.is_laurent_polynomial()) throw MathError("rep_from_character: not a Laurent polynomial: " + x.to_string());
  LaurentPoly rest = x.numerator();
  if (!rest.has_integer_coefficients()) throw MathError("rep_from_character: non-integral coefficients");
  for (int k = rest.valuation(); k <= rest.degree(); ++k) {
    if (rest.coeff(k) != rest.coeff(-k)) throw MathError("rep_from_character: not symmetric under s -> 1/s");
  }
  SL2Rep r;
  while (!rest.is_zero()) {
    const int n = rest.degree();
    const Rational c = rest.highest_coeff();
    r = r + SL2Rep::irreducible(n, c.get_num().get_si());
    rest -= string_character(n) * c;
  }
  return r;
}

Scalar qdim_normalized(const SL2Rep& r) {
  if (!r.is_effective()) throw MathError("qdim_normalized: virtual representation " + r.to_string());
  const int w = r.top_weight();
  if (w < 0) return Scalar(0);
  return Scalar::s_power(w) * character(r);
}

SL2Rep lambda_rep(const SL2Rep& r, int k) {
  if (!r.is_effective()) throw MathError("lambda_rep: virtual representation " + r.to_string());
  if (k < 0) throw MathError("lambda_rep: negative k");
  std::vector<LaurentPoly> e(static_cast<std::size_t>(k) + 1);
  e[0] = LaurentPoly(Rational(1));
  for (const auto& [n, m] : r.multiplicities) {
    for (long long copy = 0; copy < m; ++copy) {
      for (int j = 0; j <= n; ++j) {
        const LaurentPoly weight = LaurentPoly::monomial(1, n - 2 * j);
        for (int i = k; i >= 1; --i) e[static_cast<std::size_t>(i)] += e[static_cast<std::size_t>(i - 1)] * weight;
      }
    }
  }
  return rep_from_character(Scalar(e.back()));
}

SL2Rep rep_of_variety(const Variety& v) {
  SL2Rep r = SL2Rep::irreducible(0);
  for (int n : v.factors) r = cg_tensor(r, SL2Rep::irreducible(n));
  return r;
}

VerificationReport diagram_check(const Variety& v) {
  const Scalar hodge_route = yz_to_q(hodge(v));
  const Scalar sl2_route = qdim_normalized(rep_of_variety(v));
  Scalar orientation_route = 1;
  for (int n : v.factors) orientation_route *= cp_image(n);

  VerificationReport report;
  auto compare = [&](const std::string& name, const Scalar& a, const Scalar& b) {
    CheckResult c{v.name + ": " + name, {v.dimension()}, a == b, {}, a.to_string()};
    if (!c.passed) c.detail = a.to_string() + " vs " + b.to_string();
    report.add(std::move(c));
  };
  compare("hodge = sl2", hodge_route, sl2_route);
  compare("hodge = orientation", hodge_route, orientation_route);
  compare("sl2 = orientation", sl2_route, orientation_route);
  return report;
}

CatalogError::CatalogError(int line, const std::string& message)
    : std::runtime_error("catalog line " + std::to_string(line) + ": " + message), line_(line) {}

std::vector<Variety> parse_catalog(std::istream& in) {
  std::vector<Variety> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    Variety v;
    if (!(fields >> v.name) || v.name.front() == '#') continue;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      int n = -1;
      try {
        n = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || n < 0) throw CatalogError(number, "bad factor '" + token + "'");
      v.factors.push_back(n);
    }
    out.push_back(std::move(v));
  }
  return out;
}

Variety product_of_projective_spaces(std::vector<int> factors) {
  std::string name;
  for (int n : factors) {
    if (!name.empty()) name += "x";
    name += "CP" + std::to_string(n);
  }
  return {name.empty() ? "pt" : name, std::move(factors)};
}

std::vector<Variety> enumerate_products(int factors, int max_n) {
  std::vector<Variety> out;
  std::vector<int> current(static_cast<std::size_t>(factors), 0);
  while (true) {
    out.push_back(product_of_projective_spaces(current));
    int i = factors - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == max_n) current[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace qfgl
