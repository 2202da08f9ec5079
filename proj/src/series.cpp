#include "qfgl/series.hpp"

#include <algorithm>
#include <sstream>

namespace qfgl {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw MathError(message);
}

}  // namespace

// ---------------------------------------------------------------------------
// Series

Series::Series(std::string variable, int order) : var_(std::move(variable)) {
  require(order >= 0, "series order must be non-negative");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

Series::Series(std::string variable, int order, std::vector<Scalar> coeffs)
    : var_(std::move(variable)), c_(std::move(coeffs)) {
  require(order >= 0, "series order must be non-negative");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

Series Series::identity(std::string variable, int order) {
  Series r(std::move(variable), order);
  if (order >= 1) r.c_[1] = Scalar(1);
  return r;
}

Series Series::constant(std::string variable, int order, const Scalar& c) {
  Series r(std::move(variable), order);
  r.c_[0] = c;
  return r;
}

const Scalar& Series::operator[](int k) const {
  require(k >= 0 && k <= order(), "series coefficient index beyond truncation order");
  return c_[static_cast<std::size_t>(k)];
}

void Series::set(int k, Scalar value) {
  require(k >= 0 && k <= order(), "series coefficient index beyond truncation order");
  c_[static_cast<std::size_t>(k)] = std::move(value);
}

Series Series::truncated(int order) const {
  require(order <= this->order(), "cannot extend a truncated series");
  return Series(var_, order, std::vector<Scalar>(c_.begin(), c_.begin() + order + 1));
}

Series Series::derivative() const {
  if (order() == 0) return Series(var_, 0);
  Series r(var_, order() - 1);
  for (int k = 1; k <= order(); ++k) r.c_[static_cast<std::size_t>(k - 1)] = c_[static_cast<std::size_t>(k)] * Scalar(k);
  return r;
}

Series Series::transform(const std::function<Scalar(const Scalar&)>& fn) const {
  Series r(var_, order());
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = fn(c_[k]);
  return r;
}

std::optional<int> Series::first_difference(const Series& o) const {
  const int n = std::min(order(), o.order());
  for (int k = 0; k <= n; ++k) {
    if (c_[static_cast<std::size_t>(k)] != o.c_[static_cast<std::size_t>(k)]) return k;
  }
  return std::nullopt;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Series& Series::operator+=(const Series& o) {
  require(var_ == o.var_, "series variables differ: " + var_ + " vs " + o.var_);
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series& Series::operator*=(const Scalar& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  require(a.var_ == b.var_, "series variables differ: " + a.var_ + " vs " + b.var_);
  const int n = std::min(a.order(), b.order());
  Series r(a.var_, n);
  for (int i = 0; i <= n; ++i) {
    const Scalar& ai = a.c_[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      const Scalar& bj = b.c_[static_cast<std::size_t>(j)];
      if (bj.is_zero()) continue;
      r.c_[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  return r;
}

Series operator/(const Series& a, const Series& b) {
  require(a.var_ == b.var_, "series variables differ: " + a.var_ + " vs " + b.var_);
  require(!b.c_[0].is_zero(), "series division: constant term of the divisor is not invertible");
  const int n = std::min(a.order(), b.order());
  Series r(a.var_, n);
  for (int k = 0; k <= n; ++k) {
    Scalar acc = a.c_[static_cast<std::size_t>(k)];
    for (int j = 1; j <= k; ++j) {
      const Scalar& bj = b.c_[static_cast<std::size_t>(j)];
      if (bj.is_zero()) continue;
      acc -= bj * r.c_[static_cast<std::size_t>(k - j)];
    }
    r.c_[static_cast<std::size_t>(k)] = acc / b.c_[0];
  }
  return r;
}

std::string Series::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    const Scalar& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (k > 0) os << "*" << var_ << "^" << k;
  }
  if (first) os << "0";
  os << " + O(" << var_ << "^" << order() + 1 << ")";
  return os.str();
}

Series compose(const Series& f, const Series& g) {
  require(g[0].is_zero(), "compose: inner series must have zero constant term");
  const int n = std::min(f.order(), g.order());
  const Series inner = g.truncated(n);
  Series r = Series::constant(g.variable(), n, f[n]);
  for (int k = n - 1; k >= 0; --k) {
    r = r * inner;
    r.set(0, r[0] + f[k]);
  }
  return r;
}

Series reverse(const Series& f) {
  require(f[0].is_zero(), "reverse: series must have zero constant term");
  const int n = f.order();
  require(n >= 1 && !f[1].is_zero(), "reverse: linear coefficient must be invertible");
  // powers[k][m] = [T^m] g^k, filled one degree at a time.
  std::vector<std::vector<Scalar>> powers(static_cast<std::size_t>(n) + 1,
                                          std::vector<Scalar>(static_cast<std::size_t>(n) + 1));
  Series g(f.variable(), n);
  for (int m = 1; m <= n; ++m) {
    Scalar rest;
    for (int k = 2; k <= m; ++k) {
      Scalar acc;
      // [T^m] g^k = sum_j g_j [T^{m-j}] g^{k-1}; only g_1..g_{m-1} are needed.
      for (int j = 1; j <= m - k + 1; ++j) {
        const Scalar& lower = powers[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - j)];
        if (g[j].is_zero() || lower.is_zero()) continue;
        acc += g[j] * lower;
      }
      powers[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] = acc;
      if (!f[k].is_zero() && !acc.is_zero()) rest += f[k] * acc;
    }
    const Scalar target = m == 1 ? Scalar(1) : Scalar(0);
    g.set(m, (target - rest) / f[1]);
    powers[1][static_cast<std::size_t>(m)] = g[m];
  }
  return g;
}

Series log1(const Series& f) {
  require(f[0].is_one(), "log1: constant term must be 1");
  const int n = f.order();
  Series r(f.variable(), n);
  if (n == 0) return r;
  const Series ratio = f.derivative() / f.truncated(n - 1);
  for (int k = 1; k <= n; ++k) r.set(k, ratio[k - 1] / Scalar(k));
  return r;
}

Series exp0(const Series& f) {
  require(f[0].is_zero(), "exp0: constant term must be 0");
  const int n = f.order();
  Series r(f.variable(), n);
  r.set(0, Scalar(1));
  for (int m = 1; m <= n; ++m) {
    Scalar acc;
    for (int k = 1; k <= m; ++k) {
      if (f[k].is_zero()) continue;
      acc += Scalar(k) * f[k] * r[m - k];
    }
    r.set(m, acc / Scalar(m));
  }
  return r;
}

Series pow_formal(const Series& f, const Scalar& c) {
  require(f[0].is_one(), "pow_formal: constant term must be 1");
  return exp0(log1(f) * c);
}

// ---------------------------------------------------------------------------
// MultiSeries

template <int V>
std::size_t MultiSeries<V>::Layout::index(const Exponent& e) const {
  std::size_t flat = 0;
  for (int v = 0; v < V; ++v) {
    if (e[v] < 0 || e[v] > order) throw MathError("monomial beyond truncation order");
    flat = flat * static_cast<std::size_t>(order + 1) + static_cast<std::size_t>(e[v]);
  }
  const int idx = lookup[flat];
  if (idx < 0) throw MathError("monomial beyond truncation order");
  return static_cast<std::size_t>(idx);
}

template <int V>
std::shared_ptr<const typename MultiSeries<V>::Layout> MultiSeries<V>::make_layout(int order) {
  require(order >= 0, "series order must be non-negative");
  auto layout = std::make_shared<Layout>();
  layout->order = order;
  std::size_t cells = 1;
  for (int v = 0; v < V; ++v) cells *= static_cast<std::size_t>(order + 1);
  layout->lookup.assign(cells, -1);
  Exponent e{};
  // Exponent tuples of total degree d in lexicographic order.
  std::function<void(int, int)> emit = [&](int slot, int remaining) {
    if (slot == V - 1) {
      e[slot] = remaining;
      layout->monomials.push_back(e);
      return;
    }
    for (int x = 0; x <= remaining; ++x) {
      e[slot] = x;
      emit(slot + 1, remaining - x);
    }
  };
  for (int d = 0; d <= order; ++d) {
    layout->degree_start.push_back(layout->monomials.size());
    emit(0, d);
  }
  layout->degree_start.push_back(layout->monomials.size());
  for (std::size_t i = 0; i < layout->monomials.size(); ++i) {
    std::size_t flat = 0;
    for (int v = 0; v < V; ++v) {
      flat = flat * static_cast<std::size_t>(order + 1) + static_cast<std::size_t>(layout->monomials[i][v]);
    }
    layout->lookup[flat] = static_cast<int>(i);
  }
  return layout;
}

template <int V>
MultiSeries<V>::MultiSeries(std::array<std::string, V> variables, int order)
    : vars_(std::move(variables)), layout_(make_layout(order)), c_(layout_->monomials.size()) {}

template <int V>
const Scalar& MultiSeries<V>::coeff(const Exponent& e) const {
  return c_[layout_->index(e)];
}

template <int V>
void MultiSeries<V>::set(const Exponent& e, Scalar value) {
  c_[layout_->index(e)] = std::move(value);
}

template <int V>
void MultiSeries<V>::require_compatible(const MultiSeries& o) const {
  require(vars_ == o.vars_, "multivariate series variables differ");
}

template <int V>
MultiSeries<V> MultiSeries<V>::truncated(int order) const {
  require(order <= this->order(), "cannot extend a truncated series");
  if (order == this->order()) return *this;
  MultiSeries r(vars_, order);
  std::copy(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(r.c_.size()), r.c_.begin());
  return r;
}

template <int V>
MultiSeries<V> MultiSeries<V>::transform(const std::function<Scalar(const Scalar&)>& fn) const {
  MultiSeries r = *this;
  for (auto& c : r.c_) c = fn(c);
  return r;
}

template <int V>
std::optional<typename MultiSeries<V>::Exponent> MultiSeries<V>::first_difference(const MultiSeries& o) const {
  require_compatible(o);
  const std::size_t n = std::min(c_.size(), o.c_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] != o.c_[i]) return layout_->monomials[i];
  }
  return std::nullopt;
}

template <int V>
MultiSeries<V> MultiSeries<V>::operator-() const {
  MultiSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

template <int V>
MultiSeries<V>& MultiSeries<V>::operator+=(const MultiSeries& o) {
  require_compatible(o);
  if (o.order() < order()) *this = truncated(o.order());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

template <int V>
MultiSeries<V>& MultiSeries<V>::operator-=(const MultiSeries& o) {
  return *this += -o;
}

template <int V>
MultiSeries<V>& MultiSeries<V>::operator*=(const Scalar& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

template <int V>
MultiSeries<V> MultiSeries<V>::multiply(const MultiSeries& o) const {
  require_compatible(o);
  const int n = std::min(order(), o.order());
  MultiSeries r(vars_, n);
  const Layout& lay = *r.layout_;
  const auto& ma = layout_->monomials;
  const auto& mb = o.layout_->monomials;
  for (std::size_t ia = 0; ia < r.c_.size(); ++ia) {
    const Scalar& a = c_[ia];
    if (a.is_zero()) continue;
    int da = 0;
    for (int v = 0; v < V; ++v) da += ma[ia][v];
    const std::size_t limit = lay.degree_start[static_cast<std::size_t>(n - da + 1)];
    for (std::size_t ib = 0; ib < limit; ++ib) {
      const Scalar& b = o.c_[ib];
      if (b.is_zero()) continue;
      Exponent e;
      for (int v = 0; v < V; ++v) e[v] = ma[ia][v] + mb[ib][v];
      r.c_[lay.index(e)] += a * b;
    }
  }
  return r;
}

template <int V>
MultiSeries<V> MultiSeries<V>::divide(const MultiSeries& o) const {
  require_compatible(o);
  const Scalar& b0 = o.c_[0];
  require(!b0.is_zero(), "series division: constant term of the divisor is not invertible");
  const int n = std::min(order(), o.order());
  // 1/b = (1/b0) * sum_k (-u)^k with u = b/b0 - 1.
  MultiSeries u = o.truncated(n) * Scalar(Scalar(1) / b0);
  u.c_[0] = Scalar(0);
  MultiSeries neg_u = -u;
  MultiSeries inverse(vars_, n);
  inverse.c_[0] = Scalar(1);
  MultiSeries power = inverse;
  for (int k = 1; k <= n; ++k) {
    power = power * neg_u;
    inverse += power;
  }
  inverse *= Scalar(Scalar(1) / b0);
  return truncated(n) * inverse;
}

template <int V>
bool MultiSeries<V>::equals(const MultiSeries& o) const {
  return vars_ == o.vars_ && order() == o.order() && c_ == o.c_;
}

template class MultiSeries<2>;
template class MultiSeries<3>;

template <int V>
MultiSeries<V> embed(const Series& f, std::array<std::string, V> variables, int slot) {
  require(slot >= 0 && slot < V, "embed: slot out of range");
  MultiSeries<V> r(std::move(variables), f.order());
  for (int k = 0; k <= f.order(); ++k) {
    typename MultiSeries<V>::Exponent e{};
    e[slot] = k;
    r.set(e, f[k]);
  }
  return r;
}

template BiSeries embed<2>(const Series&, std::array<std::string, 2>, int);
template TriSeries embed<3>(const Series&, std::array<std::string, 3>, int);

TriSeries embed(const BiSeries& f, std::array<std::string, 3> variables, std::array<int, 2> slots) {
  TriSeries r(std::move(variables), f.order());
  const auto monos = f.monomials();
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (f.at(i).is_zero()) continue;
    TriSeries::Exponent e{};
    e[slots[0]] += monos[i][0];
    e[slots[1]] += monos[i][1];
    r.set(e, f.at(i));
  }
  return r;
}

template <int V>
MultiSeries<V> compose(const Series& f, const MultiSeries<V>& g) {
  typename MultiSeries<V>::Exponent zero{};
  require(g.coeff(zero).is_zero(), "compose: inner series must have zero constant term");
  const int n = std::min(f.order(), g.order());
  const MultiSeries<V> inner = g.truncated(n);
  MultiSeries<V> r(g.variables(), n);
  r.set(zero, f[n]);
  for (int k = n - 1; k >= 0; --k) {
    r = r * inner;
    r.set(zero, r.coeff(zero) + f[k]);
  }
  return r;
}

template BiSeries compose<2>(const Series&, const BiSeries&);
template TriSeries compose<3>(const Series&, const TriSeries&);

template <int V>
MultiSeries<V> exp0(const MultiSeries<V>& g) {
  typename MultiSeries<V>::Exponent zero{};
  require(g.coeff(zero).is_zero(), "exp0: constant term must be 0");
  const int n = g.order();
  MultiSeries<V> r(g.variables(), n);
  r.set(zero, Scalar(1));
  MultiSeries<V> power = r;
  for (int k = 1; k <= n; ++k) {
    power = power * g * Scalar(Rational(1, k));
    r += power;
  }
  return r;
}

template BiSeries exp0<2>(const BiSeries&);
template TriSeries exp0<3>(const TriSeries&);

TriSeries substitute(const BiSeries& f, const TriSeries& u, const TriSeries& v) {
  const TriSeries::Exponent zero{};
  require(u.coeff(zero).is_zero() && v.coeff(zero).is_zero(),
          "substitute: inner series must have zero constant term");
  const int n = std::min({f.order(), u.order(), v.order()});
  const TriSeries uu = u.truncated(n);
  const TriSeries vv = v.truncated(n);
  std::vector<TriSeries> u_powers;
  u_powers.reserve(static_cast<std::size_t>(n) + 1);
  TriSeries one(u.variables(), n);
  one.set(zero, Scalar(1));
  u_powers.push_back(one);
  for (int i = 1; i <= n; ++i) u_powers.push_back(u_powers.back() * uu);
  // Horner in v: sum_j v^j A_j with A_j = sum_i f_ij u^i.
  TriSeries r(u.variables(), n);
  for (int j = n; j >= 0; --j) {
    if (j < n) r = r * vv;
    for (int i = 0; i + j <= n; ++i) {
      const Scalar& c = f.coeff({i, j});
      if (c.is_zero()) continue;
      r += u_powers[static_cast<std::size_t>(i)] * c;
    }
  }
  return r;
}

BiSeries swap_variables(const BiSeries& f) {
  BiSeries r(f.variables(), f.order());
  const auto monos = f.monomials();
  for (std::size_t i = 0; i < monos.size(); ++i) r.set({monos[i][1], monos[i][0]}, f.at(i));
  return r;
}

Series restrict_second_zero(const BiSeries& f) {
  Series r(f.variables()[0], f.order());
  for (int k = 0; k <= f.order(); ++k) r.set(k, f.coeff({k, 0}));
  return r;
}

Series restrict_first_zero(const BiSeries& f) {
  Series r(f.variables()[1], f.order());
  for (int k = 0; k <= f.order(); ++k) r.set(k, f.coeff({0, k}));
  return r;
}

BiSeries pow_bivariate(const Series& f, const Scalar& c, const std::string& t_variable) {
  require(f[0].is_one(), "pow_bivariate: constant term must be 1");
  const int n = f.order();
  Series base = f;
  base.set(0, Scalar(0));
  BiSeries r({t_variable, f.variable()}, n);
  // binom(c t, m) as coefficients in t, updated by (c t - m) / (m + 1).
  std::vector<Scalar> binom_t{Scalar(1)};
  Series power = Series::constant(f.variable(), n, Scalar(1));
  for (int m = 0; m <= n; ++m) {
    for (int a = 0; a < static_cast<int>(binom_t.size()); ++a) {
      if (binom_t[static_cast<std::size_t>(a)].is_zero()) continue;
      for (int b = m; a + b <= n; ++b) {
        if (power[b].is_zero()) continue;
        r.set({a, b}, r.coeff({a, b}) + binom_t[static_cast<std::size_t>(a)] * power[b]);
      }
    }
    std::vector<Scalar> next(binom_t.size() + 1);
    for (std::size_t a = 0; a < binom_t.size(); ++a) {
      next[a + 1] += binom_t[a] * c;
      next[a] -= binom_t[a] * Scalar(m);
    }
    for (auto& x : next) x /= Scalar(m + 1);
    binom_t = std::move(next);
    power = power * base;
  }
  return r;
}

// ---------------------------------------------------------------------------
// BiPoly

void BiPoly::add_term(int i, int j, const Scalar& c) {
  if (c.is_zero()) return;
  const std::array<int, 2> key{i, j};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const auto& t, const std::array<int, 2>& k) { return t.first < k; });
  if (it != terms_.end() && it->first == key) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {key, c});
  }
}

Scalar BiPoly::coeff(int i, int j) const {
  for (const auto& [e, c] : terms_) {
    if (e[0] == i && e[1] == j) return c;
  }
  return Scalar(0);
}

int BiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1]);
  return d;
}

BiPoly BiPoly::transform(const std::function<Scalar(const Scalar&)>& fn) const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e[0], e[1], fn(c));
  return r;
}

BiPoly BiPoly::swapped() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e[1], e[0], c);
  return r;
}

BiSeries BiPoly::to_series(std::array<std::string, 2> variables, int order) const {
  BiSeries r(std::move(variables), order);
  for (const auto& [e, c] : terms_) {
    if (e[0] + e[1] <= order) r.set(e, c);
  }
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e[0], e[1], c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e[0], e[1], -c);
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea[0] + eb[0], ea[1] + eb[1], ca * cb);
  }
  return r;
}

std::string monomial_string(std::span<const std::string> variables, std::span<const int> exponents) {
  std::string out;
  for (std::size_t v = 0; v < variables.size(); ++v) {
    if (exponents[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += variables[v];
    if (exponents[v] != 1) out += "^" + std::to_string(exponents[v]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace qfgl
