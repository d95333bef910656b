#include "singspec/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "singspec/error.hpp"

namespace singspec {

Variables make_variables(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::uint64_t total_degree(const ExponentVector& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Variables vars) : vars_(std::move(vars)) {}

Polynomial::Polynomial(Variables vars, TermMap terms) : vars_(std::move(vars)) {
  for (auto& [m, c] : terms) add_term(m, c);
}

Polynomial Polynomial::constant(Variables vars, const Rational& c) {
  Polynomial p(vars);
  p.add_term(ExponentVector(vars->size(), 0), c);
  return p;
}

Polynomial Polynomial::monomial(Variables vars, ExponentVector m, const Rational& c) {
  if (m.size() != vars->size()) throw LengthMismatch("exponent vector length does not match variables");
  Polynomial p(std::move(vars));
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(Variables vars, std::size_t index) {
  ExponentVector m(vars->size(), 0);
  m.at(index) = 1;
  return monomial(std::move(vars), std::move(m));
}

void Polynomial::add_term(const ExponentVector& m, const Rational& c) {
  if (m.size() != vars_->size()) throw LengthMismatch("exponent vector length does not match variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (vars_ != o.vars_ && *vars_ != *o.vars_) {
    throw LengthMismatch("polynomials over different variable lists");
  }
}

Rational Polynomial::coefficient(const ExponentVector& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  if (index >= vars_->size()) throw LengthMismatch("derivative index out of range");
  Polynomial d(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[index] == 0) continue;
    ExponentVector dm = m;
    --dm[index];
    d.add_term(dm, c * Rational(static_cast<long>(m[index])));
  }
  return d;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r(a.vars_);
  ExponentVector m(a.num_variables());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    const bool is_const = total_degree(m) == 0;
    if (mag != Rational(1) || is_const) {
      os << mag.str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      os << (*vars_)[i];
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Weights

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const auto& w = weights_[i];
    if (w.sign() <= 0 || w >= Rational(1)) {
      throw OutOfRange("weight " + std::to_string(i) + " = " + w.str() + " is not in (0,1)");
    }
  }
}

WeightVector WeightVector::parse(const std::string& text) {
  std::vector<Rational> ws;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string piece = text.substr(start, comma - start);
    piece.erase(std::remove_if(piece.begin(), piece.end(), [](unsigned char ch) { return std::isspace(ch) != 0; }), piece.end());
    try {
      ws.push_back(Rational::parse(piece));
    } catch (const std::invalid_argument& e) {
      throw SyntaxError(start, std::string("bad weight: ") + e.what());
    }
    start = comma + 1;
  }
  return WeightVector(std::move(ws));
}

Rational WeightVector::sum() const {
  Rational s;
  for (const auto& w : weights_) s += w;
  return s;
}

Integer WeightVector::common_denominator() const {
  Integer m = 1;
  for (const auto& w : weights_) m = lcm(m, w.denominator());
  return m;
}

Rational WeightVector::milnor_product() const {
  Rational p = 1;
  for (const auto& w : weights_) p *= Rational(1) / w - Rational(1);
  return p;
}

std::string WeightVector::str() const {
  std::string s;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) s += ",";
    s += weights_[i].str();
  }
  return s;
}

WeightVector concat(const WeightVector& a, const WeightVector& b) {
  std::vector<Rational> all = a.values();
  all.insert(all.end(), b.begin(), b.end());
  return WeightVector(std::move(all));
}

Rational weighted_degree(const ExponentVector& m, const WeightVector& w) {
  if (m.size() != w.size()) {
    throw LengthMismatch("exponent vector has length " + std::to_string(m.size()) +
                         " but weight vector has length " + std::to_string(w.size()));
  }
  Rational d;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) d += w[i] * Rational(static_cast<long>(m[i]));
  }
  return d;
}

bool is_weighted_homogeneous(const Polynomial& f, const WeightVector& w) {
  if (f.num_variables() != w.size()) throw LengthMismatch("weight count differs from variable count");
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& t) { return weighted_degree(t.first, w) == Rational(1); });
}

WeightVector infer_weights(const Polynomial& f) {
  const std::size_t n = f.num_variables();
  // Augmented rows [m_1 ... m_n | 1].
  std::vector<std::vector<Rational>> rows;
  for (const auto& [m, c] : f.terms()) {
    std::vector<Rational> row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = Rational(static_cast<long>(m[i]));
    row[n] = 1;
    rows.push_back(std::move(row));
  }

  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const Rational inv = Rational(1) / rows[rank][col];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Rational factor = rows[r][col];
      for (std::size_t k = col; k <= n; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!rows[r][n].is_zero()) throw Inconsistent("no weights make every monomial of degree 1");
  }
  if (rank < n) {
    throw Underdetermined("weight system has rank " + std::to_string(rank) + " < " +
                          std::to_string(n) + "; pass weights explicitly");
  }
  std::vector<Rational> w(n);
  for (std::size_t r = 0; r < rank; ++r) w[pivot_cols[r]] = rows[r][n];
  return WeightVector(std::move(w));
}

std::vector<Polynomial> jacobian_generators(const Polynomial& f) {
  std::vector<Polynomial> gens;
  gens.reserve(f.num_variables());
  for (std::size_t i = 0; i < f.num_variables(); ++i) gens.push_back(f.derivative(i));
  return gens;
}

}  // namespace singspec
