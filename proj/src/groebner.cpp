#include "singspec/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "singspec/error.hpp"

namespace singspec {

bool grevlex_greater(const ExponentVector& a, const ExponentVector& b) {
  const auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

struct GrevlexDesc {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const { return grevlex_greater(a, b); }
};

// Working representation during reduction: terms kept in descending grevlex
// order so the leading term is begin().
using Terms = std::map<ExponentVector, Rational, GrevlexDesc>;

Terms to_terms(const Polynomial& p) { return Terms(p.terms().begin(), p.terms().end()); }

Polynomial to_polynomial(const Variables& vars, const Terms& t) {
  return Polynomial(vars, Polynomial::TermMap(t.begin(), t.end()));
}

void make_monic(Terms& t) {
  if (t.empty()) return;
  const Rational inv = Rational(1) / t.begin()->second;
  for (auto& [m, c] : t) c *= inv;
}

ExponentVector lcm_exp(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

bool coprime(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) return false;
  }
  return true;
}

// t -= c * x^shift * g
void sub_multiple(Terms& t, const Rational& c, const ExponentVector& shift, const Terms& g) {
  ExponentVector m(shift.size());
  for (const auto& [gm, gc] : g) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = gm[i] + shift[i];
    auto [it, inserted] = t.try_emplace(m, -(c * gc));
    if (!inserted) {
      it->second -= c * gc;
      if (it->second.is_zero()) t.erase(it);
    }
  }
}

ExponentVector quotient(const ExponentVector& big, const ExponentVector& small) {
  ExponentVector q(big.size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = big[i] - small[i];
  return q;
}

// Full reduction of p by monic basis elements `basis` (leading exponents
// `leads`). Returns the normal form.
Terms reduce(Terms p, const std::vector<Terms>& basis, const std::vector<ExponentVector>& leads) {
  Terms rem;
  while (!p.empty()) {
    auto lead = p.begin();
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (divides(leads[k], lead->first)) {
        const Rational c = lead->second;
        const ExponentVector shift = quotient(lead->first, leads[k]);
        sub_multiple(p, c, shift, basis[k]);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.insert(*lead);
      p.erase(lead);
    }
  }
  return rem;
}

Terms spoly(const Terms& a, const Terms& b) {
  const auto& la = a.begin()->first;
  const auto& lb = b.begin()->first;
  const ExponentVector l = lcm_exp(la, lb);
  Terms s;
  sub_multiple(s, -(Rational(1) / a.begin()->second), quotient(l, la), a);
  sub_multiple(s, Rational(1) / b.begin()->second, quotient(l, lb), b);
  return s;
}

}  // namespace

ExponentVector leading_exponent(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("leading exponent of zero polynomial");
  const auto& terms = p.terms();
  return std::min_element(terms.begin(), terms.end(),
                          [](const auto& x, const auto& y) { return grevlex_greater(x.first, y.first); })
      ->first;
}

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("S-polynomial of zero polynomial");
  return to_polynomial(a.variables(), spoly(to_terms(a), to_terms(b)));
}

// ---------------------------------------------------------------------------

GroebnerBasis::GroebnerBasis(Variables vars, std::vector<Polynomial> generators)
    : vars_(std::move(vars)), generators_(std::move(generators)) {
  for (const auto& g : generators_) leads_.push_back(leading_exponent(g));
}

std::vector<ExponentVector> GroebnerBasis::leading_exponents() const { return leads_; }

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  std::vector<Terms> basis;
  for (const auto& g : generators_) basis.push_back(to_terms(g));
  return to_polynomial(vars_, reduce(to_terms(p), basis, leads_));
}

bool GroebnerBasis::is_standard(const ExponentVector& m) const {
  return std::none_of(leads_.begin(), leads_.end(), [&](const auto& l) { return divides(l, m); });
}

bool GroebnerBasis::satisfies_buchberger_criterion() const {
  std::vector<Terms> basis;
  for (const auto& g : generators_) basis.push_back(to_terms(g));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!reduce(spoly(basis[i], basis[j]), basis, leads_).empty()) return false;
    }
  }
  return true;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators) {
  if (generators.empty()) throw std::invalid_argument("buchberger needs the variable list; none given");
  return buchberger(generators.front().variables(), generators);
}

GroebnerBasis buchberger(const Variables& vars, const std::vector<Polynomial>& generators) {
  std::vector<Terms> basis;
  std::vector<ExponentVector> leads;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    Terms t = to_terms(g);
    make_monic(t);
    leads.push_back(t.begin()->first);
    basis.push_back(std::move(t));
  }

  // Pairs keyed by (lcm, i, j) so the smallest lcm is selected first.
  struct PairKey {
    ExponentVector lcm;
    std::size_t i, j;
    bool operator<(const PairKey& o) const {
      if (lcm != o.lcm) return grevlex_greater(o.lcm, lcm);
      return std::tie(i, j) < std::tie(o.i, o.j);
    }
  };
  std::set<PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      queue.insert({lcm_exp(leads[i], leads[j]), i, j});
      pending.emplace(i, j);
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs(j);

  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!queue.empty()) {
    const PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});

    if (coprime(leads[pk.i], leads[pk.j])) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pk.i || k == pk.j) continue;
      chain = divides(leads[k], pk.lcm) && !is_pending(pk.i, k) && !is_pending(pk.j, k);
    }
    if (chain) continue;

    Terms r = reduce(spoly(basis[pk.i], basis[pk.j]), basis, leads);
    if (r.empty()) continue;
    make_monic(r);
    leads.push_back(r.begin()->first);
    basis.push_back(std::move(r));
    add_pairs(basis.size() - 1);
  }

  // Minimize: drop elements whose leading term is a multiple of another's.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !divides(leads[j], leads[i])) continue;
      // Equal leading terms: keep the lowest index.
      redundant = leads[j] != leads[i] || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Terms> minimal;
  std::vector<ExponentVector> min_leads;
  for (auto i : keep) {
    minimal.push_back(basis[i]);
    min_leads.push_back(leads[i]);
  }

  // Inter-reduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Terms> others;
    std::vector<ExponentVector> other_leads;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j == i) continue;
      others.push_back(minimal[j]);
      other_leads.push_back(min_leads[j]);
    }
    Terms head;
    head.insert(*minimal[i].begin());
    Terms tail = minimal[i];
    tail.erase(tail.begin());
    Terms reduced_tail = reduce(std::move(tail), others, other_leads);
    reduced_tail.insert(*head.begin());
    minimal[i] = std::move(reduced_tail);
  }

  std::vector<std::size_t> order(minimal.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return grevlex_greater(min_leads[b], min_leads[a]); });
  std::vector<Polynomial> out;
  for (auto i : order) out.push_back(to_polynomial(vars, minimal[i]));
  return GroebnerBasis(vars, std::move(out));
}

}  // namespace singspec
