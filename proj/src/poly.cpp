#include "ncj/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ncj/error.hpp"

namespace ncj {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  return r;
}

std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (auto c = a.exp[i] <=> b.exp[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

namespace {

bool term_before(const Poly::Term& a, const Poly::Term& b) { return grlex(a.first, b.first) > 0; }

}  // namespace

Poly::Poly(const mpq_class& c) {
  if (c != 0) terms_.emplace_back(Monomial{}, c);
}

Poly Poly::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVars) throw Error(ErrorKind::InvalidArgument, "too many variables");
  Monomial m;
  m.exp[index] = static_cast<std::uint16_t>(power);
  Poly p;
  p.terms_.emplace_back(m, mpq_class(1));
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

mpq_class Poly::constant_value() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return 0;
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.first.exp[var]);
  return d;
}

std::size_t Poly::var_span() const {
  std::size_t span = 0;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (t.first.exp[i]) span = std::max(span, i + 1);
  return span;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

// Merge of two sorted term lists with sign on the second.
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, bool negate_b) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex(a[i].first, b[j].first) > 0)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex(a[i].first, b[j].first) < 0) {
      out.emplace_back(b[j].first, negate_b ? mpq_class(-b[j].second) : b[j].second);
      ++j;
    } else {
      mpq_class c = negate_b ? mpq_class(a[i].second - b[j].second) : mpq_class(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) return b * a.terms_[0].second;
  if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) return a * b.terms_[0].second;
  std::map<Monomial, mpq_class, decltype([](const Monomial& x, const Monomial& y) { return grlex(x, y) > 0; })> acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  Poly r;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace_back(m, c);
  return r;
}

Poly Poly::mul_term(const Monomial& m, const mpq_class& c) const {
  Poly r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
  return r;  // multiplication by a monomial preserves the order
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  mpq_class inv = 1 / leading_coeff();
  return *this * inv;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.first;
    unsigned e = m.exp[var];
    m.exp[var] = 0;
    buckets[e].emplace_back(m, t.second);
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly::from_terms(std::move(b)));
  return out;
}

Poly Poly::from_coefficients_in(std::size_t var, const std::vector<Poly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < coeffs.size(); ++e)
    for (const auto& t : coeffs[e].terms_) {
      Monomial m = t.first;
      m.exp[var] = static_cast<std::uint16_t>(m.exp[var] + e);
      terms.emplace_back(m, t.second);
    }
  return Poly::from_terms(std::move(terms));
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpq_class mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? "-" : "+");
    }
    first = false;
    bool unit = m.is_one();
    if (unit || mag != 1) {
      os << mag.get_str();
      if (!unit) os << '*';
    }
    bool lead = true;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (!m.exp[i]) continue;
      if (!lead) os << '*';
      lead = false;
      os << (i < names.size() ? names[i] : "v" + std::to_string(i));
      if (m.exp[i] > 1) os << '^' << m.exp[i];
    }
  }
  return os.str();
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (b.is_constant()) return a * mpq_class(1 / b.leading_coeff());
  std::vector<Poly::Term> quotient;
  Poly r = a;
  const auto& [lm, lc] = b.leading();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    if (!lm.divides(rm)) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    Monomial qm = rm / lm;
    mpq_class qc = rc / lc;
    r -= b.mul_term(qm, qc);
    quotient.emplace_back(qm, qc);
  }
  return Poly::from_terms(std::move(quotient));
}

namespace {

using UPoly = std::vector<Poly>;  // coefficients in the main variable, low to high

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Pseudo-remainder of a by b in the main variable; any power of lc(b) will do
// because the caller only keeps primitive parts.
UPoly prem(UPoly a, const UPoly& b) {
  const Poly& lb = b.back();
  const std::size_t db = b.size() - 1;
  trim(a);
  while (a.size() > db) {
    Poly la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = c * lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim(a);
  }
  return a;
}

Poly content(const UPoly& p) {
  Poly g;
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Poly(mpq_class(1));
  }
  return g;
}

UPoly primitive_part(UPoly p) {
  Poly c = content(p);
  if (!(c.is_constant())) {
    for (auto& x : p) x = exact_div(x, c);
  }
  // normalize so the leading coefficient has positive leading rational
  if (!p.empty() && p.back().leading_coeff() < 0)
    for (auto& x : p) x = -x;
  return p;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(mpq_class(1));
  if (a == b) return a.monic();

  std::size_t span = std::max(a.var_span(), b.var_span());
  std::size_t v = 0;
  while (v < span && a.degree_in(v) == 0 && b.degree_in(v) == 0) ++v;

  UPoly ua = a.coefficients_in(v);
  UPoly ub = b.coefficients_in(v);
  Poly cont = gcd(content(ua), content(ub));
  ua = primitive_part(std::move(ua));
  ub = primitive_part(std::move(ub));
  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (!ub.empty()) {
    UPoly r = prem(ua, ub);
    ua = std::move(ub);
    ub = r.empty() ? r : primitive_part(std::move(r));
  }
  Poly g = ua.size() <= 1 ? Poly(mpq_class(1)) : Poly::from_coefficients_in(v, ua);
  return (g * cont).monic();
}

}  // namespace ncj
