#include "ncj/grassmann.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <regex>

namespace ncj {

const std::vector<Mask>& monomial_order(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Mask>> cache;
  if (n > 20) throw Error(ErrorKind::SearchTooLarge, "too many Grassmann generators");
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Mask> order;
  for (Mask m = 0; m < (Mask(1) << n); ++m) order.push_back(m);
  auto key = [](Mask m) {
    std::vector<int> idx;
    for (int i = 0; i < 32; ++i)
      if (m >> i & 1U) idx.push_back(i);
    return std::make_pair(idx.size(), idx);
  };
  std::sort(order.begin(), order.end(), [&](Mask a, Mask b) { return key(a) < key(b); });
  return cache.emplace(n, std::move(order)).first->second;
}

std::size_t monomial_position(std::size_t n, Mask m) {
  const auto& order = monomial_order(n);
  auto it = std::find(order.begin(), order.end(), m);
  if (it == order.end()) throw Error(ErrorKind::SizeMismatch, "monomial outside the algebra");
  return static_cast<std::size_t>(it - order.begin());
}

int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  unsigned swaps = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    unsigned j = static_cast<unsigned>(__builtin_ctz(rest));
    swaps += static_cast<unsigned>(__builtin_popcount(a >> (j + 1)));
  }
  return (swaps & 1U) ? -1 : 1;
}

GrassmannElement::GrassmannElement(std::size_t n, Field field) : n_(n), field_(std::move(field)) {
  if (n > 20) throw Error(ErrorKind::SearchTooLarge, "too many Grassmann generators");
}

GrassmannElement GrassmannElement::monomial(std::size_t n, Mask m, const FieldValue& c, const Field& field) {
  GrassmannElement g(n, field);
  g.add_term(m, c);
  return g;
}

GrassmannElement GrassmannElement::constant(std::size_t n, const FieldValue& c, const Field& field) { return monomial(n, 0, c, field); }

GrassmannElement GrassmannElement::generator(std::size_t n, std::size_t i, const Field& field) {
  if (i >= n) throw Error(ErrorKind::SizeMismatch, "generator index");
  return monomial(n, Mask(1) << i, field.one(), field);
}

FieldValue GrassmannElement::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void GrassmannElement::add_term(Mask m, const FieldValue& c) {
  if (m >> n_) throw Error(ErrorKind::SizeMismatch, "monomial uses a generator beyond x" + std::to_string(n_));
  FieldValue v = field_.embed(c);
  if (v.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, std::move(v));
  } else {
    it->second = it->second + v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<unsigned> GrassmannElement::parity() const {
  std::optional<unsigned> p;
  for (const auto& [m, c] : terms_) {
    if (p && *p != mask_parity(m)) return std::nullopt;
    p = mask_parity(m);
  }
  return p.value_or(0);
}

GrassmannElement GrassmannElement::part(unsigned parity) const {
  GrassmannElement out(n_, field_);
  for (const auto& [m, c] : terms_)
    if (mask_parity(m) == parity) out.terms_.emplace(m, c);
  return out;
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

namespace {

void require_same(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.n() != b.n()) throw Error(ErrorKind::SizeMismatch, "Grassmann algebras of different rank");
}

}  // namespace

GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) {
  require_same(a, b);
  GrassmannElement out(a.n(), a.field().join(b.field()));
  for (const auto& [m, c] : a.terms()) out.add_term(m, c);
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) { return a + (-b); }

GrassmannElement operator*(const FieldValue& s, const GrassmannElement& a) {
  GrassmannElement out(a.n(), s.is_rational() ? a.field() : a.field().join(s.field()));
  for (const auto& [m, c] : a.terms()) out.add_term(m, s * c);
  return out;
}

bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.n() != b.n() || a.terms().size() != b.terms().size()) return false;
  auto it = b.terms().begin();
  for (const auto& [m, c] : a.terms()) {
    if (it->first != m || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

Vec GrassmannElement::to_vector() const {
  const auto& order = monomial_order(n_);
  Vec v(order.size(), field_.zero());
  for (std::size_t i = 0; i < order.size(); ++i) v[i] = coeff(order[i]);
  return v;
}

GrassmannElement GrassmannElement::from_vector(std::size_t n, const Vec& v, const Field& field) {
  const auto& order = monomial_order(n);
  if (v.size() != order.size()) throw Error(ErrorKind::SizeMismatch, "vector length for Grassmann element");
  GrassmannElement g(n, field);
  for (std::size_t i = 0; i < v.size(); ++i) g.add_term(order[i], v[i]);
  return g;
}

namespace {

std::string mask_to_string(Mask m) {
  std::string s;
  for (unsigned i = 0; i < 32; ++i)
    if (m >> i & 1U) s += (s.empty() ? "x" : "^x") + std::to_string(i + 1);
  return s;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

std::string GrassmannElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (Mask m : monomial_order(n_)) {
    auto it = terms_.find(m);
    if (it == terms_.end()) continue;
    std::string c = it->second.to_string();
    bool negative = c[0] == '-' && c.find_first_of("+-", 1) == std::string::npos;
    if (negative) c = c.substr(1);
    if (c.find_first_of("+-", 1) != std::string::npos) c = "(" + c + ")";
    std::string body;
    if (m == 0) {
      body = c;
    } else {
      body = (c == "1" ? "" : c + "*") + mask_to_string(m);
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

GrassmannElement GrassmannElement::parse(std::string_view text, std::size_t n, const Field& field) {
  static const std::regex mono(R"(x(\d+)(\^x\d+)*)");
  GrassmannElement result(n, field);
  std::string s(text);
  // split into signed terms at depth-0 '+'/'-'
  std::vector<std::pair<int, std::string>> terms;
  int depth = 0;
  int sign = 1;
  std::string cur;
  auto flush = [&](std::size_t pos) {
    std::string t = trim(cur);
    if (t.empty()) {
      if (!terms.empty() || pos != 0) throw Error(ErrorKind::Parse, "empty term in \"" + s + "\"");
    } else {
      terms.emplace_back(sign, t);
    }
    cur.clear();
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw Error(ErrorKind::Parse, "unbalanced parentheses in \"" + s + "\"");
    if (depth == 0 && (ch == '+' || ch == '-')) {
      std::string t = trim(cur);
      bool leading = t.empty() && terms.empty();
      if (!leading) flush(i);
      sign = leading ? (ch == '-' ? -sign : sign) : (ch == '-' ? -1 : 1);
      continue;
    }
    cur += ch;
  }
  if (depth != 0) throw Error(ErrorKind::Parse, "unbalanced parentheses in \"" + s + "\"");
  if (trim(cur).empty()) throw Error(ErrorKind::Parse, "empty term in \"" + s + "\"");
  flush(s.size());
  for (const auto& [sg, t] : terms) {
    GrassmannElement term = GrassmannElement::constant(n, field.from_int(sg), field);
    std::string factor;
    depth = 0;
    std::vector<std::string> factors;
    for (char ch : t) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth == 0 && ch == '*') {
        factors.push_back(trim(factor));
        factor.clear();
      } else {
        factor += ch;
      }
    }
    factors.push_back(trim(factor));
    for (const auto& fac : factors) {
      if (fac.empty()) throw Error(ErrorKind::Parse, "empty factor in \"" + t + "\"");
      if (std::regex_match(fac, mono)) {
        GrassmannElement g = GrassmannElement::constant(n, field.one(), field);
        std::size_t pos = 0;
        while (pos < fac.size()) {
          if (fac[pos] == '^') ++pos;
          ++pos;  // 'x'
          std::size_t start = pos;
          while (pos < fac.size() && std::isdigit(static_cast<unsigned char>(fac[pos]))) ++pos;
          std::size_t idx = std::stoul(fac.substr(start, pos - start));
          if (idx == 0 || idx > n) throw Error(ErrorKind::Parse, "generator x" + std::to_string(idx) + " outside x1..x" + std::to_string(n));
          g = gr_mul(g, GrassmannElement::generator(n, idx - 1, field));
        }
        term = gr_mul(term, g);
      } else {
        term = field.parse(fac) * term;
      }
    }
    result = result + term;
  }
  return result;
}

GrassmannElement gr_mul(const GrassmannElement& f, const GrassmannElement& g) {
  require_same(f, g);
  GrassmannElement out(f.n(), f.field().join(g.field()));
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      int s = merge_sign(a, b);
      if (s == 0) continue;
      FieldValue c = ca * cb;
      out.add_term(a | b, s > 0 ? c : -c);
    }
  return out;
}

GrassmannElement partial(std::size_t j, const GrassmannElement& f) {
  GrassmannElement out(f.n(), f.field());
  if (j >= f.n()) throw Error(ErrorKind::SizeMismatch, "derivative index");
  Mask bit = Mask(1) << j;
  for (const auto& [m, c] : f.terms()) {
    if (!(m & bit)) continue;
    unsigned before = static_cast<unsigned>(__builtin_popcount(m & (bit - 1)));
    out.add_term(m ^ bit, (before & 1U) ? -c : c);
  }
  return out;
}

GrassmannElement right_partial(std::size_t j, const GrassmannElement& f) {
  GrassmannElement out(f.n(), f.field());
  if (j >= f.n()) throw Error(ErrorKind::SizeMismatch, "derivative index");
  Mask bit = Mask(1) << j;
  for (const auto& [m, c] : f.terms()) {
    if (!(m & bit)) continue;
    unsigned after = static_cast<unsigned>(__builtin_popcount(m >> (j + 1)));
    out.add_term(m ^ bit, (after & 1U) ? -c : c);
  }
  return out;
}

GrassmannElement poisson_grassmann(const GrassmannElement& f, const GrassmannElement& g) {
  require_same(f, g);
  GrassmannElement out(f.n(), f.field().join(g.field()));
  for (unsigned p = 0; p < 2; ++p) {
    GrassmannElement fp = f.part(p);
    if (fp.is_zero()) continue;
    GrassmannElement sum(f.n(), out.field());
    for (std::size_t j = 0; j < f.n(); ++j) sum = sum + gr_mul(partial(j, fp), partial(j, g));
    out = p ? out - sum : out + sum;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Wn

WnDerivation WnDerivation::make(std::vector<GrassmannElement> f, unsigned parity) {
  if (f.empty()) throw Error(ErrorKind::InvalidArgument, "derivation needs components");
  std::size_t n = f.front().n();
  if (f.size() != n) throw Error(ErrorKind::SizeMismatch, "need one component per generator");
  for (const auto& c : f) {
    if (c.n() != n) throw Error(ErrorKind::SizeMismatch, "component rank");
    auto p = c.parity();
    if (!c.is_zero() && (!p || *p != ((parity + 1) & 1U)))
      throw Error(ErrorKind::ParityViolation, "component " + c.to_string() + " has the wrong parity");
  }
  return WnDerivation{n, std::move(f), parity & 1U};
}

WnDerivation WnDerivation::zero(std::size_t n, unsigned parity, const Field& field) {
  return WnDerivation{n, std::vector<GrassmannElement>(n, GrassmannElement(n, field)), parity & 1U};
}

GrassmannElement wn_apply(const WnDerivation& d, const GrassmannElement& g) {
  if (g.n() != d.n) throw Error(ErrorKind::SizeMismatch, "derivation rank");
  GrassmannElement out(g.n(), g.field());
  for (std::size_t i = 0; i < d.n; ++i) {
    if (d.f[i].is_zero()) continue;
    out = out + gr_mul(right_partial(i, g), d.f[i]);
  }
  return out;
}

bool wn_is_derivation(const WnDerivation& d) {
  const Field& field = d.f.empty() ? Field::rationals() : d.f.front().field();
  for (Mask a = 0; a < (Mask(1) << d.n); ++a)
    for (Mask b = 0; b < (Mask(1) << d.n); ++b) {
      GrassmannElement A = GrassmannElement::monomial(d.n, a, field.one(), field);
      GrassmannElement B = GrassmannElement::monomial(d.n, b, field.one(), field);
      GrassmannElement lhs = wn_apply(d, gr_mul(A, B));
      GrassmannElement t1 = gr_mul(wn_apply(d, A), B);
      GrassmannElement t2 = gr_mul(A, wn_apply(d, B));
      GrassmannElement rhs = (d.parity & mask_parity(b)) ? t2 - t1 : t1 + t2;
      if (!(lhs == rhs)) return false;
    }
  return true;
}

bool is_hn(const WnDerivation& d) {
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = i; j < d.n; ++j)
      if (!(right_partial(j, d.f[i]) + right_partial(i, d.f[j])).is_zero()) return false;
  return true;
}

WnDerivation hn_from_potential(const GrassmannElement& f) {
  auto p = f.parity();
  if (!p) throw Error(ErrorKind::NonHomogeneous, "potential must be homogeneous");
  std::vector<GrassmannElement> comps;
  for (std::size_t i = 0; i < f.n(); ++i) comps.push_back(right_partial(i, f));
  return WnDerivation{f.n(), std::move(comps), *p};
}

bool is_bracket_derivation(const WnDerivation& d) {
  const Field& field = d.f.front().field();
  for (Mask a = 0; a < (Mask(1) << d.n); ++a)
    for (Mask b = 0; b < (Mask(1) << d.n); ++b) {
      GrassmannElement A = GrassmannElement::monomial(d.n, a, field.one(), field);
      GrassmannElement B = GrassmannElement::monomial(d.n, b, field.one(), field);
      GrassmannElement lhs = wn_apply(d, poisson_grassmann(A, B));
      GrassmannElement t1 = poisson_grassmann(wn_apply(d, A), B);
      GrassmannElement t2 = poisson_grassmann(A, wn_apply(d, B));
      GrassmannElement rhs = (d.parity & mask_parity(b)) ? t2 - t1 : t1 + t2;
      if (!(lhs == rhs)) return false;
    }
  return true;
}

WnDerivation wn_bracket(const WnDerivation& a, const WnDerivation& b) {
  // x_i [a,b] = (x_i a) b - (-1)^{ab} (x_i b) a
  std::vector<GrassmannElement> comps;
  for (std::size_t i = 0; i < a.n; ++i) {
    GrassmannElement ab = wn_apply(b, a.f[i]);
    GrassmannElement ba = wn_apply(a, b.f[i]);
    comps.push_back((a.parity & b.parity) ? ab + ba : ab - ba);
  }
  return WnDerivation{a.n, std::move(comps), (a.parity + b.parity) & 1U};
}

}  // namespace ncj
