#include "ncj/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ncj {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorKind::NotSupercommutative: return "NotSupercommutative";
    case ErrorKind::FormDegenerate: return "FormDegenerate";
    case ErrorKind::FormNotSupersymmetric: return "FormNotSupersymmetric";
    case ErrorKind::StarNotCompatible: return "StarNotCompatible";
    case ErrorKind::StarNotAnticommutative: return "StarNotAnticommutative";
    case ErrorKind::AOdd: return "AOdd";
    case ErrorKind::BracketNotPoisson: return "BracketNotPoisson";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::NotDerivation: return "NotDerivation";
    case ErrorKind::NotPoissonDerivation: return "NotPoissonDerivation";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::SearchTooLarge: return "SearchTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// modular helpers

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  if (nr == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

std::uint64_t reduce_rational(const mpq_class& q, std::uint64_t p) {
  mpz_class num = q.get_num() % static_cast<unsigned long>(p);
  if (num < 0) num += static_cast<unsigned long>(p);
  mpz_class den = q.get_den() % static_cast<unsigned long>(p);
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator " + q.get_den().get_str() + " vanishes mod " + std::to_string(p));
  std::uint64_t n = num.get_ui();
  std::uint64_t d = den.get_ui();
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(n) * mod_inverse(d, p)) % p);
}

bool same_vars(const VarList& a, const VarList& b) { return a == b || (a && b && *a == *b); }

Poly rename_vars(const Poly& p, const std::vector<std::size_t>& map) {
  std::vector<Poly::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) {
    Monomial out;
    for (std::size_t i = 0; i < map.size(); ++i) out.exp[map[i]] = m.exp[i];
    terms.emplace_back(out, c);
  }
  return Poly::from_terms(std::move(terms));
}

FieldValue::Fraction make_fraction(Poly num, Poly den, VarList vars) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (num.is_zero()) return {Poly(), Poly(mpq_class(1)), std::move(vars)};
  if (!den.is_constant()) {
    Poly g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  mpq_class lc = den.leading_coeff();
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    num *= inv;
    den *= inv;
  }
  return {std::move(num), std::move(den), std::move(vars)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field Field::rationals() { return Field(); }

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (p >= (1ULL << 32)) throw Error(ErrorKind::InvalidArgument, "modulus too large");
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

Field Field::rational_functions(std::vector<std::string> vars) {
  if (vars.size() > kMaxVars) throw Error(ErrorKind::InvalidArgument, "at most 16 variables");
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (vars[i] == vars[j]) throw Error(ErrorKind::InvalidArgument, "duplicate variable " + vars[i]);
  Field f;
  f.kind_ = Kind::RationalFunction;
  f.vars_ = std::make_shared<const std::vector<std::string>>(std::move(vars));
  return f;
}

Field Field::rational_functions(VarList vars) {
  Field f;
  f.kind_ = Kind::RationalFunction;
  f.vars_ = std::move(vars);
  return f;
}

Field Field::from_string(std::string_view spec) {
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.substr(0, 2) == "gf") {
    std::string digits(spec.substr(2));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw Error(ErrorKind::Parse, "bad field spec " + std::string(spec));
    return prime(std::stoull(digits));
  }
  if (spec.substr(0, 8) == "ratfunc:") {
    std::vector<std::string> vars;
    std::string rest(spec.substr(8));
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) vars.push_back(item);
    return rational_functions(std::move(vars));
  }
  throw Error(ErrorKind::Parse, "bad field spec " + std::string(spec));
}

const std::vector<std::string>& Field::variables() const {
  static const std::vector<std::string> none;
  return vars_ ? *vars_ : none;
}

bool Field::has_variable(std::string_view name) const {
  const auto& v = variables();
  return std::find(v.begin(), v.end(), name) != v.end();
}

std::size_t Field::variable_index(std::string_view name) const {
  const auto& v = variables();
  auto it = std::find(v.begin(), v.end(), name);
  if (it == v.end()) throw Error(ErrorKind::UnboundVariable, "unknown variable " + std::string(name));
  return static_cast<std::size_t>(it - v.begin());
}

FieldValue Field::zero() const { return from_int(0); }
FieldValue Field::one() const { return from_int(1); }
FieldValue Field::from_int(long v) const { return from_rational(mpq_class(v)); }

FieldValue Field::from_rational(const mpq_class& q) const {
  switch (kind_) {
    case Kind::Rational: return FieldValue(q);
    case Kind::Prime: return FieldValue::residue(static_cast<std::int64_t>(reduce_rational(q, p_)), p_);
    case Kind::RationalFunction: return FieldValue::fraction(Poly(q), Poly(mpq_class(1)), vars_);
  }
  return FieldValue(q);
}

FieldValue Field::variable(std::string_view name) const {
  if (kind_ != Kind::RationalFunction) throw Error(ErrorKind::UnboundVariable, "no variables in " + to_string());
  return FieldValue::fraction(Poly::variable(variable_index(name)), Poly(mpq_class(1)), vars_);
}

FieldValue Field::embed(const FieldValue& v) const {
  if (v.is_rational()) return from_rational(v.rational());
  if (v.is_residue()) {
    if (kind_ == Kind::Prime && v.residue_rep().modulus == p_) return v;
    throw Error(ErrorKind::FieldMismatch, "cannot embed " + v.field().to_string() + " into " + to_string());
  }
  const auto& fr = v.fraction_rep();
  if (kind_ != Kind::RationalFunction) {
    if (v.is_constant()) return from_rational(v.constant());
    throw Error(ErrorKind::FieldMismatch, "cannot embed " + v.field().to_string() + " into " + to_string());
  }
  if (same_vars(fr.vars, vars_)) return v;
  std::vector<std::size_t> map;
  for (const auto& name : *fr.vars) {
    if (!has_variable(name)) {
      map.push_back(kMaxVars);  // marks a variable we do not have
    } else {
      map.push_back(variable_index(name));
    }
  }
  // variables absent from this field must not occur
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] == kMaxVars && (fr.num.degree_in(i) || fr.den.degree_in(i)))
      throw Error(ErrorKind::FieldMismatch, "variable " + (*fr.vars)[i] + " not in " + to_string());
  for (auto& m : map)
    if (m == kMaxVars) m = 0;
  return FieldValue::fraction(rename_vars(fr.num, map), rename_vars(fr.den, map), vars_);
}

Field Field::join(const Field& other) const {
  if (kind_ == Kind::Rational) return other;
  if (other.kind_ == Kind::Rational) return *this;
  if (*this == other) return *this;
  if (kind_ == Kind::RationalFunction && other.kind_ == Kind::RationalFunction) {
    std::vector<std::string> vars = variables();
    for (const auto& n : other.variables())
      if (!has_variable(n)) vars.push_back(n);
    return rational_functions(std::move(vars));
  }
  throw Error(ErrorKind::FieldMismatch, to_string() + " vs " + other.to_string());
}

std::string Field::to_string() const {
  switch (kind_) {
    case Kind::Rational: return "q";
    case Kind::Prime: return "gf" + std::to_string(p_);
    case Kind::RationalFunction: {
      std::string s = "ratfunc:";
      for (std::size_t i = 0; i < variables().size(); ++i) s += (i ? "," : "") + variables()[i];
      return s;
    }
  }
  return "?";
}

bool operator==(const Field& a, const Field& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == Field::Kind::Prime) return a.p_ == b.p_;
  if (a.kind_ == Field::Kind::RationalFunction) return same_vars(a.vars_, b.vars_);
  return true;
}

// ---------------------------------------------------------------------------
// FieldValue

FieldValue::FieldValue(mpq_class q) : rep_(std::move(q)) { std::get<0>(rep_).canonicalize(); }

FieldValue FieldValue::residue(std::int64_t v, std::uint64_t p) {
  FieldValue out;
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  out.rep_ = Residue{static_cast<std::uint64_t>(r), p};
  return out;
}

FieldValue FieldValue::fraction(Poly num, Poly den, VarList vars) {
  FieldValue out;
  out.rep_ = make_fraction(std::move(num), std::move(den), std::move(vars));
  return out;
}

Field FieldValue::field() const {
  switch (rep_.index()) {
    case 0: return Field::rationals();
    case 1: return Field::prime(residue_rep().modulus);
    default: return Field::rational_functions(fraction_rep().vars);
  }
}

bool FieldValue::is_zero() const {
  switch (rep_.index()) {
    case 0: return rational() == 0;
    case 1: return residue_rep().value == 0;
    default: return fraction_rep().num.is_zero();
  }
}

bool FieldValue::is_one() const {
  switch (rep_.index()) {
    case 0: return rational() == 1;
    case 1: return residue_rep().value == 1;
    default: return fraction_rep().den.is_constant() && fraction_rep().num == Poly(mpq_class(1));
  }
}

bool FieldValue::is_constant() const {
  if (!is_fraction()) return true;
  return fraction_rep().num.is_constant() && fraction_rep().den.is_constant();
}

mpq_class FieldValue::constant() const {
  if (is_rational()) return rational();
  if (is_residue()) return mpq_class(static_cast<unsigned long>(residue_rep().value));
  if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "not a constant: " + to_string());
  return fraction_rep().num.constant_value() / fraction_rep().den.constant_value();
}

namespace {

enum class Pair { QQ, PP, FF };

// Brings two operands into a common representation.
Pair unify(const FieldValue& a, const FieldValue& b, FieldValue& ca, FieldValue& cb) {
  ca = a;
  cb = b;
  if (a.is_rational() && b.is_rational()) return Pair::QQ;
  if (a.is_residue() || b.is_residue()) {
    std::uint64_t p = a.is_residue() ? a.residue_rep().modulus : b.residue_rep().modulus;
    Field f = Field::prime(p);
    ca = f.embed(a);
    cb = f.embed(b);
    return Pair::PP;
  }
  if (a.is_fraction() && b.is_fraction()) {
    if (!same_vars(a.fraction_rep().vars, b.fraction_rep().vars))
      throw Error(ErrorKind::FieldMismatch, "variable lists differ: " + a.field().to_string() + " vs " + b.field().to_string());
    return Pair::FF;
  }
  const VarList& vars = a.is_fraction() ? a.fraction_rep().vars : b.fraction_rep().vars;
  if (a.is_rational()) ca = FieldValue::fraction(Poly(a.rational()), Poly(mpq_class(1)), vars);
  if (b.is_rational()) cb = FieldValue::fraction(Poly(b.rational()), Poly(mpq_class(1)), vars);
  return Pair::FF;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

}  // namespace

FieldValue FieldValue::operator-() const {
  switch (rep_.index()) {
    case 0: return FieldValue(mpq_class(-rational()));
    case 1: return residue(-static_cast<std::int64_t>(residue_rep().value), residue_rep().modulus);
    default: {
      FieldValue out = *this;
      auto& fr = std::get<2>(out.rep_);
      fr.num = -fr.num;
      return out;
    }
  }
}

FieldValue FieldValue::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  switch (rep_.index()) {
    case 0: return FieldValue(mpq_class(1 / rational()));
    case 1: return residue(static_cast<std::int64_t>(mod_inverse(residue_rep().value, residue_rep().modulus)), residue_rep().modulus);
    default: {
      const auto& fr = fraction_rep();
      return fraction(fr.den, fr.num, fr.vars);
    }
  }
}

FieldValue operator+(const FieldValue& a, const FieldValue& b) {
  if (b.is_rational() && b.rational() == 0) return a;
  if (a.is_rational() && a.rational() == 0) return b;
  if (a.is_rational() && b.is_rational()) return FieldValue(mpq_class(a.rational() + b.rational()));
  if (a.is_residue() && b.is_residue() && a.residue_rep().modulus == b.residue_rep().modulus) {
    auto p = a.residue_rep().modulus;
    return FieldValue::residue(static_cast<std::int64_t>((a.residue_rep().value + b.residue_rep().value) % p), p);
  }
  FieldValue x, y;
  switch (unify(a, b, x, y)) {
    case Pair::QQ: return FieldValue(mpq_class(x.rational() + y.rational()));
    case Pair::PP: {
      auto p = x.residue_rep().modulus;
      return FieldValue::residue(static_cast<std::int64_t>((x.residue_rep().value + y.residue_rep().value) % p), p);
    }
    case Pair::FF: {
      const auto& fx = x.fraction_rep();
      const auto& fy = y.fraction_rep();
      if (fx.den == fy.den) return FieldValue::fraction(fx.num + fy.num, fx.den, fx.vars);
      return FieldValue::fraction(fx.num * fy.den + fy.num * fx.den, fx.den * fy.den, fx.vars);
    }
  }
  return {};
}

FieldValue operator-(const FieldValue& a, const FieldValue& b) { return a + (-b); }

FieldValue operator*(const FieldValue& a, const FieldValue& b) {
  if (a.is_rational() && b.is_rational()) return FieldValue(mpq_class(a.rational() * b.rational()));
  if (a.is_residue() && b.is_residue() && a.residue_rep().modulus == b.residue_rep().modulus) {
    auto p = a.residue_rep().modulus;
    return FieldValue::residue(static_cast<std::int64_t>(mulmod(a.residue_rep().value, b.residue_rep().value, p)), p);
  }
  FieldValue x, y;
  switch (unify(a, b, x, y)) {
    case Pair::QQ: return FieldValue(mpq_class(x.rational() * y.rational()));
    case Pair::PP: {
      auto p = x.residue_rep().modulus;
      return FieldValue::residue(static_cast<std::int64_t>(mulmod(x.residue_rep().value, y.residue_rep().value, p)), p);
    }
    case Pair::FF: {
      const auto& fx = x.fraction_rep();
      const auto& fy = y.fraction_rep();
      if (fx.num.is_zero() || fy.num.is_zero()) return FieldValue::fraction(Poly(), Poly(mpq_class(1)), fx.vars);
      if (fx.den.is_constant() && fy.den.is_constant())
        return FieldValue::fraction(fx.num * fy.num, fx.den * fy.den, fx.vars);
      // cross-cancel so the product is already reduced
      Poly g1 = gcd(fx.num, fy.den);
      Poly g2 = gcd(fy.num, fx.den);
      Poly n = exact_div(fx.num, g1) * exact_div(fy.num, g2);
      Poly d = exact_div(fx.den, g2) * exact_div(fy.den, g1);
      return FieldValue::fraction(std::move(n), std::move(d), fx.vars);
    }
  }
  return {};
}

FieldValue operator/(const FieldValue& a, const FieldValue& b) { return a * b.inv(); }

bool operator==(const FieldValue& a, const FieldValue& b) {
  FieldValue x, y;
  switch (unify(a, b, x, y)) {
    case Pair::QQ: return x.rational() == y.rational();
    case Pair::PP: return x.residue_rep().value == y.residue_rep().value;
    case Pair::FF: return x.fraction_rep().num == y.fraction_rep().num && x.fraction_rep().den == y.fraction_rep().den;
  }
  return false;
}

std::pair<unsigned, std::size_t> FieldValue::complexity() const {
  if (is_fraction()) {
    const auto& fr = fraction_rep();
    return {fr.num.total_degree() + fr.den.total_degree(), fr.num.terms().size() + fr.den.terms().size()};
  }
  if (is_rational()) return {0, rational().get_num().get_str().size() + rational().get_den().get_str().size()};
  return {0, 1};
}

FieldValue pow(const FieldValue& base, unsigned exponent) {
  FieldValue result = base.field().one();
  FieldValue b = base;
  while (exponent) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent) b = b * b;
  }
  return result;
}

namespace {

FieldValue eval_poly(const Poly& p, const Field& target, const std::vector<FieldValue>& values) {
  FieldValue acc = target.zero();
  for (const auto& [m, c] : p.terms()) {
    FieldValue t = target.from_rational(c);
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (m.exp[i]) t = t * pow(values[i], m.exp[i]);
    acc = acc + t;
  }
  return acc;
}

}  // namespace

FieldValue FieldValue::substitute(const Field& target, const std::map<std::string, FieldValue>& bindings) const {
  if (!is_fraction()) return target.embed(*this);
  const auto& fr = fraction_rep();
  std::vector<FieldValue> values(kMaxVars, target.zero());
  for (std::size_t i = 0; i < fr.vars->size(); ++i) {
    const std::string& name = (*fr.vars)[i];
    bool used = fr.num.degree_in(i) || fr.den.degree_in(i);
    auto it = bindings.find(name);
    if (it != bindings.end()) {
      values[i] = target.embed(it->second);
    } else if (target.has_variable(name)) {
      values[i] = target.variable(name);
    } else if (used) {
      throw Error(ErrorKind::UnboundVariable, "no binding for " + name);
    }
  }
  FieldValue num = eval_poly(fr.num, target, values);
  FieldValue den = eval_poly(fr.den, target, values);
  if (den.is_zero()) throw Error(ErrorKind::PoleAtPoint, "denominator " + fr.den.to_string(*fr.vars) + " vanishes");
  return num / den;
}

FieldValue FieldValue::evaluate(const std::map<std::string, mpq_class>& bindings) const {
  std::map<std::string, FieldValue> b;
  for (const auto& [k, v] : bindings) b.emplace(k, FieldValue(v));
  return substitute(Field::rationals(), b);
}

std::string FieldValue::to_string() const {
  switch (rep_.index()) {
    case 0: return rational().get_str();
    case 1: return std::to_string(residue_rep().value);
    default: {
      const auto& fr = fraction_rep();
      std::string n = fr.num.to_string(*fr.vars);
      if (fr.den == Poly(mpq_class(1))) return n;
      bool simple_num = fr.num.terms().size() <= 1 && (fr.num.is_zero() || fr.num.leading_coeff() > 0);
      bool simple_den = fr.den.terms().size() == 1 && fr.den.leading_coeff() > 0 && fr.den.leading().first.degree() <= 1;
      return (simple_num ? n : "(" + n + ")") + "/" + (simple_den ? fr.den.to_string(*fr.vars) : "(" + fr.den.to_string(*fr.vars) + ")");
    }
  }
}

// ---------------------------------------------------------------------------
// literal parser

namespace {

class LiteralParser {
 public:
  LiteralParser(const Field& f, std::string_view s) : field_(f), s_(s) {}

  FieldValue run() {
    FieldValue v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorKind::Parse, why + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  FieldValue expr() {
    FieldValue v = term();
    for (;;) {
      if (accept('+')) v = v + term();
      else if (accept('-')) v = v - term();
      else return v;
    }
  }
  FieldValue term() {
    FieldValue v = unary();
    for (;;) {
      if (accept('*')) v = v * unary();
      else if (accept('/')) v = v / unary();
      else return v;
    }
  }
  FieldValue unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  FieldValue power() {
    FieldValue base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return pow(base, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }
  FieldValue atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FieldValue v = expr();
      if (!accept(')')) fail("expected )");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return field_.from_rational(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (!field_.has_variable(name)) throw Error(ErrorKind::UnboundVariable, "unknown variable " + name + " for field " + field_.to_string());
      return field_.variable(name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const Field& field_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldValue Field::parse(std::string_view text) const { return LiteralParser(*this, text).run(); }

std::optional<FieldValue> field_sqrt(const FieldValue& v) {
  if (v.is_zero()) return v;
  if (v.is_residue()) {
    auto p = v.residue_rep().modulus;
    for (std::uint64_t r = 1; r < p; ++r)
      if (static_cast<unsigned __int128>(r) * r % p == v.residue_rep().value) return FieldValue::residue(static_cast<std::int64_t>(r), p);
    return std::nullopt;
  }
  if (!v.is_constant()) return std::nullopt;
  mpq_class q = v.constant();
  if (q < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return v.field().from_rational(mpq_class(rn, rd));
}

}  // namespace ncj
