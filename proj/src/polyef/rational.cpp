#include "polyef/rational.hpp"

#include "polyef/errors.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace polyef {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto bad = [&] { return ParseError("malformed rational '" + std::string(text) + "'"); };

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    result = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot_pos = body.find('.'); dot_pos != std::string_view::npos) {
    auto whole = body.substr(0, dot_pos);
    auto frac = body.substr(dot_pos + 1);
    if (whole.empty() && frac.empty()) throw bad();
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      throw bad();
    mpz_class scale_factor;
    mpz_ui_pow_ui(scale_factor.get_mpz_t(), 10, frac.size());
    std::string digits = std::string(whole) + std::string(frac);
    result = Rational(mpz_class(digits, 10), scale_factor);
  } else {
    if (!all_digits(body)) throw bad();
    result = Rational(mpz_class(std::string(body), 10));
  }
  return negative ? -result : result;
}

Rational Rational::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Vector parse_vector(std::string_view text) {
  std::istringstream in{std::string(text)};
  Vector out;
  std::string tok;
  while (in >> tok) out.push_back(Rational::parse(tok));
  return out;
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  mpq_class acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
  return Rational(std::move(acc));
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("add: length mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("sub: length mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Vector& v, const Rational& s) {
  Vector out(v);
  for (auto& x : out) x *= s;
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector primitive(const Vector& v) {
  if (is_zero(v)) return v;
  mpz_class den_lcm = 1;
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.raw().get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class n = x.numerator() * (den_lcm / x.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(std::move(n));
  }
  Vector out;
  out.reserve(v.size());
  for (auto& n : ints) out.emplace_back(mpz_class(n / g));
  return out;
}

Vector unit_vector(std::size_t dim, std::size_t index) {
  Vector v(dim);
  v.at(index) = 1;
  return v;
}

} // namespace polyef

std::size_t std::hash<polyef::Rational>::operator()(const polyef::Rational& r) const noexcept {
  return std::hash<std::string>{}(r.to_string());
}
