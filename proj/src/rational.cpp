#include "leibrack/rational.hpp"

#include "leibrack/errors.hpp"

#include <cctype>

namespace leibrack {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorKind::Input, "malformed rational '" + std::string(text) + "'");
  mpz_class p(strip_plus(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(ErrorKind::Input, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

static void check_same(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Input, "vector dimension mismatch");
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  r += b;
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  r -= b;
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Vector& operator+=(Vector& a, const Vector& b) {
  check_same(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector& operator-=(Vector& a, const Vector& b) {
  check_same(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

void axpy(Vector& a, const Rational& s, const Vector& b) {
  check_same(a, b);
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(b[i]) != 0) a[i] += s * b[i];
}

Rational dot(const Vector& a, const Vector& b) {
  check_same(a, b);
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

std::vector<std::string> to_strings(const Vector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return "InputError";
    case ErrorKind::NotLeibniz: return "NotLeibniz";
    case ErrorKind::Precondition: return "PreconditionFailed";
    case ErrorKind::InsufficientOrder: return "InsufficientOrder";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::IsotropicProbe: return "IsotropicProbe";
    case ErrorKind::RecurrenceViolation: return "RecurrenceViolation";
    case ErrorKind::EvenEquationResidual: return "EvenEquationResidual";
    case ErrorKind::HypothesesFail: return "HypothesesFail";
  }
  return "Unknown";
}

}  // namespace leibrack
