#include "trilie/rational.hpp"

#include <cctype>
#include <ostream>

#include "trilie/errors.hpp"

namespace trilie {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "PARSE_ERROR";
    case ErrorKind::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorKind::IndexRange: return "INDEX_OUT_OF_RANGE";
    case ErrorKind::SignConflict: return "SIGN_CONFLICT";
    case ErrorKind::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorKind::NotInvolutive: return "NOT_INVOLUTIVE";
    case ErrorKind::NotDerivation: return "NOT_DERIVATION";
    case ErrorKind::NotAdapted: return "BASIS_NOT_ADAPTED";
    case ErrorKind::RepresentationAxiom: return "REPRESENTATION_AXIOM_FAILURE";
    case ErrorKind::FiViolation: return "FI_VIOLATION";
    case ErrorKind::ClosedFormMismatch: return "CLOSED_FORM_MISMATCH";
    case ErrorKind::Construction: return "CONSTRUCTION_ERROR";
  }
  return "UNKNOWN_ERROR";
}

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  // Grammar: sign? digits ('/' digits)?   with denominator > 0.
  size_t i = 0;
  auto fail = [&](const char* what) -> Rational {
    throw Error(ErrorKind::Parse, std::string("bad rational '") + std::string(text) + "': " + what);
  };
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return fail("missing digits");
  mpz_class num(std::string(text.substr(num_begin, i - num_begin)), 10);
  mpz_class den(1);
  if (i < text.size() && text[i] == '/') {
    ++i;
    size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin) return fail("missing denominator digits");
    den = mpz_class(std::string(text.substr(den_begin, i - den_begin)), 10);
    if (sgn(den) == 0) return fail("zero denominator");
  }
  if (i != text.size()) return fail("trailing characters");
  mpq_class q(neg ? mpz_class(-num) : num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (den() == 1) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace trilie
