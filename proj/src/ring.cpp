#include "incalg/ring.hpp"

#include <boost/integer/mod_inverse.hpp>
#include <boost/multiprecision/miller_rabin.hpp>
#include <cctype>
#include <ostream>
#include <sstream>

namespace incalg {

namespace {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  // Deterministic for the 64-bit range with these witnesses; for larger
  // moduli 25 rounds of Miller-Rabin is the standard probabilistic bound.
  return boost::multiprecision::miller_rabin_test(n, 25);
}

Int parse_int(std::string_view text) {
  if (text.empty()) fail(ErrorKind::ParseError, "empty integer");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) fail(ErrorKind::ParseError, "sign without digits");
  Int result = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      fail(ErrorKind::ParseError, "invalid integer: " + std::string(text));
    result = result * 10 + (text[i] - '0');
  }
  return negative ? Int(-result) : result;
}

}  // namespace

RingSpec RingSpec::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "Z/") return modular(parse_int(text.substr(2)));
  fail(ErrorKind::ParseError, "unknown ring \"" + std::string(text) + "\" (expected Z, Q, or Z/<m>)");
}

std::string RingSpec::str() const {
  switch (kind) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::Modular: return "Z/" + modulus.str();
  }
  return "?";
}

std::string RingValue::str() const {
  Int den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

std::ostream& operator<<(std::ostream& os, const RingValue& v) { return os << v.str(); }

Ring::Ring(RingSpec spec) : spec_(std::move(spec)) {
  switch (spec_.kind) {
    case RingKind::Integers:
      field_ = false;
      break;
    case RingKind::Rationals:
      field_ = true;
      break;
    case RingKind::Modular:
      if (spec_.modulus < 2)
        fail(ErrorKind::InvalidModulus, "modulus must be at least 2, got " + spec_.modulus.str());
      if (spec_.modulus % 2 == 0)
        fail(ErrorKind::TwoTorsion,
             "Z/" + spec_.modulus.str() + " has 2-torsion; modulus must be odd");
      field_ = is_prime(spec_.modulus);
      break;
  }
}

RingValue Ring::canon(Rat v) const {
  if (spec_.kind == RingKind::Modular) {
    Int num = boost::multiprecision::numerator(v);
    Int den = boost::multiprecision::denominator(v);
    if (den != 1) {
      // Rational residue: fold the denominator in via its modular inverse.
      Int inv = boost::integer::mod_inverse(Int(den % spec_.modulus), spec_.modulus);
      if (inv == 0)
        fail(ErrorKind::DivisionByZero,
             den.str() + " is not invertible modulo " + spec_.modulus.str());
      num *= inv;
    }
    Int r = num % spec_.modulus;
    if (r < 0) r += spec_.modulus;
    return RingValue(Rat(r));
  }
  return RingValue(std::move(v));
}

RingValue Ring::fraction(const Int& num, const Int& den) const {
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator");
  Int n = num;
  Int d = den;
  if (d < 0) {  // canonical form keeps the denominator positive
    n = -n;
    d = -d;
  }
  if (spec_.kind == RingKind::Integers && n % d != 0)
    fail(ErrorKind::ParseError,
         num.str() + "/" + den.str() + " is not an element of Z");
  return canon(Rat(n, d));
}

RingValue Ring::parse(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return canon(Rat(parse_int(text)));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  return fraction(num, den);
}

RingValue Ring::inverse(const RingValue& a) const {
  if (a.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  switch (spec_.kind) {
    case RingKind::Integers: {
      if (a.v_ == 1 || a.v_ == -1) return a;
      fail(ErrorKind::NotAField, a.str() + " is not invertible in Z");
    }
    case RingKind::Rationals:
      return canon(Rat(1) / a.v_);
    case RingKind::Modular: {
      Int inv = boost::integer::mod_inverse(a.numerator(), spec_.modulus);
      if (inv == 0)
        fail(ErrorKind::NotAField,
             a.str() + " is not invertible modulo " + spec_.modulus.str());
      return canon(Rat(inv));
    }
  }
  fail(ErrorKind::NotAField, "unreachable");
}

Ring make_ring(const RingSpec& spec) { return Ring(spec); }
bool is_field(const Ring& ring) { return ring.is_field(); }

}  // namespace incalg
