#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>
#include <string_view>

#include "incalg/error.hpp"

namespace incalg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class RingKind { Integers, Rationals, Modular };

struct RingSpec {
  RingKind kind = RingKind::Integers;
  Int modulus = 0;  // Modular only

  static RingSpec integers() { return {RingKind::Integers, 0}; }
  static RingSpec rationals() { return {RingKind::Rationals, 0}; }
  static RingSpec modular(Int m) { return {RingKind::Modular, std::move(m)}; }

  // "Z" | "Q" | "Z/<m>"
  static RingSpec parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// Exact scalar in canonical form: fractions reduced with positive
// denominator, residues in [0, m). Equality is structural.
class RingValue {
public:
  RingValue() = default;

  const Rat& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  Int numerator() const { return boost::multiprecision::numerator(v_); }
  Int denominator() const { return boost::multiprecision::denominator(v_); }
  std::string str() const;

  friend bool operator==(const RingValue&, const RingValue&) = default;

private:
  explicit RingValue(Rat v) : v_(std::move(v)) {}
  Rat v_;
  friend class Ring;
};

std::ostream& operator<<(std::ostream& os, const RingValue& v);

// Immutable ring handle; all operations are pure.
class Ring {
public:
  explicit Ring(RingSpec spec);  // TwoTorsion, InvalidModulus

  const RingSpec& spec() const { return spec_; }
  bool is_field() const { return field_; }

  RingValue zero() const { return RingValue(Rat(0)); }
  RingValue one() const { return canon(Rat(1)); }
  RingValue integer(long long n) const { return canon(Rat(n)); }
  RingValue integer(const Int& n) const { return canon(Rat(n)); }
  RingValue fraction(const Int& num, const Int& den) const;  // ParseError on den=0
  RingValue parse(std::string_view text) const;              // ParseError

  RingValue add(const RingValue& a, const RingValue& b) const { return canon(a.v_ + b.v_); }
  RingValue sub(const RingValue& a, const RingValue& b) const { return canon(a.v_ - b.v_); }
  RingValue neg(const RingValue& a) const { return canon(-a.v_); }
  RingValue mul(const RingValue& a, const RingValue& b) const { return canon(a.v_ * b.v_); }
  RingValue inverse(const RingValue& a) const;  // NotAField, DivisionByZero
  RingValue divide(const RingValue& a, const RingValue& b) const { return mul(a, inverse(b)); }

  friend bool operator==(const Ring& a, const Ring& b) { return a.spec_ == b.spec_; }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
  RingValue canon(Rat v) const;

  RingSpec spec_;
  bool field_ = false;
};

Ring make_ring(const RingSpec& spec);
bool is_field(const Ring& ring);

}  // namespace incalg
