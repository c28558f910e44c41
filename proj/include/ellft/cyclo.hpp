#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_60), represented in the
// power basis of Q[x]/Phi_60(x).  Conductor 60 is fixed: every root of unity
// of order 1..6 (and their products up to order 60) embeds, and equality is
// plain coefficient comparison.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ellft {

using Rational = boost::multiprecision::cpp_rational;

class CycNum {
public:
  static constexpr int conductor = 60;
  static constexpr int degree = 16;  // phi(60)

  CycNum() = default;                 // zero
  CycNum(long n);
  CycNum(const Rational& r);

  // zeta_n^k with n | 60; throws std::invalid_argument otherwise.
  static CycNum root_of_unity(int n, long k);
  static CycNum zeta60_power(long k);  // zeta_60^k, any integer k

  const std::array<Rational, degree>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const { return c_[0]; }

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }

  // Multiplicative inverse; throws std::domain_error on zero.
  CycNum inv() const;

  // Complex conjugation, the automorphism zeta_60 -> zeta_60^-1.
  CycNum conj() const;

  bool operator==(const CycNum& o) const { return c_ == o.c_; }
  bool operator!=(const CycNum& o) const { return c_ != o.c_; }

  // Deterministic total order (coefficient-wise lexicographic); used only
  // for canonical sorting, no analytic meaning.
  bool operator<(const CycNum& o) const;

  // Canonical printer; round-trips through parse_coeff.
  std::string to_string() const;

private:
  std::array<Rational, degree> c_{};  // value = sum c_[i] * zeta_60^i
};

std::ostream& operator<<(std::ostream& os, const CycNum& v);

// Parses the coefficient-expression grammar used by the catalog and the CLI:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | 'z'N['^'K] | '(' expr ')'
//   rational := integer ['/' integer]
// Throws CoeffParseError (with position) on malformed input.
struct CoeffParseError : std::runtime_error {
  size_t position;
  CoeffParseError(const std::string& msg, size_t pos);
};

CycNum parse_coeff(const std::string& expr);

}  // namespace ellft
