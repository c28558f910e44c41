#include "ellft/cyclo.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ellft {
namespace {

// Phi_60(x) = x^16 + x^14 - x^10 - x^8 - x^6 + x^2 + 1, so
// x^16 = -x^14 + x^10 + x^8 + x^6 - x^2 - 1.
const std::array<int, 16> kHeadReduction = {
    -1, 0, -1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, -1, 0};

// Coefficient vectors of zeta_60^m, m = 0..59, in the power basis.
const std::array<std::array<int, 16>, 60>& power_table() {
  static const auto table = [] {
    std::array<std::array<int, 16>, 60> t{};
    std::array<int, 16> cur{};
    cur[0] = 1;
    for (int m = 0; m < 60; ++m) {
      t[m] = cur;
      // Multiply by x and reduce.
      int head = cur[15];
      for (int i = 15; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (head != 0)
        for (int i = 0; i < 16; ++i) cur[i] += head * kHeadReduction[i];
    }
    return t;
  }();
  return table;
}

using Poly = std::vector<Rational>;  // dense, poly[i] = coeff of x^i

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// a - q*b for all valid quotient steps: returns remainder of a by monic-led b.
Poly poly_rem(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    Rational q = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

Poly poly_sub_mul(const Poly& a, const Poly& q, const Poly& b) {
  Poly qb = poly_mul(q, b);
  Poly r = a;
  if (r.size() < qb.size()) r.resize(qb.size());
  for (size_t i = 0; i < qb.size(); ++i) r[i] -= qb[i];
  trim(r);
  return r;
}

Poly poly_divmod(Poly& a, const Poly& b) {  // returns quotient, a -> remainder
  Poly q;
  trim(a);
  if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  return q;
}

Poly phi60() {
  Poly p(17);
  p[16] = 1;
  p[14] = 1;
  p[10] = -1;
  p[8] = -1;
  p[6] = -1;
  p[2] = 1;
  p[0] = 1;
  return p;
}

}  // namespace

CycNum::CycNum(long n) { c_[0] = n; }
CycNum::CycNum(const Rational& r) { c_[0] = r; }

CycNum CycNum::zeta60_power(long k) {
  long m = k % 60;
  if (m < 0) m += 60;
  CycNum v;
  const auto& row = power_table()[static_cast<size_t>(m)];
  for (int i = 0; i < degree; ++i) v.c_[i] = row[i];
  return v;
}

CycNum CycNum::root_of_unity(int n, long k) {
  if (n <= 0 || 60 % n != 0)
    throw std::invalid_argument("root_of_unity: order " + std::to_string(n) +
                                " does not divide 60");
  return zeta60_power(static_cast<long>(60 / n) * k);
}

bool CycNum::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (int i = 1; i < degree; ++i)
    if (c_[i] != 0) return false;
  return true;
}

CycNum CycNum::operator-() const {
  CycNum r;
  for (int i = 0; i < degree; ++i) r.c_[i] = -c_[i];
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  for (int i = 0; i < degree; ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  for (int i = 0; i < degree; ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  std::array<Rational, 2 * degree - 1> prod{};
  for (int i = 0; i < degree; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < degree; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  for (int d = 2 * degree - 2; d >= degree; --d) {
    if (prod[d] == 0) continue;
    Rational head = prod[d];
    prod[d] = 0;
    for (int i = 0; i < degree; ++i)
      if (kHeadReduction[i] != 0) prod[d - degree + i] += head * kHeadReduction[i];
  }
  for (int i = 0; i < degree; ++i) c_[i] = prod[i];
  return *this;
}

CycNum CycNum::conj() const {
  CycNum r;
  const auto& table = power_table();
  for (int i = 0; i < degree; ++i) {
    if (c_[i] == 0) continue;
    const auto& row = table[static_cast<size_t>((60 - i) % 60)];
    for (int j = 0; j < degree; ++j) r.c_[j] += c_[i] * row[j];
  }
  return r;
}

CycNum CycNum::inv() const {
  if (is_zero()) throw std::domain_error("CycNum::inv of zero");
  // Extended Euclid in Q[x]: find u with u*a = 1 mod Phi_60.
  Poly a(c_.begin(), c_.end());
  trim(a);
  Poly r0 = phi60(), r1 = a;
  Poly s0 = {}, s1 = {Rational(1)};  // s_k * a = r_k (mod Phi_60)
  while (!r1.empty()) {
    Poly rem = r0;
    Poly q = poly_divmod(rem, r1);
    Poly s2 = poly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant gcd (Phi_60 is irreducible); s0*a = r0 mod Phi.
  if (r0.size() != 1) throw std::logic_error("CycNum::inv: gcd not constant");
  Poly u = poly_rem(std::move(s0), phi60());
  CycNum result;
  for (size_t i = 0; i < u.size(); ++i) result.c_[i] = u[i] / r0[0];
  return result;
}

bool CycNum::operator<(const CycNum& o) const {
  for (int i = 0; i < degree; ++i) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < degree; ++i) {
    if (c_[i] == 0) continue;
    Rational v = c_[i];
    if (first) {
      if (v < 0) {
        os << '-';
        v = -v;
      }
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (i == 0) {
      os << v;
    } else {
      if (v != 1) os << v << '*';
      os << "z60";
      if (i != 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& v) {
  return os << v.to_string();
}

CoeffParseError::CoeffParseError(const std::string& msg, size_t pos)
    : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
      position(pos) {}

namespace {

class CoeffParser {
public:
  explicit CoeffParser(const std::string& s) : s_(s) {}

  CycNum parse() {
    CycNum v = expr();
    skip_ws();
    if (pos_ != s_.size()) throw CoeffParseError("trailing input", pos_);
    return v;
  }

private:
  CycNum expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    CycNum v = term();
    if (neg) v = -v;
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      CycNum t = term();
      v += (c == '-') ? -t : t;
    }
    return v;
  }

  CycNum term() {
    CycNum v = factor();
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      v *= factor();
    }
    return v;
  }

  CycNum factor() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      CycNum v = expr();
      skip_ws();
      if (peek() != ')') throw CoeffParseError("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (c == 'z') {
      ++pos_;
      long n = integer("root order");
      long k = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        k = signed_integer("exponent");
      }
      if (n <= 0 || 60 % n != 0)
        throw CoeffParseError("root order must divide 60", pos_);
      return CycNum::root_of_unity(static_cast<int>(n), k);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer("number");
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        long den = integer("denominator");
        if (den == 0) throw CoeffParseError("zero denominator", pos_);
        return CycNum(Rational(num, den));
      }
      return CycNum(num);
    }
    throw CoeffParseError("unexpected character", pos_);
  }

  long integer(const char* what) {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw CoeffParseError(std::string("expected ") + what, pos_);
    return std::stol(s_.substr(start, pos_ - start));
  }

  long signed_integer(const char* what) {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    long v = integer(what);
    return neg ? -v : v;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

CycNum parse_coeff(const std::string& expr) { return CoeffParser(expr).parse(); }

}  // namespace ellft
