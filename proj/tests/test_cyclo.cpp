#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellft/cyclo.hpp"

using ellft::CycNum;
using ellft::Rational;

namespace {

// Independent model of Q(zeta_60): integer exponent vectors of length 60,
// v[m] = coefficient of zeta_60^m, multiplied by cyclic convolution.  Mapping
// a vector into CycNum goes through zeta60_power (addition only), so agreement
// of products exercises the Phi_60 reduction against a different code path.
using ExpVec = std::array<long, 60>;

CycNum embed(const ExpVec& v) {
  CycNum r;
  for (int m = 0; m < 60; ++m)
    if (v[m] != 0) r += CycNum(v[m]) * CycNum::zeta60_power(m);
  return r;
}

ExpVec convolve(const ExpVec& a, const ExpVec& b) {
  ExpVec r{};
  for (int i = 0; i < 60; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < 60; ++j) r[(i + j) % 60] += a[i] * b[j];
  }
  return r;
}

ExpVec random_sparse(std::mt19937& rng) {
  std::uniform_int_distribution<int> pos(0, 59), coeff(-5, 5), nterms(1, 6);
  ExpVec v{};
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) v[pos(rng)] += coeff(rng);
  return v;
}

}  // namespace

TEST_CASE("zeta60 is a primitive 60th root of unity") {
  for (long k = 1; k < 60; ++k) {
    CAPTURE(k);
    CHECK(CycNum::zeta60_power(k) != CycNum(1));
  }
  CHECK(CycNum::zeta60_power(60) == CycNum(1));
  CHECK(CycNum::zeta60_power(-7) == CycNum::zeta60_power(53));
}

TEST_CASE("zeta60 satisfies Phi_60") {
  auto z = [](long k) { return CycNum::zeta60_power(k); };
  CycNum phi = z(16 * 1) * CycNum(0);  // start from zero
  // Phi_60(z) with z = zeta_60, evaluated term by term.
  CycNum zeta = CycNum::zeta60_power(1);
  CycNum pw(1);
  std::array<int, 17> coeffs{1, 0, 1, 0, 0, 0, -1, 0, -1, 0, -1, 0, 0, 0, 1, 0, 1};
  for (int i = 0; i <= 16; ++i) {
    phi += CycNum(coeffs[i]) * pw;
    pw *= zeta;
  }
  CHECK(phi.is_zero());
}

TEST_CASE("fixed embeddings of small roots of unity") {
  CHECK(CycNum::root_of_unity(5, 1) == CycNum::zeta60_power(12));
  CHECK(CycNum::root_of_unity(4, 1) == CycNum::zeta60_power(15));
  CHECK(CycNum::root_of_unity(3, 1) == CycNum::zeta60_power(20));
  CHECK(CycNum::root_of_unity(6, 1) == CycNum::zeta60_power(10));
  CHECK(CycNum::root_of_unity(2, 1) == CycNum(-1));
  CHECK(CycNum::root_of_unity(1, 5) == CycNum(1));
  // i^2 = -1, theta^2 + theta + 1 = 0.
  CycNum i = CycNum::root_of_unity(4, 1);
  CHECK(i * i == CycNum(-1));
  CycNum th = CycNum::root_of_unity(3, 1);
  CHECK((th * th + th + CycNum(1)).is_zero());
  CHECK_THROWS_AS(CycNum::root_of_unity(7, 1), std::invalid_argument);
}

TEST_CASE("multiplication agrees with cyclic-convolution oracle") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    ExpVec a = random_sparse(rng), b = random_sparse(rng);
    CHECK(embed(a) * embed(b) == embed(convolve(a, b)));
  }
}

TEST_CASE("ring axioms on random values") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    CycNum a = embed(random_sparse(rng));
    CycNum b = embed(random_sparse(rng));
    CycNum c = embed(random_sparse(rng));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + (-a) == CycNum());
  }
}

TEST_CASE("inverse") {
  CHECK(CycNum(Rational(3, 7)).inv() == CycNum(Rational(7, 3)));
  std::mt19937 rng(99);
  int done = 0;
  while (done < 50) {
    CycNum a = embed(random_sparse(rng));
    if (a.is_zero()) continue;
    CHECK(a * a.inv() == CycNum(1));
    ++done;
  }
  CHECK_THROWS_AS(CycNum().inv(), std::domain_error);
}

TEST_CASE("conjugation") {
  for (long k = 0; k < 60; ++k) {
    CAPTURE(k);
    CHECK(CycNum::zeta60_power(k).conj() == CycNum::zeta60_power(-k));
  }
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    CycNum a = embed(random_sparse(rng));
    CycNum b = embed(random_sparse(rng));
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK(a.conj().conj() == a);
  }
  CHECK(CycNum(Rational(2, 3)).conj() == CycNum(Rational(2, 3)));
}

TEST_CASE("coefficient expression parser") {
  using ellft::parse_coeff;
  CHECK(parse_coeff("0").is_zero());
  CHECK(parse_coeff("1/2") == CycNum(Rational(1, 2)));
  CHECK(parse_coeff("-1/6") == CycNum(Rational(-1, 6)));
  CHECK(parse_coeff("z3") == CycNum::root_of_unity(3, 1));
  CHECK(parse_coeff("z3^2") == CycNum::root_of_unity(3, 2));
  CHECK(parse_coeff("z4^-1") == CycNum::root_of_unity(4, -1));
  CHECK(parse_coeff("-z5^3") == -CycNum::root_of_unity(5, 3));
  CHECK(parse_coeff("1/2*z3 + 1/2*z3^2") ==
        CycNum(Rational(1, 2)) * (parse_coeff("z3") + parse_coeff("z3^2")));
  CHECK(parse_coeff("(1+z4)*(1-z4)") == CycNum(2));
  CHECK(parse_coeff(" 2 * 3 - 5 ") == CycNum(1));
  CHECK_THROWS_AS(parse_coeff("z7"), ellft::CoeffParseError);
  CHECK_THROWS_AS(parse_coeff("1+"), ellft::CoeffParseError);
  CHECK_THROWS_AS(parse_coeff("(1"), ellft::CoeffParseError);
  CHECK_THROWS_AS(parse_coeff("1/0"), ellft::CoeffParseError);
  CHECK_THROWS_AS(parse_coeff("1 2"), ellft::CoeffParseError);
}

TEST_CASE("printer round-trips through the parser") {
  std::mt19937 rng(11);
  CHECK(CycNum().to_string() == "0");
  CHECK(CycNum(Rational(-1, 2)).to_string() == "-1/2");
  for (int trial = 0; trial < 100; ++trial) {
    CycNum a = embed(random_sparse(rng));
    CHECK(ellft::parse_coeff(a.to_string()) == a);
  }
}

TEST_CASE("deterministic total order") {
  CycNum a(1), b(2);
  CHECK(a < b);
  CHECK(!(b < a));
  CHECK(!(a < a));
  CycNum z = CycNum::zeta60_power(3);
  CHECK((a < z) != (z < a));
}
