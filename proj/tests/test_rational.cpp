#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <msq/rational.hpp>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

using namespace msq;

namespace {

// Reference big integer, base 10000, little endian digits, zero stored as
// an empty digit vector with sign 0. Deliberately naive so it shares no
// code path with the production arithmetic.
struct NInt {
  int sign = 0;
  std::vector<int> d;
};

NInt ni_trim(NInt a) {
  while (!a.d.empty() && a.d.back() == 0) a.d.pop_back();
  if (a.d.empty()) a.sign = 0;
  return a;
}

NInt ni_parse(const std::string& s) {
  NInt r;
  size_t start = 0;
  int sign = 1;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    if (s[0] == '-') sign = -1;
    start = 1;
  }
  for (size_t end = s.size(); end > start;) {
    size_t from = end >= start + 4 ? end - 4 : start;
    r.d.push_back(std::stoi(s.substr(from, end - from)));
    end = from;
  }
  r.sign = sign;
  return ni_trim(r);
}

int ni_cmp_abs(const NInt& a, const NInt& b) {
  if (a.d.size() != b.d.size()) return a.d.size() < b.d.size() ? -1 : 1;
  for (size_t i = a.d.size(); i-- > 0;)
    if (a.d[i] != b.d[i]) return a.d[i] < b.d[i] ? -1 : 1;
  return 0;
}

NInt ni_add_abs(const NInt& a, const NInt& b) {
  NInt r;
  int carry = 0;
  for (size_t i = 0; i < a.d.size() || i < b.d.size() || carry; ++i) {
    int s = carry;
    if (i < a.d.size()) s += a.d[i];
    if (i < b.d.size()) s += b.d[i];
    r.d.push_back(s % 10000);
    carry = s / 10000;
  }
  return r;
}

// Requires |a| >= |b|.
NInt ni_sub_abs(const NInt& a, const NInt& b) {
  NInt r;
  int borrow = 0;
  for (size_t i = 0; i < a.d.size(); ++i) {
    int s = a.d[i] - borrow - (i < b.d.size() ? b.d[i] : 0);
    borrow = s < 0;
    if (s < 0) s += 10000;
    r.d.push_back(s);
  }
  return r;
}

NInt ni_add(const NInt& a, const NInt& b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  NInt r;
  if (a.sign == b.sign) {
    r = ni_add_abs(a, b);
    r.sign = a.sign;
  } else if (ni_cmp_abs(a, b) >= 0) {
    r = ni_sub_abs(a, b);
    r.sign = a.sign;
  } else {
    r = ni_sub_abs(b, a);
    r.sign = b.sign;
  }
  return ni_trim(r);
}

NInt ni_neg(NInt a) {
  a.sign = -a.sign;
  return a;
}

NInt ni_mul(const NInt& a, const NInt& b) {
  if (a.sign == 0 || b.sign == 0) return NInt{};
  NInt r;
  r.d.assign(a.d.size() + b.d.size(), 0);
  for (size_t i = 0; i < a.d.size(); ++i) {
    long long carry = 0;
    for (size_t j = 0; j < b.d.size() || carry; ++j) {
      long long cur = r.d[i + j] + carry;
      if (j < b.d.size()) cur += (long long)a.d[i] * b.d[j];
      r.d[i + j] = (int)(cur % 10000);
      carry = cur / 10000;
    }
  }
  r.sign = a.sign * b.sign;
  return ni_trim(r);
}

bool ni_equal(const NInt& a, const NInt& b) {
  return a.sign == b.sign && a.d == b.d;
}

// Unreduced fraction with the sign carried by the numerator.
struct NRat {
  NInt num, den;
};

NRat nr_from(const Rational& r) {
  return {ni_parse(r.get_num().get_str()), ni_parse(r.get_den().get_str())};
}

bool nr_equal(const NRat& a, const Rational& b) {
  NRat nb = nr_from(b);
  return ni_equal(ni_mul(a.num, nb.den), ni_mul(nb.num, a.den));
}

NRat nr_add(const NRat& a, const NRat& b) {
  return {ni_add(ni_mul(a.num, b.den), ni_mul(b.num, a.den)),
          ni_mul(a.den, b.den)};
}

NRat nr_sub(const NRat& a, const NRat& b) {
  return {ni_add(ni_mul(a.num, b.den), ni_neg(ni_mul(b.num, a.den))),
          ni_mul(a.den, b.den)};
}

NRat nr_mul(const NRat& a, const NRat& b) {
  return {ni_mul(a.num, b.num), ni_mul(a.den, b.den)};
}

NRat nr_div(const NRat& a, const NRat& b) {
  NRat r = {ni_mul(a.num, b.den), ni_mul(a.den, b.num)};
  if (r.den.sign < 0) {
    r.den.sign = 1;
    r.num = ni_neg(r.num);
  }
  return r;
}

}  // namespace

TEST_CASE("construction normalizes sign and common factors") {
  CHECK(rat(6, -4) == rat(-3, 2));
  CHECK(rat(0, 7) == rat(0));
  CHECK(rat(-10, -5) == rat(2));
  CHECK(rat(3, 2).get_den() == 2);
  CHECK(rat(-3, 2).get_num() == -3);
  CHECK(is_zero(rat(0)));
  CHECK(!is_zero(rat(1, 1000000)));
}

TEST_CASE("string round trips") {
  CHECK(rat_str(rat(3)) == "3/1");
  CHECK(rat_str(rat(-1, 2)) == "-1/2");
  CHECK(rat_str(rat(0)) == "0/1");
  CHECK(rat_parse("42") == rat(42));
  CHECK(rat_parse("-7/3") == rat(-7, 3));
  CHECK(rat_parse("4/6") == rat(2, 3));
  for (long n = -20; n <= 20; ++n)
    for (long d = 1; d <= 9; ++d)
      CHECK(rat_parse(rat_str(rat(n, d))) == rat(n, d));
  CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("arithmetic agrees with a naive reference over random sequences") {
  std::mt19937_64 rng(7);
  std::vector<Rational> vals;
  for (int i = 0; i < 12; ++i) {
    long num = (long)(rng() % 2001) - 1000;
    long den = 1 + (long)(rng() % 50);
    vals.push_back(rat(num, den));
  }
  long checked = 0;
  for (int step = 0; step < 600; ++step) {
    const Rational& a = vals[rng() % vals.size()];
    const Rational& b = vals[rng() % vals.size()];
    int op = (int)(rng() % 4);
    if (op == 3 && is_zero(b)) op = 0;
    NRat na = nr_from(a), nb = nr_from(b);
    Rational c;
    NRat nc;
    switch (op) {
      case 0: c = a + b; nc = nr_add(na, nb); break;
      case 1: c = a - b; nc = nr_sub(na, nb); break;
      case 2: c = a * b; nc = nr_mul(na, nb); break;
      default: c = a / b; nc = nr_div(na, nb); break;
    }
    REQUIRE(nr_equal(nc, c));
    ++checked;
    vals[rng() % vals.size()] = c;
  }
  CHECK(checked == 600);
}

TEST_CASE("naive reference handles carries across digit boundaries") {
  Rational big = rat(9999) * rat(9999) * rat(9999);
  NRat nb = nr_from(rat(9999));
  NRat cube = nr_mul(nr_mul(nb, nb), nb);
  CHECK(nr_equal(cube, big));
  Rational sum = rat(9999, 10000) + rat(1, 10000);
  CHECK(nr_equal(nr_add(nr_from(rat(9999, 10000)), nr_from(rat(1, 10000))),
                 sum));
}
