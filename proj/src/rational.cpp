#include "semimetric/rational.hpp"

#include <algorithm>
#include <cctype>

#include "semimetric/error.hpp"

namespace semimetric {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

bool has_leading_zero(std::string_view digits) {
  return digits.size() > 1 && digits.front() == '0';
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&](const char* why) {
    throw Error(ErrorKind::ParseError,
                "bad rational \"" + std::string(text) + "\": " + why);
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) fail("expected num or num/den");
  if (has_leading_zero(num) || has_leading_zero(den)) fail("leading zero");

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) fail("zero denominator");
  if (slash != std::string_view::npos && d == 1) fail("denominator 1 must be omitted");
  if (n == 0 && negative) fail("negative zero");
  if (n == 0 && slash != std::string_view::npos) fail("not in lowest terms");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (n != 0 && g != 1) fail("not in lowest terms");

  Rational value(negative ? mpz_class(-n) : n, d);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace semimetric
