#include "leibniz/rational.hpp"

#include <algorithm>
#include <cctype>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw InputError("malformed integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view num, std::string_view den) {
  mpz_class n = parse_integer(num);
  mpz_class d = parse_integer(den);
  if (d == 0) throw InputError("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational parse_rational_text(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_rational(text);
  return parse_rational(text.substr(0, slash), text.substr(slash + 1));
}

std::string to_string(const Rational& r) { return r.get_str(10); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_zero(x); });
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

}  // namespace leibniz
