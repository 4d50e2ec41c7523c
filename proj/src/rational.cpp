#include "r2sheaf/rational.hpp"

#include <limits>

#include "r2sheaf/errors.hpp"

namespace r2sheaf {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw InvalidInput("malformed number: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw InvalidInput("malformed number: '" + std::string(whole) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor_div(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil_div(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw InvalidInput("integer out of range: " + z.get_str());
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace r2sheaf
