#include "dbm/rational.hpp"

#include <cctype>

#include "dbm/errors.hpp"

namespace dbm {

Integer floor_of(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  Integer q = num / den;  // truncates toward zero; den > 0
  if (num % den != 0 && num < 0) {
    q -= 1;
  }
  return q;
}

Integer ceil_of(const Rational& r) { return -floor_of(-r); }

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) {
    return std::nullopt;
  }
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  const Integer sn = boost::multiprecision::sqrt(num);
  const Integer sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) {
    return std::nullopt;
  }
  return Rational(sn, sd);
}

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw ParseError("expected an integer, got \"" + std::string(text) + "\"");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("expected an integer, got \"" + std::string(text) + "\"");
    }
  }
  Integer value(std::string(text.substr(i)));
  return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw ParseError("denominator must be an unsigned integer in \"" + std::string(text) + "\"");
  }
  const Integer den = parse_integer(den_text);
  if (den == 0) {
    throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    return boost::multiprecision::numerator(r).str();
  }
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

std::string to_string(const Integer& z) { return z.str(); }

}  // namespace dbm
