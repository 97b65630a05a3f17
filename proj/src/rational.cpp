#include "homanti/rational.hpp"

#include <cctype>

namespace homanti {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw InputError("rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  // Shape check first: GMP's own parser is laxer than the file contract.
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  bool ok;
  if (slash == std::string_view::npos) {
    ok = all_digits(body);
  } else {
    ok = all_digits(body.substr(0, slash)) && all_digits(body.substr(slash + 1));
  }
  if (!ok) throw InputError("rational: malformed text '" + std::string(text) + "'");

  mpq_class v;
  if (v.set_str(std::string(text), 10) != 0)
    throw InputError("rational: malformed text '" + std::string(text) + "'");
  if (sgn(v.get_den()) == 0)
    throw InputError("rational: zero denominator in '" + std::string(text) + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }

}  // namespace homanti
