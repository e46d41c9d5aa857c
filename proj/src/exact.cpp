#include "wheelset/exact.hpp"

#include <cctype>
#include <sstream>

namespace wheelset {

Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw Error("exact_div: division by zero");
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw Error("exact_div: " + a.str() + " not divisible by " + b.str());
  return q;
}

Point operator-(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw Error("point difference: dimension mismatch");
  Point out;
  out.coords.reserve(a.dim());
  for (size_t i = 0; i < a.dim(); ++i) out.coords.push_back(a[i] - b[i]);
  return out;
}

bool is_origin(const Point& p) {
  for (const auto& c : p.coords)
    if (c != 0) return false;
  return true;
}

Rat parse_rational(std::string_view text) {
  auto bad = [&] { return ParseError("bad rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  const size_t slash = text.find('/');
  auto check_int = [&](std::string_view s) {
    if (s.empty()) throw bad();
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
  };
  try {
    if (slash == std::string_view::npos) {
      check_int(text);
      return Rat(Int(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    Int d{std::string(den)};
    if (d == 0) throw bad();
    return Rat(Int(std::string(num)), d);
  } catch (const std::exception&) {
    throw bad();
  }
}

std::string to_string(const Rat& x) {
  const Int num = numerator(x);
  const Int den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const Point& p) {
  std::ostringstream out;
  for (size_t i = 0; i < p.dim(); ++i) {
    if (i) out << ' ';
    out << to_string(p[i]);
  }
  return out.str();
}

}  // namespace wheelset
