#include "eqfix/rational.hpp"

#include <cctype>

namespace eqfix {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(text)) throw InputError("bad rational literal: '" + text + "'");
    return Rat(Int(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw InputError("bad rational literal: '" + text + "'");
  return make_rat(Int(num), Int(den));
}

std::string fraction_str(const Rat& r) {
  if (is_integral(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace eqfix
