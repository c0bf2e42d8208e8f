#include "mapcolor/affine.hpp"

#include <cctype>

namespace mapcolor {

std::string Affine::to_string() const {
  std::string out;
  if (a != 0) {
    if (a == -1) {
      out = "-";
    } else if (a != 1) {
      out = std::to_string(a);
    }
    out += "s";
    if (b > 0) out += "+" + std::to_string(b);
    if (b < 0) out += std::to_string(b);
    return out;
  }
  return std::to_string(b);
}

std::optional<Affine> Affine::parse(std::string_view text) {
  Affine out;
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (any) {
      return std::nullopt;
    }
    long long coef = 0;
    bool digits = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coef = coef * 10 + (text[pos] - '0');
      digits = true;
      ++pos;
    }
    if (pos < text.size() && text[pos] == '*') {
      if (!digits) return std::nullopt;
      ++pos;
      if (pos >= text.size() || text[pos] != 's') return std::nullopt;
    }
    if (pos < text.size() && text[pos] == 's') {
      out.a += sign * (digits ? coef : 1);
      ++pos;
    } else if (digits) {
      out.b += sign * coef;
    } else {
      return std::nullopt;
    }
    any = true;
  }
  if (!any) return std::nullopt;
  return out;
}

}  // namespace mapcolor
