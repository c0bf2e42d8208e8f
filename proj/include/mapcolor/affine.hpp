#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace mapcolor {

/// a*s + b, the shape of every current in the families.
struct Affine {
  long long a = 0;
  long long b = 0;

  long long at(long long s) const { return a * s + b; }
  bool constant() const { return a == 0; }
  Affine operator-() const { return {-a, -b}; }
  Affine operator+(Affine o) const { return {a + o.a, b + o.b}; }
  Affine operator-(Affine o) const { return {a - o.a, b - o.b}; }
  bool operator==(const Affine&) const = default;

  std::string to_string() const;
  /// Accepts forms such as `7`, `-3`, `s`, `6s-2`, `-12s+1`, `3*s+5`.
  static std::optional<Affine> parse(std::string_view text);
};

}  // namespace mapcolor
