#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mapcolor {

/// Letters used for vortex corners and the lettered vertices they become.
enum class Letter : std::uint8_t { a, b, c, u, v, w, x, y, y0, y1 };

std::string_view to_string(Letter letter);
std::optional<Letter> parse_letter(std::string_view token);

/// Vertex identity: a residue of the current group, a vortex letter, or an
/// anonymous ordinal (current-graph vertices).
///
/// Ordering is numbered < lettered < anonymous, then by value, and is the
/// order every report and file uses.
class VertexId {
 public:
  enum class Kind : std::uint8_t { numbered, lettered, anonymous };

  constexpr VertexId() = default;

  static constexpr VertexId numbered(int residue) { return {Kind::numbered, residue}; }
  static constexpr VertexId lettered(Letter letter) {
    return {Kind::lettered, static_cast<int>(letter)};
  }
  static constexpr VertexId anonymous(int ordinal) { return {Kind::anonymous, ordinal}; }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_numbered() const { return kind_ == Kind::numbered; }
  constexpr bool is_lettered() const { return kind_ == Kind::lettered; }
  constexpr int residue() const { return value_; }
  constexpr Letter letter() const { return static_cast<Letter>(value_); }
  constexpr int ordinal() const { return value_; }

  std::string to_string() const;
  /// Accepts integers, letter names, and `@<ordinal>`.
  static std::optional<VertexId> parse(std::string_view token);

  constexpr auto operator<=>(const VertexId&) const = default;

 private:
  constexpr VertexId(Kind kind, int value) : kind_(kind), value_(value) {}

  Kind kind_ = Kind::anonymous;
  int value_ = 0;
};

struct VertexIdHash {
  std::size_t operator()(const VertexId& v) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(v.kind()) << 32) ^
                                  static_cast<unsigned>(v.residue()));
  }
};

}  // namespace mapcolor
