#include "mapcolor/vertex.hpp"

#include <array>
#include <charconv>

#include "mapcolor/error.hpp"

namespace mapcolor {

namespace {
constexpr std::array<std::string_view, 10> kLetterNames = {"a", "b", "c", "u",  "v",
                                                           "w", "x", "y", "y0", "y1"};
}  // namespace

std::string_view to_string(Letter letter) {
  return kLetterNames[static_cast<std::size_t>(letter)];
}

std::optional<Letter> parse_letter(std::string_view token) {
  for (std::size_t i = 0; i < kLetterNames.size(); ++i) {
    if (kLetterNames[i] == token) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

std::string VertexId::to_string() const {
  switch (kind_) {
    case Kind::numbered:
      return std::to_string(value_);
    case Kind::lettered:
      return std::string(mapcolor::to_string(letter()));
    case Kind::anonymous:
      return "@" + std::to_string(value_);
  }
  return {};
}

std::optional<VertexId> VertexId::parse(std::string_view token) {
  if (token.empty()) return std::nullopt;
  if (auto letter = parse_letter(token)) return VertexId::lettered(*letter);
  bool anonymous = token.front() == '@';
  if (anonymous) token.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) return std::nullopt;
  return anonymous ? VertexId::anonymous(value) : VertexId::numbered(value);
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::structural: return "structural";
    case ErrorKind::inconsistency: return "inconsistency";
    case ErrorKind::domain: return "domain";
    case ErrorKind::disconnected: return "disconnected";
    case ErrorKind::flip_precondition: return "flip-precondition";
    case ErrorKind::nontermination: return "nontermination";
    case ErrorKind::loop: return "loop";
    case ErrorKind::duplicate_edge: return "duplicate-edge";
    case ErrorKind::same_face: return "same-face";
    case ErrorKind::simplicity: return "simplicity";
    case ErrorKind::index: return "index";
    case ErrorKind::classification: return "classification";
    case ErrorKind::derivation: return "derivation";
    case ErrorKind::vortex_accounting: return "vortex-accounting";
    case ErrorKind::range: return "range";
    case ErrorKind::fixture: return "fixture";
    case ErrorKind::pipeline: return "pipeline";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

}  // namespace mapcolor
