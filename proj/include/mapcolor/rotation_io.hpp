#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mapcolor/embedding.hpp"

namespace mapcolor {

/// One line per vertex in ascending order: `<vertex>. (<nbr> <nbr> ...)`.
std::string write_rotation_text(const EmbeddedGraph& emb);

/// Inverse of write_rotation_text. `#` starts a comment. Parse errors carry
/// the line and column.
EmbeddedGraph read_rotation_text(std::string_view text);

/// One line per face: `F: [v1 v2 v3]`.
std::string write_face_list(const std::vector<Face>& faces);

}  // namespace mapcolor
