#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace mapcolor {

/// Text of a file shipped in the data directory, compiled into the library.
std::optional<std::string_view> fixture(std::string_view name);
std::vector<std::string_view> fixture_names();

}  // namespace mapcolor
