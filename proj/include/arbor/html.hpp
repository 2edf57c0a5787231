#pragma once

#include <string>
#include <string_view>

namespace arbor {

// Escapes &, <, >, " and ' so the result is safe in text and attribute values.
std::string html_escape(std::string_view text);

}  // namespace arbor
