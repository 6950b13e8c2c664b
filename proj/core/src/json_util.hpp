#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "simpcx/error.hpp"

namespace simpcx {

// Parses `text`; syntax errors become Error with line and column.
inline nlohmann::json parse_json_document(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error("JSON parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                e.what());
  }
}

}  // namespace simpcx
