#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "scenegen/types.hpp"

namespace scenegen {

// Canonical plain-text layout document. deserialize_layout inverts it
// exactly, and re-serializing a parsed canonical document is byte-identical.
std::string serialize_layout(const Layout& layout);

// Throws ParseError on malformed documents and ValidationError when the
// parsed layout violates a type invariant.
Layout deserialize_layout(std::string_view doc);

// Machine-readable mirror with the same schema names as the text document.
nlohmann::ordered_json layout_to_json(const Layout& layout);

}  // namespace scenegen
