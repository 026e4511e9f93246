#pragma once

#include "commands.hpp"

#include <prefasp/model.hpp>

#include <string>
#include <vector>

namespace prefasp::cli {

[[nodiscard]] Document literals(const Interpretation& I);
[[nodiscard]] Document rule_ids(const std::vector<RuleId>& ids);

/// Human-readable rendering of a result document.
[[nodiscard]] std::string render_text(const Document& doc);
/// Pretty-printed JSON followed by a newline.
[[nodiscard]] std::string render_json(const Document& doc);

} // namespace prefasp::cli
