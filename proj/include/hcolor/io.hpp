#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hcolor/model.hpp"
#include "hcolor/search.hpp"
#include "hcolor/theorems.hpp"

namespace hcolor {

/// Unreadable or structurally malformed input document.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Contents of an instance file. The instance may still carry coloring
/// violations; run validate_instance() before using it.
struct InstanceDocument {
    HColoredGraph instance;
    std::vector<std::string> labels;  // optional vertex names
    std::optional<SearchSpec> spec;   // present when the file embeds its search spec
};

nlohmann::json instance_to_json(const HColoredGraph& inst, const std::vector<std::string>& labels = {});
InstanceDocument instance_from_json(const nlohmann::json& doc);

/// Parses an instance document; parse failures report the byte offset.
InstanceDocument parse_instance(std::string_view text);
InstanceDocument load_instance(const std::filesystem::path& path);

nlohmann::json spec_to_json(const SearchSpec& spec);  // the object stored under "spec"
SearchSpec spec_from_json(const nlohmann::json& body);
SearchSpec load_spec(const std::filesystem::path& path);

nlohmann::json walk_to_json(const Walk& w, const std::vector<std::string>& labels = {});
nlohmann::json verdict_to_json(const TheoremVerdict& verdict, const std::vector<std::string>& labels = {});

void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

}  // namespace hcolor
