#pragma once

#include "gq/structure.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace gq {

/// Applies every statement of a model file to `builder`, in order. Semantic
/// errors are rethrown with the statement's line prepended.
void load_model_source(StructureBuilder& builder, std::string_view source);
void load_model_file(StructureBuilder& builder, const std::filesystem::path& path);

Structure load_model(const std::filesystem::path& path);

/// Dumps a structure in the model file format (sorts, declarations, facts,
/// defaults, Declarations) so that loading the text rebuilds it.
std::string write_model(const Structure& structure);

}  // namespace gq
