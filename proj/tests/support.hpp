#pragma once

#include "gq/model_file.hpp"

#include <filesystem>
#include <string>

namespace gq::test {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(GQ_FIXTURE_DIR) / name;
}

inline Structure graph_fixture() { return load_model(fixture("graph.gq")); }

}  // namespace gq::test
