#pragma once

#include <string>
#include <vector>

namespace pcgb::llm::detail {

const std::vector<std::vector<std::string>>& binary_examples();
const std::vector<std::vector<std::string>>& sokoban_examples();
const std::vector<std::vector<std::string>>& zelda_examples();

}  // namespace pcgb::llm::detail
