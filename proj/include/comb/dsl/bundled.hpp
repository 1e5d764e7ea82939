#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace comb::dsl {

// Circuit sources shipped inside the binary ("fibonacci", "lotka").
std::optional<std::string_view> bundled_source(std::string_view name);
std::vector<std::string_view> bundled_names();

}  // namespace comb::dsl
