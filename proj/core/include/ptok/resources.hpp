#pragma once

#include <optional>
#include <string_view>
#include <vector>

// Data files under data/ compiled into the library.
namespace ptok::resources {

// `name` is the path relative to data/, e.g. "lexicon/suffixes.txt".
std::optional<std::string_view> find(std::string_view name);
std::vector<std::string_view> names();

}  // namespace ptok::resources
