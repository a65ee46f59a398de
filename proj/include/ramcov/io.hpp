#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "ramcov/category.hpp"
#include "ramcov/covering.hpp"

namespace ramcov::io {

using Json = nlohmann::ordered_json;

/// Malformed or unreadable input (exit status 2 at the CLI).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view builtin_prefix = "builtin:";

Json parse_json_text(const std::string& text, const std::string& origin);
Json read_json_file(const std::filesystem::path& path);

CategoryData category_data_from_json(const Json& j);
Json category_to_json(const CategoryData& data);
Json category_to_json(const FiniteCategory& c);

/// A category by path or "builtin:<name>".
CategoryData read_category(const std::string& spec);

struct FunctorFile {
  CategoryData source;
  CategoryData target;
  FunctorData map;
};

/// A functor file by path or "builtin:<name>". "source"/"target" may be a path
/// (relative to the functor file), "builtin:<name>", or an inline category.
FunctorFile read_functor(const std::string& spec);
FunctorData functor_data_from_json(const Json& j);
/// Self-contained form with inline source and target.
Json functor_to_json(const CategoryFunctor& p);

/// Text written to files: two-space indented JSON plus a trailing newline.
std::string to_file_text(const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace ramcov::io
