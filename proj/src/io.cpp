#include "ramcov/io.hpp"

#include <fstream>
#include <sstream>

#include "ramcov/constructions.hpp"

namespace ramcov::io {

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path.string());
}

namespace {

const Json& member(const Json& j, const char* key, const char* where) {
  if (!j.is_object()) throw InputError(std::string(where) + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(where) + ": missing \"" + key + "\"");
  return *it;
}

std::string text(const Json& j, const char* key, const char* where) {
  const auto& v = member(j, key, where);
  if (!v.is_string()) throw InputError(std::string(where) + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

const Json& array_member(const Json& j, const char* key, const char* where, bool required) {
  static const Json empty = Json::array();
  if (!required && j.is_object() && !j.contains(key)) return empty;
  const auto& v = member(j, key, where);
  if (!v.is_array()) throw InputError(std::string(where) + ": \"" + key + "\" must be an array");
  return v;
}

std::map<std::string, std::string> string_map(const Json& j, const char* key) {
  std::map<std::string, std::string> out;
  const auto& v = member(j, key, "functor");
  if (!v.is_object()) throw InputError(std::string("functor: \"") + key + "\" must be an object");
  for (const auto& [k, value] : v.items()) {
    if (!value.is_string()) throw InputError("functor: \"" + std::string(key) + "\" values must be strings");
    out[k] = value.get<std::string>();
  }
  return out;
}

CategoryData builtin_category_data(const std::string& name) {
  try {
    return builtin_category(name)->to_data();
  } catch (const std::out_of_range& e) {
    throw InputError(e.what());
  }
}

CategoryData resolve_category(const Json& ref, const std::filesystem::path& base_dir) {
  if (ref.is_object()) return category_data_from_json(ref);
  if (!ref.is_string()) throw InputError("functor: \"source\"/\"target\" must be a path or an inline category");
  const auto spec = ref.get<std::string>();
  if (spec.starts_with(builtin_prefix)) return builtin_category_data(spec.substr(builtin_prefix.size()));
  std::filesystem::path path(spec);
  if (path.is_relative()) path = base_dir / path;
  return category_data_from_json(read_json_file(path));
}

}  // namespace

CategoryData category_data_from_json(const Json& j) {
  CategoryData data;
  for (const auto& o : array_member(j, "objects", "category", true)) {
    if (!o.is_string()) throw InputError("category: object ids must be strings");
    data.objects.push_back(o.get<std::string>());
  }
  for (const auto& m : array_member(j, "morphisms", "category", false))
    data.morphisms.push_back({text(m, "id", "morphism"), text(m, "src", "morphism"), text(m, "tgt", "morphism")});
  for (const auto& c : array_member(j, "composition", "category", false))
    data.composition.push_back(
        {text(c, "first", "composite"), text(c, "second", "composite"), text(c, "result", "composite")});
  return data;
}

Json category_to_json(const CategoryData& data) {
  Json j;
  j["objects"] = data.objects;
  j["morphisms"] = Json::array();
  for (const auto& m : data.morphisms) j["morphisms"].push_back({{"id", m.id}, {"src", m.src}, {"tgt", m.tgt}});
  j["composition"] = Json::array();
  for (const auto& c : data.composition)
    j["composition"].push_back({{"first", c.first}, {"second", c.second}, {"result", c.result}});
  return j;
}

Json category_to_json(const FiniteCategory& c) { return category_to_json(c.to_data()); }

CategoryData read_category(const std::string& spec) {
  if (spec.starts_with(builtin_prefix)) return builtin_category_data(spec.substr(builtin_prefix.size()));
  return category_data_from_json(read_json_file(spec));
}

FunctorData functor_data_from_json(const Json& j) {
  return {string_map(j, "object_map"), j.contains("morphism_map") ? string_map(j, "morphism_map")
                                                                  : std::map<std::string, std::string>{}};
}

FunctorFile read_functor(const std::string& spec) {
  if (spec.starts_with(builtin_prefix)) {
    const auto name = spec.substr(builtin_prefix.size());
    try {
      const auto p = builtin_functor(name);
      return {p.source().to_data(), p.target().to_data(), p.to_data()};
    } catch (const std::out_of_range& e) {
      throw InputError(e.what());
    }
  }
  const std::filesystem::path path(spec);
  const Json j = read_json_file(path);
  const auto dir = path.parent_path();
  return {resolve_category(member(j, "source", "functor"), dir), resolve_category(member(j, "target", "functor"), dir),
          functor_data_from_json(j)};
}

Json functor_to_json(const CategoryFunctor& p) {
  const auto data = p.to_data();
  Json j;
  j["source"] = category_to_json(p.source());
  j["target"] = category_to_json(p.target());
  j["object_map"] = Json::object();
  for (const auto& [k, v] : data.object_map) j["object_map"][k] = v;
  j["morphism_map"] = Json::object();
  for (const auto& [k, v] : data.morphism_map) j["morphism_map"][k] = v;
  return j;
}

std::string to_file_text(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path.string() + "'");
}

}  // namespace ramcov::io
