#pragma once

#include <string>
#include <vector>

#include "ramcov/io.hpp"

namespace ramcov {

enum class Verdict { pass, fail, undefined };

std::string to_string(Verdict v);
/// Throws io::InputError for an unknown token.
Verdict parse_verdict(const std::string& token);

/// Machine-readable result of one CLI command. Payload values are strings,
/// booleans, arrays and objects only; numbers travel as decimal strings.
struct Report {
  std::string command;
  std::vector<std::string> inputs;
  Verdict verdict = Verdict::pass;
  io::Json payload = io::Json::object();
  std::vector<std::string> diagnostics;

  io::Json to_json() const;
  static Report from_json(const io::Json& j);
  /// One line (compact) or two-space indented; always newline-terminated.
  std::string serialize(bool pretty = false) const;
  static Report parse(const std::string& text);

  bool operator==(const Report&) const = default;
};

/// True if any JSON number (integer or floating) appears anywhere in `j`.
bool contains_numbers(const io::Json& j);

}  // namespace ramcov
