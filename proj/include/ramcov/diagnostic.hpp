#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ramcov {

/// One finding from a validator or checker. `code` is a stable token
/// (e.g. "missing-composite"); `message` is for humans.
struct Diagnostic {
  std::string code;
  std::string message;
  bool operator==(const Diagnostic&) const = default;
};

/// Either a value or the full list of reasons it could not be produced.
template <class T>
struct Validated {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }

  bool has(std::string_view code) const {
    for (const auto& d : diagnostics)
      if (d.code == code) return true;
    return false;
  }
};

}  // namespace ramcov
