#include "ramcov/report.hpp"

namespace ramcov {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::undefined: return "undefined";
  }
  return "fail";
}

Verdict parse_verdict(const std::string& token) {
  if (token == "pass") return Verdict::pass;
  if (token == "fail") return Verdict::fail;
  if (token == "undefined") return Verdict::undefined;
  throw io::InputError("unknown verdict '" + token + "'");
}

io::Json Report::to_json() const {
  io::Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["verdict"] = to_string(verdict);
  j["payload"] = payload;
  j["diagnostics"] = diagnostics;
  return j;
}

Report Report::from_json(const io::Json& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs").get<std::vector<std::string>>();
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    r.payload = j.at("payload");
    r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
    return r;
  } catch (const io::Json::exception& e) {
    throw io::InputError(std::string("malformed report: ") + e.what());
  }
}

std::string Report::serialize(bool pretty) const { return (pretty ? to_json().dump(2) : to_json().dump()) + "\n"; }

Report Report::parse(const std::string& text) { return from_json(io::parse_json_text(text, "report")); }

bool contains_numbers(const io::Json& j) {
  if (j.is_number()) return true;
  if (j.is_structured())
    for (const auto& item : j)
      if (contains_numbers(item)) return true;
  return false;
}

}  // namespace ramcov
