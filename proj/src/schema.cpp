#include "cmspets/schema.hpp"

#include <stdexcept>

namespace cmspets {

namespace {

using nlohmann::json;

bool has_type(const json& v, const std::string& type) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "integer") return v.is_number_integer() || v.is_number_unsigned();
  if (type == "number") return v.is_number();
  if (type == "boolean") return v.is_boolean();
  if (type == "null") return v.is_null();
  throw std::invalid_argument("unsupported schema type '" + type + "'");
}

const json& resolve(const json& root, const std::string& ref) {
  const std::string prefix = "#/definitions/";
  if (ref.rfind(prefix, 0) != 0) throw std::invalid_argument("unsupported $ref '" + ref + "'");
  return root.at("definitions").at(ref.substr(prefix.size()));
}

std::optional<std::string> validate(const json& v, const json& s, const json& root, const std::string& path) {
  if (s.contains("$ref")) return validate(v, resolve(root, s["$ref"].get<std::string>()), root, path);
  auto fail = [&](const std::string& msg) { return std::optional<std::string>((path.empty() ? "$" : path) + ": " + msg); };

  if (s.contains("type")) {
    bool ok = false;
    if (s["type"].is_array()) {
      for (const auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
    } else {
      ok = has_type(v, s["type"].get<std::string>());
    }
    if (!ok) return fail("expected type " + s["type"].dump());
  }
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& e : s["enum"]) found = found || e == v;
    if (!found) return fail("value " + v.dump() + " not in " + s["enum"].dump());
  }
  if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>()) {
    return fail("below minimum " + s["minimum"].dump());
  }
  if (v.is_object()) {
    if (s.contains("required")) {
      for (const auto& k : s["required"]) {
        if (!v.contains(k.get<std::string>())) return fail("missing key '" + k.get<std::string>() + "'");
      }
    }
    const json props = s.value("properties", json::object());
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (props.contains(it.key())) {
        if (auto e = validate(it.value(), props[it.key()], root, path + "." + it.key())) return e;
      } else if (s.contains("additionalProperties") && s["additionalProperties"] == false) {
        return fail("unexpected key '" + it.key() + "'");
      }
    }
  }
  if (v.is_array() && s.contains("items")) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (auto e = validate(v[i], s["items"], root, path + "[" + std::to_string(i) + "]")) return e;
    }
  }
  if (s.contains("oneOf")) {
    int matches = 0;
    std::string last;
    for (const auto& alt : s["oneOf"]) {
      auto e = validate(v, alt, root, path);
      if (!e) {
        ++matches;
      } else {
        last = *e;
      }
    }
    if (matches != 1) return fail(std::to_string(matches) + " oneOf branches match" + (last.empty() ? "" : " (" + last + ")"));
  }
  if (s.contains("anyOf")) {
    bool any = false;
    for (const auto& alt : s["anyOf"]) any = any || !validate(v, alt, root, path);
    if (!any) return fail("no anyOf branch matches");
  }
  return std::nullopt;
}

struct Tally {
  long total = 0;
  long passed = 0;
};

std::optional<std::string> consistency(const json& r, const std::string& path, Tally& out) {
  Tally own;
  bool all_pass = true;
  if (r.contains("cases")) {
    for (const auto& c : r["cases"]) {
      ++own.total;
      const bool p = c["status"] == "pass";
      own.passed += p;
      all_pass = all_pass && p;
    }
  }
  if (r.contains("suites")) {
    for (size_t i = 0; i < r["suites"].size(); ++i) {
      Tally sub;
      if (auto e = consistency(r["suites"][i], path + ".suites[" + std::to_string(i) + "]", sub)) return e;
      own.total += sub.total;
      own.passed += sub.passed;
      all_pass = all_pass && r["suites"][i]["status"] == "pass";
    }
  }
  const json& c = r["counts"];
  if (c["total"].get<long>() != own.total || c["passed"].get<long>() != own.passed ||
      c["failed"].get<long>() != own.total - own.passed) {
    return (path.empty() ? "$" : path) + ": counts disagree with cases";
  }
  if ((r["status"] == "pass") != all_pass) return (path.empty() ? "$" : path) + ": status disagrees with cases";
  out = own;
  return std::nullopt;
}

}  // namespace

std::optional<std::string> validate_json(const json& instance, const json& schema) {
  return validate(instance, schema, schema, "");
}

std::optional<std::string> check_report_consistency(const json& instance) {
  Tally t;
  return consistency(instance, "", t);
}

}  // namespace cmspets
