#include "fo/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

#include "fo/errors.hpp"

namespace fo {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ParseError(field.empty() ? message : field + ": " + message);
}

const json& require(const json& object, const std::string& key, const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) fail(path, "missing required field \"" + key + "\"");
  return *it;
}

int parse_user_id(const json& value, const std::string& path) {
  if (value.is_number_integer()) {
    const auto id = value.get<long long>();
    if (id <= 0 || id > 1'000'000'000) fail(path, "user id must be a positive integer");
    return static_cast<int>(id);
  }
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        s.size() < 10) {
      const int id = std::stoi(s);
      if (id > 0) return id;
    }
  }
  fail(path, "expected a positive integer user id, got " + value.dump());
}

int parse_user_key(const std::string& key, const std::string& path) {
  return parse_user_id(json(key), path);
}

Rational parse_value(const json& value, const std::string& path) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_string()) {
    try {
      return parse_rational(value.get_ref<const std::string&>());
    } catch (const ParseError& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected a rational string \"p/q\" or an integer, got " + value.dump());
}

std::vector<int> parse_users(const json& value, const std::string& path) {
  if (!value.is_array() || value.empty()) fail(path, "expected a nonempty array of user ids");
  std::vector<int> users;
  for (std::size_t k = 0; k < value.size(); ++k) {
    users.push_back(parse_user_id(value[k], path + "[" + std::to_string(k) + "]"));
  }
  return users;
}

GroundSet make_ground(std::vector<int> users, const std::string& path) {
  try {
    return GroundSet(std::move(users));
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
}

Instance parse_bit_pool(const json& doc) {
  GroundSet ground = make_ground(parse_users(require(doc, "users", ""), "users"), "users");
  const json& obs = require(doc, "observations", "");
  if (!obs.is_object()) fail("observations", "expected an object keyed by user id");
  std::vector<std::vector<std::string>> observed(static_cast<std::size_t>(ground.size()));
  std::vector<bool> seen(observed.size(), false);
  for (const auto& [key, labels] : obs.items()) {
    const std::string path = "observations." + key;
    const int user = parse_user_key(key, path);
    if (!ground.has_user(user)) fail(path, "user " + key + " is not listed in \"users\"");
    const auto pos = static_cast<std::size_t>(ground.position(user));
    if (!labels.is_array()) fail(path, "expected an array of symbol labels");
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (!labels[k].is_string()) {
        fail(path + "[" + std::to_string(k) + "]", "symbol labels must be strings");
      }
      observed[pos].push_back(labels[k].get<std::string>());
    }
    seen[pos] = true;
  }
  for (std::size_t p = 0; p < seen.size(); ++p) {
    if (!seen[p]) {
      fail("observations", "missing entry for user " + std::to_string(ground.user(static_cast<int>(p))));
    }
  }
  return Instance{std::make_shared<BitPoolSource>(std::move(ground), observed)};
}

Instance parse_entropy_table(const json& doc) {
  const json& entries = require(doc, "entries", "");
  if (!entries.is_array()) fail("entries", "expected an array");

  struct Entry {
    std::vector<int> users;
    Rational value;
    std::string path;
  };
  std::vector<Entry> parsed;
  std::set<int> mentioned;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string path = "entries[" + std::to_string(k) + "]";
    const json& e = entries[k];
    if (!e.is_object()) fail(path, "expected an object with \"subset\" and \"value\"");
    const json& subset = require(e, "subset", path);
    if (!subset.is_array()) fail(path + ".subset", "expected an array of user ids");
    Entry entry{{}, parse_value(require(e, "value", path), path + ".value"), path};
    for (std::size_t j = 0; j < subset.size(); ++j) {
      entry.users.push_back(parse_user_id(subset[j], path + ".subset[" + std::to_string(j) + "]"));
      mentioned.insert(entry.users.back());
    }
    parsed.push_back(std::move(entry));
  }

  std::vector<int> users;
  if (doc.contains("users")) {
    users = parse_users(doc["users"], "users");
  } else {
    users.assign(mentioned.begin(), mentioned.end());
    if (users.empty()) fail("entries", "cannot infer users from an empty table");
  }
  GroundSet ground = make_ground(std::move(users), "users");

  std::vector<std::optional<Rational>> values(std::size_t{1} << ground.size());
  for (Entry& e : parsed) {
    Subset x;
    for (int u : e.users) {
      if (!ground.has_user(u)) fail(e.path + ".subset", "unknown user " + std::to_string(u));
      x = x.with(ground.position(u));
    }
    if (values[x.mask()]) fail(e.path, "duplicate entry for subset " + ground.format(x));
    values[x.mask()] = std::move(e.value);
  }
  if (!values[0]) values[0] = Rational(0);
  std::vector<Rational> table;
  table.reserve(values.size());
  for (std::size_t m = 0; m < values.size(); ++m) {
    if (!values[m]) {
      fail("entries", "missing value for subset " +
                          ground.format(Subset(static_cast<Subset::Mask>(m))));
    }
    table.push_back(std::move(*values[m]));
  }
  return Instance{std::make_shared<ExplicitEntropyTable>(std::move(ground), std::move(table))};
}

}  // namespace

Instance parse_instance(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("", "instance must be a JSON object");
  std::string model = "bit-pool";
  if (doc.contains("model")) {
    if (!doc["model"].is_string()) fail("model", "expected a string");
    model = doc["model"].get<std::string>();
  }
  try {
    if (model == "bit-pool") return parse_bit_pool(doc);
    if (model == "entropy-table") return parse_entropy_table(doc);
  } catch (const CapacityError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  fail("model", "unknown model \"" + model + "\" (expected \"bit-pool\" or \"entropy-table\")");
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::vector<Rational> parse_user_values(std::string_view text, const GroundSet& ground,
                                        const Rational& fallback) {
  std::vector<Rational> values(static_cast<std::size_t>(ground.size()), fallback);
  std::vector<bool> set(values.size(), false);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    start = end + 1;
    if (item.empty()) {
      if (end == text.size()) break;
      throw ParseError("empty item in \"" + std::string(text) + "\"");
    }
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected user=value, got \"" + std::string(item) + "\"");
    }
    const std::string key(item.substr(0, eq));
    const int user = parse_user_key(key, "\"" + std::string(item) + "\"");
    if (!ground.has_user(user)) throw ParseError("unknown user " + key);
    const auto pos = static_cast<std::size_t>(ground.position(user));
    if (set[pos]) throw ParseError("user " + key + " given twice");
    values[pos] = parse_rational(item.substr(eq + 1));
    set[pos] = true;
  }
  return values;
}

}  // namespace fo
