#include "hsindt/keyvalue.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hsindt/error.hpp"

namespace hsindt {

std::string trim_copy(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  std::istringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto t = trim_copy(item);
    std::size_t pos = 0;
    try {
      out.push_back(std::stod(t, &pos));
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != t.size()) throw FormatError("bad number '" + t + "'");
  }
  return out;
}

KeyValueFile KeyValueFile::parse(std::string_view text) {
  KeyValueFile file;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto body = trim_copy(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw FormatError("line " + std::to_string(number) + ": expected 'key = value'");
    }
    auto key = trim_copy(std::string_view(body).substr(0, eq));
    if (key.empty()) throw FormatError("line " + std::to_string(number) + ": empty key");
    file.entries_.push_back({std::move(key), trim_copy(std::string_view(body).substr(eq + 1)), number});
  }
  return file;
}

KeyValueFile KeyValueFile::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

const KeyValueFile::Entry* KeyValueFile::find_last(std::string_view key) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->key == key) return &*it;
  }
  return nullptr;
}

bool KeyValueFile::has(std::string_view key) const { return find_last(key) != nullptr; }

std::optional<std::string> KeyValueFile::get(std::string_view key) const {
  if (const auto* e = find_last(key)) return e->value;
  return std::nullopt;
}

std::vector<std::string> KeyValueFile::get_all(std::string_view key) const {
  std::vector<std::string> out;
  for (const auto& e : entries_) {
    if (e.key == key) out.push_back(e.value);
  }
  return out;
}

std::string KeyValueFile::get_string(std::string_view key, std::string fallback) const {
  const auto* e = find_last(key);
  return e ? e->value : fallback;
}

double KeyValueFile::get_double(std::string_view key, double fallback) const {
  const auto* e = find_last(key);
  if (!e) return fallback;
  try {
    std::size_t pos = 0;
    const double v = std::stod(e->value, &pos);
    if (pos == e->value.size()) return v;
  } catch (const std::exception&) {
  }
  throw FormatError("line " + std::to_string(e->line) + ": '" + e->key + "' expects a number, got '" + e->value + "'");
}

std::size_t KeyValueFile::get_size(std::string_view key, std::size_t fallback) const {
  const auto* e = find_last(key);
  if (!e) return fallback;
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(e->value, &pos);
    if (pos == e->value.size() && v >= 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw FormatError("line " + std::to_string(e->line) + ": '" + e->key + "' expects a non-negative integer, got '" +
                    e->value + "'");
}

bool KeyValueFile::get_bool(std::string_view key, bool fallback) const {
  const auto* e = find_last(key);
  if (!e) return fallback;
  if (e->value == "true" || e->value == "1" || e->value == "yes" || e->value == "on") return true;
  if (e->value == "false" || e->value == "0" || e->value == "no" || e->value == "off") return false;
  throw FormatError("line " + std::to_string(e->line) + ": '" + e->key + "' expects true/false, got '" + e->value + "'");
}

void KeyValueFile::require_known(std::initializer_list<std::string_view> allowed) const {
  for (const auto& e : entries_) {
    if (std::find(allowed.begin(), allowed.end(), e.key) == allowed.end()) {
      throw FormatError("line " + std::to_string(e.line) + ": unknown key '" + e.key + "'");
    }
  }
}

}  // namespace hsindt
