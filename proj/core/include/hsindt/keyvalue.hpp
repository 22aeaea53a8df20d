#pragma once

#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hsindt {

// "key = value" text with '#' comments. Keys may repeat; get() returns the
// last occurrence and get_all() every one in file order. Malformed lines and
// bad conversions throw FormatError citing the line number.
class KeyValueFile {
 public:
  struct Entry {
    std::string key;
    std::string value;
    std::size_t line = 0;
  };

  static KeyValueFile parse(std::string_view text);
  static KeyValueFile load(const std::filesystem::path& path);

  const std::vector<Entry>& entries() const { return entries_; }
  bool has(std::string_view key) const;
  std::optional<std::string> get(std::string_view key) const;
  std::vector<std::string> get_all(std::string_view key) const;

  std::string get_string(std::string_view key, std::string fallback) const;
  double get_double(std::string_view key, double fallback) const;
  std::size_t get_size(std::string_view key, std::size_t fallback) const;
  bool get_bool(std::string_view key, bool fallback) const;

  // Throws FormatError for any key not in `allowed`.
  void require_known(std::initializer_list<std::string_view> allowed) const;

 private:
  const Entry* find_last(std::string_view key) const;
  std::vector<Entry> entries_;
};

// Shared helpers for comma-separated numeric lists.
std::vector<double> parse_number_list(std::string_view text);
std::string trim_copy(std::string_view text);

}  // namespace hsindt
