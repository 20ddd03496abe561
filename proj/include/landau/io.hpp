#pragma once

#include <map>
#include <string>
#include <vector>

#include "landau/spectral.hpp"

namespace landau {

/// Shortest-round-trip-safe decimal rendering of a double.
std::string format_double(double v);

/// RFC-4180-style CSV: quotes fields containing commas, quotes or newlines;
/// rows end with \n.
std::string csv_row(const std::vector<std::string>& fields);

std::string grid_function_to_csv(const GridFunction& f);
GridFunction grid_function_from_csv(const std::string& text);

/// Flat key = value configuration document; '#' starts a comment.
struct Config {
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) > 0; }
  const std::string& get(const std::string& key) const;
};

/// Parse errors carry the offending line number.
Config parse_config(const std::string& text);
Config load_config_file(const std::string& path);

/// Serialize in the same key = value form the parser accepts.
std::string config_to_text(const Config& config);

/// Write-then-rename so readers never observe partial output.
void atomic_write(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace landau
