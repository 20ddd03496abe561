#include "landau/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace landau {

std::string format_double(double v) {
  char buf[40];
  // %.17g round-trips every double and is locale-independent with snprintf
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

bool needs_quoting(const std::string& s) {
  return s.find_first_of(",\"\n\r") != std::string::npos;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

double parse_double(const std::string& s) {
  try {
    return std::stod(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: " + s);
  }
}

}  // namespace

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += needs_quoting(fields[i]) ? quote(fields[i]) : fields[i];
  }
  out += '\n';
  return out;
}

std::string grid_function_to_csv(const GridFunction& f) {
  std::string out = "x,re,im\n";
  for (int i = 0; i < f.grid.n_points; ++i) {
    out += csv_row({format_double(f.grid.x(i)),
                    format_double(f.values[i].real()),
                    format_double(f.values[i].imag())});
  }
  return out;
}

GridFunction grid_function_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<double> xs;
  std::vector<complexd> values;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      if (line != "x,re,im")
        throw std::invalid_argument("expected header x,re,im");
      header = false;
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 3)
      throw std::invalid_argument("expected 3 fields per row");
    xs.push_back(parse_double(fields[0]));
    values.emplace_back(parse_double(fields[1]), parse_double(fields[2]));
  }
  require(xs.size() >= 2, "grid needs at least two points");
  const double lo = xs.front(), hi = xs.back();
  SpatialGrid grid(0.5 * (lo + hi), 0.5 * (hi - lo),
                   static_cast<int>(xs.size()));
  return {grid, std::move(values)};
}

const std::string& Config::get(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end())
    throw std::invalid_argument("missing config key: " + key);
  return it->second;
}

Config parse_config(const std::string& text) {
  Config config;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config parse error at line " +
                                  std::to_string(line_no) +
                                  ": expected key = value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config parse error at line " +
                                  std::to_string(line_no) + ": empty key");
    config.values[key] = value;
  }
  return config;
}

Config load_config_file(const std::string& path) {
  return parse_config(read_file(path));
}

std::string config_to_text(const Config& config) {
  std::string out;
  for (const auto& [key, value] : config.values)
    out += key + " = " + value + "\n";
  return out;
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write to " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace landau
