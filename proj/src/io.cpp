#include "bilipkit/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>
#include <vector>

#include "bilipkit/errors.hpp"

namespace bilipkit::io {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  return s;
}

std::string header(std::string_view prefix, std::size_t n, std::size_t first = 1) {
  std::string h;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      h += ',';
    }
    h += prefix;
    h += std::to_string(first + i);
  }
  return h;
}

// Reads the header and the numeric rows; every row must have `width` fields.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

Table read_table(std::istream& in) {
  Table t;
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("CSV input is empty (missing header)");
  }
  for (std::string_view f : split(trim(line))) {
    t.columns.emplace_back(trim(f));
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty()) {
      continue;
    }
    const auto fields = split(body);
    if (fields.size() != t.columns.size()) {
      throw ParseError("CSV line " + std::to_string(line_no) + " has " +
                       std::to_string(fields.size()) + " fields, header has " +
                       std::to_string(t.columns.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (std::string_view f : fields) {
      try {
        row.push_back(parse_double(trim(f)));
      } catch (const ParseError& e) {
        throw ParseError("CSV line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

void expect_header(const Table& t, const std::string& expected) {
  std::string got;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i > 0) {
      got += ',';
    }
    got += t.columns[i];
  }
  if (got != expected) {
    throw ParseError("CSV header '" + got + "' does not match expected '" + expected + "'");
  }
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot open '" + path.string() + "' for writing");
  }
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  return in;
}

template <typename T>
T required(const Json& j, const char* key) {
  if (!j.contains(key)) {
    throw ParseError(std::string("sidecar is missing key '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("sidecar key '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view field) {
  double v = 0.0;
  const auto* end = field.data() + field.size();
  const auto res = std::from_chars(field.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
    throw ParseError("'" + std::string(field) + "' is not a finite number");
  }
  return v;
}

void write_cloud_csv(std::ostream& out, const PointCloud& cloud) {
  out << header("x", cloud.dim()) << '\n';
  for (const Point& p : cloud.points()) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      out << (i ? "," : "") << format_double(p[i]);
    }
    out << '\n';
  }
}

PointCloud read_cloud_csv(std::istream& in, std::string label) {
  const Table t = read_table(in);
  expect_header(t, header("x", t.columns.size()));
  if (t.rows.empty()) {
    return PointCloud::empty(t.columns.size(), std::move(label));
  }
  std::vector<Point> pts;
  pts.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    pts.emplace_back(row);
  }
  return PointCloud(std::move(pts), std::move(label));
}

void write_cloud_file(const std::filesystem::path& path, const PointCloud& cloud) {
  auto out = open_out(path);
  write_cloud_csv(out, cloud);
}

PointCloud read_cloud_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_cloud_csv(in, path.filename().string());
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv) {
  return std::filesystem::path(csv.string() + ".meta.json");
}

Json map_metadata(const SampledMap& m) {
  Json j;
  j["q1"] = m.domain_dim();
  j["q2"] = m.codomain_dim();
  j["fixes_origin"] = m.flags().fixes_origin;
  j["avoids_origin"] = m.flags().avoids_origin;
  j["unbounded_domain"] = m.flags().unbounded_domain;
  j["ambient"] = std::string(to_string(m.flags().ambient));
  return j;
}

std::pair<std::pair<std::size_t, std::size_t>, MapFlags> parse_map_metadata(const Json& j) {
  if (!j.is_object()) {
    throw ParseError("sidecar must be a JSON object");
  }
  const auto q1 = required<std::size_t>(j, "q1");
  const auto q2 = required<std::size_t>(j, "q2");
  if (q1 == 0 || q2 == 0) {
    throw ParseError("sidecar dimensions must be positive");
  }
  MapFlags flags;
  flags.fixes_origin = required<bool>(j, "fixes_origin");
  flags.avoids_origin = required<bool>(j, "avoids_origin");
  flags.unbounded_domain = required<bool>(j, "unbounded_domain");
  flags.ambient = ambient_from_string(required<std::string>(j, "ambient"));
  return {{q1, q2}, flags};
}

void write_map_csv(std::ostream& out, const SampledMap& m) {
  out << header("x", m.domain_dim()) << ',' << header("y", m.codomain_dim()) << '\n';
  for (std::size_t k = 0; k < m.size(); ++k) {
    const Point& x = m.domain()[k];
    const Point& y = m.codomain()[k];
    for (std::size_t i = 0; i < x.dim(); ++i) {
      out << (i ? "," : "") << format_double(x[i]);
    }
    for (std::size_t i = 0; i < y.dim(); ++i) {
      out << ',' << format_double(y[i]);
    }
    out << '\n';
  }
}

SampledMap read_map_csv(std::istream& in, const Json& meta) {
  const auto [dims, flags] = parse_map_metadata(meta);
  const auto [q1, q2] = dims;
  const Table t = read_table(in);
  expect_header(t, header("x", q1) + "," + header("y", q2));
  if (t.rows.size() < 2) {
    throw HypothesisError("a sampled map needs at least 2 pairs");
  }
  std::vector<Point> dom;
  std::vector<Point> cod;
  for (const auto& row : t.rows) {
    dom.emplace_back(std::vector<double>(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(q1)));
    cod.emplace_back(std::vector<double>(row.begin() + static_cast<std::ptrdiff_t>(q1), row.end()));
  }
  return SampledMap(PointCloud(std::move(dom)), PointCloud(std::move(cod)), flags);
}

void write_map_files(const std::filesystem::path& csv, const SampledMap& m) {
  {
    auto out = open_out(csv);
    write_map_csv(out, m);
  }
  auto meta = open_out(sidecar_path(csv));
  meta << dump(map_metadata(m));
}

SampledMap read_map_files(const std::filesystem::path& csv) {
  auto meta_in = open_in(sidecar_path(csv));
  Json meta;
  try {
    meta = Json::parse(meta_in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("sidecar '" + sidecar_path(csv).string() + "' is not valid JSON: " + e.what());
  }
  auto in = open_in(csv);
  return read_map_csv(in, meta);
}

void write_directions_csv(std::ostream& out, const DirectionSet& dirs) {
  out << header("u", dirs.dim()) << ",radius\n";
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    const Point& u = dirs.directions[k];
    for (std::size_t i = 0; i < u.dim(); ++i) {
      out << (i ? "," : "") << format_double(u[i]);
    }
    out << ',' << format_double(dirs.source_radii[k]) << '\n';
  }
}

Json number_json(double v) {
  if (std::isnan(v)) {
    return "nan";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  return v;
}

Json report_json(const DistortionReport& r, const std::optional<ShellRange>& shell) {
  Json j;
  j["schema"] = 1;
  j["L_expand"] = number_json(r.L_expand);
  j["L_contract"] = number_json(r.L_contract);
  j["bilip_constant"] = number_json(r.bilip_constant);
  j["witnesses"] = {
      {"expand", {r.witness_expand.first, r.witness_expand.second}},
      {"contract", {r.witness_contract.first, r.witness_contract.second}},
  };
  j["pairs_evaluated"] = r.pairs_evaluated;
  j["pairs_skipped"] = r.pairs_skipped;
  j["strategy"] = r.strategy;
  if (shell) {
    j["shell"] = {{"r_min", number_json(shell->r_min)}, {"r_max", number_json(shell->r_max)}};
  } else {
    j["shell"] = nullptr;
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace bilipkit::io
