#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "bilipkit/cones.hpp"
#include "bilipkit/distortion.hpp"
#include "bilipkit/point.hpp"
#include "bilipkit/sampled_map.hpp"

namespace bilipkit::io {

using Json = nlohmann::ordered_json;

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);
/// Parses a whole field as a double. Throws ParseError.
double parse_double(std::string_view field);

// Cloud CSV: header x1,...,xq then one point per row.
void write_cloud_csv(std::ostream& out, const PointCloud& cloud);
PointCloud read_cloud_csv(std::istream& in, std::string label = {});
void write_cloud_file(const std::filesystem::path& path, const PointCloud& cloud);
PointCloud read_cloud_file(const std::filesystem::path& path);

/// `<file>.meta.json` next to a map CSV.
std::filesystem::path sidecar_path(const std::filesystem::path& csv);

/// Sidecar JSON: {"q1", "q2", "fixes_origin", "avoids_origin", "unbounded_domain", "ambient"}.
Json map_metadata(const SampledMap& m);
/// Reads the sidecar fields. Throws ParseError on missing or mistyped keys.
std::pair<std::pair<std::size_t, std::size_t>, MapFlags> parse_map_metadata(const Json& j);

// Map CSV: header x1,...,xq1,y1,...,yq2; the flags live in the sidecar.
void write_map_csv(std::ostream& out, const SampledMap& m);
/// Parses the CSV rows against the sidecar and builds the map; invariant
/// violations surface as HypothesisError.
SampledMap read_map_csv(std::istream& in, const Json& meta);
void write_map_files(const std::filesystem::path& csv, const SampledMap& m);
SampledMap read_map_files(const std::filesystem::path& csv);

/// Direction CSV: header u1,...,uq,radius.
void write_directions_csv(std::ostream& out, const DirectionSet& dirs);

/// Non-finite values are written as the strings "inf" / "-inf" / "nan".
Json number_json(double v);

struct ShellRange {
  double r_min = 0.0;
  double r_max = 0.0;
};

Json report_json(const DistortionReport& r, const std::optional<ShellRange>& shell);

/// Serialises with a fixed layout (2-space indent, trailing newline).
std::string dump(const Json& j);

}  // namespace bilipkit::io
