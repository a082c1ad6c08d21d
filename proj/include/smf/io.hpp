#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "smf/curves.hpp"
#include "smf/mechanisms.hpp"

/// Deterministic serialization of sampled curves and series.
///
/// CSV: header row, one data row per sample, 17-significant-digit numbers
/// (lossless for double), runs separated by one blank line, LF endings, final
/// newline. The closed flag is not encoded in CSV — parse(emit(p)) restores
/// the run structure and the exact numeric content; closure shows up only in
/// SVG output (Z path command).
///
/// SVG: one path element per run, 6-decimal fixed coordinates, viewBox from
/// the data bounding box with 5% padding, y axis flipped so curves render in
/// the usual mathematical orientation. Identical inputs produce identical
/// bytes.
namespace smf::io {

/// Shortest-round-trip style decimal with 17 significant digits ("%.17g").
[[nodiscard]] std::string format_double(double value);

/// CSV with header "theta,x,y".
void emit_csv(const curves::Polyline& polyline, std::ostream& os);

/// CSV with header "t,theta,alpha,x,omega" (the closed-form alpha track).
void emit_csv(const std::vector<mech::OscillatorSample>& series, std::ostream& os);

/// Headerless whitespace-separated variant of the CSV layouts.
void emit_plain(const curves::Polyline& polyline, std::ostream& os);
void emit_plain(const std::vector<mech::OscillatorSample>& series, std::ostream& os);

void emit_svg(const curves::Polyline& polyline, std::ostream& os);

/// Inverse of emit_csv(Polyline). Throws std::runtime_error on malformed
/// input. Parsed runs have closed = false (see the CSV note above).
[[nodiscard]] curves::Polyline parse_polyline_csv(std::istream& is);

/// Inverse of emit_csv(series) over the serialized columns; alpha_rk4 is set
/// to the parsed alpha. Throws std::runtime_error on malformed input.
[[nodiscard]] std::vector<mech::OscillatorSample> parse_series_csv(std::istream& is);

/// Writes contents to path via a sibling temp file renamed into place, so a
/// failure never leaves a partial file at path.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace smf::io
