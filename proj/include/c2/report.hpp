#pragma once

#include <c2/chaos.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace c2 {

enum class OutputFormat { plain, csv, json_lines };

/// Carried by every csv and json-lines record.
inline constexpr int schema_version = 1;

/// "plain", "csv" or "json-lines"; throws parse_error otherwise.
OutputFormat parse_format(std::string_view name);

/// csv has one row per matrix cell; json-lines one object per line.
std::string render(const Analysis& analysis, OutputFormat format);
std::string render(const ChaosReport& report, OutputFormat format);

/// Two whitespace-separated columns (n, running P[s = 0] over the first n
/// bits) at `points` evenly spaced checkpoints, for gnuplot.
std::string frequency_series(const BitStream& s, std::size_t length, std::size_t points = 100);

} // namespace c2
