#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "gharm/equations.hpp"
#include "gharm/grid.hpp"
#include "gharm/symbol.hpp"

namespace gharm::io {

using json = nlohmann::json;

/// 17 significant digits, scientific; round-trip exact for doubles.
std::string format_double(double v);

/// CSV with header "coordinate,re,im".
void write_csv(const std::filesystem::path& path, const std::vector<double>& coords,
               const std::vector<complex>& values);

struct CsvData {
    std::vector<double> coords;
    std::vector<complex> values;
};
CsvData read_csv(const std::filesystem::path& path);

/// Function samples with the line coordinate t as the CSV coordinate.
void write_function_csv(const std::filesystem::path& path, const SampledFunction& f);
/// Spectrum with xi as the coordinate.
void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& s);

/// Complex from JSON: a number or a [re, im] pair.
complex parse_complex(const json& j);
json complex_to_json(complex z);

json report_to_json(const SolveReport& rep, const std::string& family);
json multiplier_report_to_json(const MultiplierReport& rep);

/// Parse failure diagnostics with line/column derived from the byte offset.
struct ParseDiagnostics {
    std::size_t line = 0, column = 0;
    std::string message;
};
json parse_json_file(const std::filesystem::path& path); // throws ValidationError with line/col

} // namespace gharm::io
