#include "gharm/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gharm/errors.hpp"
#include "gharm/spaces.hpp"

namespace gharm::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v); // 17 significant digits
    return buf;
}

void write_csv(const std::filesystem::path& path, const std::vector<double>& coords,
               const std::vector<complex>& values) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open for writing: " + path.string());
    out << "coordinate,re,im\n";
    for (std::size_t i = 0; i < coords.size(); ++i)
        out << format_double(coords[i]) << ',' << format_double(values[i].real()) << ','
            << format_double(values[i].imag()) << '\n';
}

CsvData read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open: " + path.string());
    CsvData data;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.rfind("coordinate", 0) == 0) continue; // header
        }
        std::istringstream ss(line);
        std::string a, b, c;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c))
            throw ValidationError("malformed CSV row in " + path.string() + ": " + line);
        data.coords.push_back(std::stod(a));
        data.values.emplace_back(std::stod(b), std::stod(c));
    }
    return data;
}

void write_function_csv(const std::filesystem::path& path, const SampledFunction& f) {
    std::vector<double> t(f.grid.count);
    for (int j = 0; j < f.grid.count; ++j) t[j] = f.grid.node(j);
    write_csv(path, t, f.values);
}

void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& s) {
    std::vector<double> xi(s.freqs.count);
    for (int k = 0; k < s.freqs.count; ++k) xi[k] = s.freqs.node(k);
    write_csv(path, xi, s.values);
}

complex parse_complex(const json& j) {
    if (j.is_number()) return complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return complex(j[0].get<double>(), j[1].get<double>());
    throw ValidationError("expected a number or [re, im] pair, got: " + j.dump());
}

json complex_to_json(complex z) { return json::array({z.real(), z.imag()}); }

json report_to_json(const SolveReport& rep, const std::string& family) {
    json j;
    j["family"] = family;
    j["symbol_margin"] = rep.symbol_margin;
    j["freq_residual"] = rep.freq_residual;
    if (rep.space_residual) j["space_residual"] = *rep.space_residual;
    j["warnings"] = rep.warnings;
    if (rep.decomposition) {
        const auto& d = *rep.decomposition;
        j["decomposition"] = {{"d0", complex_to_json(d.d0)},
                              {"d1", complex_to_json(d.d1)},
                              {"h", d.h}};
        try {
            j["decomposition"]["tail_decay_slope"] = tail_decay_slope(d);
        } catch (const ValidationError&) {
            // frequency grid too narrow to fit the tail; omit the field
        }
    }
    const NormResult l2 = lp_norm(rep.g_side_solution, 2.0);
    j["diagnostics"] = {{"solution_l2_g", l2.divergent ? -1.0 : l2.value},
                        {"zygmund_seminorm_half", zygmund_seminorm(rep.g_side_solution, 0.5)}};
    return j;
}

json multiplier_report_to_json(const MultiplierReport& rep) {
    return json{{"margin", rep.margin},
                {"tv", rep.total_variation},
                {"M0", rep.mikhlin_m0},
                {"M1", rep.mikhlin_m1},
                {"verdict", rep.verdict}};
}

json parse_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t stop = std::min(e.byte, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ValidationError("JSON parse error in " + path.string() + " at line " +
                              std::to_string(line) + ", column " + std::to_string(col) + ": " +
                              e.what());
    }
}

} // namespace gharm::io
