#pragma once

// Experiment reports: scalar results, profile tables, fit diagnostics.
// Serialized as JSON (sorted keys, round-trip doubles) and CSV; non-finite
// values appear as the explicit string "divergent".

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "sphmax/common.hpp"

namespace sphmax {

inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct Report {
    std::string experiment;
    std::map<std::string, std::string> params;
    std::map<std::string, double> scalars;
    std::map<std::string, LineFit> fits;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> warnings;

    void add_row(std::initializer_list<double> vals) { rows.emplace_back(vals); }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["experiment"] = experiment;
        j["params"] = params;
        nlohmann::json sc = nlohmann::json::object();
        for (const auto& [k, v] : scalars) sc[k] = tag(v);
        j["scalars"] = sc;
        if (!fits.empty()) {
            nlohmann::json jf = nlohmann::json::object();
            for (const auto& [k, f] : fits) {
                jf[k] = {{"slope", tag(f.slope)}, {"intercept", tag(f.intercept)}, {"r_squared", tag(f.r_squared)}};
            }
            j["fits"] = jf;
        }
        if (!columns.empty()) {
            j["columns"] = columns;
            nlohmann::json jr = nlohmann::json::array();
            for (const auto& row : rows) {
                nlohmann::json r = nlohmann::json::array();
                for (double v : row) r.push_back(tag(v));
                jr.push_back(r);
            }
            j["rows"] = jr;
        }
        j["warnings"] = warnings;
        return j;
    }

    std::string to_csv() const {
        std::string out;
        if (columns.empty()) {
            // scalar-only experiments: emit a key,value table
            out += "quantity,value\n";
            for (const auto& [k, v] : scalars) {
                out += k;
                out += ',';
                out += std::isfinite(v) ? format_double(v) : std::string("divergent");
                out += '\n';
            }
            return out;
        }
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) out += ',';
            out += columns[c];
        }
        out += '\n';
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out += ',';
                out += std::isfinite(row[c]) ? format_double(row[c]) : std::string("divergent");
            }
            out += '\n';
        }
        return out;
    }

    // Writes <dir>/<stem>.json and <dir>/<stem>.csv; stem defaults to the
    // experiment name.
    void write(const std::string& dir, std::string stem = "") const {
        if (stem.empty()) {
            stem = experiment;
            for (char& c : stem) {
                if (c == ' ' || c == '/') c = '-';
            }
        }
        {
            std::ofstream f(dir + "/" + stem + ".json", std::ios::binary);
            require(f.good(), "cannot write report JSON in " + dir);
            f << to_json().dump(2) << "\n";
        }
        {
            std::ofstream f(dir + "/" + stem + ".csv", std::ios::binary);
            require(f.good(), "cannot write report CSV in " + dir);
            f << to_csv();
        }
    }

private:
    static nlohmann::json tag(double v) {
        if (std::isfinite(v)) return v;
        return "divergent";
    }
};

}  // namespace sphmax
