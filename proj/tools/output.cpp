#include "output.hpp"

#include <cstdio>
#include <stdexcept>

namespace landau::tools {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // canonicalize the sign of zero
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void OutputRecord::add_meta(std::string key, std::string value) {
    meta.emplace_back(std::move(key), std::move(value));
}

namespace {

std::string cell_to_string(const OutputRecord::Cell& cell) {
    if (std::holds_alternative<std::int64_t>(cell))
        return std::to_string(std::get<std::int64_t>(cell));
    if (std::holds_alternative<double>(cell)) return format_double(std::get<double>(cell));
    return std::get<std::string>(cell);
}

}  // namespace

std::string OutputRecord::to_csv() const {
    std::string out = "# landau " + command + " schema=" + schema_version + "\n";
    for (const auto& [k, v] : meta) out += "# " + k + "=" + v + "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ",";
        out += columns[i];
    }
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += cell_to_string(row[i]);
        }
        out += "\n";
    }
    return out;
}

nlohmann::ordered_json OutputRecord::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["schema_version"] = schema_version;
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [k, v] : meta) m[k] = v;
    j["meta"] = m;
    j["columns"] = columns;
    nlohmann::ordered_json rws = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& cell : row) {
            if (std::holds_alternative<std::int64_t>(cell)) {
                r.push_back(std::get<std::int64_t>(cell));
            } else if (std::holds_alternative<double>(cell)) {
                // Serialized as a 17-digit string for byte-stable output.
                r.push_back(format_double(std::get<double>(cell)));
            } else {
                r.push_back(std::get<std::string>(cell));
            }
        }
        rws.push_back(std::move(r));
    }
    j["rows"] = rws;
    return j;
}

std::string OutputRecord::render(const std::string& format) const {
    if (format == "csv") return to_csv();
    if (format == "json") return to_json().dump(2) + "\n";
    throw std::invalid_argument("output: unknown format '" + format + "'");
}

}  // namespace landau::tools
