#ifndef LANDAU_TOOLS_OUTPUT_HPP
#define LANDAU_TOOLS_OUTPUT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace landau::tools {

/// Table emitted by one subcommand.  CSV carries the metadata as '#'
/// comment rows; JSON mirrors every field.  Floating-point cells print
/// with 17 significant digits in both formats, so identical invocations
/// produce byte-identical output.
struct OutputRecord {
    using Cell = std::variant<std::int64_t, double, std::string>;

    std::string command;
    std::string schema_version{"1"};
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_meta(std::string key, std::string value);

    std::string to_csv() const;
    nlohmann::ordered_json to_json() const;

    /// Renders in the requested format ("csv" or "json").
    std::string render(const std::string& format) const;
};

std::string format_double(double v);

}  // namespace landau::tools

#endif
