#ifndef FEWEARS_TABLE_HPP
#define FEWEARS_TABLE_HPP

// Column tables printed by the CLI. Cells are strings.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fewears {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    friend bool operator==(const Table&, const Table&) = default;
};

enum class TableFormat { Text, Csv, Json };

/// Throws InputError for names other than text|csv|json.
TableFormat parse_table_format(const std::string& name);

/// Whitespace-aligned columns without a header line.
std::string format_table_text(const Table& t);
std::string format_table_csv(const Table& t);
nlohmann::json table_to_json(const Table& t);
Table table_from_json(const nlohmann::json& j);
std::string format_table(const Table& t, TableFormat format);

}  // namespace fewears

#endif  // FEWEARS_TABLE_HPP
