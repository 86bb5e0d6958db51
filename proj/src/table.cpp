#include "fewears/table.hpp"

#include <algorithm>

#include "fewears/errors.hpp"

namespace fewears {

TableFormat parse_table_format(const std::string& name) {
    if (name == "text") return TableFormat::Text;
    if (name == "csv") return TableFormat::Csv;
    if (name == "json") return TableFormat::Json;
    throw InputError("format must be text|csv|json, got '" + name + "'");
}

std::string format_table_text(const Table& t) {
    std::vector<std::size_t> width(t.columns.size(), 0);
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : t.rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) line += "  ";
            line += row[c];
            if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
        }
        out += line + '\n';
    }
    return out;
}

std::string format_table_csv(const Table& t) {
    auto cell = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char ch : s) {
            if (ch == '"') q += '"';
            q += ch;
        }
        return q + "\"";
    };
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cell(cells[i]);
        return out + "\n";
    };
    std::string out = line(t.columns);
    for (const auto& row : t.rows) out += line(row);
    return out;
}

nlohmann::json table_to_json(const Table& t) {
    return nlohmann::json{{"columns", t.columns}, {"rows", t.rows}};
}

Table table_from_json(const nlohmann::json& j) {
    Table t;
    try {
        t.columns = j.at("columns").get<std::vector<std::string>>();
        t.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed table JSON: ") + e.what());
    }
    for (const auto& row : t.rows) {
        if (row.size() != t.columns.size()) throw InputError("table row width does not match its columns");
    }
    return t;
}

std::string format_table(const Table& t, TableFormat format) {
    switch (format) {
        case TableFormat::Text: return format_table_text(t);
        case TableFormat::Csv: return format_table_csv(t);
        case TableFormat::Json: return table_to_json(t).dump(2) + "\n";
    }
    return format_table_text(t);
}

}  // namespace fewears
