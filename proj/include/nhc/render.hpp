#pragma once

#include <nhc/arith.hpp>

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nhc {

enum class OutputFormat { table, csv, json };

inline OutputFormat parse_output_format(const std::string& text) {
    if (text == "table") return OutputFormat::table;
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format '" + text + "'");
}

/// One cell: its text plus how JSON should type it.
struct Cell {
    enum class Kind { text, integer, real };
    Kind kind = Kind::text;
    std::string value;

    static Cell text(std::string s) { return {Kind::text, std::move(s)}; }
    static Cell integer(const Integer& n) { return {Kind::integer, n.get_str()}; }
    static Cell real(std::string s) { return {Kind::real, std::move(s)}; }
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row) {
        if (row.size() != columns.size()) {
            throw std::logic_error("Table::add: row width does not match header");
        }
        rows.push_back(std::move(row));
    }
};

/// "1e10", "2.7e10" for round integers of at least a million; exact text otherwise.
inline std::string bound_label(const Rational& X) {
    if (!is_integer(X) || X <= 0) {
        return X.get_str();
    }
    std::string digits = X.get_num().get_str();
    std::size_t zeros = 0;
    while (zeros + 1 < digits.size() && digits[digits.size() - 1 - zeros] == '0') {
        ++zeros;
    }
    if (zeros < 6) {
        return digits;
    }
    const std::string mantissa = digits.substr(0, digits.size() - zeros);
    const std::size_t exponent = zeros + mantissa.size() - 1;
    std::string head = mantissa.substr(0, 1);
    if (mantissa.size() > 1) {
        head += "." + mantissa.substr(1);
    }
    return head + "e" + std::to_string(exponent);
}

namespace detail {

inline nlohmann::ordered_json json_cell(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::integer: {
            // beyond 2^53 a double cannot hold the value, so keep the digits
            const Integer n(c.value);
            const Integer limit = Integer(1) << 53;
            if (abs(n) <= limit) {
                return nlohmann::ordered_json(n.get_si());
            }
            return nlohmann::ordered_json(c.value);
        }
        case Cell::Kind::real: return nlohmann::ordered_json(std::stod(c.value));
        case Cell::Kind::text: break;
    }
    return nlohmann::ordered_json(c.value);
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace detail

inline void render(const Table& t, OutputFormat format, std::ostream& os) {
    switch (format) {
        case OutputFormat::table: {
            std::vector<std::size_t> width(t.columns.size());
            for (std::size_t i = 0; i < t.columns.size(); ++i) {
                width[i] = t.columns[i].size();
                for (const auto& row : t.rows) {
                    width[i] = std::max(width[i], row[i].value.size());
                }
            }
            auto line = [&](auto cell_text) {
                std::string out;
                for (std::size_t i = 0; i < t.columns.size(); ++i) {
                    const std::string s = cell_text(i);
                    if (i > 0) out += "  ";
                    out += std::string(width[i] - s.size(), ' ') + s;
                }
                os << out << '\n';
            };
            line([&](std::size_t i) { return t.columns[i]; });
            for (const auto& row : t.rows) {
                line([&](std::size_t i) { return row[i].value; });
            }
            break;
        }
        case OutputFormat::csv: {
            for (std::size_t i = 0; i < t.columns.size(); ++i) {
                os << (i ? "," : "") << detail::csv_field(t.columns[i]);
            }
            os << '\n';
            for (const auto& row : t.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    os << (i ? "," : "") << detail::csv_field(row[i].value);
                }
                os << '\n';
            }
            break;
        }
        case OutputFormat::json: {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& row : t.rows) {
                nlohmann::ordered_json obj = nlohmann::ordered_json::object();
                for (std::size_t i = 0; i < row.size(); ++i) {
                    obj[t.columns[i]] = detail::json_cell(row[i]);
                }
                arr.push_back(std::move(obj));
            }
            os << arr.dump(2) << '\n';
            break;
        }
    }
}

}  // namespace nhc
