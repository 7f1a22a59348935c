#include "table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "relbound/errors.hpp"

namespace relbound::cli {

Format parse_format(const std::string& text) {
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    if (text == "pretty") return Format::Pretty;
    throw DomainError("unknown output format '" + text + "' (expected csv, json or pretty)");
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("row width " + std::to_string(row.size()) + " does not match " +
                               std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::string format_energy_unit(double mev) {
    const double mag = std::abs(mev);
    double scaled = mev;
    const char* unit = "MeV";
    if (mag != 0.0 && mag < 1e-3) {
        scaled = mev * 1e6;
        unit = "eV";
    } else if (mag != 0.0 && mag < 1.0) {
        scaled = mev * 1e3;
        unit = "keV";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, scaled, std::chars_format::general, 8);
    return std::string(buf, res.ptr) + " " + unit;
}

namespace {

std::string cell_text(const Cell& cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(double d) const { return format_number(d); }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
    };
    return std::visit(Visitor{}, cell);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

nlohmann::ordered_json cell_json(const Cell& cell) {
    if (std::holds_alternative<std::monostate>(cell)) return nullptr;
    if (auto s = std::get_if<std::string>(&cell)) return *s;
    if (auto i = std::get_if<std::int64_t>(&cell)) return *i;
    if (auto b = std::get_if<bool>(&cell)) return *b;
    const double d = std::get<double>(cell);
    if (!std::isfinite(d)) return nullptr;
    // round-trip through the 12-digit text so json and csv carry the same value
    const std::string text = format_number(d);
    double rounded = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), rounded);
    return rounded;
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
    for (const auto& c : table.comments) out << "# " << c << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ',';
        out << csv_escape(table.columns[i]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << csv_escape(cell_text(row[i]));
        }
        out << '\n';
    }
}

void write_json(const Table& table, std::ostream& out) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = cell_json(row[i]);
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

void write_pretty(const Table& table, std::ostream& out) {
    for (const auto& c : table.comments) out << "# " << c << '\n';
    std::vector<std::vector<std::string>> text;
    text.reserve(table.rows.size());
    std::vector<std::size_t> width(table.columns.size());
    for (std::size_t i = 0; i < table.columns.size(); ++i) width[i] = table.columns[i].size();
    for (const auto& row : table.rows) {
        auto& line = text.emplace_back();
        for (std::size_t i = 0; i < row.size(); ++i) {
            line.push_back(cell_text(row[i]));
            if (line.back().empty()) line.back() = "-";
            width[i] = std::max(width[i], line.back().size());
        }
    }
    auto emit = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) line += "  ";
            line += cells[i];
            if (i + 1 < cells.size()) line.append(width[i] - cells[i].size(), ' ');
        }
        out << line << '\n';
    };
    emit(table.columns);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    emit(rule);
    for (const auto& line : text) emit(line);
}

void write_table(const Table& table, Format format, std::ostream& out) {
    switch (format) {
        case Format::Csv: write_csv(table, out); break;
        case Format::Json: write_json(table, out); break;
        case Format::Pretty: write_pretty(table, out); break;
    }
}

}  // namespace relbound::cli
