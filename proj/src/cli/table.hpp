#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace relbound::cli {

enum class Format { Csv, Json, Pretty };

Format parse_format(const std::string& text);

// Empty cell (monostate) prints as "" in csv, null in json.
using Cell = std::variant<std::monostate, std::string, double, std::int64_t, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> comments;  // "# ..." lines ahead of csv/pretty output

    void add_row(std::vector<Cell> row);
};

// 12 significant digits, shortest form, always with a decimal point or exponent.
std::string format_number(double value);

// Binding-style energy given in MeV, rendered with the eV/keV/MeV unit that keeps the
// mantissa in [1, 1000).
std::string format_energy_unit(double mev);

void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);
void write_pretty(const Table& table, std::ostream& out);
void write_table(const Table& table, Format format, std::ostream& out);

}  // namespace relbound::cli
