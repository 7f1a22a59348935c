#include "relbound/constants.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "relbound/errors.hpp"

namespace relbound {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

std::string where(std::string_view source, std::size_t line_no) {
    std::ostringstream os;
    os << source << ":" << line_no;
    return os.str();
}

int parse_int(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw DomainError("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

Spin parse_spin(std::string_view text) {
    const auto slash = text.find('/');
    Spin spin;
    if (slash == std::string_view::npos) {
        spin.numerator = parse_int(text);
    } else {
        spin.numerator = parse_int(text.substr(0, slash));
        spin.denominator = parse_int(text.substr(slash + 1));
    }
    if (spin.denominator <= 0 || spin.numerator < 0) {
        throw DomainError("invalid spin '" + std::string(text) + "'");
    }
    return spin;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CatalogError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

void PhysicalConstants::validate() const {
    if (!(alpha > 0.0 && alpha < 0.01)) {
        throw DomainError("alpha must lie in (0, 0.01), got " + format_double_roundtrip(alpha));
    }
    if (!(hbar_c > 0.0)) {
        throw DomainError("hbar_c must be positive, got " + format_double_roundtrip(hbar_c));
    }
}

std::string Spin::str() const {
    if (denominator == 1) return std::to_string(numerator);
    return std::to_string(numerator) + "/" + std::to_string(denominator);
}

Catalog::Catalog(std::vector<ParticleSpec> entries) : entries_(std::move(entries)) {
    std::set<std::string> seen;
    for (const auto& p : entries_) {
        if (p.name.empty()) throw CatalogError("particle with empty name");
        if (!(p.rest_energy > 0.0) || !std::isfinite(p.rest_energy)) {
            throw CatalogError("particle '" + p.name + "' has non-positive rest energy");
        }
        if (!seen.insert(p.name).second) {
            throw CatalogError("duplicate particle name '" + p.name + "'");
        }
    }
}

double parse_double(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw DomainError("not a number: '" + std::string(text) + "'");
    }
    return value;
}

std::string format_double_roundtrip(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

Catalog parse_catalog(std::string_view text, std::string_view source) {
    std::vector<ParticleSpec> entries;
    std::set<std::string> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        const auto line = trim(strip_comment(raw));
        if (line.empty()) continue;
        const auto fields = split_ws(line);
        if (fields.size() != 4) {
            throw CatalogError(where(source, line_no) + ": expected 'name rest_energy_MeV charge spin'");
        }
        ParticleSpec p;
        p.name = std::string(fields[0]);
        try {
            p.rest_energy = parse_double(fields[1]);
            p.charge = parse_int(fields[2]);
            p.spin = parse_spin(fields[3]);
        } catch (const DomainError& e) {
            throw CatalogError(where(source, line_no) + ": " + e.what());
        }
        if (!(p.rest_energy > 0.0) || !std::isfinite(p.rest_energy)) {
            throw CatalogError(where(source, line_no) + ": non-positive rest energy for '" + p.name + "'");
        }
        if (!seen.insert(p.name).second) {
            throw CatalogError(where(source, line_no) + ": duplicate particle name '" + p.name + "'");
        }
        entries.push_back(std::move(p));
    }
    return Catalog(std::move(entries));
}

Catalog load_catalog(const std::filesystem::path& path) {
    return parse_catalog(read_file(path), path.string());
}

std::string format_catalog(const Catalog& catalog) {
    std::ostringstream os;
    os << "# name rest_energy_MeV charge spin\n";
    for (const auto& p : catalog.entries()) {
        os << p.name << ' ' << format_double_roundtrip(p.rest_energy) << ' ' << p.charge << ' '
           << p.spin.str() << '\n';
    }
    return os.str();
}

void write_catalog(const Catalog& catalog, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CatalogError("cannot write '" + path.string() + "'");
    out << format_catalog(catalog);
}

const ParticleSpec& lookup_particle(const Catalog& catalog, std::string_view name) {
    const auto& e = catalog.entries();
    const auto it = std::find_if(e.begin(), e.end(), [&](const ParticleSpec& p) { return p.name == name; });
    if (it == e.end()) throw CatalogError("particle '" + std::string(name) + "' not found in catalog");
    return *it;
}

PhysicalConstants parse_constants(std::string_view text, std::string_view source) {
    PhysicalConstants c;
    bool have_alpha = false, have_hbar_c = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        const auto line = trim(strip_comment(raw));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw CatalogError(where(source, line_no) + ": expected key=value");
        }
        const auto key = trim(line.substr(0, eq));
        double value = 0.0;
        try {
            value = parse_double(line.substr(eq + 1));
        } catch (const DomainError& e) {
            throw CatalogError(where(source, line_no) + ": " + e.what());
        }
        if (key == "alpha") {
            c.alpha = value;
            have_alpha = true;
        } else if (key == "hbar_c") {
            c.hbar_c = value;
            have_hbar_c = true;
        } else {
            throw CatalogError(where(source, line_no) + ": unknown key '" + std::string(key) + "'");
        }
    }
    if (!have_alpha || !have_hbar_c) {
        throw CatalogError(std::string(source) + ": both alpha and hbar_c are required");
    }
    try {
        c.validate();
    } catch (const DomainError& e) {
        throw CatalogError(std::string(source) + ": " + e.what());
    }
    return c;
}

PhysicalConstants load_constants(const std::filesystem::path& path) {
    return parse_constants(read_file(path), path.string());
}

std::string format_constants(const PhysicalConstants& constants) {
    return "alpha=" + format_double_roundtrip(constants.alpha) + "\nhbar_c=" +
           format_double_roundtrip(constants.hbar_c) + "\n";
}

std::filesystem::path default_data_dir() {
    if (const char* dir = std::getenv("RELBOUND_DATA_DIR")) return dir;
    return RELBOUND_DATA_DIR;
}

std::filesystem::path default_catalog_path() {
    if (const char* p = std::getenv("RELBOUND_CATALOG"); p && *p) return p;
    return default_data_dir() / "particles.txt";
}

std::filesystem::path default_constants_path() {
    if (const char* p = std::getenv("RELBOUND_CONSTANTS"); p && *p) return p;
    return default_data_dir() / "constants.txt";
}

}  // namespace relbound
