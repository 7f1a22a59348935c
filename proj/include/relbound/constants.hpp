#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace relbound {

/// Coupling and conversion constants. Masses everywhere are rest energies in MeV.
struct PhysicalConstants {
    double alpha = 0.0;   ///< fine-structure constant
    double hbar_c = 0.0;  ///< MeV·fm

    /// Throws DomainError unless 0 < alpha < 0.01 and hbar_c > 0.
    void validate() const;
};

/// Spin is informational only; stored as a rational so "1/2" round-trips exactly.
struct Spin {
    int numerator = 0;
    int denominator = 1;

    double value() const { return static_cast<double>(numerator) / denominator; }
    std::string str() const;
    friend bool operator==(const Spin&, const Spin&) = default;
};

struct ParticleSpec {
    std::string name;
    double rest_energy = 0.0;  ///< MeV
    int charge = 0;            ///< units of e
    Spin spin;

    friend bool operator==(const ParticleSpec&, const ParticleSpec&) = default;
};

/// Immutable list of particle species with unique names.
class Catalog {
  public:
    Catalog() = default;
    /// Throws CatalogError on duplicate names or non-positive rest energy.
    explicit Catalog(std::vector<ParticleSpec> entries);

    const std::vector<ParticleSpec>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

  private:
    std::vector<ParticleSpec> entries_;
};

// Catalog text format, one record per line:
//   name rest_energy_MeV charge spin
// '#' starts a comment; blank lines are ignored.
Catalog parse_catalog(std::string_view text, std::string_view source = "<string>");
Catalog load_catalog(const std::filesystem::path& path);
std::string format_catalog(const Catalog& catalog);
void write_catalog(const Catalog& catalog, const std::filesystem::path& path);

/// Exact-name match; throws CatalogError when absent.
const ParticleSpec& lookup_particle(const Catalog& catalog, std::string_view name);

// Constants text format: `alpha=<float>` and `hbar_c=<float>` lines, '#' comments.
PhysicalConstants parse_constants(std::string_view text, std::string_view source = "<string>");
PhysicalConstants load_constants(const std::filesystem::path& path);
std::string format_constants(const PhysicalConstants& constants);

/// Directory holding the shipped particles.txt and constants.txt.
std::filesystem::path default_data_dir();
/// $RELBOUND_CATALOG if set, else default_data_dir()/particles.txt.
std::filesystem::path default_catalog_path();
/// $RELBOUND_CONSTANTS if set, else default_data_dir()/constants.txt.
std::filesystem::path default_constants_path();

/// Locale-independent parse of a full string as a double; throws DomainError.
double parse_double(std::string_view text);
/// Shortest representation that parses back to the identical double.
std::string format_double_roundtrip(double value);

}  // namespace relbound
