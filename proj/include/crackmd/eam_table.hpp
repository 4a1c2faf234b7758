#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "crackmd/spline.hpp"

namespace crackmd {

struct EamElement {
    std::string symbol;
    int atomic_number = 0;
    double mass = 0.0;       // g/mol
    double lattice_a = 0.0;  // Å
    std::string lattice_type = "fcc";
    std::vector<double> embed;   // F(rho), nrho values, eV
    std::vector<double> density; // rho(r), nr values
};

// Tabulated multi-element alloy EAM in the standard setfl ("eam.alloy")
// layout. Pair tables store r*phi(r) in eV·Å, one block per unordered
// element pair, in file order (i, j<=i).
struct EamTable {
    std::vector<std::string> comments; // 3 header lines
    int nrho = 0;
    double drho = 0.0;
    int nr = 0;
    double dr = 0.0;
    double cutoff = 0.0; // Å
    std::vector<EamElement> elements;
    std::vector<std::vector<double>> rphi; // nelem*(nelem+1)/2 blocks of nr

    int element_index(const std::string& symbol) const;
    static std::size_t pair_slot(int i, int j) {
        if (j > i) std::swap(i, j);
        return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
    }
    const std::vector<double>& pair_table(int i, int j) const { return rphi[pair_slot(i, j)]; }

    void validate() const;
};

// Parses the setfl layout: 3 comment lines; "Nelements symbols..."; "nrho
// drho nr dr cutoff"; per element a header line (Z, mass, lattice constant,
// lattice type) then nrho F values and nr rho values; then nr r*phi values
// for each pair (i, j<=i). Numeric tokens may span lines freely. Errors
// carry 1-based line numbers and section context.
EamTable parse_setfl(const std::string& text);
EamTable parse_setfl_file(const std::string& path);

void write_setfl(const EamTable& table, std::ostream& out);
void write_setfl_file(const EamTable& table, const std::string& path);

// Cubic-spline interpolants over one table, built once and shared
// read-only by all evaluation threads.
struct EamSplines {
    double cutoff = 0.0;
    double cutoff_sq = 0.0;
    double dr = 0.0;
    std::vector<Spline1D> embed;    // per element, argument rho
    std::vector<Spline1D> density;  // per element, argument r
    std::vector<Spline1D> rphi;     // per pair slot, argument r
    std::vector<int> slot_of;       // nelem x nelem pair-slot lookup
    int nelem = 0;

    int slot(int ti, int tj) const { return slot_of[ti * nelem + tj]; }
};

EamSplines build_splines(const EamTable& table);

} // namespace crackmd
