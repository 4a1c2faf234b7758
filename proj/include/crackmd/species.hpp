#pragma once

#include <string>

#include "crackmd/error.hpp"

namespace crackmd {

// Chemical species with the constants needed for lattice construction and
// dynamics. Masses in g/mol, lattice constant in Å (FCC conventional cell).
struct Species {
    std::string symbol;
    double mass = 0.0;
    double lattice_a = 0.0;
    int atomic_number = 0;

    void validate() const {
        if (symbol.empty()) throw ConfigError("species: empty symbol");
        if (!(mass > 0.0)) throw ConfigError("species " + symbol + ": mass must be > 0");
        if (!(lattice_a > 0.0))
            throw ConfigError("species " + symbol + ": lattice constant must be > 0");
    }
};

// The three FCC metals of this study. Cu/Al lattice constants 3.61/4.05 Å.
Species builtin_species(const std::string& symbol);

} // namespace crackmd
