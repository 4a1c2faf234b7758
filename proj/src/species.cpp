#include "crackmd/species.hpp"

namespace crackmd {

Species builtin_species(const std::string& symbol) {
    if (symbol == "Ni") return {"Ni", 58.6934, 3.52, 28};
    if (symbol == "Cu") return {"Cu", 63.546, 3.61, 29};
    if (symbol == "Al") return {"Al", 26.9815385, 4.05, 13};
    throw ConfigError("unknown species '" + symbol + "' (built-in: Ni, Cu, Al)");
}

} // namespace crackmd
