#pragma once

#include <cstdint>
#include <vector>

#include "crackmd/simbox.hpp"
#include "crackmd/species.hpp"
#include "crackmd/vec3.hpp"

namespace crackmd {

enum class BoundaryGroup : std::uint8_t { interior = 0, top = 1, bottom = 2 };

// Structure-of-arrays particle state. All per-atom arrays are the same
// length; species values index into species_list.
struct AtomSystem {
    SimBox box;
    std::vector<Species> species_list;

    std::vector<Vec3> pos;   // Å
    std::vector<Vec3> vel;   // Å/ps
    std::vector<int> species;
    std::vector<std::uint8_t> mobile;
    std::vector<BoundaryGroup> group;

    std::size_t size() const { return pos.size(); }

    double mass_of(std::size_t i) const { return species_list[species[i]].mass; }

    int species_index(const std::string& symbol) const {
        for (std::size_t k = 0; k < species_list.size(); ++k)
            if (species_list[k].symbol == symbol) return static_cast<int>(k);
        return -1;
    }

    // Registers a species (idempotent by symbol) and returns its index.
    int add_species(const Species& s) {
        int idx = species_index(s.symbol);
        if (idx >= 0) return idx;
        s.validate();
        species_list.push_back(s);
        return static_cast<int>(species_list.size()) - 1;
    }

    void push_atom(const Vec3& p, int species_idx) {
        pos.push_back(p);
        vel.push_back({0, 0, 0});
        species.push_back(species_idx);
        mobile.push_back(1);
        group.push_back(BoundaryGroup::interior);
    }

    std::size_t count_mobile() const {
        std::size_t n = 0;
        for (auto m : mobile) n += m ? 1 : 0;
        return n;
    }
};

} // namespace crackmd
