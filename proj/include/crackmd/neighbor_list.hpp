#pragma once

#include <cstdint>
#include <vector>

#include "crackmd/atom_system.hpp"

namespace crackmd {

// Cell-binned half neighbor list. Each pair with r <= cutoff+skin at build
// time appears exactly once, stored under the lower atom index; rows are
// sorted ascending so pair iteration order is canonical regardless of how
// the list was built. That keeps force accumulation bit-identical between
// a fresh list and a still-valid stale list (pairs beyond the cutoff
// contribute nothing).
struct NeighborList {
    double cutoff = 0.0;
    double skin = 0.0;
    std::vector<std::uint32_t> offsets;    // size N+1
    std::vector<std::uint32_t> neighbors;  // flat rows, each sorted, j > i
    std::vector<Vec3> build_pos;           // positions snapshot at build time

    std::size_t size() const { return offsets.empty() ? 0 : offsets.size() - 1; }
    std::size_t pair_count() const { return neighbors.size(); }
};

// threads <= 1 runs the serial reference path; both paths produce the same
// rows. Periodic axes require box length >= cutoff+skin.
NeighborList build_neighbors(const AtomSystem& system, double cutoff, double skin,
                             int threads = 1);

// True iff any atom moved >= skin/2 since the list was built.
bool needs_rebuild(const NeighborList& list, const AtomSystem& system);

} // namespace crackmd
