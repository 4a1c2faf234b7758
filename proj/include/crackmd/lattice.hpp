#pragma once

#include <array>
#include <cstdint>

#include "crackmd/atom_system.hpp"
#include "crackmd/region.hpp"

namespace crackmd {

// Hard cap on constructed systems; guards against typo extents.
inline constexpr std::size_t kMaxAtoms = 20'000'000;

// Perfect FCC crystal in cubic orientation (X=[100], Y=[010], Z=[001]),
// nx*ny*nz conventional cells of 4 atoms, box corner at the origin.
// All atoms mobile, velocities zero.
AtomSystem build_fcc(int nx, int ny, int nz, const Species& species,
                     std::array<Boundary, 3> boundary = {Boundary::open, Boundary::open,
                                                         Boundary::open});

// Removes every atom inside the region. Remaining atom order is stable.
// Carving away the whole system is a configuration error.
AtomSystem carve(const AtomSystem& system, const Region& region);

// Changes the species of every atom inside the region; positions keep the
// host lattice sites (coherent substitutional inclusion).
AtomSystem substitute(const AtomSystem& system, const Region& region, const Species& species);

// Tags atoms within layer_thickness of the box top/bottom faces (z axis)
// as top/bottom and freezes them; everything else is interior and mobile.
AtomSystem tag_boundaries(const AtomSystem& system, double layer_thickness);

} // namespace crackmd
