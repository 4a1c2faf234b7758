#include "crackmd/lattice.hpp"

namespace crackmd {

AtomSystem build_fcc(int nx, int ny, int nz, const Species& species,
                     std::array<Boundary, 3> boundary) {
    if (nx < 1 || ny < 1 || nz < 1)
        throw ConfigError("build_fcc: cell counts must be >= 1");
    species.validate();

    const std::size_t natoms = 4ull * nx * ny * nz;
    if (natoms > kMaxAtoms)
        throw ConfigError("build_fcc: extent exceeds the atom-count budget (" +
                          std::to_string(natoms) + " > " + std::to_string(kMaxAtoms) + ")");

    const double a = species.lattice_a;
    AtomSystem sys;
    sys.box = SimBox({0, 0, 0}, {nx * a, ny * a, nz * a}, boundary);
    const int sp = sys.add_species(species);

    static constexpr double basis[4][3] = {
        {0.0, 0.0, 0.0}, {0.5, 0.5, 0.0}, {0.5, 0.0, 0.5}, {0.0, 0.5, 0.5}};

    sys.pos.reserve(natoms);
    sys.vel.reserve(natoms);
    sys.species.reserve(natoms);
    sys.mobile.reserve(natoms);
    sys.group.reserve(natoms);
    for (int ix = 0; ix < nx; ++ix)
        for (int iy = 0; iy < ny; ++iy)
            for (int iz = 0; iz < nz; ++iz)
                for (const auto& b : basis)
                    sys.push_atom({(ix + b[0]) * a, (iy + b[1]) * a, (iz + b[2]) * a}, sp);
    return sys;
}

AtomSystem carve(const AtomSystem& system, const Region& region) {
    AtomSystem out;
    out.box = system.box;
    out.species_list = system.species_list;
    const std::size_t n = system.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (region.contains(system.pos[i])) continue;
        out.pos.push_back(system.pos[i]);
        out.vel.push_back(system.vel[i]);
        out.species.push_back(system.species[i]);
        out.mobile.push_back(system.mobile[i]);
        out.group.push_back(system.group[i]);
    }
    if (out.size() == 0)
        throw ConfigError("carve: region removes every atom");
    return out;
}

AtomSystem substitute(const AtomSystem& system, const Region& region, const Species& species) {
    AtomSystem out = system;
    const int sp = out.add_species(species);
    for (std::size_t i = 0; i < out.size(); ++i)
        if (region.contains(out.pos[i])) out.species[i] = sp;
    return out;
}

AtomSystem tag_boundaries(const AtomSystem& system, double layer_thickness) {
    const double zlen = system.box.length(2);
    if (!(layer_thickness > 0.0) || !(layer_thickness < 0.5 * zlen))
        throw ConfigError("tag_boundaries: layer thickness must lie in (0, z-extent/2)");

    AtomSystem out = system;
    const double z_top = system.box.hi.z - layer_thickness;
    const double z_bot = system.box.lo.z + layer_thickness;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double z = out.pos[i].z;
        if (z >= z_top) {
            out.group[i] = BoundaryGroup::top;
            out.mobile[i] = 0;
        } else if (z <= z_bot) {
            out.group[i] = BoundaryGroup::bottom;
            out.mobile[i] = 0;
        } else {
            out.group[i] = BoundaryGroup::interior;
            out.mobile[i] = 1;
        }
    }
    return out;
}

} // namespace crackmd
