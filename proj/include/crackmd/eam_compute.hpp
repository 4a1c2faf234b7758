#pragma once

#include <optional>
#include <vector>

#include "crackmd/atom_system.hpp"
#include "crackmd/eam_table.hpp"
#include "crackmd/neighbor_list.hpp"

namespace crackmd {

// Symmetric tensor, components ordered xx yy zz xy xz yz.
struct SymTensor6 {
    double xx = 0, yy = 0, zz = 0, xy = 0, xz = 0, yz = 0;
    SymTensor6& operator+=(const SymTensor6& o) {
        xx += o.xx; yy += o.yy; zz += o.zz;
        xy += o.xy; xz += o.xz; yz += o.yz;
        return *this;
    }
};

struct EnergyForceVirial {
    double energy = 0.0;                 // total potential energy, eV
    std::vector<double> atom_energy;     // eV
    std::vector<Vec3> force;             // eV/Å
    std::vector<SymTensor6> virial;      // pair-term stress*volume per atom, eV
    std::vector<double> rho;             // background electron density per atom

    void resize(std::size_t n) {
        atom_energy.assign(n, 0.0);
        force.assign(n, {0, 0, 0});
        virial.assign(n, {});
        rho.assign(n, 0.0);
    }
};

// Maps system species indices onto table element indices; unknown species
// is a configuration error.
std::vector<int> map_species(const AtomSystem& system, const EamTable& table);

// Tabulated-EAM energy, forces and per-atom pair virials over a half
// neighbor list. Skips energy/per-atom bookkeeping when want_energy_virial
// is false (forces are identical either way). The serial path iterates
// pairs in canonical row order and is the reference result; the parallel
// path reduces per-thread buffers in thread order and must match the serial
// total energy to 1e-10 relative.
void compute_serial(const AtomSystem& system, const EamSplines& splines,
                    const std::vector<int>& type_map, const NeighborList& list,
                    EnergyForceVirial& out, bool want_energy_virial = true);

void compute_parallel(const AtomSystem& system, const EamSplines& splines,
                      const std::vector<int>& type_map, const NeighborList& list,
                      EnergyForceVirial& out, int threads, bool want_energy_virial = true);

inline void compute(const AtomSystem& system, const EamSplines& splines,
                    const std::vector<int>& type_map, const NeighborList& list,
                    EnergyForceVirial& out, int threads = 1, bool want_energy_virial = true) {
    if (threads <= 1)
        compute_serial(system, splines, type_map, list, out, want_energy_virial);
    else
        compute_parallel(system, splines, type_map, list, out, threads, want_energy_virial);
}

// Convenience overload that builds the spline set and type map internally;
// fine for tests, too slow for inner loops.
EnergyForceVirial compute(const AtomSystem& system, const EamTable& table,
                          const NeighborList& list, int threads = 1);

// Owns the spline set plus a skin-tracked neighbor list and recomputes
// forces on demand; the force provider used by dynamics and minimization.
class EamCalculator {
public:
    EamCalculator(const AtomSystem& system, const EamTable& table, double skin, int threads);

    // Recomputes for the current positions (rebuilding the neighbor list if
    // any atom moved >= skin/2) and returns the result.
    const EnergyForceVirial& evaluate(const AtomSystem& system, bool want_energy_virial = true);

    const EnergyForceVirial& last() const { return out_; }
    const NeighborList& list() const { return list_; }
    double cutoff() const { return splines_.cutoff; }
    long rebuild_count() const { return rebuilds_; }
    int threads() const { return threads_; }

private:
    EamSplines splines_;
    std::vector<int> type_map_;
    double skin_;
    int threads_;
    NeighborList list_;
    EnergyForceVirial out_;
    long rebuilds_ = 0;
};

struct CohesiveScanResult {
    double a_min = 0.0;      // Å
    double e_min = 0.0;      // eV/atom
    bool interior = true;    // false: minimum sits on a range edge
};

// Energy per atom of a perfect periodic FCC cell scanned over lattice
// constants in [a_lo, a_hi] with `steps` samples, parabolically refined
// around the best sample. Non-interior minima are flagged, not fatal.
CohesiveScanResult cohesive_scan(const EamTable& table, const Species& species, double a_lo,
                                 double a_hi, int steps);

// Energy per atom of one periodic FCC cell at lattice constant a.
double fcc_energy_per_atom(const EamTable& table, const Species& species, double a);

} // namespace crackmd
