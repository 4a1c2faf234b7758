#include "crackmd/neighbor_list.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "crackmd/error.hpp"

namespace crackmd {

namespace {

struct CellGrid {
    // Binning frame: box bounds on periodic axes, position bounding box on
    // open axes (atoms may drift outside the nominal box).
    Vec3 origin;
    std::array<int, 3> ncell{1, 1, 1};
    std::array<double, 3> cell_size{0, 0, 0};
    std::array<bool, 3> periodic{false, false, false};
    std::array<double, 3> box_len{0, 0, 0};

    std::vector<std::uint32_t> cell_start; // prefix offsets, size ncells+1
    std::vector<std::uint32_t> order;      // atom ids grouped by cell, index-sorted

    int total() const { return ncell[0] * ncell[1] * ncell[2]; }

    int coord(const Vec3& p, int ax) const {
        double x = p[ax] - origin[ax];
        if (periodic[ax]) {
            x -= box_len[ax] * std::floor(x / box_len[ax]);
        }
        int c = static_cast<int>(x / cell_size[ax]);
        if (c < 0) c = 0;
        if (c >= ncell[ax]) c = ncell[ax] - 1;
        return c;
    }

    int linear(int cx, int cy, int cz) const {
        return (cz * ncell[1] + cy) * ncell[0] + cx;
    }
};

CellGrid make_grid(const AtomSystem& sys, double rlist) {
    CellGrid g;
    Vec3 lo = sys.box.lo, hi = sys.box.hi;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const Vec3& p = sys.pos[i];
        for (int ax = 0; ax < 3; ++ax) {
            if (p[ax] < lo[ax]) lo[ax] = p[ax];
            if (p[ax] > hi[ax]) hi[ax] = p[ax];
        }
    }
    for (int ax = 0; ax < 3; ++ax) {
        g.periodic[ax] = sys.box.periodic(ax);
        g.box_len[ax] = sys.box.length(ax);
        if (g.periodic[ax]) {
            if (g.box_len[ax] < rlist)
                throw ConfigError("neighbor list: periodic box thinner than cutoff+skin");
            g.origin[ax] = sys.box.lo[ax];
            g.ncell[ax] = std::max(1, static_cast<int>(g.box_len[ax] / rlist));
            g.cell_size[ax] = g.box_len[ax] / g.ncell[ax];
        } else {
            const double pad = 1e-9 + 1e-12 * std::abs(hi[ax] - lo[ax]);
            g.origin[ax] = lo[ax] - pad;
            const double extent = (hi[ax] - lo[ax]) + 2 * pad;
            g.ncell[ax] = std::max(1, static_cast<int>(extent / rlist));
            g.cell_size[ax] = extent / g.ncell[ax];
        }
    }

    // Stable counting sort by cell keeps per-cell atom order by index.
    const std::size_t n = sys.size();
    std::vector<std::uint32_t> cell_of(n);
    std::vector<std::uint32_t> counts(g.total() + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const int c = g.linear(g.coord(sys.pos[i], 0), g.coord(sys.pos[i], 1),
                               g.coord(sys.pos[i], 2));
        cell_of[i] = static_cast<std::uint32_t>(c);
        ++counts[c + 1];
    }
    for (std::size_t c = 1; c < counts.size(); ++c) counts[c] += counts[c - 1];
    g.cell_start = counts;
    g.order.resize(n);
    std::vector<std::uint32_t> cursor(g.cell_start.begin(), g.cell_start.end() - 1);
    for (std::size_t i = 0; i < n; ++i) g.order[cursor[cell_of[i]]++] = static_cast<std::uint32_t>(i);
    return g;
}

// Collects neighbors j > i of atom i into row (unsorted).
void scan_atom(const AtomSystem& sys, const CellGrid& g, double rlist_sq, std::uint32_t i,
               std::vector<std::uint32_t>& row) {
    row.clear();
    const Vec3 pi = sys.pos[i];
    const int cx = g.coord(pi, 0), cy = g.coord(pi, 1), cz = g.coord(pi, 2);

    // Unique neighbor cells; duplicates arise when a periodic axis has
    // fewer than 3 cells.
    std::array<int, 27> cells{};
    int ncells = 0;
    for (int dz = -1; dz <= 1; ++dz)
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                int c[3] = {cx + dx, cy + dy, cz + dz};
                bool ok = true;
                for (int ax = 0; ax < 3; ++ax) {
                    if (g.periodic[ax]) {
                        c[ax] = (c[ax] + g.ncell[ax]) % g.ncell[ax];
                    } else if (c[ax] < 0 || c[ax] >= g.ncell[ax]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                const int lin = g.linear(c[0], c[1], c[2]);
                bool seen = false;
                for (int k = 0; k < ncells; ++k)
                    if (cells[k] == lin) { seen = true; break; }
                if (!seen) cells[ncells++] = lin;
            }

    for (int k = 0; k < ncells; ++k) {
        const std::uint32_t begin = g.cell_start[cells[k]];
        const std::uint32_t end = g.cell_start[cells[k] + 1];
        for (std::uint32_t s = begin; s < end; ++s) {
            const std::uint32_t j = g.order[s];
            if (j <= i) continue;
            const Vec3 d = displacement(pi, sys.pos[j], sys.box);
            if (norm_sq(d) <= rlist_sq) row.push_back(j);
        }
    }
    std::sort(row.begin(), row.end());
}

} // namespace

NeighborList build_neighbors(const AtomSystem& system, double cutoff, double skin, int threads) {
    if (!(cutoff > 0.0)) throw ConfigError("neighbor list: cutoff must be > 0");
    if (skin < 0.0) throw ConfigError("neighbor list: skin must be >= 0");

    const double rlist = cutoff + skin;
    const double rlist_sq = rlist * rlist;
    const CellGrid grid = make_grid(system, rlist);
    const std::size_t n = system.size();

    NeighborList list;
    list.cutoff = cutoff;
    list.skin = skin;
    list.build_pos = system.pos;
    list.offsets.assign(n + 1, 0);

    if (threads <= 1) {
        std::vector<std::uint32_t> row;
        std::vector<std::uint32_t> flat;
        flat.reserve(n * 32);
        for (std::uint32_t i = 0; i < n; ++i) {
            scan_atom(system, grid, rlist_sq, i, row);
            flat.insert(flat.end(), row.begin(), row.end());
            list.offsets[i + 1] = static_cast<std::uint32_t>(flat.size());
        }
        list.neighbors = std::move(flat);
        return list;
    }

    // Parallel: count pass then fill pass; rows are identical to the serial
    // path because each row depends only on its own atom.
    std::vector<std::uint32_t> counts(n, 0);
#pragma omp parallel num_threads(threads)
    {
        std::vector<std::uint32_t> row;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
            scan_atom(system, grid, rlist_sq, static_cast<std::uint32_t>(i), row);
            counts[i] = static_cast<std::uint32_t>(row.size());
        }
    }
    for (std::size_t i = 0; i < n; ++i) list.offsets[i + 1] = list.offsets[i] + counts[i];
    list.neighbors.resize(list.offsets[n]);
#pragma omp parallel num_threads(threads)
    {
        std::vector<std::uint32_t> row;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
            scan_atom(system, grid, rlist_sq, static_cast<std::uint32_t>(i), row);
            std::copy(row.begin(), row.end(), list.neighbors.begin() + list.offsets[i]);
        }
    }
    return list;
}

bool needs_rebuild(const NeighborList& list, const AtomSystem& system) {
    if (list.build_pos.size() != system.size())
        throw std::logic_error("needs_rebuild: list built from a different-size system");
    const double limit_sq = 0.25 * list.skin * list.skin;
    for (std::size_t i = 0; i < system.size(); ++i) {
        if (norm_sq(system.pos[i] - list.build_pos[i]) >= limit_sq) return true;
    }
    return false;
}

} // namespace crackmd
