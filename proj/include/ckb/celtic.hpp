#ifndef CKB_CELTIC_HPP
#define CKB_CELTIC_HPP

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "ckb/shadow.hpp"

namespace ckb {

struct NoSuchCrossing : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Horizontal pair: the two strand ends on each side of a horizontal
/// barrier join (NE-NW above, SE-SW below). Vertical pair: NE-SE and NW-SW.
enum class Smoothing { horizontal, vertical };

struct GridAddress {
    int row;
    int col;
    friend auto operator<=>(const GridAddress&, const GridAddress&) = default;
};

/// A Celtic-grid shadow: the PD code plus the (row, col) address of every
/// remaining crossing, so grid crossings can be smoothed by name.
///
/// The plaitwork lives on a 4 x 2n rectangle; crossings sit at the interior
/// lattice points of odd coordinate sum (3n-2 of them), and every crossing
/// 4-tuple is stored in ccw order (NE, NW, SW, SE) so that smoothing bit 0
/// means the horizontal pair.
struct CelticDiagram {
    ShadowDiagram shadow;
    int half_width = 0;                  // n: the grid spans 2n columns
    std::vector<GridAddress> addresses;  // addresses[c] = grid address of crossing c

    int crossing_index(int row, int col) const;  // throws NoSuchCrossing
};

/// Builds the barrier-free plaitwork shadow on the 4 x 2n grid.
CelticDiagram build_celtic(int n);

/// Replaces the crossing at (row, col) by the chosen pair of arcs.
CelticDiagram smooth_at(const CelticDiagram& d, int row, int col, Smoothing kind);

/// The four crossing permutations induced by the rectangle symmetries
/// {identity, col-mirror, row-mirror, 180-degree rotation}, as maps
/// perm[c] = image crossing index.
std::array<std::vector<int>, 4> grid_symmetry_permutations(const CelticDiagram& d);

/// Number of barrier configurations yielding exactly k circles, for every k.
/// Identical to the coefficient list of the bracket polynomial.
std::map<int, std::uint64_t> barrier_component_distribution(int n);

/// Sizes of the D2 orbits of the k-circle barrier configurations, sorted.
std::vector<int> symmetry_orbits(int n, int k);

}  // namespace ckb

#endif
