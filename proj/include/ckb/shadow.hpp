#ifndef CKB_SHADOW_HPP
#define CKB_SHADOW_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ckb/polynomial.hpp"

namespace ckb {

struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooManyCrossings : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyDiagram : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    ParseError(int line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
    int line;
};

/// Planar-diagram code of a knot/link shadow.
///
/// Edge-end labels are nonnegative integers; each label must occur exactly
/// twice across crossings and pairings together (each end is glued once).
/// A crossing lists its four edge-ends in counterclockwise geometric order;
/// rotating a 4-tuple by two positions therefore describes the same
/// crossing, while rotating by one swaps the meaning of its smoothings.
struct ShadowDiagram {
    std::vector<std::array<int, 4>> crossings;
    std::vector<std::pair<int, int>> pairings;
    int free_loops = 0;

    int num_crossings() const { return static_cast<int>(crossings.size()); }
};

/// One Kauffman state: bit c = 0 smooths crossing c by joining tuple
/// positions {0,1} and {2,3}, bit c = 1 joins {1,2} and {3,0}.
struct SmoothingChoice {
    std::uint32_t bits = 0;
    int count = 0;
};

/// Checks the every-label-glued-exactly-twice invariant.
void validate(const ShadowDiagram& d);

/// Circles after resolving every crossing per the choice, free loops included.
int count_circles(const ShadowDiagram& d, const SmoothingChoice& s);

/// histogram[k] = number of smoothing states with exactly k circles,
/// enumerated over all 2^c states. Deterministic regardless of the internal
/// thread fan-out. Requires at most 30 crossings.
std::vector<std::uint64_t> state_histogram(const ShadowDiagram& d);

/// Circle count of every state, indexed by smoothing bitmask. Requires at
/// most 24 crossings (dense table).
std::vector<std::uint8_t> all_state_circle_counts(const ShadowDiagram& d);

/// The bracket polynomial: sum of x^{circles} over all smoothing states.
IntPoly bracket_statesum(const ShadowDiagram& d);

/// A single crossing-free circle.
ShadowDiagram make_unknot();

/// Shadow of the (2,n)-torus link: n crossings in a cycle.
ShadowDiagram make_foil(int n);

/// Cut one strand of each diagram and splice the loose ends together.
ShadowDiagram connected_sum(const ShadowDiagram& a, const ShadowDiagram& b);

/// Text format, one item per line: "L" (free loop), "X a b c d" (crossing,
/// counterclockwise edge-end labels), "P a b" (arc pairing). Blank lines and
/// lines starting with '#' are skipped.
ShadowDiagram read_pd(std::istream& in);
void write_pd(std::ostream& out, const ShadowDiagram& d);

}  // namespace ckb

#endif
