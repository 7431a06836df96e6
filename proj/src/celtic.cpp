#include "ckb/celtic.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ckb {

namespace {

constexpr int kHeight = 4;

// End slots in ccw order around a crossing, matching the stored 4-tuple.
enum Corner { kNE = 0, kNW = 1, kSW = 2, kSE = 3 };

constexpr int kDx[4] = {+1, -1, -1, +1};
constexpr int kDy[4] = {+1, +1, -1, -1};

int corner_from_direction(int dx, int dy) {
    for (int c = 0; c < 4; ++c)
        if (kDx[c] == dx && kDy[c] == dy) return c;
    return -1;
}

void check_half_width(int n) {
    if (n < 1) throw std::invalid_argument("celtic grid: n must be >= 1");
}

}  // namespace

int CelticDiagram::crossing_index(int row, int col) const {
    for (std::size_t c = 0; c < addresses.size(); ++c)
        if (addresses[c].row == row && addresses[c].col == col) return static_cast<int>(c);
    throw NoSuchCrossing("no crossing at row " + std::to_string(row) + ", column " +
                         std::to_string(col));
}

CelticDiagram build_celtic(int n) {
    check_half_width(n);
    const int width = 2 * n;

    CelticDiagram out;
    out.half_width = n;
    std::map<std::pair<int, int>, int> at;  // (col, row) -> crossing index
    for (int row = 1; row < kHeight; ++row)
        for (int col = 1; col < width; ++col)
            if ((row + col) % 2 == 1) {
                at[{col, row}] = static_cast<int>(out.addresses.size());
                out.addresses.push_back({row, col});
            }

    // Crossing c owns edge-end labels 4c + corner.
    for (std::size_t c = 0; c < out.addresses.size(); ++c) {
        int base = 4 * static_cast<int>(c);
        out.shadow.crossings.push_back({base + kNE, base + kNW, base + kSW, base + kSE});
    }

    // Trace each strand diagonally between crossings, reflecting off the
    // frame. Interior lattice points of odd coordinate sum are exactly the
    // crossings, so the walk below always terminates at one; the rectangle
    // corners have even sum and are never visited, so reflections are
    // always off a single wall.
    std::vector<bool> glued(4 * out.addresses.size(), false);
    for (std::size_t c = 0; c < out.addresses.size(); ++c) {
        for (int corner = 0; corner < 4; ++corner) {
            int start = 4 * static_cast<int>(c) + corner;
            if (glued[start]) continue;
            int x = out.addresses[c].col;
            int y = out.addresses[c].row;
            int dx = kDx[corner];
            int dy = kDy[corner];
            while (true) {
                x += dx;
                y += dy;
                auto hit = at.find({x, y});
                if (hit != at.end()) {
                    int arrival = hit->second * 4 + corner_from_direction(-dx, -dy);
                    out.shadow.pairings.emplace_back(start, arrival);
                    glued[start] = glued[arrival] = true;
                    break;
                }
                if (x == 0 || x == width) dx = -dx;
                if (y == 0 || y == kHeight) dy = -dy;
            }
        }
    }
    return out;
}

CelticDiagram smooth_at(const CelticDiagram& d, int row, int col, Smoothing kind) {
    int c = d.crossing_index(row, col);
    CelticDiagram out = d;
    std::array<int, 4> ends = out.shadow.crossings[static_cast<std::size_t>(c)];
    out.shadow.crossings.erase(out.shadow.crossings.begin() + c);
    out.addresses.erase(out.addresses.begin() + c);
    if (kind == Smoothing::horizontal) {
        out.shadow.pairings.emplace_back(ends[kNE], ends[kNW]);
        out.shadow.pairings.emplace_back(ends[kSW], ends[kSE]);
    } else {
        out.shadow.pairings.emplace_back(ends[kNW], ends[kSW]);
        out.shadow.pairings.emplace_back(ends[kSE], ends[kNE]);
    }
    return out;
}

std::array<std::vector<int>, 4> grid_symmetry_permutations(const CelticDiagram& d) {
    const int width = 2 * d.half_width;
    auto index_of = [&](int row, int col) { return d.crossing_index(row, col); };

    std::array<std::vector<int>, 4> perms;
    for (auto& p : perms) p.resize(d.addresses.size());
    for (std::size_t c = 0; c < d.addresses.size(); ++c) {
        auto [row, col] = d.addresses[c];
        perms[0][c] = static_cast<int>(c);
        perms[1][c] = index_of(row, width - col);
        perms[2][c] = index_of(kHeight - row, col);
        perms[3][c] = index_of(kHeight - row, width - col);
    }
    return perms;
}

namespace {

void check_enumeration_guard(int n) {
    check_half_width(n);
    if (n > 8)
        throw TooLarge("barrier enumeration at n = " + std::to_string(n) +
                       " exceeds the n <= 8 guard (2^(3n-2) states)");
}

}  // namespace

std::map<int, std::uint64_t> barrier_component_distribution(int n) {
    check_enumeration_guard(n);
    std::vector<std::uint64_t> hist = state_histogram(build_celtic(n).shadow);
    std::map<int, std::uint64_t> out;
    for (std::size_t k = 0; k < hist.size(); ++k)
        if (hist[k] != 0) out[static_cast<int>(k)] = hist[k];
    return out;
}

std::vector<int> symmetry_orbits(int n, int k) {
    check_enumeration_guard(n);
    CelticDiagram d = build_celtic(n);
    const int c = d.shadow.num_crossings();
    std::vector<std::uint8_t> circles = all_state_circle_counts(d.shadow);
    std::array<std::vector<int>, 4> perms = grid_symmetry_permutations(d);

    auto apply = [&](const std::vector<int>& perm, std::uint32_t bits) {
        std::uint32_t out = 0;
        for (int i = 0; i < c; ++i)
            if (bits >> i & 1u) out |= 1u << perm[static_cast<std::size_t>(i)];
        return out;
    };

    std::vector<int> sizes;
    std::vector<bool> seen(circles.size(), false);
    for (std::uint32_t bits = 0; bits < circles.size(); ++bits) {
        if (seen[bits] || circles[bits] != k) continue;
        std::set<std::uint32_t> orbit;
        for (const auto& perm : perms) orbit.insert(apply(perm, bits));
        for (std::uint32_t image : orbit) seen[image] = true;
        sizes.push_back(static_cast<int>(orbit.size()));
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace ckb
