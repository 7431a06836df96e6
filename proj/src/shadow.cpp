#include "ckb/shadow.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

namespace ckb {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

/// Shared setup for state enumeration: dense label indexing plus the
/// pairing arcs pre-merged, so each state only has to resolve crossings.
struct StateEngine {
    explicit StateEngine(const ShadowDiagram& d) : free_loops(d.free_loops) {
        std::map<int, int> index;
        auto touch = [&](int label) {
            auto [it, inserted] = index.try_emplace(label, 0);
            it->second += 1;
        };
        for (const auto& c : d.crossings)
            for (int e : c) touch(e);
        for (const auto& [p, q] : d.pairings) {
            touch(p);
            touch(q);
        }
        int next = 0;
        for (auto& [label, count] : index) {
            if (label < 0)
                throw std::invalid_argument("edge-end label " + std::to_string(label) +
                                            " is negative");
            if (count != 2)
                throw std::invalid_argument("edge-end label " + std::to_string(label) +
                                            " occurs " + std::to_string(count) +
                                            " times, expected 2");
            count = next++;  // reuse the map as label -> dense index
        }
        num_labels = next;

        base_parent.resize(num_labels);
        for (int i = 0; i < num_labels; ++i) base_parent[i] = i;
        int merges = 0;
        for (const auto& [p, q] : d.pairings) {
            int rp = find_root(base_parent, index.at(p));
            int rq = find_root(base_parent, index.at(q));
            if (rp != rq) {
                base_parent[rp] = rq;
                ++merges;
            }
        }
        for (int i = 0; i < num_labels; ++i) base_parent[i] = find_root(base_parent, i);
        base_components = num_labels - merges;

        crossing_ends.reserve(d.crossings.size());
        for (const auto& c : d.crossings)
            crossing_ends.push_back({index.at(c[0]), index.at(c[1]), index.at(c[2]), index.at(c[3])});
    }

    /// Circle count of a single state, using (and clobbering) scratch.
    int circles(std::uint32_t bits, std::vector<int>& scratch) const {
        scratch = base_parent;
        int merges = 0;
        auto unite = [&](int a, int b) {
            int ra = find_root(scratch, a);
            int rb = find_root(scratch, b);
            if (ra != rb) {
                scratch[ra] = rb;
                ++merges;
            }
        };
        for (std::size_t c = 0; c < crossing_ends.size(); ++c) {
            const auto& e = crossing_ends[c];
            if (bits >> c & 1u) {
                unite(e[1], e[2]);
                unite(e[3], e[0]);
            } else {
                unite(e[0], e[1]);
                unite(e[2], e[3]);
            }
        }
        return base_components - merges + free_loops;
    }

    int max_circles() const { return num_labels + free_loops; }

    int num_labels = 0;
    int free_loops = 0;
    int base_components = 0;
    std::vector<int> base_parent;
    std::vector<std::array<int, 4>> crossing_ends;
};

}  // namespace

void validate(const ShadowDiagram& d) {
    StateEngine engine(d);  // construction performs the label checks
    (void)engine;
    if (d.free_loops < 0) throw std::invalid_argument("negative free loop count");
}

int count_circles(const ShadowDiagram& d, const SmoothingChoice& s) {
    if (s.count != d.num_crossings())
        throw LengthMismatch("smoothing choice covers " + std::to_string(s.count) +
                             " crossings, diagram has " + std::to_string(d.num_crossings()));
    StateEngine engine(d);
    std::vector<int> scratch;
    return engine.circles(s.bits, scratch);
}

std::vector<std::uint64_t> state_histogram(const ShadowDiagram& d) {
    if (d.num_crossings() > 30)
        throw TooManyCrossings("state sum over " + std::to_string(d.num_crossings()) +
                               " crossings exceeds the 30-crossing enumeration guard");
    StateEngine engine(d);
    const std::uint64_t states = 1ull << d.num_crossings();
    const std::size_t bins = static_cast<std::size_t>(engine.max_circles()) + 1;

    unsigned hw = std::thread::hardware_concurrency();
    std::size_t num_threads = 1;
    if (states >= (1u << 16) && hw > 1) num_threads = std::min<std::size_t>(hw, 8);

    std::vector<std::vector<std::uint64_t>> partial(num_threads,
                                                    std::vector<std::uint64_t>(bins, 0));
    auto worker = [&](std::size_t t) {
        std::uint64_t lo = states * t / num_threads;
        std::uint64_t hi = states * (t + 1) / num_threads;
        std::vector<int> scratch;
        for (std::uint64_t bits = lo; bits < hi; ++bits)
            partial[t][static_cast<std::size_t>(
                engine.circles(static_cast<std::uint32_t>(bits), scratch))] += 1;
    };
    if (num_threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < num_threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    std::vector<std::uint64_t> hist(bins, 0);
    for (const auto& p : partial)
        for (std::size_t k = 0; k < bins; ++k) hist[k] += p[k];
    return hist;
}

std::vector<std::uint8_t> all_state_circle_counts(const ShadowDiagram& d) {
    if (d.num_crossings() > 24)
        throw TooManyCrossings("per-state table over " + std::to_string(d.num_crossings()) +
                               " crossings exceeds the 24-crossing guard");
    StateEngine engine(d);
    const std::uint64_t states = 1ull << d.num_crossings();
    std::vector<std::uint8_t> counts(states);
    std::vector<int> scratch;
    for (std::uint64_t bits = 0; bits < states; ++bits)
        counts[bits] = static_cast<std::uint8_t>(engine.circles(static_cast<std::uint32_t>(bits), scratch));
    return counts;
}

IntPoly bracket_statesum(const ShadowDiagram& d) {
    std::vector<std::uint64_t> hist = state_histogram(d);
    std::vector<BigInt> coeffs(hist.size());
    for (std::size_t k = 0; k < hist.size(); ++k)
        coeffs[k] = BigInt(static_cast<long long>(hist[k]));
    return IntPoly(std::move(coeffs));
}

ShadowDiagram make_unknot() {
    ShadowDiagram d;
    d.free_loops = 1;
    return d;
}

ShadowDiagram make_foil(int n) {
    if (n < 1) throw std::invalid_argument("make_foil: n must be >= 1");
    ShadowDiagram d;
    // Crossing i holds ends (SW, SE, NE, NW) = 4i+(0..3) in ccw order; the
    // twist region chains SE_i -> SW_{i+1} and NE_i -> NW_{i+1} cyclically.
    for (int i = 0; i < n; ++i) {
        int next = (i + 1) % n;
        d.crossings.push_back({4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3});
        d.pairings.emplace_back(4 * i + 1, 4 * next);
        d.pairings.emplace_back(4 * i + 2, 4 * next + 3);
    }
    return d;
}

namespace {

int max_label(const ShadowDiagram& d) {
    int m = -1;
    for (const auto& c : d.crossings)
        for (int e : c) m = std::max(m, e);
    for (const auto& [p, q] : d.pairings) m = std::max({m, p, q});
    return m;
}

ShadowDiagram offset_labels(const ShadowDiagram& d, int offset) {
    ShadowDiagram out = d;
    for (auto& c : out.crossings)
        for (int& e : c) e += offset;
    for (auto& [p, q] : out.pairings) {
        p += offset;
        q += offset;
    }
    return out;
}

/// One strand of the diagram opened up: either two loose edge-ends, or a
/// bare strand (a cut free loop) with no ends at all.
struct CutDiagram {
    ShadowDiagram d;
    bool bare = false;
    int end1 = -1;
    int end2 = -1;
};

CutDiagram cut_strand(const ShadowDiagram& d) {
    CutDiagram out;
    out.d = d;
    if (!out.d.pairings.empty()) {
        auto [p, q] = out.d.pairings.back();
        out.d.pairings.pop_back();
        out.end1 = p;
        out.end2 = q;
        return out;
    }
    if (!out.d.crossings.empty()) {
        // no arcs: some label is glued crossing-to-crossing; split it
        int label = out.d.crossings.front()[0];
        int fresh = max_label(out.d) + 1;
        bool first = true;
        for (auto& c : out.d.crossings)
            for (int& e : c)
                if (e == label) {
                    if (!first) e = fresh;
                    first = false;
                }
        out.end1 = label;
        out.end2 = fresh;
        return out;
    }
    if (out.d.free_loops > 0) {
        out.d.free_loops -= 1;
        out.bare = true;
        return out;
    }
    throw EmptyDiagram("connected_sum: diagram has no strand to cut");
}

}  // namespace

ShadowDiagram connected_sum(const ShadowDiagram& a, const ShadowDiagram& b) {
    CutDiagram ca = cut_strand(a);
    CutDiagram cb = cut_strand(offset_labels(b, max_label(ca.d) + 2));

    ShadowDiagram out = ca.d;
    out.crossings.insert(out.crossings.end(), cb.d.crossings.begin(), cb.d.crossings.end());
    out.pairings.insert(out.pairings.end(), cb.d.pairings.begin(), cb.d.pairings.end());
    out.free_loops += cb.d.free_loops;

    if (!ca.bare && !cb.bare) {
        out.pairings.emplace_back(ca.end1, cb.end1);
        out.pairings.emplace_back(ca.end2, cb.end2);
    } else if (ca.bare && !cb.bare) {
        out.pairings.emplace_back(cb.end1, cb.end2);
    } else if (!ca.bare && cb.bare) {
        out.pairings.emplace_back(ca.end1, ca.end2);
    } else {
        out.free_loops += 1;
    }
    return out;
}

ShadowDiagram read_pd(std::istream& in) {
    ShadowDiagram d;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag) || tag.front() == '#') continue;

        auto read_labels = [&](int expected) {
            std::vector<int> labels;
            long long value;
            while (fields >> value) {
                if (value < 0 || value > 1000000000)
                    throw ParseError(line_number, "edge-end label out of range");
                labels.push_back(static_cast<int>(value));
            }
            std::string rest;
            if (!fields.eof() || static_cast<int>(labels.size()) != expected)
                throw ParseError(line_number, "'" + tag + "' expects exactly " +
                                                  std::to_string(expected) + " labels");
            return labels;
        };

        if (tag == "L") {
            read_labels(0);
            d.free_loops += 1;
        } else if (tag == "X") {
            auto labels = read_labels(4);
            d.crossings.push_back({labels[0], labels[1], labels[2], labels[3]});
        } else if (tag == "P") {
            auto labels = read_labels(2);
            d.pairings.emplace_back(labels[0], labels[1]);
        } else {
            throw ParseError(line_number, "unknown item '" + tag + "'");
        }
    }
    try {
        validate(d);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_number, e.what());
    }
    return d;
}

void write_pd(std::ostream& out, const ShadowDiagram& d) {
    for (const auto& c : d.crossings)
        out << "X " << c[0] << ' ' << c[1] << ' ' << c[2] << ' ' << c[3] << '\n';
    for (const auto& [p, q] : d.pairings) out << "P " << p << ' ' << q << '\n';
    for (int i = 0; i < d.free_loops; ++i) out << "L\n";
}

}  // namespace ckb
