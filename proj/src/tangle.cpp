#include "ckb/tangle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

namespace ckb {

namespace {

// Boundary cyclic order T1 T2 T3 T4 B4 B3 B2 B1, as positions per point.
constexpr std::array<int, 8> kCyclic = {0, 1, 2, 3, 7, 6, 5, 4};

int find_root(std::array<int, 8>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

Pairing Pairing::identity() {
    return from_pairs({{0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

Pairing Pairing::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    if (pairs.size() != 4) throw std::invalid_argument("Pairing: expected 4 pairs");
    Pairing out;
    std::array<bool, 8> seen{};
    for (auto [a, b] : pairs) {
        if (a < 0 || a > 7 || b < 0 || b > 7 || a == b || seen[a] || seen[b])
            throw std::invalid_argument("Pairing: not a perfect matching of 0..7");
        seen[a] = seen[b] = true;
        out.partner_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
        out.partner_[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a);
    }
    return out;
}

std::vector<std::pair<int, int>> Pairing::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < 8; ++p)
        if (partner_[static_cast<std::size_t>(p)] > p)
            out.emplace_back(p, partner_[static_cast<std::size_t>(p)]);
    return out;
}

bool Pairing::noncrossing() const {
    std::vector<std::pair<int, int>> chords;
    for (auto [a, b] : pairs()) {
        int ca = kCyclic[static_cast<std::size_t>(a)];
        int cb = kCyclic[static_cast<std::size_t>(b)];
        chords.emplace_back(std::min(ca, cb), std::max(ca, cb));
    }
    for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            auto [a, b] = chords[i];
            auto [c, d] = chords[j];
            if (c < a) std::swap(a, c), std::swap(b, d);
            if (a < c && c < b && b < d) return false;
        }
    return true;
}

WeightedPairing compose(const Pairing& upper, const Pairing& lower) {
    // Nodes 0..7 = upper points, 8..15 = lower points. Each internal node
    // (upper bottom 4..7, lower top 8..11) carries a gluing edge in
    // addition to its matching edge, making the internal graph 2-regular.
    auto match = [&](int node) {
        return node < 8 ? upper.partner(node) : 8 + lower.partner(node - 8);
    };
    auto glue = [](int node) { return node < 8 ? node + 4 : node - 4; };
    auto external = [](int node) { return node < 4 || node >= 12; };
    auto as_point = [](int node) { return node < 4 ? node : node - 8; };

    std::array<bool, 16> visited{};
    std::vector<std::pair<int, int>> pairs;
    for (int start = 0; start < 16; ++start) {
        if (!external(start) || visited[start]) continue;
        visited[start] = true;
        int node = match(start);
        visited[node] = true;
        while (!external(node)) {
            node = glue(node);
            visited[node] = true;
            node = match(node);
            visited[node] = true;
        }
        pairs.emplace_back(as_point(start), as_point(node));
    }

    WeightedPairing out;
    out.pairing = Pairing::from_pairs(pairs);
    for (int start = 4; start < 12; ++start) {
        if (visited[start]) continue;
        out.loops += 1;
        int node = start;
        while (!visited[node]) {
            visited[node] = true;
            node = match(node);
            visited[node] = true;
            node = glue(node);
        }
    }
    return out;
}

const std::vector<Pairing>& enumerate_basis() {
    static const std::vector<Pairing> basis = [] {
        std::vector<Pairing> all;
        std::vector<std::pair<int, int>> partial;
        std::array<bool, 8> used{};
        auto recurse = [&](auto&& self, int depth) -> void {
            if (depth == 4) {
                Pairing p = Pairing::from_pairs(partial);
                if (p.noncrossing()) all.push_back(p);
                return;
            }
            int first = 0;
            while (used[first]) ++first;
            used[first] = true;
            for (int second = first + 1; second < 8; ++second) {
                if (used[second]) continue;
                used[second] = true;
                partial.emplace_back(first, second);
                self(self, depth + 1);
                partial.pop_back();
                used[second] = false;
            }
            used[first] = false;
        };
        recurse(recurse, 0);

        Pairing id = Pairing::identity();
        std::sort(all.begin(), all.end(), [&](const Pairing& a, const Pairing& b) {
            if (a == id || b == id) return a == id && b != id;
            return a < b;
        });
        return all;
    }();
    return basis;
}

namespace {

int basis_index(const Pairing& g) {
    const auto& basis = enumerate_basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == g) return static_cast<int>(i);
    throw std::logic_error("pairing is not a basis element");
}

Pairing cup_cap(int strand) {  // e_strand, 1-based strand pair (strand, strand+1)
    std::vector<std::pair<int, int>> pairs = {{strand - 1, strand},
                                              {4 + strand - 1, 4 + strand}};
    for (int j = 0; j < 4; ++j)
        if (j != strand - 1 && j != strand) pairs.emplace_back(j, 4 + j);
    return Pairing::from_pairs(pairs);
}

}  // namespace

Tangle fundamental_tangle() { return Tangle{{{2}, {1, 3}}}; }

std::vector<WeightedPairing> tangle_states(const Tangle& t) {
    std::vector<int> crossings;
    for (const auto& level : t.levels)
        for (int strand : level) crossings.push_back(strand);
    if (crossings.size() > 20) throw std::invalid_argument("tangle_states: too many crossings");

    std::vector<WeightedPairing> out;
    out.reserve(1u << crossings.size());
    for (std::uint32_t bits = 0; bits < (1u << crossings.size()); ++bits) {
        WeightedPairing state{0, Pairing::identity()};
        for (std::size_t i = 0; i < crossings.size(); ++i) {
            if (!(bits >> i & 1u)) continue;  // vertical smoothing: strands pass through
            WeightedPairing step = compose(state.pairing, cup_cap(crossings[i]));
            state.pairing = step.pairing;
            state.loops += step.loops;
        }
        out.push_back(state);
    }
    return out;
}

StateVector expand_fundamental() {
    StateVector out;
    out.n = 1;
    out.a = PolyVector::Zero(14);
    for (const auto& state : tangle_states(fundamental_tangle()))
        out.a(basis_index(state.pairing)) += IntPoly::monomial(state.loops);
    return out;
}

PolyMatrix build_state_matrix() {
    const auto& basis = enumerate_basis();
    const auto states = tangle_states(fundamental_tangle());
    PolyMatrix m = PolyMatrix::Zero(14, 14);
    for (int i = 0; i < 14; ++i) {
        for (const auto& h : states) {
            WeightedPairing product = compose(basis[static_cast<std::size_t>(i)], h.pairing);
            m(basis_index(product.pairing), i) += IntPoly::monomial(h.loops + product.loops);
        }
    }
    return m;
}

const PolyMatrix& reference_state_matrix() {
    static const PolyMatrix ref = [] {
        // Rows of the published states matrix; s = x+1, t = x+2,
        // u = x^2+3x+2, v = x^2+3x+3.
        constexpr std::array<const char*, 14> rows = {
            "10000000000000",
            "1t000s00000001",
            "10s01001000000",
            "100t00s0000010",
            "10s0t001000000",
            "01000s00000001",
            "000100s0000010",
            "10s0100t000000",
            "10s0t00tvu0000",
            "000000001s0000",
            "1t0t0ss000vutt",
            "00000000001s00",
            "000100s00000t0",
            "01000s0000000t",
        };
        IntPoly x = IntPoly::variable();
        IntPoly s = x + 1;
        IntPoly t = x + 2;
        IntPoly u = x * x + 3 * x + 2;
        IntPoly v = x * x + 3 * x + 3;
        PolyMatrix m(14, 14);
        for (int r = 0; r < 14; ++r)
            for (int c = 0; c < 14; ++c) {
                switch (rows[static_cast<std::size_t>(r)][c]) {
                    case '0': m(r, c) = IntPoly(); break;
                    case '1': m(r, c) = IntPoly(1); break;
                    case 's': m(r, c) = s; break;
                    case 't': m(r, c) = t; break;
                    case 'u': m(r, c) = u; break;
                    case 'v': m(r, c) = v; break;
                }
            }
        return m;
    }();
    return ref;
}

const std::array<int, 14>& reference_closure_exponents() {
    static const std::array<int, 14> exponents = {2, 3, 1, 3, 2, 2, 2, 2, 3, 2, 4, 3, 3, 3};
    return exponents;
}

namespace {

std::string multiset_key(std::vector<std::string> entries) {
    std::sort(entries.begin(), entries.end());
    std::string key;
    for (const auto& e : entries) {
        key += e;
        key += ';';
    }
    return key;
}

}  // namespace

std::vector<int> match_reference_matrix(const PolyMatrix& derived) {
    if (derived.rows() != 14 || derived.cols() != 14)
        throw DimensionMismatch("match_reference_matrix: expected a 14x14 matrix");
    const auto& basis = enumerate_basis();
    const PolyMatrix& ref = reference_state_matrix();
    const auto& ref_closure = reference_closure_exponents();

    auto column_key = [](const PolyMatrix& m, int c) {
        std::vector<std::string> entries;
        for (int r = 0; r < 14; ++r) entries.push_back(to_string(m(r, c)));
        return multiset_key(std::move(entries));
    };
    auto row_key = [](const PolyMatrix& m, int r) {
        std::vector<std::string> entries;
        for (int c = 0; c < 14; ++c) entries.push_back(to_string(m(r, c)));
        return multiset_key(std::move(entries));
    };

    // Candidates are constrained by closure class and row/column content.
    std::array<std::vector<int>, 14> candidates;
    for (int i = 0; i < 14; ++i) {
        int closure = closure_value(basis[static_cast<std::size_t>(i)]).degree();
        for (int p = 0; p < 14; ++p) {
            if (ref_closure[static_cast<std::size_t>(p)] != closure) continue;
            if (i == 0 && p != 0) continue;  // identity must map to index 1
            if (column_key(derived, i) != column_key(ref, p)) continue;
            if (row_key(derived, i) != row_key(ref, p)) continue;
            candidates[static_cast<std::size_t>(i)].push_back(p);
        }
    }

    std::vector<int> perm(14, -1);
    std::array<bool, 14> used{};
    auto search = [&](auto&& self, int i) -> bool {
        if (i == 14) return true;
        for (int p : candidates[static_cast<std::size_t>(i)]) {
            if (used[static_cast<std::size_t>(p)]) continue;
            bool consistent = derived(i, i) == ref(p, p);
            for (int j = 0; consistent && j < i; ++j) {
                consistent = derived(i, j) == ref(p, perm[static_cast<std::size_t>(j)]) &&
                             derived(j, i) == ref(perm[static_cast<std::size_t>(j)], p);
            }
            if (!consistent) continue;
            perm[static_cast<std::size_t>(i)] = p;
            used[static_cast<std::size_t>(p)] = true;
            if (self(self, i + 1)) return true;
            used[static_cast<std::size_t>(p)] = false;
            perm[static_cast<std::size_t>(i)] = -1;
        }
        return false;
    };
    if (!search(search, 0))
        throw NoIsomorphism("derived states matrix is not a row/column permutation of the reference");
    return perm;
}

StateVector iterate_states(int n) {
    if (n < 0 || n > 64)
        throw std::invalid_argument("iterate_states: n must be in [0, 64]");
    static const PolyMatrix m = build_state_matrix();
    StateVector out;
    out.n = n;
    out.a = PolyVector::Zero(14);
    out.a(0) = IntPoly(1);
    for (int step = 0; step < n; ++step) out.a = mat_vec(m, out.a);
    return out;
}

IntPoly closure_value(const Pairing& g) {
    std::array<int, 8> parent;
    for (int i = 0; i < 8; ++i) parent[static_cast<std::size_t>(i)] = i;
    int components = 8;
    auto unite = [&](int a, int b) {
        int ra = find_root(parent, a);
        int rb = find_root(parent, b);
        if (ra != rb) {
            parent[static_cast<std::size_t>(ra)] = rb;
            --components;
        }
    };
    for (auto [a, b] : g.pairs()) unite(a, b);
    unite(0, 1);
    unite(2, 3);
    unite(4, 5);
    unite(6, 7);
    return IntPoly::monomial(components);
}

IntPoly closure_bracket(int n) {
    if (n < 1) throw std::invalid_argument("closure_bracket: n must be >= 1");
    StateVector state = iterate_states(n);
    const auto& basis = enumerate_basis();
    IntPoly out;
    for (int i = 0; i < 14; ++i)
        out += state.a(i) * closure_value(basis[static_cast<std::size_t>(i)]);
    return out;
}

IntPoly tangle_bracket(int n) {
    IntPoly x = IntPoly::variable();
    return poly_div_exact(closure_bracket(n), (x + 1) * (x + 1));
}

double char_poly_relative_error(double lambda, double x) {
    const PolyMatrix& ref = reference_state_matrix();
    Eigen::MatrixXd m(14, 14);
    for (int r = 0; r < 14; ++r)
        for (int c = 0; c < 14; ++c) m(r, c) = poly_eval_float(ref(r, c), x);
    double det = (lambda * Eigen::MatrixXd::Identity(14, 14) - m).determinant();

    double r = std::sqrt(2 * x + 3);
    double p = x * x + 4 * x + 4;
    double q = std::sqrt(x * x * x * x + 4 * x * x * x + 12 * x * x + 20 * x + 12);
    double chi = (lambda - 1) * std::pow(lambda - x - 1, 3) * std::pow(lambda - x - 2 - r, 3) *
                 std::pow(lambda - x - 2 + r, 3) * std::pow(lambda - (p - q) / 2, 2) *
                 std::pow(lambda - (p + q) / 2, 2);

    double scale = std::max({std::abs(det), std::abs(chi), 1e-12});
    return std::abs(det - chi) / scale;
}

}  // namespace ckb
