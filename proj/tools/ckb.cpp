#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ckb/celtic.hpp"
#include "ckb/celtic_recursion.hpp"
#include "ckb/shadow.hpp"
#include "ckb/tangle.hpp"

namespace {

using namespace ckb;

constexpr int kStatesumMaxN = 8;
constexpr int kMatrixMaxN = 12;

IntPoly celtic_by_method(int n, const std::string& method) {
    if (method == "statesum") {
        if (n > kStatesumMaxN)
            throw std::invalid_argument("method statesum enumerates 2^(3n-2) states; use n <= " +
                                        std::to_string(kStatesumMaxN) +
                                        " or a matrix method for larger grids");
        return bracket_statesum(build_celtic(n).shadow);
    }
    if (n > kMatrixMaxN)
        throw std::invalid_argument("n <= " + std::to_string(kMatrixMaxN) +
                                    " supported; raise the guard only with exact-size checks");
    if (method == "celtic-matrix") return celtic_bracket(n).ck;
    if (method == "gf") return celtic_bracket_gf(n);
    if (method == "tangle") return tangle_bracket(n);
    throw std::invalid_argument("unknown method '" + method +
                                "' (expected statesum, celtic-matrix, gf or tangle)");
}

void print_table_csv(std::ostream& out, int n_max, const std::string& method) {
    for (int n = 1; n <= n_max; ++n) {
        IntPoly row = celtic_by_method(n, method);
        for (int k = 1; k <= row.degree(); ++k)
            out << n << ',' << k << ',' << row.coeff(k) << '\n';
    }
}

void print_table_markdown(std::ostream& out, int n_max, const std::string& method) {
    if (n_max < 1) return;
    int k_max = 2 * n_max;
    out << "| n\\k |";
    for (int k = 0; k <= k_max; ++k) out << ' ' << k << " |";
    out << '\n';
    out << "|---|";
    for (int k = 0; k <= k_max; ++k) out << "---|";
    out << '\n';
    for (int n = 1; n <= n_max; ++n) {
        IntPoly row = celtic_by_method(n, method);
        out << "| " << n << " |";
        for (int k = 0; k <= k_max; ++k) {
            out << ' ';
            if (k <= row.degree()) out << row.coeff(k);
            out << " |";
        }
        out << '\n';
    }
}

int cmd_bracket(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return 1;
    }
    ShadowDiagram d = read_pd(in);
    std::cout << to_string(bracket_statesum(d)) << '\n';
    return 0;
}

int cmd_celtic(int n, const std::string& method, const std::string& emit_pd) {
    if (!emit_pd.empty()) {
        std::ofstream out(emit_pd);
        if (!out) {
            std::cerr << "error: cannot write '" << emit_pd << "'\n";
            return 1;
        }
        write_pd(out, build_celtic(n).shadow);
    }
    std::cout << to_string(celtic_by_method(n, method)) << '\n';
    return 0;
}

int cmd_table(int n_max, const std::string& method, const std::string& format) {
    int limit = method == "statesum" ? 6 : kMatrixMaxN;
    if (n_max > limit)
        throw std::invalid_argument("table with method " + method + " supports n-max <= " +
                                    std::to_string(limit));
    if (format == "csv")
        print_table_csv(std::cout, n_max, method);
    else if (format == "markdown")
        print_table_markdown(std::cout, n_max, method);
    else
        throw std::invalid_argument("unknown format '" + format + "' (expected csv or markdown)");
    return 0;
}

int cmd_barriers(int n, int components, bool orbits) {
    std::map<int, std::uint64_t> dist = barrier_component_distribution(n);
    for (const auto& [k, count] : dist) {
        if (components != 0 && k != components) continue;
        if (orbits) {
            std::cout << "k=" << k << " orbits:";
            for (int size : symmetry_orbits(n, k)) std::cout << ' ' << size;
            std::cout << '\n';
        } else {
            std::cout << k << ',' << count << '\n';
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify: the cross-method consistency suite.

struct Check {
    std::string name;
    std::function<std::string()> run;  // empty result = pass
};

std::string poly_mismatch(const std::string& what, const IntPoly& got, const IntPoly& want) {
    return what + ": got " + to_string(got) + ", want " + to_string(want);
}

void dump_state_matrix(std::ostream& out) {
    PolyMatrix derived = build_state_matrix();
    out << "derived states matrix (rows = resulting basis element):\n";
    for (int r = 0; r < 14; ++r) {
        for (int c = 0; c < 14; ++c) out << (c ? " " : "") << to_string(derived(r, c));
        out << '\n';
    }
    out << "published index of each basis element:";
    for (int p : match_reference_matrix(derived)) out << ' ' << p + 1;
    out << '\n';
}

int cmd_verify(int n_max, bool orbits, bool dump_matrix) {
    if (n_max < 1 || n_max > kStatesumMaxN)
        throw std::invalid_argument("verify --n must be in [1, " +
                                    std::to_string(kStatesumMaxN) + "]");
    if (dump_matrix) dump_state_matrix(std::cout);
    const bool inject_fault = std::getenv("CKB_FAULT_INJECT") != nullptr;
    IntPoly x = IntPoly::variable();
    std::vector<Check> checks;

    checks.push_back({"transfer-matrix-identities", [&] {
        const PolyMatrix& m = celtic_transfer_matrix();
        IntPoly trace = m(0, 0) + m(1, 1);
        IntPoly det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        if (trace != (x + 2) * (x + 2)) return poly_mismatch("trace", trace, (x + 2) * (x + 2));
        if (det != (x + 1) * (x + 1) * (x + 1))
            return poly_mismatch("det", det, (x + 1) * (x + 1) * (x + 1));
        return std::string();
    }});

    checks.push_back({"matrix-vs-gf", [&] {
        for (int n = 1; n <= kMatrixMaxN; ++n)
            if (celtic_bracket(n).ck != celtic_bracket_gf(n))
                return "n=" + std::to_string(n) + " recurrence disagrees with matrix iteration";
        return std::string();
    }});

    checks.push_back({"tangle-vs-matrix", [&] {
        PolyMatrix m = build_state_matrix();
        if (inject_fault) m(0, 0) += IntPoly(1);
        IntPoly divisor = (x + 1) * (x + 1);
        PolyVector a = PolyVector::Zero(14);
        a(0) = IntPoly(1);
        const auto& basis = enumerate_basis();
        for (int n = 1; n <= kMatrixMaxN; ++n) {
            a = mat_vec(m, a);
            IntPoly closed;
            for (int i = 0; i < 14; ++i)
                closed += a(i) * closure_value(basis[static_cast<std::size_t>(i)]);
            IntPoly ck = celtic_bracket(n).ck;
            if (closed != divisor * ck)
                return "n=" + std::to_string(n) +
                       " tangle-monoid bracket disagrees with the celtic matrix value";
        }
        return std::string();
    }});

    checks.push_back({"closure-theorem", [&] {
        for (int n = 1; n <= kMatrixMaxN; ++n) {
            IntPoly closed = closure_bracket(n);
            IntPoly want = (x + 1) * (x + 1) * celtic_bracket(n).ck;
            if (closed != want) return poly_mismatch("n=" + std::to_string(n), closed, want);
        }
        return std::string();
    }});

    checks.push_back({"statesum-vs-matrix", [&] {
        for (int n = 1; n <= n_max; ++n) {
            IntPoly brute = bracket_statesum(build_celtic(n).shadow);
            IntPoly fast = celtic_bracket(n).ck;
            if (brute != fast) return poly_mismatch("n=" + std::to_string(n), brute, fast);
        }
        return std::string();
    }});

    checks.push_back({"vertical-component", [&] {
        for (int n = 1; n <= std::min(n_max, 4); ++n) {
            IntPoly brute = bracket_statesum(
                smooth_at(build_celtic(n), 2, 2 * n - 1, Smoothing::vertical).shadow);
            IntPoly fast = celtic_bracket(n).vck;
            if (brute != fast) return poly_mismatch("n=" + std::to_string(n), brute, fast);
        }
        return std::string();
    }});

    auto grid_reduction = [&](int which, int n) -> std::string {
        CelticDiagram parent = build_celtic(n);
        CelticDiagram prev = build_celtic(n - 1);
        IntPoly lhs, rhs;
        switch (which) {
            case 1:
                lhs = bracket_statesum(smooth_at(parent, 2, 2 * n - 1, Smoothing::horizontal).shadow);
                rhs = (x + 1) * (x + 1) * bracket_statesum(prev.shadow);
                break;
            case 2:
                lhs = bracket_statesum(
                    smooth_at(smooth_at(parent, 2, 2 * n - 1, Smoothing::vertical), 1, 2 * n - 2,
                              Smoothing::vertical)
                        .shadow);
                rhs = (x + 1) * bracket_statesum(prev.shadow);
                break;
            case 3:
                lhs = bracket_statesum(
                    smooth_at(smooth_at(smooth_at(parent, 2, 2 * n - 1, Smoothing::vertical), 1,
                                        2 * n - 2, Smoothing::horizontal),
                              3, 2 * n - 2, Smoothing::horizontal)
                        .shadow);
                rhs = (x + 1) *
                      bracket_statesum(smooth_at(prev, 2, 2 * n - 3, Smoothing::vertical).shadow);
                break;
            case 4:
                lhs = bracket_statesum(
                    smooth_at(smooth_at(smooth_at(parent, 2, 2 * n - 1, Smoothing::vertical), 1,
                                        2 * n - 2, Smoothing::horizontal),
                              3, 2 * n - 2, Smoothing::vertical)
                        .shadow);
                rhs = bracket_statesum(prev.shadow);
                break;
        }
        if (lhs != rhs)
            return poly_mismatch("reduction " + std::to_string(which) + " at n=" + std::to_string(n),
                                 lhs, rhs);
        return std::string();
    };
    for (int which = 1; which <= 4; ++which) {
        checks.push_back({"grid-reduction-" + std::to_string(which), [&grid_reduction, which] {
            for (int n = 2; n <= 3; ++n) {
                std::string err = grid_reduction(which, n);
                if (!err.empty()) return err;
            }
            return std::string();
        }});
    }

    checks.push_back({"smoothing-partition", [&] {
        for (int n = 2; n <= 3; ++n) {
            CelticDiagram d = build_celtic(n);
            IntPoly whole = bracket_statesum(d.shadow);
            for (const auto& [row, col] : d.addresses) {
                IntPoly split =
                    bracket_statesum(smooth_at(d, row, col, Smoothing::horizontal).shadow) +
                    bracket_statesum(smooth_at(d, row, col, Smoothing::vertical).shadow);
                if (split != whole)
                    return "crossing (" + std::to_string(row) + "," + std::to_string(col) +
                           ") at n=" + std::to_string(n) + " does not split the state sum";
            }
        }
        return std::string();
    }});

    checks.push_back({"monoid-basis", [&] {
        const auto& basis = enumerate_basis();
        if (basis.size() != 14) return std::string("basis size is not 14");
        std::map<std::string, int> multiset;
        for (const auto& g : basis) multiset[to_string(closure_value(g))] += 1;
        std::map<std::string, int> want = {{"x", 1}, {"x^2", 6}, {"x^3", 6}, {"x^4", 1}};
        if (multiset != want) return std::string("closure-value multiset is wrong");
        return std::string();
    }});

    checks.push_back({"fundamental-expansion", [&] {
        StateVector v = expand_fundamental();
        int nonzero = 0;
        for (int i = 0; i < 14; ++i) {
            if (v.a(i).is_zero()) continue;
            ++nonzero;
            if (v.a(i) != IntPoly(1)) return std::string("expansion coefficient is not 1");
        }
        if (nonzero != 8) return std::string("expansion does not hit exactly 8 basis elements");
        if (v.a(0) != IntPoly(1)) return std::string("identity coefficient is not 1");
        return std::string();
    }});

    checks.push_back({"reference-matrix-match", [&] {
        std::vector<int> perm = match_reference_matrix(build_state_matrix());
        if (perm[0] != 0) return std::string("identity does not map to the first reference index");
        return std::string();
    }});

    checks.push_back({"barrier-distribution", [&] {
        std::map<int, std::uint64_t> dist = barrier_component_distribution(3);
        std::map<int, std::uint64_t> want = {{1, 15}, {2, 40}, {3, 42}, {4, 23}, {5, 7}, {6, 1}};
        if (dist != want) return std::string("n=3 distribution is wrong");
        IntPoly bracket = celtic_bracket(3).ck;
        for (const auto& [k, count] : dist)
            if (bracket.coeff(k) != BigInt(static_cast<long long>(count)))
                return std::string("distribution disagrees with bracket coefficients");
        return std::string();
    }});

    checks.push_back({"symmetry-orbits", [&] {
        if (symmetry_orbits(3, 1) != std::vector<int>{1, 2, 2, 2, 4, 4})
            return std::string("orbit sizes at n=3, k=1 are wrong");
        if (symmetry_orbits(3, 6) != std::vector<int>{1})
            return std::string("orbit sizes at n=3, k=6 are wrong");
        return std::string();
    }});

    checks.push_back({"oeis-column", [&] {
        std::vector<BigInt> column = oeis_column_check(7);
        std::vector<long long> want = {1, 4, 15, 56, 209, 780, 2911};
        for (std::size_t i = 0; i < want.size(); ++i)
            if (column[i] != BigInt(want[i])) return std::string("single-circle column is wrong");
        for (std::size_t i = 2; i < column.size(); ++i)
            if (column[i] != BigInt(4) * column[i - 1] - column[i - 2])
                return std::string("column does not satisfy a(n) = 4a(n-1) - a(n-2)");
        return std::string();
    }});

    checks.push_back({"closed-form-spot-check", [&] {
        for (double x0 : {0.5, 1.0, 2.0, 3.0})
            for (int n = 1; n <= kMatrixMaxN; ++n) {
                double err = closed_form_spot_check(n, x0);
                if (!(err <= 1e-9))
                    return "relative error " + std::to_string(err) + " at n=" + std::to_string(n) +
                           ", x0=" + std::to_string(x0);
            }
        return std::string();
    }});

    checks.push_back({"char-poly-samples", [&] {
        std::mt19937 rng(20240811);
        std::uniform_real_distribution<double> sample_x(0.5, 3.0);
        std::uniform_real_distribution<double> sample_lambda(-3.0, -0.5);
        for (int i = 0; i < 20; ++i) {
            double x0 = sample_x(rng);
            double lambda = sample_lambda(rng);
            double err = char_poly_relative_error(lambda, x0);
            if (!(err <= 1e-6))
                return "relative error " + std::to_string(err) + " at lambda=" +
                       std::to_string(lambda) + ", x=" + std::to_string(x0);
        }
        return std::string();
    }});

    checks.push_back({"foil-formula", [&] {
        for (int n = 1; n <= 6; ++n) {
            IntPoly brute = bracket_statesum(make_foil(n));
            IntPoly closed = x * x - 1;
            IntPoly power(1);
            for (int i = 0; i < n; ++i) power *= x + 1;
            closed += power;
            if (brute != closed) return poly_mismatch("n=" + std::to_string(n), brute, closed);
        }
        IntPoly trefoil = bracket_statesum(make_foil(3));
        IntPoly sum = bracket_statesum(connected_sum(make_foil(3), make_foil(3)));
        if (x * sum != trefoil * trefoil)
            return std::string("connected sum of two trefoils violates the product identity");
        return std::string();
    }});

    int failures = 0;
    std::string first_failure;
    for (const auto& check : checks) {
        std::string err = check.run();
        if (err.empty()) {
            std::cout << "ok   " << check.name << '\n';
        } else {
            std::cout << "FAIL " << check.name << ": " << err << '\n';
            if (failures == 0) first_failure = check.name + ": " + err;
            ++failures;
        }
    }
    if (orbits) {
        for (const auto& [k, count] : barrier_component_distribution(std::min(n_max, 8))) {
            std::cout << "k=" << k << " orbits:";
            for (int size : symmetry_orbits(std::min(n_max, 8), k)) std::cout << ' ' << size;
            std::cout << '\n';
        }
    }
    std::cout << (static_cast<int>(checks.size()) - failures) << '/' << checks.size()
              << " checks passed\n";
    if (failures != 0) {
        std::cerr << "verify: FAILED at " << first_failure << '\n';
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kauffman bracket polynomials of Celtic knot shadows"};
    app.require_subcommand(1);

    auto* bracket = app.add_subcommand("bracket", "Bracket polynomial of a PD file by state sum");
    std::string pd_path;
    bracket->add_option("--pd", pd_path, "PD file path")->required();

    auto* celtic = app.add_subcommand("celtic", "Bracket polynomial of the width-2n Celtic grid");
    int celtic_n = 1;
    std::string celtic_method = "celtic-matrix";
    std::string emit_pd;
    celtic->add_option("--n", celtic_n, "half-width n (grid is 4 x 2n)")->required();
    celtic->add_option("--method", celtic_method, "statesum, celtic-matrix, gf or tangle");
    celtic->add_option("--emit-pd", emit_pd, "also write the grid's PD file here");

    auto* table = app.add_subcommand("table", "Coefficient table for n = 1..n-max");
    int n_max = 0;
    std::string table_method = "celtic-matrix";
    std::string format = "csv";
    table->add_option("--n-max", n_max, "largest half-width")->required();
    table->add_option("--method", table_method, "statesum, celtic-matrix, gf or tangle");
    table->add_option("--format", format, "csv or markdown");

    auto* barriers = app.add_subcommand("barriers", "Barrier-configuration statistics");
    int barriers_n = 1;
    int components = 0;
    bool barrier_orbits = false;
    barriers->add_option("--n", barriers_n, "half-width n")->required();
    barriers->add_option("--components", components, "restrict to configurations with k circles");
    barriers->add_flag("--orbits", barrier_orbits, "list symmetry-orbit sizes instead of counts");

    auto* verify = app.add_subcommand("verify", "Cross-check all computation methods");
    int verify_n = 4;
    bool verify_orbits = false;
    bool dump_matrix = false;
    verify->add_option("--n", verify_n, "largest half-width for brute-force comparisons");
    verify->add_flag("--orbits", verify_orbits, "also report symmetry-orbit sizes");
    verify->add_flag("--dump-state-matrix", dump_matrix,
                     "print the derived 14x14 states matrix and its published indexing");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bracket->parsed()) return cmd_bracket(pd_path);
        if (celtic->parsed()) return cmd_celtic(celtic_n, celtic_method, emit_pd);
        if (table->parsed()) return cmd_table(n_max, table_method, format);
        if (barriers->parsed()) return cmd_barriers(barriers_n, components, barrier_orbits);
        if (verify->parsed()) return cmd_verify(verify_n, verify_orbits, dump_matrix);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
