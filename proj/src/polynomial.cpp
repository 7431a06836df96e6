#include "ckb/polynomial.hpp"

#include <cctype>

namespace ckb {

// Rendering convention: descending powers, '*' between coefficient and
// power, unit coefficients and the ^1 exponent left implicit, e.g.
// "x^6+7*x^5+23*x^4+42*x^3+40*x^2+15*x". The zero polynomial is "0".
std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        BigInt c = p.coeff(i);
        if (c.is_zero()) continue;
        bool negative = c.signum() < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? '-' : '+';
        }
        BigInt mag = negative ? -c : c;
        bool unit = mag == BigInt(1);
        if (i == 0) {
            out += mag.to_string();
        } else {
            if (!unit) {
                out += mag.to_string();
                out += '*';
            }
            out += 'x';
            if (i != 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

namespace {

struct PolyParser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_poly: " + what + " at offset " +
                                    std::to_string(pos) + " in \"" + std::string(text) + "\"");
    }

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    BigInt read_integer() {
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) fail("expected digits");
        return BigInt(text.substr(start, pos - start));
    }

    // term := integer | [integer '*'] 'x' ['^' integer]
    IntPoly read_term() {
        BigInt coeff(1);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = read_integer();
            saw_coeff = true;
            if (!done() && peek() == '*') {
                ++pos;
                if (done() || peek() != 'x') fail("expected x after '*'");
            } else {
                return IntPoly(coeff);  // bare constant
            }
        }
        if (done() || peek() != 'x') {
            if (saw_coeff) return IntPoly(coeff);
            fail("expected term");
        }
        ++pos;  // consume 'x'
        int exp = 1;
        if (!done() && peek() == '^') {
            ++pos;
            BigInt e = read_integer();
            double as_double = e.to_double();
            if (as_double > 1e6) fail("exponent too large");
            exp = static_cast<int>(as_double);
        }
        return IntPoly::monomial(exp, coeff);
    }

    IntPoly parse() {
        if (done()) fail("empty input");
        IntPoly out;
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos;
        } else if (peek() == '+') {
            ++pos;
        }
        while (true) {
            IntPoly term = read_term();
            out += negate ? -term : term;
            if (done()) break;
            if (peek() == '+') {
                negate = false;
            } else if (peek() == '-') {
                negate = true;
            } else {
                fail("unexpected character");
            }
            ++pos;
        }
        return out;
    }
};

}  // namespace

IntPoly parse_poly(std::string_view text) {
    PolyParser parser{text};
    return parser.parse();
}

}  // namespace ckb
