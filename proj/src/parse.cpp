#include "ldpcopt/parse.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace ldpcopt {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() { return s[pos]; }
};

double parse_number(Cursor& c) {
    size_t consumed = 0;
    double v;
    try {
        v = std::stod(c.s.substr(c.pos), &consumed);
    } catch (const std::exception&) {
        throw PolySpecError("expected a number", c.pos);
    }
    c.pos += consumed;
    return v;
}

int parse_exponent(Cursor& c) {
    c.skip_ws();
    if (c.done() || c.peek() != 'x') throw PolySpecError("expected 'x'", c.pos);
    ++c.pos;
    c.skip_ws();
    if (!c.done() && c.peek() == '^') {
        ++c.pos;
        c.skip_ws();
        if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
            throw PolySpecError("expected an integer exponent after '^'", c.pos);
        size_t consumed = 0;
        const int k = std::stoi(c.s.substr(c.pos), &consumed);
        c.pos += consumed;
        return k;
    }
    return 1;
}

}  // namespace

DegreeDistribution parse_poly_spec(const std::string& s) {
    Cursor c{s};
    std::map<int, Scalar> coeffs;
    bool first = true;
    while (!c.done()) {
        if (!first) {
            if (c.peek() != '+') throw PolySpecError("expected '+' between terms", c.pos);
            ++c.pos;
            c.skip_ws();
        }
        first = false;
        if (c.done()) throw PolySpecError("dangling '+'", c.pos);

        const size_t term_start = c.pos;
        Scalar coeff = 1.0;
        if (c.peek() != 'x') {
            coeff = parse_number(c);
            c.skip_ws();
            if (!c.done() && c.peek() == '*') {
                ++c.pos;
            } else if (c.done() || c.peek() != 'x') {
                throw PolySpecError("constant terms are not allowed; expected '*x^k'", c.pos);
            }
        }
        if (coeff < 0.0) throw PolySpecError("negative coefficient", term_start);

        const int k = parse_exponent(c);
        if (k < 1) throw PolySpecError("exponent must be at least 1", term_start);
        coeffs[k + 1] += coeff;
    }
    if (coeffs.empty()) throw PolySpecError("empty polynomial", 0);

    Scalar sum = 0.0;
    for (const auto& [d, v] : coeffs) sum += v;
    if (std::abs(sum - 1.0) > 1e-6) {
        std::ostringstream os;
        os << "coefficients sum to " << sum << ", not 1 within 1e-6";
        throw PolySpecError(os.str(), s.size());
    }
    return DegreeDistribution(std::move(coeffs));
}

std::string poly_spec_string(const DegreeDistribution& d) {
    std::ostringstream os;
    os.precision(12);
    bool first = true;
    for (const auto& [deg, c] : d.coeffs()) {
        if (!first) os << " + ";
        first = false;
        if (c != 1.0) os << c << "*";
        os << "x";
        if (deg - 1 != 1) os << "^" << deg - 1;
    }
    return os.str();
}

}  // namespace ldpcopt
