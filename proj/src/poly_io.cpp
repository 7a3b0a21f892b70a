#include <cctype>

#include "poscert/mvpoly.hpp"

namespace poscert {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        return s[i++];
    }
};

Int parse_uint(Cursor& c, const char* what) {
    c.skip_ws();
    std::size_t start = c.i;
    std::string digits;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        digits.push_back(c.s[c.i++]);
    if (digits.empty()) throw ParseError(std::string("expected ") + what, start);
    return Int(digits);
}

// coefficient: p or p/q in decimal digits
Rat parse_coeff(Cursor& c) {
    Int num = parse_uint(c, "number");
    if (c.peek() == '/') {
        c.take();
        Int den = parse_uint(c, "denominator");
        if (den == 0) throw ParseError("zero denominator", c.i);
        return make_rat(num, den);
    }
    return Rat(num);
}

// variable power: xk or xk^e
std::pair<std::size_t, uint32_t> parse_var_pow(Cursor& c, std::size_t nvars) {
    std::size_t pos = c.i;
    char v = c.take();
    if (v != 'x' && v != 'X') throw ParseError("expected variable", pos);
    Int idx = parse_uint(c, "variable index");
    if (idx < 1 || idx > static_cast<long>(nvars))
        throw ParseError("unknown variable x" + idx.get_str(), pos);
    uint32_t exp = 1;
    if (c.peek() == '^') {
        c.take();
        Int e = parse_uint(c, "exponent");
        if (e > 1000000) throw ParseError("exponent too large", c.i);
        exp = static_cast<uint32_t>(e.get_ui());
    }
    return {static_cast<std::size_t>(idx.get_ui()) - 1, exp};
}

}  // namespace

MvPoly parse_poly(const std::string& text, std::size_t nvars) {
    Cursor c{text};
    MvPoly f(nvars);
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            c.take();
            sign = (ch == '-') ? -1 : 1;
        } else if (!first) {
            throw ParseError("expected '+' or '-'", c.i);
        }
        // term: [coeff] ['*' varpow]* | varpow ['*' varpow]*
        Rat coef(1);
        Mono m(nvars);
        bool have_any = false;
        ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            coef = parse_coeff(c);
            have_any = true;
            while (c.peek() == '*') {
                c.take();
                auto [vi, e] = parse_var_pow(c, nvars);
                m.e[vi] += e;
            }
        } else if (ch == 'x' || ch == 'X') {
            auto [vi, e] = parse_var_pow(c, nvars);
            m.e[vi] += e;
            have_any = true;
            while (c.peek() == '*') {
                c.take();
                auto [vi2, e2] = parse_var_pow(c, nvars);
                m.e[vi2] += e2;
            }
        }
        if (!have_any) throw ParseError("expected term", c.i);
        f.add_term(m, sign < 0 ? Rat(-coef) : coef);
        first = false;
    }
    if (first) throw ParseError("empty polynomial", 0);
    return f;
}

std::size_t scan_max_var_index(const std::string& text) {
    std::size_t best = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if ((text[i] == 'x' || text[i] == 'X') &&
            std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            std::size_t j = i + 1, v = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                v = v * 10 + static_cast<std::size_t>(text[j] - '0');
                ++j;
            }
            best = std::max(best, v);
        }
    }
    return best;
}

std::string to_string(const MvPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rat a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;

        std::string vars;
        for (std::size_t i = 0; i < f.nvars(); ++i) {
            if (m.e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i + 1);
            if (m.e[i] > 1) vars += "^" + std::to_string(m.e[i]);
        }
        if (vars.empty()) {
            out += rat_to_string(a);
        } else if (a == 1) {
            out += vars;
        } else {
            out += rat_to_string(a) + "*" + vars;
        }
    }
    return out;
}

}  // namespace poscert
