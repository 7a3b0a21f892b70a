#include "poscert/mvpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace poscert {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t start = 0;
    if (s[0] == '+' || s[0] == '-') start = 1;
    bool seen_digit = false, seen_slash = false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] == '/') {
            if (seen_slash || !seen_digit) throw std::invalid_argument("bad rational literal: " + s);
            seen_slash = true;
            seen_digit = false;
        } else if (s[i] >= '0' && s[i] <= '9') {
            seen_digit = true;
        } else {
            throw std::invalid_argument("bad rational literal: " + s);
        }
    }
    if (!seen_digit) throw std::invalid_argument("bad rational literal: " + s);
    Rat r(s);
    r.canonicalize();
    if (r.get_den() <= 0) throw std::invalid_argument("bad rational literal: " + s);
    return r;
}

MvPoly MvPoly::constant(std::size_t nvars, const Rat& c) {
    MvPoly f(nvars);
    if (c != 0) f.terms_.emplace(Mono(nvars), c);
    return f;
}

MvPoly MvPoly::variable(std::size_t i, std::size_t nvars) {
    MvPoly f(nvars);
    f.terms_.emplace(Mono::var(i, nvars), Rat(1));
    return f;
}

MvPoly MvPoly::monomial(const Mono& m, const Rat& c) {
    MvPoly f(m.nvars());
    if (c != 0) f.terms_.emplace(m, c);
    return f;
}

bool MvPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

long MvPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long>(terms_.begin()->first.degree());
}

const Mono& MvPoly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading_monomial of zero polynomial");
    return terms_.begin()->first;
}

const Rat& MvPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
    return terms_.begin()->second;
}

Rat MvPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MvPoly::set_coeff(const Mono& m, const Rat& c) {
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

void MvPoly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MvPoly MvPoly::operator-() const {
    MvPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MvPoly& MvPoly::operator+=(const MvPoly& g) {
    if (nvars_ != g.nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
}

MvPoly& MvPoly::operator-=(const MvPoly& g) {
    if (nvars_ != g.nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [m, c] : g.terms_) add_term(m, -c);
    return *this;
}

MvPoly MvPoly::operator+(const MvPoly& g) const {
    MvPoly r = *this;
    r += g;
    return r;
}

MvPoly MvPoly::operator-(const MvPoly& g) const {
    MvPoly r = *this;
    r -= g;
    return r;
}

MvPoly MvPoly::operator*(const MvPoly& g) const {
    if (nvars_ != g.nvars_) throw std::invalid_argument("variable count mismatch");
    MvPoly r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : g.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MvPoly MvPoly::scaled(const Rat& c) const {
    MvPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
    return r;
}

MvPoly MvPoly::mul_term(const Mono& m, const Rat& c) const {
    MvPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [mm, coef] : terms_) r.terms_.emplace(mm * m, coef * c);
    return r;
}

MvPoly MvPoly::pow(unsigned e) const {
    MvPoly r = MvPoly::constant(nvars_, Rat(1));
    MvPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Rat MvPoly::eval(const std::vector<Rat>& x) const {
    if (x.size() != nvars_) throw std::invalid_argument("point dimension mismatch");
    // per-variable power tables
    std::vector<uint32_t> maxexp(nvars_, 0);
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i) maxexp[i] = std::max(maxexp[i], m.e[i]);
    std::vector<std::vector<Rat>> pw(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        pw[i].resize(maxexp[i] + 1);
        pw[i][0] = 1;
        for (uint32_t k = 1; k <= maxexp[i]; ++k) pw[i][k] = pw[i][k - 1] * x[i];
    }
    Rat out(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m.e[i]) t *= pw[i][m.e[i]];
        out += t;
    }
    return out;
}

MvPoly MvPoly::derivative(std::size_t i) const {
    MvPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.e[i] == 0) continue;
        Mono d = m;
        d.e[i] -= 1;
        r.add_term(d, c * Rat(static_cast<long>(m.e[i])));
    }
    return r;
}

std::vector<MvPoly> MvPoly::gradient() const {
    std::vector<MvPoly> g;
    g.reserve(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) g.push_back(derivative(i));
    return g;
}

MvPoly MvPoly::homogenize(uint32_t total_degree) const {
    long d = degree();
    if (d >= 0 && total_degree < static_cast<uint32_t>(d))
        throw std::invalid_argument("homogenize: requested degree below deg f");
    MvPoly r(nvars_ + 1);
    for (const auto& [m, c] : terms_) {
        Mono h(nvars_ + 1);
        h.e[0] = total_degree - m.degree();
        for (std::size_t i = 0; i < nvars_; ++i) h.e[i + 1] = m.e[i];
        r.terms_.emplace(h, c);
    }
    return r;
}

MvPoly MvPoly::dehomogenize_at_one() const {
    if (nvars_ == 0) throw std::logic_error("dehomogenize: no variables");
    MvPoly r(nvars_ - 1);
    for (const auto& [m, c] : terms_) {
        Mono d(nvars_ - 1);
        for (std::size_t i = 1; i < nvars_; ++i) d.e[i - 1] = m.e[i];
        r.add_term(d, c);
    }
    return r;
}

MvPoly MvPoly::top_part() const {
    if (terms_.empty()) throw std::invalid_argument("top_part of zero polynomial");
    uint32_t d = terms_.begin()->first.degree();
    MvPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.degree() != d) break;  // descending graded order
        r.terms_.emplace(m, c);
    }
    return r;
}

MvPoly MvPoly::shifted(const std::vector<Int>& c) const {
    if (c.size() != nvars_) throw std::invalid_argument("shift dimension mismatch");
    MvPoly cur = *this;
    for (std::size_t i = 0; i < nvars_; ++i) {
        if (c[i] == 0) continue;
        // substitute X_i -> X_i + c_i via binomial expansion
        MvPoly next(nvars_);
        for (const auto& [m, coef] : cur.terms_) {
            uint32_t k = m.e[i];
            Mono base = m;
            base.e[i] = 0;
            Int binom(1);
            Int cpow(1);
            // (X+c)^k = sum_j C(k,j) c^(k-j) X^j, iterate j = k..0
            std::vector<Rat> row(k + 1);
            for (long j = k; j >= 0; --j) {
                Int coefj;
                mpz_bin_uiui(coefj.get_mpz_t(), k, static_cast<unsigned long>(j));
                Int cp = int_pow(c[i], static_cast<unsigned long>(k - j));
                row[j] = Rat(coefj * cp);
            }
            for (uint32_t j = 0; j <= k; ++j) {
                if (row[j] == 0) continue;
                Mono mm = base;
                mm.e[i] = j;
                next.add_term(mm, coef * row[j]);
            }
        }
        cur = next;
    }
    return cur;
}

MvPoly MvPoly::prepend_vars(std::size_t k) const {
    MvPoly r(nvars_ + k);
    for (const auto& [m, c] : terms_) {
        Mono mm(nvars_ + k);
        for (std::size_t i = 0; i < nvars_; ++i) mm.e[i + k] = m.e[i];
        r.terms_.emplace(mm, c);
    }
    return r;
}

Int MvPoly::height() const {
    Int h(0);
    for (const auto& [m, c] : terms_) {
        Int hc = poscert::height(c);
        if (hc > h) h = hc;
    }
    return h;
}

long MvPoly::height_bitsize() const { return bitsize(height()); }

Rat MvPoly::one_norm() const {
    Rat s(0);
    for (const auto& [m, c] : terms_) s += abs(c);
    return s;
}

bool MvPoly::has_integer_coeffs() const {
    for (const auto& [m, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

Int MvPoly::denominator_lcm() const {
    Int l(1);
    for (const auto& [m, c] : terms_) {
        Int d = c.get_den();
        Int g = gcd(l, d);
        l = l / g * d;
    }
    return l;
}

Int MvPoly::integer_content() const {
    Int g(0);
    for (const auto& [m, c] : terms_) g = gcd(g, Int(c.get_num()));
    return abs(g);
}

MvPoly MvPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    MvPoly f = scaled(Rat(denominator_lcm()));
    Int cont = f.integer_content();
    if (cont != 0 && cont != 1) f = f.scaled(Rat(Int(1), cont));
    if (f.leading_coeff() < 0) f = f.scaled(Rat(-1));
    return f;
}

MvPoly MvPoly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(Rat(1) / leading_coeff());
}

}  // namespace poscert
