#include "poscert/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace poscert {

void UvPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UvPoly UvPoly::constant(const Rat& a) {
    UvPoly p;
    if (a != 0) p.c_ = {a};
    return p;
}

UvPoly UvPoly::variable() { return UvPoly({Rat(0), Rat(1)}); }

UvPoly UvPoly::monomial(std::size_t k, const Rat& a) {
    UvPoly p;
    if (a != 0) {
        p.c_.assign(k + 1, Rat(0));
        p.c_[k] = a;
    }
    return p;
}

const Rat& UvPoly::leading_coeff() const {
    if (c_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
    return c_.back();
}

UvPoly UvPoly::operator-() const {
    UvPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

UvPoly UvPoly::operator+(const UvPoly& g) const {
    UvPoly r;
    r.c_.resize(std::max(c_.size(), g.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i) r.c_[i] += g.c_[i];
    r.trim();
    return r;
}

UvPoly UvPoly::operator-(const UvPoly& g) const { return *this + (-g); }

UvPoly UvPoly::operator*(const UvPoly& g) const {
    if (c_.empty() || g.c_.empty()) return UvPoly();
    UvPoly r;
    r.c_.assign(c_.size() + g.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < g.c_.size(); ++j) {
            if (g.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * g.c_[j];
        }
    }
    r.trim();
    return r;
}

UvPoly UvPoly::scaled(const Rat& a) const {
    if (a == 0) return UvPoly();
    UvPoly r = *this;
    for (auto& x : r.c_) x *= a;
    return r;
}

UvPoly UvPoly::shifted_pow(std::size_t k) const {
    if (c_.empty() || k == 0) return k == 0 ? *this : UvPoly();
    UvPoly r;
    r.c_.assign(c_.size() + k, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

UvPoly UvPoly::pow(unsigned e) const {
    UvPoly r = UvPoly::constant(Rat(1));
    UvPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Rat UvPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UvPoly UvPoly::derivative() const {
    if (c_.size() <= 1) return UvPoly();
    UvPoly r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rat(static_cast<long>(i));
    r.trim();
    return r;
}

std::pair<UvPoly, UvPoly> UvPoly::divrem(const UvPoly& g) const {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    UvPoly r = *this;
    UvPoly q;
    long dg = g.degree();
    if (r.degree() >= dg) q.c_.assign(static_cast<std::size_t>(r.degree() - dg) + 1, Rat(0));
    const Rat& lg = g.leading_coeff();
    while (!r.is_zero() && r.degree() >= dg) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - dg);
        Rat f = r.leading_coeff() / lg;
        q.c_[shift] += f;
        // r -= f * T^shift * g
        for (std::size_t i = 0; i < g.c_.size(); ++i)
            r.c_[i + shift] -= f * g.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

UvPoly UvPoly::monic() const {
    if (c_.empty()) return *this;
    return scaled(Rat(1) / c_.back());
}

UvPoly UvPoly::primitive_part() const {
    if (c_.empty()) return *this;
    Int den(1);
    for (const auto& a : c_) {
        Int d = a.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    UvPoly r = scaled(Rat(den));
    Int cont(0);
    for (const auto& a : r.c_) {
        Int num = a.get_num();
        mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), num.get_mpz_t());
    }
    cont = abs(cont);
    if (cont != 0 && cont != 1) r = r.scaled(Rat(Int(1), cont));
    if (r.leading_coeff() < 0) r = r.scaled(Rat(-1));
    return r;
}

UvPoly UvPoly::gcd(const UvPoly& a, const UvPoly& b) {
    UvPoly f = a.is_zero() ? a : a.primitive_part();
    UvPoly g = b.is_zero() ? b : b.primitive_part();
    while (!g.is_zero()) {
        UvPoly r = f.divrem(g).second;
        f = g;
        g = r.is_zero() ? r : r.primitive_part();
    }
    if (f.is_zero()) return f;
    return f.monic();
}

UvPoly UvPoly::squarefree_part() const {
    if (is_zero()) return *this;
    if (degree() == 0) return UvPoly::constant(Rat(1));
    UvPoly g = gcd(*this, derivative());
    return divrem(g).first.monic();
}

std::pair<Rat, std::vector<UvPoly>> UvPoly::squarefree_decomposition() const {
    if (is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    Rat lc = leading_coeff();
    UvPoly p = monic();
    std::vector<UvPoly> out;
    if (p.degree() == 0) return {lc, out};
    // Yun's algorithm
    UvPoly dp = p.derivative();
    UvPoly a = gcd(p, dp);
    UvPoly b = p.divrem(a).first;
    UvPoly c = dp.divrem(a).first;
    UvPoly d = c - b.derivative();
    while (true) {
        UvPoly fi = gcd(b, d);
        out.push_back(fi.monic());
        if (b.degree() == fi.degree()) break;
        b = b.divrem(fi).first;
        c = d.divrem(fi).first;
        d = c - b.derivative();
        if (b.degree() == 0) break;
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return {lc, out};
}

Int UvPoly::height() const {
    Int h(0);
    for (const auto& a : c_) {
        Int ha = poscert::height(a);
        if (ha > h) h = ha;
    }
    return h;
}

Rat UvPoly::one_norm() const {
    Rat s(0);
    for (const auto& a : c_) s += abs(a);
    return s;
}

std::string UvPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rat a = abs(c_[i]);
        bool neg = c_[i] < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (i == 0) {
            out += rat_to_string(a);
        } else {
            std::string v = var + (i > 1 ? "^" + std::to_string(i) : "");
            out += (a == 1) ? v : rat_to_string(a) + "*" + v;
        }
    }
    return out;
}

// ---- Sturm machinery ----

namespace {

// Scale by a positive rational so coefficients are integers with content 1;
// the sign pattern is preserved.
UvPoly positive_primitive(const UvPoly& p) {
    if (p.is_zero()) return p;
    UvPoly q = p.primitive_part();
    return p.leading_coeff() < 0 ? -q : q;
}

}  // namespace

std::vector<UvPoly> sturm_chain(const UvPoly& p) {
    std::vector<UvPoly> chain;
    UvPoly f = p.squarefree_part();
    if (f.is_zero() || f.degree() == 0) return chain;
    chain.push_back(f);
    chain.push_back(f.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UvPoly r = chain[chain.size() - 2].divrem(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(positive_primitive(-r));
    }
    return chain;
}

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int sign_at(const UvPoly& p, const Rat& x) { return sign_of(p.eval(x)); }

int sign_at_pos_inf(const UvPoly& p) {
    if (p.is_zero()) return 0;
    return sign_of(p.leading_coeff());
}

int sign_at_neg_inf(const UvPoly& p) {
    if (p.is_zero()) return 0;
    int s = sign_of(p.leading_coeff());
    return (p.degree() % 2 == 0) ? s : -s;
}

namespace {

long sign_variations(const std::vector<int>& signs) {
    long v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

long variations_at(const std::vector<UvPoly>& chain, const Rat& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) signs.push_back(sign_at(p, x));
    return sign_variations(signs);
}

long variations_at_inf(const std::vector<UvPoly>& chain, bool positive) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain)
        signs.push_back(positive ? sign_at_pos_inf(p) : sign_at_neg_inf(p));
    return sign_variations(signs);
}

}  // namespace

long count_real_roots(const std::vector<UvPoly>& chain, const Rat& a, const Rat& b) {
    if (chain.empty()) return 0;
    return variations_at(chain, a) - variations_at(chain, b);
}

long count_real_roots(const UvPoly& p) {
    if (p.is_zero() || p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    return variations_at_inf(chain, false) - variations_at_inf(chain, true);
}

Rat root_bound(const UvPoly& p) {
    if (p.is_zero() || p.degree() == 0) return Rat(0);
    Rat m(0);
    const auto& c = p.coeffs();
    const Rat& lc = p.leading_coeff();
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        Rat q = abs(c[i] / lc);
        if (q > m) m = q;
    }
    return m + 1;
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UvPoly& p) {
    std::vector<std::pair<Rat, Rat>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    auto chain = sturm_chain(p);
    Rat bound = root_bound(p);
    // stack of (a, b, count in (a,b])
    struct Item { Rat a, b; long cnt; };
    std::vector<Item> stack;
    long total = count_real_roots(chain, -bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.cnt == 1) {
            out.push_back({it.a, it.b});
            continue;
        }
        Rat mid = (it.a + it.b) / 2;
        long left = count_real_roots(chain, it.a, mid);
        long right = it.cnt - left;
        if (left > 0) stack.push_back({it.a, mid, left});
        if (right > 0) stack.push_back({mid, it.b, right});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& u, const auto& v) { return u.first < v.first; });
    return out;
}

}  // namespace poscert
