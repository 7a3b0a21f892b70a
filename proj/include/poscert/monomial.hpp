#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace poscert {

// Exponent vector of a monomial; length = number of variables.
struct Mono {
    std::vector<uint32_t> e;

    Mono() = default;
    explicit Mono(std::size_t nvars) : e(nvars, 0) {}
    explicit Mono(std::vector<uint32_t> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }

    uint32_t degree() const {
        return std::accumulate(e.begin(), e.end(), uint32_t{0});
    }

    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }

    bool divides(const Mono& b) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > b.e[i]) return false;
        return true;
    }

    Mono operator*(const Mono& b) const {
        Mono r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + b.e[i];
        return r;
    }

    // Quotient, only valid when b divides *this.
    Mono operator/(const Mono& b) const {
        Mono r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - b.e[i];
        return r;
    }

    bool operator==(const Mono& b) const { return e == b.e; }
    bool operator!=(const Mono& b) const { return e != b.e; }

    static Mono lcm(const Mono& a, const Mono& b) {
        Mono r(a.e.size());
        for (std::size_t i = 0; i < a.e.size(); ++i)
            r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        return r;
    }

    static Mono var(std::size_t i, std::size_t nvars, uint32_t pow = 1) {
        Mono r(nvars);
        r.e[i] = pow;
        return r;
    }
};

// Graded lexicographic order with X1 > X2 > ... > Xn.
// Returns <0, 0, >0 like a three-way comparison (a vs b).
inline int grlex_cmp(const Mono& a, const Mono& b) {
    uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

struct GrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const { return grlex_cmp(a, b) > 0; }
};

struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const { return grlex_cmp(a, b) < 0; }
};

}  // namespace poscert
