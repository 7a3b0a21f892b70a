#include <doctest.h>

#include "poscert/rng.hpp"
#include "poscert/unipoly.hpp"

using namespace poscert;

namespace {

UvPoly from_ints(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return UvPoly(std::move(v));
}

UvPoly random_upoly(SplitMix64& rng, long deg, long bound = 9) {
    std::vector<Rat> c(deg + 1);
    for (auto& x : c) x = Rat(rng.range(-bound, bound));
    if (c.back() == 0) c.back() = 1;
    return UvPoly(std::move(c));
}

}  // namespace

TEST_CASE("divrem and gcd") {
    UvPoly a = from_ints({-1, 0, 1});        // T^2 - 1
    UvPoly b = from_ints({1, 1});            // T + 1
    auto [q, r] = a.divrem(b);
    CHECK(q == from_ints({-1, 1}));
    CHECK(r.is_zero());
    CHECK(UvPoly::gcd(a, b) == b.monic());

    SplitMix64 rng(7);
    for (int it = 0; it < 40; ++it) {
        UvPoly f = random_upoly(rng, 6);
        UvPoly g = random_upoly(rng, 3);
        auto [qq, rr] = f.divrem(g);
        CHECK(qq * g + rr == f);
        CHECK(rr.degree() < g.degree());
    }
}

TEST_CASE("squarefree decomposition (Yun)") {
    // (T-1)^2 (T+2)^3 * 5
    UvPoly f = from_ints({-1, 1}).pow(2) * from_ints({2, 1}).pow(3) * UvPoly::constant(Rat(5));
    auto [lc, factors] = f.squarefree_decomposition();
    CHECK(lc == 5);
    REQUIRE(factors.size() == 3);
    CHECK(factors[0].degree() == 0);  // multiplicity 1: nothing
    CHECK(factors[1] == from_ints({-1, 1}));
    CHECK(factors[2] == from_ints({2, 1}));
    // reassembly
    UvPoly re = UvPoly::constant(lc);
    for (std::size_t i = 0; i < factors.size(); ++i)
        re = re * factors[i].pow(static_cast<unsigned>(i + 1));
    CHECK(re == f);

    CHECK(f.squarefree_part() == (from_ints({-1, 1}) * from_ints({2, 1})).monic());
}

TEST_CASE("sturm root counting matches brute-force sign scanning") {
    SplitMix64 rng(8);
    int checked = 0;
    for (int it = 0; it < 200 && checked < 50; ++it) {
        UvPoly f = random_upoly(rng, 2 + static_cast<long>(rng.below(7)));
        // brute force: scan a fine rational grid for sign changes, which
        // lower-bounds the true root count; with well-separated roots the
        // two agree
        long grid_changes = 0;
        Rat b = root_bound(f);
        long steps = 400;
        int prev = 0;
        bool hit_zero_on_grid = false;
        for (long i = 0; i <= steps; ++i) {
            Rat x = -b + (2 * b) * Rat(i) / Rat(steps);
            int s = sign_at(f, x);
            if (s == 0) hit_zero_on_grid = true;
            if (prev != 0 && s != 0 && s != prev) ++grid_changes;
            if (s != 0) prev = s;
        }
        if (hit_zero_on_grid) continue;
        long sturm = count_real_roots(f);
        CHECK(sturm >= grid_changes);
        // verify by isolating: each isolating interval must flip the sign
        // or contain an even-multiplicity root; for squarefree f intervals
        // and count agree
        UvPoly sf = f.squarefree_part();
        auto iv = isolate_real_roots(sf);
        CHECK(static_cast<long>(iv.size()) == count_real_roots(sf));
        ++checked;
    }
    CHECK(checked >= 50);
}

TEST_CASE("isolating intervals separate the roots") {
    // roots at -3, 1/2, 2
    UvPoly f =
        from_ints({3, 1}) * UvPoly(std::vector<Rat>{make_rat(-1, 2), Rat(1)}) * from_ints({-2, 1});
    auto iv = isolate_real_roots(f);
    REQUIRE(iv.size() == 3);
    CHECK(sign_at(f, iv[0].first) * sign_at(f, iv[0].second) <= 0);
    for (std::size_t i = 0; i + 1 < iv.size(); ++i) CHECK(iv[i].second <= iv[i + 1].first);
}
