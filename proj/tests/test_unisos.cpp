#include <doctest.h>

#include "poscert/rng.hpp"
#include "poscert/unisos.hpp"

using namespace poscert;

namespace {

UvPoly from_ints(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return UvPoly(std::move(v));
}

UvPoly random_upoly(SplitMix64& rng, long deg, long bound = 5) {
    std::vector<Rat> c(deg + 1);
    for (auto& x : c) x = Rat(rng.range(-bound, bound));
    if (c.back() == 0) c.back() = 1;
    return UvPoly(std::move(c));
}

}  // namespace

TEST_CASE("nonnegativity decision examples") {
    CHECK(is_nonneg_univariate(from_ints({1, 0, 1}).pow(2)));        // (T^2+1)^2
    CHECK(is_nonneg_univariate(from_ints({2, -2, 1})));              // (T-1)^2 + 1
    CHECK(!is_nonneg_univariate(from_ints({0, 0, 0, 1})));           // T^3
    CHECK(is_nonneg_univariate(UvPoly()));                           // 0
    CHECK(is_nonneg_univariate(UvPoly::constant(Rat(3))));
    CHECK(!is_nonneg_univariate(UvPoly::constant(Rat(-1))));
    CHECK(is_nonneg_univariate(from_ints({0, 0, 1})));               // T^2, double root
    CHECK(!is_nonneg_univariate(from_ints({-1, 0, 1})));             // T^2 - 1
    CHECK(!is_nonneg_univariate(from_ints({0, 0, -1})));             // -T^2
}

TEST_CASE("nonnegativity agrees with dense grid evaluation") {
    SplitMix64 rng(25);
    for (int it = 0; it < 60; ++it) {
        UvPoly f = random_upoly(rng, 2 * (1 + static_cast<long>(rng.below(3))));
        bool nn = is_nonneg_univariate(f);
        Rat b = root_bound(f) + 1;
        bool grid_negative = false;
        for (long i = 0; i <= 240; ++i) {
            Rat x = -b + (2 * b) * Rat(i) / Rat(240);
            if (f.eval(x) < 0) {
                grid_negative = true;
                break;
            }
        }
        if (nn) CHECK(!grid_negative);
        if (grid_negative) CHECK(!nn);
    }
}

TEST_CASE("decomposition short-circuits") {
    // perfect square
    WeightedSos s1 = weighted_sos_decompose(from_ints({1, 0, 1}).pow(2));
    REQUIRE(s1.weights.size() == 1);
    CHECK(s1.weights[0] == 1);
    CHECK(s1.squares[0] == from_ints({1, 0, 1}));
    CHECK(s1.expand() == from_ints({1, 0, 1}).pow(2));

    // diagonal
    WeightedSos s2 = weighted_sos_decompose(from_ints({2, 0, 2}));
    REQUIRE(s2.weights.size() == 2);
    CHECK(s2.weights[0] == 2);
    CHECK(s2.weights[1] == 2);
    CHECK(s2.expand() == from_ints({2, 0, 2}));
}

TEST_CASE("decomposition rejects bad input") {
    CHECK_THROWS_AS(weighted_sos_decompose(UvPoly()), std::invalid_argument);
    CHECK_THROWS_AS(weighted_sos_decompose(from_ints({-1, 0, 1})), std::invalid_argument);
}

TEST_CASE("generator-as-oracle round trip") {
    SplitMix64 rng(26);
    for (int it = 0; it < 50; ++it) {
        // build sum of random weighted squares
        UvPoly target;
        long terms = 1 + static_cast<long>(rng.below(3));
        for (long j = 0; j < terms; ++j) {
            UvPoly q = random_upoly(rng, 1 + static_cast<long>(rng.below(3)));
            Rat w = make_rat(1 + static_cast<long>(rng.below(9)), 1 + rng.below(5));
            target = target + (q * q).scaled(w);
        }
        REQUIRE(is_nonneg_univariate(target));
        WeightedSos sos = weighted_sos_decompose(target);
        CHECK(sos.expand() == target);
        for (const auto& w : sos.weights) CHECK(w > 0);
    }
}

TEST_CASE("decomposition handles strictly positive non-square inputs") {
    // T^4 + T + 1 is positive but neither a square nor diagonal
    UvPoly f = from_ints({1, 1, 0, 0, 1});
    REQUIRE(is_nonneg_univariate(f));
    WeightedSos sos = weighted_sos_decompose(f);
    CHECK(sos.expand() == f);

    // zeros of even multiplicity in the middle
    UvPoly g = from_ints({-1, 1}).pow(2) * from_ints({1, 1, 1});
    REQUIRE(is_nonneg_univariate(g));
    WeightedSos sg = weighted_sos_decompose(g);
    CHECK(sg.expand() == g);
}
