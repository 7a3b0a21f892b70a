#include <doctest.h>

#include "poscert/mvpoly.hpp"
#include "test_util.hpp"

using namespace poscert;
using testutil::motzkin;
using testutil::random_point;
using testutil::random_poly;

TEST_CASE("eval examples") {
    MvPoly f = parse_poly("x1^2*x2 - 3", 2);
    CHECK(f.eval({Rat(2), Rat(1)}) == 1);

    MvPoly z(2);
    CHECK(z.eval({Rat(5), Rat(-7)}) == 0);

    MvPoly g = parse_poly("x1^2-4*x1+3", 1);
    CHECK(g.eval({Rat(2)}) == -1);

    CHECK_THROWS_AS(g.eval({Rat(1), Rat(2)}), std::invalid_argument);
}

TEST_CASE("gradient examples") {
    MvPoly f = parse_poly("x1^2+x2^2", 2);
    auto g = f.gradient();
    CHECK(g[0] == parse_poly("2*x1", 2));
    CHECK(g[1] == parse_poly("2*x2", 2));

    MvPoly c = MvPoly::constant(3, Rat(7));
    for (const auto& gi : c.gradient()) CHECK(gi.is_zero());

    MvPoly h = parse_poly("x1^3*x2", 2);
    auto gh = h.gradient();
    CHECK(gh[0] == parse_poly("3*x1^2*x2", 2));
    CHECK(gh[1] == parse_poly("x1^3", 2));
}

TEST_CASE("homogenize examples") {
    MvPoly f = parse_poly("x1^2+1", 1);
    MvPoly fh = f.homogenize(2);
    // X0 is prepended: in the 2-variable print, x1 is X0 and x2 is X1
    CHECK(fh == parse_poly("x2^2 + x1^2", 2));

    MvPoly g = parse_poly("x1*x2-1", 2);
    MvPoly gh = g.homogenize(4);
    CHECK(gh == parse_poly("x1^2*x2*x3 - x1^4", 3));

    CHECK_THROWS_AS(f.homogenize(1), std::invalid_argument);
}

TEST_CASE("homogenize round trip on random polynomials") {
    SplitMix64 rng(41);
    for (int it = 0; it < 50; ++it) {
        MvPoly f = random_poly(rng, 2, 4, 5);
        uint32_t d = static_cast<uint32_t>(f.degree());
        MvPoly fh = f.homogenize(d);
        CHECK(fh.dehomogenize_at_one() == f);
        // eval identity at (1, x)
        auto x = random_point(rng, 2);
        std::vector<Rat> x1 = {Rat(1), x[0], x[1]};
        CHECK(fh.eval(x1) == f.eval(x));
    }
}

TEST_CASE("top_part examples") {
    CHECK(parse_poly("x1^4-2*x1^2+2", 1).top_part() == parse_poly("x1^4", 1));
    CHECK(motzkin().top_part() == parse_poly("x1^4*x2^2+x1^2*x2^4", 2));
    CHECK(parse_poly("x1^2+x2^2+4", 2).top_part() == parse_poly("x1^2+x2^2", 2));
    CHECK_THROWS_AS(MvPoly(2).top_part(), std::invalid_argument);
}

TEST_CASE("norms examples") {
    MvPoly m = motzkin();
    CHECK(m.height() == 3);
    CHECK(m.height_bitsize() == 2);
    CHECK(m.one_norm() == 6);

    MvPoly z(1);
    CHECK(z.height() == 0);
    CHECK(z.height_bitsize() == 0);
    CHECK(z.one_norm() == 0);

    MvPoly f = MvPoly::monomial(Mono::var(0, 1), make_rat(5, 2));
    CHECK(f.height() == 5);
    CHECK(f.one_norm() == make_rat(5, 2));
}

TEST_CASE("parse examples") {
    CHECK(parse_poly("x1^2*x2^4 + x1^4*x2^2 - 3*x1^2*x2^2 + 1", 2) == motzkin());
    CHECK(parse_poly("-1/2*x1 + x1", 1) ==
          MvPoly::monomial(Mono::var(0, 1), make_rat(1, 2)));
    CHECK_THROWS_AS(parse_poly("x3+1", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("2*+x1", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("", 1), ParseError);
}

TEST_CASE("serialize-parse round trip on random polynomials") {
    SplitMix64 rng(42);
    for (int it = 0; it < 100; ++it) {
        std::size_t n = 1 + rng.below(3);
        MvPoly f = random_poly(rng, n, 5, 6);
        std::string s = to_string(f);
        CHECK(parse_poly(s, n) == f);
    }
}

TEST_CASE("ring axioms on random triples") {
    SplitMix64 rng(43);
    for (int it = 0; it < 50; ++it) {
        MvPoly a = random_poly(rng, 2, 3, 4);
        MvPoly b = random_poly(rng, 2, 3, 4);
        MvPoly c = random_poly(rng, 2, 3, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("degree is multiplicative over Q") {
    SplitMix64 rng(44);
    for (int it = 0; it < 50; ++it) {
        MvPoly a = random_poly(rng, 2, 4, 4);
        MvPoly b = random_poly(rng, 2, 4, 4);
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("gradient is linear") {
    SplitMix64 rng(45);
    for (int it = 0; it < 50; ++it) {
        MvPoly a = random_poly(rng, 3, 4, 4);
        MvPoly b = random_poly(rng, 3, 4, 4);
        auto ga = a.gradient(), gb = b.gradient(), gs = (a + b).gradient();
        for (std::size_t i = 0; i < 3; ++i) CHECK(gs[i] == ga[i] + gb[i]);
    }
}

TEST_CASE("height product sanity bound") {
    SplitMix64 rng(46);
    for (int it = 0; it < 50; ++it) {
        MvPoly a = random_poly(rng, 2, 3, 4);
        MvPoly b = random_poly(rng, 2, 3, 4);
        Int lhs = (a * b).height();
        Int rhs = Int(static_cast<long>(a.term_count())) * a.height() * b.height();
        CHECK(lhs <= rhs);
    }
}

TEST_CASE("canonical term order is graded-lex descending") {
    MvPoly f = parse_poly("1 + x2 + x1 + x2^2 + x1*x2 + x1^2", 2);
    CHECK(to_string(f) == "x1^2 + x1*x2 + x2^2 + x1 + x2 + 1");
}

TEST_CASE("shift by integer vector") {
    MvPoly f = parse_poly("x1^2-4*x1+3", 1);
    MvPoly g = f.shifted({Int(2)});
    // f(x+2) = (x+2)^2 - 4(x+2) + 3 = x^2 - 1
    CHECK(g == parse_poly("x1^2-1", 1));
    SplitMix64 rng(47);
    for (int it = 0; it < 20; ++it) {
        MvPoly h = random_poly(rng, 2, 4, 5);
        std::vector<Int> c = {Int(rng.range(-3, 3)), Int(rng.range(-3, 3))};
        auto x = random_point(rng, 2);
        std::vector<Rat> xc = {x[0] + Rat(c[0]), x[1] + Rat(c[1])};
        CHECK(h.shifted(c).eval(x) == h.eval(xc));
    }
}
