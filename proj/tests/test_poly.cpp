#include <catch2/catch_amalgamated.hpp>

#include "perimap/gcd.hpp"
#include "perimap/mpoly.hpp"
#include "perimap/parser.hpp"
#include "perimap/ratfunc.hpp"
#include "test_util.hpp"

using namespace perimap;
using pmtest::proportional;
using pmtest::random_nonzero_poly;
using pmtest::random_poly;

TEST_CASE("basic arithmetic") {
    auto v = VarTable::make({"x"});
    MPoly x = MPoly::var(v, "x");
    MPoly one = MPoly::constant(v, Rat(1));

    CHECK((x + one) * (x - one) == x * x - one);
    CHECK((x + one) * MPoly::zero(v) == MPoly::zero(v));

    MPoly p = (x + one).pow(3);
    CHECK(p.str() == "x^3+3*x^2+3*x+1");
    CHECK(p.degree() == 3);
}

TEST_CASE("ring laws on random triples") {
    auto v = VarTable::make({"x", "y", "z"});
    Rng rng(7);
    for (int rep = 0; rep < 25; ++rep) {
        MPoly a = random_poly(rng, v), b = random_poly(rng, v), c = random_poly(rng, v);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("variable table mismatch is an error") {
    auto v1 = VarTable::make({"x"});
    auto v2 = VarTable::make({"y"});
    MPoly a = MPoly::var(v1, "x"), b = MPoly::var(v2, "y");
    CHECK_THROWS_AS(a + b, VarMismatchError);
}

TEST_CASE("gcd basics") {
    auto v = VarTable::make({"x"});
    MPoly x = MPoly::var(v, "x");
    MPoly one = MPoly::constant(v, Rat(1));

    // forced by factorization
    CHECK(poly_gcd(x * x - one, x * x + Rat(2) * x + one) == x + one);
    // gcd(p, 0) = primitive normalization of p
    MPoly p = rat(-6, 1) * x * x + rat(-9, 1) * x;
    CHECK(poly_gcd(p, MPoly::zero(v)) == Rat(2) * x * x + Rat(3) * x);
}

TEST_CASE("gcd divides both operands and is idempotent under normalization") {
    auto v = VarTable::make({"x", "y"});
    Rng rng(11);
    for (int rep = 0; rep < 15; ++rep) {
        MPoly a = random_nonzero_poly(rng, v, 3, 4);
        MPoly b = random_nonzero_poly(rng, v, 3, 4);
        MPoly m = random_nonzero_poly(rng, v, 2, 3);
        MPoly g = poly_gcd(a * m, b * m);
        CHECK(divides(g, a * m));
        CHECK(divides(g, b * m));
        CHECK(divides(m.primitive_part(), g));  // common factor survives
        CHECK(g.primitive_part() == g);         // already primitive
    }
}

TEST_CASE("content_strip") {
    auto v = VarTable::make({"x"});
    MPoly x = MPoly::var(v, "x");

    auto [stripped, content] = content_strip({Rat(2) * x, Rat(4) * x * x});
    REQUIRE(stripped.size() == 2);
    CHECK(stripped[0] == MPoly::constant(v, Rat(1)));
    CHECK(stripped[1] == Rat(2) * x);
    CHECK(content == Rat(2) * x);

    MPoly one = MPoly::constant(v, Rat(1));
    auto [s1, c1] = content_strip({Rat(3) * (x + one)});
    CHECK(s1[0] == one);
    CHECK(c1 == Rat(3) * (x + one));

    CHECK_THROWS_AS(content_strip({MPoly::zero(v)}), DegenerateError);
}

TEST_CASE("parse basics") {
    auto v = VarTable::make({"x1", "x2", "x3"});
    RatFunc f = parse_ratfunc("x1*(1-x2+x2*x3)/(1-x3+x3*x1)", v);
    MPoly x1 = MPoly::var(v, "x1"), x2 = MPoly::var(v, "x2"), x3 = MPoly::var(v, "x3");
    MPoly one = MPoly::constant(v, Rat(1));
    CHECK(f.num() == x1 * (one - x2 + x2 * x3));
    CHECK(f.den() == one - x3 + x3 * x1);

    CHECK(parse_ratfunc("0/(1+x1)", v).is_zero());
    CHECK(parse_ratfunc("0/(1+x1)", v).den() == one);

    RatFunc g = parse_ratfunc("(x1^2-1)/(x1-1)", v);
    CHECK(g.num() == x1 + one);
    CHECK(g.den() == one);
}

TEST_CASE("parse errors carry a position") {
    auto v = VarTable::make({"x"});
    CHECK_THROWS_AS(parse_ratfunc("x + (y+1)", v), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("x + ", v), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("(x+1", v), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("x/(x-x)", v), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("x^(2)", v), ParseError);  // literal exponents only
    try {
        parse_ratfunc("x @ 2", v);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.pos == 2);
    }
}

TEST_CASE("parse/print round trip on random polynomials") {
    auto v = VarTable::make({"a", "b", "c"});
    Rng rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        MPoly p = random_poly(rng, v, 4, 7);
        CHECK(parse_poly(p.str(), v) == p);
    }
}

TEST_CASE("exact and complex evaluation") {
    auto v = VarTable::make({"x1", "x2", "x3"});
    RatFunc s = parse_ratfunc("(1-x1)*(1-x2)*(1-x3)", v);
    std::vector<Rat> pt = {Rat(2), Rat(3), Rat(5)};
    CHECK(s.eval_exact(pt) == Rat(-8));

    // H1 = sum_j x_j (1 - x_{j-1}) agrees with 1 - r - s, exactly and pointwise
    RatFunc h1 = parse_ratfunc("x1*(1-x3)+x2*(1-x1)+x3*(1-x2)", v);
    RatFunc r = parse_ratfunc("x1*x2*x3", v);
    RatFunc one = RatFunc::constant(v, Rat(1));
    CHECK(h1 == one - r - s);
    CHECK(h1.eval_exact(pt) == Rat(-21));

    std::vector<std::complex<double>> cpt = {{2, 0}, {3, 0}, {5, 0}};
    CHECK(std::abs(s.eval_c(cpt) - std::complex<double>(-8, 0)) < 1e-12);
}

TEST_CASE("pole detection") {
    auto v = VarTable::make({"x1", "x2", "x3"});
    RatFunc f = parse_ratfunc("x1*(1-x2+x2*x3)/(1-x3+x3*x1)", v);
    // 1 - x3 + x3 x1 = 0 at x1 = 0, x3 = 1
    std::vector<Rat> pt = {Rat(0), Rat(7), Rat(1)};
    CHECK_THROWS_AS(f.eval_exact(pt), PoleError);
    std::vector<std::complex<double>> cpt = {{0, 0}, {7, 0}, {1, 0}};
    CHECK_THROWS_AS(f.eval_c(cpt), PoleError);
}

TEST_CASE("evaluation is multiplicative at random rational points") {
    auto v = VarTable::make({"x", "y"});
    Rng rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        RatFunc f = RatFunc(random_nonzero_poly(rng, v), random_nonzero_poly(rng, v));
        RatFunc g = RatFunc(random_nonzero_poly(rng, v), random_nonzero_poly(rng, v));
        std::vector<Rat> pt = {rat(rng.uniform_int(2, 40), rng.uniform_int(1, 7)),
                               rat(rng.uniform_int(2, 40), rng.uniform_int(1, 7))};
        try {
            Rat lhs = (f * g).eval_exact(pt);
            CHECK(lhs == f.eval_exact(pt) * g.eval_exact(pt));
        } catch (const PoleError&) {
            // unlucky draw; nothing to check
        }
    }
}

TEST_CASE("ratfunc normalization invariants") {
    auto v = VarTable::make({"x", "y"});
    Rng rng(41);
    for (int rep = 0; rep < 10; ++rep) {
        RatFunc f(random_nonzero_poly(rng, v), random_nonzero_poly(rng, v));
        CHECK(poly_gcd(f.num(), f.den()).is_constant());
        CHECK(sgn(f.den().leading_coeff()) > 0);
        CHECK(f.den().content() == 1);
        // normalization is idempotent
        RatFunc g(f.num(), f.den());
        CHECK(g == f);
    }
}

TEST_CASE("derivative product rule") {
    auto v = VarTable::make({"x", "y"});
    Rng rng(53);
    MPoly a = random_poly(rng, v), b = random_poly(rng, v);
    CHECK((a * b).derivative(0) == a.derivative(0) * b + a * b.derivative(0));
}

TEST_CASE("polynomial square root") {
    auto v = VarTable::make({"x", "y"});
    MPoly x = MPoly::var(v, "x"), y = MPoly::var(v, "y");
    MPoly p = x + Rat(2) * y + MPoly::constant(v, Rat(3));
    CHECK(poly_sqrt(p * p) == p);
    CHECK(poly_sqrt(Rat(4) * p * p) == Rat(2) * p);
    CHECK_THROWS_AS(poly_sqrt(x * x + y), InexactDivisionError);
}

TEST_CASE("squarefree part") {
    auto v = VarTable::make({"r", "s"});
    MPoly s = MPoly::var(v, "s");
    MPoly one = MPoly::constant(v, Rat(1));
    MPoly p = (s + one) * (s + one) * s;
    CHECK(squarefree_part(p) == (s + one) * s);
    CHECK(squarefree_part((s + one) * (s + one)) == s + one);
}

TEST_CASE("double-double conversion and arithmetic") {
    Rat r = rat(1, 3);
    DD d = dd_from_rat(r);
    // hi+lo approximates 1/3 to ~1e-32
    DD three(3.0);
    DD back = d * three;
    CHECK(std::abs(back.to_double() - 1.0) < 1e-30);

    CDD z(0.0, 1.0);
    CDD w = cdd_sqrt(z * z);  // sqrt(-1) principal = i
    CHECK(std::abs(w.to_complex().real()) < 1e-30);
    CHECK(std::abs(w.to_complex().imag() - 1.0) < 1e-30);
}
