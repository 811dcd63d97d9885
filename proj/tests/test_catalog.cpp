#include <doctest.h>

#include "spbw/catalog.hpp"
#include "spbw/classify.hpp"
#include "spbw/error.hpp"
#include "spbw/homcheck.hpp"
#include "spbw/io.hpp"
#include "spbw/rewriting.hpp"

using namespace spbw;

TEST_CASE("instantiate") {
    SUBCASE("weyl(1)") {
        const Presentation p = instantiate("weyl");
        CHECK(p.var_names() == std::vector<std::string>{"x", "y"});
        CHECK(to_string(normal_form({WordToken::generator(1), WordToken::generator(0)}, p), p) == "x*y + 1");
    }
    SUBCASE("weyl(3) has the Kronecker tail only on matching pairs") {
        const Presentation p = instantiate("weyl", {{"n", Rational(3)}});
        Multiplier m(p);
        CHECK(to_string(m.mul(m.generator(4), m.generator(1)), p) == "x2*y2 + 1");
        CHECK(to_string(m.mul(m.generator(4), m.generator(0)), p) == "x1*y2");
    }
    SUBCASE("additive analogue over Q[x]") {
        const Presentation p = instantiate("additive_analogue", {{"q", Rational(3)}, {"over_poly", Rational(1)}});
        CHECK(p.ring().generators == std::vector<std::string>{"x"});
        const CommPoly x = CommPoly::generator(1, 0);
        CHECK(p.twist(0).sigma.images[0] == Rational(3) * x);
        CHECK(p.twist(0).delta.values[0] == CommPoly(1, Rational(1)));
    }
    SUBCASE("multiplicative analogue") {
        const Presentation p = instantiate("multiplicative_analogue", {{"l2_1", Rational(2)}});
        Multiplier m(p);
        CHECK(to_string(m.mul(m.generator(1), m.generator(0)), p) == "2*x1*x2");
        const auto full = full_lambda({{Rational(1), Rational(1)}, {Rational(2), Rational(1)}});
        CHECK(full[0][1] == Rational(1, 2));
        CHECK(full[0][0] == Rational(1));
    }
    SUBCASE("q_dilation(2, 1, 5)") {
        const Presentation p = instantiate("q_dilation", {{"n", Rational(2)}, {"m", Rational(1)}, {"q", Rational(5)}});
        CHECK(to_string(parse_element("H*t1", p), p) == "5*t1*H");
        CHECK(to_string(parse_element("H*t2", p), p) == "t2*H");
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(instantiate("additive_analogue", {{"q", Rational(0)}}), PreconditionError);
        CHECK_THROWS_AS(instantiate("multiplicative_analogue", {{"l2_1", Rational(0)}}), PreconditionError);
        CHECK_THROWS_AS(instantiate("q_dilation", {{"n", Rational(1)}, {"m", Rational(2)}, {"q", Rational(2)}}),
                        PreconditionError);
        CHECK_THROWS_AS(instantiate("q_dilation", {{"q", Rational(0)}}), PreconditionError);
        CHECK_THROWS_AS(instantiate("weyl", {{"k", Rational(1)}}), PreconditionError);
        CHECK_THROWS_AS(instantiate("diffusion"), PreconditionError);
    }
}

TEST_CASE("catalog classification") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const Presentation p = instantiate(name, name == "q_dilation" ? CatalogParams{{"q", Rational(2)}} : CatalogParams{});
        CHECK(diamond_check(p, 4).ok);
    }
    const ClassFlags w = classify_flags(weyl(2));
    CHECK(w.constant);
    CHECK_FALSE(w.quasi_commutative);
    for (const Presentation& p :
         {q_dilation(3, 2, Rational(2)), multiplicative_analogue({{Rational(1), Rational(1)}, {Rational(9), Rational(1)}})}) {
        CHECK(classify_flags(p).quasi_commutative);
        CHECK(graded_check(p).graded);
        CHECK(connected_check(p));
    }
}

TEST_CASE("witness registry") {
    CHECK(witness_names().size() == 3);
    const Witness w = witness("weyl_tensor");
    CHECK(w.source.nvars() == 4);
    CHECK(check_graded_iso(w.source, w.target, w.images, 4).iso);
    CHECK_THROWS_AS(witness("nope"), PreconditionError);
}
