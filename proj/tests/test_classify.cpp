#include <doctest.h>

#include "spbw/catalog.hpp"
#include "spbw/classify.hpp"
#include "spbw/error.hpp"
#include "spbw/io.hpp"
#include "support/samples.hpp"

using namespace spbw;

TEST_CASE("diamond_check") {
    SUBCASE("Weyl A2") {
        const DiamondResult d = diamond_check(weyl(2));
        CHECK(d.ok);
        CHECK(d.checked_to_degree == 4);
        CHECK_FALSE(d.witness);
    }
    SUBCASE("Jacobi-violating Lie presentation") {
        const Presentation p = samples::bad_lie();
        const DiamondResult d = diamond_check(p, 4);
        CHECK_FALSE(d.ok);
        REQUIRE(d.witness);
        CHECK(to_string(d.witness->word, p) == "x3*x2*x1");
        // the two reductions differ by a nonzero multiple of x3
        const SkewElement diff = d.witness->first - d.witness->second;
        REQUIRE(diff.term_count() == 1);
        CHECK(diff.terms().begin()->first == MultiIndex::unit(3, 2));
    }
    SUBCASE("quasi-commutative with scalar constants") {
        CHECK(diamond_check(multiplicative_analogue(samples::lambda3(Rational(2), Rational(3), Rational(5)))).ok);
    }
    SUBCASE("broken Leibniz data") {
        // sigma(t) = 2t, sigma(s) = s, delta(t) = s, delta(s) = 1:
        // d(ts) is 2t + s^2 one way and s^2 + t the other
        Presentation p("leib", CoeffRing::polynomial({"t", "s"}), {"x"});
        TwistData tw = TwistData::trivial(2);
        tw.sigma.images = {Rational(2) * CommPoly::generator(2, 0), CommPoly::generator(2, 1)};
        tw.sigma.inverse_images = std::vector<CommPoly>{Rational(1, 2) * CommPoly::generator(2, 0),
                                                        CommPoly::generator(2, 1)};
        tw.delta.values = {CommPoly::generator(2, 1), CommPoly(2, Rational(1))};
        p.set_twist(0, tw);
        const DiamondResult d = diamond_check(p);
        CHECK_FALSE(d.ok);
        CHECK(d.leibniz_failure);
    }
    SUBCASE("degree bound") {
        CHECK_THROWS_AS(diamond_check(weyl(1), 2), PreconditionError);
    }
    SUBCASE("every catalog algebra is confluent") {
        for (const auto& p : samples::catalog_algebras()) {
            CAPTURE(p.name());
            CHECK(diamond_check(p, 4).ok);
        }
    }
}

TEST_CASE("classify_flags") {
    const ClassFlags w = classify_flags(weyl(1));
    CHECK(w.constant);
    CHECK_FALSE(w.quasi_commutative);
    CHECK(w.bijective);

    CHECK(classify_flags(q_dilation(2, 1, Rational(5))).quasi_commutative);
    CHECK_FALSE(classify_flags(q_dilation(2, 1, Rational(5))).constant);

    const ClassFlags o = classify_flags(multiplicative_analogue(samples::lambda3(Rational(2), Rational(3), Rational(5))));
    CHECK(o.quasi_commutative);
    CHECK(o.bijective);

    Presentation p("noinv", CoeffRing::polynomial({"t"}), {"x"});
    TwistData tw = TwistData::trivial(1);
    tw.sigma.images = {CommPoly::generator(1, 0).pow(2)};
    tw.sigma.inverse_images.reset();
    p.set_twist(0, tw);
    const ClassFlags f = classify_flags(p);
    CHECK_FALSE(f.bijective);
    CHECK_FALSE(f.reasons.empty());
}

TEST_CASE("graded_check and connected_check") {
    CHECK_FALSE(graded_check(additive_analogue({Rational(3)}, true)).graded);
    CHECK(graded_check(multiplicative_analogue(samples::lambda3(Rational(2), Rational(3), Rational(5)))).graded);
    CHECK(graded_check(q_dilation(2, 2, Rational(3))).graded);
    CHECK_FALSE(graded_check(weyl(1)).graded);

    CHECK(connected_check(commutative(2)));
    CHECK(connected_check(q_dilation(1, 1, Rational(2))));
    Presentation p = parse_presentation("coeff poly rational t\ngrade t = 0\nvars x\n");
    CHECK_FALSE(connected_check(p));
}

TEST_CASE("cy_precondition") {
    const CyVerdict q = cy_precondition(q_dilation(2, 1, Rational(4)), true);
    CHECK(q.satisfied);
    CHECK(q.summary() == "satisfied");

    CHECK(cy_precondition(multiplicative_analogue(samples::lambda3(Rational(2), Rational(3), Rational(5))), true)
              .satisfied);

    const CyVerdict w = cy_precondition(weyl(1), true);
    CHECK_FALSE(w.satisfied);
    CHECK(w.summary() == "failed (quasi_commutative=false)");

    const CyVerdict unasserted = cy_precondition(q_dilation(2, 1, Rational(4)), false);
    CHECK(unasserted.summary() == "failed (base_is_skew_cy=false)");
    CHECK(std::string(kCyCertificateNote).find("Ext conditions not computed") != std::string::npos);
}

TEST_CASE("ore_tower") {
    const Presentation o3 = multiplicative_analogue(samples::lambda3(Rational(2), Rational(3), Rational(5)));
    const OreTower tower = ore_tower(o3);
    REQUIRE(tower.stages.size() == 3);
    for (std::size_t j = 0; j < 3; ++j) {
        REQUIRE(tower.stages[j].earlier_scalars.size() == j);
        for (std::size_t i = 0; i < j; ++i) {
            CHECK(tower.stages[j].earlier_scalars[i] == o3.c(i, j));
        }
    }
    CHECK(tower.stages[1].earlier_scalars[0] == CommPoly(0, Rational(2)));

    for (const auto& stage : ore_tower(commutative(3)).stages) {
        CHECK(stage.on_coefficients.is_identity());
        for (const auto& c : stage.earlier_scalars) {
            CHECK(c == CommPoly(0, Rational(1)));
        }
    }

    const OreTower qd = ore_tower(q_dilation(1, 1, Rational(7)));
    CHECK(qd.stages.at(0).on_coefficients.images.at(0) == Rational(7) * CommPoly::generator(1, 0));

    CHECK_THROWS_AS(ore_tower(weyl(1)), UnsupportedError);
}

TEST_CASE("growth") {
    CHECK(growth(commutative(1), 5) == std::vector<std::uint64_t>{1, 1, 1, 1, 1, 1});
    CHECK(growth(commutative(2), 3) == std::vector<std::uint64_t>{1, 2, 3, 4});
    CHECK(growth(weyl(2), 2).at(2) == 10);
    // independent of twists and constants
    CHECK(growth(weyl(1), 6) == growth(additive_analogue({Rational(3)}, false), 6));
}
