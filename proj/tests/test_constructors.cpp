#include <doctest.h>

#include "spbw/catalog.hpp"
#include "spbw/classify.hpp"
#include "spbw/constructors.hpp"
#include "spbw/error.hpp"
#include "spbw/io.hpp"
#include "spbw/rewriting.hpp"
#include "support/oracle.hpp"
#include "support/samples.hpp"

using namespace spbw;

namespace {

CommPoly k0(Rational c) { return CommPoly(0, c); }

Presentation o2(Rational l) { return multiplicative_analogue({{Rational(1), Rational(1)}, {l, Rational(1)}}); }

}  // namespace

TEST_CASE("change_of_scalars") {
    SUBCASE("over the field itself nothing changes") {
        const Presentation a = weyl(1);
        const Construction c = change_of_scalars(a, CoeffRing::field());
        CHECK(same_tables(c.result, a));
    }
    SUBCASE("new generators are fixed and killed, relations verbatim") {
        const Presentation a = o2(Rational(3));
        const Construction c = change_of_scalars(a, CoeffRing::polynomial({"t"}));
        const Presentation& p = c.result;
        CHECK(p.ring().generators == std::vector<std::string>{"t"});
        CHECK(p.nvars() == 2);
        CHECK(p.c(0, 1) == CommPoly(1, Rational(3)));
        CHECK(p.twist(0).sigma.is_identity());
        CHECK(p.twist(1).delta.is_zero());
        CHECK(diamond_check(p).ok);
        CHECK(c.record.provenance.coefficients.at(0).side == ProvenanceTag::Side::right);
    }
    SUBCASE("clashing base names are renamed") {
        const Construction c = change_of_scalars(o2(Rational(3)), CoeffRing::polynomial({"x1"}));
        CHECK(c.result.ring().generators == std::vector<std::string>{"x1_2"});
    }
    SUBCASE("needs a presentation over Q") {
        CHECK_THROWS_AS(change_of_scalars(q_dilation(1, 1, Rational(2)), CoeffRing::polynomial({"s"})),
                        UnsupportedError);
    }
}

TEST_CASE("tensor_same_ring") {
    SUBCASE("Weyl x Weyl has the Weyl relation list in four variables") {
        const Presentation p = tensor_same_ring(weyl(1), weyl(1)).result;
        CHECK(p.var_names() == std::vector<std::string>{"x", "y", "x_2", "y_2"});
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) {
                CHECK(p.c(i, j) == k0(1));
                const bool weyl_pair = (i == 0 && j == 1) || (i == 2 && j == 3);
                CHECK(p.tail(i, j).r0 == (weyl_pair ? k0(1) : CommPoly(0)));
            }
        }
        CHECK(diamond_check(p).ok);
    }
    SUBCASE("tensoring with the trivial extension changes nothing") {
        const Presentation a = o2(Rational(2));
        const Presentation none("none", CoeffRing::field(), {});
        CHECK(same_tables(tensor_same_ring(a, none).result, a));
    }
    SUBCASE("quantum planes give a block diagonal lambda matrix") {
        const Presentation p = tensor_same_ring(o2(Rational(2)), o2(Rational(5))).result;
        CHECK(p.c(0, 1) == k0(2));
        CHECK(p.c(2, 3) == k0(5));
        CHECK(p.c(0, 2) == k0(1));
        CHECK(p.c(0, 3) == k0(1));
        CHECK(p.c(1, 2) == k0(1));
        CHECK(p.c(1, 3) == k0(1));
    }
    SUBCASE("different rings") {
        CHECK_THROWS_AS(tensor_same_ring(weyl(1), q_dilation(1, 1, Rational(2))), StructuralError);
    }
}

TEST_CASE("tensor_k") {
    SUBCASE("with a trivial factor over Q") {
        const Presentation a = additive_analogue({Rational(3)}, true);
        const Presentation none("none", CoeffRing::field(), {});
        CHECK(same_tables(tensor_k(a, none).result, a));
    }
    SUBCASE("additive analogue over Q[x] with q-dilation over Q[t]") {
        const Presentation a = additive_analogue({Rational(3)}, true);
        const Presentation b = q_dilation(1, 1, Rational(5));
        const Construction c = tensor_k(a, b);
        const Presentation& p = c.result;
        CHECK(p.ring().generators == std::vector<std::string>{"x", "t"});
        CHECK(p.var_names() == std::vector<std::string>{"y", "H"});
        const CommPoly x = CommPoly::generator(2, 0);
        const CommPoly t = CommPoly::generator(2, 1);
        // y acts on the x-block only, H on the t-block only
        CHECK(p.twist(0).sigma.images == std::vector<CommPoly>{Rational(3) * x, t});
        CHECK(p.twist(0).delta.values == std::vector<CommPoly>{CommPoly(2, Rational(1)), CommPoly(2)});
        CHECK(p.twist(1).sigma.images == std::vector<CommPoly>{x, Rational(5) * t});
        CHECK(p.twist(1).delta.is_zero());
        CHECK(p.c(0, 1) == CommPoly(2, Rational(1)));
        CHECK(p.tail(0, 1).is_zero());
        CHECK(diamond_check(p).ok);

        // twisted Leibniz on merged products: d(ab) = s(a) d(b) + d(a) b
        const TwistData& tw = p.twist(0);
        const CommPoly a1 = x * t + CommPoly(2, Rational(2));
        const CommPoly b1 = x * x - t;
        CHECK(apply_derivation(tw.delta, tw.sigma, a1 * b1) ==
              apply_endo(tw.sigma, a1) * apply_derivation(tw.delta, tw.sigma, b1) +
                  apply_derivation(tw.delta, tw.sigma, a1) * b1);

        CHECK(c.record.provenance.variables ==
              std::vector<ProvenanceTag>{{ProvenanceTag::Side::left, 0}, {ProvenanceTag::Side::right, 0}});
        CHECK(same_tables(rebuild(c.record), p));
    }
}

TEST_CASE("opposite") {
    SUBCASE("constant extension") {
        const Presentation a = o2(Rational(4));
        const Presentation op = opposite(a).result;
        CHECK(op.var_names() == std::vector<std::string>{"x2", "x1"});
        CHECK(op.twist(0).sigma.is_identity());
        CHECK(op.twist(0).delta.is_zero());
        // x1 x2 in A reads z2 z1 in the opposite, so z2 z1 = lambda z1 z2
        CHECK(op.c(0, 1) == k0(4));
    }
    SUBCASE("additive analogue over Q[x]") {
        const Presentation op = opposite(additive_analogue({Rational(3)}, true)).result;
        const CommPoly x = CommPoly::generator(1, 0);
        CHECK(op.twist(0).sigma.images[0] == Rational(1, 3) * x);
        CHECK(op.twist(0).delta.values[0] == CommPoly(1, Rational(-1, 3)));
        CHECK(verify_endo_inverse(op.twist(0).sigma));
    }
    SUBCASE("Weyl: xy = yx + 1 under reversed naming") {
        const Presentation op = opposite(weyl(1)).result;
        CHECK(op.var_names() == std::vector<std::string>{"y", "x"});
        CHECK(op.c(0, 1) == k0(1));
        CHECK(op.tail(0, 1).r0 == k0(1));
    }
    SUBCASE("not bijective") {
        Presentation a("a", CoeffRing::polynomial({"t"}), {"x"});
        TwistData tw = TwistData::trivial(1);
        tw.sigma.images = {CommPoly::generator(1, 0).pow(2)};
        tw.sigma.inverse_images.reset();
        a.set_twist(0, tw);
        CHECK_THROWS_WITH_AS(opposite(a), doctest::Contains("not bijective"), PreconditionError);

        Presentation b("b", CoeffRing::polynomial({"t"}), {"x", "y"});
        b.set_relation(0, 1, CommPoly::generator(1, 0), RelationTail::zero(2, 1));
        CHECK_THROWS_WITH_AS(opposite(b), doctest::Contains("not bijective"), PreconditionError);
    }
    SUBCASE("involution and bijectivity for every bijective catalog algebra") {
        for (const auto& a : samples::catalog_algebras()) {
            CAPTURE(a.name());
            const Presentation op = opposite(a).result;
            CHECK(classify_flags(op).bijective);
            CHECK(diamond_check(op).ok);
            CHECK(same_tables(opposite(op).result, a));
        }
    }
}

TEST_CASE("to_opposite is an anti-homomorphism") {
    oracle::Random rng(5);
    for (const auto& a : samples::catalog_algebras()) {
        CAPTURE(a.name());
        const Presentation op = opposite(a).result;
        Multiplier ma(a);
        Multiplier mo(op);
        for (int trial = 0; trial < 15; ++trial) {
            const SkewElement f = rng.element(a, 2);
            const SkewElement g = rng.element(a, 2);
            CHECK(to_opposite(ma.mul(f, g), op) == mo.mul(to_opposite(g, op), to_opposite(f, op)));
        }
    }
}

TEST_CASE("enveloping") {
    SUBCASE("Weyl: four variables, C(p+3,3) monomials per degree") {
        const Presentation e = enveloping(weyl(1)).result;
        CHECK(e.nvars() == 4);
        CHECK(e.var_names() == std::vector<std::string>{"x", "y", "y_op", "x_op"});
        const auto counts = growth(e, 4);
        CHECK(counts == std::vector<std::uint64_t>{1, 4, 10, 20, 35});
        CHECK(diamond_check(e).ok);
    }
    SUBCASE("one constant variable gives the polynomial ring in two variables") {
        const Presentation e = enveloping(commutative(1)).result;
        CHECK(e.nvars() == 2);
        CHECK(e.ring().is_field());
        CHECK(e.c(0, 1) == k0(1));
        CHECK(e.tail(0, 1).is_zero());
        CHECK(classify_flags(e).constant);
    }
    SUBCASE("quantum plane") {
        const Presentation e = enveloping(o2(Rational(3))).result;
        CHECK(e.c(0, 1) == k0(3));
        CHECK(e.c(2, 3) == k0(3));
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 2; j < 4; ++j) {
                CHECK(e.c(i, j) == k0(1));
            }
        }
    }
    SUBCASE("names of a polynomial coefficient ring are split") {
        const Presentation e = enveloping(q_dilation(1, 1, Rational(2))).result;
        CHECK(e.ring().generators == std::vector<std::string>{"t", "t_op"});
        CHECK(diamond_check(e).ok);
    }
}
