#ifndef SPBW_TESTS_SAMPLES_HPP
#define SPBW_TESTS_SAMPLES_HPP

#include <vector>

#include "spbw/catalog.hpp"
#include "spbw/error.hpp"
#include "spbw/io.hpp"

namespace samples {

using spbw::Presentation;
using spbw::Rational;

inline std::vector<std::vector<Rational>> lambda3(Rational l21, Rational l31, Rational l32) {
    std::vector<std::vector<Rational>> l(3, std::vector<Rational>(3, Rational(1)));
    l[1][0] = l21;
    l[2][0] = l31;
    l[2][1] = l32;
    return l;
}

// One or more instances of every catalog entry.
inline std::vector<Presentation> catalog_algebras() {
    return {
        spbw::weyl(1),
        spbw::weyl(2),
        spbw::additive_analogue({Rational(2)}, false),
        spbw::additive_analogue({Rational(3, 2), Rational(-1)}, false),
        spbw::additive_analogue({Rational(3)}, true),
        spbw::additive_analogue({Rational(2), Rational(1, 3)}, true),
        spbw::multiplicative_analogue(lambda3(Rational(2), Rational(3), Rational(5))),
        spbw::multiplicative_analogue({{Rational(1), Rational(1)}, {Rational(-7, 2), Rational(1)}}),
        spbw::q_dilation(2, 1, Rational(5)),
        spbw::q_dilation(2, 2, Rational(1, 2)),
        spbw::commutative(3),
    };
}

// x2 x1 = x1 x2 + x3, x3 x1 = x1 x3 + x2, x3 x2 = x2 x3 + x2: fails Jacobi.
inline Presentation bad_lie() {
    return spbw::parse_presentation(
        "algebra badlie\n"
        "coeff field rational\n"
        "vars x1 x2 x3\n"
        "rel x2 x1 = 1 * x1 x2 + x3\n"
        "rel x3 x1 = 1 * x1 x3 + x2\n"
        "rel x3 x2 = 1 * x2 x3 + x2\n");
}

}  // namespace samples

#endif  // SPBW_TESTS_SAMPLES_HPP
