#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <sstream>

#include "spbw/catalog.hpp"
#include "spbw/cli.hpp"
#include "spbw/constructors.hpp"
#include "spbw/error.hpp"
#include "spbw/io.hpp"
#include "support/samples.hpp"

using namespace spbw;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("spbw_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

std::vector<Presentation> constructed() {
    std::vector<Presentation> out;
    out.push_back(change_of_scalars(weyl(1), CoeffRing::polynomial({"t", "s"})).result);
    out.push_back(tensor_same_ring(weyl(1), weyl(1)).result);
    out.push_back(tensor_k(additive_analogue({Rational(3)}, true), q_dilation(2, 1, Rational(5))).result);
    for (const auto& a : samples::catalog_algebras()) {
        out.push_back(opposite(a).result);
        out.push_back(enveloping(a).result);
    }
    return out;
}

}  // namespace

TEST_CASE("element printing") {
    const Presentation a = additive_analogue({Rational(2)}, false);
    CHECK(to_string(parse_element("y*y*x", a), a) == "4*x*y^2 + 3*y");
    CHECK(to_string(parse_element("1", a), a) == "1");
    CHECK(to_string(parse_element("0", a), a) == "0");
    CHECK(to_string(parse_element("-x + 1/2", a), a) == "-x + 1/2");
    const Presentation q = q_dilation(1, 1, Rational(2));
    CHECK(to_string(parse_element("H*(t + 1)", q), q) == "(2*t + 1)*H");
    CHECK(to_string(parse_element("-t*H - t^2", q), q) == "-t*H - t^2");
    CHECK(to_string(parse_element("t + 1", q), q) == "t + 1");
    CHECK(to_string(parse_element("H + t + 1", q), q) == "H + (t + 1)");
}

TEST_CASE("round trip of catalog and constructed presentations") {
    auto all = samples::catalog_algebras();
    const auto more = constructed();
    all.insert(all.end(), more.begin(), more.end());
    all.push_back(samples::bad_lie());
    all.push_back(parse_presentation("coeff poly rational t\ngrade t = 2\nvars x\ndelta x: t -> t - 1\n"));
    for (const auto& p : all) {
        CAPTURE(p.name());
        const std::string text = print_presentation(p);
        const Presentation back = parse_presentation(text);
        CHECK(back == p);
        CHECK(print_presentation(back) == text);
    }
}

TEST_CASE("presentation file grammar") {
    SUBCASE("params, comments, tails and default relations") {
        const Presentation p = parse_presentation(
            "# a sample\n"
            "algebra demo\n"
            "coeff poly rational t\n"
            "vars x y z\n"
            "param q = 3/2\n"
            "sigma x: t -> q*t   # scaled\n"
            "sigma_inv x: t -> 2/3*t\n"
            "delta y: t -> t^2\n"
            "rel z x = q * x z + t*y - 2\n");
        CHECK(p.name() == "demo");
        CHECK(p.twist(0).sigma.images[0] == Rational(3, 2) * CommPoly::generator(1, 0));
        CHECK(p.twist(1).delta.values[0] == CommPoly::generator(1, 0).pow(2));
        CHECK(p.c(0, 2) == CommPoly(1, Rational(3, 2)));
        CHECK(p.tail(0, 2).r0 == CommPoly(1, Rational(-2)));
        CHECK(p.tail(0, 2).linear[1] == CommPoly::generator(1, 0));
        CHECK(p.c(0, 1) == CommPoly(1, Rational(1)));
        CHECK(p.tail(1, 2).is_zero());
    }
    SUBCASE("sigma without an inverse stays without one") {
        const Presentation p = parse_presentation("coeff poly rational t\nvars x\nsigma x: t -> t^2\n");
        CHECK_FALSE(p.twist(0).sigma.has_inverse());
    }
    SUBCASE("coefficient may be omitted") {
        const Presentation p = parse_presentation("coeff field rational\nvars x y\nrel y x = x y + 1\n");
        CHECK(p.tail(0, 1).r0 == CommPoly(0, Rational(1)));
    }
    SUBCASE("errors carry line and column") {
        const auto error_at = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
            try {
                parse_presentation(text);
            } catch (const ParseError& e) {
                return {e.line(), e.column()};
            }
            return {0, 0};
        };
        CHECK(error_at("coeff field rational\nvars x y\nrel y x = 1 * x y + w\n") ==
              std::pair<std::size_t, std::size_t>{3, 21});
        CHECK(error_at("coeff field rational\nvars x y\nrel x y = 1 * y x\n").first == 3);
        CHECK(error_at("coeff field rational\nvars x\nsigma x: t -> 1\n").first == 3);
        CHECK(error_at("coeff field rational\nvars x y\nbogus\n") == std::pair<std::size_t, std::size_t>{3, 1});
        CHECK(error_at("coeff field rational\nvars x y\nrel y x = 1 * x y + y*y\n").first == 3);
        CHECK(error_at("coeff field rational\nvars x y\nrel y x = 0 * x y\n").first == 3);
        CHECK(error_at("vars x\n").first == 1);
        CHECK(error_at("coeff field rational\nvars x x\n").first == 2);
        CHECK(error_at("coeff field rational\nvars x\nparam a = 1/0\n").first == 3);
    }
    SUBCASE("unknown identifiers in expressions") {
        CHECK_THROWS_AS(parse_element("x*w", weyl(1)), ParseError);
        CHECK_THROWS_AS(parse_poly("x", weyl(1)), ParseError);
    }
}

TEST_CASE("cli normal-form") {
    TempDir dir;
    const std::string w = dir.write("w.spbw", print_presentation(weyl(1)));
    const std::string a = dir.write("a.spbw", print_presentation(additive_analogue({Rational(2)}, false)));
    const Run r1 = run({"normal-form", w, "y*x"});
    CHECK(r1.code == exit_ok);
    CHECK(r1.out == "x*y + 1\n");
    CHECK(r1.err.find("warning") != std::string::npos);
    const Run r2 = run({"normal-form", a, "y*y*x", "--diamond", "4"});
    CHECK(r2.out == "4*x*y^2 + 3*y\n");
    CHECK(r2.err.empty());
    CHECK(run({"normal-form", w, "1"}).out == "1\n");
    CHECK(run({"normal-form", w, "y*z"}).code == exit_input_error);
    const std::string lie = dir.write("lie.spbw", print_presentation(samples::bad_lie()));
    CHECK(run({"normal-form", lie, "x3*x2*x1", "--diamond", "4"}).code == exit_check_failed);
}

TEST_CASE("cli construct") {
    TempDir dir;
    const std::string w = dir.write("w.spbw", print_presentation(weyl(1)));
    SUBCASE("op") {
        const Run r = run({"construct", "op", w});
        CHECK(r.code == exit_ok);
        CHECK(r.out.find("vars y x\n") != std::string::npos);
        CHECK(r.out.find("rel x y = 1 * y x + 1\n") != std::string::npos);
        CHECK(parse_presentation(r.out) == opposite(weyl(1)).result);
    }
    SUBCASE("env writes a four-variable file") {
        const std::string out = dir.file("env.spbw");
        CHECK(run({"construct", "env", w, "-o", out}).code == exit_ok);
        std::ifstream in(out);
        std::stringstream ss;
        ss << in.rdbuf();
        const Presentation e = parse_presentation(ss.str());
        CHECK(e.nvars() == 4);
        CHECK(e == enveloping(weyl(1)).result);
    }
    SUBCASE("tensor and tensor-k") {
        const Run r = run({"construct", "tensor", w, w});
        CHECK(parse_presentation(r.out) == tensor_same_ring(weyl(1), weyl(1)).result);
        const std::string q = dir.write("q.spbw", print_presentation(q_dilation(1, 1, Rational(2))));
        const Run rk = run({"construct", "tensor-k", w, q});
        CHECK(parse_presentation(rk.out) == tensor_k(weyl(1), q_dilation(1, 1, Rational(2))).result);
        CHECK(run({"construct", "tensor", w, q}).code == exit_input_error);
    }
    SUBCASE("scalars") {
        const Run r = run({"construct", "scalars", w, "--base", "t"});
        CHECK(parse_presentation(r.out) == change_of_scalars(weyl(1), CoeffRing::polynomial({"t"})).result);
        CHECK(run({"construct", "scalars", w}).code == exit_input_error);
    }
    SUBCASE("precondition failures are reported verbatim") {
        const std::string bad = dir.write("bad.spbw", "coeff poly rational t\nvars x\nsigma x: t -> t^2\n");
        const Run r = run({"construct", "op", bad});
        CHECK(r.code == exit_input_error);
        CHECK(r.err.find("not bijective") != std::string::npos);
    }
    SUBCASE("arity") {
        CHECK(run({"construct", "op", w, w}).code == exit_input_error);
        CHECK(run({"construct", "bogus", w}).code == exit_input_error);
    }
}

TEST_CASE("cli check") {
    TempDir dir;
    const std::string qd = dir.write("qd.spbw", print_presentation(q_dilation(2, 1, Rational(3))));
    const std::string w = dir.write("w.spbw", print_presentation(weyl(1)));
    const std::string lie = dir.write("lie.spbw", print_presentation(samples::bad_lie()));

    const Run ok = run({"check", qd, "--cy", "--assert-base-cy"});
    CHECK(ok.code == exit_ok);
    CHECK(ok.out.find("cy_precondition: satisfied\n") != std::string::npos);
    CHECK(ok.out.find("note: precondition certificate - Ext conditions not computed") != std::string::npos);

    const Run weyl_cy = run({"check", w, "--cy"});
    CHECK(weyl_cy.code == exit_check_failed);
    CHECK(weyl_cy.out.find("cy_precondition: failed (quasi_commutative=false)\n") != std::string::npos);

    const Run bad = run({"check", lie, "--diamond", "4"});
    CHECK(bad.code == exit_check_failed);
    CHECK(bad.out.find("witness: x3*x2*x1\n") != std::string::npos);

    const Run all = run({"check", w});
    CHECK(all.code == exit_ok);
    CHECK(all.out.find("[classify]\nconstant: true\nquasi_commutative: false\nbijective: true\n") !=
          std::string::npos);

    const std::string broken = dir.write("broken.spbw", "coeff field rational\nvars x\nrel x x = 1 * x x\n");
    const Run b = run({"check", broken});
    CHECK(b.code == exit_input_error);
    CHECK(b.err.find("line 3") != std::string::npos);
    CHECK(run({"check", dir.file("missing.spbw")}).code == exit_input_error);
}

TEST_CASE("cli iso") {
    TempDir dir;
    SUBCASE("bundled Weyl witness") {
        REQUIRE(run({"witness", "weyl_tensor", "-d", dir.file("")}).code == exit_ok);
        const Run r = run({"iso", dir.file("source.spbw"), dir.file("target.spbw"), dir.file("images.txt"),
                           "--degree", "6"});
        CHECK(r.code == exit_ok);
        CHECK(r.out.find("iso: true\n") != std::string::npos);
        CHECK(r.out.find("degree 6: source=210 target=210 rank=210 filtered=true\n") != std::string::npos);
    }
    SUBCASE("naive images into a commutative ring") {
        const std::string src = dir.write("w.spbw", print_presentation(weyl(1)));
        const std::string dst = dir.write("c.spbw", print_presentation(commutative(2)));
        const std::string img = dir.write("img.txt", "var x -> x1\nvar y -> x2\n");
        const Run r = run({"iso", src, dst, img});
        CHECK(r.code == exit_check_failed);
        CHECK(r.out.find("hom: false\nfailed_relation: y*x - (x*y + 1)\nimage: -1\n") != std::string::npos);
    }
    SUBCASE("identity on a quantum plane") {
        const std::string p = dir.write(
            "o2.spbw", print_presentation(multiplicative_analogue({{Rational(1), Rational(1)}, {Rational(2), Rational(1)}})));
        const std::string img = dir.write("id.txt", "var x1 -> x1\nvar x2 -> x2\n");
        CHECK(run({"iso", p, p, img}).out.find("iso: true") != std::string::npos);
        const std::string short_img = dir.write("short.txt", "var x1 -> x1\n");
        CHECK(run({"iso", p, p, short_img}).code == exit_input_error);
        const std::string bad_img = dir.write("bad.txt", "var x1 -> x1\nvar x2 -> x2 +\n");
        const Run r = run({"iso", p, p, bad_img});
        CHECK(r.code == exit_input_error);
        CHECK(r.err.find("line 2") != std::string::npos);
    }
}

TEST_CASE("cli growth and catalog") {
    TempDir dir;
    const std::string c2 = dir.write("c2.spbw", print_presentation(commutative(2)));
    CHECK(run({"growth", c2, "--degree", "3"}).out.find("counts: 0:1 1:2 2:3 3:4\n") != std::string::npos);
    const std::string env = dir.write("env.spbw", print_presentation(enveloping(weyl(1)).result));
    CHECK(run({"growth", env, "--degree", "2"}).out.find("counts: 0:1 1:4 2:10\n") != std::string::npos);
    const std::string c1 = dir.write("c1.spbw", print_presentation(commutative(1)));
    CHECK(run({"growth", c1, "--degree", "3"}).out.find("counts: 0:1 1:1 2:1 3:1\n") != std::string::npos);

    const Run cat = run({"catalog", "q_dilation", "--param", "n=2", "--param", "q=5"});
    CHECK(cat.code == exit_ok);
    CHECK(parse_presentation(cat.out) == q_dilation(2, 1, Rational(5)));
    CHECK(run({"catalog", "q_dilation", "--param", "q"}).code == exit_input_error);
    CHECK(run({"catalog", "nothing"}).code == exit_input_error);
    CHECK(run({}).code == exit_input_error);
}

TEST_CASE("cli reports are deterministic") {
    TempDir dir;
    const std::string qd = dir.write("qd.spbw", print_presentation(q_dilation(2, 2, Rational(3))));
    const std::vector<std::string> args{"check", qd, "--classify", "--graded", "--diamond", "4", "--cy"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
}
