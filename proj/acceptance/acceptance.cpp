// Acceptance runner. Prints one line per criterion:
//   criterion N: PASS|FAIL (seconds, budget) summary
// and exits nonzero when any selected criterion fails.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "spbw/catalog.hpp"
#include "spbw/classify.hpp"
#include "spbw/cli.hpp"
#include "spbw/constructors.hpp"
#include "spbw/homcheck.hpp"
#include "spbw/io.hpp"
#include "spbw/rewriting.hpp"
#include "support/oracle.hpp"
#include "support/samples.hpp"

using namespace spbw;

namespace {

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> problems;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            problems.push_back(what);
        }
    }
};

MultiIndex mono(unsigned a, unsigned b) {
    MultiIndex m(2);
    m[0] = a;
    m[1] = b;
    return m;
}

Outcome closed_forms() {
    Outcome out;
    int cases = 0;
    for (const Rational& q : {Rational(1), Rational(2), Rational(3, 2)}) {
        const Presentation p = additive_analogue({q}, false);
        oracle::WordRewriter rewriter(p);
        for (unsigned m = 1; m <= 6; ++m) {
            Word w(m, WordToken::generator(1));
            w.push_back(WordToken::generator(0));
            oracle::Tokens toks(m, 1);
            toks.push_back(0);
            Rational geometric(0);
            for (unsigned k = 0; k < m; ++k) {
                geometric += q.pow(k);
            }
            SkewElement closed(2, 0);
            closed.add_term(mono(1, m), CommPoly(0, q.pow(m)));
            closed.add_term(mono(0, m - 1), CommPoly(0, geometric));
            const std::string tag = "q=" + q.to_string() + " m=" + std::to_string(m);
            const SkewElement reference = rewriter.reduce(toks);
            out.expect(reference == closed, tag + ": oracle disagrees with closed form");
            out.expect(normal_form(w, p) == reference, tag + ": structured normal form");
            out.expect(normal_form(w, p, RewriteStrategy::leftmost) == reference, tag + ": leftmost rewriting");
            ++cases;
        }
    }
    out.summary = std::to_string(cases) + " closed forms checked against word rewriting";
    return out;
}

Outcome diamond_and_associativity() {
    Outcome out;
    oracle::Random rng(2024);
    const auto algebras = samples::catalog_algebras();
    std::size_t triples = 0;
    for (const auto& p : algebras) {
        const DiamondResult d = diamond_check(p, 4);
        out.expect(d.ok, p.name() + ": diamond check failed");
        Multiplier m(p);
        for (int k = 0; k < 200; ++k) {
            const SkewElement f = rng.element(p, 4, 2);
            const SkewElement g = rng.element(p, 4, 2);
            const SkewElement h = rng.element(p, 4, 2);
            if (m.mul(m.mul(f, g), h) != m.mul(f, m.mul(g, h))) {
                out.expect(false, p.name() + ": (fg)h != f(gh) in triple " + std::to_string(k));
                break;
            }
            ++triples;
        }
    }
    const Presentation lie = samples::bad_lie();
    const DiamondResult bad = diamond_check(lie, 4);
    out.expect(!bad.ok, "Jacobi-violating presentation passed");
    out.expect(bad.witness && to_string(bad.witness->word, lie) == "x3*x2*x1",
               "Jacobi-violating presentation: witness is not x3*x2*x1");
    out.summary = std::to_string(algebras.size()) + " algebras confluent, " + std::to_string(triples) +
                  " associative triples, Lie witness x3*x2*x1";
    return out;
}

// sigma^alpha(r) = sigma_1^a1(...sigma_n^an(r)), innermost variable first
CommPoly sigma_power(const Presentation& p, const MultiIndex& alpha, CommPoly r) {
    for (std::size_t i = p.nvars(); i-- > 0;) {
        for (std::uint32_t k = 0; k < alpha[i]; ++k) {
            r = apply_endo(p.twist(i).sigma, r);
        }
    }
    return r;
}

// Every term other than x^top has strictly smaller degree.
bool remainder_below(const SkewElement& f, const MultiIndex& top) {
    for (const auto& [alpha, c] : f.terms()) {
        if (alpha != top && alpha.degree() >= top.degree()) {
            return false;
        }
    }
    return true;
}

Outcome degree_bounds() {
    Outcome out;
    oracle::Random rng(77);
    std::size_t checked = 0;
    for (const auto& p : samples::catalog_algebras()) {
        Multiplier m(p);
        const bool bijective = classify_flags(p).bijective;
        for (int k = 0; k < 100; ++k) {
            const MultiIndex alpha = rng.multi_index(p.nvars(), 4);
            const CommPoly r = rng.poly(p.ring_nvars(), 2);
            const SkewElement moved = m.commute_past(alpha, r);
            const CommPoly lead = sigma_power(p, alpha, r);
            out.expect(moved.coefficient(alpha) == lead, p.name() + ": leading coefficient is not sigma^alpha(r)");
            out.expect(remainder_below(moved, alpha), p.name() + ": commute_past remainder too large");

            const MultiIndex beta = rng.multi_index(p.nvars(), 4);
            const SkewElement prod = m.mono_mul(alpha, beta);
            const MultiIndex sum = alpha + beta;
            out.expect(remainder_below(prod, sum), p.name() + ": mono_mul remainder too large");
            if (bijective) {
                out.expect(!prod.coefficient(sum).is_zero(), p.name() + ": vanishing c_{alpha,beta}");
            }
            checked += 2;
        }
    }
    out.summary = std::to_string(checked) + " products within the degree bounds";
    return out;
}

Outcome opposite_anti_isomorphism() {
    Outcome out;
    oracle::Random rng(4);
    std::size_t pairs = 0;
    std::size_t algebras = 0;
    for (const auto& a : samples::catalog_algebras()) {
        if (!classify_flags(a).bijective) {
            continue;
        }
        ++algebras;
        const Presentation op = opposite(a).result;
        Multiplier ma(a);
        Multiplier mo(op);
        for (int k = 0; k < 200; ++k) {
            const SkewElement f = rng.element(a, 3);
            const SkewElement g = rng.element(a, 3);
            if (to_opposite(ma.mul(f, g), op) != mo.mul(to_opposite(g, op), to_opposite(f, op))) {
                out.expect(false, a.name() + ": phi(fg) != phi(g)phi(f) in pair " + std::to_string(k));
                break;
            }
            ++pairs;
        }
        out.expect(same_tables(opposite(op).result, a), a.name() + ": op(op(A)) differs from A");
    }
    out.summary = std::to_string(pairs) + " pairs over " + std::to_string(algebras) +
                  " bijective algebras, op(op(A)) = A";
    return out;
}

Outcome enveloping_basis() {
    Outcome out;
    const Presentation e = enveloping(weyl(1)).result;
    out.expect(e.nvars() == 4, "enveloping algebra does not have 4 variables");
    const auto counts = growth(e, 8);
    for (unsigned p = 0; p <= 8; ++p) {
        const std::uint64_t want = std::uint64_t(p + 1) * (p + 2) * (p + 3) / 6;
        out.expect(counts.at(p) == want, "degree " + std::to_string(p) + ": " + std::to_string(counts.at(p)) +
                                             " monomials, expected " + std::to_string(want));
    }
    out.expect(diamond_check(e, 4).ok, "diamond check failed on the enveloping algebra");
    out.summary = "counts C(p+3,3) for p <= 8, diamond ok";
    return out;
}

std::string describe_iso(const IsoResult& r) {
    if (!r.hom.ok) {
        return "not a homomorphism (" + r.hom.failed_relation + ")";
    }
    for (const auto& row : r.table) {
        if (!row.within_filtration || row.rank != row.src_count || row.src_count != row.dst_count) {
            return "degree " + std::to_string(row.degree) + ": source=" + std::to_string(row.src_count) +
                   " target=" + std::to_string(row.dst_count) + " rank=" + std::to_string(row.rank);
        }
    }
    return "iso";
}

Outcome weyl_tensor() {
    Outcome out;
    const Witness w = witness("weyl_tensor");
    const IsoResult r = check_graded_iso(w.source, w.target, w.images, 6);
    out.expect(r.iso, "A1 x A1 -> A2: " + describe_iso(r));
    out.expect(r.table.size() == 7, "table does not reach degree 6");
    for (const auto& row : r.table) {
        out.expect(row.src_count == row.dst_count, "counts differ at degree " + std::to_string(row.degree));
    }
    out.summary = "A1 x A1 = A2 certified to degree 6";
    return out;
}

Outcome factorizations() {
    Outcome out;
    for (const std::string name : {"additive_factorization", "multiplicative_factorization"}) {
        const Witness w = witness(name);
        const IsoResult r = check_graded_iso(w.source, w.target, w.images, 5);
        out.expect(r.iso, name + ": " + describe_iso(r));
    }
    out.summary = "change-of-scalars factorizations to degree 5";
    return out;
}

Outcome cy_and_tower() {
    Outcome out;
    const Presentation qd = q_dilation(2, 1, Rational(3));
    const Presentation o3 = multiplicative_analogue(samples::lambda3(Rational(2), Rational(3), Rational(5)));
    out.expect(cy_precondition(qd, true).summary() == "satisfied", "q_dilation(2,1,3) not satisfied");
    out.expect(cy_precondition(o3, true).summary() == "satisfied", "multiplicative_analogue(3) not satisfied");
    out.expect(cy_precondition(weyl(1), true).summary() == "failed (quasi_commutative=false)",
               "weyl(1) verdict is " + cy_precondition(weyl(1), true).summary());
    for (const Presentation& p : {qd, o3}) {
        const OreTower tower = ore_tower(p);
        out.expect(tower.stages.size() == p.nvars(), p.name() + ": wrong number of stages");
        for (std::size_t j = 0; j < tower.stages.size(); ++j) {
            const OreStage& s = tower.stages[j];
            out.expect(s.variable == j && s.earlier_scalars.size() == j, p.name() + ": malformed stage");
            for (std::size_t i = 0; i < s.earlier_scalars.size(); ++i) {
                out.expect(s.earlier_scalars[i] == p.c(i, j), p.name() + ": theta table differs from c");
            }
            out.expect(s.on_coefficients.images == p.twist(j).sigma.images, p.name() + ": theta on coefficients");
        }
    }
    out.summary = "verdicts satisfied/satisfied/failed (quasi_commutative=false), tower matches c";
    return out;
}

Outcome round_trip_and_determinism() {
    Outcome out;
    std::vector<Presentation> all = samples::catalog_algebras();
    const std::size_t catalog_count = all.size();
    for (std::size_t k = 0; k < catalog_count; ++k) {
        if (classify_flags(all[k]).bijective) {
            all.push_back(opposite(all[k]).result);
            all.push_back(enveloping(all[k]).result);
        }
    }
    all.push_back(tensor_same_ring(weyl(1), weyl(2)).result);
    all.push_back(tensor_k(additive_analogue({Rational(3)}, true), q_dilation(2, 1, Rational(5))).result);
    all.push_back(change_of_scalars(weyl(1), CoeffRing::polynomial({"t"})).result);
    for (const auto& p : all) {
        const std::string text = print_presentation(p);
        const Presentation back = parse_presentation(text);
        out.expect(back == p, p.name() + ": parse(print(A)) != A");
        out.expect(print_presentation(back) == text, p.name() + ": printing is not stable");
    }

    // two complete report runs of the command-line front end
    const auto report = [] {
        std::string all_out;
        for (const auto& name : {"weyl", "additive_analogue", "multiplicative_analogue", "q_dilation"}) {
            std::ostringstream out;
            std::ostringstream err;
            run_cli({"catalog", name}, out, err);
            const Presentation p = parse_presentation(out.str());
            const std::string path = (std::filesystem::temp_directory_path() /
                                      ("spbw_accept_" + std::string(name) + ".spbw")).string();
            std::ofstream(path) << out.str();
            std::ostringstream check;
            run_cli({"check", path, "--classify", "--graded", "--diamond", "4", "--cy"}, check, err);
            std::ostringstream grow;
            run_cli({"growth", path, "--degree", "5"}, grow, err);
            std::ostringstream op;
            run_cli({"construct", "op", path}, op, err);
            all_out += check.str() + grow.str() + op.str();
            std::filesystem::remove(path);
        }
        return all_out;
    };
    const std::string first = report();
    const std::string second = report();
    out.expect(!first.empty() && first == second, "reports differ between runs");
    out.summary = std::to_string(all.size()) + " presentations round-trip, reports byte-identical";
    return out;
}

struct Criterion {
    int id;
    double budget_seconds;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list{
        {1, 1, closed_forms},
        {2, 30, diamond_and_associativity},
        {3, 10, degree_bounds},
        {4, 30, opposite_anti_isomorphism},
        {5, 10, enveloping_basis},
        {6, 60, weyl_tensor},
        {7, 60, factorizations},
        {8, 1, cy_and_tower},
        {9, 5, round_trip_and_determinism},
    };
    return list;
}

bool run_one(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = c.run();
    } catch (const std::exception& e) {
        o.pass = false;
        o.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
        o.expect(false, "time budget exceeded");
    }
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " (" << std::fixed
              << std::setprecision(2) << secs << " s of " << std::setprecision(0) << c.budget_seconds << " s) "
              << o.summary << "\n";
    for (const auto& p : o.problems) {
        std::cout << "  " << p << "\n";
    }
    std::cout.unsetf(std::ios::fixed);
    return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    bool ok = true;
    for (const auto& c : criteria()) {
        if (only == 0 || only == c.id) {
            ok = run_one(c) && ok;
        }
    }
    return ok ? 0 : 1;
}
