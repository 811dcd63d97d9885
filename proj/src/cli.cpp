#include "spbw/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "spbw/catalog.hpp"
#include "spbw/classify.hpp"
#include "spbw/constructors.hpp"
#include "spbw/error.hpp"
#include "spbw/homcheck.hpp"
#include "spbw/io.hpp"

namespace spbw {

namespace {

// An input problem reported with exit status 2.
class InputError : public Error {
public:
    using Error::Error;
};

const char* flag(bool b) { return b ? "true" : "false"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw InputError("cannot write '" + path + "'");
    }
    f << text;
}

Presentation load(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_presentation(text);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string ring_text(const CoeffRing& r) {
    if (r.is_field()) {
        return "Q";
    }
    std::string out = "Q[";
    for (std::size_t i = 0; i < r.generators.size(); ++i) {
        out += (i ? "," : "") + r.generators[i];
    }
    return out + "]";
}

void describe(Report& rep, const Presentation& p) {
    rep.section("presentation");
    rep.add("name", p.name());
    rep.add("coefficients", ring_text(p.ring()));
    rep.add("variables", std::to_string(p.nvars()));
}

void diamond_section(Report& rep, const Presentation& p, const DiamondResult& d, unsigned degree) {
    rep.section("diamond");
    rep.add("degree", std::to_string(degree));
    rep.add("ok", flag(d.ok));
    rep.add("checked_to_degree", std::to_string(d.checked_to_degree));
    if (d.leibniz_failure) {
        rep.add("leibniz", *d.leibniz_failure);
    }
    if (d.witness) {
        rep.add("witness", to_string(d.witness->word, p));
        rep.add(d.witness->first_route, to_string(d.witness->first, p));
        rep.add(d.witness->second_route, to_string(d.witness->second, p));
    }
}

// "var <v> -> <expr>" / "coeff <g> -> <expr>", expressions over dst.
GeneratorImages parse_images(const std::string& path, const Presentation& src, const Presentation& dst) {
    const std::string text = read_file(path);
    std::vector<std::optional<SkewElement>> vars(src.nvars());
    std::vector<std::optional<SkewElement>> coeffs(src.ring_nvars());
    std::istringstream in(text);
    std::string raw;
    int ln = 0;
    const auto fail = [&](std::size_t col, const std::string& msg) {
        throw InputError(path + ": " + ParseError(ln, col, msg).what());
    };
    while (std::getline(in, raw)) {
        ++ln;
        std::string line = raw.substr(0, raw.find('#'));
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        const auto arrow = line.find("->");
        if (arrow == std::string::npos) {
            fail(first + 1, "expected '<kind> <name> -> <expr>'");
        }
        std::istringstream head(line.substr(0, arrow));
        std::string kind;
        std::string name;
        std::string extra;
        head >> kind >> name >> extra;
        if (!extra.empty() || name.empty() || (kind != "var" && kind != "coeff")) {
            fail(first + 1, "expected 'var <name> ->' or 'coeff <name> ->'");
        }
        const auto& names = kind == "var" ? src.var_names() : src.ring().generators;
        auto& slots = kind == "var" ? vars : coeffs;
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) {
            fail(first + 1, "'" + name + "' is not a " + (kind == "var" ? "variable" : "coefficient generator") +
                                " of '" + src.name() + "'");
        }
        auto& slot = slots[static_cast<std::size_t>(it - names.begin())];
        if (slot) {
            fail(first + 1, "duplicate image for '" + name + "'");
        }
        try {
            slot = parse_element(std::string_view(line).substr(arrow + 2), dst, {}, ln);
        } catch (const ParseError& e) {
            fail(e.column() + arrow + 2, e.detail());
        }
    }
    GeneratorImages phi;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!vars[i]) {
            throw InputError(path + ": missing image for variable '" + src.var_names()[i] + "'");
        }
        phi.variable_images.push_back(*vars[i]);
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i]) {
            throw InputError(path + ": missing image for coefficient '" + src.ring().generators[i] + "'");
        }
        phi.coeff_images.push_back(*coeffs[i]);
    }
    return phi;
}

std::string print_images(const GeneratorImages& phi, const Presentation& src, const Presentation& dst) {
    std::ostringstream os;
    for (std::size_t i = 0; i < src.nvars(); ++i) {
        os << "var " << src.var_names()[i] << " -> " << to_string(phi.variable_images[i], dst) << '\n';
    }
    for (std::size_t t = 0; t < src.ring_nvars(); ++t) {
        os << "coeff " << src.ring().generators[t] << " -> " << to_string(phi.coeff_images[t], dst) << '\n';
    }
    return os.str();
}

CatalogParams parse_params(const std::vector<std::string>& items) {
    CatalogParams out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw InputError("parameter '" + item + "' is not of the form key=value");
        }
        try {
            out[item.substr(0, eq)] = Rational::parse(item.substr(eq + 1));
        } catch (const Error&) {
            throw InputError("parameter '" + item + "' does not have a rational value");
        }
    }
    return out;
}

CoeffRing parse_base(const std::vector<std::string>& gens) {
    if (gens.empty()) {
        throw InputError("scalars needs --base with at least one generator name");
    }
    return CoeffRing::polynomial(gens);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic and structural checks for skew PBW extensions", "spbw"};
    app.require_subcommand(1);

    // normal-form
    std::string nf_file;
    std::string nf_expr;
    unsigned nf_diamond = 0;
    auto* nf = app.add_subcommand("normal-form", "Reduce an expression to left normal form");
    nf->add_option("file", nf_file, "Presentation file")->required();
    nf->add_option("expr", nf_expr, "Expression over the declared variables and coefficients")->required();
    nf->add_option("--diamond", nf_diamond, "Run the confluence check to this word length first");

    // construct
    std::string kind;
    std::vector<std::string> inputs;
    std::vector<std::string> base;
    std::string cons_out;
    auto* cons = app.add_subcommand("construct", "Build a new presentation from existing ones");
    cons->add_option("kind", kind, "scalars, tensor, tensor-k, op or env")
        ->required()
        ->check(CLI::IsMember({"scalars", "tensor", "tensor-k", "op", "env"}));
    cons->add_option("inputs", inputs, "Input presentation files")->required();
    cons->add_option("--base", base, "Generator names of the new coefficient ring (scalars)");
    cons->add_option("-o,--output", cons_out, "Output file (default stdout)");

    // check
    std::string check_file;
    unsigned check_diamond = 0;
    bool want_classify = false;
    bool want_graded = false;
    bool want_cy = false;
    bool assert_base = false;
    auto* check = app.add_subcommand("check", "Structural checks");
    check->add_option("file", check_file, "Presentation file")->required();
    auto* diamond_opt = check->add_option("--diamond", check_diamond, "Confluence check up to this word length");
    check->add_flag("--classify", want_classify, "Constant / quasi-commutative / bijective flags");
    check->add_flag("--graded", want_graded, "Graded check");
    check->add_flag("--cy", want_cy, "Skew Calabi-Yau transfer preconditions");
    check->add_flag("--assert-base-cy", assert_base, "Assert that the coefficient ring is skew Calabi-Yau");

    // iso
    std::string iso_src;
    std::string iso_dst;
    std::string iso_images;
    unsigned iso_degree = kDefaultIsoDegree;
    auto* iso = app.add_subcommand("iso", "Check a homomorphism and degree-bounded bijectivity");
    iso->add_option("source", iso_src, "Source presentation file")->required();
    iso->add_option("target", iso_dst, "Target presentation file")->required();
    iso->add_option("images", iso_images, "Generator images file")->required();
    iso->add_option("--degree", iso_degree, "Degree bound");

    // growth
    std::string growth_file;
    unsigned growth_degree = 4;
    auto* grow = app.add_subcommand("growth", "Standard monomial counts per degree");
    grow->add_option("file", growth_file, "Presentation file")->required();
    grow->add_option("--degree", growth_degree, "Largest degree");

    // catalog
    std::string cat_name;
    std::vector<std::string> cat_params;
    std::string cat_out;
    auto* cat = app.add_subcommand("catalog", "Write a built-in presentation");
    cat->add_option("name", cat_name, "Entry name")->required()->check(CLI::IsMember(catalog_names()));
    cat->add_option("--param", cat_params, "Parameter as key=value (repeatable)");
    cat->add_option("-o,--output", cat_out, "Output file (default stdout)");

    // witness
    std::string wit_name;
    std::string wit_dir;
    auto* wit = app.add_subcommand("witness", "Write a bundled isomorphism witness");
    wit->add_option("name", wit_name, "Witness name")->required()->check(CLI::IsMember(witness_names()));
    wit->add_option("-d,--dir", wit_dir, "Directory for source.spbw, target.spbw and images.txt")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (*nf) {
            const Presentation p = load(nf_file);
            if (nf_diamond != 0) {
                const DiamondResult d = diamond_check(p, nf_diamond);
                if (!d.ok) {
                    Report rep;
                    diamond_section(rep, p, d, nf_diamond);
                    err << "error: presentation is not confluent, normal forms are not unique\n" << rep.render();
                    return exit_check_failed;
                }
            } else {
                err << "warning: confluence not checked (pass --diamond d); result assumes a valid presentation\n";
            }
            SkewElement f;
            try {
                f = parse_element(nf_expr, p);
            } catch (const ParseError& e) {
                throw InputError(std::string("expression: ") + e.what());
            }
            out << to_string(f, p) << '\n';
            return exit_ok;
        }

        if (*cons) {
            const std::size_t arity = (kind == "tensor" || kind == "tensor-k") ? 2 : 1;
            if (inputs.size() != arity) {
                throw InputError("construct " + kind + " takes " + std::to_string(arity) + " input file(s)");
            }
            if (kind != "scalars" && !base.empty()) {
                throw InputError("--base only applies to scalars");
            }
            std::vector<Presentation> ps;
            for (const auto& f : inputs) {
                ps.push_back(load(f));
            }
            Construction c;
            if (kind == "scalars") {
                c = change_of_scalars(ps[0], parse_base(base));
            } else if (kind == "tensor") {
                c = tensor_same_ring(ps[0], ps[1]);
            } else if (kind == "tensor-k") {
                c = tensor_k(ps[0], ps[1]);
            } else if (kind == "op") {
                c = opposite(ps[0]);
            } else {
                c = enveloping(ps[0]);
            }
            write_output(cons_out, print_presentation(c.result), out);
            return exit_ok;
        }

        if (*check) {
            const Presentation p = load(check_file);
            const bool any = want_classify || want_graded || want_cy || diamond_opt->count() > 0;
            const bool do_diamond = diamond_opt->count() > 0 || !any;
            const unsigned degree = diamond_opt->count() > 0 ? check_diamond : kDefaultDiamondDegree;
            Report rep;
            describe(rep, p);
            bool pass = true;
            if (want_classify || !any) {
                const ClassFlags f = classify_flags(p);
                rep.section("classify");
                rep.add("constant", flag(f.constant));
                rep.add("quasi_commutative", flag(f.quasi_commutative));
                rep.add("bijective", flag(f.bijective));
                for (const auto& r : f.reasons) {
                    rep.add("reason", r);
                }
            }
            if (want_graded || !any) {
                const GradedVerdict g = graded_check(p);
                rep.section("graded");
                rep.add("graded", flag(g.graded));
                rep.add("connected", flag(connected_check(p)));
                for (const auto& r : g.reasons) {
                    rep.add("reason", r);
                }
                pass = pass && (g.graded || !want_graded);
            }
            if (do_diamond) {
                const DiamondResult d = diamond_check(p, degree);
                diamond_section(rep, p, d, degree);
                pass = pass && d.ok;
            }
            if (want_cy) {
                const CyVerdict v = cy_precondition(p, assert_base);
                rep.section("cy");
                rep.add("cy_precondition", v.summary());
                const auto failed = v.failed_conjuncts();
                if (!failed.empty()) {
                    std::string all;
                    for (const auto& f : failed) {
                        all += (all.empty() ? "" : ", ") + f;
                    }
                    rep.add("failed_conjuncts", all);
                }
                rep.add("graded", flag(v.graded));
                rep.add("quasi_commutative", flag(v.quasi_commutative));
                rep.add("connected", flag(v.connected));
                rep.add("base_is_skew_cy", v.base_is_skew_cy ? "true (asserted)" : "false (not asserted)");
                rep.add("note", kCyCertificateNote);
                pass = pass && v.satisfied;
            }
            out << rep.render();
            return pass ? exit_ok : exit_check_failed;
        }

        if (*iso) {
            const Presentation src = load(iso_src);
            const Presentation dst = load(iso_dst);
            const GeneratorImages phi = parse_images(iso_images, src, dst);
            const IsoResult r = check_graded_iso(src, dst, phi, iso_degree);
            Report rep;
            rep.section("hom");
            rep.add("source", src.name());
            rep.add("target", dst.name());
            rep.add("hom", flag(r.hom.ok));
            if (!r.hom.ok) {
                rep.add("failed_relation", r.hom.failed_relation);
                rep.add("image", to_string(*r.hom.image, dst));
            }
            if (r.hom.ok) {
                rep.section("ranks");
                for (const auto& row : r.table) {
                    rep.add("degree " + std::to_string(row.degree),
                            "source=" + std::to_string(row.src_count) + " target=" + std::to_string(row.dst_count) +
                                " rank=" + std::to_string(row.rank) + " filtered=" + flag(row.within_filtration));
                }
            }
            rep.section("iso");
            rep.add("degree_bound", std::to_string(r.degree_bound));
            rep.add("iso", flag(r.hom.ok && r.iso));
            out << rep.render();
            return r.hom.ok && r.iso ? exit_ok : exit_check_failed;
        }

        if (*grow) {
            const Presentation p = load(growth_file);
            const auto counts = growth(p, growth_degree);
            std::string line;
            for (std::size_t k = 0; k < counts.size(); ++k) {
                line += (k ? " " : "") + std::to_string(k) + ":" + std::to_string(counts[k]);
            }
            Report rep;
            rep.section("growth");
            rep.add("name", p.name());
            rep.add("degree", std::to_string(growth_degree));
            rep.add("counts", line);
            out << rep.render();
            return exit_ok;
        }

        if (*cat) {
            const Presentation p = instantiate(cat_name, parse_params(cat_params));
            write_output(cat_out, print_presentation(p), out);
            return exit_ok;
        }

        if (*wit) {
            const Witness w = witness(wit_name);
            write_output(wit_dir + "/source.spbw", print_presentation(w.source), out);
            write_output(wit_dir + "/target.spbw", print_presentation(w.target), out);
            write_output(wit_dir + "/images.txt", print_images(w.images, w.source, w.target), out);
            return exit_ok;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_input_error;
}

}  // namespace spbw
