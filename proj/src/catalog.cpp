#include "spbw/catalog.hpp"

#include <set>

#include "spbw/constructors.hpp"
#include "spbw/error.hpp"
#include "spbw/rewriting.hpp"

namespace spbw {

namespace {

std::vector<std::string> indexed(const std::string& stem, unsigned count) {
    if (count == 1) {
        return {stem};
    }
    std::vector<std::string> out;
    for (unsigned i = 1; i <= count; ++i) {
        out.push_back(stem + std::to_string(i));
    }
    return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

void require_nonzero(const Rational& r, const std::string& what) {
    if (r.is_zero()) {
        throw PreconditionError(what + " must be nonzero");
    }
}

class ParamReader {
public:
    ParamReader(const std::string& entry, const CatalogParams& params) : entry_(entry), params_(params) {}

    Rational get(const std::string& key, const Rational& fallback) {
        used_.insert(key);
        const auto it = params_.find(key);
        return it == params_.end() ? fallback : it->second;
    }

    bool has(const std::string& key) const { return params_.count(key) != 0; }

    unsigned count(const std::string& key, unsigned fallback) {
        const Rational v = get(key, Rational(static_cast<long>(fallback)));
        if (!v.is_integer() || v.sign() < 0 || v > Rational(64)) {
            throw PreconditionError(entry_ + ": parameter " + key + " must be an integer between 0 and 64");
        }
        return static_cast<unsigned>(v.numerator().get_ui());
    }

    void finish() const {
        for (const auto& [k, v] : params_) {
            if (used_.count(k) == 0) {
                throw PreconditionError(entry_ + ": unknown parameter '" + k + "'");
            }
        }
    }

private:
    std::string entry_;
    const CatalogParams& params_;
    std::set<std::string> used_;
};

}  // namespace

std::vector<std::vector<Rational>> full_lambda(const std::vector<std::vector<Rational>>& lower) {
    const std::size_t n = lower.size();
    std::vector<std::vector<Rational>> full(n, std::vector<Rational>(n, Rational(1)));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            require_nonzero(lower.at(j).at(i), "lambda_" + std::to_string(j + 1) + std::to_string(i + 1));
            full[j][i] = lower[j][i];
            full[i][j] = lower[j][i].inverse();
        }
    }
    return full;
}

Presentation weyl(unsigned n) {
    const auto xs = indexed("x", n);
    const auto ys = indexed("y", n);
    Presentation p("weyl" + std::to_string(n), CoeffRing::field(), concat(xs, ys));
    for (unsigned i = 0; i < n; ++i) {
        RelationTail t = RelationTail::zero(2 * n, 0);
        t.r0 = CommPoly(0, Rational(1));
        p.set_relation(i, n + i, CommPoly(0, Rational(1)), std::move(t));
    }
    return p;
}

Presentation additive_analogue(const std::vector<Rational>& q, bool over_poly) {
    const auto n = static_cast<unsigned>(q.size());
    if (n == 0) {
        throw PreconditionError("additive_analogue needs at least one q");
    }
    for (unsigned i = 0; i < n; ++i) {
        require_nonzero(q[i], "q" + std::to_string(i + 1));
    }
    const auto xs = indexed("x", n);
    const auto ys = indexed("y", n);
    if (!over_poly) {
        Presentation p("additive" + std::to_string(n), CoeffRing::field(), concat(xs, ys));
        for (unsigned i = 0; i < n; ++i) {
            RelationTail t = RelationTail::zero(2 * n, 0);
            t.r0 = CommPoly(0, Rational(1));
            p.set_relation(i, n + i, CommPoly(0, q[i]), std::move(t));
        }
        return p;
    }
    Presentation p("additive_poly" + std::to_string(n), CoeffRing::polynomial(xs), ys);
    for (unsigned i = 0; i < n; ++i) {
        TwistData tw = TwistData::trivial(n);
        tw.sigma.images[i] = CommPoly::generator(n, i) * q[i];
        (*tw.sigma.inverse_images)[i] = CommPoly::generator(n, i) * q[i].inverse();
        tw.delta.values[i] = CommPoly(n, Rational(1));
        p.set_twist(i, std::move(tw));
    }
    return p;
}

Presentation multiplicative_analogue(const std::vector<std::vector<Rational>>& lambda) {
    const auto full = full_lambda(lambda);
    const auto n = static_cast<unsigned>(full.size());
    Presentation p("multiplicative" + std::to_string(n), CoeffRing::field(), indexed("x", n));
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned i = 0; i < j; ++i) {
            p.set_relation(i, j, CommPoly(0, full[j][i]), RelationTail::zero(n, 0));
        }
    }
    return p;
}

Presentation q_dilation(unsigned n, unsigned m, const Rational& q) {
    if (m > n) {
        throw PreconditionError("q_dilation needs m <= n");
    }
    require_nonzero(q, "q");
    Presentation p("qdilation" + std::to_string(n) + "_" + std::to_string(m), CoeffRing::polynomial(indexed("t", n)),
                   indexed("H", m));
    for (unsigned i = 0; i < m; ++i) {
        TwistData tw = TwistData::trivial(n);
        tw.sigma.images[i] = CommPoly::generator(n, i) * q;
        (*tw.sigma.inverse_images)[i] = CommPoly::generator(n, i) * q.inverse();
        p.set_twist(i, std::move(tw));
    }
    return p;
}

Presentation commutative(unsigned n) {
    return Presentation("commutative" + std::to_string(n), CoeffRing::field(), indexed("x", n));
}

std::vector<std::string> catalog_names() {
    return {"weyl", "additive_analogue", "multiplicative_analogue", "q_dilation", "commutative"};
}

Presentation instantiate(const std::string& name, const CatalogParams& params) {
    ParamReader rd(name, params);
    Presentation out;
    if (name == "weyl") {
        out = weyl(rd.count("n", 1));
    } else if (name == "additive_analogue") {
        const unsigned n = rd.count("n", 1);
        std::vector<Rational> q;
        for (unsigned i = 1; i <= n; ++i) {
            const std::string key = "q" + std::to_string(i);
            if (n == 1 && !rd.has(key)) {
                q.push_back(rd.get("q", Rational(1)));
            } else {
                q.push_back(rd.get(key, Rational(1)));
            }
        }
        const Rational flag = rd.get("over_poly", Rational(0));
        if (!(flag.is_zero() || flag.is_one())) {
            throw PreconditionError("additive_analogue: over_poly must be 0 or 1");
        }
        out = additive_analogue(q, flag.is_one());
    } else if (name == "multiplicative_analogue") {
        const unsigned n = rd.count("n", 2);
        std::vector<std::vector<Rational>> lambda(n, std::vector<Rational>(n, Rational(1)));
        for (unsigned j = 1; j < n; ++j) {
            for (unsigned i = 0; i < j; ++i) {
                lambda[j][i] = rd.get("l" + std::to_string(j + 1) + "_" + std::to_string(i + 1), Rational(1));
            }
        }
        out = multiplicative_analogue(lambda);
    } else if (name == "q_dilation") {
        const unsigned n = rd.count("n", 1);
        const unsigned m = rd.count("m", 1);
        out = q_dilation(n, m, rd.get("q", Rational(1)));
    } else if (name == "commutative") {
        out = commutative(rd.count("n", 1));
    } else {
        throw PreconditionError("unknown catalog entry '" + name + "'");
    }
    rd.finish();
    return out;
}

Witness weyl_tensor_witness(unsigned n, unsigned m) {
    Presentation left = weyl(n);
    Presentation right = weyl(m);
    Presentation src = tensor_same_ring(left, right).result;
    Presentation dst = weyl(n + m);
    Multiplier mult(dst);
    const unsigned k = n + m;
    GeneratorImages images;
    // src variables: x(left), y(left), x(right), y(right)
    for (unsigned i = 0; i < n; ++i) {
        images.variable_images.push_back(mult.generator(i));
    }
    for (unsigned i = 0; i < n; ++i) {
        images.variable_images.push_back(mult.generator(k + i));
    }
    for (unsigned i = 0; i < m; ++i) {
        images.variable_images.push_back(mult.generator(n + i));
    }
    for (unsigned i = 0; i < m; ++i) {
        images.variable_images.push_back(mult.generator(k + n + i));
    }
    return {"weyl_tensor", std::move(src), std::move(dst), std::move(images)};
}

Witness additive_factorization_witness(const Rational& q) {
    Presentation y_part("sigma_poly_y", CoeffRing::field(), {"y"});
    Presentation src = change_of_scalars(y_part, CoeffRing::polynomial({"x"})).result;
    Presentation dst = additive_analogue({q}, true);
    Multiplier mult(dst);
    GeneratorImages images;
    images.variable_images.push_back(mult.generator(0));
    images.coeff_images.push_back(mult.constant(CommPoly::generator(1, 0)));
    return {"additive_factorization", std::move(src), std::move(dst), std::move(images)};
}

Witness multiplicative_factorization_witness(const std::vector<std::vector<Rational>>& lambda) {
    if (lambda.size() != 3) {
        throw PreconditionError("multiplicative factorization witness is stated for three variables");
    }
    const auto full = full_lambda(lambda);
    Presentation tail_part("quantum_plane", CoeffRing::field(), {"x2", "x3"});
    tail_part.set_relation(0, 1, CommPoly(0, full[2][1]), RelationTail::zero(2, 0));
    Presentation src = change_of_scalars(tail_part, CoeffRing::polynomial({"x1"})).result;
    Presentation dst = multiplicative_analogue(lambda);
    Multiplier mult(dst);
    GeneratorImages images;
    images.variable_images.push_back(mult.generator(1));
    images.variable_images.push_back(mult.generator(2));
    images.coeff_images.push_back(mult.generator(0));
    return {"multiplicative_factorization", std::move(src), std::move(dst), std::move(images)};
}

std::vector<std::string> witness_names() {
    return {"weyl_tensor", "additive_factorization", "multiplicative_factorization"};
}

Witness witness(const std::string& name) {
    if (name == "weyl_tensor") {
        return weyl_tensor_witness(1, 1);
    }
    if (name == "additive_factorization") {
        return additive_factorization_witness(Rational(2));
    }
    if (name == "multiplicative_factorization") {
        std::vector<std::vector<Rational>> lambda(3, std::vector<Rational>(3, Rational(1)));
        lambda[1][0] = Rational(2);
        lambda[2][0] = Rational(3);
        lambda[2][1] = Rational(5);
        return multiplicative_factorization_witness(lambda);
    }
    throw PreconditionError("unknown witness '" + name + "'");
}

}  // namespace spbw
