#include "spbw/classify.hpp"

#include <sstream>

#include "spbw/error.hpp"

namespace spbw {

namespace {

constexpr std::size_t kWordBudget = 20000;

std::string var_name(const Presentation& p, std::size_t i) { return p.var_names().at(i); }

std::string poly_text(const Presentation& p, const CommPoly& r) { return to_string(r, p.ring().generators); }

// Compares the reductions of one word along the given routes, recording a
// witness for the first disagreement.
class OverlapChecker {
public:
    explicit OverlapChecker(const Presentation& p) : p_(p), kernel_(p) {}

    bool agree(const Word& w, bool with_kernel, DiamondResult& result) {
        const SkewElement left = normal_form(w, p_, RewriteStrategy::leftmost);
        const SkewElement right = normal_form(w, p_, RewriteStrategy::rightmost);
        if (left != right) {
            result.witness = DiamondWitness{w, "leftmost", left, "rightmost", right};
            return false;
        }
        if (with_kernel) {
            const SkewElement kernel = kernel_.normal_form(w);
            if (kernel != left) {
                result.witness = DiamondWitness{w, "leftmost", left, "kernel", kernel};
                return false;
            }
        }
        return true;
    }

private:
    const Presentation& p_;
    Multiplier kernel_;
};

std::size_t checked_power(std::size_t base, unsigned exponent) {
    std::size_t out = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        if (base != 0 && out > kWordBudget / base + 1) {
            return kWordBudget + 1;
        }
        out *= base;
    }
    return out;
}

}  // namespace

DiamondResult diamond_check(const Presentation& p, unsigned d) {
    if (d < 3) {
        throw PreconditionError("diamond_check needs a degree bound of at least 3");
    }
    p.validate();
    const std::size_t n = p.nvars();
    const std::size_t m = p.ring_nvars();
    DiamondResult result;
    OverlapChecker checker(p);

    const auto gen_token = [&](std::size_t t) { return WordToken::coefficient(CommPoly::generator(m, t)); };

    // Twisted Leibniz consistency: d(ab) must not depend on the factor order.
    for (std::size_t i = 0; i < n; ++i) {
        const TwistData& tw = p.twist(i);
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) {
                const CommPoly ta = CommPoly::generator(m, a);
                const CommPoly tb = CommPoly::generator(m, b);
                const CommPoly ab = tw.sigma.images[a] * tw.delta.values[b] + tw.delta.values[a] * tb;
                const CommPoly ba = tw.sigma.images[b] * tw.delta.values[a] + tw.delta.values[b] * ta;
                const bool hom_ok = apply_endo(tw.sigma, ta * tb) == tw.sigma.images[a] * tw.sigma.images[b];
                if (ab != ba || !hom_ok) {
                    std::ostringstream os;
                    os << "delta_" << var_name(p, i) << "(" << p.ring().generators[a] << "*" << p.ring().generators[b]
                       << ") is " << poly_text(p, ab) << " one way and " << poly_text(p, ba) << " the other";
                    result.ok = false;
                    result.leibniz_failure = os.str();
                    return result;
                }
            }
        }
    }

    // Variable triples x_k x_j x_i, k > j > i.
    for (std::size_t k = n; k-- > 0;) {
        for (std::size_t j = k; j-- > 0;) {
            for (std::size_t i = j; i-- > 0;) {
                const Word w{WordToken::generator(k), WordToken::generator(j), WordToken::generator(i)};
                if (!checker.agree(w, true, result)) {
                    result.ok = false;
                    return result;
                }
            }
        }
    }
    // x_j x_i t with j > i.
    for (std::size_t j = n; j-- > 0;) {
        for (std::size_t i = j; i-- > 0;) {
            for (std::size_t t = 0; t < m; ++t) {
                const Word w{WordToken::generator(j), WordToken::generator(i), gen_token(t)};
                if (!checker.agree(w, true, result)) {
                    result.ok = false;
                    return result;
                }
            }
        }
    }

    // Exhaustive words over variables and ring generators.
    const std::size_t alphabet = n + m;
    result.checked_to_degree = 2;
    for (unsigned len = 3; len <= d; ++len) {
        const std::size_t count = checked_power(alphabet, len);
        if (count > kWordBudget) {
            break;
        }
        std::vector<std::size_t> digits(len, 0);
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::size_t rest = idx;
            for (unsigned pos = len; pos-- > 0;) {
                digits[pos] = rest % alphabet;
                rest /= alphabet;
            }
            Word w;
            w.reserve(len);
            for (auto dgt : digits) {
                w.push_back(dgt < n ? WordToken::generator(dgt) : gen_token(dgt - n));
            }
            if (!checker.agree(w, true, result)) {
                result.ok = false;
                return result;
            }
        }
        result.checked_to_degree = len;
    }
    return result;
}

ClassFlags classify_flags(const Presentation& p) {
    ClassFlags f;
    f.constant = true;
    f.quasi_commutative = true;
    f.bijective = true;
    const std::size_t n = p.nvars();
    for (std::size_t i = 0; i < n; ++i) {
        const TwistData& tw = p.twist(i);
        if (!tw.sigma.is_identity()) {
            f.constant = false;
            f.reasons.push_back("sigma_" + var_name(p, i) + " is not the identity");
        }
        if (!tw.delta.is_zero()) {
            f.constant = false;
            f.quasi_commutative = false;
            f.reasons.push_back("delta_" + var_name(p, i) + " is nonzero");
        }
        if (!tw.sigma.has_inverse()) {
            f.bijective = false;
            f.reasons.push_back("sigma_" + var_name(p, i) + " has no supplied inverse");
        } else if (!verify_endo_inverse(tw.sigma)) {
            f.bijective = false;
            f.reasons.push_back("supplied inverse of sigma_" + var_name(p, i) + " does not invert it");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!p.tail(i, j).is_zero()) {
                f.quasi_commutative = false;
                f.reasons.push_back("relation " + var_name(p, j) + " " + var_name(p, i) + " has a nonzero tail");
            }
            if (!p.c(i, j).is_unit()) {
                f.bijective = false;
                f.reasons.push_back("c(" + var_name(p, i) + "," + var_name(p, j) + ") = " + poly_text(p, p.c(i, j)) +
                                    " is not a unit");
            }
        }
    }
    return f;
}

GradedVerdict graded_check(const Presentation& p) {
    GradedVerdict v;
    const auto& ring = p.ring();
    const auto& w = ring.degrees;
    const std::size_t n = p.nvars();
    const std::size_t m = p.ring_nvars();
    for (std::size_t i = 0; i < n; ++i) {
        const TwistData& tw = p.twist(i);
        for (std::size_t t = 0; t < m; ++t) {
            const unsigned dt = w[t];
            if (!tw.sigma.images[t].is_homogeneous(w, dt)) {
                v.reasons.push_back("sigma_" + var_name(p, i) + "(" + ring.generators[t] + ") = " +
                                    poly_text(p, tw.sigma.images[t]) + " is not of degree " + std::to_string(dt));
            }
            if (!tw.delta.values[t].is_homogeneous(w, dt + 1)) {
                v.reasons.push_back("delta_" + var_name(p, i) + "(" + ring.generators[t] + ") = " +
                                    poly_text(p, tw.delta.values[t]) + " is not of degree " + std::to_string(dt + 1));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::string rel = var_name(p, j) + " " + var_name(p, i);
            if (!p.c(i, j).is_homogeneous(w, 0)) {
                v.reasons.push_back("constant of relation " + rel + " is not in degree 0");
            }
            const RelationTail& tail = p.tail(i, j);
            if (!tail.r0.is_homogeneous(w, 2)) {
                v.reasons.push_back("tail of relation " + rel + " has a constant part outside degree 2");
            }
            for (std::size_t l = 0; l < n; ++l) {
                if (!tail.linear[l].is_homogeneous(w, 1)) {
                    v.reasons.push_back("tail of relation " + rel + " has a coefficient of " + var_name(p, l) +
                                        " outside degree 1");
                }
            }
        }
    }
    v.graded = v.reasons.empty();
    return v;
}

bool connected_check(const Presentation& p) {
    for (auto deg : p.ring().degrees) {
        if (deg == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::string> CyVerdict::failed_conjuncts() const {
    std::vector<std::string> out;
    if (!quasi_commutative) {
        out.emplace_back("quasi_commutative");
    }
    if (!graded) {
        out.emplace_back("graded");
    }
    if (!connected) {
        out.emplace_back("connected");
    }
    if (!base_is_skew_cy) {
        out.emplace_back("base_is_skew_cy");
    }
    return out;
}

std::string CyVerdict::summary() const {
    if (satisfied) {
        return "satisfied";
    }
    const auto failed = failed_conjuncts();
    return "failed (" + failed.front() + "=false)";
}

CyVerdict cy_precondition(const Presentation& p, bool base_is_skew_cy) {
    CyVerdict v;
    v.quasi_commutative = classify_flags(p).quasi_commutative;
    v.graded = graded_check(p).graded;
    v.connected = connected_check(p);
    v.base_is_skew_cy = base_is_skew_cy;
    v.satisfied = v.quasi_commutative && v.graded && v.connected && v.base_is_skew_cy;
    return v;
}

OreTower ore_tower(const Presentation& p) {
    const ClassFlags flags = classify_flags(p);
    if (!flags.quasi_commutative || !flags.bijective) {
        throw UnsupportedError("ore_tower requires a quasi-commutative bijective presentation");
    }
    OreTower tower;
    for (std::size_t j = 0; j < p.nvars(); ++j) {
        OreStage stage;
        stage.variable = j;
        for (std::size_t i = 0; i < j; ++i) {
            stage.earlier_scalars.push_back(p.c(i, j));
        }
        stage.on_coefficients = p.twist(j).sigma;
        tower.stages.push_back(std::move(stage));
    }
    return tower;
}

std::vector<std::uint64_t> growth(const Presentation& p, unsigned d) {
    // C(k + n - 1, n - 1) via the recurrence count(k) = count(k-1) * (k + n - 1) / k
    const std::uint64_t n = p.nvars();
    std::vector<std::uint64_t> out;
    out.reserve(d + 1);
    std::uint64_t count = 1;
    for (unsigned k = 0; k <= d; ++k) {
        if (n == 0) {
            out.push_back(k == 0 ? 1 : 0);
            continue;
        }
        if (k > 0) {
            count = count * (k + n - 1) / k;
        }
        out.push_back(count);
    }
    return out;
}

ClassReport classify(const Presentation& p, unsigned diamond_degree, bool base_is_skew_cy) {
    ClassReport r;
    r.flags = classify_flags(p);
    r.graded = graded_check(p);
    r.connected = connected_check(p);
    r.diamond = diamond_check(p, diamond_degree);
    r.cy = cy_precondition(p, base_is_skew_cy);
    return r;
}

}  // namespace spbw
