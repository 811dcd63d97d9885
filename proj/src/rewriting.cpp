#include "spbw/rewriting.hpp"

#include <optional>
#include <sstream>

#include "spbw/classify.hpp"
#include "spbw/error.hpp"

namespace spbw {

namespace {

constexpr unsigned kMaxDepth = 20000;

// Index of the last variable occurring in gamma, if any.
std::optional<std::size_t> last_variable(const MultiIndex& gamma) {
    for (std::size_t i = gamma.size(); i-- > 0;) {
        if (gamma[i] != 0) {
            return i;
        }
    }
    return std::nullopt;
}

MultiIndex drop_one(MultiIndex gamma, std::size_t i) {
    gamma[i] -= 1;
    return gamma;
}

MultiIndex add_one(MultiIndex gamma, std::size_t i) {
    gamma[i] += 1;
    return gamma;
}

struct DepthGuard {
    explicit DepthGuard(unsigned& d) : depth(d) {
        if (++depth > kMaxDepth) {
            --depth;
            throw UnsupportedError("rewriting did not terminate within the recursion bound");
        }
    }
    ~DepthGuard() { --depth; }
    DepthGuard(const DepthGuard&) = delete;
    DepthGuard& operator=(const DepthGuard&) = delete;
    unsigned& depth;
};

}  // namespace

Multiplier::Multiplier(const Presentation& p) : p_(&p) { p.validate(); }

SkewElement Multiplier::one() const { return constant(p_->constant(Rational(1))); }

SkewElement Multiplier::constant(const CommPoly& r) const {
    if (r.nvars() != p_->ring_nvars()) {
        throw StructuralError("coefficient lives in a different coefficient ring");
    }
    return SkewElement::constant(p_->nvars(), r);
}

SkewElement Multiplier::generator(std::size_t i) const {
    if (i >= p_->nvars()) {
        throw PreconditionError("variable index out of range");
    }
    return SkewElement::term(MultiIndex::unit(p_->nvars(), i), p_->constant(Rational(1)));
}

void Multiplier::require_element(const SkewElement& f) const {
    if (f.nvars() != p_->nvars() || f.ring_nvars() != p_->ring_nvars()) {
        throw StructuralError("element does not belong to presentation '" + p_->name() + "'");
    }
}

SkewElement Multiplier::commute_past(const MultiIndex& alpha, const CommPoly& r) {
    if (alpha.size() != p_->nvars() || r.nvars() != p_->ring_nvars()) {
        throw StructuralError("commute_past operands do not match the presentation");
    }
    if (r.is_zero()) {
        return SkewElement(p_->nvars(), p_->ring_nvars());
    }
    // Q is fixed by every sigma and killed by every delta.
    const auto last = last_variable(alpha);
    if (!last || r.is_constant()) {
        return SkewElement::term(alpha, r);
    }
    DepthGuard guard(depth_);
    const std::size_t k = *last;
    const MultiIndex head = drop_one(alpha, k);
    const TwistData& tw = p_->twist(k);
    // x^head (x_k r) = x^head sigma_k(r) x_k + x^head delta_k(r)
    SkewElement out = mul_generator(commute_past(head, apply_endo(tw.sigma, r)), k);
    const CommPoly dr = apply_derivation(tw.delta, tw.sigma, r);
    if (!dr.is_zero()) {
        out += commute_past(head, dr);
    }
    return out;
}

const SkewElement& Multiplier::times_generator(const MultiIndex& gamma, std::size_t k) {
    const auto key = std::make_pair(gamma, k);
    if (auto it = generator_products_.find(key); it != generator_products_.end()) {
        return it->second;
    }
    DepthGuard guard(depth_);
    const auto last = last_variable(gamma);
    SkewElement out(p_->nvars(), p_->ring_nvars());
    if (!last || *last <= k) {
        out.add_term(add_one(gamma, k), p_->constant(Rational(1)));
    } else {
        // x^head x_l x_k with l > k: x_l x_k = c_{k,l} x_k x_l + r0 + sum_m r_m x_m
        const std::size_t l = *last;
        const MultiIndex head = drop_one(gamma, l);
        const CommPoly& c = p_->c(k, l);
        const RelationTail& tail = p_->tail(k, l);
        out = mul_generator(mul_generator(commute_past(head, c), k), l);
        if (!tail.r0.is_zero()) {
            out += commute_past(head, tail.r0);
        }
        for (std::size_t m = 0; m < tail.linear.size(); ++m) {
            if (!tail.linear[m].is_zero()) {
                out += mul_generator(commute_past(head, tail.linear[m]), m);
            }
        }
    }
    return generator_products_.emplace(key, std::move(out)).first->second;
}

SkewElement Multiplier::mul_generator(const SkewElement& f, std::size_t k) {
    SkewElement out(p_->nvars(), p_->ring_nvars());
    for (const auto& [gamma, a] : f.terms()) {
        out += coeff_scale(a, times_generator(gamma, k));
    }
    return out;
}

SkewElement Multiplier::mul_coefficient(const SkewElement& f, const CommPoly& r) {
    SkewElement out(p_->nvars(), p_->ring_nvars());
    for (const auto& [gamma, a] : f.terms()) {
        out += coeff_scale(a, commute_past(gamma, r));
    }
    return out;
}

SkewElement Multiplier::mono_mul(const MultiIndex& alpha, const MultiIndex& beta) {
    if (alpha.size() != p_->nvars() || beta.size() != p_->nvars()) {
        throw StructuralError("mono_mul operands do not match the presentation");
    }
    SkewElement acc = SkewElement::term(alpha, p_->constant(Rational(1)));
    for (std::size_t k = 0; k < beta.size(); ++k) {
        for (std::uint32_t e = 0; e < beta[k]; ++e) {
            acc = mul_generator(acc, k);
        }
    }
    return acc;
}

SkewElement Multiplier::mul(const SkewElement& f, const SkewElement& g) {
    require_element(f);
    require_element(g);
    SkewElement out(p_->nvars(), p_->ring_nvars());
    for (const auto& [alpha, a] : f.terms()) {
        for (const auto& [beta, b] : g.terms()) {
            // a x^alpha b x^beta = a sum_gamma p_gamma x^gamma x^beta
            const SkewElement moved = commute_past(alpha, b);
            for (const auto& [gamma, pg] : moved.terms()) {
                out += coeff_scale(a * pg, mono_mul(gamma, beta));
            }
        }
    }
    return out;
}

SkewElement Multiplier::pow(const SkewElement& f, unsigned exponent) {
    SkewElement acc = one();
    for (unsigned i = 0; i < exponent; ++i) {
        acc = mul(acc, f);
    }
    return acc;
}

SkewElement Multiplier::normal_form(const Word& w) {
    SkewElement acc = one();
    for (const auto& token : w) {
        if (token.is_generator()) {
            if (token.index() >= p_->nvars()) {
                throw PreconditionError("generator index out of range in word");
            }
            acc = mul_generator(acc, token.index());
        } else {
            if (token.coeff().nvars() != p_->ring_nvars()) {
                throw StructuralError("word coefficient lives in a different coefficient ring");
            }
            acc = mul_coefficient(acc, token.coeff());
        }
    }
    return acc;
}

namespace {

// Direct rewriting of token lists. Each pending word is a product of tokens;
// the result is the sum of all fully reduced words.
class TokenRewriter {
public:
    TokenRewriter(const Presentation& p, bool leftmost) : p_(p), leftmost_(leftmost) {}

    SkewElement reduce(const Word& w) {
        SkewElement out(p_.nvars(), p_.ring_nvars());
        std::vector<Word> pending{w};
        std::size_t steps = 0;
        while (!pending.empty()) {
            Word word = std::move(pending.back());
            pending.pop_back();
            if (++steps > kStepLimit) {
                throw UnsupportedError("token rewriting exceeded its step limit");
            }
            if (has_zero(word)) {
                continue;
            }
            const auto pos = violation(word);
            if (!pos) {
                emit(word, out);
                continue;
            }
            rewrite(word, *pos, pending);
        }
        return out;
    }

private:
    static constexpr std::size_t kStepLimit = 50'000'000;

    static bool has_zero(const Word& w) {
        for (const auto& t : w) {
            if (!t.is_generator() && t.coeff().is_zero()) {
                return true;
            }
        }
        return false;
    }

    bool is_violation(const Word& w, std::size_t i) const {
        const auto& a = w[i];
        const auto& b = w[i + 1];
        if (!a.is_generator()) {
            return !b.is_generator();
        }
        return !b.is_generator() || a.index() > b.index();
    }

    std::optional<std::size_t> violation(const Word& w) const {
        if (w.size() < 2) {
            return std::nullopt;
        }
        if (leftmost_) {
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                if (is_violation(w, i)) {
                    return i;
                }
            }
        } else {
            for (std::size_t i = w.size() - 1; i-- > 0;) {
                if (is_violation(w, i)) {
                    return i;
                }
            }
        }
        return std::nullopt;
    }

    static Word splice(const Word& w, std::size_t pos, std::vector<WordToken> middle) {
        Word out;
        out.reserve(w.size() + middle.size());
        out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        for (auto& t : middle) {
            out.push_back(std::move(t));
        }
        out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
        return out;
    }

    void rewrite(const Word& w, std::size_t pos, std::vector<Word>& pending) const {
        const auto& a = w[pos];
        const auto& b = w[pos + 1];
        if (!a.is_generator()) {
            pending.push_back(splice(w, pos, {WordToken::coefficient(a.coeff() * b.coeff())}));
            return;
        }
        if (!b.is_generator()) {
            const TwistData& tw = p_.twist(a.index());
            const CommPoly& r = b.coeff();
            pending.push_back(splice(w, pos, {WordToken::coefficient(apply_endo(tw.sigma, r)), a}));
            CommPoly dr = apply_derivation(tw.delta, tw.sigma, r);
            if (!dr.is_zero()) {
                pending.push_back(splice(w, pos, {WordToken::coefficient(std::move(dr))}));
            }
            return;
        }
        const std::size_t j = a.index();
        const std::size_t i = b.index();
        const RelationTail& tail = p_.tail(i, j);
        pending.push_back(splice(w, pos, {WordToken::coefficient(p_.c(i, j)), b, a}));
        if (!tail.r0.is_zero()) {
            pending.push_back(splice(w, pos, {WordToken::coefficient(tail.r0)}));
        }
        for (std::size_t l = 0; l < tail.linear.size(); ++l) {
            if (!tail.linear[l].is_zero()) {
                pending.push_back(splice(w, pos, {WordToken::coefficient(tail.linear[l]), WordToken::generator(l)}));
            }
        }
    }

    void emit(const Word& w, SkewElement& out) const {
        CommPoly coeff = p_.constant(Rational(1));
        MultiIndex alpha(p_.nvars());
        for (const auto& t : w) {
            if (t.is_generator()) {
                alpha[t.index()] += 1;
            } else {
                coeff = t.coeff();
            }
        }
        out.add_term(alpha, coeff);
    }

    const Presentation& p_;
    bool leftmost_;
};

void check_word(const Word& w, const Presentation& p) {
    for (const auto& t : w) {
        if (t.is_generator()) {
            if (t.index() >= p.nvars()) {
                throw PreconditionError("generator index out of range in word");
            }
        } else if (t.coeff().nvars() != p.ring_nvars()) {
            throw StructuralError("word coefficient lives in a different coefficient ring");
        }
    }
}

}  // namespace

SkewElement normal_form(const Word& w, const Presentation& p, RewriteStrategy strategy) {
    check_word(w, p);
    if (strategy == RewriteStrategy::structured) {
        return Multiplier(p).normal_form(w);
    }
    p.validate();
    return TokenRewriter(p, strategy == RewriteStrategy::leftmost).reduce(w);
}

SkewElement mul(const SkewElement& f, const SkewElement& g, const Presentation& p) {
    return Multiplier(p).mul(f, g);
}

SkewElement commute_past(const MultiIndex& alpha, const CommPoly& r, const Presentation& p) {
    if (r.is_zero()) {
        throw PreconditionError("commute_past requires a nonzero coefficient");
    }
    return Multiplier(p).commute_past(alpha, r);
}

SkewElement mono_mul(const MultiIndex& alpha, const MultiIndex& beta, const Presentation& p) {
    return Multiplier(p).mono_mul(alpha, beta);
}

std::map<unsigned, SkewElement> homogeneous_components(const SkewElement& f, const Presentation& p) {
    const GradedVerdict verdict = graded_check(p);
    if (!verdict.graded) {
        throw UnsupportedError("homogeneous_components requires a graded presentation");
    }
    if (f.nvars() != p.nvars() || f.ring_nvars() != p.ring_nvars()) {
        throw StructuralError("element does not belong to the presentation");
    }
    std::map<unsigned, SkewElement> out;
    for (const auto& [alpha, coeff] : f.terms()) {
        for (const auto& [mono, c] : coeff.terms()) {
            const unsigned deg = mono.weighted_degree(p.ring().degrees) + alpha.degree();
            auto it = out.try_emplace(deg, p.nvars(), p.ring_nvars()).first;
            it->second.add_term(alpha, CommPoly::monomial(mono, c));
        }
    }
    return out;
}

std::string to_string(const Word& w, const Presentation& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
            os << '*';
        }
        if (w[i].is_generator()) {
            os << p.var_names().at(w[i].index());
        } else {
            const auto text = to_string(w[i].coeff(), p.ring().generators);
            if (w[i].coeff().term_count() > 1) {
                os << '(' << text << ')';
            } else {
                os << text;
            }
        }
    }
    return os.str();
}

}  // namespace spbw
