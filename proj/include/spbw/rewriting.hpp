#ifndef SPBW_REWRITING_HPP
#define SPBW_REWRITING_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "spbw/presentation.hpp"
#include "spbw/skew_element.hpp"

namespace spbw {

/// One factor of an unreduced product: a coefficient or a variable index.
struct WordToken {
    std::variant<CommPoly, std::size_t> value;

    static WordToken coefficient(CommPoly r) { return {std::move(r)}; }
    static WordToken generator(std::size_t index) { return {index}; }

    bool is_generator() const noexcept { return std::holds_alternative<std::size_t>(value); }
    std::size_t index() const { return std::get<std::size_t>(value); }
    const CommPoly& coeff() const { return std::get<CommPoly>(value); }
};

using Word = std::vector<WordToken>;

/// How normal_form applies the two rewriting rules
///   (a) x_i r    => sigma_i(r) x_i + delta_i(r)
///   (b) x_j x_i  => c_{i,j} x_i x_j + tail      (j > i)
/// `structured` multiplies the word out factor by factor through the
/// recursive commute_past / generator-product kernel. `leftmost` and
/// `rightmost` rewrite the token list itself, always at the first or last
/// violation. On a presentation that passes diamond_check all three agree.
enum class RewriteStrategy { structured, leftmost, rightmost };

/// Arithmetic context bound to one presentation. Caches the products
/// x^gamma * x_k it has computed, so reuse one instance for a batch of
/// products. Not safe for concurrent use; the free functions below build a
/// private instance per call and are.
///
/// Results are the unique normal form only when the presentation is
/// confluent (see diamond_check); on other data they are the normal form
/// reached by this particular reduction order.
class Multiplier {
public:
    explicit Multiplier(const Presentation& p);

    const Presentation& presentation() const noexcept { return *p_; }

    SkewElement one() const;
    SkewElement constant(const CommPoly& r) const;
    SkewElement generator(std::size_t i) const;

    /// x^alpha * r
    SkewElement commute_past(const MultiIndex& alpha, const CommPoly& r);
    /// x^alpha * x^beta
    SkewElement mono_mul(const MultiIndex& alpha, const MultiIndex& beta);
    /// x^gamma * x_k
    const SkewElement& times_generator(const MultiIndex& gamma, std::size_t k);

    SkewElement mul(const SkewElement& f, const SkewElement& g);
    SkewElement mul_generator(const SkewElement& f, std::size_t k);
    SkewElement mul_coefficient(const SkewElement& f, const CommPoly& r);
    SkewElement pow(const SkewElement& f, unsigned exponent);

    SkewElement normal_form(const Word& w);

private:
    void require_element(const SkewElement& f) const;

    const Presentation* p_;
    std::map<std::pair<MultiIndex, std::size_t>, SkewElement> generator_products_;
    unsigned depth_ = 0;
};

SkewElement normal_form(const Word& w, const Presentation& p, RewriteStrategy strategy = RewriteStrategy::structured);
SkewElement mul(const SkewElement& f, const SkewElement& g, const Presentation& p);

/// x^alpha r = sigma^alpha(r) x^alpha + (terms of degree < |alpha|).
/// Throws PreconditionError for r = 0.
SkewElement commute_past(const MultiIndex& alpha, const CommPoly& r, const Presentation& p);

/// x^alpha x^beta = c_{alpha,beta} x^{alpha+beta} + (terms of degree < |alpha+beta|).
SkewElement mono_mul(const MultiIndex& alpha, const MultiIndex& beta, const Presentation& p);

/// Splits f into pieces spanned by r_t x^alpha with t + |alpha| = p, t the
/// graded degree of the coefficient monomial. Throws UnsupportedError unless
/// the presentation passes graded_check.
std::map<unsigned, SkewElement> homogeneous_components(const SkewElement& f, const Presentation& p);

/// Renders a word as "x3*x2*x1".
std::string to_string(const Word& w, const Presentation& p);

}  // namespace spbw

#endif  // SPBW_REWRITING_HPP
