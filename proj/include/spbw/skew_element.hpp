#ifndef SPBW_SKEW_ELEMENT_HPP
#define SPBW_SKEW_ELEMENT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "spbw/comm_poly.hpp"

namespace spbw {

/// Exponent vector alpha of a standard monomial x_1^a_1 ... x_n^a_n.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t n) : exps_(n, 0) {}
    explicit MultiIndex(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static MultiIndex unit(std::size_t n, std::size_t index);

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

    /// |alpha|
    unsigned degree() const noexcept;
    bool is_zero() const noexcept { return degree() == 0; }
    /// Exponents in reverse variable order.
    MultiIndex reversed() const;

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<std::uint32_t> exps_;
};

/// Total order on standard monomials. Ties inside a degree are broken
/// lexicographically with x_1 the most significant variable. The elimination
/// order compares the block x_1..x_split first (degree, then lex) and then
/// the remaining block the same way.
struct MonomialOrder {
    enum class Kind { deglex, lex, elimination };

    Kind kind = Kind::deglex;
    std::size_t split = 0;

    static MonomialOrder deglex() { return {}; }
    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder elimination(std::size_t split) { return {Kind::elimination, split}; }

    bool less(const MultiIndex& a, const MultiIndex& b) const;
};

/// Element of a skew PBW extension in left normal form: a finite sum of
/// r_alpha x^alpha with nonzero coefficients r_alpha in the coefficient ring.
class SkewElement {
public:
    using TermMap = std::map<MultiIndex, CommPoly>;

    SkewElement() = default;
    SkewElement(std::size_t nvars, std::size_t ring_nvars) : nvars_(nvars), ring_nvars_(ring_nvars) {}

    static SkewElement constant(std::size_t nvars, const CommPoly& r);
    static SkewElement term(const MultiIndex& alpha, const CommPoly& r);

    std::size_t nvars() const noexcept { return nvars_; }
    std::size_t ring_nvars() const noexcept { return ring_nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient at alpha (the zero polynomial when absent).
    CommPoly coefficient(const MultiIndex& alpha) const;
    /// max |alpha| over stored terms; 0 for the zero element.
    unsigned degree() const noexcept;

    void add_term(const MultiIndex& alpha, const CommPoly& r);

    SkewElement& operator+=(const SkewElement& rhs);
    SkewElement& operator-=(const SkewElement& rhs);
    /// Left multiplication of every coefficient by r.
    SkewElement& scale_left(const CommPoly& r);

    friend SkewElement operator+(SkewElement a, const SkewElement& b) { return a += b; }
    friend SkewElement operator-(SkewElement a, const SkewElement& b) { return a -= b; }
    friend SkewElement operator-(SkewElement a);

    friend bool operator==(const SkewElement&, const SkewElement&) = default;

private:
    void require_compatible(const SkewElement& other) const;

    std::size_t nvars_ = 0;
    std::size_t ring_nvars_ = 0;
    TermMap terms_;
};

enum class LinearOp { add, neg, coeff_scale };

/// add(f, g), neg(f) or coeff_scale(r, f) = r*f.
SkewElement linear_op(LinearOp op, const SkewElement& f, const SkewElement& g);
SkewElement coeff_scale(const CommPoly& r, const SkewElement& f);

struct LeadingData {
    MultiIndex lm;
    CommPoly lc;
    unsigned deg = 0;
};

/// Leading monomial, coefficient and degree. For f = 0 returns the zero
/// exponent, the zero coefficient and degree 0.
LeadingData leading_data(const SkewElement& f, const MonomialOrder& ord = MonomialOrder::deglex());

}  // namespace spbw

#endif  // SPBW_SKEW_ELEMENT_HPP
