#ifndef SPBW_COMM_POLY_HPP
#define SPBW_COMM_POLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spbw/rational.hpp"

namespace spbw {

/// Descriptor of a supported coefficient ring: the field Q when there are no
/// generators, otherwise Q[t_1, ..., t_m]. Each generator carries a grading
/// degree (1 unless declared otherwise).
struct CoeffRing {
    std::vector<std::string> generators;
    std::vector<unsigned> degrees;

    static CoeffRing field() { return {}; }
    static CoeffRing polynomial(std::vector<std::string> names);

    std::size_t size() const noexcept { return generators.size(); }
    bool is_field() const noexcept { return generators.empty(); }

    friend bool operator==(const CoeffRing&, const CoeffRing&) = default;
};

/// Exponent vector of a monomial of the coefficient ring.
class CommMonomial {
public:
    CommMonomial() = default;
    explicit CommMonomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit CommMonomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static CommMonomial unit(std::size_t nvars, std::size_t index);

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

    unsigned total_degree() const noexcept;
    unsigned weighted_degree(const std::vector<unsigned>& weights) const;
    bool is_one() const noexcept { return total_degree() == 0; }

    friend CommMonomial operator*(const CommMonomial& a, const CommMonomial& b);
    friend bool operator==(const CommMonomial&, const CommMonomial&) = default;
    friend auto operator<=>(const CommMonomial&, const CommMonomial&) = default;

private:
    std::vector<std::uint32_t> exps_;
};

/// Sparse polynomial over Q in a fixed number of commuting generators.
/// Never stores a zero coefficient, so equality is a table comparison.
class CommPoly {
public:
    using TermMap = std::map<CommMonomial, Rational>;

    CommPoly() = default;
    explicit CommPoly(std::size_t nvars) : nvars_(nvars) {}
    CommPoly(std::size_t nvars, const Rational& constant);

    static CommPoly generator(std::size_t nvars, std::size_t index);
    static CommPoly monomial(const CommMonomial& m, const Rational& c = Rational(1));

    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Constant term (zero when absent).
    Rational constant_term() const;
    /// Coefficient of the given monomial (zero when absent).
    Rational coefficient(const CommMonomial& m) const;

    /// Highest total degree; -1 for the zero polynomial.
    int total_degree() const noexcept;
    /// Set of weighted degrees of the stored terms.
    std::set<unsigned> weighted_degrees(const std::vector<unsigned>& weights) const;
    bool is_homogeneous(const std::vector<unsigned>& weights, unsigned degree) const;

    /// A unit of Q[t] is a nonzero constant.
    bool is_unit() const noexcept { return is_constant() && !is_zero(); }

    void add_term(const CommMonomial& m, const Rational& c);

    CommPoly& operator+=(const CommPoly& rhs);
    CommPoly& operator-=(const CommPoly& rhs);
    CommPoly& operator*=(const CommPoly& rhs);
    CommPoly& operator*=(const Rational& scalar);

    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    friend CommPoly operator*(CommPoly a, const Rational& s) { return a *= s; }
    friend CommPoly operator*(const Rational& s, CommPoly a) { return a *= s; }
    friend CommPoly operator-(CommPoly a);

    CommPoly pow(unsigned exponent) const;

    /// Re-expresses this polynomial inside a ring with `target_nvars`
    /// generators, placing generator i at position offset + i.
    CommPoly embed(std::size_t target_nvars, std::size_t offset) const;

    friend bool operator==(const CommPoly&, const CommPoly&) = default;

private:
    void require_same_ring(const CommPoly& other, const char* what) const;

    std::size_t nvars_ = 0;
    TermMap terms_;
};

/// Ring dispatch for the three arithmetic primitives.
enum class PolyOp { add, mul, neg };
CommPoly poly_arith(PolyOp op, const CommPoly& p, const CommPoly& q);

/// Renders a polynomial with the given generator names, terms in descending
/// degree-lexicographic order, e.g. "3/2*t1^2*t2 - t2 + 1".
std::string to_string(const CommPoly& p, const std::vector<std::string>& names);

/// Ring endomorphism of Q[t] given by generator images. Q-linear and unital by
/// construction of the evaluator. Inverse images are optional and supplied by
/// the caller, see verify_endo_inverse.
struct RingEndo {
    std::vector<CommPoly> images;
    std::optional<std::vector<CommPoly>> inverse_images;

    static RingEndo identity(std::size_t nvars);
    std::size_t nvars() const noexcept { return images.size(); }
    bool is_identity() const;
    bool has_inverse() const noexcept { return inverse_images.has_value(); }
    /// The supplied inverse as an endomorphism of its own (whose inverse is this one).
    RingEndo inverse() const;

    friend bool operator==(const RingEndo&, const RingEndo&) = default;
};

/// Values of a sigma-derivation on the ring generators. The twisted Leibniz
/// rule d(pq) = s(p)d(q) + d(p)q extends them to the whole ring, where s is
/// the companion endomorphism passed to apply_derivation.
struct SigmaDerivation {
    std::vector<CommPoly> values;

    static SigmaDerivation zero(std::size_t nvars);
    std::size_t nvars() const noexcept { return values.size(); }
    bool is_zero() const;

    friend bool operator==(const SigmaDerivation&, const SigmaDerivation&) = default;
};

/// Substitutes generator images into p.
CommPoly apply_endo(const RingEndo& e, const CommPoly& p);

CommPoly apply_derivation(const SigmaDerivation& d, const RingEndo& twist, const CommPoly& p);

/// Composition (outer after inner) evaluated on generators.
RingEndo compose(const RingEndo& outer, const RingEndo& inner);

/// True iff both compositions with the supplied inverse fix every generator.
/// Throws PreconditionError("no inverse supplied") when no inverse is present.
bool verify_endo_inverse(const RingEndo& e);

}  // namespace spbw

#endif  // SPBW_COMM_POLY_HPP
