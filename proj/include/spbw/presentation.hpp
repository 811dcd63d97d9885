#ifndef SPBW_PRESENTATION_HPP
#define SPBW_PRESENTATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spbw/comm_poly.hpp"

namespace spbw {

/// sigma_i together with its sigma_i-derivation delta_i, so that
/// x_i r = sigma_i(r) x_i + delta_i(r).
struct TwistData {
    RingEndo sigma;
    SigmaDerivation delta;

    static TwistData trivial(std::size_t ring_nvars);
    friend bool operator==(const TwistData&, const TwistData&) = default;
};

/// Lower-order part r0 + sum_l r_l x_l of a relation x_j x_i = c x_i x_j + tail.
struct RelationTail {
    CommPoly r0;
    std::vector<CommPoly> linear;

    static RelationTail zero(std::size_t nvars, std::size_t ring_nvars);
    bool is_zero() const;
    friend bool operator==(const RelationTail&, const RelationTail&) = default;
};

/// Defining data of A = sigma(R)<x_1, ..., x_n>: the coefficient ring, one
/// twist per variable and, for every pair i < j, the relation
///     x_j x_i = c_{i,j} x_i x_j + r0 + sum_l r_l x_l.
/// Relations not set explicitly are c = 1 with a zero tail.
///
/// Nothing here guarantees that the data actually define a skew PBW
/// extension (that the standard monomials are a free basis); that is what
/// diamond_check certifies.
class Presentation {
public:
    Presentation() = default;
    Presentation(std::string name, CoeffRing ring, std::vector<std::string> var_names);

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const CoeffRing& ring() const noexcept { return ring_; }
    std::size_t nvars() const noexcept { return var_names_.size(); }
    std::size_t ring_nvars() const noexcept { return ring_.size(); }
    const std::vector<std::string>& var_names() const noexcept { return var_names_; }

    const TwistData& twist(std::size_t i) const { return twists_.at(i); }
    const std::vector<TwistData>& twists() const noexcept { return twists_; }
    /// Identity sigma without an explicit inverse gets itself as inverse.
    void set_twist(std::size_t i, TwistData t);

    /// c_{i,j} for i < j; c_{i,i} = 1.
    const CommPoly& c(std::size_t i, std::size_t j) const;
    const RelationTail& tail(std::size_t i, std::size_t j) const;
    /// Throws PreconditionError when c is zero or i >= j.
    void set_relation(std::size_t i, std::size_t j, CommPoly c, RelationTail tail);

    /// Throws StructuralError when table sizes or rings are inconsistent.
    void validate() const;

    // Convenience constructors for polynomials over this ring.
    CommPoly zero_poly() const { return CommPoly(ring_nvars()); }
    CommPoly constant(const Rational& r) const { return CommPoly(ring_nvars(), r); }

    friend bool operator==(const Presentation&, const Presentation&) = default;

private:
    std::size_t pair_index(std::size_t i, std::size_t j) const;

    std::string name_;
    CoeffRing ring_;
    std::vector<std::string> var_names_;
    std::vector<TwistData> twists_;
    std::vector<CommPoly> c_;  // strict upper triangle, row major
    std::vector<RelationTail> tails_;
    CommPoly one_;
};

/// Equality of everything except the name.
bool same_tables(const Presentation& a, const Presentation& b);

}  // namespace spbw

#endif  // SPBW_PRESENTATION_HPP
