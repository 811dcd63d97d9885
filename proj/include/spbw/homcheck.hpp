#ifndef SPBW_HOMCHECK_HPP
#define SPBW_HOMCHECK_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spbw/presentation.hpp"
#include "spbw/rational.hpp"
#include "spbw/skew_element.hpp"

namespace spbw {

/// Images of the source generators inside the target algebra. Coefficient
/// generators may go to arbitrary target elements (a variable of the target
/// is allowed), as long as the images commute with each other.
struct GeneratorImages {
    std::vector<SkewElement> variable_images;
    std::vector<SkewElement> coeff_images;
};

/// The identity on a presentation.
GeneratorImages identity_images(const Presentation& p);

/// psi after phi, for phi: A -> B and psi: B -> C.
GeneratorImages compose(const GeneratorImages& psi, const GeneratorImages& phi, const Presentation& middle,
                        const Presentation& target);

/// Image of an element of src under phi.
SkewElement apply_images(const GeneratorImages& phi, const SkewElement& f, const Presentation& src,
                         const Presentation& dst);

class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
    const Rational& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

    /// Fraction-free (Bareiss) elimination after clearing row denominators.
    std::size_t rank() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct HomResult {
    bool ok = true;
    /// The relation that failed, e.g. "y*x - x*y - 1", and its image.
    std::string failed_relation;
    std::optional<SkewElement> image;
};

/// Checks that every defining relation of src maps to zero in dst:
///   x_i t - sigma_i(t) x_i - delta_i(t)   for each coefficient generator t,
///   x_j x_i - c_{i,j} x_i x_j - tail       for each j > i,
/// plus commutation of the coefficient images. Throws StructuralError on
/// image arity or ring mismatch.
HomResult check_hom(const Presentation& src, const Presentation& dst, const GeneratorImages& phi);

struct DegreeRank {
    unsigned degree = 0;
    std::size_t src_count = 0;
    std::size_t dst_count = 0;
    std::size_t rank = 0;
    bool within_filtration = true;
};

struct IsoResult {
    HomResult hom;
    bool iso = false;
    unsigned degree_bound = 0;
    std::vector<DegreeRank> table;
};

inline constexpr unsigned kDefaultIsoDegree = 6;

/// Degree-bounded bijectivity for the total-degree filtration (coefficient
/// degree plus monomial degree). For each p <= d the images of the Q-basis
/// t^beta x^alpha of src-degree <= p are expanded in the Q-basis of dst and
/// must be independent, stay inside degree <= p and match dst's count there.
/// Throws UnsupportedError when a coefficient generator sits in degree 0
/// (the pieces would be infinite-dimensional).
IsoResult check_graded_iso(const Presentation& src, const Presentation& dst, const GeneratorImages& phi,
                           unsigned d = kDefaultIsoDegree);

}  // namespace spbw

#endif  // SPBW_HOMCHECK_HPP
