#ifndef SPBW_CONSTRUCTORS_HPP
#define SPBW_CONSTRUCTORS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "spbw/presentation.hpp"
#include "spbw/skew_element.hpp"

namespace spbw {

/// Where a generator of a constructed presentation came from.
struct ProvenanceTag {
    enum class Side { left, right };
    Side side = Side::left;
    std::size_t index = 0;

    friend bool operator==(const ProvenanceTag&, const ProvenanceTag&) = default;
};

struct GeneratorProvenance {
    std::vector<ProvenanceTag> variables;
    /// One tag per coefficient generator. Generators introduced by a change of
    /// scalars are tagged right-factor (index into the new base ring).
    std::vector<ProvenanceTag> coefficients;

    friend bool operator==(const GeneratorProvenance&, const GeneratorProvenance&) = default;
};

enum class ConstructionKind { change_of_scalars, tensor_same_ring, tensor_k, opposite, enveloping };

struct ConstructionRecord {
    ConstructionKind kind = ConstructionKind::opposite;
    std::vector<Presentation> sources;
    CoeffRing base;  // change_of_scalars only
    GeneratorProvenance provenance;
    /// Coefficient rings are commutative here, so R^op is taken to be R.
    bool opposite_ring_identified = true;
};

struct Construction {
    Presentation result;
    ConstructionRecord record;
};

/// B (x)_k A for A over the field Q and B = Q[t_1..t_m]. The twists act as
/// the identity / zero on the new generators; relations carry over verbatim.
Construction change_of_scalars(const Presentation& a, const CoeffRing& base);

/// A (x)_R A' over a shared coefficient ring: variables (x_1..x_n, y_1..y_m),
/// block relations copied and y_j x_i = x_i y_j across blocks.
Construction tensor_same_ring(const Presentation& a, const Presentation& b);

/// A (x)_k A' over R (x) R': merged coefficient ring, blockwise twists,
/// commuting cross relations. Clashing names in the right factor get a "_2"
/// suffix (repeated until unique).
Construction tensor_k(const Presentation& a, const Presentation& b);

/// Opposite of a bijective presentation, re-indexed so that z_a = x_{n+1-a}.
/// Twists sigma^op = sigma^{-1}, delta^op = -delta o sigma^{-1}; constants and
/// tails from the explicit rewriting of x_i x_j - x_j x_i c'. Throws
/// PreconditionError("not bijective") when an inverse is missing, fails to
/// verify, or some c_{i,j} is not a unit.
Construction opposite(const Presentation& a);

/// A (x)_k A^op, with every name of the opposite factor suffixed "_op".
Construction enveloping(const Presentation& a);

/// Rebuilds a construction from its record.
Presentation rebuild(const ConstructionRecord& record);

/// Image of f under the anti-isomorphism A -> A^op that is the identity on
/// the underlying set: r x^alpha goes to z^{reverse(alpha)} * r.
SkewElement to_opposite(const SkewElement& f, const Presentation& op);

}  // namespace spbw

#endif  // SPBW_CONSTRUCTORS_HPP
