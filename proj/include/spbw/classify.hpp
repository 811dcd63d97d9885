#ifndef SPBW_CLASSIFY_HPP
#define SPBW_CLASSIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spbw/presentation.hpp"
#include "spbw/rewriting.hpp"

namespace spbw {

/// An overlap whose two reductions disagree.
struct DiamondWitness {
    Word word;
    std::string first_route;
    SkewElement first;
    std::string second_route;
    SkewElement second;
};

struct DiamondResult {
    bool ok = true;
    /// Largest word length whose overlaps were all compared and agreed.
    unsigned checked_to_degree = 0;
    std::optional<DiamondWitness> witness;
    /// Failure of the twisted Leibniz consistency on a pair of ring generators.
    std::optional<std::string> leibniz_failure;
};

inline constexpr unsigned kDefaultDiamondDegree = 4;

/// Confluence check up to word length d (d >= 3):
///  - every x_k x_j x_i with k > j > i, reduced with (x_k x_j) first and with
///    (x_j x_i) first;
///  - every x_j x_i t with j > i and t a ring generator, both bracketings;
///  - d_i(ab) computed as s_i(a)d_i(b) + d_i(a)b and with a, b swapped;
///  - every word of length 3..d over variables and ring generators, reduced
///    leftmost-first, rightmost-first and through the multiplication kernel.
/// Lengths whose word count exceeds an internal budget are skipped, which
/// shows up as checked_to_degree < d.
DiamondResult diamond_check(const Presentation& p, unsigned d = kDefaultDiamondDegree);

struct ClassFlags {
    bool constant = false;
    bool quasi_commutative = false;
    bool bijective = false;
    std::vector<std::string> reasons;  // why a flag is false
};

ClassFlags classify_flags(const Presentation& p);

struct GradedVerdict {
    bool graded = false;
    std::vector<std::string> reasons;
};

/// Variables in degree 1, sigma_i degree preserving, delta_i raising degree
/// by exactly one (delta_i(R_p) in R_{p+1}), tails in R_2 + R_1 x_1 + ... + R_1 x_n
/// and c_{i,j} in R_0, all checked on generators.
GradedVerdict graded_check(const Presentation& p);

/// R_0 = Q, i.e. no ring generator sits in degree 0.
bool connected_check(const Presentation& p);

struct CyVerdict {
    bool satisfied = false;
    bool graded = false;
    bool quasi_commutative = false;
    bool connected = false;
    bool base_is_skew_cy = false;
    /// "satisfied" or "failed (<first failing conjunct>=false)".
    std::string summary() const;
    /// Every conjunct that failed, in check order.
    std::vector<std::string> failed_conjuncts() const;
};

inline constexpr const char* kCyCertificateNote = "precondition certificate - Ext conditions not computed";

/// Structural hypotheses for the skew Calabi-Yau transfer: graded,
/// quasi-commutative, connected, and a caller assertion about the base ring.
CyVerdict cy_precondition(const Presentation& p, bool base_is_skew_cy);

/// Iterated Ore extension R[z_1; t_1]...[z_n; t_n] of endomorphism type, where
/// t_j(z_i) = c_{i,j} z_i for i < j and t_j(r) = sigma_j(r).
struct OreStage {
    std::size_t variable = 0;
    std::vector<CommPoly> earlier_scalars;  // entry i is c_{i,j}
    RingEndo on_coefficients;
};

struct OreTower {
    std::vector<OreStage> stages;
};

/// Requires a quasi-commutative bijective presentation (UnsupportedError otherwise).
OreTower ore_tower(const Presentation& p);

/// Entry p is the number of standard monomials of degree p, for p = 0..d.
std::vector<std::uint64_t> growth(const Presentation& p, unsigned d);

struct ClassReport {
    ClassFlags flags;
    GradedVerdict graded;
    bool connected = false;
    DiamondResult diamond;
    CyVerdict cy;
};

ClassReport classify(const Presentation& p, unsigned diamond_degree = kDefaultDiamondDegree,
                     bool base_is_skew_cy = false);

}  // namespace spbw

#endif  // SPBW_CLASSIFY_HPP
