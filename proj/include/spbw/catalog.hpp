#ifndef SPBW_CATALOG_HPP
#define SPBW_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "spbw/homcheck.hpp"
#include "spbw/presentation.hpp"
#include "spbw/rational.hpp"

namespace spbw {

using CatalogParams = std::map<std::string, Rational>;

/// Built-in presentations. Parameter names per entry:
///   weyl                     n (default 1)
///   additive_analogue        n (default 1), q1..qn (or q when n = 1), over_poly (0 or 1)
///   multiplicative_analogue  n (default 2), l<j>_<i> for j > i (default 1), e.g. l2_1
///   q_dilation               n, m (defaults 1), q
///   commutative              n (default 1)
/// Throws PreconditionError on unknown names or parameters, a zero where a
/// nonzero scalar is required, or m > n for q_dilation.
Presentation instantiate(const std::string& name, const CatalogParams& params = {});

/// Catalog entry names in a fixed order.
std::vector<std::string> catalog_names();

// Direct builders behind instantiate.
Presentation weyl(unsigned n);
Presentation additive_analogue(const std::vector<Rational>& q, bool over_poly);
/// lambda[j][i] for j > i is the constant in x_j x_i = lambda_{ji} x_i x_j.
Presentation multiplicative_analogue(const std::vector<std::vector<Rational>>& lambda);
Presentation q_dilation(unsigned n, unsigned m, const Rational& q);
Presentation commutative(unsigned n);

/// An isomorphism claim between two catalog or constructed presentations.
struct Witness {
    std::string name;
    Presentation source;
    Presentation target;
    GeneratorImages images;
};

/// weyl(n) (x)_Q weyl(m) -> weyl(n+m), the left factor onto the first n
/// pairs and the right factor onto the remaining m.
Witness weyl_tensor_witness(unsigned n, unsigned m);

/// change_of_scalars(Q<y>, Q[x]) -> additive_analogue(q, over_poly) with
/// x -> x and y -> y.
Witness additive_factorization_witness(const Rational& q);

/// change_of_scalars(O_2(l3_2), Q[x1]) -> multiplicative_analogue on three
/// variables, x1 going to the first variable.
Witness multiplicative_factorization_witness(const std::vector<std::vector<Rational>>& lambda);

/// Registered witnesses: "weyl_tensor", "additive_factorization",
/// "multiplicative_factorization".
Witness witness(const std::string& name);
std::vector<std::string> witness_names();

/// The strictly lower triangle entries as a full matrix with lambda_ii = 1
/// and lambda_ij = lambda_ji^{-1}.
std::vector<std::vector<Rational>> full_lambda(const std::vector<std::vector<Rational>>& lower);

}  // namespace spbw

#endif  // SPBW_CATALOG_HPP
