#include "spbw/presentation.hpp"

#include <algorithm>

#include "spbw/error.hpp"

namespace spbw {

TwistData TwistData::trivial(std::size_t ring_nvars) {
    return {RingEndo::identity(ring_nvars), SigmaDerivation::zero(ring_nvars)};
}

RelationTail RelationTail::zero(std::size_t nvars, std::size_t ring_nvars) {
    return {CommPoly(ring_nvars), std::vector<CommPoly>(nvars, CommPoly(ring_nvars))};
}

bool RelationTail::is_zero() const {
    return r0.is_zero() && std::all_of(linear.begin(), linear.end(), [](const CommPoly& p) { return p.is_zero(); });
}

Presentation::Presentation(std::string name, CoeffRing ring, std::vector<std::string> var_names)
    : name_(std::move(name)), ring_(std::move(ring)), var_names_(std::move(var_names)) {
    if (ring_.degrees.size() != ring_.generators.size()) {
        ring_.degrees.resize(ring_.generators.size(), 1);
    }
    const std::size_t n = var_names_.size();
    const std::size_t m = ring_.size();
    twists_.assign(n, TwistData::trivial(m));
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    c_.assign(pairs, CommPoly(m, Rational(1)));
    tails_.assign(pairs, RelationTail::zero(n, m));
    one_ = CommPoly(m, Rational(1));
}

std::size_t Presentation::pair_index(std::size_t i, std::size_t j) const {
    const std::size_t n = nvars();
    if (!(i < j && j < n)) {
        throw PreconditionError("relation indices must satisfy i < j < n (got " + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
    }
    // rows 0..i-1 contribute (n-1) + (n-2) + ... + (n-i) entries
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

void Presentation::set_twist(std::size_t i, TwistData t) {
    const std::size_t m = ring_nvars();
    if (i >= nvars()) {
        throw PreconditionError("variable index out of range");
    }
    if (t.sigma.images.size() != m || t.delta.values.size() != m) {
        throw StructuralError("twist arity does not match coefficient ring");
    }
    for (const auto& p : t.sigma.images) {
        if (p.nvars() != m) {
            throw StructuralError("sigma image outside the coefficient ring");
        }
    }
    for (const auto& p : t.delta.values) {
        if (p.nvars() != m) {
            throw StructuralError("delta value outside the coefficient ring");
        }
    }
    if (t.sigma.inverse_images && t.sigma.inverse_images->size() != m) {
        throw StructuralError("sigma inverse arity does not match coefficient ring");
    }
    if (!t.sigma.inverse_images && t.sigma.is_identity()) {
        t.sigma.inverse_images = t.sigma.images;
    }
    twists_[i] = std::move(t);
}

const CommPoly& Presentation::c(std::size_t i, std::size_t j) const {
    if (i == j) {
        return one_;
    }
    return c_.at(pair_index(i, j));
}

const RelationTail& Presentation::tail(std::size_t i, std::size_t j) const { return tails_.at(pair_index(i, j)); }

void Presentation::set_relation(std::size_t i, std::size_t j, CommPoly c, RelationTail tail) {
    const std::size_t idx = pair_index(i, j);
    const std::size_t m = ring_nvars();
    if (c.nvars() != m || tail.r0.nvars() != m || tail.linear.size() != nvars()) {
        throw StructuralError("relation data do not match presentation shape");
    }
    for (const auto& p : tail.linear) {
        if (p.nvars() != m) {
            throw StructuralError("relation tail coefficient outside the coefficient ring");
        }
    }
    if (c.is_zero()) {
        throw PreconditionError("relation constant c_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                "} must be nonzero");
    }
    c_[idx] = std::move(c);
    tails_[idx] = std::move(tail);
}

void Presentation::validate() const {
    const std::size_t n = nvars();
    const std::size_t m = ring_nvars();
    if (twists_.size() != n || ring_.degrees.size() != m) {
        throw StructuralError("presentation tables have inconsistent sizes");
    }
    for (const auto& c : c_) {
        if (c.nvars() != m || c.is_zero()) {
            throw StructuralError("invalid relation constant");
        }
    }
    for (const auto& t : tails_) {
        if (t.linear.size() != n) {
            throw StructuralError("invalid relation tail");
        }
    }
}

bool same_tables(const Presentation& a, const Presentation& b) {
    Presentation renamed = b;
    renamed.set_name(a.name());
    return a == renamed;
}

}  // namespace spbw
