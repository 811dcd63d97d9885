#include "spbw/skew_element.hpp"

#include <algorithm>

#include "spbw/error.hpp"

namespace spbw {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t index) {
    MultiIndex a(n);
    a.exps_.at(index) = 1;
    return a;
}

unsigned MultiIndex::degree() const noexcept {
    unsigned d = 0;
    for (auto e : exps_) {
        d += e;
    }
    return d;
}

MultiIndex MultiIndex::reversed() const {
    return MultiIndex(std::vector<std::uint32_t>(exps_.rbegin(), exps_.rend()));
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) {
        throw StructuralError("multi-index length mismatch");
    }
    MultiIndex r = a;
    for (std::size_t i = 0; i < r.size(); ++i) {
        r.exps_[i] += b.exps_[i];
    }
    return r;
}

namespace {

// Degree-then-lex comparison restricted to positions [begin, end).
int compare_block(const MultiIndex& a, const MultiIndex& b, std::size_t begin, std::size_t end, bool graded) {
    if (graded) {
        unsigned da = 0;
        unsigned db = 0;
        for (std::size_t i = begin; i < end; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) {
            return da < db ? -1 : 1;
        }
    }
    for (std::size_t i = begin; i < end; ++i) {
        if (a[i] != b[i]) {
            return a[i] < b[i] ? -1 : 1;
        }
    }
    return 0;
}

}  // namespace

bool MonomialOrder::less(const MultiIndex& a, const MultiIndex& b) const {
    const std::size_t n = a.size();
    switch (kind) {
        case Kind::lex:
            return compare_block(a, b, 0, n, false) < 0;
        case Kind::deglex:
            return compare_block(a, b, 0, n, true) < 0;
        case Kind::elimination: {
            const std::size_t s = std::min(split, n);
            const int head = compare_block(a, b, 0, s, true);
            if (head != 0) {
                return head < 0;
            }
            return compare_block(a, b, s, n, true) < 0;
        }
    }
    return false;
}

SkewElement SkewElement::constant(std::size_t nvars, const CommPoly& r) {
    SkewElement f(nvars, r.nvars());
    f.add_term(MultiIndex(nvars), r);
    return f;
}

SkewElement SkewElement::term(const MultiIndex& alpha, const CommPoly& r) {
    SkewElement f(alpha.size(), r.nvars());
    f.add_term(alpha, r);
    return f;
}

CommPoly SkewElement::coefficient(const MultiIndex& alpha) const {
    const auto it = terms_.find(alpha);
    return it == terms_.end() ? CommPoly(ring_nvars_) : it->second;
}

unsigned SkewElement::degree() const noexcept {
    unsigned d = 0;
    for (const auto& [alpha, c] : terms_) {
        d = std::max(d, alpha.degree());
    }
    return d;
}

void SkewElement::add_term(const MultiIndex& alpha, const CommPoly& r) {
    if (alpha.size() != nvars_) {
        throw StructuralError("multi-index length does not match variable count");
    }
    if (r.nvars() != ring_nvars_) {
        throw StructuralError("coefficient lives in a different coefficient ring");
    }
    if (r.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(alpha, r);
    if (!inserted) {
        it->second += r;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void SkewElement::require_compatible(const SkewElement& other) const {
    if (nvars_ != other.nvars_ || ring_nvars_ != other.ring_nvars_) {
        throw StructuralError("presentation mismatch between skew elements");
    }
}

SkewElement& SkewElement::operator+=(const SkewElement& rhs) {
    require_compatible(rhs);
    for (const auto& [alpha, c] : rhs.terms_) {
        add_term(alpha, c);
    }
    return *this;
}

SkewElement& SkewElement::operator-=(const SkewElement& rhs) {
    require_compatible(rhs);
    for (const auto& [alpha, c] : rhs.terms_) {
        add_term(alpha, -c);
    }
    return *this;
}

SkewElement& SkewElement::scale_left(const CommPoly& r) {
    if (r.nvars() != ring_nvars_) {
        throw StructuralError("coefficient lives in a different coefficient ring");
    }
    TermMap scaled;
    for (auto& [alpha, c] : terms_) {
        CommPoly p = r * c;
        if (!p.is_zero()) {
            scaled.emplace(alpha, std::move(p));
        }
    }
    terms_ = std::move(scaled);
    return *this;
}

SkewElement operator-(SkewElement a) {
    for (auto& [alpha, c] : a.terms_) {
        c = -c;
    }
    return a;
}

SkewElement coeff_scale(const CommPoly& r, const SkewElement& f) {
    SkewElement out = f;
    out.scale_left(r);
    return out;
}

SkewElement linear_op(LinearOp op, const SkewElement& f, const SkewElement& g) {
    switch (op) {
        case LinearOp::add:
            return f + g;
        case LinearOp::neg:
            return -f;
        case LinearOp::coeff_scale: {
            if (!f.is_zero() && (f.term_count() != 1 || !f.terms().begin()->first.is_zero())) {
                throw PreconditionError("coeff_scale expects a coefficient as its first operand");
            }
            return coeff_scale(f.coefficient(MultiIndex(f.nvars())), g);
        }
    }
    throw PreconditionError("unknown linear operation");
}

LeadingData leading_data(const SkewElement& f, const MonomialOrder& ord) {
    LeadingData out{MultiIndex(f.nvars()), CommPoly(f.ring_nvars()), 0};
    bool found = false;
    for (const auto& [alpha, c] : f.terms()) {
        if (!found || ord.less(out.lm, alpha)) {
            out.lm = alpha;
            out.lc = c;
            found = true;
        }
        out.deg = std::max(out.deg, alpha.degree());
    }
    return out;
}

}  // namespace spbw
