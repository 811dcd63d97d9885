#include "spbw/comm_poly.hpp"

#include <algorithm>
#include <sstream>

#include "spbw/error.hpp"

namespace spbw {

CoeffRing CoeffRing::polynomial(std::vector<std::string> names) {
    CoeffRing r;
    r.degrees.assign(names.size(), 1);
    r.generators = std::move(names);
    return r;
}

CommMonomial CommMonomial::unit(std::size_t nvars, std::size_t index) {
    CommMonomial m(nvars);
    m.exps_.at(index) = 1;
    return m;
}

unsigned CommMonomial::total_degree() const noexcept {
    unsigned d = 0;
    for (auto e : exps_) {
        d += e;
    }
    return d;
}

unsigned CommMonomial::weighted_degree(const std::vector<unsigned>& weights) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        d += exps_[i] * weights.at(i);
    }
    return d;
}

CommMonomial operator*(const CommMonomial& a, const CommMonomial& b) {
    CommMonomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) {
        r.exps_[i] += b.exps_[i];
    }
    return r;
}

CommPoly::CommPoly(std::size_t nvars, const Rational& constant) : nvars_(nvars) {
    if (!constant.is_zero()) {
        terms_.emplace(CommMonomial(nvars), constant);
    }
}

CommPoly CommPoly::generator(std::size_t nvars, std::size_t index) {
    if (index >= nvars) {
        throw StructuralError("generator index out of range");
    }
    return monomial(CommMonomial::unit(nvars, index));
}

CommPoly CommPoly::monomial(const CommMonomial& m, const Rational& c) {
    CommPoly p(m.size());
    p.add_term(m, c);
    return p;
}

bool CommPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational CommPoly::constant_term() const { return coefficient(CommMonomial(nvars_)); }

Rational CommPoly::coefficient(const CommMonomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int CommPoly::total_degree() const noexcept {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, static_cast<int>(m.total_degree()));
    }
    return d;
}

std::set<unsigned> CommPoly::weighted_degrees(const std::vector<unsigned>& weights) const {
    std::set<unsigned> out;
    for (const auto& [m, c] : terms_) {
        out.insert(m.weighted_degree(weights));
    }
    return out;
}

bool CommPoly::is_homogeneous(const std::vector<unsigned>& weights, unsigned degree) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first.weighted_degree(weights) == degree; });
}

void CommPoly::add_term(const CommMonomial& m, const Rational& c) {
    if (m.size() != nvars_) {
        throw StructuralError("monomial arity does not match polynomial ring");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void CommPoly::require_same_ring(const CommPoly& other, const char* what) const {
    if (nvars_ != other.nvars_) {
        throw StructuralError(std::string("ring mismatch in ") + what + ": " + std::to_string(nvars_) +
                              " vs " + std::to_string(other.nvars_) + " generators");
    }
}

CommPoly& CommPoly::operator+=(const CommPoly& rhs) {
    require_same_ring(rhs, "addition");
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, c);
    }
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& rhs) {
    require_same_ring(rhs, "subtraction");
    for (const auto& [m, c] : rhs.terms_) {
        add_term(m, -c);
    }
    return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    a.require_same_ring(b, "multiplication");
    CommPoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

CommPoly& CommPoly::operator*=(const CommPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

CommPoly& CommPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

CommPoly operator-(CommPoly a) {
    for (auto& [m, c] : a.terms_) {
        c = -c;
    }
    return a;
}

CommPoly CommPoly::pow(unsigned exponent) const {
    CommPoly result(nvars_, Rational(1));
    CommPoly base = *this;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            base *= base;
        }
    }
    return result;
}

CommPoly CommPoly::embed(std::size_t target_nvars, std::size_t offset) const {
    if (offset + nvars_ > target_nvars) {
        throw StructuralError("embedding does not fit target ring");
    }
    CommPoly r(target_nvars);
    for (const auto& [m, c] : terms_) {
        CommMonomial tm(target_nvars);
        for (std::size_t i = 0; i < nvars_; ++i) {
            tm[offset + i] = m[i];
        }
        r.terms_.emplace(std::move(tm), c);
    }
    return r;
}

CommPoly poly_arith(PolyOp op, const CommPoly& p, const CommPoly& q) {
    switch (op) {
        case PolyOp::add:
            return p + q;
        case PolyOp::mul:
            return p * q;
        case PolyOp::neg:
            return -p;
    }
    throw PreconditionError("unknown polynomial operation");
}

namespace {

// Descending deglex with the first generator most significant.
bool deglex_greater(const CommMonomial& a, const CommMonomial& b) {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    if (da != db) {
        return da > db;
    }
    return a.exponents() > b.exponents();
}

std::string monomial_text(const CommMonomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += names.at(i);
        if (m[i] > 1) {
            out += '^' + std::to_string(m[i]);
        }
    }
    return out;
}

}  // namespace

std::string to_string(const CommPoly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) {
        return "0";
    }
    std::vector<std::pair<CommMonomial, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return deglex_greater(a.first, b.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational mag = c;
        if (first) {
            if (c.sign() < 0) {
                os << '-';
                mag = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) {
                mag = -c;
            }
        }
        first = false;
        const auto mono = monomial_text(m, names);
        if (mono.empty()) {
            os << mag;
        } else if (mag.is_one()) {
            os << mono;
        } else {
            os << mag << '*' << mono;
        }
    }
    return os.str();
}

RingEndo RingEndo::identity(std::size_t nvars) {
    RingEndo e;
    for (std::size_t i = 0; i < nvars; ++i) {
        e.images.push_back(CommPoly::generator(nvars, i));
    }
    e.inverse_images = e.images;
    return e;
}

bool RingEndo::is_identity() const {
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] != CommPoly::generator(images.size(), i)) {
            return false;
        }
    }
    return true;
}

RingEndo RingEndo::inverse() const {
    if (!inverse_images) {
        throw PreconditionError("no inverse supplied");
    }
    RingEndo e;
    e.images = *inverse_images;
    e.inverse_images = images;
    return e;
}

SigmaDerivation SigmaDerivation::zero(std::size_t nvars) {
    SigmaDerivation d;
    d.values.assign(nvars, CommPoly(nvars));
    return d;
}

bool SigmaDerivation::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const CommPoly& v) { return v.is_zero(); });
}

namespace {

void require_endo_ring(std::size_t endo_nvars, const CommPoly& p) {
    if (endo_nvars != p.nvars()) {
        throw StructuralError("ring mismatch: map over " + std::to_string(endo_nvars) +
                              " generators applied to polynomial over " + std::to_string(p.nvars()));
    }
}

}  // namespace

CommPoly apply_endo(const RingEndo& e, const CommPoly& p) {
    require_endo_ring(e.nvars(), p);
    const std::size_t n = p.nvars();
    // powers[i][k] = images[i]^k, filled on demand
    std::vector<std::vector<CommPoly>> powers(n);
    auto power = [&](std::size_t i, std::uint32_t k) -> const CommPoly& {
        auto& cache = powers[i];
        if (cache.empty()) {
            cache.emplace_back(n, Rational(1));
        }
        while (cache.size() <= k) {
            cache.push_back(cache.back() * e.images[i]);
        }
        return cache[k];
    };
    CommPoly out(n);
    for (const auto& [m, c] : p.terms()) {
        CommPoly term(n, c);
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
            if (m[i] != 0) {
                term *= power(i, m[i]);
            }
        }
        out += term;
    }
    return out;
}

CommPoly apply_derivation(const SigmaDerivation& d, const RingEndo& twist, const CommPoly& p) {
    require_endo_ring(d.nvars(), p);
    require_endo_ring(twist.nvars(), p);
    const std::size_t n = p.nvars();
    CommPoly out(n);
    for (const auto& [m, c] : p.terms()) {
        // Walk the monomial one generator at a time:
        // d(P*g) = s(P) d(g) + d(P) g.
        CommPoly sigma_prefix(n, Rational(1));
        CommPoly delta_prefix(n);
        for (std::size_t i = 0; i < n; ++i) {
            const CommPoly g = CommPoly::generator(n, i);
            for (std::uint32_t k = 0; k < m[i]; ++k) {
                delta_prefix = sigma_prefix * d.values[i] + delta_prefix * g;
                sigma_prefix *= twist.images[i];
            }
        }
        out += delta_prefix * c;
    }
    return out;
}

RingEndo compose(const RingEndo& outer, const RingEndo& inner) {
    if (outer.nvars() != inner.nvars()) {
        throw StructuralError("ring mismatch in endomorphism composition");
    }
    RingEndo r;
    for (const auto& img : inner.images) {
        r.images.push_back(apply_endo(outer, img));
    }
    if (outer.inverse_images && inner.inverse_images) {
        // (outer o inner)^-1 = inner^-1 o outer^-1
        const RingEndo inner_inv = inner.inverse();
        std::vector<CommPoly> inv;
        for (const auto& img : *outer.inverse_images) {
            inv.push_back(apply_endo(inner_inv, img));
        }
        r.inverse_images = std::move(inv);
    }
    return r;
}

bool verify_endo_inverse(const RingEndo& e) {
    if (!e.inverse_images) {
        throw PreconditionError("no inverse supplied");
    }
    const auto& inv = *e.inverse_images;
    if (inv.size() != e.images.size()) {
        return false;
    }
    const std::size_t n = e.nvars();
    RingEndo inverse_map;
    inverse_map.images = inv;
    for (std::size_t i = 0; i < n; ++i) {
        const CommPoly g = CommPoly::generator(n, i);
        if (apply_endo(e, inv[i]) != g || apply_endo(inverse_map, e.images[i]) != g) {
            return false;
        }
    }
    return true;
}

}  // namespace spbw
