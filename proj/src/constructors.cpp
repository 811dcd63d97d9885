#include "spbw/constructors.hpp"

#include <set>

#include "spbw/error.hpp"
#include "spbw/rewriting.hpp"

namespace spbw {

namespace {

using Side = ProvenanceTag::Side;

std::vector<ProvenanceTag> tags(Side side, std::size_t count, std::size_t offset = 0) {
    std::vector<ProvenanceTag> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back({side, offset + i});
    }
    return out;
}

// Renames the right-hand identifiers that clash with `taken` (or with each
// other) by appending `suffix` until unique.
std::vector<std::string> disjoint_names(std::set<std::string>& taken, const std::vector<std::string>& names,
                                        const std::string& suffix) {
    std::vector<std::string> out;
    for (auto name : names) {
        while (taken.count(name) != 0) {
            name += suffix;
        }
        taken.insert(name);
        out.push_back(name);
    }
    return out;
}

std::set<std::string> identifiers(const Presentation& p) {
    std::set<std::string> out(p.var_names().begin(), p.var_names().end());
    out.insert(p.ring().generators.begin(), p.ring().generators.end());
    return out;
}

// Moves a twist over R into the merged ring (ring generators placed at
// `offset`); the other block is fixed by sigma and killed by delta.
TwistData embed_twist(const TwistData& tw, std::size_t target_nvars, std::size_t offset) {
    TwistData out = TwistData::trivial(target_nvars);
    for (std::size_t t = 0; t < tw.sigma.images.size(); ++t) {
        out.sigma.images[offset + t] = tw.sigma.images[t].embed(target_nvars, offset);
        out.delta.values[offset + t] = tw.delta.values[t].embed(target_nvars, offset);
    }
    if (tw.sigma.inverse_images) {
        for (std::size_t t = 0; t < tw.sigma.inverse_images->size(); ++t) {
            (*out.sigma.inverse_images)[offset + t] = (*tw.sigma.inverse_images)[t].embed(target_nvars, offset);
        }
    } else {
        out.sigma.inverse_images.reset();
    }
    return out;
}

// Copies the relations of `src` into `dst`, variables shifted by var_offset
// and ring generators by ring_offset.
void copy_relations(const Presentation& src, Presentation& dst, std::size_t var_offset, std::size_t ring_offset) {
    const std::size_t m = dst.ring_nvars();
    for (std::size_t i = 0; i < src.nvars(); ++i) {
        for (std::size_t j = i + 1; j < src.nvars(); ++j) {
            const RelationTail& t = src.tail(i, j);
            RelationTail nt = RelationTail::zero(dst.nvars(), m);
            nt.r0 = t.r0.embed(m, ring_offset);
            for (std::size_t l = 0; l < src.nvars(); ++l) {
                nt.linear[var_offset + l] = t.linear[l].embed(m, ring_offset);
            }
            dst.set_relation(var_offset + i, var_offset + j, src.c(i, j).embed(m, ring_offset), std::move(nt));
        }
    }
}

Presentation tensor_core(const Presentation& a, const Presentation& b, CoeffRing ring, std::size_t b_ring_offset,
                         std::vector<std::string> b_vars, const std::string& name) {
    std::vector<std::string> vars = a.var_names();
    vars.insert(vars.end(), b_vars.begin(), b_vars.end());
    const std::size_t m = ring.size();
    Presentation out(name, std::move(ring), std::move(vars));
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        out.set_twist(i, embed_twist(a.twist(i), m, 0));
    }
    for (std::size_t j = 0; j < b.nvars(); ++j) {
        out.set_twist(a.nvars() + j, embed_twist(b.twist(j), m, b_ring_offset));
    }
    copy_relations(a, out, 0, 0);
    copy_relations(b, out, a.nvars(), b_ring_offset);
    return out;
}

CommPoly unit_inverse(const CommPoly& c) {
    if (!c.is_unit()) {
        throw PreconditionError("not bijective: relation constant is not a unit");
    }
    return CommPoly(c.nvars(), c.constant_term().inverse());
}

}  // namespace

Construction change_of_scalars(const Presentation& a, const CoeffRing& base) {
    if (!a.ring().is_field()) {
        throw UnsupportedError("change_of_scalars needs a presentation over the field Q");
    }
    std::set<std::string> taken(a.var_names().begin(), a.var_names().end());
    CoeffRing ring = base;
    if (ring.degrees.size() != ring.generators.size()) {
        ring.degrees.resize(ring.generators.size(), 1);
    }
    ring.generators = disjoint_names(taken, base.generators, "_2");
    const std::size_t m = ring.size();
    Presentation out(a.name().empty() ? "scalars" : "scalars_" + a.name(), ring, a.var_names());
    copy_relations(a, out, 0, 0);

    Construction c{std::move(out), {}};
    c.record.kind = ConstructionKind::change_of_scalars;
    c.record.sources = {a};
    c.record.base = base;
    c.record.provenance.variables = tags(Side::left, a.nvars());
    c.record.provenance.coefficients = tags(Side::right, m);
    return c;
}

Construction tensor_same_ring(const Presentation& a, const Presentation& b) {
    if (a.ring() != b.ring()) {
        throw StructuralError("coefficient rings differ; use tensor_k instead");
    }
    std::set<std::string> taken = identifiers(a);
    auto b_vars = disjoint_names(taken, b.var_names(), "_2");
    const std::size_t m = a.ring_nvars();
    Presentation out(a.name() + "_x_" + b.name(), a.ring(), a.var_names());
    {
        std::vector<std::string> vars = a.var_names();
        vars.insert(vars.end(), b_vars.begin(), b_vars.end());
        out = Presentation(a.name() + "_x_" + b.name(), a.ring(), std::move(vars));
    }
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        out.set_twist(i, a.twist(i));
    }
    for (std::size_t j = 0; j < b.nvars(); ++j) {
        out.set_twist(a.nvars() + j, b.twist(j));
    }
    (void)m;
    copy_relations(a, out, 0, 0);
    copy_relations(b, out, a.nvars(), 0);

    Construction c{std::move(out), {}};
    c.record.kind = ConstructionKind::tensor_same_ring;
    c.record.sources = {a, b};
    c.record.provenance.variables = tags(Side::left, a.nvars());
    auto right = tags(Side::right, b.nvars());
    c.record.provenance.variables.insert(c.record.provenance.variables.end(), right.begin(), right.end());
    c.record.provenance.coefficients = tags(Side::left, m);
    return c;
}

Construction tensor_k(const Presentation& a, const Presentation& b) {
    std::set<std::string> taken = identifiers(a);
    const auto b_gens = disjoint_names(taken, b.ring().generators, "_2");
    const auto b_vars = disjoint_names(taken, b.var_names(), "_2");
    CoeffRing ring = a.ring();
    ring.generators.insert(ring.generators.end(), b_gens.begin(), b_gens.end());
    ring.degrees.insert(ring.degrees.end(), b.ring().degrees.begin(), b.ring().degrees.end());

    Construction c{tensor_core(a, b, std::move(ring), a.ring_nvars(), b_vars, a.name() + "_xk_" + b.name()), {}};
    c.record.kind = ConstructionKind::tensor_k;
    c.record.sources = {a, b};
    c.record.provenance.variables = tags(Side::left, a.nvars());
    auto right_vars = tags(Side::right, b.nvars());
    c.record.provenance.variables.insert(c.record.provenance.variables.end(), right_vars.begin(), right_vars.end());
    c.record.provenance.coefficients = tags(Side::left, a.ring_nvars());
    auto right_gens = tags(Side::right, b.ring_nvars());
    c.record.provenance.coefficients.insert(c.record.provenance.coefficients.end(), right_gens.begin(),
                                            right_gens.end());
    return c;
}

Construction opposite(const Presentation& a) {
    a.validate();
    const std::size_t n = a.nvars();
    const std::size_t m = a.ring_nvars();
    std::vector<RingEndo> inverses;
    for (std::size_t i = 0; i < n; ++i) {
        const RingEndo& s = a.twist(i).sigma;
        if (!s.has_inverse() || !verify_endo_inverse(s)) {
            throw PreconditionError("not bijective: sigma_" + a.var_names()[i] + " has no verified inverse");
        }
        inverses.push_back(s.inverse());
    }
    const auto sinv = [&](std::size_t i, const CommPoly& r) { return apply_endo(inverses[i], r); };
    const auto delta = [&](std::size_t i, const CommPoly& r) {
        return apply_derivation(a.twist(i).delta, a.twist(i).sigma, r);
    };
    const auto z = [n](std::size_t i) { return n - 1 - i; };  // x_i <-> z_{n-1-i}

    std::vector<std::string> names(a.var_names().rbegin(), a.var_names().rend());
    Presentation out(a.name() + "_op", a.ring(), std::move(names));

    for (std::size_t i = 0; i < n; ++i) {
        TwistData tw;
        tw.sigma = inverses[i];
        tw.delta = SigmaDerivation::zero(m);
        for (std::size_t t = 0; t < m; ++t) {
            tw.delta.values[t] = -delta(i, sinv(i, CommPoly::generator(m, t)));
        }
        out.set_twist(z(i), std::move(tw));
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const CommPoly cinv = unit_inverse(a.c(i, j));
            const RelationTail& tail = a.tail(i, j);
            const CommPoly cp = sinv(i, sinv(j, cinv));  // c'_{i,j}
            const CommPoly dj = delta(j, sinv(j, cinv));

            // In A^op: x_j * x_i = c' x_i * x_j + t0 + sum_l tl[l] * x_l
            CommPoly t0 = -(cinv * tail.r0) + delta(i, sinv(i, dj));
            std::vector<CommPoly> tl(n, CommPoly(m));
            for (std::size_t l = 0; l < n; ++l) {
                const CommPoly s = cinv * tail.linear[l];
                t0 += delta(l, sinv(l, s));
                tl[l] = -sinv(l, s);
            }
            tl[i] -= sinv(i, dj);
            tl[j] -= delta(i, sinv(i, sinv(j, cinv)));

            // Solve for z_a z_b (a = z(i) > b = z(j)): z_a z_b = c'^{-1} z_b z_a - c'^{-1}(t0 + sum tl z).
            const CommPoly cp_inv = unit_inverse(cp);
            RelationTail nt = RelationTail::zero(n, m);
            nt.r0 = -(cp_inv * t0);
            for (std::size_t l = 0; l < n; ++l) {
                nt.linear[z(l)] = -(cp_inv * tl[l]);
            }
            out.set_relation(z(j), z(i), cp_inv, std::move(nt));
        }
    }

    Construction c{std::move(out), {}};
    c.record.kind = ConstructionKind::opposite;
    c.record.sources = {a};
    for (std::size_t k = 0; k < n; ++k) {
        c.record.provenance.variables.push_back({Side::left, n - 1 - k});
    }
    c.record.provenance.coefficients = tags(Side::left, m);
    return c;
}

Construction enveloping(const Presentation& a) {
    Presentation op = opposite(a).result;
    std::vector<std::string> vars;
    for (const auto& v : op.var_names()) {
        vars.push_back(v + "_op");
    }
    CoeffRing ring = op.ring();
    for (auto& g : ring.generators) {
        g += "_op";
    }
    Presentation renamed(op.name(), ring, vars);
    for (std::size_t i = 0; i < op.nvars(); ++i) {
        renamed.set_twist(i, op.twist(i));
        for (std::size_t j = i + 1; j < op.nvars(); ++j) {
            renamed.set_relation(i, j, op.c(i, j), op.tail(i, j));
        }
    }
    Construction c = tensor_k(a, renamed);
    c.result.set_name(a.name() + "_env");
    c.record.kind = ConstructionKind::enveloping;
    c.record.sources = {a};
    return c;
}

Presentation rebuild(const ConstructionRecord& record) {
    switch (record.kind) {
        case ConstructionKind::change_of_scalars:
            return change_of_scalars(record.sources.at(0), record.base).result;
        case ConstructionKind::tensor_same_ring:
            return tensor_same_ring(record.sources.at(0), record.sources.at(1)).result;
        case ConstructionKind::tensor_k:
            return tensor_k(record.sources.at(0), record.sources.at(1)).result;
        case ConstructionKind::opposite:
            return opposite(record.sources.at(0)).result;
        case ConstructionKind::enveloping:
            return enveloping(record.sources.at(0)).result;
    }
    throw PreconditionError("unknown construction kind");
}

SkewElement to_opposite(const SkewElement& f, const Presentation& op) {
    Multiplier mult(op);
    SkewElement out(op.nvars(), op.ring_nvars());
    for (const auto& [alpha, r] : f.terms()) {
        out += mult.commute_past(alpha.reversed(), r);
    }
    return out;
}

}  // namespace spbw
