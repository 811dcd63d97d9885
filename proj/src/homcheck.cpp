#include "spbw/homcheck.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "spbw/error.hpp"
#include "spbw/io.hpp"
#include "spbw/rewriting.hpp"

namespace spbw {

namespace {

// Evaluates polynomials and standard monomials of src inside dst, caching
// powers of the generator images.
class ImageEvaluator {
public:
    ImageEvaluator(const GeneratorImages& phi, const Presentation& src, const Presentation& dst)
        : phi_(phi), src_(src), dst_(dst), mult_(dst) {
        if (phi.variable_images.size() != src.nvars()) {
            throw StructuralError("expected " + std::to_string(src.nvars()) + " variable images, got " +
                                  std::to_string(phi.variable_images.size()));
        }
        if (phi.coeff_images.size() != src.ring_nvars()) {
            throw StructuralError("expected " + std::to_string(src.ring_nvars()) + " coefficient images, got " +
                                  std::to_string(phi.coeff_images.size()));
        }
        for (const auto* list : {&phi.variable_images, &phi.coeff_images}) {
            for (const auto& f : *list) {
                if (f.nvars() != dst.nvars() || f.ring_nvars() != dst.ring_nvars()) {
                    throw StructuralError("generator image does not live in '" + dst.name() + "'");
                }
            }
        }
    }

    Multiplier& mult() { return mult_; }

    SkewElement poly(const CommPoly& r) {
        SkewElement out(dst_.nvars(), dst_.ring_nvars());
        for (const auto& [mono, c] : r.terms()) {
            SkewElement term = mult_.constant(dst_.constant(c));
            for (std::size_t t = 0; t < mono.size(); ++t) {
                if (mono[t] != 0) {
                    term = mult_.mul(term, power(coeff_powers_, phi_.coeff_images, t, mono[t]));
                }
            }
            out += term;
        }
        return out;
    }

    SkewElement monomial(const MultiIndex& alpha) {
        SkewElement out = mult_.one();
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] != 0) {
                out = mult_.mul(out, power(var_powers_, phi_.variable_images, i, alpha[i]));
            }
        }
        return out;
    }

    SkewElement element(const SkewElement& f) {
        SkewElement out(dst_.nvars(), dst_.ring_nvars());
        for (const auto& [alpha, r] : f.terms()) {
            out += mult_.mul(poly(r), monomial(alpha));
        }
        return out;
    }

private:
    using PowerCache = std::map<std::pair<std::size_t, unsigned>, SkewElement>;

    const SkewElement& power(PowerCache& cache, const std::vector<SkewElement>& base, std::size_t i, unsigned e) {
        const auto key = std::make_pair(i, e);
        if (auto it = cache.find(key); it != cache.end()) {
            return it->second;
        }
        SkewElement value = e == 1 ? base[i] : mult_.mul(power(cache, base, i, e - 1), base[i]);
        return cache.emplace(key, std::move(value)).first->second;
    }

    const GeneratorImages& phi_;
    const Presentation& src_;
    const Presentation& dst_;
    Multiplier mult_;
    PowerCache var_powers_;
    PowerCache coeff_powers_;
};

unsigned basis_degree(const CommMonomial& beta, const MultiIndex& alpha, const std::vector<unsigned>& w) {
    return beta.weighted_degree(w) + alpha.degree();
}

void require_positive_grading(const Presentation& p) {
    for (std::size_t t = 0; t < p.ring_nvars(); ++t) {
        if (p.ring().degrees[t] == 0) {
            throw UnsupportedError("coefficient generator '" + p.ring().generators[t] + "' of '" + p.name() +
                                   "' has degree 0, so the filtered pieces are infinite-dimensional");
        }
    }
}

// All exponent vectors of the given length with weighted degree <= bound.
template <typename Vec>
void enumerate(std::size_t len, const std::vector<unsigned>& w, unsigned bound, std::vector<Vec>& out) {
    std::vector<std::uint32_t> e(len, 0);
    const auto rec = [&](auto&& self, std::size_t pos, unsigned used) -> void {
        if (pos == len) {
            out.emplace_back(e);
            return;
        }
        for (std::uint32_t k = 0;; ++k) {
            const unsigned cost = used + k * w[pos];
            if (cost > bound) {
                break;
            }
            e[pos] = k;
            self(self, pos + 1, cost);
            if (w[pos] == 0) {
                break;
            }
        }
        e[pos] = 0;
    };
    rec(rec, 0, 0);
}

// Q-basis elements t^beta x^alpha of total degree <= d.
std::vector<std::pair<CommMonomial, MultiIndex>> q_basis(const Presentation& p, unsigned d) {
    std::vector<CommMonomial> betas;
    enumerate(p.ring_nvars(), p.ring().degrees, d, betas);
    std::vector<MultiIndex> alphas;
    enumerate(p.nvars(), std::vector<unsigned>(p.nvars(), 1), d, alphas);
    std::vector<std::pair<CommMonomial, MultiIndex>> out;
    for (const auto& a : alphas) {
        for (const auto& b : betas) {
            if (basis_degree(b, a, p.ring().degrees) <= d) {
                out.emplace_back(b, a);
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
        return basis_degree(x.first, x.second, p.ring().degrees) < basis_degree(y.first, y.second, p.ring().degrees);
    });
    return out;
}

std::string relation_text(const std::string& lhs, const SkewElement& rhs, const Presentation& p) {
    return lhs + " - (" + to_string(rhs, p) + ")";
}

}  // namespace

GeneratorImages identity_images(const Presentation& p) {
    GeneratorImages out;
    Multiplier mult(p);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        out.variable_images.push_back(mult.generator(i));
    }
    for (std::size_t t = 0; t < p.ring_nvars(); ++t) {
        out.coeff_images.push_back(mult.constant(CommPoly::generator(p.ring_nvars(), t)));
    }
    return out;
}

GeneratorImages compose(const GeneratorImages& psi, const GeneratorImages& phi, const Presentation& middle,
                        const Presentation& target) {
    ImageEvaluator ev(psi, middle, target);
    GeneratorImages out;
    for (const auto& f : phi.variable_images) {
        out.variable_images.push_back(ev.element(f));
    }
    for (const auto& f : phi.coeff_images) {
        out.coeff_images.push_back(ev.element(f));
    }
    return out;
}

SkewElement apply_images(const GeneratorImages& phi, const SkewElement& f, const Presentation& src,
                         const Presentation& dst) {
    if (f.nvars() != src.nvars() || f.ring_nvars() != src.ring_nvars()) {
        throw StructuralError("element does not belong to '" + src.name() + "'");
    }
    ImageEvaluator ev(phi, src, dst);
    return ev.element(f);
}

std::size_t DenseMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) {
        return 0;
    }
    std::vector<std::vector<Integer>> a(rows_, std::vector<Integer>(cols_));
    for (std::size_t r = 0; r < rows_; ++r) {
        Integer den = 1;
        for (std::size_t c = 0; c < cols_; ++c) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), at(r, c).denominator().get_mpz_t());
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& x = at(r, c);
            a[r][c] = x.numerator() * (den / x.denominator());
        }
    }
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && sgn(a[pivot][c]) == 0) {
            ++pivot;
        }
        if (pivot == rows_) {
            continue;
        }
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            for (std::size_t k = c + 1; k < cols_; ++k) {
                Integer v = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[r][k] = std::move(v);
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

HomResult check_hom(const Presentation& src, const Presentation& dst, const GeneratorImages& phi) {
    ImageEvaluator ev(phi, src, dst);
    Multiplier& m = ev.mult();
    Multiplier src_mult(src);
    HomResult result;
    const auto fail = [&](std::string text, SkewElement image) {
        result.ok = false;
        result.failed_relation = std::move(text);
        result.image = std::move(image);
        return result;
    };
    const auto& gens = src.ring().generators;
    const auto& vars = src.var_names();
    const std::size_t ms = src.ring_nvars();

    for (std::size_t a = 0; a < ms; ++a) {
        for (std::size_t b = a + 1; b < ms; ++b) {
            const SkewElement& fa = phi.coeff_images[a];
            const SkewElement& fb = phi.coeff_images[b];
            const SkewElement diff = m.mul(fa, fb) - m.mul(fb, fa);
            if (!diff.is_zero()) {
                return fail(gens[a] + "*" + gens[b] + " - " + gens[b] + "*" + gens[a], diff);
            }
        }
    }
    for (std::size_t i = 0; i < src.nvars(); ++i) {
        const TwistData& tw = src.twist(i);
        for (std::size_t t = 0; t < ms; ++t) {
            SkewElement rhs = src_mult.mul(src_mult.constant(tw.sigma.images[t]), src_mult.generator(i));
            rhs += src_mult.constant(tw.delta.values[t]);
            const SkewElement image =
                m.mul(phi.variable_images[i], phi.coeff_images[t]) - ev.element(rhs);
            if (!image.is_zero()) {
                return fail(relation_text(vars[i] + "*" + gens[t], rhs, src), image);
            }
        }
    }
    for (std::size_t j = 0; j < src.nvars(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            MultiIndex ij(src.nvars());
            ij[i] += 1;
            ij[j] += 1;
            SkewElement rhs = SkewElement::term(ij, src.c(i, j));
            const RelationTail& tail = src.tail(i, j);
            rhs.add_term(MultiIndex(src.nvars()), tail.r0);
            for (std::size_t l = 0; l < src.nvars(); ++l) {
                rhs.add_term(MultiIndex::unit(src.nvars(), l), tail.linear[l]);
            }
            const SkewElement image =
                m.mul(phi.variable_images[j], phi.variable_images[i]) - ev.element(rhs);
            if (!image.is_zero()) {
                return fail(relation_text(vars[j] + "*" + vars[i], rhs, src), image);
            }
        }
    }
    return result;
}

IsoResult check_graded_iso(const Presentation& src, const Presentation& dst, const GeneratorImages& phi,
                           unsigned d) {
    IsoResult out;
    out.degree_bound = d;
    out.hom = check_hom(src, dst, phi);
    if (!out.hom.ok) {
        return out;
    }
    require_positive_grading(src);
    require_positive_grading(dst);

    const auto src_basis = q_basis(src, d);
    const auto dst_basis = q_basis(dst, d);
    const auto& ws = src.ring().degrees;
    const auto& wd = dst.ring().degrees;

    std::map<std::pair<CommMonomial, MultiIndex>, std::size_t> column;
    for (const auto& key : dst_basis) {
        column.emplace(key, column.size());
    }

    // Expanded images, one sparse row per src basis element.
    ImageEvaluator ev(phi, src, dst);
    struct Row {
        unsigned degree;
        unsigned image_degree;
        std::vector<std::pair<std::size_t, Rational>> entries;
        bool outside;  // a term beyond the dst basis enumerated up to d
    };
    std::vector<Row> rows;
    for (const auto& [beta, alpha] : src_basis) {
        const SkewElement image = ev.element(SkewElement::term(alpha, CommPoly::monomial(beta)));
        Row row{basis_degree(beta, alpha, ws), 0, {}, false};
        for (const auto& [a, r] : image.terms()) {
            for (const auto& [b, c] : r.terms()) {
                const unsigned deg = basis_degree(b, a, wd);
                row.image_degree = std::max(row.image_degree, deg);
                const auto it = column.find({b, a});
                if (it == column.end()) {
                    row.outside = true;
                } else {
                    row.entries.emplace_back(it->second, c);
                }
            }
        }
        rows.push_back(std::move(row));
    }

    out.iso = true;
    for (unsigned p = 0; p <= d; ++p) {
        DegreeRank dr;
        dr.degree = p;
        std::vector<const Row*> active;
        for (const auto& row : rows) {
            if (row.degree <= p) {
                active.push_back(&row);
                if (row.outside || row.image_degree > p) {
                    dr.within_filtration = false;
                }
            }
        }
        dr.src_count = active.size();
        dr.dst_count = static_cast<std::size_t>(
            std::count_if(dst_basis.begin(), dst_basis.end(),
                          [&](const auto& key) { return basis_degree(key.first, key.second, wd) <= p; }));
        DenseMatrix mat(active.size(), column.size());
        for (std::size_t r = 0; r < active.size(); ++r) {
            for (const auto& [c, v] : active[r]->entries) {
                mat.at(r, c) = v;
            }
        }
        dr.rank = mat.rank();
        if (!dr.within_filtration || dr.rank != dr.src_count || dr.src_count != dr.dst_count) {
            out.iso = false;
        }
        out.table.push_back(dr);
    }
    return out;
}

}  // namespace spbw
