#ifndef SPBW_TESTS_ORACLE_HPP
#define SPBW_TESTS_ORACLE_HPP

// Reference implementations used only by the tests. They share the data
// types with the library but none of its arithmetic on skew elements.

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "spbw/presentation.hpp"
#include "spbw/skew_element.hpp"

namespace oracle {

using spbw::CommPoly;
using spbw::MultiIndex;
using spbw::Presentation;
using spbw::Rational;
using spbw::SkewElement;

// Token >= 0 is a variable, token < 0 encodes ring generator -(t + 1).
using Tokens = std::vector<int>;
using WordSum = std::map<Tokens, Rational>;

inline int ring_token(std::size_t t) { return -static_cast<int>(t) - 1; }

// Expands a coefficient polynomial into ring-generator words.
inline WordSum expand_poly(const CommPoly& r) {
    WordSum out;
    for (const auto& [mono, c] : r.terms()) {
        Tokens w;
        for (std::size_t t = 0; t < mono.size(); ++t) {
            for (std::uint32_t k = 0; k < mono[t]; ++k) {
                w.push_back(ring_token(t));
            }
        }
        out[w] += c;
    }
    return out;
}

inline void add_into(WordSum& acc, const Tokens& w, const Rational& c) {
    auto& slot = acc[w];
    slot += c;
    if (slot.is_zero()) {
        acc.erase(w);
    }
}

// Naive repeated single-step substitution on token lists: find the first
// adjacent pair violating standard order and replace it, until none is left.
class WordRewriter {
public:
    explicit WordRewriter(const Presentation& p, std::size_t step_limit = 20'000'000)
        : p_(p), limit_(step_limit) {}

    SkewElement reduce(const WordSum& input) {
        std::vector<std::pair<Tokens, Rational>> work(input.begin(), input.end());
        WordSum done;
        std::size_t steps = 0;
        while (!work.empty()) {
            auto [w, c] = std::move(work.back());
            work.pop_back();
            if (++steps > limit_) {
                throw std::runtime_error("oracle rewriting did not terminate");
            }
            const auto pos = first_violation(w);
            if (pos < 0) {
                add_into(done, w, c);
                continue;
            }
            for (auto& [nw, nc] : rewrite(w, static_cast<std::size_t>(pos))) {
                work.emplace_back(std::move(nw), c * nc);
            }
        }
        return to_element(done);
    }

    SkewElement reduce(const Tokens& w) { return reduce(WordSum{{w, Rational(1)}}); }

private:
    long first_violation(const Tokens& w) const {
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            const int a = w[k];
            const int b = w[k + 1];
            if (a < 0 && b < 0 && a < b) {
                return static_cast<long>(k);  // ring generators kept in a fixed order
            }
            if (a >= 0 && b < 0) {
                return static_cast<long>(k);
            }
            if (a >= 0 && b >= 0 && a > b) {
                return static_cast<long>(k);
            }
        }
        return -1;
    }

    std::vector<std::pair<Tokens, Rational>> rewrite(const Tokens& w, std::size_t k) const {
        const int a = w[k];
        const int b = w[k + 1];
        const Tokens prefix(w.begin(), w.begin() + static_cast<long>(k));
        const Tokens suffix(w.begin() + static_cast<long>(k) + 2, w.end());
        std::vector<std::pair<Tokens, Rational>> out;
        const auto emit = [&](const WordSum& middle) {
            for (const auto& [m, c] : middle) {
                Tokens nw = prefix;
                nw.insert(nw.end(), m.begin(), m.end());
                nw.insert(nw.end(), suffix.begin(), suffix.end());
                out.emplace_back(std::move(nw), c);
            }
        };
        if (a < 0 && b < 0) {
            emit(WordSum{{Tokens{b, a}, Rational(1)}});
            return out;
        }
        if (a >= 0 && b < 0) {
            const auto i = static_cast<std::size_t>(a);
            const auto t = static_cast<std::size_t>(-b - 1);
            const auto& tw = p_.twist(i);
            WordSum middle;
            for (const auto& [m0, c] : expand_poly(tw.sigma.images[t])) {
                Tokens m = m0;
                m.push_back(a);
                add_into(middle, m, c);
            }
            for (const auto& [m, c] : expand_poly(tw.delta.values[t])) {
                add_into(middle, m, c);
            }
            emit(middle);
            return out;
        }
        const auto j = static_cast<std::size_t>(a);
        const auto i = static_cast<std::size_t>(b);
        WordSum middle;
        for (const auto& [m0, c] : expand_poly(p_.c(i, j))) {
            Tokens m = m0;
            m.push_back(b);
            m.push_back(a);
            add_into(middle, m, c);
        }
        const auto& tail = p_.tail(i, j);
        for (const auto& [m, c] : expand_poly(tail.r0)) {
            add_into(middle, m, c);
        }
        for (std::size_t l = 0; l < p_.nvars(); ++l) {
            for (const auto& [m0, c] : expand_poly(tail.linear[l])) {
                Tokens m = m0;
                m.push_back(static_cast<int>(l));
                add_into(middle, m, c);
            }
        }
        emit(middle);
        return out;
    }

    SkewElement to_element(const WordSum& done) const {
        SkewElement out(p_.nvars(), p_.ring_nvars());
        for (const auto& [w, c] : done) {
            spbw::CommMonomial mono(p_.ring_nvars());
            MultiIndex alpha(p_.nvars());
            for (int tok : w) {
                if (tok < 0) {
                    mono[static_cast<std::size_t>(-tok - 1)] += 1;
                } else {
                    alpha[static_cast<std::size_t>(tok)] += 1;
                }
            }
            out.add_term(alpha, CommPoly::monomial(mono, c));
        }
        return out;
    }

    const Presentation& p_;
    std::size_t limit_;
};

// The word r * x^alpha as a token sum.
inline WordSum word_of(const CommPoly& r, const MultiIndex& alpha) {
    WordSum out;
    for (const auto& [m0, c] : expand_poly(r)) {
        Tokens m = m0;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            for (std::uint32_t k = 0; k < alpha[i]; ++k) {
                m.push_back(static_cast<int>(i));
            }
        }
        add_into(out, m, c);
    }
    return out;
}

// Concatenation of words, extended bilinearly.
inline WordSum concat(const WordSum& a, const WordSum& b) {
    WordSum out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            Tokens w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            add_into(out, w, ca * cb);
        }
    }
    return out;
}

inline WordSum word_of(const SkewElement& f) {
    WordSum out;
    for (const auto& [alpha, r] : f.terms()) {
        for (const auto& [w, c] : word_of(r, alpha)) {
            add_into(out, w, c);
        }
    }
    return out;
}

// ------------------------------------------------------------ random data

class Random {
public:
    explicit Random(std::uint32_t seed) : gen_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

    Rational rational() {
        int num = 0;
        while (num == 0) {
            num = integer(-4, 4);
        }
        return Rational(num, integer(1, 3));
    }

    MultiIndex multi_index(std::size_t n, unsigned max_degree) {
        MultiIndex a(n);
        if (n == 0) {
            return a;
        }
        const int deg = integer(0, static_cast<int>(max_degree));
        for (int k = 0; k < deg; ++k) {
            a[static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1))] += 1;
        }
        return a;
    }

    CommPoly poly(std::size_t m, unsigned max_degree, int max_terms = 2) {
        CommPoly r(m);
        while (r.is_zero()) {
            const int terms = integer(1, max_terms);
            for (int k = 0; k < terms; ++k) {
                spbw::CommMonomial mono(m);
                if (m > 0) {
                    const int deg = integer(0, static_cast<int>(max_degree));
                    for (int d = 0; d < deg; ++d) {
                        mono[static_cast<std::size_t>(integer(0, static_cast<int>(m) - 1))] += 1;
                    }
                }
                r.add_term(mono, rational());
            }
        }
        return r;
    }

    SkewElement element(const Presentation& p, unsigned max_degree, int max_terms = 3) {
        SkewElement f(p.nvars(), p.ring_nvars());
        const int terms = integer(1, max_terms);
        for (int k = 0; k < terms; ++k) {
            f.add_term(multi_index(p.nvars(), max_degree), poly(p.ring_nvars(), 1));
        }
        return f;
    }

private:
    std::mt19937 gen_;
};

}  // namespace oracle

#endif  // SPBW_TESTS_ORACLE_HPP
