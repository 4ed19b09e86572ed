/* Copyright 2026 The logderiv Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
 // Weight-theta Rota-Baxter contexts, the Atkinson recursion and the recursion for
 // logarithmic derivatives D_d(phi) = phi^{-1} d(phi) of its solution.


#ifndef LOGDERIV_ROTA_BAXTER_HPP
#define LOGDERIV_ROTA_BAXTER_HPP

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "logderiv/dynkin.hpp"
#include "logderiv/enveloping.hpp"
#include "logderiv/series.hpp"

namespace logderiv {

/* Finitely supported sequence s: {0..m-1} -> A with the pointwise product. */
template <class E>
class Sequence {
public:
    explicit Sequence(std::vector<E> values) : values_(std::move(values)) {
        if (values_.empty())
            throw std::invalid_argument("Sequence needs at least one point");
    }
    static Sequence constant(const E& v, std::size_t length) { return Sequence(std::vector<E>(length, v)); }

    std::size_t length() const { return values_.size(); }
    const E& operator[](std::size_t n) const { return values_[n]; }
    const std::vector<E>& values() const { return values_; }

    bool is_zero() const {
        for (const E& v : values_)
            if (!v.is_zero())
                return false;
        return true;
    }

    template <class Fn>
    Sequence map(Fn&& fn) const {
        std::vector<E> out;
        out.reserve(values_.size());
        for (const E& v : values_)
            out.push_back(fn(v));
        return Sequence(std::move(out));
    }

    Sequence& operator+=(const Sequence& o) {
        check(o);
        for (std::size_t n = 0; n < values_.size(); ++n)
            values_[n] += o.values_[n];
        return *this;
    }
    Sequence& operator-=(const Sequence& o) {
        check(o);
        for (std::size_t n = 0; n < values_.size(); ++n)
            values_[n] -= o.values_[n];
        return *this;
    }
    friend Sequence operator+(Sequence a, const Sequence& b) { return a += b; }
    friend Sequence operator-(Sequence a, const Sequence& b) { return a -= b; }
    friend Sequence operator-(const Sequence& a) { return a.map([](const E& v) { return -v; }); }
    friend Sequence operator*(const Rational& c, const Sequence& a) {
        return a.map([&](const E& v) { return c * v; });
    }
    friend bool operator==(const Sequence& a, const Sequence& b) { return a.values_ == b.values_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t n = 0; n < values_.size(); ++n)
            s += (n ? "; " : "") + values_[n].str();
        return s + ")";
    }

private:
    void check(const Sequence& o) const {
        if (o.values_.size() != values_.size())
            throw std::invalid_argument("sequences of different lengths");
    }
    std::vector<E> values_;
};

template <class E>
Sequence<E> mul_truncated(const Sequence<E>& a, const Sequence<E>& b, int n) {
    if (a.length() != b.length())
        throw std::invalid_argument("sequences of different lengths");
    std::vector<E> out;
    for (std::size_t k = 0; k < a.length(); ++k)
        out.push_back(mul_truncated(a[k], b[k], n));
    return Sequence<E>(std::move(out));
}
template <class E>
Sequence<E> degree_part(const Sequence<E>& a, int degree) {
    return a.map([&](const E& v) { return degree_part(v, degree); });
}
template <class E>
Sequence<E> truncate(const Sequence<E>& a, int max_deg) {
    return a.map([&](const E& v) { return truncate(v, max_deg); });
}
template <class E>
Sequence<E> zero_like(const Sequence<E>& a) {
    return a.map([](const E& v) { return zero_like(v); });
}
template <class E>
Sequence<E> unit_like(const Sequence<E>& a) {
    return a.map([](const E& v) { return unit_like(v); });
}
template <class E>
int max_degree(const Sequence<E>& a) {
    int d = -1;
    for (const E& v : a.values())
        d = std::max(d, max_degree(v));
    return d;
}

/* An associative algebra with unit `one`, a weight-theta Rota-Baxter operator R on
 * its positive-degree part and optionally a derivation d commuting with R:
 *   R(x)R(y) = R(R(x)y) + R(xR(y)) - theta R(xy). */
template <class E>
struct RBContext {
    std::string name;
    E one;
    Rational theta;
    std::function<E(const E&)> R;
    std::function<E(const E&)> d; // empty when the context carries no derivation

    bool has_derivation() const { return static_cast<bool>(d); }
};

// R(x)R(y) - R(R(x)y) - R(xR(y)) + theta R(xy), truncated at n. Zero for a valid context.
template <class E>
E rb_identity_defect(const RBContext<E>& ctx, const E& x, const E& y, int n) {
    const auto& R = ctx.R;
    E lhs = mul_truncated(R(x), R(y), n);
    E rhs = R(mul_truncated(R(x), y, n)) + R(mul_truncated(x, R(y), n)) - ctx.theta * R(mul_truncated(x, y, n));
    return truncate(lhs - rhs, n);
}

// Throws std::invalid_argument naming the first probe where d o R != R o d.
template <class E>
void check_commutation(const RBContext<E>& ctx, std::span<const E> probes) {
    if (!ctx.has_derivation())
        return;
    for (const E& p : probes)
        if (!(ctx.d(ctx.R(p)) == ctx.R(ctx.d(p))))
            throw std::invalid_argument(ctx.name + ": derivation does not commute with R on " + p.str());
}

namespace detail {

template <class E>
void require_positive(const E& x, int n, const char* what) {
    if (n < 1)
        throw std::invalid_argument(std::string(what) + ": order must be >= 1");
    if (has_constant_part(x))
        throw std::invalid_argument(std::string(what) + ": generator has a degree-0 part");
}

template <class E>
void require_derivation(const RBContext<E>& ctx, const char* what) {
    if (!ctx.has_derivation())
        throw std::invalid_argument(std::string(what) + ": context has no derivation d");
}

} // namespace detail

// R^[1](x) = R(x), R^[k](x) = R(R^[k-1](x) x), for k = 1..n, truncated at degree n.
template <class E>
std::vector<E> picard_terms(const RBContext<E>& ctx, const E& x, int n) {
    detail::require_positive(x, n, "picard_terms");
    std::vector<E> terms;
    terms.push_back(truncate(ctx.R(truncate(x, n)), n));
    for (int k = 2; k <= n; ++k)
        terms.push_back(truncate(ctx.R(mul_truncated(terms.back(), x, n)), n));
    return terms;
}

// phi = 1 + sum R^[k](x), the solution of phi = 1 + R(phi x) up to degree n.
template <class E>
Series<E> atkinson_solve(const RBContext<E>& ctx, const E& x, int n) {
    E phi = ctx.one;
    for (const E& t : picard_terms(ctx, x, n))
        phi += t;
    return Series<E>::from_total(phi, n);
}

// phi - 1 - R(phi x), truncated at n.
template <class E>
E atkinson_defect(const RBContext<E>& ctx, const E& phi, const E& x, int n) {
    return truncate(phi - ctx.one - ctx.R(mul_truncated(phi, x, n)), n);
}

template <class E>
struct LogDerivTerm {
    E I; // I_d^[k](x)
    E R; // R_d^[k](x) = R(I_d^[k](x))
};

/* I_d^[1] = d(x), I_d^[k+1] = [R_d^[k](x), x] + theta x I_d^[k](x), R_d^[k] = R(I_d^[k]),
 * for k = 1..n. Their R-parts sum to phi^{-1} d(phi). */
template <class E>
std::vector<LogDerivTerm<E>> logderiv_terms(const RBContext<E>& ctx, const E& x, int n) {
    detail::require_positive(x, n, "logderiv_terms");
    detail::require_derivation(ctx, "logderiv_terms");
    std::vector<LogDerivTerm<E>> terms;
    E I = truncate(ctx.d(x), n);
    terms.push_back({I, truncate(ctx.R(I), n)});
    for (int k = 2; k <= n; ++k) {
        const auto& prev = terms.back();
        E next = commutator_truncated(prev.R, x, n) + ctx.theta * mul_truncated(x, prev.I, n);
        E r = truncate(ctx.R(next), n);
        terms.push_back({std::move(next), std::move(r)});
    }
    return terms;
}

template <class E>
E logderiv_sum(const std::vector<LogDerivTerm<E>>& terms) {
    E s = zero_like(terms.at(0).R);
    for (const auto& t : terms)
        s += t.R;
    return s;
}

// d(R^[p](x)) - R_d^[p](x) - sum_{i=1}^{p-1} R^[i](x) R_d^[p-i](x), truncated at n; 1 <= p <= n.
template <class E>
E expansion_defect(const RBContext<E>& ctx, const E& x, int p, int n) {
    if (p < 1 || p > n)
        throw std::invalid_argument("expansion_defect: need 1 <= p <= n");
    const auto picard = picard_terms(ctx, x, n);
    const auto terms = logderiv_terms(ctx, x, n);
    E rhs = terms[p - 1].R;
    for (int i = 1; i < p; ++i)
        rhs += mul_truncated(picard[i - 1], terms[p - i - 1].R, n);
    return truncate(ctx.d(picard[p - 1]) - rhs, n);
}

/* R(R^[m] I^[k+1]) - R^[m] R_d^[k+1] + R(R^[m-1] x R_d^[k+1]) - theta R(R^[m-1] x I^[k+1]),
 * truncated at n, with R^[0] = 1 and I^[k+1] = [R_d^[k], x] + theta x I_d^[k].
 * Needs m <= n and k + 1 <= n. */
template <class E>
E technical_lemma_defect(const RBContext<E>& ctx, const E& x, int m, int k, int n) {
    if (m < 1 || k < 1 || m > n || k + 1 > n)
        throw std::invalid_argument("technical_lemma_defect: need 1 <= m <= n and 1 <= k < n");
    const auto picard = picard_terms(ctx, x, n);
    const auto terms = logderiv_terms(ctx, x, n);
    const E& rm = picard[m - 1];
    const E rm1 = m == 1 ? ctx.one : picard[m - 2];
    const E& i_next = terms[k].I;
    const E& r_next = terms[k].R;
    const E rm1_x = mul_truncated(rm1, x, n);
    E lhs = ctx.R(mul_truncated(rm, i_next, n));
    E rhs = mul_truncated(rm, r_next, n) - ctx.R(mul_truncated(rm1_x, r_next, n)) +
            ctx.theta * ctx.R(mul_truncated(rm1_x, i_next, n));
    return truncate(lhs - rhs, n);
}

// phi^{-1} d(phi) computed directly from the Picard series.
template <class E>
E logderiv_direct(const RBContext<E>& ctx, const E& x, int n) {
    detail::require_derivation(ctx, "logderiv_direct");
    E phi = atkinson_solve(ctx, x, n).total();
    return mul_truncated(inverse_series(phi, n), ctx.d(phi), n);
}

// x o y = [R(x), y] + theta y x, a left pre-Lie product:
// (x o y) o z - x o (y o z) is symmetric in x and y.
template <class E>
E prelie(const RBContext<E>& ctx, const E& x, const E& y, int n) {
    return commutator_truncated(ctx.R(x), y, n) + ctx.theta * mul_truncated(y, x, n);
}

// The solution of y = d(x) + y o x up to degree n; R(y) = phi^{-1} d(phi).
template <class E>
E prelie_solve(const RBContext<E>& ctx, const E& x, int n) {
    detail::require_positive(x, n, "prelie_solve");
    detail::require_derivation(ctx, "prelie_solve");
    const E dx = truncate(ctx.d(x), n);
    E y = dx;
    // each pass fixes at least one more degree since o x raises degree
    for (int k = 0; k < n; ++k) {
        E next = dx + prelie(ctx, y, x, n);
        if (next == y)
            break;
        y = std::move(next);
    }
    return y;
}

/* R = delta^{-1} on the positive part of T(X), delta a diagonal letter derivation
 * invertible on degrees 1..max_degree. theta = 0. d, when given, must commute with
 * delta; this is checked on the letters and on words of length 2. */
RBContext<TensorElt> graded_inverse_context(const LetterDerivation& delta, std::optional<LetterDerivation> d,
                                            int max_degree);

/* Same on U(L)^+ for a diagonal derivation of the presentation. */
RBContext<PBWElement> graded_inverse_context(const PresentationPtr& p, const PBWDerivation& delta,
                                             std::optional<PBWDerivation> d, int max_degree);

/* theta = -1: sequences of length `length` with values in A, R(s)(n) = sum_{k<n} s(k),
 * d applied pointwise. */
template <class E>
RBContext<Sequence<E>> sequence_context(const E& inner_one, std::function<E(const E&)> inner_d, std::size_t length) {
    auto R = [](const Sequence<E>& s) {
        std::vector<E> out;
        E acc = zero_like(s[0]);
        for (std::size_t n = 0; n < s.length(); ++n) {
            out.push_back(acc);
            acc += s[n];
        }
        return Sequence<E>(std::move(out));
    };
    std::function<Sequence<E>(const Sequence<E>&)> d;
    if (inner_d)
        d = [inner_d](const Sequence<E>& s) { return s.map(inner_d); };
    RBContext<Sequence<E>> ctx{"sequence summation", Sequence<E>::constant(inner_one, length), Rational(-1), R, d};
    return ctx;
}

// All PBW monomials of degree 1..max_degree.
std::vector<Monomial> monomials_up_to(const LiePresentation& p, int max_degree);

} // namespace logderiv

#endif // LOGDERIV_ROTA_BAXTER_HPP
