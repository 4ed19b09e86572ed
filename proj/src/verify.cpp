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

#include "logderiv/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "logderiv/dynkin.hpp"
#include "logderiv/enveloping.hpp"
#include "logderiv/expr.hpp"
#include "logderiv/magnus.hpp"
#include "logderiv/ode.hpp"
#include "logderiv/rota_baxter.hpp"
#include "logderiv/series.hpp"
#include "logderiv/tensor.hpp"

namespace logderiv {

Rational SeededRng::nonzero_rational() {
    int p = between(1, 3) * (below(2) ? -1 : 1);
    return Rational(p, between(1, 3));
}

Rational SeededRng::positive_rational() { return Rational(between(1, 4), between(1, 3)); }

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names{"core", "dynkin", "rb", "magnus", "ode"};
    return names;
}

bool is_verify_suite(std::string_view name) {
    if (name == "all")
        return true;
    const auto& s = verify_suites();
    return std::find(s.begin(), s.end(), name) != s.end();
}

namespace {

constexpr int kSamples = 12;

class Runner {
public:
    Runner(std::string suite, const std::function<void(const PropertyResult&)>& report, VerifySummary& summary)
        : suite_(std::move(suite)), report_(report), summary_(summary) {}

    // fn returns an empty string on success and a description of the first failure otherwise
    void property(const std::string& name, const std::function<std::string()>& fn) {
        PropertyResult r{suite_, name, false, {}};
        try {
            r.detail = fn();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        ++(r.passed ? summary_.passed : summary_.failed);
        if (report_)
            report_(r);
    }

private:
    std::string suite_;
    const std::function<void(const PropertyResult&)>& report_;
    VerifySummary& summary_;
};

TensorElt random_lie(SeededRng& rng, int alphabet, int max_degree) {
    TensorElt l;
    const int terms = rng.between(1, 3);
    for (int t = 0; t < terms; ++t) {
        const auto words = lyndon_words(alphabet, rng.between(1, max_degree));
        l += rng.nonzero_rational() * lyndon_bracketing(words[rng.below(words.size())]);
    }
    if (l.is_zero())
        l = TensorElt::letter(0);
    return l;
}

TensorElt random_element(SeededRng& rng, int alphabet, int min_degree, int max_degree) {
    TensorElt a;
    const int terms = rng.between(1, 3);
    for (int t = 0; t < terms; ++t) {
        std::vector<Letter> w(static_cast<std::size_t>(rng.between(min_degree, max_degree)));
        for (auto& x : w)
            x = static_cast<Letter>(rng.below(static_cast<std::uint64_t>(alphabet)));
        a += rng.nonzero_rational() * TensorElt(Word(std::move(w)));
    }
    return a;
}

LetterDerivation random_diagonal(SeededRng& rng, int alphabet, bool positive) {
    std::vector<Rational> d;
    for (int i = 0; i < alphabet; ++i)
        d.push_back(positive ? rng.positive_rational() : rng.nonzero_rational());
    return LetterDerivation::diagonal(std::move(d));
}

PBWElement random_witt_lie(SeededRng& rng, const PresentationPtr& p) {
    LieVector v;
    const int terms = rng.between(1, 3);
    for (int t = 0; t < terms; ++t)
        v += LieVector(static_cast<BasisIndex>(rng.below(p->dimension())), rng.nonzero_rational());
    if (v.is_zero())
        v = LieVector(0);
    return PBWElement::from_lie(p, v);
}

std::string random_expression_text(SeededRng& rng, int depth) {
    const int choice = depth <= 0 ? rng.between(0, 1) : rng.between(0, 7);
    switch (choice) {
    case 0:
        return std::string(1, static_cast<char>('a' + rng.below(2)));
    case 1: {
        std::string r = (rng.below(3) == 0 ? "-" : "") + std::to_string(rng.between(0, 9));
        if (rng.below(2))
            r += "/" + std::to_string(rng.between(1, 9));
        return r;
    }
    case 2:
        return random_expression_text(rng, depth - 1) + " + " + random_expression_text(rng, depth - 1);
    case 3:
        return random_expression_text(rng, depth - 1) + "-" + random_expression_text(rng, depth - 1);
    case 4:
        return random_expression_text(rng, depth - 1) + " * " + random_expression_text(rng, depth - 1);
    case 5:
        return "[" + random_expression_text(rng, depth - 1) + "," + random_expression_text(rng, depth - 1) + "]";
    case 6:
        return "exp( " + random_expression_text(rng, depth - 1) + ")";
    default:
        return "(" + random_expression_text(rng, depth - 1) + ")";
    }
}

std::string mismatch(const std::string& what, const std::string& lhs, const std::string& rhs) {
    return what + ": " + lhs + " != " + rhs;
}

// Monomials of the enveloping algebra up to a degree, as elements.
std::vector<PBWElement> pbw_basis(const PresentationPtr& p, int n) {
    std::vector<PBWElement> out{PBWElement::unit(p)};
    for (const auto& m : monomials_up_to(*p, n))
        out.emplace_back(p, m);
    return out;
}

void core_suite(Runner& run, SeededRng& rng, int n) {
    run.property("tensor coassociativity", [&] {
        for (int len = 0; len <= n; ++len)
            for (const Word& w : all_words(2, len))
                if (coproduct_left_twice(TensorElt(w)) != coproduct_right_twice(TensorElt(w)))
                    return "fails on " + w.str();
        return std::string();
    });
    run.property("tensor coproduct is multiplicative", [&] {
        for (int s = 0; s < kSamples; ++s) {
            TensorElt a = random_element(rng, 2, 0, (n + 1) / 2);
            TensorElt b = random_element(rng, 2, 0, n / 2);
            if (!(coproduct(a * b) == coproduct(a) * coproduct(b)))
                return "fails on " + a.str() + " and " + b.str();
        }
        return std::string();
    });
    run.property("tensor S*Id = Id*S = nu", [&] {
        GradedEndo left = convolve(antipode_endo(), identity_endo());
        GradedEndo right = convolve(identity_endo(), antipode_endo());
        GradedEndo nu = counit_endo();
        for (int len = 0; len <= n; ++len)
            for (const Word& w : all_words(2, len))
                if (!(left(w) == nu(w)) || !(right(w) == nu(w)))
                    return "fails on " + w.str();
        return std::string();
    });
    run.property("tensor S^2 = Id", [&] {
        for (int len = 0; len <= n; ++len)
            for (const Word& w : all_words(2, len))
                if (!(antipode(antipode(w)) == TensorElt(w)))
                    return "fails on " + w.str();
        return std::string();
    });
    run.property("Lyndon brackets are a basis of the free Lie algebra", [&] {
        for (int k : {2, 3})
            for (int d = 1; d <= n; ++d) {
                std::vector<TensorElt> family;
                for (const Word& w : lyndon_words(k, d)) {
                    TensorElt p = lyndon_bracketing(w);
                    if (!is_primitive(p))
                        return "bracketing of " + w.str() + " is not primitive";
                    family.push_back(p);
                }
                if (rank(family) != family.size())
                    return "bracketings are dependent in degree " + std::to_string(d);
            }
        return std::string();
    });

    const PresentationPtr witt = witt_presentation(n);
    const auto basis = pbw_basis(witt, n);
    run.property("Witt U(L) coproduct is multiplicative", [&] {
        for (int s = 0; s < kSamples; ++s) {
            const PBWElement& a = basis[rng.below(basis.size())];
            const PBWElement& b = basis[rng.below(basis.size())];
            if (a.max_degree() + b.max_degree() > n)
                continue;
            if (!(pbw_coproduct(a * b) == pbw_coproduct(a) * pbw_coproduct(b)))
                return "fails on " + a.str() + " and " + b.str();
        }
        return std::string();
    });
    run.property("Witt U(L) S*Id = Id*S = nu and S^2 = Id", [&] {
        auto id = [](const PBWElement& a) { return a; };
        auto s = [](const PBWElement& a) { return pbw_antipode(a); };
        for (const PBWElement& m : basis) {
            PBWElement nu = PBWElement::unit(witt);
            nu *= pbw_counit(m);
            if (!(pbw_convolve(s, id, m) == nu) || !(pbw_convolve(id, s, m) == nu))
                return "convolution fails on " + m.str();
            if (!(pbw_antipode(pbw_antipode(m)) == m))
                return "S^2 fails on " + m.str();
        }
        return std::string();
    });
    run.property("expression print/parse round trip", [&] {
        for (int s = 0; s < 4 * kSamples; ++s) {
            const std::string text = random_expression_text(rng, 3);
            const Expr e = parse_expr(text, 2);
            const std::string printed = print_expr(e);
            if (!(parse_expr(printed, 2) == e))
                return "round trip fails on " + text;
        }
        return std::string();
    });
}

void dynkin_suite(Runner& run, SeededRng& rng, int n) {
    run.property("D(l) = n l on Lyndon brackets", [&] {
        for (int k : {2, 3})
            for (int d = 1; d <= n; ++d)
                for (const Word& w : lyndon_words(k, d)) {
                    TensorElt l = lyndon_bracketing(w);
                    if (!(dynkin_operator(l) == Rational(d) * l))
                        return "fails on " + w.str();
                }
        return std::string();
    });
    run.property("D_{x_i}(l) = mult_i(l) l on Lyndon brackets", [&] {
        for (int k : {2, 3})
            for (int d = 1; d <= n; ++d)
                for (const Word& w : lyndon_words(k, d)) {
                    TensorElt l = lyndon_bracketing(w);
                    const auto mult = multidegree(w, k);
                    for (int i = 0; i < std::min(k, 2); ++i) {
                        auto f = LetterDerivation::letter(k, static_cast<Letter>(i));
                        if (!(dynkin_convolution(f, l) == Rational(mult[i]) * l))
                            return "fails on " + w.str() + " for letter " + std::string(1, 'a' + i);
                    }
                }
        return std::string();
    });
    run.property("S*delta equals the left-normed bracket and lands in Lie(X)", [&] {
        std::vector<LetterDerivation> derivations{LetterDerivation::graduation(2), LetterDerivation::letter(2, 0),
                                                  LetterDerivation::letter(2, 1)};
        for (int s = 0; s < kSamples; ++s)
            derivations.push_back(random_diagonal(rng, 2, false));
        for (const auto& f : derivations)
            for (int len = 0; len <= n; ++len)
                for (const Word& w : all_words(2, len)) {
                    TensorElt a = dynkin_bracket(f, w);
                    TensorElt b = dynkin_convolution(f, TensorElt(w));
                    if (!(a == b))
                        return mismatch("on " + w.str(), a.str(), b.str());
                    if (!is_primitive(b))
                        return "not primitive on " + w.str();
                }
        return std::string();
    });
    run.property("Lie projection is idempotent and fixes Lie elements", [&] {
        for (int s = 0; s < kSamples; ++s) {
            const int d = rng.between(1, n);
            TensorElt a = random_element(rng, 2, d, d);
            TensorElt p = lie_project(a, ProjectionMode::classical(), 2);
            if (!is_primitive(p))
                return "projection of " + a.str() + " is not Lie";
            if (!(lie_project(p, ProjectionMode::classical(), 2) == p))
                return "projection not idempotent on " + a.str();
        }
        return std::string();
    });
    run.property("Witt U(L) D(l) = deg(l) l on the basis", [&] {
        const PresentationPtr witt = witt_presentation(n);
        for (BasisIndex i = 0; i < witt->dimension(); ++i) {
            PBWElement e = PBWElement::generator(witt, i);
            if (!(dynkin_operator(e) == Rational(witt->degree(i)) * e))
                return "fails on " + e.str();
        }
        return std::string();
    });
}

template <class E>
std::string logderiv_checks(const RBContext<E>& ctx, const E& x, int n) {
    const E sum = logderiv_sum(logderiv_terms(ctx, x, n));
    const E direct = logderiv_direct(ctx, x, n);
    if (!(sum == direct))
        return ctx.name + ": sum of R_d^[k] differs from phi^-1 d(phi)";
    if (!(truncate(ctx.R(prelie_solve(ctx, x, n)), n) == sum))
        return ctx.name + ": R(y) differs from the sum for the pre-Lie solution";
    for (int p = 1; p <= n; ++p)
        if (!expansion_defect(ctx, x, p, n).is_zero())
            return ctx.name + ": expansion identity fails at p = " + std::to_string(p);
    for (int m = 1; m <= std::min(3, n); ++m)
        for (int k = 1; k <= std::min(3, n - 1); ++k)
            if (!technical_lemma_defect(ctx, x, m, k, n).is_zero())
                return ctx.name + ": technical lemma fails at m = " + std::to_string(m) + ", n = " + std::to_string(k);
    return {};
}

void rb_suite(Runner& run, SeededRng& rng, int n) {
    const auto Y = LetterDerivation::graduation(2);
    const auto ctx_y = graded_inverse_context(Y, Y, n);
    const auto ctx_diag = graded_inverse_context(Y, LetterDerivation::diagonal({Rational(2), Rational(3)}), n);
    const TensorElt a = TensorElt::letter(0), b = TensorElt::letter(1);
    const std::vector<TensorElt> generators{a, a + b, a + bracket(a, b)};

    run.property("Rota-Baxter identity (graded inverse and summation)", [&] {
        auto seq = sequence_context<TensorElt>(TensorElt::unit(), {}, 4);
        for (int s = 0; s < kSamples; ++s) {
            TensorElt x = random_element(rng, 2, 1, n), y = random_element(rng, 2, 1, n);
            if (!rb_identity_defect(ctx_y, x, y, n).is_zero())
                return "graded inverse fails on " + x.str() + ", " + y.str();
            std::vector<TensorElt> xs, ys;
            for (int k = 0; k < 4; ++k) {
                xs.push_back(random_element(rng, 2, 1, n));
                ys.push_back(random_element(rng, 2, 1, n));
            }
            if (!rb_identity_defect(seq, Sequence<TensorElt>(xs), Sequence<TensorElt>(ys), n).is_zero())
                return std::string("summation operator fails");
        }
        return std::string();
    });
    run.property("Atkinson solution is group-like with inverse S(phi)", [&] {
        for (const TensorElt& x : generators) {
            const TensorElt phi = atkinson_solve(ctx_y, x, n).total();
            if (!atkinson_defect(ctx_y, phi, x, n).is_zero())
                return "phi != 1 + R(phi x) for x = " + x.str();
            if (!is_grouplike(phi, n))
                return "phi not group-like for x = " + x.str();
            if (!(mul_truncated(antipode(phi), phi, n) == TensorElt::unit()))
                return "S(phi) phi != 1 for x = " + x.str();
            if (!(dynkin_inverse(dynkin_operator(phi), n).total() == phi))
                return "D^-1(D(phi)) != phi for x = " + x.str();
        }
        const PresentationPtr witt = witt_presentation(n);
        const auto gy = PBWDerivation::graduation(*witt);
        const auto ctx = graded_inverse_context(witt, gy, gy, n);
        const PBWElement x = PBWElement::generator(witt, 0) + PBWElement::generator(witt, 1);
        const PBWElement phi = atkinson_solve(ctx, x, n).total();
        if (!atkinson_defect(ctx, phi, x, n).is_zero() || !is_grouplike(phi, n))
            return std::string("Witt: phi fails for e1 + e2");
        if (!(pbw_mul_truncated(pbw_antipode(phi), phi, n) == PBWElement::unit(witt)))
            return std::string("Witt: S(phi) phi != 1");
        return std::string();
    });
    run.property("phi^-1 d(phi) = sum R_d^[k] with proof identities (weight 0)", [&] {
        for (const TensorElt& x : generators) {
            if (auto e = logderiv_checks(ctx_y, x, n); !e.empty())
                return e + " for x = " + x.str();
            if (auto e = logderiv_checks(ctx_diag, x, n); !e.empty())
                return e + " (d = diag(2,3)) for x = " + x.str();
        }
        for (int s = 0; s < kSamples / 3; ++s) {
            TensorElt x = random_element(rng, 2, 1, 2);
            if (auto e = logderiv_checks(ctx_diag, x, n); !e.empty())
                return e + " for x = " + x.str();
        }
        return std::string();
    });
    run.property("phi^-1 d(phi) = sum R_d^[k] with proof identities (weight -1)", [&] {
        const LetterDerivation d = LetterDerivation::diagonal({Rational(2), Rational(3)});
        auto ctx = sequence_context<TensorElt>(TensorElt::unit(), [d](const TensorElt& v) { return d(v); }, 4);
        for (int s = 0; s < kSamples / 3; ++s) {
            std::vector<TensorElt> xs;
            for (int k = 0; k < 4; ++k)
                xs.push_back(random_element(rng, 2, 1, 2));
            if (auto e = logderiv_checks(ctx, Sequence<TensorElt>(xs), n); !e.empty())
                return e;
        }
        return std::string();
    });
    run.property("pre-Lie associator is symmetric in its first two arguments", [&] {
        auto seq = sequence_context<TensorElt>(TensorElt::unit(), {}, 3);
        for (int s = 0; s < kSamples; ++s) {
            TensorElt x = random_element(rng, 2, 1, 2), y = random_element(rng, 2, 1, 2),
                      z = random_element(rng, 2, 1, 2);
            auto assoc = [&](const auto& ctx, const auto& u, const auto& v, const auto& w) {
                return prelie(ctx, prelie(ctx, u, v, n), w, n) - prelie(ctx, u, prelie(ctx, v, w, n), n);
            };
            if (!(assoc(ctx_y, x, y, z) == assoc(ctx_y, y, x, z)))
                return "weight 0 fails on " + x.str() + ", " + y.str() + ", " + z.str();
            auto seq_of = [&] {
                std::vector<TensorElt> v;
                for (int k = 0; k < 3; ++k)
                    v.push_back(random_element(rng, 2, 1, 2));
                return Sequence<TensorElt>(v);
            };
            auto sx = seq_of(), sy = seq_of(), sz = seq_of();
            if (!(assoc(seq, sx, sy, sz) == assoc(seq, sy, sx, sz)))
                return std::string("weight -1 fails");
        }
        return std::string();
    });
}

void magnus_suite(Runner& run, SeededRng& rng, int n) {
    run.property("Bernoulli numbers", [&] {
        const std::vector<Rational> expected{Rational(1), Rational(-1, 2), Rational(1, 6), Rational(0),
                                             Rational(-1, 30), Rational(0), Rational(1, 42)};
        for (std::size_t k = 0; k < expected.size(); ++k)
            if (bernoulli(static_cast<int>(k)) != expected[k])
                return "B_" + std::to_string(k) + " = " + bernoulli(static_cast<int>(k)).str();
        return std::string();
    });
    run.property("magnus forward = S(exp l) delta(exp l)", [&] {
        for (int s = 0; s < kSamples; ++s) {
            const LetterDerivation delta =
                s % 2 ? LetterDerivation::graduation(2) : random_diagonal(rng, 2, false);
            TensorElt l = random_lie(rng, 2, n);
            TensorElt g = exp_series(l, n);
            TensorElt rhs = mul_truncated(antipode(g), delta(g), n);
            TensorElt lhs = magnus_forward(delta, l, n);
            if (!(lhs == rhs))
                return mismatch("l = " + l.str(), lhs.str(), rhs.str());
        }
        return std::string();
    });
    run.property("binomial lemma x l^k", [&] {
        for (int s = 0; s < kSamples; ++s) {
            TensorElt l = random_lie(rng, 2, 2), x = random_element(rng, 2, 0, 2);
            for (int k = 1; k <= n; ++k)
                if (!binomial_lemma_defect(x, l, k, n).is_zero())
                    return "fails for k = " + std::to_string(k) + ", l = " + l.str();
        }
        return std::string();
    });
    run.property("magnus forward inverts magnus solve", [&] {
        for (int s = 0; s < kSamples; ++s) {
            const LetterDerivation delta =
                s % 2 ? LetterDerivation::graduation(2) : random_diagonal(rng, 2, true);
            TensorElt h = random_lie(rng, 2, n);
            TensorElt l = magnus_solve(delta, h, n);
            if (!is_primitive(l))
                return "solution not Lie for h = " + h.str();
            if (!(magnus_forward(delta, l, n) == truncate(h, n)))
                return "round trip fails for h = " + h.str();
        }
        const PresentationPtr witt = witt_presentation(n);
        const auto gy = PBWDerivation::graduation(*witt);
        for (int s = 0; s < kSamples / 2; ++s) {
            PBWElement h = random_witt_lie(rng, witt);
            if (!(magnus_forward(gy, magnus_solve(gy, h, n), n) == truncate(h, n)))
                return "Witt round trip fails for h = " + h.str();
        }
        return std::string();
    });
    run.property("D D^-1 = id on Lie elements, D^-1 D = id on group-likes", [&] {
        for (int s = 0; s < kSamples; ++s) {
            TensorElt l = random_lie(rng, 2, n);
            if (!(dynkin_operator(dynkin_inverse(l, n).total()) == truncate(l, n)))
                return "D D^-1 fails on " + l.str();
            TensorElt g = exp_series(random_lie(rng, 2, n), n);
            if (!(dynkin_inverse(dynkin_operator(g), n).total() == g))
                return "D^-1 D fails on " + g.str();
        }
        return std::string();
    });
}

MatrixPoly random_matrix(SeededRng& rng, std::size_t dim, int t_degree) {
    MatrixPoly m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<Rational> c;
            for (int k = 0; k <= t_degree; ++k)
                c.push_back(Rational(rng.between(-2, 2), rng.between(1, 2)));
            m.at(i, j) = Poly(std::move(c));
        }
    return m;
}

void ode_suite(Runner& run, SeededRng& rng, int n) {
    const int order = std::max(n, 2);
    run.property("constant A gives Omega = lambda t A", [&] {
        for (std::size_t dim : {2u, 3u}) {
            MatrixPoly a = random_matrix(rng, dim, 0);
            LambdaSeries omega = omega_log(picard_matrix(a, order), order);
            LambdaSeries expected = LambdaSeries::lambda_times(Poly::monomial(Rational(1), 1) * a, order);
            if (!(omega == expected))
                return "fails for A = " + a.str();
        }
        return std::string();
    });
    run.property("Magnus relation and exp(Omega) = Picard", [&] {
        for (int s = 0; s < 4; ++s) {
            const std::size_t dim = s % 2 ? 3 : 2;
            MatrixPoly a = random_matrix(rng, dim, 2);
            auto rep = magnus_relation_report(a, order);
            if (!rep.relation_holds)
                return "relation fails for A = " + a.str();
            if (!rep.exp_round_trip || !rep.fixed_point)
                return "exp(Omega) or the fixed point fails for A = " + a.str();
        }
        return std::string();
    });
    run.property("time pre-Lie derivative law", [&] {
        for (int s = 0; s < kSamples; ++s) {
            const std::size_t dim = static_cast<std::size_t>(rng.between(1, 3));
            MatrixPoly m = random_matrix(rng, dim, rng.between(0, 3));
            MatrixPoly nn = random_matrix(rng, dim, rng.between(0, 3));
            if (!(prelie_time(m, nn).derivative() == commutator(nn, m.derivative())))
                return "fails for M = " + m.str();
        }
        return std::string();
    });
}

} // namespace

VerifySummary run_verify(const VerifyOptions& options, const std::function<void(const PropertyResult&)>& report) {
    if (!is_verify_suite(options.suite))
        throw std::invalid_argument("unknown suite '" + options.suite + "'");
    if (options.max_degree < 1)
        throw std::invalid_argument("verify: max degree must be >= 1");
    VerifySummary summary;
    SeededRng rng(options.seed);
    const int n = options.max_degree;
    for (const std::string& suite : verify_suites()) {
        if (options.suite != "all" && options.suite != suite)
            continue;
        Runner run(suite, report, summary);
        if (suite == "core")
            core_suite(run, rng, n);
        else if (suite == "dynkin")
            dynkin_suite(run, rng, n);
        else if (suite == "rb")
            rb_suite(run, rng, n);
        else if (suite == "magnus")
            magnus_suite(run, rng, n);
        else
            ode_suite(run, rng, n);
    }
    return summary;
}

} // namespace logderiv
