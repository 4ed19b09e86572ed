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
 // Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
 // Every random input is drawn from a fixed seed.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <sys/wait.h>
#include <tuple>
#include <vector>

#include "logderiv/dynkin.hpp"
#include "logderiv/enveloping.hpp"
#include "logderiv/expr.hpp"
#include "logderiv/magnus.hpp"
#include "logderiv/ode.hpp"
#include "logderiv/rota_baxter.hpp"
#include "logderiv/series.hpp"
#include "logderiv/tensor.hpp"
#include "logderiv/verify.hpp"

using namespace logderiv;

namespace {

constexpr int kDeg = 6;
using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int id, const std::string& title, const std::function<std::string()>& body) {
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
        std::cout << "PASS " << id << " " << title << "\n";
    } else {
        ++failures;
        std::cout << "FAIL " << id << " " << title << " (" << detail << ")\n";
    }
    std::cout.flush();
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

TensorElt random_lie(SeededRng& rng, int max_degree) {
    TensorElt l;
    for (int t = rng.between(1, 3); t > 0; --t) {
        const auto words = lyndon_words(2, rng.between(1, max_degree));
        l += rng.nonzero_rational() * lyndon_bracketing(words[rng.below(words.size())]);
    }
    return l.is_zero() ? TensorElt::letter(0) : l;
}

TensorElt random_element(SeededRng& rng, int lo, int hi) {
    TensorElt a;
    for (int t = rng.between(1, 3); t > 0; --t) {
        std::vector<Letter> w(static_cast<std::size_t>(rng.between(lo, hi)));
        for (auto& x : w)
            x = static_cast<Letter>(rng.below(2));
        a += rng.nonzero_rational() * TensorElt(Word(std::move(w)));
    }
    return a;
}

LetterDerivation random_diagonal(SeededRng& rng, bool positive) {
    return LetterDerivation::diagonal(
        {positive ? rng.positive_rational() : rng.nonzero_rational(),
         positive ? rng.positive_rational() : rng.nonzero_rational()});
}

std::vector<Word> words_up_to(int n) {
    std::vector<Word> out;
    for (int len = 0; len <= n; ++len)
        for (const Word& w : all_words(2, len))
            out.push_back(w);
    return out;
}

std::vector<PBWElement> pbw_basis(const PresentationPtr& p, int n) {
    std::vector<PBWElement> out{PBWElement::unit(p)};
    for (const auto& m : monomials_up_to(*p, n))
        out.emplace_back(p, m);
    return out;
}

using Triple = std::map<std::tuple<Monomial, Monomial, Monomial>, Rational>;

// (Delta (x) id) Delta and (id (x) Delta) Delta in U(L), flattened.
std::pair<Triple, Triple> pbw_coproduct_twice(const PBWElement& a) {
    const auto& p = a.presentation();
    Triple left, right;
    for (const auto& [mm, c] : pbw_coproduct(a).terms()) {
        for (const auto& [l, c2] : pbw_coproduct(PBWElement(p, mm.first)).terms())
            left[{l.first, l.second, mm.second}] += c * c2;
        for (const auto& [r, c2] : pbw_coproduct(PBWElement(p, mm.second)).terms())
            right[{mm.first, r.first, r.second}] += c * c2;
    }
    std::erase_if(left, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(right, [](const auto& kv) { return kv.second.is_zero(); });
    return {left, right};
}

template <class E>
std::string logderiv_checks(const RBContext<E>& ctx, const E& x, int n) {
    const E sum = logderiv_sum(logderiv_terms(ctx, x, n));
    if (!(logderiv_direct(ctx, x, n) == sum))
        return ctx.name + ": phi^-1 d(phi) differs from the sum";
    for (int p = 1; p <= n; ++p)
        if (!expansion_defect(ctx, x, p, n).is_zero())
            return ctx.name + ": expansion identity fails at p = " + std::to_string(p);
    for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 3; ++k)
            if (!technical_lemma_defect(ctx, x, m, k, n).is_zero())
                return ctx.name + ": lemma fails at m = " + std::to_string(m) + ", n = " + std::to_string(k);
    return {};
}

Sequence<TensorElt> random_sequence(SeededRng& rng, std::size_t length, int hi) {
    std::vector<TensorElt> v;
    for (std::size_t k = 0; k < length; ++k)
        v.push_back(random_element(rng, 1, hi));
    return Sequence<TensorElt>(std::move(v));
}

MatrixPoly random_matrix(SeededRng& rng, std::size_t dim, int t_degree) {
    MatrixPoly m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<Rational> c;
            for (int k = 0; k <= t_degree; ++k)
                c.push_back(Rational(rng.between(-3, 3), rng.between(1, 3)));
            m.at(i, j) = Poly(std::move(c));
        }
    return m;
}

struct Run {
    std::string out;
    int code = -1;
};

Run run_cli(const std::string& args) {
    Run r;
    FILE* p = popen(("'" LOGDERIV_CLI "' " + args + " 2>/dev/null").c_str(), "r");
    if (!p)
        return r;
    char buf[4096];
    for (std::size_t k; (k = fread(buf, 1, sizeof buf, p)) > 0;)
        r.out.append(buf, k);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

int main() {
    SeededRng rng(20260101);
    const auto Y = LetterDerivation::graduation(2);
    const TensorElt a = TensorElt::letter(0), b = TensorElt::letter(1);

    criterion(1, "D(l) = n l on Lyndon brackets, alphabets 2 and 3, degree <= 6", [] {
        auto t0 = Clock::now();
        for (int k : {2, 3})
            for (int n = 1; n <= kDeg; ++n)
                for (const Word& w : lyndon_words(k, n)) {
                    TensorElt l = lyndon_bracketing(w);
                    if (!(dynkin_operator(l) == Rational(n) * l))
                        return "fails on " + w.str();
                }
        double s = seconds_since(t0);
        return s < 10 ? std::string() : "took " + std::to_string(s) + " s";
    });

    criterion(2, "D_{x_i}(l) = mult_i(l) l on Lyndon brackets", [] {
        for (int k : {2, 3})
            for (int n = 1; n <= kDeg; ++n)
                for (const Word& w : lyndon_words(k, n)) {
                    TensorElt l = lyndon_bracketing(w);
                    const auto mult = multidegree(w, k);
                    for (Letter i : {Letter{0}, Letter{1}})
                        if (!(dynkin_convolution(LetterDerivation::letter(k, i), l) == Rational(mult[i]) * l))
                            return "fails on " + w.str();
                }
        return std::string();
    });

    criterion(3, "left-normed bracket = S*delta on words <= 6, outputs in Lie(X)", [&] {
        std::vector<LetterDerivation> ds{Y, LetterDerivation::letter(2, 0), LetterDerivation::letter(2, 1)};
        for (int s = 0; s < 100; ++s)
            ds.push_back(random_diagonal(rng, false));
        for (const auto& f : ds)
            for (const Word& w : words_up_to(kDeg)) {
                TensorElt br = dynkin_bracket(f, w);
                TensorElt conv = dynkin_convolution_reference(f, TensorElt(w));
                if (!(br == conv) || !(dynkin_convolution(f, TensorElt(w)) == conv))
                    return "mismatch on " + w.str();
                if (!is_primitive(conv))
                    return "not primitive on " + w.str();
            }
        return std::string();
    });

    criterion(4, "Hopf axioms to degree 6 in T(X) and the Witt U(L)", [] {
        const auto ws = words_up_to(kDeg);
        const GradedEndo sl = convolve(antipode_endo(), identity_endo());
        const GradedEndo sr = convolve(identity_endo(), antipode_endo());
        const GradedEndo nu = counit_endo();
        for (const Word& w : ws) {
            TensorElt e(w);
            if (coproduct_left_twice(e) != coproduct_right_twice(e))
                return "T(X) coassociativity fails on " + w.str();
            if (!(sl(w) == nu(w)) || !(sr(w) == nu(w)))
                return "T(X) S*Id = Id*S = nu fails on " + w.str();
            if (!(antipode(antipode(w)) == e))
                return "T(X) S^2 fails on " + w.str();
            for (const Word& v : ws) {
                if (w.size() + v.size() > kDeg)
                    continue;
                if (!(coproduct(TensorElt(w + v)) == coproduct(e) * coproduct(TensorElt(v))))
                    return "T(X) multiplicativity fails on " + w.str() + ", " + v.str();
            }
        }
        const PresentationPtr witt = witt_presentation(kDeg);
        const auto basis = pbw_basis(witt, kDeg);
        auto id = [](const PBWElement& x) { return x; };
        auto s = [](const PBWElement& x) { return pbw_antipode(x); };
        for (const PBWElement& m : basis) {
            auto [l, r] = pbw_coproduct_twice(m);
            if (l != r)
                return "Witt coassociativity fails on " + m.str();
            PBWElement unit = PBWElement::unit(witt);
            unit *= pbw_counit(m);
            if (!(pbw_convolve(s, id, m) == unit) || !(pbw_convolve(id, s, m) == unit))
                return "Witt S*Id = Id*S = nu fails on " + m.str();
            if (!(pbw_antipode(pbw_antipode(m)) == m))
                return "Witt S^2 fails on " + m.str();
            for (const PBWElement& q : basis) {
                if (m.max_degree() + q.max_degree() > kDeg)
                    continue;
                if (!(pbw_coproduct(m * q) == pbw_coproduct(m) * pbw_coproduct(q)))
                    return "Witt multiplicativity fails on " + m.str() + ", " + q.str();
            }
        }
        return std::string();
    });

    criterion(5, "Atkinson solutions are group-like, S(phi) phi = 1, phi = D^-1(D(phi))", [&] {
        const auto ctx = graded_inverse_context(Y, Y, kDeg);
        for (const TensorElt& x : {a, a + b, a + bracket(a, b)}) {
            const TensorElt phi = atkinson_solve(ctx, x, kDeg).total();
            if (!atkinson_defect(ctx, phi, x, kDeg).is_zero())
                return "phi != 1 + R(phi x) for " + x.str();
            if (!is_grouplike(phi, kDeg))
                return "not group-like for " + x.str();
            if (!(mul_truncated(antipode(phi), phi, kDeg) == TensorElt::unit()))
                return "S(phi) phi != 1 for " + x.str();
            if (!(dynkin_inverse(dynkin_operator(phi), kDeg).total() == phi))
                return "D^-1 D fails for " + x.str();
        }
        const PresentationPtr witt = witt_presentation(kDeg);
        const auto gy = PBWDerivation::graduation(*witt);
        const auto wctx = graded_inverse_context(witt, gy, gy, kDeg);
        const PBWElement x = PBWElement::generator(witt, 0) + PBWElement::generator(witt, 1);
        const PBWElement phi = atkinson_solve(wctx, x, kDeg).total();
        if (!atkinson_defect(wctx, phi, x, kDeg).is_zero() || !is_grouplike(phi, kDeg))
            return std::string("Witt phi fails for e1 + e2");
        if (!(pbw_mul_truncated(pbw_antipode(phi), phi, kDeg) == PBWElement::unit(witt)))
            return std::string("Witt S(phi) phi != 1");
        if (!(dynkin_inverse(dynkin_operator(phi), kDeg).total() == phi))
            return std::string("Witt D^-1 D fails");
        return std::string();
    });

    criterion(6, "phi^-1 d(phi) = sum R_d^[n] (weights 0 and -1), expansion and lemma identities", [&] {
        for (const auto& d : {Y, LetterDerivation::diagonal({Rational(2), Rational(3)})}) {
            const auto ctx = graded_inverse_context(Y, d, kDeg);
            for (const TensorElt& x : {a, a + b, a + bracket(a, b)})
                if (auto e = logderiv_checks(ctx, x, kDeg); !e.empty())
                    return e + " for x = " + x.str();
        }
        const LetterDerivation d = LetterDerivation::diagonal({Rational(2), Rational(3)});
        for (const auto& inner : {Y, d}) {
            auto ctx = sequence_context<TensorElt>(TensorElt::unit(),
                                                   [inner](const TensorElt& v) { return inner(v); }, 4);
            for (int s = 0; s < 4; ++s)
                if (auto e = logderiv_checks(ctx, random_sequence(rng, 4, 2), kDeg); !e.empty())
                    return e;
        }
        return std::string();
    });

    criterion(7, "R(pre-Lie solution) = sum R_d^[n]; left pre-Lie associator symmetry on 100 triples", [&] {
        const auto ctx = graded_inverse_context(Y, LetterDerivation::diagonal({Rational(2), Rational(3)}), kDeg);
        for (const TensorElt& x : {a, a + b, a + bracket(a, b)})
            if (!(truncate(ctx.R(prelie_solve(ctx, x, kDeg)), kDeg) == logderiv_sum(logderiv_terms(ctx, x, kDeg))))
                return "weight 0 fails for x = " + x.str();
        auto seq = sequence_context<TensorElt>(TensorElt::unit(), [&](const TensorElt& v) { return Y(v); }, 4);
        for (int s = 0; s < 4; ++s) {
            auto x = random_sequence(rng, 4, 2);
            if (!(truncate(seq.R(prelie_solve(seq, x, kDeg)), kDeg) == logderiv_sum(logderiv_terms(seq, x, kDeg))))
                return std::string("weight -1 fails");
        }
        auto assoc = [](const auto& c, const auto& u, const auto& v, const auto& w) {
            return prelie(c, prelie(c, u, v, kDeg), w, kDeg) - prelie(c, u, prelie(c, v, w, kDeg), kDeg);
        };
        for (int s = 0; s < 100; ++s) {
            TensorElt x = random_element(rng, 1, 2), y = random_element(rng, 1, 2), z = random_element(rng, 1, 2);
            if (!(assoc(ctx, x, y, z) == assoc(ctx, y, x, z)))
                return "weight 0 fails on " + x.str() + ", " + y.str() + ", " + z.str();
            auto sx = random_sequence(rng, 3, 2), sy = random_sequence(rng, 3, 2), sz = random_sequence(rng, 3, 2);
            if (!(assoc(seq, sx, sy, sz) == assoc(seq, sy, sx, sz)))
                return std::string("weight -1 fails");
        }
        return std::string();
    });

    criterion(8, "magnus forward = S(exp l) delta(exp l) on 50 Lie l; binomial identity k <= 5", [&] {
        const int n = 5;
        for (int s = 0; s < 50; ++s) {
            const LetterDerivation delta = s % 2 ? Y : random_diagonal(rng, false);
            TensorElt l = random_lie(rng, n);
            TensorElt g = exp_series(l, n);
            if (!(magnus_forward(delta, l, n) == mul_truncated(antipode(g), delta(g), n)))
                return "fails for l = " + l.str();
        }
        for (int s = 0; s < 20; ++s) {
            TensorElt l = random_lie(rng, 2), x = random_element(rng, 0, 2);
            for (int k = 0; k <= 5; ++k)
                if (!binomial_lemma_defect(x, l, k, kDeg).is_zero())
                    return "binomial identity fails for k = " + std::to_string(k);
        }
        return std::string();
    });

    criterion(9, "forward o solve = id on 50 Lie elements; D D^-1 and D^-1 D are identities", [&] {
        const int n = 5;
        for (int s = 0; s < 50; ++s) {
            const LetterDerivation delta = s % 2 ? Y : random_diagonal(rng, true);
            TensorElt h = random_lie(rng, n);
            TensorElt l = magnus_solve(delta, h, n);
            if (!is_primitive(l) || !(magnus_forward(delta, l, n) == h))
                return "fails for h = " + h.str();
        }
        for (int s = 0; s < 20; ++s) {
            TensorElt l = random_lie(rng, kDeg);
            if (!(dynkin_operator(dynkin_inverse(l, kDeg).total()) == l))
                return "D D^-1 fails on " + l.str();
            TensorElt g = exp_series(random_lie(rng, kDeg), kDeg);
            if (!(dynkin_inverse(dynkin_operator(g), kDeg).total() == g))
                return "D^-1 D fails on " + g.str();
        }
        const PresentationPtr witt = witt_presentation(kDeg);
        for (int s = 0; s < 10; ++s) {
            LieVector v;
            for (int t = rng.between(1, 3); t > 0; --t)
                v += LieVector(static_cast<BasisIndex>(rng.below(witt->dimension())), rng.nonzero_rational());
            PBWElement l = PBWElement::from_lie(witt, v.is_zero() ? LieVector(0) : v);
            if (!(dynkin_operator(dynkin_inverse(l, kDeg).total()) == l))
                return "Witt D D^-1 fails on " + l.str();
            PBWElement g = exp_truncated(l, kDeg);
            if (!(dynkin_inverse(dynkin_operator(g), kDeg).total() == g))
                return "Witt D^-1 D fails on " + g.str();
        }
        return std::string();
    });

    criterion(10, "matrix ODE: constant A, Magnus relation, exp(Omega) = Picard, time pre-Lie law", [&] {
        const int n = 5;
        for (std::size_t dim : {2u, 3u}) {
            MatrixPoly c = random_matrix(rng, dim, 0);
            LambdaSeries omega = omega_log(picard_matrix(c, n), n);
            if (!(omega[1] == Poly::monomial(Rational(1), 1) * c))
                return "Omega_1 != t A for constant A = " + c.str();
            for (int k = 2; k <= n; ++k)
                if (!omega[static_cast<std::size_t>(k)].is_zero())
                    return "Omega_" + std::to_string(k) + " != 0 for constant A";
        }
        for (int s = 0; s < 6; ++s) {
            MatrixPoly m = random_matrix(rng, s % 2 ? 3 : 2, 2);
            if (!magnus_relation_check(m, n))
                return "relation fails for A = " + m.str();
            auto rep = magnus_relation_report(m, n);
            if (!rep.exp_round_trip || !(exp_lambda(rep.omega, n) == picard_matrix(m, n)))
                return "exp(Omega) != Picard for A = " + m.str();
        }
        for (int s = 0; s < 20; ++s) {
            const auto dim = static_cast<std::size_t>(rng.between(1, 4));
            MatrixPoly m = random_matrix(rng, dim, rng.between(0, 3)), q = random_matrix(rng, dim, rng.between(0, 3));
            if (!(prelie_time(m, q).derivative() == commutator(q, m.derivative())))
                return "derivative law fails for M = " + m.str();
        }
        return std::string();
    });

    criterion(11, "CLI verify (degree 5, seed 42) exits 0 in < 60 s, byte-stable JSON, round-trip corpus", [] {
        auto t0 = Clock::now();
        Run r = run_cli("verify --suite all --max-degree 5 --seed 42");
        double s = seconds_since(t0);
        if (r.code != 0)
            return "exit status " + std::to_string(r.code);
        if (s >= 60)
            return "took " + std::to_string(s) + " s";
        Run j1 = run_cli("--json verify --suite all --max-degree 5 --seed 42");
        Run j2 = run_cli("--json verify --suite all --max-degree 5 --seed 42");
        if (j1.code != 0 || j1.out.empty() || j1.out != j2.out)
            return std::string("JSON output differs between runs");
        std::ifstream in(std::string(LOGDERIV_TEST_DATA) + "/expressions.txt");
        int count = 0;
        for (std::string line; std::getline(in, line);) {
            if (line.empty())
                continue;
            ++count;
            Expr e = parse_expr(line, 3);
            if (!(parse_expr(print_expr(e), 3) == e))
                return "round trip fails on " + line;
        }
        return count == 50 ? std::string() : "corpus has " + std::to_string(count) + " lines";
    });

    return failures ? 1 : 0;
}
