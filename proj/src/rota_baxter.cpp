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

#include "logderiv/rota_baxter.hpp"

#include <algorithm>

namespace logderiv {

RBContext<TensorElt> graded_inverse_context(const LetterDerivation& delta, std::optional<LetterDerivation> d,
                                            int max_degree) {
    delta.require_invertible(max_degree);
    const int alphabet = delta.alphabet_size();
    auto R = [delta](const TensorElt& a) {
        TensorElt r;
        for (const auto& [w, c] : a.terms()) {
            if (w.empty())
                throw std::invalid_argument("R is only defined on positive degrees");
            Rational e = delta.eigenvalue(w);
            if (e.is_zero())
                throw NotInvertibleError("derivation not invertible on " + w.str());
            r.add_term(w, c / e);
        }
        return r;
    };
    std::function<TensorElt(const TensorElt&)> dfn;
    if (d) {
        if (d->alphabet_size() != alphabet)
            throw std::invalid_argument("graded inverse: d and delta act on different alphabets");
        dfn = [f = *d](const TensorElt& a) { return f(a); };
    }
    RBContext<TensorElt> ctx{"graded inverse on T(X)", TensorElt::unit(), Rational{}, R, dfn};
    std::vector<TensorElt> probes;
    for (int n = 1; n <= std::min(2, max_degree); ++n)
        for (const Word& w : all_words(alphabet, n))
            probes.emplace_back(w);
    check_commutation<TensorElt>(ctx, probes);
    return ctx;
}

std::vector<Monomial> monomials_up_to(const LiePresentation& p, int max_degree) {
    std::vector<Monomial> out;
    Monomial cur;
    // depth-first over nondecreasing index sequences
    std::function<void(BasisIndex, int)> rec = [&](BasisIndex start, int deg) {
        for (std::size_t i = start; i < p.dimension(); ++i) {
            int d = deg + p.degree(static_cast<BasisIndex>(i));
            if (d > max_degree)
                continue;
            cur.push_back(static_cast<BasisIndex>(i));
            out.push_back(cur);
            rec(static_cast<BasisIndex>(i), d);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

RBContext<PBWElement> graded_inverse_context(const PresentationPtr& p, const PBWDerivation& delta,
                                             std::optional<PBWDerivation> d, int max_degree) {
    if (!delta.diagonal_entries())
        throw std::invalid_argument("graded inverse: delta must be a diagonal derivation");
    if (delta.images().size() != p->dimension())
        throw std::invalid_argument("graded inverse: delta does not match the presentation");
    for (const Monomial& m : monomials_up_to(*p, max_degree))
        if (delta.eigenvalue(m).is_zero())
            throw NotInvertibleError("derivation not invertible: zero eigenvalue on a monomial of degree " +
                                     std::to_string(PBWElement(p, m).degree(m)));
    auto R = [delta](const PBWElement& a) {
        PBWElement r(a.presentation());
        for (const auto& [m, c] : a.terms()) {
            if (m.empty())
                throw std::invalid_argument("R is only defined on positive degrees");
            Rational e = delta.eigenvalue(m);
            if (e.is_zero())
                throw NotInvertibleError("derivation not invertible on " + PBWElement(a.presentation(), m).str());
            r.add_term(m, c / e);
        }
        return r;
    };
    std::function<PBWElement(const PBWElement&)> dfn;
    if (d)
        dfn = [f = *d](const PBWElement& a) { return f(a); };
    RBContext<PBWElement> ctx{"graded inverse on U(L)", PBWElement::unit(p), Rational{}, R, dfn};
    std::vector<PBWElement> probes;
    for (std::size_t i = 0; i < p->dimension(); ++i)
        probes.push_back(PBWElement::generator(p, static_cast<BasisIndex>(i)));
    check_commutation<PBWElement>(ctx, probes);
    return ctx;
}

} // namespace logderiv
