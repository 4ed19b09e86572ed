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

#include "logderiv/magnus.hpp"

#include "logderiv/rota_baxter.hpp"

#include <algorithm>
#include <string>

namespace logderiv {

Rational BernoulliTable::operator()(int n) {
    if (n < 0)
        throw std::invalid_argument("bernoulli: index must be >= 0");
    std::lock_guard lock(mutex_);
    for (int m = static_cast<int>(cache_.size()); m <= n; ++m) {
        // B_m = -1/(m+1) sum_{k<m} C(m+1, k) B_k
        Rational s;
        for (int k = 0; k < m; ++k)
            s += binomial(m + 1, k) * cache_[static_cast<std::size_t>(k)];
        cache_.push_back(-s / Rational(m + 1));
    }
    return cache_[static_cast<std::size_t>(n)];
}

Rational bernoulli(int n) {
    static BernoulliTable table;
    return table(n);
}

std::vector<Composition> compositions(int n) {
    if (n < 1)
        return {};
    std::vector<Composition> out;
    Composition cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = 1; k <= rest; ++k) {
            cur.push_back(k);
            rec(rest - k);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

Rational composition_weight(const Composition& c) {
    Rational den(1);
    int partial = 0;
    for (int k : c) {
        if (k < 1)
            throw std::invalid_argument("composition parts must be positive");
        partial += k;
        den *= Rational(partial);
    }
    return Rational(1) / den;
}

TensorElt dynkin_operator(const TensorElt& a) {
    int alphabet = 1;
    for (const auto& [w, c] : a.terms())
        for (Letter x : w)
            alphabet = std::max(alphabet, x + 1);
    return dynkin_convolution(LetterDerivation::graduation(alphabet), a);
}

PBWElement dynkin_operator(const PBWElement& a) {
    PBWDerivation y = PBWDerivation::graduation(*a.presentation());
    return log_derivative(a, [&](const PBWElement& x) { return y(x); });
}

TensorElt magnus_forward(const LetterDerivation& delta, const TensorElt& l, int n) {
    return magnus_series<TensorElt>([&](const TensorElt& x) { return delta(x); }, l, n);
}

PBWElement magnus_forward(const PBWDerivation& delta, const PBWElement& l, int n) {
    return magnus_series<PBWElement>([&](const PBWElement& x) { return delta(x); }, l, n);
}

TensorElt magnus_solve(const LetterDerivation& delta, const TensorElt& h, int n) {
    delta.require_invertible(n);
    auto inverse = [&](const TensorElt& x) {
        TensorElt r;
        for (const auto& [w, c] : x.terms()) {
            Rational e = delta.eigenvalue(w);
            if (e.is_zero())
                throw NotInvertibleError("derivation not invertible: zero eigenvalue on " + w.str());
            r.add_term(w, c / e);
        }
        return r;
    };
    return magnus_inverse_series<TensorElt>(inverse, h, n);
}

PBWElement magnus_solve(const PBWDerivation& delta, const PBWElement& h, int n) {
    if (!delta.diagonal_entries())
        throw std::invalid_argument("magnus_solve: delta must be diagonal");
    for (const Monomial& m : monomials_up_to(*h.presentation(), n))
        if (m.size() == 1 && delta.eigenvalue(m).is_zero())
            throw NotInvertibleError("derivation not invertible: zero eigenvalue on " +
                                     h.presentation()->basis(m[0]).name);
    auto inverse = [&](const PBWElement& x) {
        PBWElement r(x.presentation());
        for (const auto& [m, c] : x.terms()) {
            Rational e = delta.eigenvalue(m);
            if (e.is_zero())
                throw NotInvertibleError("derivation not invertible: zero eigenvalue on " +
                                         PBWElement(x.presentation(), m).str());
            r.add_term(m, c / e);
        }
        return r;
    };
    return magnus_inverse_series<PBWElement>(inverse, h, n);
}

} // namespace logderiv
