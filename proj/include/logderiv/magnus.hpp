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
 // Magnus-type formulas relating exp(l) and its logarithmic derivative.


#ifndef LOGDERIV_MAGNUS_HPP
#define LOGDERIV_MAGNUS_HPP

#include <functional>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "logderiv/dynkin.hpp"
#include "logderiv/enveloping.hpp"
#include "logderiv/series.hpp"

namespace logderiv {

/* Bernoulli numbers from sum_{k=0}^{n} C(n+1, k) B_k = 0, B_0 = 1 (so B_1 = -1/2).
 * Entries are computed on demand and cached; safe to share between threads. */
class BernoulliTable {
public:
    Rational operator()(int n);

private:
    std::mutex mutex_;
    std::vector<Rational> cache_{Rational(1)};
};

Rational bernoulli(int n);

using Composition = std::vector<int>;

// All compositions of n (ordered sequences of positive parts summing to n).
std::vector<Composition> compositions(int n);

// (D^{-1}) coefficient 1 / (k_1 (k_1 + k_2) ... (k_1 + ... + k_l)).
Rational composition_weight(const Composition& c);

/* sum_{i>=0} 1/(i+1)! (-ad_l)^i (delta(l)), truncated at degree n. This is
 * D_delta(exp l) = exp(-l) delta(exp l) for a Lie element l. */
template <class E>
E magnus_series(const std::function<E(const E&)>& delta, const E& l, int n) {
    if (has_constant_part(l))
        throw std::invalid_argument("magnus_forward: l has a degree-0 part");
    if (!is_primitive(l))
        throw std::invalid_argument("magnus_forward: l is not a Lie element");
    E power = truncate(delta(l), n);
    E sum = power;
    for (int i = 1; i < n && !power.is_zero(); ++i) {
        power = -commutator_truncated(l, power, n);
        sum += (Rational(1) / factorial(i + 1)) * power;
    }
    return sum;
}

/* The unique Lie element l with magnus_series(delta, l, n) = h, from
 *   l = delta^{-1}( sum_k B_k / k! (-ad_l)^k (h) )
 * solved one degree at a time. */
template <class E>
E magnus_inverse_series(const std::function<E(const E&)>& delta_inverse, const E& h, int n) {
    if (has_constant_part(h))
        throw std::invalid_argument("magnus_solve: h has a degree-0 part");
    if (!is_primitive(h))
        throw std::invalid_argument("magnus_solve: h is not a Lie element");
    const E ht = truncate(h, n);
    E l = zero_like(h);
    for (int deg = 1; deg <= n; ++deg) {
        E power = ht;
        E acc = ht;
        for (int k = 1; k < deg && !power.is_zero(); ++k) {
            power = -commutator_truncated(l, power, deg);
            acc += (bernoulli(k) / factorial(k)) * power;
        }
        E part = degree_part(acc, deg);
        if (!part.is_zero())
            l += delta_inverse(part);
    }
    return l;
}

/* D^{-1}(l) = 1 + sum over compositions (k_1..k_j) of n <= max_degree of
 * l_{k_1} ... l_{k_j} / (k_1 (k_1+k_2) ... (k_1+...+k_j)), the group-like element
 * whose classical Dynkin image D = S * Y is l. */
template <class E>
Series<E> dynkin_inverse(const E& l, int n) {
    if (has_constant_part(l))
        throw std::invalid_argument("dynkin_inverse: l has a degree-0 part");
    if (!is_primitive(l))
        throw std::invalid_argument("dynkin_inverse: l is not a Lie element");
    std::vector<E> parts;
    for (int k = 0; k <= n; ++k)
        parts.push_back(degree_part(l, k));
    E total = unit_like(l);
    // recursion on the first part: prefix product, partial sum, partial denominator
    std::function<void(const E&, int, const Rational&)> extend = [&](const E& prefix, int sum, const Rational& denom) {
        for (int k = 1; sum + k <= n; ++k) {
            if (parts[static_cast<std::size_t>(k)].is_zero())
                continue;
            E prod = mul_truncated(prefix, parts[static_cast<std::size_t>(k)], n);
            Rational den = denom * Rational(sum + k);
            total += (Rational(1) / den) * prod;
            extend(prod, sum + k, den);
        }
    };
    extend(unit_like(l), 0, Rational(1));
    return Series<E>::from_total(total, n);
}

// x l^k - sum_i C(k, i) l^{k-i} (-ad_l)^i (x), truncated at n. Zero for Lie l.
template <class E>
E binomial_lemma_defect(const E& x, const E& l, int k, int n) {
    E lhs = mul_truncated(x, power_truncated(l, k, n), n);
    E rhs = zero_like(x);
    E ad = truncate(x, n);
    for (int i = 0; i <= k; ++i) {
        rhs += binomial(k, i) * mul_truncated(power_truncated(l, k - i, n), ad, n);
        ad = -commutator_truncated(l, ad, n);
    }
    return lhs - rhs;
}

// Classical Dynkin operator D = S * Y.
TensorElt dynkin_operator(const TensorElt& a);
PBWElement dynkin_operator(const PBWElement& a);

TensorElt magnus_forward(const LetterDerivation& delta, const TensorElt& l, int n);
PBWElement magnus_forward(const PBWDerivation& delta, const PBWElement& l, int n);

// delta must be diagonal with no zero eigenvalue on degrees 1..n (NotInvertibleError).
TensorElt magnus_solve(const LetterDerivation& delta, const TensorElt& h, int n);
PBWElement magnus_solve(const PBWDerivation& delta, const PBWElement& h, int n);

} // namespace logderiv

#endif // LOGDERIV_MAGNUS_HPP
