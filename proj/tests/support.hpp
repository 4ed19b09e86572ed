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
 // Shared helpers for the doctest binaries: stream operators so failing checks
 // print values, and small brute-force oracles.


#ifndef LOGDERIV_TESTS_SUPPORT_HPP
#define LOGDERIV_TESTS_SUPPORT_HPP

#include <ostream>
#include <vector>

#include "logderiv/enveloping.hpp"
#include "logderiv/rational.hpp"
#include "logderiv/tensor.hpp"

namespace logderiv {

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << '"' << w.str() << '"'; }
inline std::ostream& operator<<(std::ostream& os, const TensorElt& a) { return os << a.str(); }
inline std::ostream& operator<<(std::ostream& os, const PBWElement& a) { return os << a.str(); }

} // namespace logderiv

namespace oracle {

using logderiv::Letter;
using logderiv::TensorElt;
using logderiv::Word;

inline TensorElt w(const char* s) { return TensorElt::word(s); }

// Every word of length len over k letters, by counting in base k.
inline std::vector<Word> words(int k, int len) {
    std::vector<Word> out;
    std::vector<Letter> digits(static_cast<std::size_t>(len), 0);
    for (;;) {
        out.emplace_back(digits);
        int i = len - 1;
        while (i >= 0 && digits[static_cast<std::size_t>(i)] == k - 1)
            digits[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            return out;
        ++digits[static_cast<std::size_t>(i)];
    }
}

// Naive concatenation product, term by term.
inline TensorElt concat(const TensorElt& a, const TensorElt& b) {
    TensorElt r;
    for (const auto& [u, c] : a.terms())
        for (const auto& [v, d] : b.terms())
            r.add_term(u + v, c * d);
    return r;
}

inline TensorElt commutator(const TensorElt& a, const TensorElt& b) { return concat(a, b) - concat(b, a); }

} // namespace oracle

#endif // LOGDERIV_TESTS_SUPPORT_HPP
