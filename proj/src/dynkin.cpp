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

#include "logderiv/dynkin.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace logderiv {

LetterDerivation::LetterDerivation(std::vector<std::vector<Rational>> images) : images_(std::move(images)) {
    const std::size_t n = images_.size();
    if (n == 0 || n > static_cast<std::size_t>(kMaxAlphabet))
        throw std::invalid_argument("LetterDerivation: alphabet size out of range");
    for (const auto& row : images_)
        if (row.size() != n)
            throw std::invalid_argument("LetterDerivation: image rows must have one entry per letter");
}

LetterDerivation LetterDerivation::graduation(int alphabet_size) {
    std::vector<Rational> d(static_cast<std::size_t>(alphabet_size), Rational(1));
    return diagonal(std::move(d));
}

LetterDerivation LetterDerivation::letter(int alphabet_size, Letter i) {
    if (i >= alphabet_size)
        throw std::invalid_argument("LetterDerivation::letter: letter outside the alphabet");
    std::vector<Rational> d(static_cast<std::size_t>(alphabet_size));
    d[i] = Rational(1);
    return diagonal(std::move(d));
}

LetterDerivation LetterDerivation::diagonal(std::vector<Rational> scalars) {
    const std::size_t n = scalars.size();
    std::vector<std::vector<Rational>> images(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        images[i][i] = scalars[i];
    return LetterDerivation(std::move(images));
}

namespace {

Letter parse_letter(std::string_view s, int alphabet_size) {
    if (s.size() != 1 || s[0] < 'a' || s[0] > 'z')
        throw ParseError("expected a single letter, got '" + std::string(s) + "'");
    Letter x = static_cast<Letter>(s[0] - 'a');
    if (x >= alphabet_size)
        throw ParseError("unknown letter '" + std::string(s) + "' for alphabet of size " +
                         std::to_string(alphabet_size));
    return x;
}

} // namespace

LetterDerivation LetterDerivation::parse(std::string_view spec, int alphabet_size) {
    if (spec == "Y")
        return graduation(alphabet_size);
    if (spec.starts_with("letter:"))
        return letter(alphabet_size, parse_letter(spec.substr(7), alphabet_size));
    if (spec.starts_with("diag:")) {
        std::vector<Rational> d;
        std::string_view rest = spec.substr(5);
        while (true) {
            auto comma = rest.find(',');
            d.push_back(Rational::parse(rest.substr(0, comma)));
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
        if (static_cast<int>(d.size()) > alphabet_size)
            throw ParseError("diag: more entries than letters");
        d.resize(static_cast<std::size_t>(alphabet_size));
        return diagonal(std::move(d));
    }
    throw ParseError("unknown derivation '" + std::string(spec) + "' (expected Y, letter:<c> or diag:<list>)");
}

TensorElt LetterDerivation::image(Letter x) const {
    TensorElt r;
    const auto& row = images_.at(x);
    for (std::size_t j = 0; j < row.size(); ++j)
        r.add_term(Word{static_cast<Letter>(j)}, row[j]);
    return r;
}

std::optional<std::vector<Rational>> LetterDerivation::diagonal_entries() const {
    std::vector<Rational> d;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        for (std::size_t j = 0; j < images_.size(); ++j)
            if (i != j && !images_[i][j].is_zero())
                return std::nullopt;
        d.push_back(images_[i][i]);
    }
    return d;
}

Rational LetterDerivation::eigenvalue(const Word& w) const {
    Rational e;
    for (Letter x : w)
        e += images_.at(x).at(x);
    return e;
}

void LetterDerivation::require_invertible(int max_degree) const {
    auto diag = diagonal_entries();
    if (!diag)
        throw std::invalid_argument("derivation must be diagonal to be inverted");
    // eigenvalues on words of length n are sums of n diagonal entries
    std::vector<Rational> sums{Rational{}};
    for (int n = 1; n <= max_degree; ++n) {
        std::vector<Rational> next;
        for (const Rational& s : sums)
            for (const Rational& c : *diag)
                next.push_back(s + c);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        for (const Rational& e : next)
            if (e.is_zero())
                throw NotInvertibleError("derivation not invertible: zero eigenvalue in degree " + std::to_string(n));
        sums = std::move(next);
    }
}

TensorElt LetterDerivation::operator()(const TensorElt& a) const {
    TensorElt r;
    for (const auto& [w, c] : a.terms()) {
        const auto& s = w.letters();
        for (std::size_t i = 0; i < s.size(); ++i) {
            const auto& row = images_.at(s[i]);
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (row[j].is_zero())
                    continue;
                std::vector<Letter> v = s;
                v[i] = static_cast<Letter>(j);
                r.add_term(Word(std::move(v)), c * row[j]);
            }
        }
    }
    return r;
}

TensorElt apply_derivation(const LetterDerivation& f, const TensorElt& a) { return f(a); }

TensorElt dynkin_bracket(const LetterDerivation& f, const Word& w) {
    if (w.empty())
        return TensorElt{};
    TensorElt acc = f.image(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i)
        acc = bracket(acc, TensorElt::letter(w[i]));
    return acc;
}

TensorElt dynkin_bracket(const LetterDerivation& f, const TensorElt& a) {
    TensorElt r;
    for (const auto& [w, c] : a.terms())
        r += c * dynkin_bracket(f, w);
    return r;
}

TensorElt log_derivative(const TensorElt& a, const std::function<TensorElt(const TensorElt&)>& delta) {
    GradedEndo d([&delta](const Word& w) { return delta(TensorElt(w)); });
    return convolve(antipode_endo(), d)(a);
}

namespace {

// Words of up to 12 letters packed as 5 bits per letter above a 4-bit length.
constexpr std::size_t kPackedMaxLength = 12;

std::uint64_t pack(const std::vector<Letter>& s) {
    std::uint64_t key = s.size();
    for (std::size_t i = 0; i < s.size(); ++i)
        key |= static_cast<std::uint64_t>(s[i]) << (4 + 5 * i);
    return key;
}

Word unpack(std::uint64_t key) {
    std::vector<Letter> s(key & 0xF);
    for (std::size_t i = 0; i < s.size(); ++i)
        s[i] = static_cast<Letter>((key >> (4 + 5 * i)) & 0x1F);
    return Word(std::move(s));
}

/* (S * f)(w) for diagonal f: sum over unshuffles u (x) v of (-1)^|u| eig(v) rev(u) v.
 * Signs are summed as integers per output word and per letter of v, and the
 * rational eigenvalues are applied once at the end. */
TensorElt diagonal_convolution(const std::vector<Rational>& q, const TensorElt& a) {
    const std::size_t k = q.size();
    TensorElt r;
    std::unordered_map<std::uint64_t, std::size_t> slot;
    std::vector<std::int64_t> counts;
    std::vector<Letter> buf;
    for (const auto& [w, c] : a.terms()) {
        const std::size_t n = w.size();
        if (std::any_of(w.begin(), w.end(), [k](Letter x) { return x >= k; }))
            throw std::invalid_argument("derivation: letter outside its alphabet");
        slot.clear();
        counts.clear();
        for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
            buf.clear();
            for (std::size_t i = n; i-- > 0;)
                if ((mask >> i) & 1u)
                    buf.push_back(w[i]);
            const std::size_t split = buf.size();
            for (std::size_t i = 0; i < n; ++i)
                if (!((mask >> i) & 1u))
                    buf.push_back(w[i]);
            const std::int64_t sign = std::popcount(mask) % 2 ? -1 : 1;
            auto [it, inserted] = slot.try_emplace(pack(buf), counts.size() / k);
            if (inserted)
                counts.resize(counts.size() + k, 0);
            std::int64_t* row = counts.data() + it->second * k;
            for (std::size_t i = split; i < n; ++i)
                row[buf[i]] += sign;
        }
        for (const auto& [key, idx] : slot) {
            Rational coeff;
            for (std::size_t s = 0; s < k; ++s)
                if (counts[idx * k + s] != 0)
                    coeff += q[s] * Rational(counts[idx * k + s]);
            r.add_term(unpack(key), c * coeff);
        }
    }
    return r;
}

} // namespace

TensorElt dynkin_convolution(const LetterDerivation& f, const TensorElt& a) {
    if (auto q = f.diagonal_entries(); q && a.max_degree() <= static_cast<int>(kPackedMaxLength))
        return diagonal_convolution(*q, a);
    return dynkin_convolution_reference(f, a);
}

TensorElt dynkin_convolution_reference(const LetterDerivation& f, const TensorElt& a) {
    GradedEndo d([&f](const Word& w) { return f(TensorElt(w)); });
    return convolve(antipode_endo(), d)(a);
}

std::vector<int> multidegree(const Word& w, int alphabet_size) {
    std::vector<int> m(static_cast<std::size_t>(alphabet_size), 0);
    for (Letter x : w) {
        if (x >= alphabet_size)
            throw std::invalid_argument("multidegree: letter outside the alphabet");
        ++m[x];
    }
    return m;
}

ProjectionMode ProjectionMode::parse(std::string_view spec, int alphabet_size) {
    if (spec == "classical")
        return classical();
    if (spec.starts_with("letter:"))
        return per_letter(parse_letter(spec.substr(7), alphabet_size));
    throw ParseError("unknown projection mode '" + std::string(spec) + "' (expected classical or letter:<c>)");
}

TensorElt lie_project(const TensorElt& a, ProjectionMode mode, int alphabet_size) {
    if (a.is_zero())
        return a;
    std::optional<int> n;
    for (const auto& [w, c] : a.terms()) {
        int k = mode.kind == ProjectionMode::Kind::classical
                    ? static_cast<int>(w.size())
                    : multidegree(w, alphabet_size)[mode.letter];
        if (n && *n != k)
            throw std::invalid_argument("lie_project: input is not homogeneous");
        n = k;
    }
    if (*n == 0)
        throw std::invalid_argument(mode.kind == ProjectionMode::Kind::classical
                                        ? "lie_project: degree 0 component cannot be projected"
                                        : "lie_project: letter multiplicity is 0, cannot divide by it");
    LetterDerivation f = mode.kind == ProjectionMode::Kind::classical
                             ? LetterDerivation::graduation(alphabet_size)
                             : LetterDerivation::letter(alphabet_size, mode.letter);
    return Rational(1, *n) * dynkin_convolution(f, a);
}

} // namespace logderiv
