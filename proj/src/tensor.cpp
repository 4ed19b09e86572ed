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

#include "logderiv/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace logderiv {

Word Word::parse(std::string_view text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c < 'a' || c > 'z')
            throw ParseError(std::string("not a letter: '") + c + "'", i + 1);
        letters.push_back(static_cast<Letter>(c - 'a'));
    }
    return Word(std::move(letters));
}

Word Word::reversed() const {
    return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word operator+(const Word& a, const Word& b) {
    std::vector<Letter> r;
    r.reserve(a.size() + b.size());
    r.insert(r.end(), a.letters_.begin(), a.letters_.end());
    r.insert(r.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(r));
}

std::string Word::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter x : letters_)
        s.push_back(static_cast<char>('a' + x));
    return s;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0)
        return c;
    return a.letters_ <=> b.letters_;
}

int TensorElt::max_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
}

int TensorElt::min_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size());
}

bool TensorElt::is_homogeneous() const { return min_degree() == max_degree(); }

namespace {

template <class Terms, class KeyPrinter>
std::string render_terms(const Terms& terms, KeyPrinter key_str, auto is_unit_key) {
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms) {
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        first = false;
        Rational mag = c.sign() < 0 ? -c : c;
        if (is_unit_key(key)) {
            out += mag.str();
        } else {
            if (mag != Rational(1))
                out += mag.str() + " ";
            out += key_str(key);
        }
    }
    return out;
}

} // namespace

std::string TensorElt::str() const {
    return render_terms(
        terms_, [](const Word& w) { return w.str(); }, [](const Word& w) { return w.empty(); });
}

std::string TensorElt2::str() const {
    auto side = [](const Word& w) { return w.empty() ? std::string("1") : w.str(); };
    return render_terms(
        terms_, [&](const auto& k) { return side(k.first) + "⊗" + side(k.second); },
        [](const auto&) { return false; });
}

TensorElt concat_mul_truncated(const TensorElt& a, const TensorElt& b, int max_degree) {
    TensorElt r;
    for (const auto& [u, cu] : a.terms()) {
        for (const auto& [v, cv] : b.terms()) {
            if (static_cast<int>(u.size() + v.size()) > max_degree)
                break; // shortlex: later v are no shorter
            r.add_term(u + v, cu * cv);
        }
    }
    return r;
}

TensorElt concat_mul(const TensorElt& a, const TensorElt& b) {
    TensorElt r;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms())
            r.add_term(u + v, cu * cv);
    return r;
}

TensorElt degree_part(const TensorElt& a, int degree) {
    TensorElt r;
    for (const auto& [w, c] : a.terms())
        if (static_cast<int>(w.size()) == degree)
            r.add_term(w, c);
    return r;
}

TensorElt truncate(const TensorElt& a, int max_degree) {
    TensorElt r;
    for (const auto& [w, c] : a.terms())
        if (static_cast<int>(w.size()) <= max_degree)
            r.add_term(w, c);
    return r;
}

TensorElt bracket(const TensorElt& a, const TensorElt& b) { return a * b - b * a; }

TensorElt2 tensor_product(const TensorElt& a, const TensorElt& b) {
    TensorElt2 r;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms())
            r.add_term({u, v}, cu * cv);
    return r;
}

TensorElt2 operator*(const TensorElt2& a, const TensorElt2& b) {
    TensorElt2 r;
    for (const auto& [k1, c1] : a.terms())
        for (const auto& [k2, c2] : b.terms())
            r.add_term({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
    return r;
}

TensorElt2 swap_factors(const TensorElt2& a) {
    TensorElt2 r;
    for (const auto& [k, c] : a.terms())
        r.add_term({k.second, k.first}, c);
    return r;
}

namespace {

void check_length(std::size_t n) {
    if (n > static_cast<std::size_t>(kMaxWordLength))
        throw std::invalid_argument("word too long to unshuffle: " + std::to_string(n));
}

// Calls fn(u, v) for every split of w into complementary increasing subsequences.
template <class Fn>
void for_each_unshuffle(const Word& w, Fn&& fn) {
    const std::size_t n = w.size();
    check_length(n);
    std::vector<Letter> u, v;
    u.reserve(n);
    v.reserve(n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        u.clear();
        v.clear();
        for (std::size_t i = 0; i < n; ++i)
            ((mask >> i) & 1u ? u : v).push_back(w[i]);
        fn(Word(u), Word(v));
    }
}

} // namespace

TensorElt2 unshuffle(const Word& w) {
    TensorElt2 r;
    for_each_unshuffle(w, [&](Word u, Word v) { r.add_term({std::move(u), std::move(v)}, Rational(1)); });
    return r;
}

TensorElt2 coproduct(const TensorElt& a) {
    TensorElt2 r;
    for (const auto& [w, c] : a.terms())
        for_each_unshuffle(w, [&](Word u, Word v) { r.add_term({std::move(u), std::move(v)}, c); });
    return r;
}

std::map<std::tuple<Word, Word, Word>, Rational> coproduct_left_twice(const TensorElt& a) {
    std::map<std::tuple<Word, Word, Word>, Rational> r;
    for (const auto& [k, c] : coproduct(a).terms())
        for (const auto& [k2, c2] : unshuffle(k.first).terms())
            r[{k2.first, k2.second, k.second}] += c * c2;
    std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

std::map<std::tuple<Word, Word, Word>, Rational> coproduct_right_twice(const TensorElt& a) {
    std::map<std::tuple<Word, Word, Word>, Rational> r;
    for (const auto& [k, c] : coproduct(a).terms())
        for (const auto& [k2, c2] : unshuffle(k.second).terms())
            r[{k.first, k2.first, k2.second}] += c * c2;
    std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

TensorElt antipode(const Word& w) {
    return TensorElt(w.reversed(), Rational(w.size() % 2 ? -1 : 1));
}

TensorElt antipode(const TensorElt& a) {
    TensorElt r;
    for (const auto& [w, c] : a.terms())
        r.add_term(w.reversed(), w.size() % 2 ? -c : c);
    return r;
}

Rational counit(const TensorElt& a) { return a.coeff(Word{}); }

bool is_primitive(const TensorElt& a) {
    TensorElt2 expected = tensor_product(a, TensorElt::unit()) + tensor_product(TensorElt::unit(), a);
    return coproduct(a) == expected;
}

bool is_grouplike(const TensorElt& g, int max_degree) {
    if (counit(g) != Rational(1))
        return false;
    TensorElt gt = truncate(g, max_degree);
    auto keep = [&](const TensorElt2& x) {
        TensorElt2 r;
        for (const auto& [k, c] : x.terms())
            if (static_cast<int>(k.first.size() + k.second.size()) <= max_degree)
                r.add_term(k, c);
        return r;
    };
    return keep(coproduct(gt)) == keep(tensor_product(gt, gt));
}

TensorElt GradedEndo::operator()(const TensorElt& a) const {
    TensorElt r;
    for (const auto& [w, c] : a.terms())
        r += c * action_(w);
    return r;
}

GradedEndo identity_endo() {
    return GradedEndo([](const Word& w) { return TensorElt(w); });
}

GradedEndo antipode_endo() {
    return GradedEndo([](const Word& w) { return antipode(w); });
}

GradedEndo counit_endo() {
    return GradedEndo([](const Word& w) { return w.empty() ? TensorElt::unit() : TensorElt{}; });
}

GradedEndo graduation_endo() {
    return GradedEndo([](const Word& w) { return TensorElt(w, Rational(static_cast<long>(w.size()))); });
}

namespace {

std::optional<int> add_shifts(std::optional<int> a, std::optional<int> b) {
    if (a && b)
        return *a + *b;
    return std::nullopt;
}

} // namespace

GradedEndo convolve(const GradedEndo& f, const GradedEndo& g) {
    return GradedEndo(
        [f, g](const Word& w) {
            TensorElt r;
            for_each_unshuffle(w, [&](const Word& u, const Word& v) { r += f(u) * g(v); });
            return r;
        },
        add_shifts(f.degree_shift(), g.degree_shift()));
}

GradedEndo compose(const GradedEndo& f, const GradedEndo& g) {
    return GradedEndo([f, g](const Word& w) { return f(g(w)); },
                      add_shifts(f.degree_shift(), g.degree_shift()));
}

GradedEndo operator+(const GradedEndo& f, const GradedEndo& g) {
    std::optional<int> shift;
    if (f.degree_shift() == g.degree_shift())
        shift = f.degree_shift();
    return GradedEndo([f, g](const Word& w) { return f(w) + g(w); }, shift);
}

GradedEndo operator*(const Rational& c, const GradedEndo& f) {
    return GradedEndo([c, f](const Word& w) { return c * f(w); }, f.degree_shift());
}

bool is_lyndon(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0)
        return false;
    const auto& s = w.letters();
    for (std::size_t i = 1; i < n; ++i) {
        // compare w with its rotation starting at i
        bool smaller = false;
        for (std::size_t k = 0; k < n; ++k) {
            Letter a = s[k], b = s[(i + k) % n];
            if (a != b) {
                smaller = a < b;
                break;
            }
            if (k + 1 == n)
                smaller = false; // periodic word, equal to a rotation
        }
        if (!smaller)
            return false;
    }
    return true;
}

std::vector<Word> lyndon_words(int alphabet_size, int degree) {
    if (degree < 1)
        throw std::invalid_argument("lyndon_words: degree must be >= 1");
    if (alphabet_size < 1 || alphabet_size > kMaxAlphabet)
        throw std::invalid_argument("lyndon_words: alphabet size out of range");
    // Duval's generation of all Lyndon words of length <= degree, in lexicographic order.
    std::vector<Word> out;
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) == degree)
            out.emplace_back(std::vector<Letter>(w.begin(), w.end()));
        const std::size_t m = w.size();
        while (static_cast<int>(w.size()) < degree)
            w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == alphabet_size - 1)
            w.pop_back();
    }
    return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    if (!is_lyndon(w) || w.size() < 2)
        throw std::invalid_argument("standard_factorization: expected a Lyndon word of length >= 2");
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word v = w.subword(i, w.size() - i);
        if (is_lyndon(v))
            return {w.subword(0, i), v};
    }
    throw std::logic_error("standard_factorization: no Lyndon suffix");
}

TensorElt lyndon_bracketing(const Word& w) {
    if (!is_lyndon(w))
        throw std::invalid_argument("lyndon_bracketing: '" + w.str() + "' is not a Lyndon word");
    if (w.size() == 1)
        return TensorElt(w);
    auto [u, v] = standard_factorization(w);
    return bracket(lyndon_bracketing(u), lyndon_bracketing(v));
}

std::vector<std::pair<Word, Rational>> lyndon_coordinates(const TensorElt& lie) {
    std::vector<std::pair<Word, Rational>> coords;
    TensorElt rest = lie;
    while (!rest.is_zero()) {
        const auto& [w, c] = *rest.terms().begin();
        if (!is_lyndon(w))
            throw std::invalid_argument("lyndon_coordinates: element is not in Lie(X) (leading word " +
                                        w.str() + ")");
        Word lead = w;
        Rational coef = c;
        coords.emplace_back(lead, coef);
        rest -= coef * lyndon_bracketing(lead);
    }
    return coords;
}

std::size_t rank(std::span<const TensorElt> family) {
    std::map<Word, TensorElt> pivots; // leading word -> row with leading coefficient 1
    for (const TensorElt& row : family) {
        TensorElt r = row;
        while (!r.is_zero()) {
            const auto& [lead, c] = *r.terms().begin();
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                Rational inv = Rational(1) / c;
                Word key = lead;
                pivots.emplace(key, inv * r);
                break;
            }
            r -= c * it->second;
        }
    }
    return pivots.size();
}

std::vector<Word> all_words(int alphabet_size, int length) {
    std::vector<Word> out;
    std::vector<Letter> cur(static_cast<std::size_t>(length), 0);
    while (true) {
        out.emplace_back(cur);
        int i = length - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == alphabet_size - 1)
            cur[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

} // namespace logderiv
