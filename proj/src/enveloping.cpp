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

#include "logderiv/enveloping.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <sstream>

#include "json.hpp"

#include "logderiv/series.hpp"

namespace logderiv {

namespace {

std::string triple_name(const LiePresentation& p, std::initializer_list<BasisIndex> idx) {
    std::string s = "(";
    bool first = true;
    for (BasisIndex i : idx) {
        s += (first ? "" : ", ") + p.basis(i).name;
        first = false;
    }
    return s + ")";
}

} // namespace

LiePresentation::LiePresentation(std::vector<BasisElement> basis, std::vector<BracketEntry> brackets,
                                 std::optional<std::vector<LieVector>> derivation, int check_degree)
    : basis_(std::move(basis)), derivation_(std::move(derivation)) {
    if (basis_.empty())
        throw PresentationError("presentation has an empty basis");
    if (basis_.size() > 0xFFFF)
        throw PresentationError("presentation basis too large");
    std::set<std::string> names;
    for (const auto& b : basis_) {
        if (b.name.empty())
            throw PresentationError("basis element with empty name");
        if (!names.insert(b.name).second)
            throw PresentationError("duplicate basis name '" + b.name + "'");
        if (b.degree < 1)
            throw PresentationError("basis element '" + b.name + "' must have degree >= 1");
        max_degree_ = std::max(max_degree_, b.degree);
    }
    const auto n = static_cast<BasisIndex>(basis_.size());
    for (auto& e : brackets) {
        if (e.i >= n || e.j >= n)
            throw PresentationError("bracket entry refers to an unknown basis index");
        if (e.i == e.j)
            throw PresentationError("bracket entry [e_i, e_i] must not be given");
        if (e.i > e.j) {
            std::swap(e.i, e.j);
            e.value *= Rational(-1);
        }
        for (const auto& [k, c] : e.value.terms()) {
            if (k >= n)
                throw PresentationError("bracket value refers to an unknown basis index");
            if (degree(k) != degree(e.i) + degree(e.j))
                throw PresentationError("bracket " + triple_name(*this, {e.i, e.j}) + " is not degree additive");
        }
        if (!brackets_.emplace(std::pair{e.i, e.j}, e.value).second)
            throw PresentationError("bracket " + triple_name(*this, {e.i, e.j}) + " given twice");
        if (!e.value.is_zero())
            table_.push_back(e);
    }
    if (derivation_) {
        if (derivation_->size() != basis_.size())
            throw PresentationError("derivation must give one image per basis element");
        for (BasisIndex i = 0; i < n; ++i)
            for (const auto& [k, c] : (*derivation_)[i].terms())
                if (k >= n || degree(k) != degree(i))
                    throw PresentationError("derivation does not preserve the degree of " + basis_[i].name);
    }
    check_degree_ = check_degree < 0 ? max_degree_ : check_degree;
    validate();
}

std::optional<BasisIndex> LiePresentation::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name)
            return static_cast<BasisIndex>(i);
    return std::nullopt;
}

LieVector LiePresentation::bracket(BasisIndex i, BasisIndex j) const {
    if (i == j)
        return {};
    bool flip = i > j;
    auto it = brackets_.find(flip ? std::pair{j, i} : std::pair{i, j});
    if (it == brackets_.end())
        return {};
    return flip ? -it->second : it->second;
}

LieVector LiePresentation::bracket(const LieVector& x, const LieVector& y) const {
    LieVector r;
    for (const auto& [i, a] : x.terms())
        for (const auto& [j, b] : y.terms())
            r += (a * b) * bracket(i, j);
    return r;
}

LieVector LiePresentation::apply_derivation(const LieVector& x) const {
    if (!derivation_)
        throw std::invalid_argument("presentation has no derivation");
    LieVector r;
    for (const auto& [i, a] : x.terms())
        r += a * (*derivation_)[i];
    return r;
}

void LiePresentation::validate() const {
    const auto n = static_cast<BasisIndex>(basis_.size());
    for (BasisIndex i = 0; i < n; ++i) {
        for (BasisIndex j = i + 1; j < n; ++j) {
            if (degree(i) + degree(j) > check_degree_)
                continue;
            if (derivation_) {
                LieVector ei(i), ej(j);
                LieVector lhs = apply_derivation(bracket(ei, ej));
                LieVector rhs = bracket(apply_derivation(ei), ej) + bracket(ei, apply_derivation(ej));
                if (!(lhs == rhs))
                    throw PresentationError("derivation law fails on " + triple_name(*this, {i, j}));
            }
            for (BasisIndex k = j + 1; k < n; ++k) {
                if (degree(i) + degree(j) + degree(k) > check_degree_)
                    continue;
                LieVector ei(i), ej(j), ek(k);
                LieVector jac = bracket(ei, bracket(ej, ek)) + bracket(ej, bracket(ek, ei)) +
                                bracket(ek, bracket(ei, ej));
                if (!jac.is_zero())
                    throw PresentationError("Jacobi identity fails on " + triple_name(*this, {i, j, k}));
            }
        }
    }
}

PBWElement::PBWElement(PresentationPtr p) : pres_(std::move(p)) {
    if (!pres_)
        throw std::invalid_argument("PBWElement needs a presentation");
}

PBWElement::PBWElement(PresentationPtr p, Monomial m, const Rational& c) : PBWElement(std::move(p)) {
    if (!std::is_sorted(m.begin(), m.end()))
        throw std::invalid_argument("PBW monomial must be nondecreasing");
    for (BasisIndex i : m)
        if (i >= pres_->dimension())
            throw std::invalid_argument("PBW monomial refers to an unknown basis index");
    add_term(m, c);
}

PBWElement PBWElement::generator(PresentationPtr p, BasisIndex i) { return PBWElement(std::move(p), Monomial{i}); }

PBWElement PBWElement::from_lie(PresentationPtr p, const LieVector& x) {
    PBWElement r(p);
    for (const auto& [i, c] : x.terms())
        r.add_term(Monomial{i}, c);
    return r;
}

int PBWElement::degree(const Monomial& m) const {
    int d = 0;
    for (BasisIndex i : m)
        d += pres_->degree(i);
    return d;
}

int PBWElement::max_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, degree(m));
    return d;
}

std::optional<LieVector> PBWElement::as_lie() const {
    LieVector r;
    for (const auto& [m, c] : terms_) {
        if (m.size() != 1)
            return std::nullopt;
        r.add_term(m[0], c);
    }
    return r;
}

void PBWElement::check_compatible(const PBWElement& o) const {
    if (pres_ != o.pres_)
        throw std::invalid_argument("PBW elements belong to different presentations");
}

std::string PBWElement::str() const {
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](const auto& x, const auto& y) { return degree(x.first) < degree(y.first); });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : sorted) {
        out += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        first = false;
        Rational mag = c.sign() < 0 ? -c : c;
        if (m.empty()) {
            out += mag.str();
            continue;
        }
        if (mag != Rational(1))
            out += mag.str() + " ";
        for (std::size_t k = 0; k < m.size(); ++k)
            out += (k ? "*" : "") + pres_->basis(m[k]).name;
    }
    return out;
}

namespace {

PBWElement times_generator(const PBWElement& a, BasisIndex j, int max_degree);

// m * e_j in normal form, dropping everything above max_degree.
PBWElement monomial_times_generator(const PresentationPtr& p, const Monomial& m, BasisIndex j, int max_degree) {
    PBWElement probe(p);
    if (probe.degree(m) + p->degree(j) > max_degree)
        return probe;
    if (m.empty() || m.back() <= j) {
        Monomial r = m;
        r.push_back(j);
        return PBWElement(p, std::move(r));
    }
    // u e_k e_j = (u e_j) e_k + u [e_k, e_j]
    const BasisIndex k = m.back();
    Monomial u(m.begin(), m.end() - 1);
    PBWElement r = times_generator(monomial_times_generator(p, u, j, max_degree), k, max_degree);
    for (const auto& [c, coeff] : p->bracket(k, j).terms())
        r += coeff * monomial_times_generator(p, u, c, max_degree);
    return r;
}

PBWElement times_generator(const PBWElement& a, BasisIndex j, int max_degree) {
    PBWElement r(a.presentation());
    for (const auto& [m, c] : a.terms())
        r += c * monomial_times_generator(a.presentation(), m, j, max_degree);
    return r;
}

} // namespace

PBWElement pbw_mul_truncated(const PBWElement& a, const PBWElement& b, int max_degree) {
    a.check_compatible(b);
    const PresentationPtr& p = a.presentation();
    PBWElement r(p);
    for (const auto& [m1, c1] : a.terms()) {
        const int d1 = a.degree(m1);
        for (const auto& [m2, c2] : b.terms()) {
            if (d1 + b.degree(m2) > max_degree)
                continue;
            PBWElement prod(p, m1);
            for (BasisIndex j : m2)
                prod = times_generator(prod, j, max_degree);
            r += (c1 * c2) * prod;
        }
    }
    return r;
}

PBWElement pbw_mul(const PBWElement& a, const PBWElement& b) { return pbw_mul_truncated(a, b, INT_MAX); }

PBWElement straighten(const PresentationPtr& p, const std::vector<BasisIndex>& product, StraightenOrder order) {
    std::optional<std::size_t> pos;
    for (std::size_t i = 0; i + 1 < product.size(); ++i) {
        if (product[i] > product[i + 1]) {
            pos = i;
            if (order == StraightenOrder::leftmost)
                break;
        }
    }
    if (!pos)
        return PBWElement(p, Monomial(product.begin(), product.end()));
    const std::size_t i = *pos;
    std::vector<BasisIndex> swapped = product;
    std::swap(swapped[i], swapped[i + 1]);
    PBWElement r = straighten(p, swapped, order);
    for (const auto& [c, coeff] : p->bracket(product[i], product[i + 1]).terms()) {
        std::vector<BasisIndex> shorter(product.begin(), product.begin() + static_cast<std::ptrdiff_t>(i));
        shorter.push_back(c);
        shorter.insert(shorter.end(), product.begin() + static_cast<std::ptrdiff_t>(i + 2), product.end());
        r += coeff * straighten(p, shorter, order);
    }
    return r;
}

PBWElement degree_part(const PBWElement& a, int degree) {
    PBWElement r(a.presentation());
    for (const auto& [m, c] : a.terms())
        if (a.degree(m) == degree)
            r.add_term(m, c);
    return r;
}

PBWElement truncate(const PBWElement& a, int max_degree) {
    PBWElement r(a.presentation());
    for (const auto& [m, c] : a.terms())
        if (a.degree(m) <= max_degree)
            r.add_term(m, c);
    return r;
}

PBWElement bracket(const PBWElement& a, const PBWElement& b) { return a * b - b * a; }

void PBWPair::check_compatible(const PBWPair& o) const {
    if (pres_ != o.pres_)
        throw std::invalid_argument("PBW pairs belong to different presentations");
}

PBWPair pbw_tensor(const PBWElement& a, const PBWElement& b) {
    a.check_compatible(b);
    PBWPair r(a.presentation());
    for (const auto& [m1, c1] : a.terms())
        for (const auto& [m2, c2] : b.terms())
            r.add_term({m1, m2}, c1 * c2);
    return r;
}

PBWPair operator*(const PBWPair& a, const PBWPair& b) {
    a.check_compatible(b);
    const PresentationPtr& p = a.presentation();
    PBWPair r(p);
    for (const auto& [k1, c1] : a.terms()) {
        for (const auto& [k2, c2] : b.terms()) {
            PBWElement left = pbw_mul(PBWElement(p, k1.first), PBWElement(p, k2.first));
            PBWElement right = pbw_mul(PBWElement(p, k1.second), PBWElement(p, k2.second));
            for (const auto& [l, cl] : left.terms())
                for (const auto& [rr, cr] : right.terms())
                    r.add_term({l, rr}, c1 * c2 * cl * cr);
        }
    }
    return r;
}

PBWPair pbw_swap(const PBWPair& a) {
    PBWPair r(a.presentation());
    for (const auto& [k, c] : a.terms())
        r.add_term({k.second, k.first}, c);
    return r;
}

namespace {

template <class Fn>
void for_each_split(const Monomial& m, Fn&& fn) {
    const std::size_t n = m.size();
    if (n > static_cast<std::size_t>(kMaxWordLength))
        throw std::invalid_argument("PBW monomial too long to split");
    Monomial u, v;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        u.clear();
        v.clear();
        for (std::size_t i = 0; i < n; ++i)
            ((mask >> i) & 1u ? u : v).push_back(m[i]);
        fn(u, v);
    }
}

} // namespace

PBWPair pbw_coproduct(const PBWElement& a) {
    PBWPair r(a.presentation());
    for (const auto& [m, c] : a.terms())
        for_each_split(m, [&](const Monomial& u, const Monomial& v) { r.add_term({u, v}, c); });
    return r;
}

PBWElement pbw_antipode(const PBWElement& a) {
    const PresentationPtr& p = a.presentation();
    PBWElement r(p);
    for (const auto& [m, c] : a.terms()) {
        PBWElement prod = PBWElement::unit(p);
        for (auto it = m.rbegin(); it != m.rend(); ++it)
            prod = times_generator(prod, *it, INT_MAX);
        r += (m.size() % 2 ? -c : c) * prod;
    }
    return r;
}

Rational pbw_counit(const PBWElement& a) { return a.coeff(Monomial{}); }

PBWElement pbw_convolve(const std::function<PBWElement(const PBWElement&)>& f,
                        const std::function<PBWElement(const PBWElement&)>& g, const PBWElement& a) {
    const PresentationPtr& p = a.presentation();
    PBWElement r(p);
    for (const auto& [m, c] : a.terms())
        for_each_split(m, [&](const Monomial& u, const Monomial& v) {
            r += c * pbw_mul(f(PBWElement(p, u)), g(PBWElement(p, v)));
        });
    return r;
}

bool is_primitive(const PBWElement& a) {
    PBWElement one = PBWElement::unit(a.presentation());
    return pbw_coproduct(a) == pbw_tensor(a, one) + pbw_tensor(one, a);
}

bool is_grouplike(const PBWElement& g, int max_degree) {
    if (pbw_counit(g) != Rational(1))
        return false;
    PBWElement gt = truncate(g, max_degree);
    auto keep = [&](const PBWPair& x) {
        PBWPair r(x.presentation());
        for (const auto& [k, c] : x.terms())
            if (gt.degree(k.first) + gt.degree(k.second) <= max_degree)
                r.add_term(k, c);
        return r;
    };
    return keep(pbw_coproduct(gt)) == keep(pbw_tensor(gt, gt));
}

PBWElement exp_truncated(const PBWElement& l, int max_degree) { return exp_series(l, max_degree); }

PBWElement log_truncated(const PBWElement& g, int max_degree) { return log_series(g, max_degree); }

PBWElement ad_power(const PBWElement& l, int k, const PBWElement& x) {
    return ad_power_truncated(l, k, x, INT_MAX);
}

PBWDerivation PBWDerivation::diagonal(std::vector<Rational> scalars) {
    std::vector<LieVector> images;
    for (std::size_t i = 0; i < scalars.size(); ++i)
        images.emplace_back(static_cast<BasisIndex>(i), scalars[i]);
    return PBWDerivation(std::move(images));
}

PBWDerivation PBWDerivation::graduation(const LiePresentation& p) {
    std::vector<Rational> d;
    for (const auto& b : p.basis())
        d.emplace_back(b.degree);
    return diagonal(std::move(d));
}

PBWDerivation PBWDerivation::from_presentation(const LiePresentation& p) {
    if (!p.derivation())
        throw std::invalid_argument("presentation has no derivation");
    return PBWDerivation(*p.derivation());
}

std::optional<std::vector<Rational>> PBWDerivation::diagonal_entries() const {
    std::vector<Rational> d;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        for (const auto& [k, c] : images_[i].terms())
            if (k != i)
                return std::nullopt;
        d.push_back(images_[i].coeff(static_cast<BasisIndex>(i)));
    }
    return d;
}

Rational PBWDerivation::eigenvalue(const Monomial& m) const {
    Rational e;
    for (BasisIndex i : m)
        e += images_.at(i).coeff(i);
    return e;
}

PBWElement PBWDerivation::operator()(const PBWElement& a) const {
    const PresentationPtr& p = a.presentation();
    if (images_.size() != p->dimension())
        throw std::invalid_argument("derivation size does not match the presentation");
    PBWElement r(p);
    if (diagonal_entries()) {
        for (const auto& [m, c] : a.terms())
            r.add_term(m, c * eigenvalue(m));
        return r;
    }
    for (const auto& [m, c] : a.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            PBWElement prefix(p, Monomial(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(i)));
            PBWElement suffix(p, Monomial(m.begin() + static_cast<std::ptrdiff_t>(i + 1), m.end()));
            r += c * pbw_mul(pbw_mul(prefix, PBWElement::from_lie(p, images_[m[i]])), suffix);
        }
    }
    return r;
}

PBWElement log_derivative(const PBWElement& a, const std::function<PBWElement(const PBWElement&)>& delta) {
    return pbw_convolve([](const PBWElement& x) { return pbw_antipode(x); }, delta, a);
}

PresentationPtr witt_presentation(int n_max, WittDelta delta) {
    if (n_max < 1)
        throw std::invalid_argument("witt_presentation: n_max must be >= 1");
    std::vector<BasisElement> basis;
    std::vector<BracketEntry> brackets;
    std::vector<LieVector> deriv;
    for (int n = 1; n <= n_max; ++n) {
        basis.push_back({"e" + std::to_string(n), n});
        deriv.emplace_back(static_cast<BasisIndex>(n - 1), Rational(delta == WittDelta::graduation ? n : n + 1));
        for (int m = n + 1; n + m <= n_max; ++m)
            brackets.push_back({static_cast<BasisIndex>(n - 1), static_cast<BasisIndex>(m - 1),
                                LieVector(static_cast<BasisIndex>(n + m - 1), Rational(m - n))});
    }
    return std::make_shared<const LiePresentation>(std::move(basis), std::move(brackets), std::move(deriv));
}

FreeLiePresentation free_lie_presentation(int alphabet_size, int max_degree) {
    FreeLiePresentation out;
    std::map<Word, BasisIndex> index;
    std::vector<BasisElement> basis;
    for (int d = 1; d <= max_degree; ++d) {
        for (const Word& w : lyndon_words(alphabet_size, d)) {
            index.emplace(w, static_cast<BasisIndex>(out.lyndon.size()));
            out.lyndon.push_back(w);
            out.images.push_back(lyndon_bracketing(w));
            basis.push_back({w.str(), d});
        }
    }
    std::vector<BracketEntry> brackets;
    std::vector<LieVector> deriv;
    for (std::size_t i = 0; i < out.lyndon.size(); ++i) {
        deriv.emplace_back(static_cast<BasisIndex>(i), Rational(basis[i].degree));
        for (std::size_t j = i + 1; j < out.lyndon.size(); ++j) {
            if (basis[i].degree + basis[j].degree > max_degree)
                continue;
            LieVector v;
            for (const auto& [w, c] : lyndon_coordinates(bracket(out.images[i], out.images[j])))
                v.add_term(index.at(w), c);
            if (!v.is_zero())
                brackets.push_back({static_cast<BasisIndex>(i), static_cast<BasisIndex>(j), std::move(v)});
        }
    }
    out.presentation =
        std::make_shared<const LiePresentation>(std::move(basis), std::move(brackets), std::move(deriv));
    return out;
}

TensorElt to_tensor(const PBWElement& a, const FreeLiePresentation& free_lie) {
    if (a.presentation() != free_lie.presentation)
        throw std::invalid_argument("to_tensor: element is not over this free Lie presentation");
    TensorElt r;
    for (const auto& [m, c] : a.terms()) {
        TensorElt prod = TensorElt::unit();
        for (BasisIndex i : m)
            prod = prod * free_lie.images.at(i);
        r += c * prod;
    }
    return r;
}

namespace {

BasisIndex parse_index(const std::string& tok, std::size_t dim) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("bad basis index '" + tok + "'");
    }
    if (used != tok.size() || v >= dim)
        throw ParseError("bad basis index '" + tok + "'");
    return static_cast<BasisIndex>(v);
}

BracketEntry parse_bracket_entry(const std::string& text, std::size_t dim) {
    auto arrow = text.find("->");
    if (arrow == std::string::npos)
        throw ParseError("bracket entry without '->': '" + text + "'");
    std::istringstream lhs(text.substr(0, arrow));
    std::string ti, tj, extra;
    if (!(lhs >> ti >> tj) || (lhs >> extra))
        throw ParseError("bracket entry needs two indices before '->': '" + text + "'");
    BracketEntry e{parse_index(ti, dim), parse_index(tj, dim), {}};
    std::string rhs = text.substr(arrow + 2);
    std::size_t start = 0;
    while (start <= rhs.size()) {
        auto semi = rhs.find(';', start);
        std::istringstream term(rhs.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
        std::string coeff, k;
        if (term >> coeff) {
            if (!(term >> k) || (term >> extra))
                throw ParseError("bracket term must read '<coeff> <index>': '" + text + "'");
            e.value.add_term(parse_index(k, dim), Rational::parse(coeff));
        }
        if (semi == std::string::npos)
            break;
        start = semi + 1;
    }
    return e;
}

} // namespace

LiePresentation presentation_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("presentation file is not valid JSON: ") + e.what());
    }
    try {
        std::vector<BasisElement> basis;
        for (const auto& b : j.at("basis"))
            basis.push_back({b.at("name").get<std::string>(), b.at("degree").get<int>()});
        std::vector<BracketEntry> brackets;
        if (j.contains("brackets"))
            for (const auto& e : j.at("brackets"))
                brackets.push_back(parse_bracket_entry(e.get<std::string>(), basis.size()));
        std::optional<std::vector<LieVector>> deriv;
        if (j.contains("derivation")) {
            deriv.emplace();
            for (const auto& c : j.at("derivation")) {
                auto i = static_cast<BasisIndex>(deriv->size());
                deriv->emplace_back(i, Rational::parse(c.get<std::string>()));
            }
        }
        int check = j.value("check_degree", -1);
        return LiePresentation(std::move(basis), std::move(brackets), std::move(deriv), check);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed presentation file: ") + e.what());
    }
}

std::string presentation_to_json(const LiePresentation& p) {
    nlohmann::ordered_json j;
    j["basis"] = nlohmann::ordered_json::array();
    for (const auto& b : p.basis())
        j["basis"].push_back({{"name", b.name}, {"degree", b.degree}});
    j["brackets"] = nlohmann::ordered_json::array();
    for (const auto& e : p.bracket_table()) {
        std::string s = std::to_string(e.i) + " " + std::to_string(e.j) + " ->";
        bool first = true;
        for (const auto& [k, c] : e.value.terms()) {
            s += (first ? " " : "; ") + c.str() + " " + std::to_string(k);
            first = false;
        }
        j["brackets"].push_back(s);
    }
    if (p.derivation()) {
        PBWDerivation d(*p.derivation());
        if (auto diag = d.diagonal_entries()) {
            j["derivation"] = nlohmann::ordered_json::array();
            for (const auto& c : *diag)
                j["derivation"].push_back(c.str());
        } else {
            throw std::invalid_argument("presentation files only store diagonal derivations");
        }
    }
    j["check_degree"] = p.check_degree();
    return j.dump(2) + "\n";
}

} // namespace logderiv
