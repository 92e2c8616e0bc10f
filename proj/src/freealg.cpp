#include "ndga/freealg.hpp"

#include <algorithm>

#include "ndga/errors.hpp"

namespace ndga::freealg {

int degree(Letter x) { return (x == Letter::a || x == Letter::b) ? 1 : 2; }

std::string_view name(Letter x) {
    switch (x) {
    case Letter::a: return "a";
    case Letter::da: return "da";
    case Letter::b: return "b";
    case Letter::db: return "db";
    }
    return "?";
}

Letter letter_from_name(std::string_view text) {
    for (Letter x : full_alphabet())
        if (name(x) == text) return x;
    throw ParseError(std::string(text), "unknown letter (expected a, da, b or db)");
}

int degree(const Word& w) {
    int total = 0;
    for (Letter x : w) total += degree(x);
    return total;
}

std::string word_str(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += "·";
        out += name(w[i]);
    }
    return out;
}

Word parse_word(std::string_view text) {
    Word out;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) out.push_back(letter_from_name(token));
        token.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (text.substr(i, 2) == "·") {
            flush();
            ++i;
        } else if (ch == '.' || ch == ' ' || ch == '\t') {
            flush();
        } else {
            token += ch;
        }
    }
    flush();
    if (out.empty()) throw ParseError(std::string(text), "empty word");
    return out;
}

bool WordOrder::operator()(const Word& x, const Word& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
}

const std::vector<Letter>& full_alphabet() {
    static const std::vector<Letter> letters{Letter::a, Letter::da, Letter::b, Letter::db};
    return letters;
}

NCPoly NCPoly::word(Word w, Scalar c) {
    NCPoly p;
    p.add_term(w, c);
    return p;
}

Scalar NCPoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

NCPoly operator*(const NCPoly& x, const NCPoly& y) {
    NCPoly out;
    for (const auto& [u, cu] : x.terms_)
        for (const auto& [v, cv] : y.terms_) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add_term(w, cu * cv);
        }
    return out;
}

std::string NCPoly::str() const {
    CyclicComb as_map(terms_.begin(), terms_.end());
    return format_functional(as_map);
}

NCPoly pow(const NCPoly& p, unsigned k) {
    NCPoly out = NCPoly::word({}); // the empty word is the unit
    for (unsigned i = 0; i < k; ++i) out = out * p;
    return out;
}

NCPoly free_d(const NCPoly& p) {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        int prefix = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == Letter::a || w[i] == Letter::b) {
                Word v = w;
                v[i] = (w[i] == Letter::a) ? Letter::da : Letter::db;
                out.add_term(v, c * Scalar::sign_power(prefix));
            }
            prefix += degree(w[i]);
        }
    }
    return out;
}

NCPoly hash_map(const NCPoly& p) {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) out.add_term(w, c * Scalar(static_cast<long>(w.size())));
    return out;
}

NCPoly hash_inverse(const NCPoly& p) {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        if (w.empty()) throw ArgumentError("#^{-1} is undefined on the empty word");
        out.add_term(w, c / Scalar(static_cast<long>(w.size())));
    }
    return out;
}

std::optional<CanonicalRotation> canonical_rotation(const Word& w) {
    if (w.empty()) return CanonicalRotation{w, 1};
    const int total = degree(w);
    // rotation r_k starts at position k; w ≡ sign_k · r_k
    Word current = w;
    int sign = 1;
    CanonicalRotation best{w, 1};
    for (std::size_t k = 1; k < w.size(); ++k) {
        const int x = degree(current.front());
        if ((x * (total - x)) % 2 != 0) sign = -sign;
        std::rotate(current.begin(), current.begin() + 1, current.end());
        if (current == w && sign == -1) return std::nullopt;
        if (WordOrder{}(current, best.representative)) best = {current, sign};
    }
    return best;
}

CyclicComb cyclic_reduce(const NCPoly& p) {
    CyclicComb out;
    for (const auto& [w, c] : p.terms()) {
        auto rot = canonical_rotation(w);
        if (!rot) continue;
        Scalar& slot = out[rot->representative];
        slot += c * Scalar(rot->sign);
        if (slot.is_zero()) out.erase(rot->representative);
    }
    return out;
}

CyclicComb cyclic_reduce(const CyclicComb& c) { return cyclic_reduce(as_poly(c)); }

NCPoly as_poly(const CyclicComb& c) {
    NCPoly out;
    for (const auto& [w, x] : c) out.add_term(w, x);
    return out;
}

CyclicComb add(const CyclicComb& x, const CyclicComb& y) { return cyclic_reduce(as_poly(x) + as_poly(y)); }
CyclicComb subtract(const CyclicComb& x, const CyclicComb& y) { return cyclic_reduce(as_poly(x) - as_poly(y)); }
CyclicComb scaled(const CyclicComb& x, const Scalar& s) { return cyclic_reduce(as_poly(x) * s); }

namespace {

void extend_words(int remaining, std::size_t max_length, const std::vector<Letter>& alphabet, Word& current,
                  std::vector<Word>& out) {
    if (remaining == 0) {
        if (!current.empty()) out.push_back(current);
        return;
    }
    if (current.size() == max_length) return;
    for (Letter x : alphabet) {
        if (degree(x) > remaining) continue;
        current.push_back(x);
        extend_words(remaining - degree(x), max_length, alphabet, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Word> words_of_degree(int degree, std::size_t max_length, const std::vector<Letter>& alphabet) {
    std::vector<Word> out;
    if (degree <= 0) return out;
    Word current;
    extend_words(degree, max_length, alphabet, current, out);
    std::sort(out.begin(), out.end(), WordOrder{});
    return out;
}

ExactSpan::ExactSpan(int degree, std::size_t letter_budget, const std::vector<Letter>& alphabet) : degree_(degree) {
    for (const auto& w : words_of_degree(degree - 1, letter_budget, alphabet)) {
        CyclicComb g = cyclic_reduce(free_d(NCPoly::word(w)));
        if (g.empty()) continue;
        for (const auto& [v, c] : g) coord_index_.try_emplace(v, 0);
        generators_.push_back(std::move(g));
    }
    std::size_t k = 0;
    for (auto& [v, index] : coord_index_) {
        index = k++;
        coords_.push_back(v);
    }
    Matrix rows(generators_.size(), coords_.size());
    for (std::size_t r = 0; r < generators_.size(); ++r)
        for (const auto& [v, c] : generators_[r]) rows(r, coord_index_.at(v)) = c;
    echelon_ = row_reduce(std::move(rows));
}

bool ExactSpan::contains(const CyclicComb& raw) const {
    const CyclicComb c = cyclic_reduce(raw);
    Vector v(coords_.size());
    for (const auto& [w, x] : c) {
        auto it = coord_index_.find(w);
        if (it == coord_index_.end()) return false;
        v[it->second] = x;
    }
    const Matrix& R = echelon_.reduced;
    for (std::size_t r = 0; r < echelon_.pivots.size(); ++r) {
        const Scalar factor = v[echelon_.pivots[r]];
        if (factor.is_zero()) continue;
        for (std::size_t j = 0; j < coords_.size(); ++j)
            if (!R(r, j).is_zero()) v[j] -= factor * R(r, j);
    }
    return ndga::is_zero(v);
}

ExactSpan d_exact_span(int degree, std::size_t letter_budget) { return ExactSpan(degree, letter_budget); }

NCPoly curvature() {
    const NCPoly a = NCPoly::letter(Letter::a);
    return NCPoly::letter(Letter::da) + a * a;
}

CyclicComb cs_functional(unsigned K) {
    if (K == 0) throw ArgumentError("K must be at least 1");
    const NCPoly body = NCPoly::letter(Letter::a) * pow(curvature(), K);
    return cyclic_reduce(hash_inverse(body) * Scalar(2 * static_cast<long>(K)));
}

CyclicComb first_variation(const CyclicComb& c) {
    NCPoly out;
    for (const auto& [w, x] : c)
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] != Letter::a && w[i] != Letter::da) continue;
            Word v = w;
            v[i] = (w[i] == Letter::a) ? Letter::b : Letter::db;
            out.add_term(v, x);
        }
    return cyclic_reduce(out);
}

CyclicComb expected_variation(unsigned K) {
    if (K == 0) throw ArgumentError("K must be at least 1");
    return cyclic_reduce(NCPoly::letter(Letter::b) * pow(curvature(), K) * Scalar(2 * static_cast<long>(K)));
}

bool variational_check(unsigned K) {
    const CyclicComb difference = subtract(first_variation(cs_functional(K)), expected_variation(K));
    if (difference.empty()) return true;
    const int deg = 2 * static_cast<int>(K) + 1;
    return d_exact_span(deg, static_cast<std::size_t>(deg)).contains(difference);
}

std::string format_functional(const CyclicComb& c) {
    if (c.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, x] : c) {
        const std::string magnitude = x.abs().str() + " * " + (w.empty() ? std::string("1") : word_str(w));
        if (first) out += (x.sign() < 0 ? "-" : "") + magnitude;
        else out += (x.sign() < 0 ? " - " : " + ") + magnitude;
        first = false;
    }
    return out;
}

nlohmann::json functional_to_json(const CyclicComb& c) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, x] : c) {
        nlohmann::json letters = nlohmann::json::array();
        for (Letter l : w) letters.push_back(std::string(name(l)));
        terms.push_back({{"word", word_str(w)}, {"letters", letters}, {"coefficient", x.str()}});
    }
    return {{"terms", terms}};
}

} // namespace ndga::freealg
