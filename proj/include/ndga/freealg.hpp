#ifndef NDGA_FREEALG_HPP
#define NDGA_FREEALG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ndga/matrix.hpp"
#include "ndga/scalar.hpp"

namespace ndga::freealg {

/// Letters of the free graded algebra, in canonical order a < da < b < db.
enum class Letter : std::uint8_t { a, da, b, db };

int degree(Letter x);
std::string_view name(Letter x);
Letter letter_from_name(std::string_view text);

using Word = std::vector<Letter>;

int degree(const Word& w);
std::string word_str(const Word& w); // letters joined by "·"
/// Parses "a·da·a", "a.da.a" or "a da a".
Word parse_word(std::string_view text);

/// Shorter words first, then lexicographic in the letter order.
struct WordOrder {
    bool operator()(const Word& x, const Word& y) const;
};

/// Exact linear combination of words. Zero coefficients are never stored.
class NCPoly {
public:
    using Terms = std::map<Word, Scalar, WordOrder>;

    NCPoly() = default;
    static NCPoly word(Word w, Scalar c = 1);
    static NCPoly letter(Letter x) { return word({x}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Word& w) const;

    void add_term(const Word& w, const Scalar& c);

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Scalar& s);
    friend NCPoly operator+(NCPoly x, const NCPoly& y) { return x += y; }
    friend NCPoly operator-(NCPoly x, const NCPoly& y) { return x -= y; }
    friend NCPoly operator*(NCPoly x, const Scalar& s) { return x *= s; }
    friend NCPoly operator*(const Scalar& s, NCPoly x) { return x *= s; }
    friend NCPoly operator*(const NCPoly& x, const NCPoly& y); // concatenation product
    friend bool operator==(const NCPoly&, const NCPoly&) = default;

    std::string str() const;

private:
    Terms terms_;
};

NCPoly pow(const NCPoly& p, unsigned k);

/// The derivation with a ↦ da, b ↦ db, da, db ↦ 0 and
/// d(xw) = d(x)w + (-1)^{deg x} x d(w).
NCPoly free_d(const NCPoly& p);

/// Scale each word by its letter count.
NCPoly hash_map(const NCPoly& p);
/// Divide each word by its letter count; the empty word is an ArgumentError.
NCPoly hash_inverse(const NCPoly& p);

/// Words modulo graded cyclic rotation. Moving the first letter x of w = xv to
/// the end costs (-1)^{deg x · deg v}. The representative of a class is its
/// least rotation under WordOrder.
using CyclicComb = std::map<Word, Scalar, WordOrder>;

struct CanonicalRotation {
    Word representative;
    int sign = 1; // w ≡ sign · representative
};

/// nullopt when some rotation maps w to -w (the class is zero).
std::optional<CanonicalRotation> canonical_rotation(const Word& w);

CyclicComb cyclic_reduce(const NCPoly& p);
/// Re-reduce a combination (identity on reduced input).
CyclicComb cyclic_reduce(const CyclicComb& c);
NCPoly as_poly(const CyclicComb& c);

CyclicComb add(const CyclicComb& x, const CyclicComb& y);
CyclicComb subtract(const CyclicComb& x, const CyclicComb& y);
CyclicComb scaled(const CyclicComb& x, const Scalar& s);

/// All words over `alphabet` of total degree `degree` with 1..max_length letters.
std::vector<Word> words_of_degree(int degree, std::size_t max_length, const std::vector<Letter>& alphabet);

const std::vector<Letter>& full_alphabet();

/// Span of cyclic_reduce(free_d(w)) over every word w of degree `degree - 1`
/// and at most `letter_budget` letters. Membership is decided by exact
/// elimination in the coordinates of the classes that occur.
class ExactSpan {
public:
    ExactSpan(int degree, std::size_t letter_budget, const std::vector<Letter>& alphabet = full_alphabet());

    int degree() const { return degree_; }
    std::size_t dimension() const { return echelon_.pivots.size(); }
    const std::vector<CyclicComb>& generators() const { return generators_; }

    bool contains(const CyclicComb& c) const;

private:
    int degree_;
    std::vector<CyclicComb> generators_;
    std::vector<Word> coords_;
    std::map<Word, std::size_t, WordOrder> coord_index_;
    RowEchelon echelon_; // rows span the generators
};

ExactSpan d_exact_span(int degree, std::size_t letter_budget);

/// da + a^2
NCPoly curvature();

/// 2K · cyclic_reduce(#^{-1}(a (da + a^2)^K)).
CyclicComb cs_functional(unsigned K);

/// ε-linear part of c(a + εb) with da ↦ da + ε db, reduced cyclically.
CyclicComb first_variation(const CyclicComb& c);

/// 2K · cyclic_reduce(b (da + a^2)^K)
CyclicComb expected_variation(unsigned K);

/// first_variation(cs_functional(K)) - expected_variation(K) ∈ d_exact_span.
bool variational_check(unsigned K);

/// "4/3 * a·da·da + 2 * a·a·a·da + ..." in class order; "0" when empty.
std::string format_functional(const CyclicComb& c);
nlohmann::json functional_to_json(const CyclicComb& c);

} // namespace ndga::freealg

#endif // NDGA_FREEALG_HPP
