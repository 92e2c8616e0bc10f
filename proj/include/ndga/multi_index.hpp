#ifndef NDGA_MULTI_INDEX_HPP
#define NDGA_MULTI_INDEX_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ndga {

/// A finite sequence s = (s_1, ..., s_n) of naturals, possibly empty.
/// Positions are 1-based in every accessor, matching the usual notation.
class MultiIndex {
public:
    MultiIndex() = default;
    MultiIndex(std::initializer_list<unsigned> entries) : entries_(entries) {}
    explicit MultiIndex(std::vector<unsigned> entries) : entries_(std::move(entries)) {}

    /// "()" or "(s1,...,sn)"; whitespace tolerated.
    static MultiIndex parse(std::string_view text);

    const std::vector<unsigned>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t length() const { return entries_.size(); }
    unsigned weight() const; // |s|
    unsigned at(std::size_t i) const { return entries_.at(i - 1); }

    /// |s| + l(s)
    unsigned size_plus_length() const { return weight() + static_cast<unsigned>(length()); }

    MultiIndex before(std::size_t i) const; // s_{<i}
    MultiIndex after(std::size_t i) const;  // s_{>i}
    bool delta(std::size_t i) const { return at(i) == 0; }
    bool eta(std::size_t i) const { return at(i) >= 1; }

    MultiIndex plus_unit(std::size_t i) const;  // s + e_i
    MultiIndex minus_unit(std::size_t i) const; // s - e_i, requires s_i >= 1
    MultiIndex prepend_zero() const;            // (0, s)

    bool all_below(unsigned bound) const; // s_i < bound for every i

    std::string str() const;

    /// Length first, then lexicographic.
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<unsigned> entries_;
};

/// E_N = { s : |s| + l(s) <= N } ordered by length, then lexicographically.
std::vector<MultiIndex> enumerate_EN(unsigned N);

} // namespace ndga

#endif // NDGA_MULTI_INDEX_HPP
