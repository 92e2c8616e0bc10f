#include "ndga/multi_index.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ndga/errors.hpp"

namespace ndga {

MultiIndex MultiIndex::parse(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.size() < 2 || compact.front() != '(' || compact.back() != ')') {
        throw ParseError("", "multi-index must look like (s1,...,sn), got \"" + std::string(text) + "\"");
    }
    std::vector<unsigned> entries;
    const std::string body = compact.substr(1, compact.size() - 2);
    if (body.empty()) return MultiIndex();
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.size() > 6 ||
            !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
            throw ParseError("", "invalid multi-index entry \"" + item + "\" in \"" + std::string(text) + "\"");
        }
        entries.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    if (body.back() == ',') throw ParseError("", "trailing comma in \"" + std::string(text) + "\"");
    return MultiIndex(std::move(entries));
}

unsigned MultiIndex::weight() const { return std::accumulate(entries_.begin(), entries_.end(), 0U); }

MultiIndex MultiIndex::before(std::size_t i) const {
    if (i <= 1) return {};
    return MultiIndex(std::vector<unsigned>(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(std::min(i - 1, length()))));
}

MultiIndex MultiIndex::after(std::size_t i) const {
    if (i >= length()) return {};
    return MultiIndex(std::vector<unsigned>(entries_.begin() + static_cast<std::ptrdiff_t>(i), entries_.end()));
}

MultiIndex MultiIndex::plus_unit(std::size_t i) const {
    MultiIndex out = *this;
    ++out.entries_.at(i - 1);
    return out;
}

MultiIndex MultiIndex::minus_unit(std::size_t i) const {
    if (at(i) == 0) throw ArgumentError("s - e_i needs s_i >= 1");
    MultiIndex out = *this;
    --out.entries_.at(i - 1);
    return out;
}

MultiIndex MultiIndex::prepend_zero() const {
    MultiIndex out;
    out.entries_.reserve(length() + 1);
    out.entries_.push_back(0);
    out.entries_.insert(out.entries_.end(), entries_.begin(), entries_.end());
    return out;
}

bool MultiIndex::all_below(unsigned bound) const {
    return std::all_of(entries_.begin(), entries_.end(), [bound](unsigned v) { return v < bound; });
}

std::string MultiIndex::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out + ")";
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return a.entries_ <=> b.entries_;
}

namespace {

void extend(std::vector<unsigned>& prefix, std::size_t remaining_slots, unsigned budget, std::vector<MultiIndex>& out) {
    if (remaining_slots == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (unsigned v = 0; v <= budget; ++v) {
        prefix.push_back(v);
        extend(prefix, remaining_slots - 1, budget - v, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<MultiIndex> enumerate_EN(unsigned N) {
    std::vector<MultiIndex> out;
    for (unsigned len = 0; len <= N; ++len) {
        std::vector<unsigned> prefix;
        extend(prefix, len, N - len, out);
    }
    return out;
}

} // namespace ndga
