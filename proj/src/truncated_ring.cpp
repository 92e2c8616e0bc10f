#include "ndga/truncated_ring.hpp"

#include <sstream>

#include "ndga/errors.hpp"

namespace ndga {

TruncatedRing::TruncatedRing(unsigned order) : order_(order) {
    if (order == 0) throw ArgumentError("truncation order must be at least 1");
}

std::string TruncatedRing::extended_label(const std::string& label, unsigned power) {
    return label + "[t^" + std::to_string(power) + "]";
}

SpacePtr TruncatedRing::extend(const GradedSpace& space) const {
    GradedSpace::Components out;
    for (const auto& [degree, basis] : space.components()) {
        auto& target = out[degree];
        for (unsigned k = 0; k < order_; ++k)
            for (const auto& label : basis) target.push_back(extended_label(label, k));
    }
    return make_space(std::move(out));
}

TruncatedPoly::TruncatedPoly(TruncatedRing ring, std::vector<Scalar> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
    coeffs_.resize(ring.order());
}

TruncatedPoly TruncatedPoly::monomial(TruncatedRing ring, unsigned power, Scalar coeff) {
    TruncatedPoly p(ring);
    if (power < ring.order()) p.coeffs_[power] = std::move(coeff);
    return p;
}

std::string TruncatedPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[k];
        if (k > 0) os << "*t^" << k;
    }
    return first ? "0" : os.str();
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& o) {
    if (!(ring_ == o.ring_)) throw StructuralError("truncated ring mismatch");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

TruncatedPoly& TruncatedPoly::operator-=(const TruncatedPoly& o) {
    if (!(ring_ == o.ring_)) throw StructuralError("truncated ring mismatch");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
    if (!(a.ring_ == b.ring_)) throw StructuralError("truncated ring mismatch");
    TruncatedPoly out(a.ring_);
    const std::size_t m = a.coeffs_.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < m; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

TruncatedMap::TruncatedMap(TruncatedRing ring, std::vector<GradedMap> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw ArgumentError("truncated map needs at least the constant coefficient");
    if (coeffs_.size() > ring_.order()) coeffs_.resize(ring_.order());
    const GradedMap first = coeffs_.front(); // copied: emplace_back below may reallocate
    while (coeffs_.size() < ring_.order()) coeffs_.emplace_back(first.source(), first.target(), first.degree());
    for (const auto& c : coeffs_) {
        if (c.degree() != first.degree() || !same_space(c.source(), first.source()) ||
            !same_space(c.target(), first.target())) {
            throw StructuralError("coefficients of a truncated map must share degree and spaces");
        }
    }
}

TruncatedMap TruncatedMap::constant(TruncatedRing ring, const GradedMap& f) { return TruncatedMap(ring, {f}); }

GradedMap TruncatedMap::realize() const {
    const SpacePtr source = ring_.extend(*coeffs_.front().source());
    const SpacePtr target = ring_.extend(*coeffs_.front().target());
    std::vector<GradedMap::Entry> entries;
    for (unsigned j = 0; j < coeffs_.size(); ++j) {
        for (const auto& [from, to, c] : coeffs_[j].entries()) {
            for (unsigned k = 0; j + k < ring_.order(); ++k) {
                entries.emplace_back(TruncatedRing::extended_label(from, k), TruncatedRing::extended_label(to, j + k), c);
            }
        }
    }
    return GradedMap::from_entries(source, target, degree(), entries);
}

TruncatedMap compose(const TruncatedMap& f, const TruncatedMap& g) {
    if (!(f.ring_ == g.ring_)) throw StructuralError("truncated ring mismatch");
    const unsigned m = f.ring_.order();
    std::vector<GradedMap> out;
    for (unsigned k = 0; k < m; ++k) {
        GradedMap sum(g.coeffs_[0].source(), f.coeffs_[0].target(), f.degree() + g.degree());
        for (unsigned i = 0; i <= k; ++i) sum += compose(f.coeffs_[i], g.coeffs_[k - i]);
        out.push_back(std::move(sum));
    }
    return TruncatedMap(f.ring_, std::move(out));
}

TruncatedMap& TruncatedMap::operator+=(const TruncatedMap& o) {
    if (!(ring_ == o.ring_)) throw StructuralError("truncated ring mismatch");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

GradedMap reduce_mod_maximal_ideal(const GradedMap& realized, const SpacePtr& base, const TruncatedRing& ring) {
    if (!same_space(realized.source(), ring.extend(*base)) || !same_space(realized.target(), ring.extend(*base))) {
        throw StructuralError("map is not defined on the extended space");
    }
    std::vector<GradedMap::Entry> entries;
    for (const auto& x : base->labels()) {
        const std::string from = TruncatedRing::extended_label(x, 0);
        for (const auto& y : base->labels()) {
            Scalar c = realized.entry(from, TruncatedRing::extended_label(y, 0));
            if (!c.is_zero()) entries.emplace_back(x, y, std::move(c));
        }
    }
    return GradedMap::from_entries(base, base, realized.degree(), entries);
}

} // namespace ndga
