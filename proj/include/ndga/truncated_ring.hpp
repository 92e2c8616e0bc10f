#ifndef NDGA_TRUNCATED_RING_HPP
#define NDGA_TRUNCATED_RING_HPP

#include <string>
#include <vector>

#include "ndga/graded.hpp"
#include "ndga/scalar.hpp"

namespace ndga {

/// Q[t]/(t^m), m >= 1. Its maximal ideal consists of the elements with zero
/// constant term; for m = 1 the ring is Q and the ideal is {0}.
class TruncatedRing {
public:
    explicit TruncatedRing(unsigned order);

    unsigned order() const { return order_; }

    /// A ⊗ R as a Q-vector space: basis x[t^k] for x in A and 0 <= k < m,
    /// in the degree of x.
    SpacePtr extend(const GradedSpace& space) const;
    static std::string extended_label(const std::string& label, unsigned power);

    friend bool operator==(const TruncatedRing&, const TruncatedRing&) = default;

private:
    unsigned order_;
};

/// Element of Q[t]/(t^m) as its coefficient vector (length m).
class TruncatedPoly {
public:
    explicit TruncatedPoly(TruncatedRing ring) : ring_(ring), coeffs_(ring.order()) {}
    TruncatedPoly(TruncatedRing ring, std::vector<Scalar> coeffs); // extra terms beyond t^{m-1} are dropped

    static TruncatedPoly t(TruncatedRing ring) { return monomial(ring, 1); }
    static TruncatedPoly monomial(TruncatedRing ring, unsigned power, Scalar coeff = 1);

    const TruncatedRing& ring() const { return ring_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& constant_term() const { return coeffs_[0]; }
    bool in_maximal_ideal() const { return coeffs_[0].is_zero(); }
    bool is_zero() const { return ndga::is_zero(coeffs_); }
    std::string str() const;

    TruncatedPoly& operator+=(const TruncatedPoly& o);
    TruncatedPoly& operator-=(const TruncatedPoly& o);
    friend TruncatedPoly operator+(TruncatedPoly a, const TruncatedPoly& b) { return a += b; }
    friend TruncatedPoly operator-(TruncatedPoly a, const TruncatedPoly& b) { return a -= b; }
    friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b);
    friend bool operator==(const TruncatedPoly&, const TruncatedPoly&) = default;

private:
    TruncatedRing ring_;
    std::vector<Scalar> coeffs_;
};

/// An R-linear graded map on A ⊗ R written as Σ_k t^k f_k with each f_k a
/// Q-linear map on A of the same degree.
class TruncatedMap {
public:
    TruncatedMap(TruncatedRing ring, std::vector<GradedMap> coeffs);

    /// The map f ⊗ 1 (constant in t).
    static TruncatedMap constant(TruncatedRing ring, const GradedMap& f);

    const TruncatedRing& ring() const { return ring_; }
    const std::vector<GradedMap>& coeffs() const { return coeffs_; }
    int degree() const { return coeffs_.front().degree(); }

    /// The reduction modulo the maximal ideal.
    const GradedMap& reduction() const { return coeffs_.front(); }
    bool in_maximal_ideal() const { return reduction().is_zero(); }

    /// The same map as a Q-linear map on the extended space A ⊗ R.
    GradedMap realize() const;

    friend TruncatedMap compose(const TruncatedMap& f, const TruncatedMap& g);
    TruncatedMap& operator+=(const TruncatedMap& o);
    friend TruncatedMap operator+(TruncatedMap a, const TruncatedMap& b) { return a += b; }
    friend bool operator==(const TruncatedMap&, const TruncatedMap&) = default;

private:
    TruncatedRing ring_;
    std::vector<GradedMap> coeffs_;
};

/// Reduce an R-linear map given on the extended space back to A: the t^0
/// component of the image of x[t^0]. Throws StructuralError if `realized` is
/// not a map on ring.extend(base).
GradedMap reduce_mod_maximal_ideal(const GradedMap& realized, const SpacePtr& base, const TruncatedRing& ring);

} // namespace ndga

#endif // NDGA_TRUNCATED_RING_HPP
