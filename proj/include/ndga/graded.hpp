#ifndef NDGA_GRADED_HPP
#define NDGA_GRADED_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ndga/matrix.hpp"
#include "ndga/scalar.hpp"

namespace ndga {

/// A finitely supported Z-graded vector space with labelled bases.
///
/// Elements are addressed either locally (degree, index within the degree)
/// or globally: global coordinates list the degrees in increasing order and
/// each degree's basis in the order it was given.
class GradedSpace {
public:
    using Components = std::map<int, std::vector<std::string>>;

    GradedSpace() = default;
    /// Empty degrees are dropped; duplicate labels throw StructuralError.
    explicit GradedSpace(Components components);

    const Components& components() const { return components_; }
    std::vector<int> degrees() const;
    std::size_t dim(int degree) const;
    std::size_t total_dim() const { return labels_.size(); }

    bool contains(const std::string& label) const { return index_.count(label) != 0; }
    int degree_of(const std::string& label) const;
    std::size_t index_of(const std::string& label) const;  // global
    std::size_t offset(int degree) const;                    // first global index of a degree
    const std::string& label(std::size_t global) const { return labels_.at(global); }
    int degree_at(std::size_t global) const { return degree_at_.at(global); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Global vector -> coordinates restricted to one degree.
    Vector restrict(const Vector& global, int degree) const;
    /// Local coordinates in one degree -> global vector.
    Vector embed(const Vector& local, int degree) const;
    Vector basis_vector(const std::string& label) const;

    friend bool operator==(const GradedSpace& a, const GradedSpace& b) { return a.components_ == b.components_; }

private:
    Components components_;
    std::vector<std::string> labels_;
    std::vector<int> degree_at_;
    std::map<int, std::size_t> offsets_;
    std::unordered_map<std::string, std::size_t> index_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

inline SpacePtr make_space(GradedSpace::Components components) {
    return std::make_shared<const GradedSpace>(std::move(components));
}

bool same_space(const SpacePtr& a, const SpacePtr& b);

/// A degree-homogeneous linear map between graded spaces, stored as one
/// dense block per source degree. Absent blocks are zero, and zero blocks are
/// never stored, so structural equality is value equality.
class GradedMap {
public:
    using Entry = std::tuple<std::string, std::string, Scalar>; // (from, to, coefficient)

    GradedMap() = default;
    /// The zero map of the given degree.
    GradedMap(SpacePtr source, SpacePtr target, int degree);

    static GradedMap identity(const SpacePtr& space);
    static GradedMap from_blocks(SpacePtr source, SpacePtr target, int degree, std::map<int, Matrix> blocks);
    /// Builds a map from (from-label, to-label, coefficient) triples. Repeated
    /// pairs accumulate. Throws StructuralError when an entry's degrees do not
    /// differ by `degree`.
    static GradedMap from_entries(SpacePtr source, SpacePtr target, int degree, const std::vector<Entry>& entries);

    int degree() const { return degree_; }
    const SpacePtr& source() const { return source_; }
    const SpacePtr& target() const { return target_; }
    bool is_endomorphism() const { return same_space(source_, target_); }

    const std::map<int, Matrix>& blocks() const { return blocks_; }
    /// Block A^i -> A^{i+degree}; a zero matrix of the right shape when absent.
    Matrix block(int source_degree) const;
    Scalar entry(const std::string& from, const std::string& to) const;

    Vector apply(const Vector& global) const;
    Vector apply(const std::string& label) const { return apply(source_->basis_vector(label)); }

    bool is_zero() const { return blocks_.empty(); }
    /// Nonzero entries as (from, to, coefficient), in global source order.
    std::vector<Entry> entries() const;

    GradedMap& operator+=(const GradedMap& o);
    GradedMap& operator-=(const GradedMap& o);
    GradedMap& operator*=(const Scalar& s);
    friend GradedMap operator+(GradedMap a, const GradedMap& b) { return a += b; }
    friend GradedMap operator-(GradedMap a, const GradedMap& b) { return a -= b; }
    friend GradedMap operator*(GradedMap a, const Scalar& s) { return a *= s; }
    friend GradedMap operator*(const Scalar& s, GradedMap a) { return a *= s; }

    friend bool operator==(const GradedMap& a, const GradedMap& b);

private:
    void check_compatible(const GradedMap& o, const char* op) const;
    void prune();

    SpacePtr source_;
    SpacePtr target_;
    int degree_ = 0;
    std::map<int, Matrix> blocks_;
};

/// f ∘ g. Requires g.target == f.source; degrees add.
GradedMap compose(const GradedMap& f, const GradedMap& g);

/// n-fold composite of an endomorphism; power(f, 0) is the identity.
GradedMap power(const GradedMap& f, unsigned n);

struct LinearReduction {
    std::size_t rank = 0;
    std::vector<Vector> kernel_basis; // local coordinates of source^degree
    std::vector<Vector> image_basis;  // local coordinates of target^{degree + f.degree}
};

/// Rank, kernel and image of the block of f leaving `degree`.
LinearReduction rank_kernel_image(const GradedMap& f, int degree);

/// dim span(amb) - dim span(sub). Throws StructuralError("image not contained
/// in kernel") unless every vector of `sub` lies in span(amb).
std::size_t quotient_dimension(const std::vector<Vector>& sub, const std::vector<Vector>& amb, std::size_t length);

} // namespace ndga

#endif // NDGA_GRADED_HPP
