#ifndef NDGA_NDGA_HPP
#define NDGA_NDGA_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ndga/graded.hpp"
#include "ndga/ncomplex.hpp"

namespace ndga {

/// An element is a vector in global coordinates of its space.
using Element = Vector;
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

Element element_from_labels(const GradedSpace& space, const std::map<std::string, Scalar>& coeffs);
std::map<std::string, Scalar> element_labels(const GradedSpace& space, const Element& x);

/// Degree of a homogeneous element; nullopt for zero. Throws ArgumentError
/// when x has components in more than one degree.
std::optional<int> homogeneous_degree(const GradedSpace& space, const Element& x);

/// Bilinear map (left basis, right basis) -> sparse combination, stored as a
/// dense table of sparse vectors.
class BilinearTable {
public:
    BilinearTable() = default;
    BilinearTable(std::size_t left_dim, std::size_t right_dim) : right_dim_(right_dim), cells_(left_dim * right_dim) {}

    const SparseVec& at(std::size_t i, std::size_t j) const { return cells_[i * right_dim_ + j]; }
    void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

    /// Σ x_i y_j table(i, j), result of length out_dim.
    Vector apply(const Vector& x, const Vector& y, std::size_t out_dim) const;

    friend bool operator==(const BilinearTable&, const BilinearTable&) = default;

private:
    std::size_t right_dim_ = 0;
    std::vector<SparseVec> cells_;
};

/// A graded algebra given by structure constants, with a degree-1 map d
/// and a nilpotency bound N. Nothing is verified on construction beyond
/// shapes; verify_ndga reports the axioms.
class NDga {
public:
    using ProductSpec = std::map<std::pair<std::string, std::string>, std::map<std::string, Scalar>>;

    NDga(GradedMap d, unsigned order_bound, BilinearTable product, std::optional<std::string> unit = std::nullopt);
    NDga(GradedMap d, unsigned order_bound, const ProductSpec& product, std::optional<std::string> unit = std::nullopt);

    /// The same space and differential with the zero product.
    static NDga with_zero_product(const NComplex& complex);

    const SpacePtr& space() const { return d_.source(); }
    const GradedMap& d() const { return d_; }
    unsigned order_bound() const { return order_bound_; }
    const BilinearTable& product() const { return product_; }
    const std::optional<std::string>& unit() const { return unit_; }

    /// The underlying complex; throws StructuralError if d^N != 0.
    NComplex complex() const { return NComplex(d_, order_bound_); }

    Element multiply(const Element& a, const Element& b) const;
    Element basis(const std::string& label) const { return space()->basis_vector(label); }
    Element apply_d(const Element& a, unsigned times = 1) const;

    ProductSpec product_spec() const;

private:
    GradedMap d_;
    unsigned order_bound_;
    BilinearTable product_;
    std::optional<std::string> unit_;
};

struct Violation {
    std::string axiom;               // "degree", "associativity", "leibniz", "nilpotency", "unit", ...
    std::vector<std::string> labels; // offending basis tuple
    std::string detail;
};

struct AxiomReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

/// Checks degree additivity, associativity on basis triples, the graded
/// Leibniz rule on basis pairs, d^N = 0 and the unit, if any.
AxiomReport verify_ndga(const NDga& A);

/// The coefficient {n, j} in d^n(ab) = Σ_j {n, j} d^j(a) d^{n-j}(b), where
/// parity = deg a mod 2. Zero for j > n.
Scalar graded_binomial(unsigned n, unsigned j, unsigned parity);

/// Compares d^n(ab) with Σ_i {n,i} d^i(a) d^{n-i}(b). a and b must be
/// homogeneous (ArgumentError otherwise).
bool leibniz_power_check(const NDga& A, const Element& a, const Element& b, unsigned n);

/// Minimal p >= 1 with d^p(a) = 0, bounded by the order bound (returns
/// N + 1 if d^N(a) != 0, which only happens for an invalid algebra).
unsigned closedness_order(const NDga& A, const Element& a);

/// (a⊗b)(a'⊗b') = (-1)^{deg b · deg a'} (aa')⊗(bb'); differential as in
/// tensor_complex; order bound M + N - 1.
NDga tensor_dga(const NDga& A, const NDga& B);

/// Label of the elementary map sending basis vector `from` to `to`.
std::string end_label(const std::string& to, const std::string& from);

/// End(M) with basis the elementary maps, composition as product and
/// d_End(f) = d∘f - (-1)^{deg f} f∘d; order bound 2N - 1.
NDga end_algebra(const NComplex& M);

/// d_End applied to an arbitrary graded endomorphism f of d's space.
GradedMap d_end(const GradedMap& d, const GradedMap& f);

/// The endomorphism represented by an element of end_algebra(M).
GradedMap end_element_to_map(const NComplex& M, const GradedSpace& end_space, const Element& f);
Element map_to_end_element(const GradedSpace& end_space, const GradedMap& f);

/// A graded module over an N-dga with its own differential and bound K.
class Kdgm {
public:
    using ActionSpec = std::map<std::pair<std::string, std::string>, std::map<std::string, Scalar>>;

    Kdgm(NDga algebra, GradedMap d_module, unsigned order_bound, BilinearTable action);
    Kdgm(NDga algebra, GradedMap d_module, unsigned order_bound, const ActionSpec& action);

    const NDga& algebra() const { return algebra_; }
    const SpacePtr& space() const { return d_.source(); }
    const GradedMap& d() const { return d_; }
    unsigned order_bound() const { return order_bound_; }
    const BilinearTable& action() const { return action_; }

    Element act(const Element& a, const Element& m) const;
    ActionSpec action_spec() const;

private:
    NDga algebra_;
    GradedMap d_;
    unsigned order_bound_;
    BilinearTable action_;
};

/// Action degree, a(bm) = (ab)m, d_M(am) = d_A(a)m + (-1)^{deg a} a d_M(m),
/// d_M^K = 0.
AxiomReport verify_kdgm(const Kdgm& M);

/// A as a module over itself by left multiplication.
Kdgm regular_module(const NDga& A);

/// M as a module over End(M) by evaluation.
Kdgm evaluation_module(const NComplex& M);

} // namespace ndga

#endif // NDGA_NDGA_HPP
