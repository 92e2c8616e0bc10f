#ifndef NDGA_NCOMPLEX_HPP
#define NDGA_NCOMPLEX_HPP

#include <optional>
#include <string>
#include <vector>

#include "ndga/graded.hpp"

namespace ndga {

/// Basis labels x with d^N(x) != 0, in global order. Empty iff d^N = 0.
std::vector<std::string> nilpotency_violations(const GradedMap& d, unsigned N);

/// A graded space with a degree-1 endomorphism d and d^N = 0, checked on
/// construction.
class NComplex {
public:
    NComplex(GradedMap d, unsigned order_bound);

    const GradedMap& d() const { return d_; }
    const SpacePtr& space() const { return d_.source(); }
    unsigned order_bound() const { return order_bound_; }

    /// d^{N-1} != 0
    bool is_proper() const;

private:
    GradedMap d_;
    unsigned order_bound_;
};

/// Smallest N <= bound with d^N = 0, or nullopt when d^bound != 0.
std::optional<unsigned> nilpotency_order(const GradedMap& d, unsigned bound);

struct Cohomology {
    unsigned p = 0;
    int degree = 0;
    std::size_t dimension = 0;
    /// Local coordinates in A^degree of p-closed elements whose classes form
    /// a basis of the quotient.
    std::vector<Vector> representatives;
};

/// ker(d^p : A^i -> A^{i+p}) / im(d^{N-p} : A^{i-N+p} -> A^i) for 1 <= p < N.
/// For p >= N the group is zero by convention; p = 0 is an ArgumentError.
Cohomology cohomology(const NComplex& complex, unsigned p, int degree);

/// d_B ∘ f == f ∘ d_A
bool check_morphism(const GradedMap& f, const NComplex& A, const NComplex& B);

/// Basis of all morphisms A -> B of the given degree (solutions of
/// d_B f = f d_A), in the deterministic unknown order used by homotopy_witness.
std::vector<GradedMap> morphism_space(const NComplex& A, const NComplex& B, int degree);

/// An h with f - g = Σ_{i=0}^{N-1} d_B^{N-1-i} h d_A^i, where N is the larger of
/// the two order bounds and deg h = deg f - (N - 1). Returns the solution with
/// all free unknowns zero (unknowns ordered by source label, then target
/// label) or nullopt when no h exists.
std::optional<GradedMap> homotopy_witness(const GradedMap& f, const GradedMap& g, const NComplex& A, const NComplex& B);

/// Σ_{i=0}^{N-1} d_B^{N-1-i} h d_A^i
GradedMap homotopy_operator(const GradedMap& h, const NComplex& A, const NComplex& B);

/// True iff f and g send every representative of pH^i(A) to the same class
/// in pH^{i+deg f}(B): (f - g)(z) must be (N-p)-exact for each p-closed z.
bool induce_same_cohomology_map(const GradedMap& f, const GradedMap& g, const NComplex& A, const NComplex& B,
                                unsigned p, int degree);

/// Graded tensor product of two graded spaces, labels "a*b", deg = deg a + deg b.
/// Pairs are listed with the left factor's global order outermost.
SpacePtr tensor_space(const GradedSpace& A, const GradedSpace& B);
std::string tensor_label(const std::string& a, const std::string& b);

/// f ⊗ g with the Koszul rule (f⊗g)(a⊗b) = (-1)^{deg g · deg a} f(a) ⊗ g(b).
GradedMap tensor_maps(const GradedMap& f, const GradedMap& g);

/// d(a⊗b) = d_A a ⊗ b + (-1)^{deg a} a ⊗ d_B b, with order bound M + N - 1.
NComplex tensor_complex(const NComplex& A, const NComplex& B);

} // namespace ndga

#endif // NDGA_NCOMPLEX_HPP
