#ifndef NDGA_MC_HPP
#define NDGA_MC_HPP

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "ndga/graded.hpp"
#include "ndga/matrix.hpp"
#include "ndga/multi_index.hpp"
#include "ndga/ndga.hpp"
#include "ndga/truncated_ring.hpp"

namespace ndga {

/// Memo table for c(s, N). Lookups take a shared lock; inserts are
/// idempotent, so concurrent evaluations of the same key agree.
class CoefficientTable {
public:
    /// c(s, N) from
    ///   c(s, N+1) = δ_1(s) c(s_{>1}, N) + (-1)^{|s|+l(s)} c(s, N)
    ///             + Σ_i η_i(s) (-1)^{|s_{<i}|+i-1} c(s - e_i, N),
    /// with c(∅, 1) = c((0), 1) = 1 and c(s, N) = 0 outside E_N.
    Scalar get(const MultiIndex& s, unsigned N);

    std::size_t size() const;

private:
    std::optional<Scalar> lookup(const MultiIndex& s, unsigned N) const;

    mutable std::shared_mutex mutex_;
    std::map<std::pair<MultiIndex, unsigned>, Scalar> memo_;
};

/// c(s, N) through a process-wide table.
Scalar c_coeff(const MultiIndex& s, unsigned N);

/// e^{(l)} = d_End^l(e), with d_End(f) = d∘f - (-1)^{deg f} f∘d.
GradedMap e_derivative(const GradedMap& e, unsigned l, const GradedMap& d);

/// e^{(s)} = e^{(s_1)} ∘ ... ∘ e^{(s_n)}; e^{∅} is the identity.
GradedMap apply_e_power(const GradedMap& e, const MultiIndex& s, const GradedMap& d);

struct MCTerm {
    MultiIndex s;
    Scalar coefficient;
    unsigned d_power = 0; // N(s) = N - |s| - l(s)
};

struct MCExpansion {
    unsigned N = 0;
    std::vector<MCTerm> terms; // nonzero coefficients, in E_N order
    GradedMap op;              // Σ c(s,N) e^{(s)} ∘ d^{N(s)}
};

/// Terms of (d + e)^N = Σ_{s ∈ E_N} c(s,N) e^{(s)} d^{N(s)}, optionally
/// restricted to s with every s_i < M.
MCExpansion dN_expansion(const GradedMap& d, const GradedMap& e, unsigned N, std::optional<unsigned> M_filter = std::nullopt);

/// Coefficient terms only (no operator), for listings.
std::vector<MCTerm> mc_terms(unsigned N, std::optional<unsigned> M_filter = std::nullopt);

/// Σ_{s ∈ E_N, s_i < M} c(s,N) e^{(s)} d^{N(s)}. Throws PreconditionError if
/// d^M != 0 or N < M.
GradedMap mc_residual(const GradedMap& d, const GradedMap& e, unsigned M, unsigned N);

/// (d_End(e) + e^2)^{(N-1)/2} ∘ (d + e) for odd N, (d_End(e) + e^2)^{N/2} for
/// even N. Throws PreconditionError unless d^2 = 0.
GradedMap mc_closed_form_2N(const GradedMap& d, const GradedMap& e, unsigned N);

/// e_a(b) = ab - (-1)^{deg b} ba for a of degree 1.
GradedMap inner_derivation(const NDga& A, const Element& a);

/// b ↦ xb - (-1)^{deg x · deg b} bx for homogeneous x.
GradedMap graded_commutator(const NDga& A, const Element& x);

/// b ↦ xb
GradedMap left_multiplication(const NDga& A, const Element& x);

/// Labels (b, c) where e(bc) != e(b)c + (-1)^{deg e · deg b} b e(c).
std::vector<std::pair<std::string, std::string>> derivation_violations(const NDga& A, const GradedMap& e);

/// A ⊗ Q[t]/(t^m) with differential d + e.
struct Deformation {
    TruncatedRing ring;
    SpacePtr base_space;
    SpacePtr space;          // A ⊗ R as a Q-space
    GradedMap d;             // d ⊗ 1 on A ⊗ R
    GradedMap e;             // the perturbation, realized on A ⊗ R
    GradedMap differential;  // d + e
    std::optional<unsigned> realized_order;
    std::optional<BilinearTable> product; // R-bilinear extension, when deforming an algebra
};

/// Builds the deformation of (A, d) by e. e must reduce to zero modulo the
/// maximal ideal (StructuralError otherwise), and the reduction of d + e is
/// checked against d. The realized nilpotency order is searched up to
/// order_search_bound.
Deformation deform(const GradedMap& d, const TruncatedMap& e, unsigned order_search_bound = 16);
Deformation deform(const NDga& A, const TruncatedMap& e, unsigned order_search_bound = 16);

/// An ordered pairing {(a_i, b_i)} of {1..2n}: a_1 < a_2 < ... and a_i < b_i.
using Pairing = std::vector<std::pair<unsigned, unsigned>>;
std::vector<Pairing> enumerate_pairings(unsigned two_n);

/// Sign of the permutation (a_1, b_1, ..., a_n, b_n).
int pairing_sign(const Pairing& p);

/// Σ_α sign(α) Π F_{a_i b_i}. F must be square, antisymmetric and of even size.
Scalar pairing_sum(const Matrix& F);

} // namespace ndga

#endif // NDGA_MC_HPP
