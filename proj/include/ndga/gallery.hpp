#ifndef NDGA_GALLERY_HPP
#define NDGA_GALLERY_HPP

#include <map>
#include <string>
#include <vector>

#include "ndga/matrix.hpp"
#include "ndga/ncomplex.hpp"
#include "ndga/ndga.hpp"

namespace ndga::gallery {

/// e1 -> e2 -> e3 in degrees 0, 1, 2; a proper 3-complex.
NComplex build_ej1();

/// v1 -> v2 -> ... -> v_length in degrees 0..length-1, order bound `length`.
/// length >= 1.
NComplex build_chain(unsigned length, const std::string& prefix = "v");

/// V ⊗ V* for V = ej1: basis E11..E33 with deg E_ij = i - j and
/// D(E_ij) = E_{(i+1)j} + (-1)^{i+j} E_{i(j-1)}; a proper 5-complex.
NComplex build_vtensor();

/// End(ej1) with composition, the algebra model of V ⊗ V*.
NDga build_vtensor_algebra();

/// ej1 with the zero product, as a 3-dga.
NDga build_ej1_algebra();

/// Polynomial differential forms on Q^n truncated by weight: x^α dx_I with
/// |α| + |I| <= weight_bound. The quotient by higher weight is a dg ideal, so
/// this is a graded-commutative 2-dga with unit "1".
///
/// Labels: "1", "x1", "x1^2*x2", "dx1", "x2*dx1^dx3".
NDga forms_algebra(unsigned nvars, unsigned weight_bound);

/// Label of x^α dx_I. α has nvars entries; I is strictly increasing and 1-based.
std::string form_label(const std::vector<unsigned>& exponents, const std::vector<unsigned>& dx);

struct ConnectionFixture {
    NDga algebra;       // forms_algebra(nvars, weight_bound)
    Kdgm module;        // the regular module
    Element connection; // A, a 1-form
    GradedMap e;        // ω ↦ A ∧ ω
};

/// The forms model with e_A for a 1-form A given by labels, e.g. {"x2*dx1": 1}.
ConnectionFixture build_connection_fixture(unsigned nvars, unsigned weight_bound,
                                           const std::map<std::string, Scalar>& connection);

/// A = Σ_i (Σ_j a_ij x_j) dx_i as a label map.
std::map<std::string, Scalar> linear_connection(const std::vector<std::vector<Scalar>>& a);

/// The antisymmetric matrix F of dA = Σ_{k<l} F_kl dx_k ∧ dx_l for the linear
/// connection with coefficients a: F_kl = a_lk - a_kl.
Matrix linear_curvature(const std::vector<std::vector<Scalar>>& a);

/// Antisymmetric 2n x 2n matrix with F_12 = F_34 = ... = 1 above the diagonal.
Matrix standard_pairing_matrix(unsigned n);

} // namespace ndga::gallery

#endif // NDGA_GALLERY_HPP
