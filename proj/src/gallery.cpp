#include "ndga/gallery.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ndga/errors.hpp"
#include "ndga/mc.hpp"

namespace ndga::gallery {

NComplex build_chain(unsigned length, const std::string& prefix) {
    if (length == 0) throw ArgumentError("chain length must be at least 1");
    GradedSpace::Components components;
    for (unsigned k = 0; k < length; ++k) components[static_cast<int>(k)] = {prefix + std::to_string(k + 1)};
    auto space = make_space(std::move(components));
    std::vector<GradedMap::Entry> entries;
    for (unsigned k = 1; k < length; ++k)
        entries.emplace_back(prefix + std::to_string(k), prefix + std::to_string(k + 1), Scalar(1));
    return NComplex(GradedMap::from_entries(space, space, 1, entries), length);
}

NComplex build_ej1() { return build_chain(3, "e"); }

NComplex build_vtensor() {
    auto label = [](int i, int j) { return "E" + std::to_string(i) + std::to_string(j); };
    GradedSpace::Components components;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) components[i - j].push_back(label(i, j));
    auto space = make_space(std::move(components));
    std::vector<GradedMap::Entry> entries;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i + 1 <= 3) entries.emplace_back(label(i, j), label(i + 1, j), Scalar(1));
            if (j - 1 >= 1) entries.emplace_back(label(i, j), label(i, j - 1), Scalar::sign_power(i + j));
        }
    return NComplex(GradedMap::from_entries(space, space, 1, entries), 5);
}

NDga build_vtensor_algebra() { return end_algebra(build_ej1()); }

NDga build_ej1_algebra() { return NDga::with_zero_product(build_ej1()); }

std::string form_label(const std::vector<unsigned>& exponents, const std::vector<unsigned>& dx) {
    std::string poly;
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        if (exponents[k] == 0) continue;
        if (!poly.empty()) poly += "*";
        poly += "x" + std::to_string(k + 1);
        if (exponents[k] > 1) poly += "^" + std::to_string(exponents[k]);
    }
    std::string form;
    for (std::size_t k = 0; k < dx.size(); ++k) form += (k ? "^dx" : "dx") + std::to_string(dx[k]);
    if (poly.empty() && form.empty()) return "1";
    if (poly.empty()) return form;
    if (form.empty()) return poly;
    return poly + "*" + form;
}

namespace {

struct FormMonomial {
    std::vector<unsigned> exponents;
    std::vector<unsigned> dx; // increasing, 1-based
};

unsigned weight(const FormMonomial& f) {
    return std::accumulate(f.exponents.begin(), f.exponents.end(), 0U) + static_cast<unsigned>(f.dx.size());
}

void exponent_vectors(unsigned nvars, unsigned max_total, std::vector<unsigned>& current,
                      std::vector<std::vector<unsigned>>& out) {
    if (current.size() == nvars) {
        out.push_back(current);
        return;
    }
    const unsigned used = std::accumulate(current.begin(), current.end(), 0U);
    for (unsigned e = 0; used + e <= max_total; ++e) {
        current.push_back(e);
        exponent_vectors(nvars, max_total, current, out);
        current.pop_back();
    }
}

std::vector<FormMonomial> form_basis(unsigned nvars, unsigned weight_bound) {
    std::vector<FormMonomial> out;
    for (unsigned mask = 0; mask < (1U << nvars); ++mask) {
        std::vector<unsigned> dx;
        for (unsigned k = 0; k < nvars; ++k)
            if (mask & (1U << k)) dx.push_back(k + 1);
        if (dx.size() > weight_bound) continue;
        std::vector<std::vector<unsigned>> exps;
        std::vector<unsigned> current;
        exponent_vectors(nvars, weight_bound - static_cast<unsigned>(dx.size()), current, exps);
        for (auto& e : exps) out.push_back({std::move(e), dx});
    }
    // degree, then weight, then label text
    std::sort(out.begin(), out.end(), [](const FormMonomial& x, const FormMonomial& y) {
        if (x.dx.size() != y.dx.size()) return x.dx.size() < y.dx.size();
        if (weight(x) != weight(y)) return weight(x) < weight(y);
        return form_label(x.exponents, x.dx) < form_label(y.exponents, y.dx);
    });
    return out;
}

// dx_I ∧ dx_J = sign · dx_{I∪J}; sign 0 when I and J meet.
int wedge_sign(const std::vector<unsigned>& I, const std::vector<unsigned>& J, std::vector<unsigned>& merged) {
    unsigned inversions = 0;
    for (unsigned i : I)
        for (unsigned j : J) {
            if (i == j) return 0;
            if (i > j) ++inversions;
        }
    merged = I;
    merged.insert(merged.end(), J.begin(), J.end());
    std::sort(merged.begin(), merged.end());
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

NDga forms_algebra(unsigned nvars, unsigned weight_bound) {
    if (nvars == 0 || nvars > 6) throw ArgumentError("forms model supports 1 to 6 variables");
    const auto basis = form_basis(nvars, weight_bound);
    GradedSpace::Components components;
    for (const auto& f : basis) components[static_cast<int>(f.dx.size())].push_back(form_label(f.exponents, f.dx));
    auto space = make_space(std::move(components));

    std::vector<GradedMap::Entry> d_entries;
    for (const auto& f : basis) {
        for (unsigned k = 0; k < nvars; ++k) {
            if (f.exponents[k] == 0) continue;
            std::vector<unsigned> merged;
            const int sign = wedge_sign({k + 1}, f.dx, merged);
            if (sign == 0) continue;
            auto exps = f.exponents;
            exps[k] -= 1;
            d_entries.emplace_back(form_label(f.exponents, f.dx), form_label(exps, merged),
                                   Scalar(static_cast<long>(f.exponents[k]) * sign));
        }
    }
    GradedMap d = GradedMap::from_entries(space, space, 1, d_entries);

    BilinearTable product(space->total_dim(), space->total_dim());
    for (const auto& f : basis)
        for (const auto& g : basis) {
            if (weight(f) + weight(g) > weight_bound) continue;
            std::vector<unsigned> merged;
            const int sign = wedge_sign(f.dx, g.dx, merged);
            if (sign == 0) continue;
            std::vector<unsigned> exps(nvars);
            for (unsigned k = 0; k < nvars; ++k) exps[k] = f.exponents[k] + g.exponents[k];
            product.add(space->index_of(form_label(f.exponents, f.dx)), space->index_of(form_label(g.exponents, g.dx)),
                        space->index_of(form_label(exps, merged)), sign);
        }
    return NDga(std::move(d), 2, std::move(product), "1");
}

ConnectionFixture build_connection_fixture(unsigned nvars, unsigned weight_bound,
                                           const std::map<std::string, Scalar>& connection) {
    NDga algebra = forms_algebra(nvars, weight_bound);
    Element A = element_from_labels(*algebra.space(), connection);
    const auto degree = homogeneous_degree(*algebra.space(), A);
    if (degree && *degree != 1) throw ArgumentError("connection must be a 1-form");
    GradedMap e = degree ? left_multiplication(algebra, A) : GradedMap(algebra.space(), algebra.space(), 1);
    Kdgm module = regular_module(algebra);
    return {std::move(algebra), std::move(module), std::move(A), std::move(e)};
}

std::map<std::string, Scalar> linear_connection(const std::vector<std::vector<Scalar>>& a) {
    const unsigned n = static_cast<unsigned>(a.size());
    std::map<std::string, Scalar> out;
    for (unsigned i = 0; i < n; ++i) {
        if (a[i].size() != n) throw ArgumentError("connection coefficients must form a square matrix");
        for (unsigned j = 0; j < n; ++j) {
            if (a[i][j].is_zero()) continue;
            std::vector<unsigned> exps(n);
            exps[j] = 1;
            out[form_label(exps, {i + 1})] += a[i][j];
        }
    }
    return out;
}

Matrix linear_curvature(const std::vector<std::vector<Scalar>>& a) {
    const std::size_t n = a.size();
    Matrix F(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) F(k, l) = a[l][k] - a[k][l];
    return F;
}

Matrix standard_pairing_matrix(unsigned n) {
    Matrix F(2 * n, 2 * n);
    for (unsigned k = 0; k < n; ++k) {
        F(2 * k, 2 * k + 1) = 1;
        F(2 * k + 1, 2 * k) = -1;
    }
    return F;
}

} // namespace ndga::gallery
