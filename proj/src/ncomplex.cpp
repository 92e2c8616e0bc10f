#include "ndga/ncomplex.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "ndga/errors.hpp"

namespace ndga {

namespace {

// Coordinates of the space of degree-k maps source -> target: one slot per
// (from, to) basis pair whose degrees differ by k, ordered by (from label,
// to label) lexicographically.
class MapCoordinates {
public:
    MapCoordinates(SpacePtr source, SpacePtr target, int degree)
        : source_(std::move(source)), target_(std::move(target)), degree_(degree) {
        for (const auto& from : source_->labels()) {
            const int to_degree = source_->degree_of(from) + degree;
            auto it = target_->components().find(to_degree);
            if (it == target_->components().end()) continue;
            for (const auto& to : it->second) slots_.emplace_back(from, to);
        }
        std::sort(slots_.begin(), slots_.end());
        for (std::size_t i = 0; i < slots_.size(); ++i) index_.emplace(slots_[i], i);
    }

    std::size_t size() const { return slots_.size(); }

    GradedMap elementary(std::size_t slot) const {
        return GradedMap::from_entries(source_, target_, degree_, {{slots_[slot].first, slots_[slot].second, 1}});
    }

    GradedMap assemble(const Vector& x) const {
        std::vector<GradedMap::Entry> entries;
        for (std::size_t i = 0; i < slots_.size(); ++i)
            if (!x[i].is_zero()) entries.emplace_back(slots_[i].first, slots_[i].second, x[i]);
        return GradedMap::from_entries(source_, target_, degree_, entries);
    }

    Vector flatten(const GradedMap& f) const {
        Vector v(slots_.size());
        for (const auto& [from, to, c] : f.entries()) v[index_.at({from, to})] = c;
        return v;
    }

private:
    SpacePtr source_;
    SpacePtr target_;
    int degree_;
    std::vector<std::pair<std::string, std::string>> slots_;
    std::map<std::pair<std::string, std::string>, std::size_t> index_;
};

} // namespace

std::vector<std::string> nilpotency_violations(const GradedMap& d, unsigned N) {
    const GradedMap dn = power(d, N);
    std::vector<std::string> out;
    for (const auto& label : d.source()->labels()) {
        if (!is_zero(dn.apply(label))) out.push_back(label);
    }
    return out;
}

NComplex::NComplex(GradedMap d, unsigned order_bound) : d_(std::move(d)), order_bound_(order_bound) {
    if (order_bound_ == 0) throw ArgumentError("order bound N must be at least 1");
    if (!d_.is_endomorphism()) throw StructuralError("differential must be an endomorphism");
    if (d_.degree() != 1) throw StructuralError("differential must have degree 1, got " + std::to_string(d_.degree()));
    const auto bad = nilpotency_violations(d_, order_bound_);
    if (!bad.empty()) {
        std::ostringstream msg;
        msg << "d^" << order_bound_ << " != 0 on";
        for (const auto& label : bad) msg << ' ' << label;
        throw StructuralError(msg.str());
    }
}

bool NComplex::is_proper() const { return !power(d_, order_bound_ - 1).is_zero(); }

std::optional<unsigned> nilpotency_order(const GradedMap& d, unsigned bound) {
    GradedMap p = GradedMap::identity(d.source());
    for (unsigned n = 1; n <= bound; ++n) {
        p = compose(d, p);
        if (p.is_zero()) return n;
    }
    return std::nullopt;
}

Cohomology cohomology(const NComplex& complex, unsigned p, int degree) {
    if (p == 0) throw ArgumentError("cohomology index p must be at least 1");
    Cohomology out;
    out.p = p;
    out.degree = degree;
    const unsigned N = complex.order_bound();
    const std::size_t n = complex.space()->dim(degree);
    if (p >= N || n == 0) return out;

    const auto closed = rank_kernel_image(power(complex.d(), p), degree).kernel_basis;
    const int from = degree - static_cast<int>(N - p);
    const auto exact = rank_kernel_image(power(complex.d(), N - p), from).image_basis;
    out.dimension = quotient_dimension(exact, closed, n);

    std::vector<Vector> spanned = exact;
    std::size_t current = span_rank(spanned, n);
    for (const auto& z : closed) {
        if (out.representatives.size() == out.dimension) break;
        spanned.push_back(z);
        const std::size_t r = span_rank(spanned, n);
        if (r > current) {
            current = r;
            out.representatives.push_back(z);
        } else {
            spanned.pop_back();
        }
    }
    return out;
}

bool check_morphism(const GradedMap& f, const NComplex& A, const NComplex& B) {
    if (!same_space(f.source(), A.space()) || !same_space(f.target(), B.space())) return false;
    return compose(B.d(), f) == compose(f, A.d());
}

std::vector<GradedMap> morphism_space(const NComplex& A, const NComplex& B, int degree) {
    const MapCoordinates unknowns(A.space(), B.space(), degree);
    const MapCoordinates values(A.space(), B.space(), degree + 1);
    std::vector<Vector> columns;
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
        const GradedMap e = unknowns.elementary(k);
        columns.push_back(values.flatten(compose(B.d(), e) - compose(e, A.d())));
    }
    std::vector<GradedMap> out;
    if (unknowns.size() == 0) return out;
    for (const auto& x : kernel_basis(Matrix::from_columns(values.size(), columns))) out.push_back(unknowns.assemble(x));
    return out;
}

GradedMap homotopy_operator(const GradedMap& h, const NComplex& A, const NComplex& B) {
    const unsigned N = std::max(A.order_bound(), B.order_bound());
    GradedMap sum(A.space(), B.space(), h.degree() + static_cast<int>(N) - 1);
    for (unsigned i = 0; i < N; ++i) sum += compose(power(B.d(), N - 1 - i), compose(h, power(A.d(), i)));
    return sum;
}

std::optional<GradedMap> homotopy_witness(const GradedMap& f, const GradedMap& g, const NComplex& A, const NComplex& B) {
    if (f.degree() != g.degree()) throw ArgumentError("homotopic maps must have the same degree");
    for (const auto* m : {&f, &g}) {
        if (!same_space(m->source(), A.space()) || !same_space(m->target(), B.space())) {
            throw StructuralError("homotopy candidates must map A to B");
        }
    }
    const unsigned N = std::max(A.order_bound(), B.order_bound());
    const int h_degree = f.degree() - static_cast<int>(N - 1);
    const MapCoordinates unknowns(A.space(), B.space(), h_degree);
    const MapCoordinates values(A.space(), B.space(), f.degree());
    const Vector rhs = values.flatten(f - g);
    if (unknowns.size() == 0) {
        if (is_zero(rhs)) return GradedMap(A.space(), B.space(), h_degree);
        return std::nullopt;
    }
    std::vector<Vector> columns;
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
        columns.push_back(values.flatten(homotopy_operator(unknowns.elementary(k), A, B)));
    }
    auto x = solve(Matrix::from_columns(values.size(), columns), rhs);
    if (!x) return std::nullopt;
    return unknowns.assemble(*x);
}

bool induce_same_cohomology_map(const GradedMap& f, const GradedMap& g, const NComplex& A, const NComplex& B,
                                unsigned p, int degree) {
    const GradedMap diff = f - g;
    const int target_degree = degree + f.degree();
    const std::size_t n = B.space()->dim(target_degree);
    const unsigned NB = B.order_bound();
    std::vector<Vector> exact;
    if (p < NB) {
        exact = rank_kernel_image(power(B.d(), NB - p), target_degree - static_cast<int>(NB - p)).image_basis;
    }
    const std::size_t base = span_rank(exact, n);
    for (const auto& z : cohomology(A, p, degree).representatives) {
        const Vector w = B.space()->restrict(diff.apply(A.space()->embed(z, degree)), target_degree);
        if (is_zero(w)) continue;
        std::vector<Vector> both = exact;
        both.push_back(w);
        if (span_rank(both, n) != base) return false;
    }
    return true;
}

std::string tensor_label(const std::string& a, const std::string& b) { return a + "*" + b; }

SpacePtr tensor_space(const GradedSpace& A, const GradedSpace& B) {
    GradedSpace::Components out;
    for (const auto& a : A.labels())
        for (const auto& b : B.labels()) out[A.degree_of(a) + B.degree_of(b)].push_back(tensor_label(a, b));
    return make_space(std::move(out));
}

GradedMap tensor_maps(const GradedMap& f, const GradedMap& g) {
    const SpacePtr source = tensor_space(*f.source(), *g.source());
    const SpacePtr target = tensor_space(*f.target(), *g.target());
    std::map<std::string, std::vector<std::pair<std::string, Scalar>>> f_cols, g_cols;
    for (const auto& [from, to, c] : f.entries()) f_cols[from].emplace_back(to, c);
    for (const auto& [from, to, c] : g.entries()) g_cols[from].emplace_back(to, c);
    std::vector<GradedMap::Entry> entries;
    for (const auto& a : f.source()->labels()) {
        auto fa = f_cols.find(a);
        if (fa == f_cols.end()) continue;
        const Scalar sign = Scalar::sign_power(static_cast<long>(g.degree()) * f.source()->degree_of(a));
        for (const auto& b : g.source()->labels()) {
            auto gb = g_cols.find(b);
            if (gb == g_cols.end()) continue;
            for (const auto& [a2, ca] : fa->second)
                for (const auto& [b2, cb] : gb->second)
                    entries.emplace_back(tensor_label(a, b), tensor_label(a2, b2), sign * ca * cb);
        }
    }
    return GradedMap::from_entries(source, target, f.degree() + g.degree(), entries);
}

NComplex tensor_complex(const NComplex& A, const NComplex& B) {
    const GradedMap idA = GradedMap::identity(A.space());
    const GradedMap idB = GradedMap::identity(B.space());
    GradedMap d = tensor_maps(A.d(), idB) + tensor_maps(idA, B.d());
    return NComplex(std::move(d), A.order_bound() + B.order_bound() - 1);
}

} // namespace ndga
