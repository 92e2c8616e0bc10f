#include "ndga/mc.hpp"

#include <algorithm>

#include "ndga/errors.hpp"

namespace ndga {

std::optional<Scalar> CoefficientTable::lookup(const MultiIndex& s, unsigned N) const {
    std::shared_lock lock(mutex_);
    auto it = memo_.find({s, N});
    if (it == memo_.end()) return std::nullopt;
    return it->second;
}

std::size_t CoefficientTable::size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

Scalar CoefficientTable::get(const MultiIndex& s, unsigned N) {
    if (s.size_plus_length() > N) return 0;
    if (N <= 1) return 1; // E_0 = {∅}, E_1 = {∅, (0)}
    if (auto hit = lookup(s, N)) return *hit;

    const unsigned prev = N - 1;
    Scalar value;
    if (!s.empty() && s.delta(1)) value += get(s.after(1), prev);
    value += Scalar::sign_power(s.size_plus_length()) * get(s, prev);
    for (std::size_t i = 1; i <= s.length(); ++i) {
        if (!s.eta(i)) continue;
        value += Scalar::sign_power(static_cast<long>(s.before(i).weight() + i - 1)) * get(s.minus_unit(i), prev);
    }

    std::unique_lock lock(mutex_);
    return memo_.emplace(std::make_pair(s, N), std::move(value)).first->second;
}

Scalar c_coeff(const MultiIndex& s, unsigned N) {
    static CoefficientTable table;
    return table.get(s, N);
}

namespace {

void require_degree_one_endomorphism(const GradedMap& e, const GradedMap& d) {
    if (!d.is_endomorphism() || d.degree() != 1) throw StructuralError("d must be a degree-1 endomorphism");
    if (e.degree() != 1) throw StructuralError("perturbation e must have degree 1, got " + std::to_string(e.degree()));
    if (!same_space(e.source(), d.source()) || !same_space(e.target(), d.target())) {
        throw StructuralError("perturbation and differential act on different spaces");
    }
}

std::vector<GradedMap> derivative_tower(const GradedMap& e, unsigned count, const GradedMap& d) {
    std::vector<GradedMap> tower{e};
    for (unsigned l = 1; l < count; ++l) tower.push_back(d_end(d, tower.back()));
    return tower;
}

GradedMap chain(const std::vector<GradedMap>& tower, const MultiIndex& s, const SpacePtr& space) {
    GradedMap out = GradedMap::identity(space);
    for (std::size_t i = s.length(); i >= 1; --i) out = compose(tower.at(s.at(i)), out);
    return out;
}

} // namespace

GradedMap e_derivative(const GradedMap& e, unsigned l, const GradedMap& d) {
    GradedMap out = e;
    for (unsigned k = 0; k < l; ++k) out = d_end(d, out);
    return out;
}

GradedMap apply_e_power(const GradedMap& e, const MultiIndex& s, const GradedMap& d) {
    const unsigned top = s.empty() ? 0 : *std::max_element(s.entries().begin(), s.entries().end());
    return chain(derivative_tower(e, top + 1, d), s, d.source());
}

std::vector<MCTerm> mc_terms(unsigned N, std::optional<unsigned> M_filter) {
    std::vector<MCTerm> out;
    for (const auto& s : enumerate_EN(N)) {
        if (M_filter && !s.all_below(*M_filter)) continue;
        Scalar c = c_coeff(s, N);
        if (c.is_zero()) continue;
        out.push_back({s, std::move(c), N - s.size_plus_length()});
    }
    return out;
}

MCExpansion dN_expansion(const GradedMap& d, const GradedMap& e, unsigned N, std::optional<unsigned> M_filter) {
    require_degree_one_endomorphism(e, d);
    MCExpansion out{N, mc_terms(N, M_filter), GradedMap(d.source(), d.target(), static_cast<int>(N))};
    const auto tower = derivative_tower(e, std::max(N, 1U), d);
    std::vector<GradedMap> d_powers{GradedMap::identity(d.source())};
    for (unsigned k = 1; k <= N; ++k) d_powers.push_back(compose(d, d_powers.back()));
    for (const auto& term : out.terms) {
        out.op += compose(chain(tower, term.s, d.source()), d_powers[term.d_power]) * term.coefficient;
    }
    return out;
}

GradedMap mc_residual(const GradedMap& d, const GradedMap& e, unsigned M, unsigned N) {
    require_degree_one_endomorphism(e, d);
    if (M == 0) throw ArgumentError("M must be at least 1");
    if (N < M) throw PreconditionError("the (M,N) equation needs N >= M");
    if (!power(d, M).is_zero()) throw PreconditionError("d^" + std::to_string(M) + " != 0");
    return dN_expansion(d, e, N, M).op;
}

GradedMap mc_closed_form_2N(const GradedMap& d, const GradedMap& e, unsigned N) {
    require_degree_one_endomorphism(e, d);
    if (!compose(d, d).is_zero()) throw PreconditionError("closed form needs d^2 = 0");
    const GradedMap curvature = d_end(d, e) + compose(e, e);
    GradedMap out = power(curvature, N / 2);
    if (N % 2 == 1) out = compose(out, d + e);
    return out;
}

GradedMap left_multiplication(const NDga& A, const Element& x) {
    const int degree = homogeneous_degree(*A.space(), x).value_or(0);
    std::vector<GradedMap::Entry> entries;
    for (const auto& b : A.space()->labels()) {
        for (const auto& [to, c] : element_labels(*A.space(), A.multiply(x, A.basis(b)))) entries.emplace_back(b, to, c);
    }
    return GradedMap::from_entries(A.space(), A.space(), degree, entries);
}

GradedMap graded_commutator(const NDga& A, const Element& x) {
    const int degree = homogeneous_degree(*A.space(), x).value_or(0);
    std::vector<GradedMap::Entry> entries;
    for (const auto& b : A.space()->labels()) {
        const Element eb = A.basis(b);
        const Scalar sign = Scalar::sign_power(static_cast<long>(degree) * A.space()->degree_of(b));
        const Element v = add(A.multiply(x, eb), scaled(A.multiply(eb, x), -sign));
        for (const auto& [to, c] : element_labels(*A.space(), v)) entries.emplace_back(b, to, c);
    }
    return GradedMap::from_entries(A.space(), A.space(), degree, entries);
}

GradedMap inner_derivation(const NDga& A, const Element& a) {
    const auto degree = homogeneous_degree(*A.space(), a);
    if (!degree) return GradedMap(A.space(), A.space(), 1);
    if (*degree != 1) throw ArgumentError("inner derivation needs an element of degree 1, got " + std::to_string(*degree));
    return graded_commutator(A, a);
}

std::vector<std::pair<std::string, std::string>> derivation_violations(const NDga& A, const GradedMap& e) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& b : A.space()->labels())
        for (const auto& c : A.space()->labels()) {
            const Element eb = A.basis(b);
            const Element ec = A.basis(c);
            const Element lhs = e.apply(A.multiply(eb, ec));
            const Scalar sign = Scalar::sign_power(static_cast<long>(e.degree()) * A.space()->degree_of(b));
            const Element rhs = add(A.multiply(e.apply(eb), ec), scaled(A.multiply(eb, e.apply(ec)), sign));
            if (lhs != rhs) out.emplace_back(b, c);
        }
    return out;
}

Deformation deform(const GradedMap& d, const TruncatedMap& e, unsigned order_search_bound) {
    if (!e.in_maximal_ideal()) throw StructuralError("perturbation has a nonzero constant term");
    if (!same_space(e.reduction().source(), d.source()) || e.degree() != d.degree()) {
        throw StructuralError("perturbation does not match the differential's space or degree");
    }
    const TruncatedRing& ring = e.ring();
    Deformation out{ring, d.source(), ring.extend(*d.source()), TruncatedMap::constant(ring, d).realize(),
                    e.realize(), GradedMap(), std::nullopt, std::nullopt};
    out.differential = out.d + out.e;
    if (!(reduce_mod_maximal_ideal(out.differential, d.source(), ring) == d)) {
        throw StructuralError("deformed differential does not reduce to d");
    }
    out.realized_order = nilpotency_order(out.differential, order_search_bound);
    return out;
}

Deformation deform(const NDga& A, const TruncatedMap& e, unsigned order_search_bound) {
    Deformation out = deform(A.d(), e, order_search_bound);
    const GradedSpace& base = *A.space();
    const GradedSpace& ext = *out.space;
    const unsigned m = out.ring.order();
    BilinearTable product(ext.total_dim(), ext.total_dim());
    for (std::size_t x = 0; x < base.total_dim(); ++x)
        for (std::size_t y = 0; y < base.total_dim(); ++y)
            for (const auto& [z, c] : A.product().at(x, y))
                for (unsigned i = 0; i < m; ++i)
                    for (unsigned j = 0; i + j < m; ++j) {
                        product.add(ext.index_of(TruncatedRing::extended_label(base.label(x), i)),
                                    ext.index_of(TruncatedRing::extended_label(base.label(y), j)),
                                    ext.index_of(TruncatedRing::extended_label(base.label(z), i + j)), c);
                    }
    out.product = std::move(product);
    return out;
}

namespace {

void build_pairings(std::vector<bool>& used, Pairing& current, std::vector<Pairing>& out) {
    const auto first = std::find(used.begin(), used.end(), false);
    if (first == used.end()) {
        out.push_back(current);
        return;
    }
    const auto a = static_cast<unsigned>(first - used.begin());
    used[a] = true;
    for (unsigned b = a + 1; b < used.size(); ++b) {
        if (used[b]) continue;
        used[b] = true;
        current.emplace_back(a + 1, b + 1);
        build_pairings(used, current, out);
        current.pop_back();
        used[b] = false;
    }
    used[a] = false;
}

} // namespace

std::vector<Pairing> enumerate_pairings(unsigned two_n) {
    if (two_n % 2 != 0) throw ArgumentError("pairings need an even number of points");
    std::vector<bool> used(two_n, false);
    Pairing current;
    std::vector<Pairing> out;
    build_pairings(used, current, out);
    return out;
}

int pairing_sign(const Pairing& p) {
    std::vector<unsigned> seq;
    for (const auto& [a, b] : p) {
        seq.push_back(a);
        seq.push_back(b);
    }
    unsigned inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

Scalar pairing_sum(const Matrix& F) {
    if (F.rows() != F.cols()) throw ArgumentError("pairing sum needs a square matrix");
    if (F.rows() % 2 != 0) throw ArgumentError("pairing sum needs even dimension, got " + std::to_string(F.rows()));
    for (std::size_t i = 0; i < F.rows(); ++i)
        for (std::size_t j = i; j < F.cols(); ++j)
            if (F(i, j) != -F(j, i)) throw ArgumentError("matrix is not antisymmetric");
    Scalar total;
    for (const auto& p : enumerate_pairings(static_cast<unsigned>(F.rows()))) {
        Scalar term = pairing_sign(p);
        for (const auto& [a, b] : p) {
            term *= F(a - 1, b - 1);
            if (term.is_zero()) break;
        }
        total += term;
    }
    return total;
}

} // namespace ndga
