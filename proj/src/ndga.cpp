#include "ndga/ndga.hpp"

#include <algorithm>
#include <sstream>

#include "ndga/errors.hpp"

namespace ndga {

namespace {

using Accumulator = std::map<std::size_t, Scalar>;

void accumulate(Accumulator& acc, const SparseVec& v, const Scalar& c) {
    for (const auto& [k, x] : v) acc[k] += c * x;
}

SparseVec to_sparse(const Accumulator& acc) {
    SparseVec out;
    for (const auto& [k, x] : acc)
        if (!x.is_zero()) out.emplace_back(k, x);
    return out;
}

// d as sparse columns indexed by global source index.
std::vector<SparseVec> sparse_columns(const GradedMap& d) {
    std::vector<SparseVec> cols(d.source()->total_dim());
    for (const auto& [from, to, c] : d.entries()) {
        cols[d.source()->index_of(from)].emplace_back(d.target()->index_of(to), c);
    }
    return cols;
}

BilinearTable table_from_spec(const GradedSpace& left, const GradedSpace& right, const GradedSpace& out,
                              const std::map<std::pair<std::string, std::string>, std::map<std::string, Scalar>>& entries) {
    BilinearTable table(left.total_dim(), right.total_dim());
    for (const auto& [pair, combination] : entries) {
        const std::size_t i = left.index_of(pair.first);
        const std::size_t j = right.index_of(pair.second);
        for (const auto& [label, c] : combination) table.add(i, j, out.index_of(label), c);
    }
    return table;
}

std::map<std::pair<std::string, std::string>, std::map<std::string, Scalar>>
spec_from_table(const GradedSpace& left, const GradedSpace& right, const GradedSpace& out, const BilinearTable& table) {
    std::map<std::pair<std::string, std::string>, std::map<std::string, Scalar>> entries;
    for (std::size_t i = 0; i < left.total_dim(); ++i)
        for (std::size_t j = 0; j < right.total_dim(); ++j)
            for (const auto& [k, c] : table.at(i, j)) entries[{left.label(i), right.label(j)}][out.label(k)] = c;
    return entries;
}

std::string describe(const GradedSpace& space, const Accumulator& lhs, const Accumulator& rhs) {
    std::ostringstream os;
    auto dump = [&](const Accumulator& acc) {
        bool first = true;
        for (const auto& [k, c] : acc) {
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << c << "*" << space.label(k);
        }
        if (first) os << "0";
    };
    dump(lhs);
    os << " vs ";
    dump(rhs);
    return os.str();
}

bool same(const Accumulator& a, const Accumulator& b) { return to_sparse(a) == to_sparse(b); }

void check_differential(const GradedMap& d, unsigned N, const std::string& name, AxiomReport& report) {
    if (!d.is_endomorphism() || d.degree() != 1) {
        report.violations.push_back({"degree", {}, name + " must be a degree-1 endomorphism"});
        return;
    }
    for (const auto& label : nilpotency_violations(d, N)) {
        report.violations.push_back({"nilpotency", {label}, name + "^" + std::to_string(N) + "(" + label + ") != 0"});
    }
}

} // namespace

Element element_from_labels(const GradedSpace& space, const std::map<std::string, Scalar>& coeffs) {
    Element x(space.total_dim());
    for (const auto& [label, c] : coeffs) x[space.index_of(label)] += c;
    return x;
}

std::map<std::string, Scalar> element_labels(const GradedSpace& space, const Element& x) {
    std::map<std::string, Scalar> out;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) out.emplace(space.label(i), x[i]);
    return out;
}

std::optional<int> homogeneous_degree(const GradedSpace& space, const Element& x) {
    std::optional<int> degree;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        if (degree && *degree != space.degree_at(i)) throw ArgumentError("element is not homogeneous");
        degree = space.degree_at(i);
    }
    return degree;
}

void BilinearTable::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    if (c.is_zero()) return;
    auto& cell = cells_.at(i * right_dim_ + j);
    for (auto it = cell.begin(); it != cell.end(); ++it) {
        if (it->first == k) {
            it->second += c;
            if (it->second.is_zero()) cell.erase(it);
            return;
        }
    }
    cell.emplace_back(k, c);
    std::sort(cell.begin(), cell.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

Vector BilinearTable::apply(const Vector& x, const Vector& y, std::size_t out_dim) const {
    Vector out(out_dim);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j].is_zero()) continue;
            const auto& cell = at(i, j);
            if (cell.empty()) continue;
            const Scalar c = x[i] * y[j];
            for (const auto& [k, v] : cell) out[k] += c * v;
        }
    }
    return out;
}

NDga::NDga(GradedMap d, unsigned order_bound, BilinearTable product, std::optional<std::string> unit)
    : d_(std::move(d)), order_bound_(order_bound), product_(std::move(product)), unit_(std::move(unit)) {
    if (order_bound_ == 0) throw ArgumentError("order bound N must be at least 1");
    if (!d_.is_endomorphism()) throw StructuralError("differential must be an endomorphism");
    if (unit_ && !space()->contains(*unit_)) throw StructuralError("unknown unit label \"" + *unit_ + "\"");
}

NDga::NDga(GradedMap d, unsigned order_bound, const ProductSpec& product, std::optional<std::string> unit)
    : NDga(d, order_bound, table_from_spec(*d.source(), *d.source(), *d.source(), product), std::move(unit)) {}

NDga NDga::with_zero_product(const NComplex& complex) {
    const std::size_t n = complex.space()->total_dim();
    return NDga(complex.d(), complex.order_bound(), BilinearTable(n, n));
}

Element NDga::multiply(const Element& a, const Element& b) const {
    return product_.apply(a, b, space()->total_dim());
}

Element NDga::apply_d(const Element& a, unsigned times) const {
    Element x = a;
    for (unsigned k = 0; k < times; ++k) x = d_.apply(x);
    return x;
}

NDga::ProductSpec NDga::product_spec() const { return spec_from_table(*space(), *space(), *space(), product_); }

std::string AxiomReport::str() const {
    std::ostringstream os;
    for (const auto& v : violations) {
        os << v.axiom;
        if (!v.labels.empty()) {
            os << " (";
            for (std::size_t i = 0; i < v.labels.size(); ++i) os << (i ? ", " : "") << v.labels[i];
            os << ")";
        }
        os << ": " << v.detail << "\n";
    }
    return os.str();
}

AxiomReport verify_ndga(const NDga& A) {
    AxiomReport report;
    const GradedSpace& S = *A.space();
    const std::size_t n = S.total_dim();
    const BilinearTable& m = A.product();

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : m.at(i, j))
                if (S.degree_at(k) != S.degree_at(i) + S.degree_at(j)) {
                    report.violations.push_back({"degree", {S.label(i), S.label(j)},
                                                 "product has a component " + S.label(k) + " of degree " +
                                                     std::to_string(S.degree_at(k))});
                }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (m.at(i, j).empty() && m.at(j, k).empty()) continue;
                Accumulator left, right;
                for (const auto& [p, c] : m.at(i, j)) accumulate(left, m.at(p, k), c);
                for (const auto& [q, c] : m.at(j, k)) accumulate(right, m.at(i, q), c);
                if (!same(left, right)) {
                    report.violations.push_back({"associativity", {S.label(i), S.label(j), S.label(k)},
                                                 "(ab)c != a(bc): " + describe(S, left, right)});
                }
            }

    check_differential(A.d(), A.order_bound(), "d", report);
    if (A.d().degree() == 1 && A.d().is_endomorphism()) {
        const auto dcols = sparse_columns(A.d());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Accumulator lhs, rhs;
                for (const auto& [p, c] : m.at(i, j)) accumulate(lhs, dcols[p], c);
                for (const auto& [p, c] : dcols[i]) accumulate(rhs, m.at(p, j), c);
                const Scalar sign = Scalar::sign_power(S.degree_at(i));
                for (const auto& [q, c] : dcols[j]) accumulate(rhs, m.at(i, q), sign * c);
                if (!same(lhs, rhs)) {
                    report.violations.push_back({"leibniz", {S.label(i), S.label(j)},
                                                 "d(ab) != d(a)b + (-1)^|a| a d(b): " + describe(S, lhs, rhs)});
                }
            }
    }

    if (A.unit()) {
        const std::size_t u = S.index_of(*A.unit());
        if (S.degree_at(u) != 0) report.violations.push_back({"unit", {*A.unit()}, "unit must have degree 0"});
        for (std::size_t i = 0; i < n; ++i) {
            const SparseVec expected{{i, Scalar(1)}};
            if (m.at(u, i) != expected || m.at(i, u) != expected) {
                report.violations.push_back({"unit", {*A.unit(), S.label(i)}, "unit does not act as identity"});
            }
        }
    }
    return report;
}

Scalar graded_binomial(unsigned n, unsigned j, unsigned parity) {
    if (j > n) return 0;
    std::vector<Scalar> row{Scalar(1)}; // {0, 0}
    for (unsigned k = 0; k < n; ++k) {
        std::vector<Scalar> next(k + 2);
        next[0] = Scalar::sign_power(parity) * row[0];
        for (unsigned i = 1; i <= k + 1; ++i) {
            Scalar v = row[i - 1];
            if (i <= k) v += Scalar::sign_power(parity + i) * row[i];
            next[i] = std::move(v);
        }
        row = std::move(next);
    }
    return row[j];
}

bool leibniz_power_check(const NDga& A, const Element& a, const Element& b, unsigned n) {
    const auto deg_a = homogeneous_degree(*A.space(), a);
    homogeneous_degree(*A.space(), b);
    const unsigned parity = deg_a ? static_cast<unsigned>(((*deg_a % 2) + 2) % 2) : 0U;
    const Element lhs = A.apply_d(A.multiply(a, b), n);
    Element rhs(A.space()->total_dim());
    for (unsigned i = 0; i <= n; ++i) {
        const Scalar c = graded_binomial(n, i, parity);
        if (c.is_zero()) continue;
        rhs = add(rhs, scaled(A.multiply(A.apply_d(a, i), A.apply_d(b, n - i)), c));
    }
    return lhs == rhs;
}

unsigned closedness_order(const NDga& A, const Element& a) {
    Element x = a;
    for (unsigned p = 1; p <= A.order_bound(); ++p) {
        x = A.d().apply(x);
        if (is_zero(x)) return p;
    }
    return A.order_bound() + 1;
}

NDga tensor_dga(const NDga& A, const NDga& B) {
    const GradedMap d = tensor_maps(A.d(), GradedMap::identity(B.space())) + tensor_maps(GradedMap::identity(A.space()), B.d());
    const GradedSpace& S = *d.source();
    const GradedSpace& SA = *A.space();
    const GradedSpace& SB = *B.space();
    const std::size_t nA = SA.total_dim();
    const std::size_t nB = SB.total_dim();
    auto idx = [&](std::size_t a, std::size_t b) { return S.index_of(tensor_label(SA.label(a), SB.label(b))); };

    BilinearTable product(S.total_dim(), S.total_dim());
    for (std::size_t a = 0; a < nA; ++a)
        for (std::size_t a2 = 0; a2 < nA; ++a2) {
            const auto& aa = A.product().at(a, a2);
            if (aa.empty()) continue;
            for (std::size_t b = 0; b < nB; ++b) {
                const Scalar sign = Scalar::sign_power(static_cast<long>(SB.degree_at(b)) * SA.degree_at(a2));
                for (std::size_t b2 = 0; b2 < nB; ++b2) {
                    const auto& bb = B.product().at(b, b2);
                    if (bb.empty()) continue;
                    for (const auto& [k, ck] : aa)
                        for (const auto& [l, cl] : bb) product.add(idx(a, b), idx(a2, b2), idx(k, l), sign * ck * cl);
                }
            }
        }

    std::optional<std::string> unit;
    if (A.unit() && B.unit()) unit = tensor_label(*A.unit(), *B.unit());
    return NDga(d, A.order_bound() + B.order_bound() - 1, std::move(product), unit);
}

std::string end_label(const std::string& to, const std::string& from) { return to + "<-" + from; }

GradedMap d_end(const GradedMap& d, const GradedMap& f) {
    return compose(d, f) - compose(f, d) * Scalar::sign_power(f.degree());
}

NDga end_algebra(const NComplex& M) {
    const GradedSpace& S = *M.space();
    GradedSpace::Components comps;
    for (const auto& to : S.labels())
        for (const auto& from : S.labels()) comps[S.degree_of(to) - S.degree_of(from)].push_back(end_label(to, from));
    const SpacePtr E = make_space(std::move(comps));

    const auto dcols = sparse_columns(M.d());
    // d∘E(y<-x) = Σ_z d_{zy} E(z<-x);  E(y<-x)∘d = Σ_w d_{xw} E(y<-w)
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> drows(S.total_dim());
    for (std::size_t w = 0; w < S.total_dim(); ++w)
        for (const auto& [x, c] : dcols[w]) drows[x].emplace_back(w, c);

    std::vector<GradedMap::Entry> d_entries;
    BilinearTable product(E->total_dim(), E->total_dim());
    for (std::size_t y = 0; y < S.total_dim(); ++y)
        for (std::size_t x = 0; x < S.total_dim(); ++x) {
            const std::string f = end_label(S.label(y), S.label(x));
            const int deg_f = S.degree_at(y) - S.degree_at(x);
            for (const auto& [z, c] : dcols[y]) d_entries.emplace_back(f, end_label(S.label(z), S.label(x)), c);
            const Scalar sign = -Scalar::sign_power(deg_f);
            for (const auto& [w, c] : drows[x]) d_entries.emplace_back(f, end_label(S.label(y), S.label(w)), sign * c);
            for (std::size_t w = 0; w < S.total_dim(); ++w) {
                product.add(E->index_of(f), E->index_of(end_label(S.label(x), S.label(w))),
                            E->index_of(end_label(S.label(y), S.label(w))), 1);
            }
        }
    return NDga(GradedMap::from_entries(E, E, 1, d_entries), 2 * M.order_bound() - 1, std::move(product));
}

GradedMap end_element_to_map(const NComplex& M, const GradedSpace& end_space, const Element& f) {
    std::optional<int> degree = homogeneous_degree(end_space, f);
    std::vector<GradedMap::Entry> entries;
    for (const auto& [label, c] : element_labels(end_space, f)) {
        const auto arrow = label.find("<-");
        entries.emplace_back(label.substr(arrow + 2), label.substr(0, arrow), c);
    }
    return GradedMap::from_entries(M.space(), M.space(), degree.value_or(0), entries);
}

Element map_to_end_element(const GradedSpace& end_space, const GradedMap& f) {
    Element x(end_space.total_dim());
    for (const auto& [from, to, c] : f.entries()) x[end_space.index_of(end_label(to, from))] += c;
    return x;
}

Kdgm::Kdgm(NDga algebra, GradedMap d_module, unsigned order_bound, BilinearTable action)
    : algebra_(std::move(algebra)), d_(std::move(d_module)), order_bound_(order_bound), action_(std::move(action)) {
    if (order_bound_ == 0) throw ArgumentError("order bound K must be at least 1");
    if (!d_.is_endomorphism()) throw StructuralError("module differential must be an endomorphism");
}

Kdgm::Kdgm(NDga algebra, GradedMap d_module, unsigned order_bound, const ActionSpec& action)
    : Kdgm(algebra, d_module, order_bound,
           table_from_spec(*algebra.space(), *d_module.source(), *d_module.source(), action)) {}

Element Kdgm::act(const Element& a, const Element& m) const { return action_.apply(a, m, space()->total_dim()); }

Kdgm::ActionSpec Kdgm::action_spec() const {
    return spec_from_table(*algebra_.space(), *space(), *space(), action_);
}

AxiomReport verify_kdgm(const Kdgm& M) {
    AxiomReport report;
    const GradedSpace& SA = *M.algebra().space();
    const GradedSpace& SM = *M.space();
    const std::size_t nA = SA.total_dim();
    const std::size_t nM = SM.total_dim();
    const BilinearTable& act = M.action();
    const BilinearTable& mul = M.algebra().product();

    for (std::size_t a = 0; a < nA; ++a)
        for (std::size_t m = 0; m < nM; ++m)
            for (const auto& [k, c] : act.at(a, m))
                if (SM.degree_at(k) != SA.degree_at(a) + SM.degree_at(m)) {
                    report.violations.push_back({"degree", {SA.label(a), SM.label(m)},
                                                 "action has a component " + SM.label(k) + " of degree " +
                                                     std::to_string(SM.degree_at(k))});
                }

    for (std::size_t a = 0; a < nA; ++a)
        for (std::size_t b = 0; b < nA; ++b)
            for (std::size_t m = 0; m < nM; ++m) {
                Accumulator left, right;
                for (const auto& [q, c] : act.at(b, m)) accumulate(left, act.at(a, q), c);
                for (const auto& [p, c] : mul.at(a, b)) accumulate(right, act.at(p, m), c);
                if (!same(left, right)) {
                    report.violations.push_back({"associativity", {SA.label(a), SA.label(b), SM.label(m)},
                                                 "a(bm) != (ab)m: " + describe(SM, left, right)});
                }
            }

    check_differential(M.d(), M.order_bound(), "d_M", report);
    const GradedMap& dA = M.algebra().d();
    if (M.d().degree() == 1 && M.d().is_endomorphism() && dA.degree() == 1 && dA.is_endomorphism()) {
        const auto dA_cols = sparse_columns(dA);
        const auto dM_cols = sparse_columns(M.d());
        for (std::size_t a = 0; a < nA; ++a)
            for (std::size_t m = 0; m < nM; ++m) {
                Accumulator lhs, rhs;
                for (const auto& [p, c] : act.at(a, m)) accumulate(lhs, dM_cols[p], c);
                for (const auto& [p, c] : dA_cols[a]) accumulate(rhs, act.at(p, m), c);
                const Scalar sign = Scalar::sign_power(SA.degree_at(a));
                for (const auto& [q, c] : dM_cols[m]) accumulate(rhs, act.at(a, q), sign * c);
                if (!same(lhs, rhs)) {
                    report.violations.push_back({"leibniz", {SA.label(a), SM.label(m)},
                                                 "d_M(am) != d_A(a)m + (-1)^|a| a d_M(m): " + describe(SM, lhs, rhs)});
                }
            }
    }
    return report;
}

Kdgm regular_module(const NDga& A) { return Kdgm(A, A.d(), A.order_bound(), A.product()); }

Kdgm evaluation_module(const NComplex& M) {
    NDga E = end_algebra(M);
    const GradedSpace& S = *M.space();
    BilinearTable action(E.space()->total_dim(), S.total_dim());
    for (std::size_t y = 0; y < S.total_dim(); ++y)
        for (std::size_t x = 0; x < S.total_dim(); ++x) action.add(E.space()->index_of(end_label(S.label(y), S.label(x))), x, y, 1);
    return Kdgm(std::move(E), M.d(), M.order_bound(), std::move(action));
}

} // namespace ndga
