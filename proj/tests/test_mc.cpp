#include "doctest.h"

#include <set>

#include "ndga/dqm.hpp"
#include "ndga/errors.hpp"
#include "ndga/gallery.hpp"
#include "ndga/mc.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ndga;

namespace {

// Brute force E_N: every sequence of naturals with |s| + l(s) <= N.
std::set<std::vector<unsigned>> brute_EN(unsigned N) {
    std::set<std::vector<unsigned>> out{{}};
    std::vector<std::vector<unsigned>> frontier{{}};
    while (!frontier.empty()) {
        std::vector<std::vector<unsigned>> next;
        for (const auto& s : frontier) {
            unsigned used = static_cast<unsigned>(s.size());
            for (unsigned x : s) used += x;
            for (unsigned x = 0; used + x + 1 <= N; ++x) {
                auto t = s;
                t.push_back(x);
                if (out.insert(t).second) next.push_back(t);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

// An ordinary complex (d^2 = 0) viewed through End(V), which is then a 2-dga.
NDga end_two_dga(const NComplex& V) {
    const NDga E = end_algebra(V);
    return NDga(E.d(), 2, E.product(), E.unit());
}

Element random_of_degree(gen::Rng& rng, const GradedSpace& S, int degree) {
    Element x(S.total_dim());
    for (std::size_t k = 0; k < S.total_dim(); ++k)
        if (S.degree_at(k) == degree) x[k] = rng.scalar();
    return x;
}

} // namespace

TEST_CASE("E_N enumeration") {
    CHECK(enumerate_EN(0) == std::vector<MultiIndex>{MultiIndex()});
    CHECK(enumerate_EN(1) == std::vector<MultiIndex>{MultiIndex(), MultiIndex{0}});
    CHECK(enumerate_EN(2) == std::vector<MultiIndex>{MultiIndex(), MultiIndex{0}, MultiIndex{1}, MultiIndex{0, 0}});
    for (unsigned N = 0; N <= 8; ++N) {
        const auto listed = enumerate_EN(N);
        std::set<std::vector<unsigned>> seen;
        for (std::size_t k = 0; k < listed.size(); ++k) {
            CHECK(listed[k].size_plus_length() <= N);
            seen.insert(listed[k].entries());
            if (k > 0) CHECK(listed[k - 1] < listed[k]);
        }
        CHECK(seen == brute_EN(N));
        CHECK(seen.size() == listed.size());
    }
}

TEST_CASE("multi-index accessors") {
    const MultiIndex s{1, 0, 2};
    CHECK(s.weight() == 3);
    CHECK(s.size_plus_length() == 6);
    CHECK(s.before(1) == MultiIndex());
    CHECK(s.before(3) == MultiIndex{1, 0});
    CHECK(s.after(1) == MultiIndex{0, 2});
    CHECK(s.after(3) == MultiIndex());
    CHECK(s.delta(2));
    CHECK(s.eta(3));
    CHECK(s.plus_unit(2) == MultiIndex{1, 1, 2});
    CHECK(s.minus_unit(3) == MultiIndex{1, 0, 1});
    CHECK(s.prepend_zero() == MultiIndex{0, 1, 0, 2});
    CHECK(MultiIndex::parse(" ( 1, 0 ,2 )") == s);
    CHECK(MultiIndex::parse("()") == MultiIndex());
    CHECK(s.str() == "(1,0,2)");
    CHECK_THROWS_AS(MultiIndex::parse("(1,,2)"), ParseError);
    CHECK_THROWS_AS(MultiIndex::parse("1,2"), ParseError);
}

TEST_CASE("coefficients from the recurrence") {
    CHECK(c_coeff(MultiIndex(), 1) == Scalar(1));
    CHECK(c_coeff(MultiIndex{0}, 1) == Scalar(1));
    CHECK(c_coeff(MultiIndex{0}, 2) == Scalar(0));
    CHECK(c_coeff(MultiIndex{1}, 2) == Scalar(1));
    CHECK(c_coeff(MultiIndex{0, 0}, 2) == Scalar(1));
    CHECK(c_coeff(MultiIndex{2}, 2) == Scalar(0)); // outside E_2
    for (unsigned N = 0; N <= 8; ++N) {
        CHECK(c_coeff(MultiIndex(), N) == Scalar(1));
        CHECK(c_coeff(MultiIndex(std::vector<unsigned>(N, 0)), N) == Scalar(1));
    }
}

TEST_CASE("the recurrence agrees with the path-sum kernel on the multi-index graph") {
    for (unsigned N = 0; N <= 8; ++N)
        for (const auto& s : enumerate_EN(N)) CHECK_MESSAGE(c_coeff(s, N) == c_oracle(s, N), s.str() << " N=" << N);
}

TEST_CASE("a private coefficient table agrees with the shared one") {
    CoefficientTable table;
    for (const auto& s : enumerate_EN(6)) CHECK(table.get(s, 6) == c_coeff(s, 6));
    CHECK(table.size() > 0);
}

TEST_CASE("powers of the perturbation") {
    const NComplex V = gallery::build_ej1();
    gen::Rng rng(3);
    const GradedMap e = gen::map(rng, V.space(), 1, 1.0);
    const GradedMap& d = V.d();
    CHECK(apply_e_power(e, MultiIndex(), d) == GradedMap::identity(V.space()));
    CHECK(apply_e_power(e, MultiIndex{0}, d) == e);
    CHECK(apply_e_power(e, MultiIndex{1}, d) == compose(d, e) + compose(e, d));
    CHECK(apply_e_power(e, MultiIndex{1, 0}, d) == compose(compose(d, e) + compose(e, d), e));
    CHECK(e_derivative(e, 2, d) == d_end(d, d_end(d, e)));
}

TEST_CASE("expansion of (d+e)^N") {
    SUBCASE("zero perturbation leaves d^N") {
        const NComplex V = gallery::build_vtensor();
        const MCExpansion x = dN_expansion(V.d(), GradedMap(V.space(), V.space(), 1), 4);
        CHECK(x.op == power(V.d(), 4));
        CHECK(x.terms.size() >= 1);
        CHECK(x.terms.front().s == MultiIndex());
        CHECK(x.terms.front().d_power == 4);
    }
    SUBCASE("N = 2 is d^2 + d_End(e) + e^2") {
        gen::Rng rng(8);
        const NDga A = gallery::forms_algebra(2, 2);
        const GradedMap e = gen::map(rng, A.space(), 1);
        const MCExpansion x = dN_expansion(A.d(), e, 2);
        CHECK(x.op == compose(A.d(), A.d()) + d_end(A.d(), e) + compose(e, e));
        CHECK(x.terms.size() == 3);
    }
    SUBCASE("terms carry N(s)") {
        for (const auto& t : mc_terms(6)) {
            CHECK(t.d_power == 6 - t.s.size_plus_length());
            CHECK_FALSE(t.coefficient.is_zero());
        }
        for (const auto& t : mc_terms(6, 2)) CHECK(t.s.all_below(2));
    }
}

TEST_CASE("the assembled expansion equals the direct power over Q") {
    gen::Rng rng(2718);
    for (int trial = 0; trial < 12; ++trial) {
        const unsigned order = static_cast<unsigned>(rng.uniform(1, 4));
        const NComplex C = gen::proper_complex(rng, order, 12);
        const GradedMap e = gen::map(rng, C.space(), 1, 0.4);
        const oracle::Dense D = oracle::add(oracle::dense(C.d()), oracle::dense(e));
        for (unsigned N = 1; N <= 6; ++N) CHECK(oracle::dense(dN_expansion(C.d(), e, N).op) == oracle::pow(D, N));
    }
}

TEST_CASE("the assembled expansion equals the direct power over Q[t]/(t^3)") {
    gen::Rng rng(1414);
    const TruncatedRing R(3);
    for (int trial = 0; trial < 6; ++trial) {
        const NComplex C = gen::proper_complex(rng, 3, 4);
        const TruncatedMap e = gen::perturbation(rng, R, C.space());
        const Deformation def = deform(C.d(), e);
        const oracle::Dense D = oracle::dense(def.differential);
        for (unsigned N = 1; N <= 6; ++N) CHECK(oracle::dense(dN_expansion(def.d, def.e, N).op) == oracle::pow(D, N));
    }
}

TEST_CASE("Maurer-Cartan residuals") {
    const NDga A = end_two_dga(gallery::build_chain(2));
    gen::Rng rng(21);
    const GradedMap e = gen::map(rng, A.space(), 1);
    SUBCASE("zero perturbation") {
        CHECK(mc_residual(A.d(), GradedMap(A.space(), A.space(), 1), 2, 3).is_zero());
    }
    SUBCASE("(2,2) residual is the curvature") {
        CHECK(mc_residual(A.d(), e, 2, 2) == d_end(A.d(), e) + compose(e, e));
    }
    SUBCASE("preconditions") {
        const NComplex V = gallery::build_ej1();
        const GradedMap f(V.space(), V.space(), 1);
        CHECK_THROWS_AS(mc_residual(V.d(), f, 2, 3), PreconditionError);
        CHECK_THROWS_AS(mc_residual(V.d(), f, 3, 2), PreconditionError);
        CHECK_THROWS_AS(mc_residual(V.d(), f, 0, 2), ArgumentError);
        CHECK_THROWS_AS(mc_residual(V.d(), compose(V.d(), V.d()), 3, 3), StructuralError);
    }
}

TEST_CASE("closed form on 2-dgas") {
    gen::Rng rng(99);
    std::vector<NDga> fixtures{gallery::forms_algebra(2, 2), end_two_dga(gallery::build_chain(2)),
                               end_two_dga(gen::proper_complex(rng, 2, 4))};
    for (const auto& A : fixtures) {
        REQUIRE(compose(A.d(), A.d()).is_zero());
        for (int trial = 0; trial < 3; ++trial) {
            const GradedMap e = gen::map(rng, A.space(), 1, 0.3);
            CHECK(mc_closed_form_2N(A.d(), e, 2) == mc_residual(A.d(), e, 2, 2));
            for (unsigned N = 1; N <= 6; ++N) CHECK(mc_closed_form_2N(A.d(), e, N) == power(A.d() + e, N));
        }
    }
    const NComplex V = gallery::build_ej1();
    CHECK_THROWS_AS(mc_closed_form_2N(V.d(), GradedMap(V.space(), V.space(), 1), 2), PreconditionError);
}

TEST_CASE("inner derivations") {
    const NDga E = gallery::build_vtensor_algebra(); // End of the three-step chain
    const NComplex V = gallery::build_ej1();
    gen::Rng rng(31);

    SUBCASE("derivatives of inner derivations are inner") {
        for (int trial = 0; trial < 5; ++trial) {
            const Element a = random_of_degree(rng, *E.space(), 1);
            const GradedMap ea = inner_derivation(E, a);
            CHECK(derivation_violations(E, ea).empty());
            for (unsigned l = 0; l <= 5; ++l) {
                const Element dla = E.apply_d(a, l);
                const GradedMap expected = is_zero(dla) ? GradedMap(E.space(), E.space(), 1 + static_cast<int>(l))
                                                        : graded_commutator(E, dla);
                CHECK(e_derivative(ea, l, E.d()) == expected);
            }
        }
    }
    SUBCASE("zero and wrong degrees") {
        CHECK(inner_derivation(E, Element(E.space()->total_dim())).is_zero());
        CHECK_THROWS_AS(inner_derivation(E, E.basis("e1<-e1")), ArgumentError);
    }
    SUBCASE("vanishes on a graded-commutative algebra") {
        const NDga F = gallery::forms_algebra(2, 3);
        for (int trial = 0; trial < 5; ++trial) CHECK(inner_derivation(F, random_of_degree(rng, *F.space(), 1)).is_zero());
    }
    SUBCASE("the filter loses nothing for inner derivations") {
        for (int trial = 0; trial < 4; ++trial) {
            const Element a = random_of_degree(rng, *E.space(), 1);
            const GradedMap ea = inner_derivation(E, a);
            for (unsigned N = 5; N <= 7; ++N) CHECK(mc_residual(E.d(), ea, 5, N) == power(E.d() + ea, N));
        }
        // a = d itself: d_End + e_d = 2 d_End, so every residual vanishes
        const Element a = map_to_end_element(*E.space(), V.d());
        const GradedMap ea = inner_derivation(E, a);
        CHECK(ea == E.d());
        CHECK(mc_residual(E.d(), ea, 5, 5).is_zero());
        CHECK(power(E.d() + ea, 5).is_zero());
        // on End(V), d_End + e_a is the bracket with d + a, and every degree-1
        // endomorphism of the three-step chain cubes to zero, so a nonzero residual
        // needs a complex on which (d + a)^2 != 0
        auto space = make_space({{0, {"v1"}}, {1, {"v2"}}, {2, {"w"}}});
        const NComplex U(GradedMap::from_entries(space, space, 1, {{"v1", "v2", Scalar(1)}}), 2);
        const NDga EU = end_algebra(U);
        const GradedMap eb = inner_derivation(EU, EU.basis("w<-v2"));
        CHECK(mc_residual(EU.d(), eb, 3, 3) == power(EU.d() + eb, 3));
        CHECK_FALSE(mc_residual(EU.d(), eb, 3, 3).is_zero());
    }
}

TEST_CASE("deformations over truncated rings") {
    SUBCASE("m = 1 leaves the algebra alone") {
        const NDga A = gallery::build_ej1_algebra();
        const TruncatedRing Q1(1);
        const Deformation def = deform(A, TruncatedMap(Q1, {GradedMap(A.space(), A.space(), 1)}));
        CHECK(def.space->total_dim() == A.space()->total_dim());
        CHECK(def.realized_order == 3u);
        CHECK(reduce_mod_maximal_ideal(def.differential, A.space(), Q1) == A.d());
    }
    SUBCASE("a nonzero constant term is rejected") {
        const NDga A = gallery::build_ej1_algebra();
        const TruncatedRing R(2);
        CHECK_THROWS_AS(deform(A, TruncatedMap(R, {A.d(), GradedMap(A.space(), A.space(), 1)})), StructuralError);
    }
    SUBCASE("reduction modulo t") {
        gen::Rng rng(77);
        const TruncatedRing R(2);
        const NComplex C = gen::proper_complex(rng, 3, 6);
        const Deformation def = deform(C.d(), gen::perturbation(rng, R, C.space(), 0.7));
        CHECK(reduce_mod_maximal_ideal(power(def.differential, 3), C.space(), R) == power(C.d(), 3));
    }
    SUBCASE("solving the (2,3) equation for a first-order deformation gives a 3-complex") {
        // over Q[t]/(t^2), (d + t e1)^3 = t (d d e1 + d e1 d + e1 d d) = t d e1 d when d^2 = 0,
        // so the residual vanishes exactly when d e1 d = 0
        const NDga A = gallery::forms_algebra(2, 2);
        const auto& S = *A.space();
        std::vector<std::pair<std::string, std::string>> slots;
        for (const auto& x : S.labels())
            for (const auto& y : S.labels())
                if (S.degree_of(y) == S.degree_of(x) + 1) slots.emplace_back(x, y);
        std::vector<GradedMap> images;
        for (const auto& [x, y] : slots) {
            const auto unit = GradedMap::from_entries(A.space(), A.space(), 1, {{x, y, Scalar(1)}});
            images.push_back(compose(A.d(), compose(unit, A.d())));
        }
        Matrix system(S.total_dim() * S.total_dim(), slots.size());
        for (std::size_t k = 0; k < slots.size(); ++k) {
            const oracle::Dense m = oracle::dense(images[k]);
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = 0; j < m.size(); ++j) system(i * m.size() + j, k) = Scalar(m[i][j]);
        }
        const auto solutions = kernel_basis(system);
        REQUIRE(solutions.size() > 0);
        gen::Rng rng(12);
        std::vector<GradedMap::Entry> entries;
        for (const auto& v : solutions) {
            const Scalar c = rng.nonzero_scalar();
            for (std::size_t k = 0; k < slots.size(); ++k)
                if (!v[k].is_zero()) entries.emplace_back(slots[k].first, slots[k].second, c * v[k]);
        }
        GradedMap e1(A.space(), A.space(), 1);
        for (const auto& entry : entries) e1 += GradedMap::from_entries(A.space(), A.space(), 1, {entry});
        REQUIRE_FALSE(e1.is_zero());

        const TruncatedRing R(2);
        const Deformation def = deform(A, TruncatedMap(R, {GradedMap(A.space(), A.space(), 1), e1}));
        CHECK(mc_residual(def.d, def.e, 2, 3).is_zero());
        REQUIRE(def.realized_order);
        CHECK(*def.realized_order <= 3);
        CHECK(def.product);
    }
}

TEST_CASE("ordered pairings") {
    CHECK(enumerate_pairings(2).size() == 1);
    CHECK(enumerate_pairings(4).size() == 3);
    CHECK(enumerate_pairings(6).size() == 15);
    CHECK(enumerate_pairings(8).size() == 105);
    CHECK_THROWS_AS(enumerate_pairings(3), ArgumentError);
    CHECK(pairing_sign({{1, 2}, {3, 4}}) == 1);
    CHECK(pairing_sign({{1, 3}, {2, 4}}) == -1);
    CHECK(pairing_sign({{1, 4}, {2, 3}}) == 1);

    auto antisym = [](std::size_t n, std::vector<std::tuple<std::size_t, std::size_t, Scalar>> upper) {
        Matrix F(n, n);
        for (const auto& [i, j, v] : upper) {
            F(i, j) = v;
            F(j, i) = -v;
        }
        return F;
    };
    CHECK(pairing_sum(antisym(2, {{0, 1, Scalar(5, 3)}})) == Scalar(5, 3));
    CHECK(pairing_sum(antisym(4, {{0, 1, Scalar(1)}, {2, 3, Scalar(1)}})) == Scalar(1));
    const Matrix F = antisym(4, {{0, 1, Scalar(2)}, {0, 2, Scalar(3)}, {0, 3, Scalar(5)},
                                 {1, 2, Scalar(7)}, {1, 3, Scalar(11)}, {2, 3, Scalar(13)}});
    CHECK(pairing_sum(F) == Scalar(2 * 13 - 3 * 11 + 5 * 7));

    CHECK_THROWS_AS(pairing_sum(Matrix(3, 3)), ArgumentError);
    CHECK_THROWS_AS(pairing_sum(Matrix(2, 4)), ArgumentError);
    Matrix bad(2, 2);
    bad(0, 1) = 1;
    CHECK_THROWS_AS(pairing_sum(bad), ArgumentError);
}

TEST_CASE("pairing sums equal the top coefficient of the wedge power") {
    gen::Rng rng(606);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int trial = 0; trial < (n == 4 ? 3 : 10); ++trial) {
            Matrix F(2 * n, 2 * n);
            for (std::size_t i = 0; i < 2 * n; ++i)
                for (std::size_t j = i + 1; j < 2 * n; ++j) {
                    F(i, j) = rng.scalar();
                    F(j, i) = -F(i, j);
                }
            CHECK(pairing_sum(F).value() == oracle::wedge_power_top(F));
        }
}
