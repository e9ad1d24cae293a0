#include "helpers.hpp"

using namespace th;

TEST_CASE("determinant construction")
{
    ComplexMatrix a{{1, 1, 0, 0, 0, 1, 1}, {0, 1, 1, 1, 0, 0, 1}, {0, 0, 0, 1, 1, 1, 1}};
    const MaPoly p = det_construction(a);
    CHECK(p == basis_polynomial(catalog("F7")) + P(7, {{{1, 3, 5}, 4.0}}));
    // Cauchy-Binet at a complex point.
    std::mt19937_64 rng(3);
    const auto x = random_point(rng, 7);
    CHECK(std::abs(p.eval(x) - cauchy_binet_value(a, x)) < 1e-9 * std::abs(p.eval(x)));

    ComplexMatrix c{{1, cplx(0, 1)}};
    CHECK(det_construction(c) == P(2, {{{0}}, {{1}}}));
    CHECK(minor_det(a, mask_of({0, 1, 3})) == cplx(1.0));
}

TEST_CASE("permanents")
{
    NonnegMatrix ones{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
    CHECK(permanent(ones) == doctest::Approx(6));
    NonnegMatrix m{{1, 2}, {3, 4}};
    CHECK(permanent(m) == doctest::Approx(10));
    NonnegMatrix l{{1, 1, 0}, {0, 1, 1}};
    CHECK(per_construction(l) == P(3, {{{0, 1}}, {{0, 2}}, {{1, 2}}}));
    CHECK(minor_per(l, mask_of({0, 2})) == doctest::Approx(1));
    NonnegMatrix neg{{1, -1}};
    CHECK_THROWS(check_nonneg(neg));
    CHECK_THROWS(per_construction(neg));
}

TEST_CASE("unimodular minors")
{
    ComplexMatrix k4{{1, 1, 1, 0, 0, 0}, {-1, 0, 0, 1, 1, 0}, {0, -1, 0, -1, 0, 1}};
    CHECK(unimodular_minor_check(k4));
    ComplexMatrix f7m{{1, 1, 0, 0, 0, 1, 1}, {0, 1, 1, 1, 0, 0, 1}, {0, 0, 0, 1, 1, 1, 1}};
    CHECK_FALSE(unimodular_minor_check(f7m));
    ComplexMatrix id{{1, 0}, {0, 1}};
    CHECK(unimodular_minor_check(id));
    // Unimodular matrices give the basis polynomial exactly.
    auto sm = support_matroid(det_construction(k4));
    REQUIRE(sm.matroid);
    CHECK(det_construction(k4) == basis_polynomial(*sm.matroid));
    CHECK(*sm.matroid == graphic_matroid(Graph::complete(4)));
}

TEST_CASE("niceness: principal truncation")
{
    auto mk4 = nice_principal_solve(catalog("MK4"), mask_of({0, 1, 2}));
    CHECK(mk4.status == NicenessSolution::Status::nice);
    CHECK(mk4.weights == std::vector<Rational>(3, Rational(1, 2)));
    CHECK(mk4.unique);

    auto q = nice_principal_solve(catalog("Q7del7"), full_mask(6));
    CHECK(q.status == NicenessSolution::Status::infeasible_nonneg);
    CHECK(q.weights == std::vector<Rational>{Rational(-1, 6), Rational(1, 2), Rational(1, 2), Rational(1, 3),
                                             Rational(1, 3), Rational(1, 3)});

    auto f = nice_principal_solve(catalog("F7m4"), full_mask(7));
    CHECK(f.status == NicenessSolution::Status::nice);
    CHECK(f.unique);
    CHECK(f.weights[0] == 0);
    for (int i = 1; i < 7; ++i)
        CHECK(f.weights[i] == Rational(1, 4));
    CHECK_THROWS(nice_principal_solve(catalog("F7"), 0));
}

TEST_CASE("niceness: uniform matroids")
{
    // An (r-1)-set extends to a basis in n-r+1 ways.
    auto u = nice_principal_solve(Matroid::uniform(2, 5), full_mask(5));
    CHECK(u.status == NicenessSolution::Status::nice);
    for (const auto& w : u.weights)
        CHECK(w == Rational(1, 4));
    auto d = nice_cotruncation_solve(Matroid::uniform(2, 5), full_mask(5));
    CHECK(d.status == NicenessSolution::Status::nice);
    for (const auto& w : d.weights)
        CHECK(w == Rational(1, 3));
    CHECK_THROWS(nice_cotruncation_solve(Matroid::uniform(2, 5), 0));
    auto z = nice_cotruncation_solve(Matroid::uniform(0, 3), full_mask(3));
    CHECK(z.status == NicenessSolution::Status::nice);
    CHECK(z.weights == std::vector<Rational>(3, Rational(1)));
    auto two = nice_cotruncation_solve(direct_sum(Matroid::uniform(1, 1), Matroid::uniform(1, 1)), bit(0));
    CHECK(two.status != NicenessSolution::Status::inconsistent);
}

TEST_CASE("unit systems")
{
    auto a = solve_unit_system({{1}, {1}}, 1);
    CHECK(a.status == NicenessSolution::Status::nice);
    auto b = solve_unit_system({{1, 0}, {1, 1}, {0, 1}}, 2);
    CHECK(b.status == NicenessSolution::Status::inconsistent);
    CHECK(b.weights.empty());
    auto c = solve_unit_system({{1, 1}}, 2);
    CHECK(c.status == NicenessSolution::Status::nice);
    CHECK_FALSE(c.unique);
    CHECK(c.kernel_dim == 1);
    CHECK(c.weights[0] + c.weights[1] == 1);
    CHECK(c.weights[0] >= 0);
    CHECK(c.weights[1] >= 0);
    auto d = solve_unit_system({{1, 1, 0}, {0, 1, 0}, {0, 1, 1}}, 3);
    // lambda1 = 1 forces lambda0 = lambda2 = 0.
    CHECK(d.status == NicenessSolution::Status::nice);
    CHECK(d.weights == std::vector<Rational>{0, 1, 0});
    auto e = solve_unit_system({{1, 1}, {1, 0}, {0, 1}}, 2);
    CHECK(e.status == NicenessSolution::Status::inconsistent);
    auto f = solve_unit_system({{1, 1, 1}, {1, 0, 0}, {0, 1, 1}}, 3);
    CHECK(f.status == NicenessSolution::Status::inconsistent);
    auto g = solve_unit_system({{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 1}}, 4);
    REQUIRE(g.status == NicenessSolution::Status::nice);
    CHECK(g.kernel_dim == 1);
    CHECK(g.weights[0] + g.weights[1] == 1);
    CHECK(g.weights[1] + g.weights[2] + g.weights[3] == 1);
    CHECK_THROWS(solve_unit_system({{1, 1}}, 3));
}

TEST_CASE("transversal weights")
{
    const auto m22 = catalog_entry("M_{2,2}");
    REQUIRE(m22.presentation);
    auto r = transversal_weight_verify(*m22.presentation, m_family_weights(2, 2));
    CHECK(r.uniform);
    for (const auto& [s, v] : r.values)
        CHECK(v == doctest::Approx(1.0));

    Presentation w3{6, {mask_of({3, 4, 5}), mask_of({0, 1, 5}), mask_of({1, 2, 3})}};
    auto w = transversal_weight_verify(w3, unit_weights(w3));
    CHECK_FALSE(w.uniform);
    bool one = false, two = false;
    for (const auto& [s, v] : w.values) {
        if (s == mask_of({0, 2, 4}))
            one = v == doctest::Approx(1.0);
        if (s == mask_of({1, 3, 5}))
            two = v == doctest::Approx(2.0);
    }
    CHECK(one);
    CHECK(two);

    Presentation both{4, {mask_of({0, 1, 2, 3}), mask_of({0, 1, 2, 3})}};
    auto u = transversal_weight_verify(both, unit_weights(both));
    CHECK(u.uniform);
    CHECK(u.values.size() == 6);
    CHECK(u.values.front().second == doctest::Approx(2.0));

    Presentation overlap{4, {mask_of({0, 1, 2}), mask_of({1, 2, 3})}};
    auto o = transversal_weight_verify(overlap, unit_weights(overlap));
    CHECK_FALSE(o.uniform);

    NonnegMatrix bad = unit_weights(overlap);
    bad(0, 3) = 1.0;
    CHECK_THROWS(transversal_weight_verify(overlap, bad));

    Presentation extra{3, {mask_of({0, 1}), mask_of({0, 1}), mask_of({0, 1})}};
    CHECK(transversal_weight_verify(extra, unit_weights(extra)).extra_rows);
}

TEST_CASE("matching polynomials")
{
    Graph k2{2, {{0, 1}}};
    CHECK(matching_polynomial(k2, {3.0}) == P(2, {{{}}, {{0, 1}, 3.0}}));
    CHECK(complementary_matching_polynomial(k2, {1.0}) == P(2, {{{0, 1}}, {{}}}));
    Graph tri{3, {{0, 1}, {1, 2}, {0, 2}}};
    CHECK(matching_polynomial(tri, {1, 2, 3}) == P(3, {{{}}, {{0, 1}, 1.0}, {{1, 2}, 2.0}, {{0, 2}, 3.0}}));
    Graph none{3, {}};
    CHECK(matching_polynomial(none, {}) == MaPoly::constant(3, 1.0));
    Graph c4{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    CHECK(matching_polynomial(c4, {1, 1, 1, 1}).coeff(full_mask(4)) == cplx(2.0));
    Graph loop{2, {{0, 0}}};
    CHECK_THROWS(matching_polynomial(loop, {1.0}));
    CHECK_THROWS(matching_polynomial(k2, {}));
}
