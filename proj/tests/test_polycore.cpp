#include "helpers.hpp"

#include <numbers>

using namespace th;

TEST_CASE("eval")
{
    CHECK(P(2, {{{0, 1}}}).eval({1.0, 1.0}) == cplx(1.0));
    const cplx xi(1, 1);
    CHECK(std::abs(MaPoly::elementary(2, 3).eval({xi, xi, xi}) - cplx(0, 6)) < 1e-12);
    CHECK(basis_polynomial(catalog("F7")).eval(std::vector<cplx>(7, 1.0)) == cplx(28.0));
}

TEST_CASE("leading part")
{
    CHECK(leading_part(GenPoly::from(P(2, {{{0, 1}}, {{0}}}))) == GenPoly::from(P(2, {{{0, 1}}})));
    const GenPoly h = GenPoly::from(MaPoly::elementary(2, 4));
    CHECK(leading_part(h) == h);
    CHECK(leading_part(GenPoly::from(P(3, {{{}}, {{0}}, {{0, 1}}, {{0, 2}}}))) ==
          GenPoly::from(P(3, {{{0, 1}}, {{0, 2}}})));
}

TEST_CASE("deletion and contraction")
{
    CHECK(delete_element(P(3, {{{0, 1}}, {{0, 2}}}), 0).is_zero());
    CHECK(delete_element(P(3, {{{0, 1}}, {{1, 2}}}), 0) == P(2, {{{0, 1}}}));
    CHECK(delete_element(MaPoly::elementary(2, 3), 2) == P(2, {{{0, 1}}}));
    CHECK(contract_element(P(3, {{{0, 1}}, {{0, 2}}}), 0) == P(2, {{{0}}, {{1}}}));
    CHECK(contract_element(P(2, {{{1}}}), 0).is_zero());
    CHECK(contract_element(MaPoly::elementary(2, 3), 0) == P(2, {{{0}}, {{1}}}));
    CHECK_THROWS(delete_element(P(2, {{{0}}}), 5));
}

TEST_CASE("dual")
{
    CHECK(dual(P(2, {{{0}}})) == P(2, {{{1}}}));
    CHECK(dual(dual(MaPoly::elementary(2, 3))) == MaPoly::elementary(2, 3));
    CHECK(dual(MaPoly::elementary(1, 3)) == MaPoly::elementary(2, 3));
}

TEST_CASE("parallel connection")
{
    // e is index 0 in both; Q's other element lands at index 2.
    CHECK(parallel_connection(P(1, {{{0}}}), P(1, {{{0}}}), 0, 0).poly == P(1, {{{0}}}));
    auto c = parallel_connection(P(2, {{{0}}, {{1}}}), P(2, {{{0}}, {{1}}}), 0, 0);
    CHECK(c.poly == P(3, {{{0}}, {{1}}, {{2}}}));
    CHECK(c.p_map == std::vector<int>{0, 1});
    CHECK(c.q_map == std::vector<int>{0, 2});
    CHECK(parallel_connection(P(2, {{{0}}, {{1}}}), P(1, {{{0}}}), 0, 0).poly == P(2, {{{0}}, {{1}}}));
}

TEST_CASE("series connection")
{
    auto c = series_connection(P(2, {{{0}}, {{1}}}), P(2, {{{0}}, {{1}}}), 0, 0);
    CHECK(c.poly == P(3, {{{1, 2}}, {{0, 1}}, {{0, 2}}}));
    CHECK(c.poly == MaPoly::elementary(2, 3));
    CHECK(series_connection(P(1, {{{0}}}), P(1, {{{0}}}), 0, 0).poly.is_zero());
    const MaPoly a = P(2, {{{0}}, {{1}}}), b = P(3, {{{0, 1}}, {{1, 2}}, {{0, 2}}});
    CHECK(series_connection(a, b, 0, 1).poly ==
          dual(parallel_connection(dual(a), dual(b), 0, 1).poly));
}

TEST_CASE("2-sum")
{
    auto c = two_sum(P(2, {{{0}}, {{1}}}), P(2, {{{0}}, {{1}}}), 0, 0);
    CHECK(c.poly == P(2, {{{0}}, {{1}}}));
    CHECK(c.p_map == std::vector<int>{-1, 0});
    auto d = two_sum(MaPoly::elementary(2, 3), MaPoly::elementary(2, 3), 0, 0);
    CHECK(d.poly.n() == 4);
    CHECK(d.poly.size() == 4);
    CHECK(d.poly.homogeneous());
    CHECK(d.poly.degree() == 3);
}

TEST_CASE("truncation and extension")
{
    const MaPoly e23 = MaPoly::elementary(2, 3);
    CHECK(principal_truncation(e23, {0.5, 0.5, 0.5}) == MaPoly::elementary(1, 3));
    CHECK(principal_truncation(e23, {0, 0, 0}).is_zero());
    CHECK(principal_truncation(P(2, {{{0, 1}}}), {1, 0}) == P(2, {{{1}}}));
    CHECK(principal_extension(e23, {0.5, 0.5, 0.5}) == MaPoly::elementary(2, 4));
    CHECK(principal_extension(e23, {0, 0, 0}) == e23.widen(4));
    CHECK(principal_extension(P(1, {{{0}}}), {1}) == P(2, {{{0}}, {{1}}}));
}

TEST_CASE("cotruncation and coextension")
{
    const MaPoly e13 = MaPoly::elementary(1, 3);
    CHECK(principal_cotruncation(e13, {0.5, 0.5, 0.5}) == MaPoly::elementary(2, 3));
    CHECK(dual(principal_cotruncation(e13, {0.5, 0.5, 0.5})) == principal_truncation(dual(e13), {0.5, 0.5, 0.5}));
    CHECK(principal_cotruncation(e13, {0, 0, 0}).is_zero());
    MaPoly coext = principal_coextension(e13, {0, 0, 0});
    CHECK(coext == P(4, {{{0, 3}}, {{1, 3}}, {{2, 3}}}));
}

TEST_CASE("multiaffine part")
{
    CHECK(multiaffine_part(G({{{2, 0}}, {{1, 1}}}), 3) == G({{{1, 1}}}));
    // (x0+x1+x2)(x0+x1+x3)
    GenPoly a = GenPoly::from(P(4, {{{0}}, {{1}}, {{2}}}));
    GenPoly b = GenPoly::from(P(4, {{{0}}, {{1}}, {{3}}}));
    GenPoly want = GenPoly::from(P(4, {{{0, 1}, 2.0}, {{0, 2}}, {{0, 3}}, {{1, 2}}, {{1, 3}}, {{2, 3}}}));
    CHECK(multiaffine_part(a * b, full_mask(4)) == want);
    CHECK(multiaffine_part(G({{{2}}}), 1).is_zero());
}

TEST_CASE("fold mod 2")
{
    const double al = 0.7, be = -1.3;
    GenPoly p = G({{{1}}, {{0}, al}}) * G({{{1}}, {{0}, be}});
    CHECK(fold_mod2(p, 1) == G({{{0}, 1 + al * be}, {{1}, al + be}}));
    CHECK(fold_mod2(G({{{0}}, {{2}, -1.0}}), 1).is_zero());
    const GenPoly ma = GenPoly::from(MaPoly::elementary(2, 4));
    CHECK(fold_mod2(ma, full_mask(4)) == ma);
}

TEST_CASE("convolution")
{
    CHECK(convolution(P(1, {{{}}, {{0}}}), P(1, {{{}}, {{0}, -1.0}})).is_zero());
    const MaPoly p = P(3, {{{0}}, {{1, 2}, 2.0}, {{}, cplx(0, 1)}});
    CHECK(convolution(p, MaPoly::monomial(3, full_mask(3))) == dual(p));
    CHECK(convolution(p, MaPoly::constant(3, 1.0)) == p);
}

TEST_CASE("polarization")
{
    auto pol = polarize(G({{{2}}}), {2});
    CHECK(pol.poly == P(2, {{{0, 1}}}));
    auto pol2 = polarize(G({{{2}}, {{1}, 2.0}}), {2});
    CHECK(pol2.poly == P(2, {{{0, 1}}, {{0}}, {{1}}}));
    CHECK_THROWS(polarize(G({{{3}}}), {2}));
}

TEST_CASE("Grace-Walsh-Szego witness")
{
    const MaPoly pol = polarize(G({{{2}}}), {2}).poly;
    const cplx c(0.3, 0.2);
    CHECK(std::abs(gws_witness(pol, {c, c}, Region::disc(0.0, 1.0)) - c) < 1e-9);
    const cplx w = gws_witness(pol, {cplx(1, 1), cplx(1, -1)}, Region::disc(1.0, 1.5));
    CHECK(std::abs(w * w - 2.0) < 1e-9);
    CHECK(std::abs(w - std::sqrt(2.0)) < 1e-9);
    std::mt19937_64 rng(3);
    const MaPoly e24 = polarize(GenPoly::from(MaPoly::elementary(2, 4)), {1, 1, 1, 1}).poly;
    for (int t = 0; t < 20; ++t) {
        auto pt = random_point(rng, 4);
        const cplx z = gws_witness(e24, pt, Region::right_half_plane());
        CHECK(z.real() >= -1e-7);
        CHECK(std::abs(e24.eval(std::vector<cplx>(4, z)) - e24.eval(pt)) < 1e-8 * (1 + std::abs(e24.eval(pt))));
    }
}

TEST_CASE("differential operators")
{
    CHECK(apply_diff_operator({{G({{{1, 0}}}), G({{{1, 1}}})}}) == G({{{0, 1}}}));
    CHECK(apply_diff_operator({{G({{{2}}}), G({{{2}}})}}) == G({{{0}, 2.0}}));
    const GenPoly q = G({{{1, 2}}, {{0, 1}, 3.0}});
    CHECK(apply_diff_operator({{GenPoly::constant(2, 1.0), q}}) == q);
}

TEST_CASE("coefficient slices")
{
    auto s = coefficient_slices(G({{{2, 1}}, {{0, 1}}}), 0);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == G({{{1}}}));
    CHECK(s[1].is_zero());
    CHECK(s[2] == G({{{1}}}));
    const MaPoly p = P(2, {{{0, 1}}, {{1}}, {{}}});
    auto t = coefficient_slices(GenPoly::from(p), 0);
    REQUIRE(t.size() == 2);
    CHECK(t[0] == GenPoly::from(delete_element(p, 0)));
    CHECK(t[1] == GenPoly::from(contract_element(p, 0)));
    CHECK(coefficient_slices(GenPoly::constant(1, 2.0), 0).size() == 1);
}

TEST_CASE("Fettweis transform")
{
    const GenPoly aff = G({{{0}}, {{1}}});
    CHECK(fettweis_transform(aff, 0, 0, 1) == aff);
    const GenPoly q = G({{{0}, 1.0}, {{1}, 2.0}, {{2}, 3.0}});
    CHECK(fettweis_transform(q, 0, 0, 1) == G({{{0}, 2.0}, {{1}, 2.0}}));
    CHECK(fettweis_transform(q, 0, 2, 2) == G({{{2}, 6.0}}));
}

TEST_CASE("same phase")
{
    auto a = same_phase(GenPoly::from(P(3, {{{0, 1}}, {{0, 2}, 2.0}})));
    CHECK(a.ok);
    CHECK(a.theta == doctest::Approx(0.0));
    auto b = same_phase(GenPoly::from(P(3, {{{0, 1}, cplx(0, 1)}, {{0, 2}, cplx(0, 1)}})));
    CHECK(b.ok);
    CHECK(b.theta == doctest::Approx(std::numbers::pi / 2));
    auto c = same_phase(GenPoly::from(P(3, {{{0, 1}}, {{0, 2}, -1.0}})));
    CHECK_FALSE(c.ok);
    REQUIRE(c.witness);
    std::set<MultiIndex> pair{c.witness->first, c.witness->second};
    CHECK(pair == std::set<MultiIndex>{MultiIndex::from_mask(mask_of({0, 1}), 3), MultiIndex::from_mask(mask_of({0, 2}), 3)});
}

TEST_CASE("ground set cap")
{
    CHECK_THROWS(MaPoly(64));
    CHECK_NOTHROW(MaPoly(63));
    CHECK_THROWS(principal_extension(MaPoly(63), Weighting(63, 0.0)));
}

TEST_CASE("multiaffine product")
{
    CHECK_THROWS_AS(P(2, {{{0}}}) * P(2, {{{0}}}), std::domain_error);
    CHECK(P(2, {{{0}}}) * P(2, {{{1}}}) == P(2, {{{0, 1}}}));
}
