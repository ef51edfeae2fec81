#include "catch2/catch_amalgamated.hpp"
#include "wildmckay/charts.hpp"
#include "wildmckay/small_field.hpp"

using namespace wmk;

TEST_CASE("stage-1 chart identities and induced involutions") {
    ChartIdentity t = verify_t_chart();
    CHECK(t.identity_holds);
    CHECK(t.action_preserves_equation);
    CHECK(t.action_is_involution);
    CHECK(t.strict_transform.to_string() == "y1*y3 + y1*tu^3 + 2*y1*tu*tv + tv^2");

    ChartIdentity u = verify_u_chart();
    CHECK(u.identity_holds);
    CHECK(u.action_preserves_equation);
    CHECK(u.action_is_involution);
    CHECK(u.strict_transform.to_string() == "y2*y3*ut^3 + 2*y2*ut*uv + y2 + uv^2");
}

TEST_CASE("stage-2 factorization identities hold in all six pieces") {
    ChartAtlas atlas = build_chart_atlas();
    CHECK(atlas.ok);
    REQUIRE(atlas.pieces.size() == 6);
    for (const ChartFactorization& p : atlas.pieces) {
        INFO(p.name);
        CHECK(p.identity_holds);
    }
    CHECK(atlas.t1_parametrization_annihilates);
    CHECK(atlas.t1_pullback.is_zero());
    CHECK(atlas.units_ok);
    CHECK(atlas.unit_vertical_3.to_string() == "1");
    CHECK(atlas.unit_horizontal_1.to_string() == "1");
    CHECK(atlas.unit_horizontal_3.to_string() == "1");

    // the two interesting pieces share the same normal form
    CHECK(atlas.pieces[1].strict_transform.to_string() == "2*tu*t21*t23 + t21 + t23^2");
    CHECK(atlas.pieces[4].strict_transform.to_string() == "2*ut*u21*u23 + u21 + u23^2");
}

TEST_CASE("multiplicity along the three resolution centers") {
    std::vector<CrepancyRecord> recs = exceptional_multiplicities();
    REQUIRE(recs.size() == 3);
    for (const CrepancyRecord& rec : recs) {
        INFO(rec.name);
        CHECK(rec.rewrite.codimension == 3);
        CHECK(rec.rewrite.multiplicity == 2);
        CHECK(rec.rewrite.discrepancy == 0);
        CHECK(rec.rewrite.steps.size() == 3);
    }

    // frozen rewritten normal forms
    {
        PolyRing E{{"y1", "y2", "y3", "y4", "w1", "w2", "w3"}};
        MPoly y3 = MPoly::variable(E, 2), w1 = MPoly::variable(E, 4),
              w2 = MPoly::variable(E, 5), w3 = MPoly::variable(E, 6);
        CHECK(recs[0].rewrite.rewritten ==
              w3.pow(2) + w2.pow(3) + w1.pow(3) * y3 - w1 * w2 * w3);
    }
    {
        PolyRing E{{"y1", "y3", "tu", "tv", "w1", "w2", "w3"}};
        MPoly tu = MPoly::variable(E, 2), w1 = MPoly::variable(E, 4),
              w2 = MPoly::variable(E, 5), w3 = MPoly::variable(E, 6);
        CHECK(recs[1].rewrite.rewritten == w3.pow(2) + w1 * w2 - tu * w1 * w3);
    }
    {
        PolyRing E{{"y2", "y3", "ut", "uv", "w1", "w2", "w3"}};
        MPoly ut = MPoly::variable(E, 2), w1 = MPoly::variable(E, 4),
              w2 = MPoly::variable(E, 5), w3 = MPoly::variable(E, 6);
        CHECK(recs[2].rewrite.rewritten == w3.pow(2) + w1 * w2 - ut * w1 * w3);
    }
}

TEST_CASE("multiplicity rewrite: textbook cases and unsupported shapes") {
    PolyRing R{{"x", "y", "z"}};
    MPoly x = MPoly::variable(R, 0), y = MPoly::variable(R, 1), z = MPoly::variable(R, 2);

    // ordinary double point: multiplicity 2 in a codimension-3 center
    CenterRewrite odp = multiplicity_along_center(x.pow(2) + y * z, {x, y, z});
    CHECK(odp.multiplicity == 2);
    CHECK(odp.discrepancy == 0);

    // plane curve node: codimension-2 center, discrepancy -1
    CenterRewrite node = multiplicity_along_center(x.pow(2) + y.pow(2), {x, y});
    CHECK(node.multiplicity == 2);
    CHECK(node.discrepancy == -1);

    // monomial-coefficient solve: w = z^3 x + 1 rewrites x*y cleanly? no:
    // the x-coefficient y is not divisible by z^3, and no other variable is
    // linear in the generator, so the shape is unsupported
    CHECK_THROWS_AS(multiplicity_along_center(x * y, {z.pow(3) * x + MPoly::constant(R, 1)}),
                    UnsupportedCenter);
    // no generator variable is linear at all
    CHECK_THROWS_AS(multiplicity_along_center(x, {x.pow(2) + y.pow(2)}), UnsupportedCenter);

    // monomial-coefficient solve that does work: f = z^6 x^2 + y,
    // center w = z^3 x (A = z^3): f rewrites to w1^2 + y with multiplicity 0
    // (the center is a divisor on neither factor); sanity-check the mechanics
    CenterRewrite mono = multiplicity_along_center(z.pow(6) * x.pow(2) + y, {z.pow(3) * x});
    PolyRing E{{"x", "y", "z", "w1"}};
    CHECK(mono.rewritten ==
          MPoly::variable(E, 3).pow(2) + MPoly::variable(E, 1));
    CHECK(mono.multiplicity == 0);
}

TEST_CASE("normal-form reduction by the square rewrite rule") {
    QuotientPresentation q = second_piece_presentation();
    const PolyRing& R = q.chart_ring;
    MPoly tu = MPoly::variable(R, 1), t21 = MPoly::variable(R, 2), t23 = MPoly::variable(R, 3);

    CHECK(chart_normal_form(q, q.chart_relations[0]).is_zero());
    CHECK(chart_normal_form(q, t23.pow(2)) == tu * t21 * t23 - t21);
    // t23^3 reduces in two steps
    MPoly expected = tu.pow(2) * t21.pow(2) * t23 - tu * t21.pow(2) - t21 * t23;
    CHECK(chart_normal_form(q, t23.pow(3)) == expected);
    // degree in the rewrite variable is at most 1 after reduction
    CHECK(chart_normal_form(q, (t23 + t21).pow(4)).degree_in(3) <= 1);
}

TEST_CASE("quotient presentations certify through filtration weight 8") {
    for (const QuotientPresentation& q :
         {first_piece_presentation(), second_piece_presentation(),
          mirror_piece_presentation()}) {
        PresentationCertificate cert = certify_presentation(q, 8);
        INFO(cert.name);
        CHECK(cert.ok);
        CHECK(cert.relation_reduces);
        CHECK(cert.action_is_involution);
        CHECK(cert.ideal_preserved);
        CHECK(cert.generators_invariant);
        CHECK(cert.relations_vanish);
        CHECK(cert.weights_consistent);
        CHECK(cert.dims_match);
    }

    PresentationCertificate c1 = certify_presentation(first_piece_presentation(), 4);
    CHECK(c1.fixed_dims == std::vector<int64_t>{1, 2, 6, 10, 19});
    CHECK(c1.presented_dims == c1.fixed_dims);
    CHECK(c1.image_ranks == c1.fixed_dims);

    PresentationCertificate c2 = certify_presentation(second_piece_presentation(), 4);
    CHECK(c2.fixed_dims == std::vector<int64_t>{1, 2, 7, 12, 25});
    CHECK(c2.presented_dims == c2.fixed_dims);
    CHECK(c2.image_ranks == c2.fixed_dims);

    PresentationCertificate c3 = certify_presentation(mirror_piece_presentation(), 4);
    CHECK(c3.fixed_dims == c2.fixed_dims);
}

TEST_CASE("table field agrees with the exact field arithmetic") {
    for (unsigned m : {1u, 2u, 3u}) {
        SmallField F = SmallField::make(m);
        FieldCtx ctx = FieldCtx::of_degree(m);
        CHECK(F.q == ctx.order());
        // sampled agreement between table and exact operations
        uint32_t step = std::max<uint32_t>(1, F.q / 17);
        for (uint32_t a = 0; a < F.q; a += step)
            for (uint32_t b = 0; b < F.q; b += step) {
                FieldElement ea = ctx.from_int(a), eb = ctx.from_int(b);
                CHECK(F.add(uint16_t(a), uint16_t(b)) == ctx.to_int(ctx.add(ea, eb)));
                CHECK(F.mul(uint16_t(a), uint16_t(b)) == ctx.to_int(ctx.mul(ea, eb)));
            }
        for (uint32_t a = 1; a < F.q; a += step) {
            CHECK(F.mul(uint16_t(a), F.inv(uint16_t(a))) == 1);
            CHECK(F.add(uint16_t(a), F.neg(uint16_t(a))) == 0);
            CHECK(F.pow(uint16_t(a), F.q - 1) == 1);  // unit group order
        }
        CHECK_THROWS_AS(F.inv(0), DivisionByZero);
    }
}

TEST_CASE("compiled evaluation matches substitution of constants") {
    PolyRing R{{"x", "y"}};
    MPoly f = MPoly::variable(R, 0).pow(3) * MPoly::variable(R, 1) +
              2 * MPoly::variable(R, 0) + MPoly::constant(R, 1);
    SmallField F = SmallField::make(2);
    CompiledPoly cp = CompiledPoly::compile(f, F);
    FieldCtx ctx = FieldCtx::of_degree(2);
    for (uint16_t a = 0; a < 9; ++a)
        for (uint16_t b = 0; b < 9; ++b) {
            FieldElement ea = ctx.from_int(a), eb = ctx.from_int(b);
            FieldElement direct = ctx.add(
                ctx.add(ctx.mul(ctx.pow(ea, 3), eb), ctx.mul(ctx.from_int(2), ea)),
                ctx.one());
            CHECK(cp.eval(F, {a, b}) == ctx.to_int(direct));
        }
}

TEST_CASE("singular-locus scans over the 3-element field") {
    SmallField F3 = SmallField::make(1);
    std::vector<ScanSystem> systems = all_scan_systems();
    REQUIRE(systems.size() == 12);
    for (const ScanSystem& sys : systems) {
        ScanResult res = scan_singular_locus(sys.name, sys.equations, sys.claimed, F3);
        INFO(sys.name);
        CHECK(res.match);
        CHECK(int64_t(res.singular_points) == sys.expected_count(F3.q));
        CHECK(res.first_mismatch.empty());
    }
}

TEST_CASE("singular-locus scans over the 9-element field") {
    SmallField F9 = SmallField::make(2);
    for (const ScanSystem& sys : all_scan_systems()) {
        ScanResult res = scan_singular_locus(sys.name, sys.equations, sys.claimed, F9);
        INFO(sys.name);
        CHECK(res.match);
        CHECK(int64_t(res.singular_points) == sys.expected_count(F9.q));
    }
}

TEST_CASE("scan detects a wrong singular-locus claim") {
    SmallField F3 = SmallField::make(1);
    const PolyRing& Y = y_ring();
    // drop the y4 generator: claimed locus too big, mismatch must be reported
    ScanResult res = scan_singular_locus(
        "deliberately-wrong", {relation_polynomial()},
        {MPoly::variable(Y, 0), MPoly::variable(Y, 1)}, F3);
    CHECK_FALSE(res.match);
    CHECK_FALSE(res.first_mismatch.empty());
    CHECK(res.claimed_points == 9);   // y3, y4 free
    CHECK(res.singular_points == 3);  // y3 free only
}
