#pragma once

// End-to-end verification drivers tying all modules together:
//   * verify_group_report: one group through validation, representation,
//     conjugacy, triangulation and the Euler-characteristic comparison;
//   * sweep: every admissible group of a kind up to a bound, as CSV/JSON rows;
//   * invariant_ring_report: the invariant-theory and resolution-chart side.

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "charts.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "invariant_ring.hpp"
#include "lattice.hpp"
#include "report.hpp"
#include "small_field.hpp"
#include "triangulate.hpp"

namespace wmk {

inline std::string format_generators(const std::vector<Residue>& gens) {
    std::ostringstream os;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) os << "|";
        os << gens[i][0] << ";" << gens[i][1] << ";" << gens[i][2];
    }
    return os.str();
}

inline std::string format_histogram(const std::map<int64_t, int64_t>& h) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, v] : h) {
        if (!first) os << ",";
        first = false;
        os << k << ":" << v;
    }
    os << "}";
    return os.str();
}

// --- single-group verification --------------------------------------------------

inline VerificationReport verify_group_report(const GroupSpec& spec) {
    VerificationReport rep;
    rep.mode = "verify";
    rep.add_context("kind", kind_name(spec.kind));
    rep.add_context("r", spec.r);
    rep.add_context("generators", format_generators(spec.hgens));

    ValidationResult val = validate_normal_form(spec);
    for (const auto& line : val.lines) {
        Check c;
        c.name = "normal-form/" + line.check;
        c.claim = line.detail.empty() ? "structural requirement of the normal form"
                                      : line.detail;
        c.pass = line.ok;
        rep.add(std::move(c));
    }
    if (!val.ok) return rep;

    GroupTable table = enumerate_group(spec);
    const GroupCtx& ctx = table.ctx;
    FieldCtx F = field_for_group(ctx);
    rep.add_context("hsize", ctx.hsize());
    rep.add_context("order", table.order());
    rep.add_context("field", F.describe());

    {
        Check c;
        c.name = "character-field";
        c.claim = "the smallest power of 3 whose unit group hosts an exact root of unity "
                  "of the diagonal order";
        FieldElement zeta = F.root_of_unity(uint64_t(ctx.s));
        c.with("s", ctx.s)
            .with("degree", int64_t(F.degree()))
            .with("modulus", poly_to_string(F.modulus()))
            .with("root_order", int64_t(F.element_order(zeta)));
        c.pass = int64_t(F.element_order(zeta)) == ctx.s;
        rep.add(std::move(c));
    }
    {
        Check c;
        c.name = "group-order";
        c.claim = "the enumerated group has exactly #H * (rotations x reflections) elements";
        int64_t expect = ctx.hsize() * (spec.kind == GroupKind::S3 ? 6 : 3);
        c.with("enumerated", table.order()).with("expected", expect);
        c.pass = table.order() == expect;
        rep.add(std::move(c));
    }
    {
        // deterministic sample of products checked against matrix multiplication
        Check c;
        c.name = "representation-multiplicative";
        c.claim = "monomial-matrix images multiply exactly like the abstract elements";
        size_t n = table.elements.size();
        size_t samples = std::min<size_t>(500, n * n);
        bool ok = true;
        size_t i = 1, j = 2;
        for (size_t k = 0; k < samples && ok; ++k) {
            i = (i * 31 + 7) % n;
            j = (j * 37 + 11) % n;
            try {
                MonomialElement p = multiply_and_matrix_consistency(table.elements[i],
                                                                    table.elements[j], ctx, F);
                ok = std::binary_search(
                    table.elements.begin(), table.elements.end(), p,
                    [&](const MonomialElement& a, const MonomialElement& b) {
                        return element_key(a, ctx) < element_key(b, ctx);
                    });
            } catch (const RepresentationError&) {
                ok = false;
            }
        }
        c.with("sampled_products", uint64_t(samples));
        c.pass = ok;
        rep.add(std::move(c));
    }
    {
        Check c;
        c.name = "representation-faithful";
        c.claim = "distinct elements have distinct matrix images";
        std::set<std::array<uint64_t, 9>> images;
        for (const auto& g : table.elements) {
            FieldMat3 m = to_matrix(g, ctx, F);
            std::array<uint64_t, 9> key{};
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) key[size_t(a * 3 + b)] = F.to_int(m.at(a, b));
            images.insert(key);
        }
        c.with("distinct_images", uint64_t(images.size())).with("order", table.order());
        c.pass = int64_t(images.size()) == table.order();
        rep.add(std::move(c));
    }
    {
        Check c;
        c.name = "smallness";
        c.claim = "no pseudo-reflections, determinant-1 throughout, no nontrivial scalars";
        auto pr = pseudo_reflections(table, F);
        auto det = determinant_offenders(table, F);
        auto sc = scalar_offenders(table);
        c.with("pseudo_reflections", uint64_t(pr.size()))
            .with("determinant_offenders", uint64_t(det.size()))
            .with("scalar_offenders", uint64_t(sc.size()));
        c.pass = pr.empty() && det.empty() && sc.empty();
        rep.add(std::move(c));
    }

    ConjugacyClasses classes = conjugacy_classes_bruteforce(table);
    {
        Check c;
        c.name = "conjugacy-count";
        c.claim = "brute-force class count equals the closed-form count";
        int64_t formula = conjugacy_count_formula(ctx);
        ClassCensus census = class_census(table);
        c.with("bruteforce", classes.count)
            .with("formula", formula)
            .with("size_histogram", format_histogram(classes.size_histogram))
            .with("diagonal_classes", census.diag_classes)
            .with("rotation_classes", census.rot_classes)
            .with("reflection_classes", census.refl_classes);
        int64_t sum = 0;
        for (int64_t s : classes.sizes) sum += s;
        c.with("class_size_sum", sum);
        c.pass = (classes.count == formula) && (sum == table.order());
        rep.add(std::move(c));
    }

    LatticeGamma gamma = lattice_for(ctx);
    Triangulation tri = spec.kind == GroupKind::S3 ? triangulate_s3(spec.r)
                                                   : triangulate_c3(gamma);
    TriangulationAudit audit = audit_triangulation(tri, gamma);
    {
        Check c;
        c.name = "triangulation-audit";
        c.claim = "equivariant unimodular triangulation of the junior simplex";
        c.with("points", uint64_t(tri.points.size()))
            .with("triangles", uint64_t(tri.triangles.size()));
        for (const auto& line : audit.lines) c.with(line.check, line.ok);
        c.pass = audit.ok;
        rep.add(std::move(c));
    }

    OrbitClassification cls = orbit_classify(tri);
    int64_t chi = euler_characteristic(cls, spec.kind);
    {
        Check c;
        c.name = "euler-characteristic";
        c.claim = spec.kind == GroupKind::C3
                      ? "fiber Euler characteristic equals the conjugacy class count"
                      : "fiber Euler characteristic equals the class count plus three";
        int64_t expected = classes.count + (spec.kind == GroupKind::S3 ? 3 : 0);
        c.with("free_orbits", cls.free_orbits)
            .with("central_orbits", cls.tau_orbits)
            .with("swap_orbits", cls.transposition_orbits)
            .with("chi", chi)
            .with("expected", expected);
        c.pass = (chi == expected);
        rep.add(std::move(c));
    }
    {
        Check c;
        c.name = "face-counts";
        c.claim = "the subdivision is a disk: V - E + F = 1, with the matching "
                  "point-count polynomial";
        FaceCounts fc = face_counts(tri);
        c.with("vertices", fc.vertices).with("edges", fc.edges).with("faces", fc.triangles);
        c.with("euler_relation", fc.vertices - fc.edges + fc.triangles);
        c.with("points_q3", count_polynomial_value(fc, 3))
            .with("points_q9", count_polynomial_value(fc, 9))
            .with("points_q27", count_polynomial_value(fc, 27));
        c.pass = (fc.vertices - fc.edges + fc.triangles == 1);
        rep.add(std::move(c));
    }
    return rep;
}

// --- sweeps ----------------------------------------------------------------------

struct SweepRow {
    GroupKind kind = GroupKind::C3;
    int64_t r = 1;
    std::string generators;
    int64_t hsize = 0;
    int64_t order = 0;
    int64_t classes_bruteforce = 0;
    int64_t classes_formula = 0;
    int64_t triangles = 0;
    int64_t free_orbits = 0;
    int64_t transposition_orbits = 0;
    int64_t chi = 0;
    int64_t chi_expected = 0;
    bool match = false;
};

inline SweepRow sweep_row_for(const GroupSpec& spec) {
    SweepRow row;
    row.kind = spec.kind;
    row.r = spec.r;
    row.generators = format_generators(spec.hgens);
    GroupTable table = enumerate_group(spec);
    row.hsize = table.ctx.hsize();
    row.order = table.order();
    row.classes_bruteforce = conjugacy_classes_bruteforce(table).count;
    row.classes_formula = conjugacy_count_formula(table.ctx);
    LatticeGamma gamma = lattice_for(table.ctx);
    Triangulation tri = spec.kind == GroupKind::S3 ? triangulate_s3(spec.r)
                                                   : triangulate_c3(gamma);
    TriangulationAudit audit = audit_triangulation(tri, gamma);
    OrbitClassification cls = orbit_classify(tri);
    row.triangles = int64_t(tri.triangles.size());
    row.free_orbits = cls.free_orbits;
    row.transposition_orbits = cls.transposition_orbits;
    row.chi = euler_characteristic(cls, spec.kind);
    row.chi_expected = row.classes_bruteforce + (spec.kind == GroupKind::S3 ? 3 : 0);
    row.match = audit.ok && (row.chi == row.chi_expected) &&
                (row.classes_bruteforce == row.classes_formula);
    return row;
}

// All admissible cyclic-kind groups generated by a residue (1, a, r-1-a),
// r <= max_r.  Candidates failing structural validation are skipped.
inline std::vector<SweepRow> sweep_cyclic(int64_t max_r) {
    std::vector<SweepRow> rows;
    for (int64_t r = 1; r <= max_r; ++r) {
        if (r % 3 == 0) continue;
        std::set<std::vector<Residue>> seen;
        for (int64_t a = 0; a < r; ++a) {
            Residue gen{mod_nonneg(1, r), a, mod_nonneg(r - 1 - a, r)};
            GroupSpec spec{GroupKind::C3, r, {gen}};
            if (!validate_normal_form(spec).ok) continue;
            rows.push_back(sweep_row_for(spec));
        }
    }
    return rows;
}

// All symmetric-kind groups (full sum-zero lattice) with r <= max_r.
inline std::vector<SweepRow> sweep_symmetric(int64_t max_r) {
    std::vector<SweepRow> rows;
    for (int64_t r = 1; r <= max_r; ++r) {
        if (r % 3 == 0) continue;
        std::vector<Residue> gens;
        if (r > 1)
            gens = {Residue{1, 0, mod_nonneg(-1, r)}, Residue{0, 1, mod_nonneg(-1, r)}};
        else
            gens = {Residue{0, 0, 0}};
        GroupSpec spec{GroupKind::S3, r, gens};
        if (!validate_normal_form(spec).ok) continue;
        rows.push_back(sweep_row_for(spec));
    }
    return rows;
}

inline std::string sweep_csv_header() {
    return "kind,r,generators,hsize,group_order,classes_bruteforce,classes_formula,"
           "triangles,free_orbits,transposition_orbits,chi,chi_expected,match";
}

inline std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << sweep_csv_header() << "\n";
    for (const SweepRow& x : rows) {
        os << kind_name(x.kind) << "," << x.r << "," << x.generators << "," << x.hsize << ","
           << x.order << "," << x.classes_bruteforce << "," << x.classes_formula << ","
           << x.triangles << "," << x.free_orbits << "," << x.transposition_orbits << ","
           << x.chi << "," << x.chi_expected << "," << (x.match ? "true" : "false") << "\n";
    }
    return os.str();
}

inline nlohmann::ordered_json sweep_to_json(const std::vector<SweepRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SweepRow& x : rows) {
        nlohmann::ordered_json j;
        j["kind"] = kind_name(x.kind);
        j["r"] = x.r;
        j["generators"] = x.generators;
        j["hsize"] = x.hsize;
        j["group_order"] = x.order;
        j["classes_bruteforce"] = x.classes_bruteforce;
        j["classes_formula"] = x.classes_formula;
        j["triangles"] = x.triangles;
        j["free_orbits"] = x.free_orbits;
        j["transposition_orbits"] = x.transposition_orbits;
        j["chi"] = x.chi;
        j["chi_expected"] = x.chi_expected;
        j["match"] = x.match;
        arr.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["schema"] = 1;
    out["tool"] = "wildmckay";
    out["mode"] = "sweep";
    out["rows"] = std::move(arr);
    bool all = true;
    for (const SweepRow& x : rows) all = all && x.match;
    out["count"] = rows.size();
    out["pass"] = all;
    return out;
}

// --- invariant-ring / resolution verification -------------------------------------

inline VerificationReport invariant_ring_report(int64_t max_degree,
                                                const std::vector<unsigned>& field_degrees,
                                                int64_t filtration) {
    VerificationReport rep;
    rep.mode = "invariant-ring";
    rep.add_context("max_degree", max_degree);
    rep.add_context("filtration", filtration);
    {
        std::ostringstream os;
        for (size_t i = 0; i < field_degrees.size(); ++i) {
            if (i) os << ",";
            uint32_t q = 1;
            for (unsigned k = 0; k < field_degrees[i]; ++k) q *= 3;
            os << q;
        }
        rep.add_context("scan_fields", os.str());
    }

    RelationSearch rs = discover_relation();
    {
        Check c;
        c.name = "relation-discovery";
        c.claim = "the weight-6 monomials admit exactly one linear relation, the pinned one";
        c.with("candidates", uint64_t(rs.candidate_monomials))
            .with("kernel_dimension", uint64_t(rs.kernel_dimension))
            .with("relation", rs.relation.is_zero() ? "-" : rs.relation.to_string())
            .with("matches_pinned", rs.matches_pinned)
            .with("expansion_vanishes", rs.expansion_vanishes);
        c.pass = rs.kernel_dimension == 1 && rs.matches_pinned && rs.expansion_vanishes;
        rep.add(std::move(c));
    }
    {
        Check c;
        c.name = "relation-variant-rejected";
        c.claim = "the lowered-exponent variant is inhomogeneous and does not vanish";
        c.with("variant", rs.rejected_variant.to_string())
            .with("homogeneous", rs.variant_homogeneous)
            .with("vanishes", rs.variant_vanishes)
            .with("residual_terms", uint64_t(rs.variant_residual.terms().size()));
        c.pass = !rs.variant_homogeneous && !rs.variant_vanishes;
        rep.add(std::move(c));
    }
    {
        SeriesAudit audit = audit_invariant_series(max_degree);
        Check c;
        c.name = "series-audit";
        c.claim = "fixed-space dimensions agree with orbit counts and the closed-form "
                  "series; generators span; the single syzygy enters at weight 6";
        c.with("max_degree", audit.max_degree)
            .with("dims", join_values(audit.fixed_space_dims))
            .with("dims_agree", audit.dims_agree)
            .with("generation_ok", audit.generation_ok)
            .with("syzygies_match", audit.syzygies_match)
            .with("first_syzygy_degree", audit.first_syzygy_degree);
        c.pass = audit.ok;
        rep.add(std::move(c));
    }
    {
        ReflectionAction act = reflection_action_on_generators();
        Check c;
        c.name = "reflection-action";
        c.claim = "the order-2 symmetry acts by (-y1, y2, -y3, y4 - y1 y2) and fixes "
                  "the relation";
        c.with("images_match", act.images_match)
            .with("involution", act.involution)
            .with("relation_preserved", act.relation_preserved);
        c.pass = act.images_match && act.involution && act.relation_preserved;
        rep.add(std::move(c));
    }
    {
        ChartAtlas atlas = build_chart_atlas();
        Check c;
        c.name = "chart-atlas";
        c.claim = "both stage-1 charts factor exactly, the involution descends, and "
                  "all six stage-2 pieces certify (with unit witnesses for the "
                  "redundant ones)";
        c.with("vertical_identity", atlas.vertical.identity_holds)
            .with("horizontal_identity", atlas.horizontal.identity_holds)
            .with("vertical_action", atlas.vertical.action_preserves_equation)
            .with("horizontal_action", atlas.horizontal.action_preserves_equation);
        for (const ChartFactorization& p : atlas.pieces) c.with(p.name, p.identity_holds);
        c.with("parametrization_annihilates", atlas.t1_parametrization_annihilates)
            .with("unit_witnesses", atlas.units_ok);
        c.pass = atlas.ok;
        rep.add(std::move(c));
    }
    for (const CrepancyRecord& rec : exceptional_multiplicities()) {
        Check c;
        c.name = "multiplicity/" + rec.name;
        c.claim = "multiplicity 2 along a codimension-3 center: discrepancy 0 (crepant)";
        c.with("codimension", rec.rewrite.codimension)
            .with("multiplicity", rec.rewrite.multiplicity)
            .with("discrepancy", rec.rewrite.discrepancy)
            .with("rewritten", rec.rewrite.rewritten.to_string());
        c.pass = rec.rewrite.codimension == 3 && rec.rewrite.multiplicity == 2 &&
                 rec.rewrite.discrepancy == 0;
        rep.add(std::move(c));
    }
    for (const QuotientPresentation& q :
         {first_piece_presentation(), second_piece_presentation(),
          mirror_piece_presentation()}) {
        PresentationCertificate cert = certify_presentation(q, filtration);
        Check c;
        c.name = "presentation/" + q.name;
        c.claim = "invariant generators and relations present the quotient: dimensions "
                  "match degreewise through the filtration bound";
        c.with("involution", cert.action_is_involution)
            .with("ideal_preserved", cert.ideal_preserved)
            .with("generators_invariant", cert.generators_invariant)
            .with("relations_vanish", cert.relations_vanish)
            .with("weights_consistent", cert.weights_consistent)
            .with("fixed_dims", join_values(cert.fixed_dims))
            .with("presented_dims", join_values(cert.presented_dims))
            .with("image_ranks", join_values(cert.image_ranks))
            .with("dims_match", cert.dims_match);
        c.pass = cert.ok;
        rep.add(std::move(c));
    }
    for (unsigned m : field_degrees) {
        SmallField F = SmallField::make(m);
        for (const ScanSystem& sys : all_scan_systems()) {
            ScanResult res = scan_singular_locus(sys.name, sys.equations, sys.claimed, F);
            Check c;
            c.name = "scan/" + sys.name + "/q" + std::to_string(F.q);
            c.claim = "exhaustive singular-locus scan agrees with the claimed locus";
            c.with("points_scanned", res.points_scanned)
                .with("variety_points", res.variety_points)
                .with("singular_points", res.singular_points)
                .with("claimed_points", res.claimed_points)
                .with("expected_count", sys.expected_count(F.q))
                .with("match", res.match);
            c.pass = res.match && int64_t(res.singular_points) == sys.expected_count(F.q);
            rep.add(std::move(c));
        }
    }
    return rep;
}

}  // namespace wmk
