// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion is self-contained, uses exact arithmetic only, and
// pins its own expected values and (where stated) a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "wildmckay/pipeline.hpp"

using namespace wmk;

namespace {

const std::vector<int64_t> kRadii = {1, 2, 4, 5, 7, 8, 10, 11, 13};

struct Criterion {
    std::string label;
    double budget_seconds;  // 0 = no stated budget
    bool (*run)();
};

// 1. Cyclic kind: chi of the resolved fiber equals the brute-force conjugacy
//    class count, which equals (#H - 1)/3 + 3, for every admissible group.
bool criterion_cyclic_main() {
    int found = 0;
    for (int64_t r : kRadii) {
        for (int64_t a = 0; a < r; ++a) {
            GroupSpec spec{GroupKind::C3, r, {Residue{mod_nonneg(1, r), a, mod_nonneg(r - 1 - a, r)}}};
            if (!validate_normal_form(spec).ok) continue;
            ++found;
            SweepRow row = sweep_row_for(spec);
            if (!row.match) return false;
            if (row.chi != row.classes_bruteforce) return false;
            if (row.classes_bruteforce != (row.hsize - 1) / 3 + 3) return false;
        }
    }
    return found == 5;  // r=1 (trivial), r=7 (two), r=13 (two)
}

// 2. Symmetric kind: chi = (r-1)(r-2)/6 + 2(r-1) + 6 = #Conj + 3 and
//    #Conj = (r-1)(r-2)/6 + 2r + 1, for every r in the list.
bool criterion_symmetric_main() {
    int found = 0;
    for (int64_t r : kRadii) {
        std::vector<Residue> gens =
            r > 1 ? std::vector<Residue>{Residue{1, 0, r - 1}, Residue{0, 1, r - 1}}
                  : std::vector<Residue>{Residue{0, 0, 0}};
        GroupSpec spec{GroupKind::S3, r, gens};
        if (!validate_normal_form(spec).ok) return false;
        ++found;
        SweepRow row = sweep_row_for(spec);
        if (!row.match) return false;
        int64_t base = (r - 1) * (r - 2) / 6;
        if (row.chi != base + 2 * (r - 1) + 6) return false;
        if (row.classes_bruteforce != base + 2 * r + 1) return false;
        if (row.chi != row.classes_bruteforce + 3) return false;
    }
    return found == int(kRadii.size());
}

// 3. Triangulations: #triangles = #H; every triangle empty and unimodular;
//    equivariant with exactly one fixed triangle (cyclic kind) or the printed
//    orbit census free=(r-1)(r-2)/6, swaps=r-1, central=1 (symmetric kind).
bool criterion_triangulations() {
    for (int64_t r : kRadii) {
        for (int64_t a = 0; a < r; ++a) {
            GroupSpec spec{GroupKind::C3, r, {Residue{mod_nonneg(1, r), a, mod_nonneg(r - 1 - a, r)}}};
            if (!validate_normal_form(spec).ok) continue;
            GroupCtx ctx = make_ctx(spec);
            LatticeGamma gamma = lattice_for(ctx);
            Triangulation tri = triangulate_c3(gamma);
            if (!audit_triangulation(tri, gamma).ok) return false;
            if (int64_t(tri.triangles.size()) != ctx.hsize()) return false;
            OrbitClassification cls = orbit_classify(tri);
            if (cls.tau_orbits != 1 || cls.transposition_orbits != 0) return false;
            if (cls.free_orbits != (ctx.hsize() - 1) / 3) return false;
        }
        std::vector<Residue> gens =
            r > 1 ? std::vector<Residue>{Residue{1, 0, r - 1}, Residue{0, 1, r - 1}}
                  : std::vector<Residue>{Residue{0, 0, 0}};
        GroupSpec spec{GroupKind::S3, r, gens};
        GroupCtx ctx = make_ctx(spec);
        LatticeGamma gamma = lattice_for(ctx);
        Triangulation tri = triangulate_s3(r);
        if (!audit_triangulation(tri, gamma).ok) return false;
        if (int64_t(tri.triangles.size()) != r * r) return false;
        if (int64_t(tri.triangles.size()) != ctx.hsize()) return false;
        OrbitClassification cls = orbit_classify(tri);
        if (cls.free_orbits != (r - 1) * (r - 2) / 6) return false;
        if (cls.transposition_orbits != r - 1) return false;
        if (cls.tau_orbits != 1) return false;
        // non-free triangles: 3*(r-1) in swap orbits + 1 central = 3r - 2
        if (3 * (r - 1) + 1 != 3 * r - 2) return false;
    }
    return true;
}

// 4. Hilbert series: fixed-space dimensions, orbit counts and the closed-form
//    rational series agree for every degree d <= 30; first seven quotient
//    values are 1,1,2,4,5,7,10; generators and the single syzygy check out.
bool criterion_hilbert_series() {
    SeriesAudit audit = audit_invariant_series(30);
    if (!audit.ok) return false;
    const std::vector<int64_t> head = {1, 1, 2, 4, 5, 7, 10};
    for (size_t i = 0; i < head.size(); ++i)
        if (audit.quotient_coeffs[i] != head[i]) return false;
    return audit.dims_agree && audit.generation_ok && audit.syzygies_match &&
           audit.first_syzygy_degree == 6;
}

// 5. Relation discovery: the weight-6 kernel is one-dimensional and equal to
//    the cubic-exponent form; the lowered-exponent variant printed elsewhere
//    is flagged (inhomogeneous, nonvanishing residual).
bool criterion_relation() {
    RelationSearch rs = discover_relation();
    if (rs.kernel_dimension != 1 || !rs.matches_pinned || !rs.expansion_vanishes) return false;
    return !rs.variant_homogeneous && !rs.variant_vanishes && !rs.variant_residual.is_zero();
}

// 6. Chart certification: every symbolic pullback/parametrization identity is
//    exact; the redundant-chart residuals are the constant 1; exhaustive
//    smoothness scans over GF(3), GF(9), GF(27) find zero singular points on
//    the certified stage-2 pieces, and the base singular locus over GF(27) is
//    exactly the 27 points of the claimed coordinate locus.
bool criterion_charts() {
    ChartAtlas atlas = build_chart_atlas();
    if (!atlas.ok) return false;
    if (atlas.unit_vertical_3.to_string() != "1") return false;
    if (atlas.unit_horizontal_1.to_string() != "1") return false;
    if (atlas.unit_horizontal_3.to_string() != "1") return false;
    for (unsigned m : {1u, 2u, 3u}) {
        SmallField F = SmallField::make(m);
        for (const ScanSystem& sys : all_scan_systems()) {
            ScanResult res = scan_singular_locus(sys.name, sys.equations, sys.claimed, F);
            if (!res.match) return false;
            if (int64_t(res.singular_points) != sys.expected_count(F.q)) return false;
            if (F.q == 27 && sys.name == "base-hypersurface" && res.singular_points != 27)
                return false;
        }
    }
    return true;
}

// 7. Crepancy: all three contraction centers have multiplicity 2 in
//    codimension 3, hence discrepancy 3 - 2 - 1 = 0.
bool criterion_crepancy() {
    for (const CrepancyRecord& rec : exceptional_multiplicities()) {
        if (rec.rewrite.multiplicity != 2) return false;
        if (rec.rewrite.codimension != 3) return false;
        if (rec.rewrite.discrepancy != 0) return false;
    }
    return true;
}

// 8. Representation faithfulness: ten thousand random symbolic products match
//    matrix products over the exact extension fields, and the defining
//    relations S^3 = T^2 = I, S^-1 T S = S T hold.
bool criterion_representation() {
    struct CaseSpec {
        GroupSpec spec;
        size_t products;
    };
    std::vector<CaseSpec> cases = {
        {GroupSpec{GroupKind::C3, 7, {Residue{1, 2, 4}}}, 5000},
        {GroupSpec{GroupKind::S3, 13, {Residue{1, 0, 12}, Residue{0, 1, 12}}}, 5000},
    };
    std::mt19937 rng(20240817);
    for (const CaseSpec& cs : cases) {
        GroupTable table = enumerate_group(cs.spec);
        FieldCtx F = field_for_group(table.ctx);
        std::uniform_int_distribution<size_t> pick(0, table.elements.size() - 1);
        for (size_t k = 0; k < cs.products; ++k) {
            try {
                multiply_and_matrix_consistency(table.elements[pick(rng)],
                                                table.elements[pick(rng)], table.ctx, F);
            } catch (const RepresentationError&) {
                return false;
            }
        }
        const GroupCtx& ctx = table.ctx;
        MonomialElement S = element_S(), I = element_identity();
        if (!(element_mul(element_mul(S, S, ctx), S, ctx) == I)) return false;
        if (cs.spec.kind == GroupKind::S3) {
            MonomialElement T = element_T(ctx);
            if (!(element_mul(T, T, ctx) == I)) return false;
            MonomialElement lhs = element_mul(element_mul(element_inv(S, ctx), T, ctx), S, ctx);
            if (!(lhs == element_mul(S, T, ctx))) return false;
        }
    }
    return true;
}

// 9. Quotient presentations: all three invariant presentations certify
//    (generator invariance, relations vanish modulo the chart ideals,
//    dimension match through filtration weight 10) and their singular loci
//    over GF(9) are exactly the claimed coordinate loci.
bool criterion_presentations() {
    for (const QuotientPresentation& q :
         {first_piece_presentation(), second_piece_presentation(),
          mirror_piece_presentation()}) {
        PresentationCertificate cert = certify_presentation(q, 10);
        if (!cert.ok) return false;
    }
    SmallField F9 = SmallField::make(2);
    for (const ScanSystem& sys : all_scan_systems()) {
        if (sys.name != "first-quotient" && sys.name != "second-quotient" &&
            sys.name != "mirror-quotient")
            continue;
        ScanResult res = scan_singular_locus(sys.name, sys.equations, sys.claimed, F9);
        if (!res.match || res.singular_points != 9) return false;
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"cyclic-kind main statement: chi == #Conj == (#H-1)/3+3, all r <= 13", 60.0,
         criterion_cyclic_main},
        {"symmetric-kind main statement: chi == #Conj + 3, all r <= 13", 120.0,
         criterion_symmetric_main},
        {"triangulations: counts, unimodularity, equivariance, orbit census", 0.0,
         criterion_triangulations},
        {"Hilbert series: three-way agreement through degree 30", 10.0,
         criterion_hilbert_series},
        {"relation discovery: unique weight-6 relation, variant flagged", 0.0,
         criterion_relation},
        {"chart certification: exact identities and smoothness scans to GF(27)", 300.0,
         criterion_charts},
        {"crepancy: multiplicity 2 in codimension 3 at all three centers", 0.0,
         criterion_crepancy},
        {"representation: 10^4 random products match matrices; S,T relations", 0.0,
         criterion_representation},
        {"quotient presentations: certificates and GF(9) singular loci", 0.0,
         criterion_presentations},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = criteria[i].run();
        } catch (const std::exception& e) {
            ok = false;
            note = std::string(" [exception: ") + e.what() + "]";
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (criteria[i].budget_seconds > 0 && dt >= criteria[i].budget_seconds) {
            ok = false;
            note += " [over budget " + std::to_string(criteria[i].budget_seconds) + "s]";
        }
        if (!ok) ++failures;
        std::printf("[%s] %zu. %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].label.c_str(), dt, note.c_str());
    }
    std::printf("RESULT: %zu/%zu acceptance criteria passed\n", criteria.size() - size_t(failures),
                criteria.size());
    return failures == 0 ? 0 : 1;
}
