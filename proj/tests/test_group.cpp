#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "wildmckay/group.hpp"

using namespace wmk;

namespace {

GroupSpec c3(int64_t r, std::vector<Residue> gens) {
    return GroupSpec{GroupKind::C3, r, std::move(gens)};
}
GroupSpec s3_full(int64_t r) {
    // the two independent sum-zero residues generate the full r^2 lattice
    return GroupSpec{GroupKind::S3, r, {{1, 0, r - 1}, {0, 1, r - 1}}};
}

// Independent closure oracle: multiples of a single generator.
std::set<Residue> cyclic_H(Residue g, int64_t r) {
    std::set<Residue> H;
    Residue x{0, 0, 0};
    do {
        H.insert(x);
        for (int i = 0; i < 3; ++i) x[size_t(i)] = mod_nonneg(x[size_t(i)] + g[size_t(i)], r);
    } while (x != Residue{0, 0, 0});
    return H;
}

}  // namespace

TEST_CASE("abelian part closure") {
    CHECK(build_H({{1, 2, 4}}, 7) == cyclic_H({1, 2, 4}, 7));
    CHECK(build_H({{1, 2, 4}}, 7).size() == 7);
    // hand-checked: (1,1,0) and (0,1,1) mod 2 span four residues
    CHECK(build_H({{1, 1, 0}, {0, 1, 1}}, 2) ==
          std::set<Residue>{{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(build_H({}, 5) == std::set<Residue>{{0, 0, 0}});
    CHECK(build_H({{1, 0, 4}, {0, 1, 4}}, 5).size() == 25);
    CHECK_THROWS_AS(build_H({{1, 1, 1}}, 5), DeterminantViolation);  // sum != 0 mod 5
}

TEST_CASE("normal-form validation") {
    CHECK(validate_normal_form(c3(7, {{1, 2, 4}})).ok);
    CHECK(validate_normal_form(c3(13, {{1, 3, 9}})).ok);
    CHECK(validate_normal_form(c3(1, {})).ok);
    CHECK(validate_normal_form(c3(2, {{1, 1, 0}, {0, 1, 1}})).ok);
    CHECK(validate_normal_form(s3_full(5)).ok);
    CHECK(validate_normal_form(s3_full(1)).ok);

    // gcd(r,3) != 1
    CHECK_FALSE(validate_normal_form(c3(3, {{1, 1, 1}})).ok);
    CHECK_FALSE(validate_normal_form(s3_full(6)).ok);
    // H = <(1,6,0)> mod 7 is not rotation-closed
    CHECK_FALSE(validate_normal_form(c3(7, {{1, 6, 0}})).ok);
    // proper sublattice for the symmetric kind: #H != r^2
    CHECK_FALSE(validate_normal_form(GroupSpec{GroupKind::S3, 5, {{1, 2, 2}}}).ok);
    // no element of exact order r
    CHECK_FALSE(validate_normal_form(GroupSpec{GroupKind::C3, 4, {{2, 2, 0}, {0, 2, 2}}}).ok);
}

TEST_CASE("group orders") {
    CHECK(enumerate_group(c3(7, {{1, 2, 4}})).order() == 21);
    CHECK(enumerate_group(c3(1, {})).order() == 3);
    CHECK(enumerate_group(s3_full(2)).order() == 24);
    CHECK(enumerate_group(s3_full(5)).order() == 150);
    CHECK(enumerate_group(s3_full(1)).order() == 6);
    CHECK_THROWS_AS(enumerate_group(c3(7, {{1, 6, 0}})), Error);
}

TEST_CASE("generator relations") {
    auto table = enumerate_group(s3_full(5));
    const GroupCtx& ctx = table.ctx;
    CHECK(ctx.s == 10);
    auto S = element_S();
    auto T = element_T(ctx);
    auto S2 = element_mul(S, S, ctx);
    CHECK(element_mul(S, S2, ctx) == element_identity());           // S^3 = 1
    CHECK(element_mul(T, T, ctx) == element_identity());            // T^2 = 1
    auto Sinv = element_inv(S, ctx);
    auto lhs = element_mul(element_mul(Sinv, T, ctx), S, ctx);      // S^-1 T S
    auto rhs = element_mul(S, T, ctx);                              // = S T
    CHECK(lhs == rhs);
    CHECK(element_mul(element_inv(T, ctx), T, ctx) == element_identity());
}

TEST_CASE("matrix images of the standard generators") {
    auto table = enumerate_group(s3_full(1));  // order 6, field GF(3)
    const GroupCtx& ctx = table.ctx;
    auto F = field_for_group(ctx);
    CHECK(F.order() == 3);

    auto MS = to_matrix(element_S(), ctx, F);
    // S has columns e2, e3, e1
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(F.is_zero(MS.at(i, j)) == !(i == (j + 1) % 3));

    auto MT = to_matrix(element_T(ctx), ctx, F);
    FieldElement minus1 = F.neg(F.one());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i + j == 2)
                CHECK(MT.at(i, j) == minus1);
            else
                CHECK(F.is_zero(MT.at(i, j)));
        }
}

TEST_CASE("symbolic products match matrix products") {
    for (const auto& spec : {c3(7, {{1, 2, 4}}), s3_full(4)}) {
        auto table = enumerate_group(spec);
        auto F = field_for_group(table.ctx);
        std::mt19937_64 rng(7041);
        std::uniform_int_distribution<size_t> pick(0, table.elements.size() - 1);
        for (int it = 0; it < 500; ++it) {
            const auto& a = table.elements[pick(rng)];
            const auto& b = table.elements[pick(rng)];
            auto c = multiply_and_matrix_consistency(a, b, table.ctx, F);
            // closure: product stays in the table
            CHECK(std::binary_search(
                table.elements.begin(), table.elements.end(), c,
                [&](const MonomialElement& x, const MonomialElement& y) {
                    return element_key(x, table.ctx) < element_key(y, table.ctx);
                }));
        }
    }
}

TEST_CASE("representation is faithful") {
    auto table = enumerate_group(s3_full(5));
    auto F = field_for_group(table.ctx);
    std::set<std::vector<uint64_t>> images;
    for (const auto& g : table.elements) {
        auto M = to_matrix(g, table.ctx, F);
        std::vector<uint64_t> key;
        for (const auto& e : M.a) key.push_back(F.to_int(e));
        images.insert(key);
    }
    CHECK(int64_t(images.size()) == table.order());
}

TEST_CASE("all elements have determinant one and none are scalar or reflections") {
    for (const auto& spec :
         {c3(7, {{1, 2, 4}}), c3(13, {{1, 3, 9}}), s3_full(2), s3_full(5)}) {
        auto table = enumerate_group(spec);
        auto F = field_for_group(table.ctx);
        CHECK(determinant_offenders(table, F).empty());
        CHECK(scalar_offenders(table).empty());
        CHECK(pseudo_reflections(table, F).empty());
    }
}

TEST_CASE("rank of (M - I) distinguishes fixed spaces") {
    auto table = enumerate_group(s3_full(5));
    auto F = field_for_group(table.ctx);
    auto rank_minus_id = [&](const MonomialElement& g) {
        auto M = to_matrix(g, table.ctx, F);
        for (int i = 0; i < 3; ++i) M.at(i, i) = F.sub(M.at(i, i), F.one());
        return mat_rank(F, M);
    };
    CHECK(rank_minus_id(element_identity()) == 0);
    CHECK(rank_minus_id(element_S()) == 2);
    CHECK(rank_minus_id(element_T(table.ctx)) == 2);
}

TEST_CASE("conjugacy class counts: brute force equals closed form") {
    struct Case {
        GroupSpec spec;
        int64_t expect;
    };
    // expected counts: cyclic kind (#H-1)/3 + 3; symmetric kind (r-1)(r-2)/6 + 2r + 1
    std::vector<Case> cases = {
        {c3(1, {}), 3},
        {c3(7, {{1, 2, 4}}), 5},
        {c3(7, {{1, 4, 2}}), 5},
        {c3(13, {{1, 3, 9}}), 7},
        {c3(2, {{1, 1, 0}, {0, 1, 1}}), 4},
        {c3(5, {{1, 0, 4}, {0, 1, 4}}), 11},
        {s3_full(1), 3},
        {s3_full(2), 5},
        {s3_full(4), 10},
        {s3_full(5), 13},
    };
    for (const auto& [spec, expect] : cases) {
        auto table = enumerate_group(spec);
        auto classes = conjugacy_classes_bruteforce(table);
        CHECK(classes.count == expect);
        CHECK(conjugacy_count_formula(table.ctx) == expect);
        int64_t total = 0;
        for (int64_t sz : classes.sizes) total += sz;
        CHECK(total == table.order());
    }
}

TEST_CASE("class structure census") {
    {
        auto census = class_census(enumerate_group(c3(7, {{1, 2, 4}})));
        CHECK(census.diag_classes == 3);  // identity + two free orbits
        CHECK(census.diag_size_histogram == std::map<int64_t, int64_t>{{1, 1}, {3, 2}});
        CHECK(census.rot_classes == 2);   // the two 3-cycle cosets stay separate
        CHECK(census.refl_classes == 0);
    }
    {
        auto census = class_census(enumerate_group(s3_full(5)));
        // diagonal part: identity, (r-1) classes of size 3, (r-1)(r-2)/6 of size 6
        CHECK(census.diag_classes == 1 + 4 + 2);
        CHECK(census.diag_size_histogram ==
              std::map<int64_t, int64_t>{{1, 1}, {3, 4}, {6, 2}});
        CHECK(census.rot_classes == 1);  // swap conjugation merges the 3-cycle cosets
        CHECK(census.refl_classes == 5);  // exactly r classes of swap type
    }
}

TEST_CASE("formula preconditions are enforced") {
    // symmetric kind with a proper sublattice: formula must refuse
    GroupCtx ctx = make_ctx(GroupSpec{GroupKind::S3, 5, {{1, 2, 2}}});
    CHECK_THROWS_AS(conjugacy_count_formula(ctx), FormulaPreconditionViolation);
}
