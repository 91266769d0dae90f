#include <doctest.h>

#include <set>

#include "gsptorsion/symplectic.hpp"

using namespace gspt;

TEST_CASE("standard form") {
    PrecisionContext ctx(5, 1);
    CHECK(standard_form(ctx, 1) == ResidueMatrix::from_rows(ctx, {{0, 1}, {-1, 0}}));
    CHECK(standard_form(ctx, 2) ==
          ResidueMatrix::from_rows(ctx, {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}));
}

TEST_CASE("multiplier examples") {
    PrecisionContext c5(5, 1), c9(3, 2);
    CHECK(multiplier(ResidueMatrix::identity(c5, 4)).value() == 1);
    CHECK(multiplier(ResidueMatrix::from_rows(c5, {{2, 0}, {0, 1}})).value() == 2);
    CHECK(multiplier(ResidueMatrix::from_rows(c9, {{1, 1}, {0, 1}})).value() == 1);
    CHECK_THROWS_AS(multiplier(ResidueMatrix::from_rows(c9, {{3, 0}, {0, 1}})), NotSymplecticSimilitude);
    CHECK_THROWS_AS(multiplier(ResidueMatrix::from_rows(c5, {{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})),
                    NotSymplecticSimilitude);
    CHECK_THROWS_AS(multiplier(ResidueMatrix::identity(c5, 3)), DimensionMismatch);
}

TEST_CASE("membership examples") {
    PrecisionContext c9(3, 2);
    auto u = ResidueMatrix::from_rows(c9, {{1, 1}, {0, 1}});
    CHECK(is_member(u, GroupDescriptor::sp(1)));
    CHECK_FALSE(is_member(ResidueMatrix::from_rows(c9, {{2, 0}, {0, 1}}), GroupDescriptor::sp(1)));
    CHECK(is_member(ResidueMatrix::from_rows(c9, {{2, 0}, {0, 1}}), GroupDescriptor::gsp(1)));
    CHECK(is_member(u, GroupDescriptor::pr(1, 1)));
    CHECK_FALSE(is_member(u, GroupDescriptor::prs(1, 1, 1)));
    for (const auto& d : {GroupDescriptor::sp(2), GroupDescriptor::gsp(2), GroupDescriptor::pr(2, 1),
                          GroupDescriptor::prs(2, 2, 1)})
        CHECK(is_member(ResidueMatrix::identity(c9, 4), d));
    CHECK(is_member(ResidueMatrix::identity(c9, 6), GroupDescriptor::e(1, 2)));
    CHECK_THROWS_AS(is_member(u, GroupDescriptor::sp(2)), DimensionMismatch);
}

TEST_CASE("fibered product membership") {
    PrecisionContext c5(5, 1);
    auto x = ResidueMatrix::from_rows(c5, {{2, 0}, {0, 1}});
    auto y2 = ResidueMatrix::from_rows(c5, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
    CHECK(is_member_pair(x, y2, GroupDescriptor::e(1, 2)));
    CHECK_FALSE(is_member_pair(x, ResidueMatrix::identity(c5, 4), GroupDescriptor::e(1, 2)));
}

TEST_CASE("determinant equals multiplier power") {
    PrecisionContext c5(5, 1);
    CHECK(det_multiplier_check(SymplecticElement::from_matrix(ResidueMatrix::identity(c5, 2))));
    CHECK(det_multiplier_check(SymplecticElement::from_matrix(ResidueMatrix::from_rows(c5, {{2, 0}, {0, 1}}))));
    auto elems = enumerate_elements(GroupDescriptor::gsp(1), PrecisionContext(3, 2));
    for (std::size_t i = 0; i < elems.size(); i += elems.size() / 200) CHECK(det_multiplier_check(elems[i]));
    auto g2 = enumerate_elements(GroupDescriptor::gsp(2), PrecisionContext(2, 1));
    for (const auto& e : g2) CHECK(det_multiplier_check(e));
}

TEST_CASE("closed order formulas") {
    CHECK(sp_order(1, 3, 1) == 24);
    CHECK(sp_order(1, 3, 2) == 648);
    CHECK(sp_order(2, 2, 1) == 720);
    CHECK(sp_order(2, 3, 1) == 51840);
    CHECK(sp_order(1, 5, 2) == 15000);
    CHECK(gsp_order(1, 3, 1) == 48);
    CHECK(hensel_order(GroupDescriptor::sp(1), 3, 2) == 648);
    CHECK(hensel_order(GroupDescriptor::sp(1), 5, 2) == 15000);
    CHECK(hensel_order(GroupDescriptor::prs(2, 1, 1), 3, 1) == group_order_enumerate(GroupDescriptor::prs(2, 1, 1), 3, 1));
    CHECK(hensel_order(GroupDescriptor::sp(1), 3, 1, 24) == 24);
}

TEST_CASE("enumeration matches the formulas") {
    CHECK(group_order_enumerate(GroupDescriptor::sp(1), 3, 1) == 24);
    CHECK(group_order_enumerate(GroupDescriptor::prs(1, 1, 1), 3, 1) == 1);
    CHECK(group_order_enumerate(GroupDescriptor::gsp(1), 3, 1) == 48);
    CHECK(group_order_enumerate(GroupDescriptor::sp(1), 3, 2) == 648);
    CHECK(group_order_enumerate(GroupDescriptor::gsp(1), 2, 3) == gsp_order(1, 2, 3));
    CHECK(group_order_enumerate(GroupDescriptor::sp(2), 2, 1) == 720);
    CHECK(group_order_enumerate(GroupDescriptor::gsp(2), 2, 1) == gsp_order(2, 2, 1));
    CHECK(group_order_enumerate(GroupDescriptor::pr(1, 1), 5, 1) == 5);
}

TEST_CASE("pruned enumeration agrees with the unpruned scan") {
    CHECK(group_order_full_scan(GroupDescriptor::sp(1), 3, 1) == 24);
    CHECK(group_order_full_scan(GroupDescriptor::gsp(1), 3, 1) == 48);
    CHECK(group_order_full_scan(GroupDescriptor::sp(1), 5, 1) == 120);
    CHECK(group_order_full_scan(GroupDescriptor::pr(1, 1), 3, 2) == group_order_enumerate(GroupDescriptor::pr(1, 1), 3, 2));
    CHECK(group_order_full_scan(GroupDescriptor::sp(1), 2, 3) == group_order_enumerate(GroupDescriptor::sp(1), 2, 3));
    CHECK_THROWS_AS(group_order_full_scan(GroupDescriptor::sp(2), 5, 1), BudgetExceeded);
}

TEST_CASE("enumerated elements are distinct members") {
    PrecisionContext ctx(3, 1);
    for (const auto& d : {GroupDescriptor::sp(1), GroupDescriptor::gsp(1), GroupDescriptor::prs(2, 1, 0)}) {
        auto elems = enumerate_elements(d, ctx);
        std::set<std::vector<std::uint64_t>> seen;
        for (const auto& e : elems) {
            CHECK(is_member(e.matrix, d));
            seen.insert(e.matrix.values());
        }
        CHECK(seen.size() == elems.size());
    }
}

TEST_CASE("partitioned enumeration covers the group exactly once") {
    PrecisionContext ctx(3, 1);
    std::uint64_t total = 0;
    for (std::size_t part = 0; part < 3; ++part) {
        EnumerationOptions o;
        o.part = part;
        o.parts = 3;
        for_each_element(GroupDescriptor::sp(2), ctx, [&](auto, auto) { ++total; }, o);
    }
    CHECK(total == 51840);
}

TEST_CASE("budget is enforced") {
    EnumerationOptions tight;
    tight.budget_log2 = 10;
    CHECK_THROWS_AS(group_order_enumerate(GroupDescriptor::sp(2), 3, 1, tight), BudgetExceeded);
    CHECK(enumeration_estimate(GroupDescriptor::sp(1), 3, 1) > 0);
}

TEST_CASE("order bounds corridor") {
    CHECK(order_bounds_check(GroupDescriptor::sp(1), 5, 120));
    CHECK(order_bounds_check(GroupDescriptor::sp(2), 3, 51840));
    CHECK(order_bounds_check(GroupDescriptor::gsp(1), 3, 48));
    CHECK_FALSE(order_bounds_check(GroupDescriptor::sp(1), 5, 10));
}

TEST_CASE("codimensions") {
    CHECK(codim_pr(1, 1) == 2);
    CHECK(codim_pr(2, 1) == 4);
    CHECK(codim_pr(2, 2) == 7);
    CHECK(codim_prs(1, 1, 1) == 3);
    CHECK(codim_prs(2, 2, 1) == 9);
    for (int g = 1; g <= 6; ++g) {
        CHECK(codim_prs(g, g, g) == 2 * g * g + g);
        CHECK(codim_pr(g, g) == 2 * g * g - g * (g - 1) / 2);
        CHECK(2 * g * g + g - codim_pr(g, g) == g * (g + 1) / 2);
        CHECK(codim_prs(g, 0, 0) == 0);
    }
    CHECK_THROWS_AS(codim_prs(1, 1, 2), InvalidArgument);
    CHECK_THROWS_AS(codim_pr(1, 2), InvalidArgument);
}

TEST_CASE("codimension matches enumerated level-one orders") {
    for (int g = 1; g <= 2; ++g)
        for (int r = 0; r <= g; ++r)
            for (int s = 0; s <= r; ++s) {
                GroupDescriptor d = GroupDescriptor::prs(g, r, s);
                CHECK(d.dimension() == 2 * g * g + g - codim_prs(g, r, s));
                CHECK(order_bounds_check(d, 3, group_order_enumerate(d, 3, 1)));
            }
}

TEST_CASE("chain index exponent") {
    CHECK(chain_index_exponent(1, {{1, 1, 1}}) == 3);
    CHECK(chain_index_exponent(1, {{2, 1, 1}}) == 6);
    CHECK(chain_index_exponent(1, {{1, 1, 1}, {2, 1, 0}}) == 5);
    CHECK_THROWS_AS(chain_index_exponent(1, {{2, 1, 1}, {1, 1, 0}}), InvalidArgument);
    CHECK_THROWS_AS(chain_index_exponent(1, {{1, 1, 0}, {2, 1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(chain_index_exponent(1, {}), InvalidArgument);
}

TEST_CASE("chain index by enumeration") {
    CHECK(chain_index_enumerate(1, 3, {{1, 1, 1}}) == 24);
    CHECK(chain_index_enumerate(1, 3, {{2, 1, 1}}) == 648);
    // I + 3X with X in sl_2(F_3) killing e_1: three elements
    CHECK(chain_index_enumerate(1, 3, {{1, 1, 1}, {2, 1, 0}}) == 216);
}

TEST_CASE("multiplier factorization") {
    PrecisionContext c5(5, 1);
    auto id = SymplecticElement::from_matrix(ResidueMatrix::identity(c5, 2));
    auto [s0, p0] = sp_factorize(id);
    CHECK(s0.matrix == id.matrix);
    CHECK(p0.matrix == id.matrix);

    auto m = SymplecticElement::from_matrix(ResidueMatrix::from_rows(c5, {{2, 0}, {0, 1}}));
    auto [scalar, sp] = sp_factorize(m);
    CHECK(scalar.matrix == ResidueMatrix::from_rows(c5, {{1, 0}, {0, 2}}));
    CHECK(sp.matrix == ResidueMatrix::from_rows(c5, {{2, 0}, {0, 3}}));
    CHECK(determinant(sp.matrix).value() == 1);

    auto elems = enumerate_elements(GroupDescriptor::gsp(1), PrecisionContext(3, 2));
    for (std::size_t i = 0; i < elems.size(); i += elems.size() / 100) {
        auto [a, b] = sp_factorize(elems[i]);
        CHECK(a.matrix * b.matrix == elems[i].matrix);
        CHECK(is_member(b.matrix, GroupDescriptor::sp(1)));
        CHECK(a.multiplier == elems[i].multiplier);
    }
}

TEST_CASE("congruence forces the multiplier") {
    PrecisionContext c9(3, 2);
    auto m = SymplecticElement::from_matrix(ResidueMatrix::from_rows(c9, {{1, 3}, {0, 1}}));
    CHECK(congruence_multiplier_check(m, 1));
    CHECK_FALSE(congruence_multiplier_check(m, 2));
    CHECK(m.multiplier == 1);
    for (int k = 1; k <= 2; ++k) {
        long hyp = 0;
        for (const auto& e : enumerate_elements(GroupDescriptor::gsp(1), c9)) {
            if (!congruence_multiplier_check(e, k)) continue;
            ++hyp;
            CHECK(e.multiplier % c9.power(k) == 1);
        }
        CHECK(hyp > 0);
    }
    PrecisionContext c4(2, 2);
    long hyp = 0;
    for (const auto& e : enumerate_elements(GroupDescriptor::gsp(2), c4)) {
        if (!congruence_multiplier_check(e, 1)) continue;
        ++hyp;
        CHECK(e.multiplier % 2 == 1);
    }
    CHECK(hyp > 0);
}

TEST_CASE("lie algebra trace condition") {
    PrecisionContext c5(5, 1);
    CHECK(lie_trace_check(ResidueMatrix(c5, 2, 2), ResidueMatrix(c5, 4, 4), 1, 2));
    CHECK(lie_trace_check(ResidueMatrix::identity(c5, 2), ResidueMatrix::identity(c5, 4), 1, 2));
    CHECK(lie_trace_check(ResidueMatrix::from_rows(c5, {{1, 0}, {0, 2}}), ResidueMatrix::from_rows(c5, {{3, 1}, {1, 0}}), 1, 1));
    CHECK_FALSE(lie_trace_check(ResidueMatrix::identity(c5, 2), ResidueMatrix(c5, 2, 2), 1, 1));
    CHECK_THROWS_AS(lie_trace_check(ResidueMatrix::identity(c5, 2), ResidueMatrix::identity(c5, 2), 1, 2), DimensionMismatch);
}

TEST_CASE("random symplectic elements are members") {
    SplitMix64 rng(3);
    for (int g = 1; g <= 3; ++g) {
        PrecisionContext ctx(5, 3);
        for (int t = 0; t < 30; ++t) CHECK(is_member(random_sp_element(ctx, g, rng), GroupDescriptor::sp(g)));
    }
}
