#include <doctest.h>

#include "gsptorsion/torsion.hpp"

using namespace gspt;

namespace {

Vector unit_vector(std::size_t n, std::size_t i, std::uint64_t scale = 1) {
    Vector v(n, 0);
    v[i] = scale;
    return v;
}

// H = <e_i / ell^orders_i>, indices paired with orders
TorsionSubgroup basis_subgroup(const PrecisionContext& ctx, std::size_t n,
                               const std::vector<std::pair<std::size_t, int>>& gens) {
    TorsionSubgroup h{ctx, n, {}};
    for (auto [i, ord] : gens) h.add_generator(unit_vector(n, i), ord);
    return h;
}

TorsionSubgroup full_torsion(const PrecisionContext& ctx, int g, int level) {
    std::vector<std::pair<std::size_t, int>> gens;
    for (std::size_t i = 0; i < static_cast<std::size_t>(2 * g); ++i) gens.emplace_back(i, level);
    return basis_subgroup(ctx, static_cast<std::size_t>(2 * g), gens);
}

TorsionSubgroup lagrangian_layer(const PrecisionContext& ctx, int g, int level) {
    std::vector<std::pair<std::size_t, int>> gens;
    for (std::size_t i = 0; i < static_cast<std::size_t>(g); ++i) gens.emplace_back(i, level);
    return basis_subgroup(ctx, static_cast<std::size_t>(2 * g), gens);
}

TorsionSubgroup random_subgroup(const PrecisionContext& ctx, std::size_t n, SplitMix64& rng, int max_gens) {
    TorsionSubgroup h{ctx, n, {}};
    const auto k = rng.between(1, max_gens);
    for (std::int64_t j = 0; j < k; ++j) {
        Vector v(n);
        for (auto& x : v) x = rng.below(ctx.modulus());
        h.add_generator(v, static_cast<int>(rng.between(1, ctx.precision())));
    }
    return h;
}

}  // namespace

TEST_CASE("canonical type examples") {
    PrecisionContext c9(3, 2);
    TorsionSubgroup h = basis_subgroup(c9, 2, {{0, 2}, {1, 1}});
    SubgroupType t = canonical_type(h);
    CHECK(t.exponents == std::vector<int>{2, 1});
    CHECK(t.multiplicities == std::vector<int>{1, 1});
    CHECK(t.log_order() == 3);

    for (int g = 1; g <= 3; ++g) {
        SubgroupType f = canonical_type(full_torsion(c9, g, 2));
        CHECK(f.exponents == std::vector<int>{2});
        CHECK(f.multiplicities == std::vector<int>{2 * g});
    }

    TorsionSubgroup red{c9, 2, {}};
    red.add_generator({1, 0}, 2);
    red.add_generator({2, 0}, 2);
    red.add_generator({0, 1}, 1);
    CHECK(canonical_type(red) == t);
    CHECK(subgroup_canonical_form(red) == subgroup_canonical_form(h));
    CHECK(canonical_type(TorsionSubgroup{c9, 2, {}}).t() == 0);
}

TEST_CASE("weil pairing examples") {
    for (int n = 1; n <= 3; ++n) {
        PrecisionContext ctx(3, n);
        auto p = weil_pairing(ctx, TorsionPoint{unit_vector(4, 0)}, TorsionPoint{unit_vector(4, 2)});
        CHECK(p.n == n);
        CHECK(p.k == n);
        CHECK(weil_pairing(ctx, TorsionPoint{unit_vector(4, 0)}, TorsionPoint{unit_vector(4, 1)}).k == 0);
    }
    PrecisionContext c27(3, 3);
    // e_1/27 against 3 e_2'/27 = e_2'/9: pairing value generates mu_9
    auto r = weil_pairing(c27, TorsionPoint{unit_vector(2, 0)}, TorsionPoint{unit_vector(2, 1, 3)});
    CHECK(r.n == 3);
    CHECK(r.k == 2);
}

TEST_CASE("weil pairing is symmetric in k and GSp invariant") {
    PrecisionContext ctx(3, 2);
    auto elems = enumerate_elements(GroupDescriptor::gsp(1), ctx);
    std::vector<TorsionPoint> pts;
    for (std::uint64_t a = 0; a < 9; ++a)
        for (std::uint64_t b = 0; b < 9; ++b) pts.push_back(TorsionPoint{{a, b}});
    for (const auto& p : pts)
        for (const auto& q : pts) {
            auto pq = weil_pairing(ctx, p, q);
            auto qp = weil_pairing(ctx, q, p);
            CHECK(pq.k == qp.k);
            CHECK(pq.n == qp.n);
        }
    for (std::size_t e = 0; e < elems.size(); e += 61) {
        const auto& m = elems[e].matrix;
        for (std::size_t i = 0; i < pts.size(); i += 3)
            for (std::size_t j = 0; j < pts.size(); j += 5) {
                TorsionPoint mp{mat_vec(m, pts[i].coords)}, mq{mat_vec(m, pts[j].coords)};
                CHECK(weil_pairing(ctx, mp, mq).k == weil_pairing(ctx, pts[i], pts[j]).k);
            }
    }
}

TEST_CASE("pairing bilinearity through the integer form") {
    PrecisionContext ctx(3, 2);
    SplitMix64 rng(2);
    for (int t = 0; t < 300; ++t) {
        Vector x(2), y(2), z(2);
        for (auto* v : {&x, &y, &z})
            for (auto& c : *v) c = rng.below(9);
        Vector xy{ctx.add(x[0], y[0]), ctx.add(x[1], y[1])};
        CHECK(symplectic_pairing(ctx, xy, z) == ctx.add(symplectic_pairing(ctx, x, z), symplectic_pairing(ctx, y, z)));
        CHECK(symplectic_pairing(ctx, x, z) == ctx.neg(symplectic_pairing(ctx, z, x)));
    }
}

TEST_CASE("m and m1 examples") {
    for (int n = 1; n <= 3; ++n) {
        PrecisionContext ctx(3, n);
        for (int g = 1; g <= 2; ++g) {
            TorsionSubgroup full = full_torsion(ctx, g, n);
            CHECK(m_invariant(full) == n);
            CHECK(m1_invariant(full) == n);
            CHECK(m_invariant(lagrangian_layer(ctx, g, n)) == 0);
            CHECK(m1_invariant(lagrangian_layer(ctx, g, n)) == 0);
        }
        CHECK(m1_invariant(basis_subgroup(ctx, 2, {{0, n}})) == 0);
    }
    PrecisionContext c9(3, 2);
    TorsionSubgroup h = basis_subgroup(c9, 2, {{0, 2}, {1, 1}});
    CHECK(m_invariant(h) == 1);
    CHECK(m1_invariant(h) == 1);
    CHECK(pairing_invariants_bruteforce(h) == std::pair<int, int>{1, 1});
}

TEST_CASE("gram formulas agree with the pair scan") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& h : all_subgroups_rank2(3, n)) {
            auto [bm, bm1] = pairing_invariants_bruteforce(h);
            CHECK(m_invariant(h) == bm);
            CHECK(m1_invariant(h) == bm1);
        }
    SplitMix64 rng(12);
    PrecisionContext c(2, 2);
    for (int t = 0; t < 40; ++t) {
        TorsionSubgroup h = random_subgroup(c, 4, rng, 3);
        if (subgroup_elements(h).size() > 729) continue;
        auto [bm, bm1] = pairing_invariants_bruteforce(h);
        CHECK(m_invariant(h) == bm);
        CHECK(m1_invariant(h) == bm1);
    }
}

TEST_CASE("subgroup counts of (Z/p^2)^2") {
    CHECK(all_subgroups_rank2(3, 1).size() == 6);
    CHECK(all_subgroups_rank2(2, 2).size() == 15);
    CHECK(all_subgroups_rank2(3, 2).size() == 23);
}

TEST_CASE("m1 is monotone and dominates m") {
    auto subs = all_subgroups_rank2(3, 2);
    for (const auto& a : subs) {
        CHECK(m_invariant(a) <= m1_invariant(a));
        for (const auto& b : subs)
            if (subgroup_contains(b, a)) CHECK(m1_invariant(a) <= m1_invariant(b));
    }
}

TEST_CASE("scaling by ell^m1 gives a totally isotropic group") {
    for (const auto& h : all_subgroups_rank2(3, 2)) {
        TorsionSubgroup s = multiply_by_ell_power(h, m1_invariant(h));
        CHECK(is_totally_isotropic(s));
        CHECK(m1_invariant(s) == 0);
    }
    SplitMix64 rng(31);
    PrecisionContext c(3, 2);
    for (int t = 0; t < 30; ++t) {
        TorsionSubgroup h = random_subgroup(c, 4, rng, 3);
        TorsionSubgroup s = multiply_by_ell_power(h, m1_invariant(h));
        CHECK(is_totally_isotropic(s));
        CHECK(m1_invariant(s) == 0);
    }
}

TEST_CASE("total isotropy examples") {
    PrecisionContext c9(3, 2);
    CHECK(is_totally_isotropic(lagrangian_layer(c9, 2, 2)));
    CHECK_FALSE(is_totally_isotropic(full_torsion(PrecisionContext(3, 1), 2, 1)));
    auto elems = enumerate_elements(GroupDescriptor::sp(1), c9);
    for (std::size_t i = 0; i < elems.size(); i += 37) {
        TorsionSubgroup h{c9, 2, {}};
        h.add_generator(mat_vec(elems[i].matrix, unit_vector(2, 0)), 2);
        CHECK(is_totally_isotropic(h));
    }
}

TEST_CASE("isotropy chain examples") {
    PrecisionContext c3(3, 1);
    for (int g = 1; g <= 3; ++g) {
        FlagChain a = isotropy_chain(full_torsion(c3, g, 1));
        REQUIRE(a.levels.size() == 1);
        CHECK(a.levels[0].r == g);
        CHECK(a.levels[0].s == g);
        CHECK(a.levels[0].delta == 1);
        FlagChain l = isotropy_chain(lagrangian_layer(c3, g, 1));
        REQUIRE(l.levels.size() == 1);
        CHECK(l.levels[0].r == g);
        CHECK(l.levels[0].s == 0);
        CHECK(l.levels[0].delta == 0);
    }
    // <e_1/9, f_1/3>: top class spans e_1 only; the full group is A[3]-sized at the bottom
    PrecisionContext c9(3, 2);
    FlagChain c = isotropy_chain(basis_subgroup(c9, 2, {{0, 2}, {1, 1}}));
    REQUIRE(c.levels.size() == 2);
    CHECK(c.by_class(1).r == 1);
    CHECK(c.by_class(1).s == 0);
    CHECK(c.by_class(2).r == 1);
    CHECK(c.by_class(2).s == 1);
}

TEST_CASE("stabilizer examples") {
    PrecisionContext c3(3, 1);
    auto full = stabilizer_enumerate(full_torsion(c3, 1, 1), Family::Sp);
    CHECK(full.order == 1);
    CHECK(full.index == 24);

    auto line = stabilizer_enumerate(basis_subgroup(c3, 2, {{0, 1}}), Family::Sp);
    CHECK(line.index * line.order == 24);
    CHECK(line.order == 3);
    // index 8 against 3^codim(P_1) = 9, corridor [(2/3)^3, (4/3)^3]
    CHECK(line.index * 27 >= 9 * 8);
    CHECK(line.index * 27 <= 9 * 64);

    auto triv = stabilizer_enumerate(TorsionSubgroup{c3, 2, {}}, Family::Sp);
    CHECK(triv.index == 1);

    auto gfull = stabilizer_enumerate(full_torsion(c3, 1, 1), Family::GSp);
    CHECK(gfull.order == 1);
    CHECK(gfull.index == 48);
}

TEST_CASE("delta examples") {
    PrecisionContext c3(3, 1);
    CHECK(delta_estimate(full_torsion(c3, 1, 1)) == 2);
    CHECK(m1_invariant(full_torsion(c3, 1, 1)) == 1);
    CHECK(delta_estimate(basis_subgroup(c3, 2, {{0, 1}})) == 1);
    PrecisionContext c9(3, 2);
    CHECK(delta_estimate(basis_subgroup(c9, 2, {{0, 2}})) == 1);
    CHECK(delta_estimate(TorsionSubgroup{c9, 2, {}}) == 1);
    CHECK(delta_estimate(full_torsion(c9, 1, 2)) == 6);
}

TEST_CASE("delta bracket on subgroups of (Z/9)^2") {
    StabilizerOracle oracle;
    for (const auto& h : all_subgroups_rank2(3, 2)) {
        const mpz_class d = oracle.delta(h);
        const int m1 = m1_invariant(h);
        mpz_class pw = 1;
        for (int i = 0; i < m1; ++i) pw *= 3;
        CHECK(3 * d >= 2 * pw);
        CHECK(d <= pw);
    }
}

TEST_CASE("degree exponent prediction") {
    PrecisionContext c3(3, 1), c9(3, 2);
    auto predict = [](const TorsionSubgroup& h) {
        return degree_exponent_prediction(h.genus(), canonical_type(h), isotropy_chain(h));
    };
    CHECK(predict(full_torsion(c3, 1, 1)) == 4);
    CHECK(predict(full_torsion(c9, 2, 2)) == 22);
    CHECK(predict(lagrangian_layer(c3, 2, 1)) == 7);
    CHECK(predict(full_torsion(c9, 1, 2)) == 8);

    SubgroupType t{{1}, {2}};
    FlagChain bad{{{1, 0, 0}}};
    CHECK_THROWS_AS(degree_exponent_prediction(1, t, bad), InvalidArgument);
}

TEST_CASE("product degree exponent") {
    PrecisionContext c3(3, 1);
    auto part = [](const TorsionSubgroup& h) {
        return FactorPrediction{h.genus(), canonical_type(h), isotropy_chain(h)};
    };
    auto a1 = full_torsion(c3, 1, 1);
    CHECK(product_degree_exponent({part(a1), part(a1)}) == std::pair<int, int>{1, 7});
    CHECK(product_degree_exponent({part(a1), part(lagrangian_layer(c3, 2, 1))}) == std::pair<int, int>{1, 11});
    auto single = product_degree_exponent({part(a1)});
    CHECK(single.second == degree_exponent_prediction(1, canonical_type(a1), isotropy_chain(a1)));
}

TEST_CASE("totally isotropic group lift") {
    PrecisionContext c3(3, 1);
    TorsionSubgroup line = basis_subgroup(c3, 2, {{0, 1}});
    auto l1 = isotropic_group_lift(line);
    CHECK(subgroup_canonical_form(l1.h_ti) == subgroup_canonical_form(line));
    CHECK(l1.lattice.rank == 1);

    PrecisionContext c9(3, 2);
    TorsionSubgroup h = basis_subgroup(c9, 4, {{0, 2}, {1, 1}});
    auto l2 = isotropic_group_lift(h);
    SubgroupType t = canonical_type(l2.h_ti);
    CHECK(t.exponents == std::vector<int>{2});
    CHECK(t.multiplicities == std::vector<int>{2});
    CHECK(subgroup_contains(l2.h_ti, h));
    CHECK(is_totally_isotropic(l2.h_ti));
    CHECK(is_isotropic(l2.lattice));

    TorsionSubgroup layer = lagrangian_layer(c9, 2, 2);
    CHECK(subgroup_canonical_form(isotropic_group_lift(layer).h_ti) == subgroup_canonical_form(layer));

    CHECK_THROWS_AS(isotropic_group_lift(full_torsion(c3, 1, 1)), NotTotallyIsotropic);
}

TEST_CASE("isotropic group lift on random isotropic subgroups") {
    SplitMix64 rng(40);
    PrecisionContext c(3, 3);
    for (int t = 0; t < 40; ++t) {
        const int g = static_cast<int>(rng.between(1, 3));
        Lattice lag = random_maximal_isotropic(c, g, rng);
        TorsionSubgroup h{c, static_cast<std::size_t>(2 * g), {}};
        for (int j = 0; j < g; ++j) {
            Vector v = lag.generators.column(static_cast<std::size_t>(j));
            h.add_generator(v, static_cast<int>(rng.between(0, 3)));
        }
        if (canonical_type(h).t() == 0) continue;
        auto lift = isotropic_group_lift(h);
        CHECK(subgroup_contains(lift.h_ti, h));
        CHECK(is_totally_isotropic(lift.h_ti));
        SubgroupType ty = canonical_type(lift.h_ti);
        CHECK(ty.t() == 1);
        CHECK(ty.exponents[0] == canonical_type(h).exponents[0]);
    }
}
