#include "gsptorsion/lattice.hpp"

#include <algorithm>

#include "gsptorsion/symplectic.hpp"

namespace gspt {

Lattice Lattice::from_columns(const PrecisionContext& ctx, std::size_t ambient, const std::vector<Vector>& cols) {
    if (cols.empty()) throw InvalidArgument("lattice needs at least one generator");
    return Lattice{ResidueMatrix::from_columns(ctx, ambient, cols), static_cast<int>(cols.size())};
}

namespace {

// Reduced column echelon form of a basis of a direct summand: row by row,
// pick the first remaining column with a unit in that row, scale it to 1 and
// clear the row elsewhere. Unique for a given summand.
std::vector<Vector> reduced_summand_basis(const PrecisionContext& ctx, std::vector<Vector> cols) {
    const std::size_t n = cols.empty() ? 0 : cols.front().size();
    std::size_t done = 0;
    for (std::size_t r = 0; r < n && done < cols.size(); ++r) {
        std::size_t p = done;
        while (p < cols.size() && !ctx.is_unit(cols[p][r])) ++p;
        if (p == cols.size()) continue;
        std::swap(cols[done], cols[p]);
        const std::uint64_t inv = ctx.inverse(cols[done][r]);
        for (auto& x : cols[done]) x = ctx.mul(x, inv);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (c == done || cols[c][r] == 0) continue;
            const std::uint64_t f = cols[c][r];
            for (std::size_t i = 0; i < n; ++i) cols[c][i] = ctx.sub(cols[c][i], ctx.mul(f, cols[done][i]));
        }
        ++done;
    }
    if (done != cols.size()) throw NotSaturated("vectors are not independent mod ell");
    return cols;
}

}  // namespace

bool is_saturated(const Lattice& l) {
    return rank_mod_ell(l.generators) == static_cast<std::size_t>(l.rank);
}

Lattice saturate(const Lattice& l) {
    const auto& ctx = l.context();
    SmithForm snf = smith_normal_form(l.generators);
    ResidueMatrix left_inv = mat_inv(snf.left_transform);
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < snf.exponents.size(); ++i)
        if (snf.exponents[i] < ctx.precision()) cols.push_back(left_inv.column(i));
    if (cols.empty()) {
        // Zero module: keep a single zero generator with rank 0.
        return Lattice{ResidueMatrix(ctx, l.ambient_rank(), 1), 0};
    }
    return Lattice::from_columns(ctx, l.ambient_rank(), reduced_summand_basis(ctx, std::move(cols)));
}

Lattice complement_basis(const Lattice& l) {
    if (!is_saturated(l)) throw NotSaturated("complement_basis needs a saturated lattice");
    const auto& ctx = l.context();
    const std::size_t n = l.ambient_rank();
    ResidueMatrix acc = l.generators;
    std::size_t rank = rank_mod_ell(acc);
    std::vector<Vector> chosen;
    for (std::size_t i = 0; i < n && rank < n; ++i) {
        Vector e(n, 0);
        e[i] = 1 % ctx.modulus();
        ResidueMatrix trial = hconcat(acc, ResidueMatrix::from_columns(ctx, n, {e}));
        std::size_t r = rank_mod_ell(trial);
        if (r > rank) {
            acc = std::move(trial);
            rank = r;
            chosen.push_back(std::move(e));
        }
    }
    if (chosen.empty()) return Lattice{ResidueMatrix(ctx, n, 1), 0};
    return Lattice::from_columns(ctx, n, chosen);
}

bool is_isotropic(const Lattice& l) { return gram_matrix(l.generators).is_zero(); }

SymplecticBasis symplectic_complete(const Lattice& l) {
    const auto& ctx = l.context();
    const std::size_t n = l.ambient_rank();
    if (n % 2 != 0) throw DimensionMismatch("ambient rank must be even");
    const std::size_t g = n / 2;
    if (!is_saturated(l)) throw NotSaturated("symplectic_complete needs a saturated lattice");
    if (static_cast<std::size_t>(l.rank) != g || !is_isotropic(l))
        throw NotMaximalIsotropic("symplectic_complete needs an isotropic lattice of rank g");
    ResidueMatrix e_mat = l.generators.cols() == g ? l.generators : saturate(l).generators;
    std::vector<Vector> e;
    for (std::size_t i = 0; i < g; ++i) e.push_back(e_mat.column(i));

    // Solution modulo ell.
    const PrecisionContext low = ctx.truncated(1);
    const std::uint64_t ell = ctx.ell();
    Lattice comp = complement_basis(l);
    std::vector<Vector> c;
    for (std::size_t j = 0; j < g; ++j) c.push_back(comp.generators.column(j));
    ResidueMatrix b(low, g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) b.set(i, j, symplectic_pairing(ctx, e[i], c[j]) % ell);
    ResidueMatrix b_inv = mat_inv(b);
    std::vector<Vector> f(g, Vector(n, 0));
    for (std::size_t j = 0; j < g; ++j)
        for (std::size_t k = 0; k < g; ++k)
            for (std::size_t r = 0; r < n; ++r) f[j][r] = low.add(f[j][r], low.mul(c[k][r] % ell, b_inv(k, j)));
    // Make the f's pairwise orthogonal mod ell: f_j += sum_{i<j} beta_ij e_i.
    {
        std::vector<Vector> f0 = f;
        for (std::size_t j = 0; j < g; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                std::uint64_t beta = symplectic_pairing(ctx, f0[i], f0[j]) % ell;
                for (std::size_t r = 0; r < n; ++r) f[j][r] = low.add(f[j][r], low.mul(beta, e[i][r] % ell));
            }
        }
    }

    // Successive approximation: one power of ell per step.
    for (int p = 1; p < ctx.precision(); ++p) {
        const std::uint64_t lp = ctx.power(p);
        std::vector<Vector> h(g, Vector(n, 0));
        for (std::size_t j = 0; j < g; ++j) {
            for (std::size_t i = 0; i < g; ++i) {
                std::uint64_t pairing = symplectic_pairing(ctx, e[i], f[j]);
                if (i == j) pairing = ctx.sub(pairing, 1 % ctx.modulus());
                std::uint64_t y = (pairing / lp) % ell;
                std::uint64_t coef_f = (ell - y) % ell;  // h_j^{g+i} = -y_ij
                std::uint64_t coef_e = 0;
                if (i < j) coef_e = (symplectic_pairing(ctx, f[i], f[j]) / lp) % ell;  // h_j^i = alpha_ij
                for (std::size_t r = 0; r < n; ++r) {
                    h[j][r] = ctx.add(h[j][r], ctx.mul(coef_f, f[i][r]));
                    h[j][r] = ctx.add(h[j][r], ctx.mul(coef_e, e[i][r]));
                }
            }
        }
        for (std::size_t j = 0; j < g; ++j)
            for (std::size_t r = 0; r < n; ++r) f[j][r] = ctx.add(f[j][r], ctx.mul(lp, h[j][r]));
    }

    std::vector<Vector> all = e;
    all.insert(all.end(), f.begin(), f.end());
    return SymplecticBasis{static_cast<int>(g), ResidueMatrix::from_columns(ctx, n, all)};
}

std::vector<Vector> isotropic_congruence_lift(const PrecisionContext& ctx, const std::vector<Vector>& base,
                                              const std::vector<int>& congruence) {
    if (base.size() != congruence.size()) throw DimensionMismatch("one congruence level per vector");
    if (base.empty()) return {};
    const std::size_t n = base.front().size();
    std::vector<Vector> out;
    for (std::size_t j = 0; j < base.size(); ++j) {
        if (j > 0 && congruence[j] > congruence[j - 1]) throw InvalidArgument("congruence levels must be nonincreasing");
        const int mj = congruence[j];
        if (j == 0 || mj >= ctx.precision()) {
            out.push_back(base[j]);
            continue;
        }
        const std::uint64_t scale = ctx.power(mj);
        ResidueMatrix a(ctx, j, n);
        Vector rhs(j);
        for (std::size_t i = 0; i < j; ++i) {
            const Vector& u = out[i];
            for (std::size_t k = 0; k < n / 2; ++k) {
                a.set(i, k, ctx.neg(u[k + n / 2]));
                a.set(i, k + n / 2, u[k]);
            }
            std::uint64_t c = symplectic_pairing(ctx, u, base[j]);
            if (c % scale != 0) throw NotTotallyIsotropic("pairing not divisible at the requested congruence level");
            rhs[i] = ctx.neg(c / scale);
        }
        auto sol = solve_unit_pivot(a, rhs);
        if (!sol) throw InvalidArgument("vectors are not independent mod ell");
        Vector v = base[j];
        for (std::size_t r = 0; r < n; ++r) v[r] = ctx.add(v[r], ctx.mul(scale, sol->particular[r]));
        out.push_back(std::move(v));
    }
    return out;
}

Lattice isotropic_lift(const Lattice& subspace, int target_precision) {
    const auto& src = subspace.context();
    const std::size_t n = subspace.ambient_rank();
    if (n % 2 != 0) throw DimensionMismatch("ambient rank must be even");
    ResidueMatrix mod_l = subspace.generators.reduced(1);
    if (!gram_matrix(mod_l).is_zero()) throw NotIsotropicModL("subspace is not isotropic mod ell");
    Lattice basis = saturate(Lattice{mod_l, static_cast<int>(mod_l.cols())});
    PrecisionContext ctx(src.ell(), target_precision);
    if (basis.rank == 0) return Lattice{ResidueMatrix(ctx, n, 1), 0};
    std::vector<Vector> base;
    for (std::size_t j = 0; j < basis.generators.cols(); ++j) base.push_back(basis.generators.column(j));
    std::vector<Vector> lifted = isotropic_congruence_lift(ctx, base, std::vector<int>(base.size(), 1));
    return Lattice::from_columns(ctx, n, lifted);
}

bool contains_span(const Lattice& outer, const Lattice& inner) {
    if (!(outer.context() == inner.context())) throw ContextMismatch("lattices over different rings");
    ResidueMatrix canon = canonical_span(outer.generators);
    for (std::size_t c = 0; c < inner.generators.cols(); ++c)
        if (!span_contains(canon, inner.generators.column(c))) return false;
    return true;
}

bool same_span(const Lattice& a, const Lattice& b) {
    if (!(a.context() == b.context())) throw ContextMismatch("lattices over different rings");
    return canonical_span(a.generators) == canonical_span(b.generators);
}

Lattice random_maximal_isotropic(const PrecisionContext& ctx, int g, SplitMix64& rng) {
    ResidueMatrix s = random_sp_element(ctx, g, rng);
    std::vector<std::size_t> first(static_cast<std::size_t>(g));
    for (std::size_t i = 0; i < first.size(); ++i) first[i] = i;
    return Lattice{s.select_columns(first), g};
}

}  // namespace gspt
