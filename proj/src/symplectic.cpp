#include "gsptorsion/symplectic.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace gspt {

namespace {

mpz_class mpz_pow(std::uint64_t base, unsigned long e) {
    mpz_class b(std::to_string(base));
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

mpz_class totient_power(std::uint64_t ell, int n) {
    return mpz_pow(ell, static_cast<unsigned long>(n - 1)) * (mpz_class(std::to_string(ell)) - 1);
}

void require_genus(int g) {
    if (g < 1) throw InvalidArgument("genus must be >= 1");
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::Sp: return "sp";
        case Family::GSp: return "gsp";
        case Family::Pr: return "pr";
        case Family::Prs: return "prs";
        case Family::E: return "e";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    std::string t = s;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "sp") return Family::Sp;
    if (t == "gsp") return Family::GSp;
    if (t == "pr" || t == "p_r") return Family::Pr;
    if (t == "prs" || t == "p_rs" || t == "p_{r,s}") return Family::Prs;
    if (t == "e") return Family::E;
    throw InvalidArgument("unknown group family '" + s + "'");
}

GroupDescriptor GroupDescriptor::sp(int g) {
    require_genus(g);
    return GroupDescriptor{Family::Sp, g, 0, 0, 0};
}

GroupDescriptor GroupDescriptor::gsp(int g) {
    require_genus(g);
    return GroupDescriptor{Family::GSp, g, 0, 0, 0};
}

GroupDescriptor GroupDescriptor::pr(int g, int r) {
    require_genus(g);
    if (r < 1 || r > g) throw InvalidArgument("P_r needs 1 <= r <= g");
    return GroupDescriptor{Family::Pr, g, 0, r, 0};
}

GroupDescriptor GroupDescriptor::prs(int g, int r, int s) {
    require_genus(g);
    if (s < 0 || s > r || r > g) throw InvalidArgument("P_{r,s} needs 0 <= s <= r <= g");
    return GroupDescriptor{Family::Prs, g, 0, r, s};
}

GroupDescriptor GroupDescriptor::e(int g1, int g2) {
    require_genus(g1);
    require_genus(g2);
    return GroupDescriptor{Family::E, g1, g2, 0, 0};
}

int GroupDescriptor::dimension() const {
    const int sp_dim = 2 * g * g + g;
    switch (family) {
        case Family::Sp: return sp_dim;
        case Family::GSp: return sp_dim + 1;
        case Family::Pr: return sp_dim - codim_pr(g, r);
        case Family::Prs: return r == 0 ? sp_dim : sp_dim - codim_prs(g, r, s);
        case Family::E: return sp_dim + 2 * g2 * g2 + g2 + 1;
    }
    return 0;
}

int GroupDescriptor::rank() const {
    switch (family) {
        case Family::Sp: return g;
        case Family::GSp: return g + 1;
        case Family::Pr:
        case Family::Prs: return g - r;
        case Family::E: return g + g2 + 1;
    }
    return 0;
}

std::size_t GroupDescriptor::matrix_size() const {
    return static_cast<std::size_t>(family == Family::E ? 2 * (g + g2) : 2 * g);
}

std::string GroupDescriptor::name() const {
    switch (family) {
        case Family::Sp: return "Sp(g=" + std::to_string(g) + ")";
        case Family::GSp: return "GSp(g=" + std::to_string(g) + ")";
        case Family::Pr: return "P_" + std::to_string(r) + "(g=" + std::to_string(g) + ")";
        case Family::Prs:
            return "P_{" + std::to_string(r) + "," + std::to_string(s) + "}(g=" + std::to_string(g) + ")";
        case Family::E: return "E(g1=" + std::to_string(g) + ",g2=" + std::to_string(g2) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------

ResidueMatrix standard_form(const PrecisionContext& ctx, int g) {
    require_genus(g);
    const auto n = static_cast<std::size_t>(2 * g);
    const auto gs = static_cast<std::size_t>(g);
    ResidueMatrix j(ctx, n, n);
    for (std::size_t i = 0; i < gs; ++i) {
        j.set(i, gs + i, 1 % ctx.modulus());
        j.set(gs + i, i, ctx.neg(1 % ctx.modulus()));
    }
    return j;
}

std::uint64_t symplectic_pairing(const PrecisionContext& ctx, std::span<const std::uint64_t> u,
                                 std::span<const std::uint64_t> v) {
    if (u.size() != v.size() || u.size() % 2 != 0) throw DimensionMismatch("pairing needs equal even lengths");
    const std::size_t g = u.size() / 2;
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < g; ++i) {
        acc = ctx.add(acc, ctx.mul(u[i], v[g + i]));
        acc = ctx.sub(acc, ctx.mul(u[g + i], v[i]));
    }
    return acc;
}

ResidueMatrix gram_matrix(const ResidueMatrix& v) {
    if (v.rows() % 2 != 0) throw DimensionMismatch("gram_matrix needs an even number of rows");
    const auto& ctx = v.context();
    ResidueMatrix gm(ctx, v.cols(), v.cols());
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < v.cols(); ++c) cols.push_back(v.column(c));
    for (std::size_t i = 0; i < v.cols(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j) gm.set(i, j, symplectic_pairing(ctx, cols[i], cols[j]));
    return gm;
}

Residue multiplier(const ResidueMatrix& m) {
    if (!m.is_square() || m.rows() % 2 != 0) throw DimensionMismatch("multiplier needs a square matrix of even size");
    const auto& ctx = m.context();
    const std::size_t g = m.rows() / 2;
    ResidueMatrix gm = gram_matrix(m);
    const std::uint64_t lambda = gm(0, g);
    if (!ctx.is_unit(lambda)) throw NotSymplecticSimilitude("multiplier is not a unit");
    ResidueMatrix expected = scalar_mul(lambda, standard_form(ctx, static_cast<int>(g)));
    if (!(gm == expected)) throw NotSymplecticSimilitude("t(M) J M is not a multiple of J");
    return Residue::from_reduced(lambda);
}

SymplecticElement SymplecticElement::from_matrix(const ResidueMatrix& m) {
    return SymplecticElement{m, gspt::multiplier(m).value()};
}

namespace {

std::optional<std::uint64_t> try_multiplier(const ResidueMatrix& m) {
    try {
        return multiplier(m).value();
    } catch (const NotSymplecticSimilitude&) {
        return std::nullopt;
    }
}

bool fixes_basis_vectors(const ResidueMatrix& m, int g, int fe, int ff) {
    const std::uint64_t one = 1 % m.context().modulus();
    auto fixes = [&](std::size_t c) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (m(r, c) != (r == c ? one : 0)) return false;
        return true;
    };
    for (int i = 0; i < fe; ++i)
        if (!fixes(static_cast<std::size_t>(i))) return false;
    for (int i = 0; i < ff; ++i)
        if (!fixes(static_cast<std::size_t>(g + i))) return false;
    return true;
}

}  // namespace

bool is_member_pair(const ResidueMatrix& x, const ResidueMatrix& y, const GroupDescriptor& d) {
    if (d.family != Family::E) throw InvalidArgument("is_member_pair applies to family E");
    if (x.rows() != static_cast<std::size_t>(2 * d.g) || !x.is_square() ||
        y.rows() != static_cast<std::size_t>(2 * d.g2) || !y.is_square())
        throw DimensionMismatch("pair blocks do not match (g1, g2)");
    auto lx = try_multiplier(x);
    auto ly = try_multiplier(y);
    return lx && ly && *lx == *ly;
}

bool is_member(const ResidueMatrix& m, const GroupDescriptor& d) {
    const std::size_t n = d.matrix_size();
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("matrix size does not match descriptor");
    if (d.family == Family::E) {
        const auto n1 = static_cast<std::size_t>(2 * d.g);
        const auto n2 = static_cast<std::size_t>(2 * d.g2);
        if (!m.block(0, n1, n1, n2).is_zero() || !m.block(n1, 0, n2, n1).is_zero()) return false;
        return is_member_pair(m.block(0, 0, n1, n1), m.block(n1, n1, n2, n2), d);
    }
    auto lambda = try_multiplier(m);
    if (!lambda) return false;
    if (d.family == Family::GSp) return true;
    if (*lambda != 1 % m.context().modulus()) return false;
    return fixes_basis_vectors(m, d.g, d.fixed_e(), d.fixed_f());
}

bool det_multiplier_check(const SymplecticElement& m) {
    const auto& ctx = m.matrix.context();
    const auto g = static_cast<std::uint64_t>(m.matrix.rows() / 2);
    return determinant(m.matrix).value() == ctx.pow(m.multiplier, g);
}

// ---------------------------------------------------------------------------

mpz_class sp_order(int g, std::uint64_t ell, int n) {
    require_genus(g);
    if (n < 1) throw InvalidArgument("level must be >= 1");
    const auto gu = static_cast<unsigned long>(g);
    mpz_class order = mpz_pow(ell, (2 * gu * gu + gu) * static_cast<unsigned long>(n - 1) + gu * gu);
    for (unsigned long i = 1; i <= gu; ++i) order *= mpz_pow(ell, 2 * i) - 1;
    return order;
}

mpz_class gsp_order(int g, std::uint64_t ell, int n) { return totient_power(ell, n) * sp_order(g, ell, n); }

mpz_class hensel_order(const GroupDescriptor& d, std::uint64_t ell, int m, const mpz_class& level1_order) {
    if (m < 1) throw InvalidArgument("level must be >= 1");
    return mpz_pow(ell, static_cast<unsigned long>((m - 1) * d.dimension())) * level1_order;
}

mpz_class hensel_order(const GroupDescriptor& d, std::uint64_t ell, int m) {
    switch (d.family) {
        case Family::Sp: return hensel_order(d, ell, m, sp_order(d.g, ell, 1));
        case Family::GSp: return hensel_order(d, ell, m, gsp_order(d.g, ell, 1));
        case Family::Pr:
        case Family::Prs: return hensel_order(d, ell, m, group_order_enumerate(d, ell, 1));
        case Family::E: break;
    }
    throw InvalidArgument("orders of family E are not computed");
}

// ---------------------------------------------------------------------------
// Column-by-column generator. Columns are placed in the order
// c_1, c_{g+1}, c_2, c_{g+2}, ...; each new column solves the linear system
// <c_p, x> = lambda J_{p,new} against the columns already placed.

namespace {

struct Enumerator {
    const GroupDescriptor& d;
    const PrecisionContext& ctx;
    const ElementVisitor& visit;
    EnumerationOptions opts;

    std::size_t n = 0;
    std::size_t g = 0;
    std::vector<std::size_t> order;
    std::vector<std::uint64_t> cols;  // column-major n x n
    std::uint64_t lambda = 1;

    Enumerator(const GroupDescriptor& desc, const PrecisionContext& c, const ElementVisitor& v,
               const EnumerationOptions& o)
        : d(desc), ctx(c), visit(v), opts(o) {
        n = d.matrix_size();
        g = n / 2;
        for (std::size_t i = 0; i < g; ++i) {
            order.push_back(i);
            order.push_back(g + i);
        }
        cols.assign(n * n, 0);
    }

    bool is_fixed(std::size_t c) const {
        if (c < g) return static_cast<int>(c) < d.fixed_e();
        return static_cast<int>(c - g) < d.fixed_f();
    }

    std::int64_t j_entry(std::size_t p, std::size_t c) const {
        if (p < g && c == p + g) return 1;
        if (p >= g && c + g == p) return -1;
        return 0;
    }

    std::uint64_t rhs(std::size_t p, std::size_t c) const {
        std::int64_t j = j_entry(p, c);
        if (j == 0) return 0;
        return j > 0 ? lambda : ctx.neg(lambda);
    }

    std::span<const std::uint64_t> column(std::size_t c) const { return {cols.data() + c * n, n}; }

    void place(std::size_t c, std::span<const std::uint64_t> v) { std::copy(v.begin(), v.end(), cols.begin() + static_cast<std::ptrdiff_t>(c * n)); }

    void run() {
        const bool gsp = d.family == Family::GSp;
        if (d.family == Family::E) throw InvalidArgument("family E is not enumerated");
        if (!gsp) {
            lambda = 1 % ctx.modulus();
            descend(0);
            return;
        }
        for (std::uint64_t l = 1; l < ctx.modulus(); ++l) {
            if (!ctx.is_unit(l)) continue;
            lambda = l;
            descend(0);
        }
    }

    void descend(std::size_t depth) {
        if (depth == n) {
            visit(std::span<const std::uint64_t>(cols), lambda);
            return;
        }
        const std::size_t c = order[depth];
        if (is_fixed(c)) {
            Vector e(n, 0);
            e[c] = 1 % ctx.modulus();
            for (std::size_t k = 0; k < depth; ++k) {
                std::size_t p = order[k];
                if (symplectic_pairing(ctx, column(p), e) != rhs(p, c)) return;
            }
            place(c, e);
            descend(depth + 1);
            return;
        }
        if (depth == 0) {
            enumerate_first_column();
            return;
        }
        ResidueMatrix a(ctx, depth, n);
        Vector b(depth);
        for (std::size_t k = 0; k < depth; ++k) {
            auto u = column(order[k]);
            // row of u^T J
            for (std::size_t j = 0; j < g; ++j) {
                a.set(k, j, ctx.neg(u[j + g]));
                a.set(k, j + g, u[j]);
            }
            b[k] = rhs(order[k], c);
        }
        auto sol = solve_unit_pivot(a, b);
        if (!sol) return;
        const std::size_t free = sol->kernel.size();
        std::vector<std::uint64_t> t(free, 0);
        Vector x = sol->particular;
        for (;;) {
            place(c, x);
            descend(depth + 1);
            // odometer increment of t, keeping x = particular + sum t_i kernel_i
            std::size_t i = 0;
            for (; i < free; ++i) {
                const Vector& kv = sol->kernel[i];
                if (++t[i] < ctx.modulus()) {
                    for (std::size_t r = 0; r < n; ++r) x[r] = ctx.add(x[r], kv[r]);
                    break;
                }
                t[i] = 0;
                for (std::size_t r = 0; r < n; ++r) x[r] = ctx.add(x[r], kv[r]);  // wraps back after ell^N steps
            }
            if (i == free) break;
        }
    }

    void enumerate_first_column() {
        Vector x(n, 0);
        std::size_t index = 0;
        for (;;) {
            bool primitive = std::any_of(x.begin(), x.end(), [this](std::uint64_t v) { return ctx.is_unit(v); });
            if (primitive) {
                if (index % opts.parts == opts.part) {
                    place(order[0], x);
                    descend(1);
                }
                ++index;
            }
            std::size_t i = 0;
            for (; i < n; ++i) {
                if (++x[i] < ctx.modulus()) break;
                x[i] = 0;
            }
            if (i == n) break;
        }
    }
};

void check_budget(const GroupDescriptor& d, std::uint64_t ell, int m, int budget_log2) {
    mpz_class est = enumeration_estimate(d, ell, m);
    mpz_class cap;
    mpz_ui_pow_ui(cap.get_mpz_t(), 2, static_cast<unsigned long>(budget_log2));
    if (est > cap) throw BudgetExceeded("enumeration of " + d.name() + " at level " + std::to_string(m), est.get_str());
}

}  // namespace

mpz_class enumeration_estimate(const GroupDescriptor& d, std::uint64_t ell, int m) {
    if (d.family == Family::E) throw InvalidArgument("family E is not enumerated");
    const int n = static_cast<int>(d.matrix_size());
    const int g = n / 2;
    unsigned long free_dims = 0;
    for (int depth = 0; depth < n; ++depth) {
        int c = (depth % 2 == 0) ? depth / 2 : g + depth / 2;
        bool fixed = (c < g) ? c < d.fixed_e() : (c - g) < d.fixed_f();
        if (!fixed) free_dims += static_cast<unsigned long>(n - depth);
    }
    mpz_class est = mpz_pow(ell, free_dims * static_cast<unsigned long>(m));
    if (d.family == Family::GSp) est *= totient_power(ell, m);
    return est;
}

void for_each_element(const GroupDescriptor& d, const PrecisionContext& ctx, const ElementVisitor& visit,
                      const EnumerationOptions& opts) {
    if (opts.parts == 0 || opts.part >= opts.parts) throw InvalidArgument("bad partition");
    check_budget(d, ctx.ell(), ctx.precision(), opts.budget_log2);
    Enumerator e(d, ctx, visit, opts);
    e.run();
}

std::vector<SymplecticElement> enumerate_elements(const GroupDescriptor& d, const PrecisionContext& ctx,
                                                  const EnumerationOptions& opts) {
    std::vector<SymplecticElement> out;
    const std::size_t n = d.matrix_size();
    for_each_element(
        d, ctx,
        [&](std::span<const std::uint64_t> cm, std::uint64_t lambda) {
            ResidueMatrix m(ctx, n, n);
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t r = 0; r < n; ++r) m.set(r, c, cm[c * n + r]);
            out.push_back(SymplecticElement{std::move(m), lambda});
        },
        opts);
    return out;
}

mpz_class group_order_enumerate(const GroupDescriptor& d, std::uint64_t ell, int m, const EnumerationOptions& opts) {
    PrecisionContext ctx(ell, m);
    std::uint64_t count = 0;
    for_each_element(d, ctx, [&count](std::span<const std::uint64_t>, std::uint64_t) { ++count; }, opts);
    return mpz_class(std::to_string(count));
}

mpz_class group_order_full_scan(const GroupDescriptor& d, std::uint64_t ell, int m) {
    if (d.family == Family::E) throw InvalidArgument("family E is not enumerated");
    PrecisionContext ctx(ell, m);
    const std::size_t n = d.matrix_size();
    mpz_class space = mpz_pow(ell, static_cast<unsigned long>(n * n) * static_cast<unsigned long>(m));
    if (space > mpz_class(1 << 26)) throw BudgetExceeded("full scan of " + d.name(), space.get_str());
    ResidueMatrix mat(ctx, n, n);
    std::uint64_t count = 0;
    std::vector<std::uint64_t> digits(n * n, 0);
    for (;;) {
        for (std::size_t i = 0; i < n * n; ++i) mat.set(i / n, i % n, digits[i]);
        if (is_member(mat, d)) ++count;
        std::size_t i = 0;
        for (; i < n * n; ++i) {
            if (++digits[i] < ctx.modulus()) break;
            digits[i] = 0;
        }
        if (i == n * n) break;
    }
    return mpz_class(std::to_string(count));
}

bool order_bounds_check(const GroupDescriptor& d, std::uint64_t ell, const mpz_class& level1_order) {
    const int dim = d.dimension();
    const mpz_class l(std::to_string(ell));
    mpq_class ratio(level1_order, mpz_pow(ell, static_cast<unsigned long>(dim)));
    ratio.canonicalize();
    mpq_class lo(l - 1, l);
    mpq_class hi(l + 1, l);
    lo.canonicalize();
    hi.canonicalize();
    mpq_class lo_pow = 1, hi_pow = 1;
    for (int i = 0; i < dim; ++i) {
        lo_pow *= lo;
        hi_pow *= hi;
    }
    return lo_pow <= ratio && ratio <= hi_pow;
}

int codim_pr(int g, int r) {
    require_genus(g);
    if (r < 1 || r > g) throw InvalidArgument("codim_pr needs 1 <= r <= g");
    return 2 * r * g - r * (r - 1) / 2;
}

int codim_prs(int g, int r, int s) {
    require_genus(g);
    if (s < 0 || s > r || r > g) throw InvalidArgument("codim_prs needs 0 <= s <= r <= g");
    return 2 * s * g + 2 * r * g - r * s - r * (r - 1) / 2 - s * (s - 1) / 2;
}

namespace {

void validate_chain(int g, const std::vector<ChainStep>& chain) {
    if (chain.empty()) throw InvalidArgument("empty chain");
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const auto& st = chain[i];
        if (st.s < 0 || st.s > st.r || st.r > g) throw InvalidArgument("chain step needs 0 <= s <= r <= g");
        if (st.level < 1) throw InvalidArgument("chain levels must be positive");
        if (i > 0) {
            if (st.level <= chain[i - 1].level) throw InvalidArgument("chain levels must increase");
            // G_{i-1} inside G_i: the larger group fixes a subset of the vectors.
            if (st.r > chain[i - 1].r || st.s > chain[i - 1].s) throw InvalidArgument("chain is not nested");
        }
    }
}

}  // namespace

int chain_index_exponent(int g, const std::vector<ChainStep>& chain) {
    validate_chain(g, chain);
    int total = 0;
    int prev = 0;
    for (const auto& st : chain) {
        total += codim_prs(g, st.r, st.s) * (st.level - prev);
        prev = st.level;
    }
    return total;
}

mpz_class chain_index_enumerate(int g, std::uint64_t ell, const std::vector<ChainStep>& chain,
                                const EnumerationOptions& opts) {
    validate_chain(g, chain);
    const auto& top = chain.back();
    PrecisionContext ctx(ell, top.level);
    const auto n = static_cast<std::size_t>(2 * g);
    std::vector<std::uint64_t> mods;
    for (const auto& st : chain) mods.push_back(ctx.power(st.level));
    std::uint64_t count = 0;
    for_each_element(
        GroupDescriptor::prs(g, top.r, top.s), ctx,
        [&](std::span<const std::uint64_t> cm, std::uint64_t) {
            for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
                const auto& st = chain[i];
                auto fixes = [&](std::size_t c) {
                    for (std::size_t r = 0; r < n; ++r) {
                        std::uint64_t want = (r == c) ? 1 : 0;
                        if (cm[c * n + r] % mods[i] != want % mods[i]) return false;
                    }
                    return true;
                };
                for (int k = 0; k < st.r; ++k)
                    if (!fixes(static_cast<std::size_t>(k))) return;
                for (int k = 0; k < st.s; ++k)
                    if (!fixes(static_cast<std::size_t>(g + k))) return;
            }
            ++count;
        },
        opts);
    if (count == 0) throw InvalidArgument("empty chain subgroup");
    return sp_order(g, ell, top.level) / mpz_class(std::to_string(count));
}

// ---------------------------------------------------------------------------

std::pair<SymplecticElement, SymplecticElement> sp_factorize(const SymplecticElement& m) {
    const auto& ctx = m.matrix.context();
    const std::size_t n = m.matrix.rows();
    const std::size_t g = n / 2;
    const std::uint64_t lambda = multiplier(m.matrix).value();
    const std::uint64_t inv = ctx.inverse(lambda);
    ResidueMatrix scalar = ResidueMatrix::identity(ctx, n);
    ResidueMatrix scalar_inv = ResidueMatrix::identity(ctx, n);
    for (std::size_t i = g; i < n; ++i) {
        scalar.set(i, i, lambda);
        scalar_inv.set(i, i, inv);
    }
    ResidueMatrix sp_part = scalar_inv * m.matrix;
    return {SymplecticElement{scalar, lambda}, SymplecticElement{sp_part, multiplier(sp_part).value()}};
}

bool congruence_multiplier_check(const SymplecticElement& m, int k) {
    const auto& ctx = m.matrix.context();
    if (k < 1 || k > ctx.precision()) throw InvalidArgument("k must lie in [1, N]");
    const std::uint64_t mod = ctx.power(k);
    const std::size_t n = m.matrix.rows();
    const std::size_t g = n / 2;
    for (std::size_t c : {std::size_t{0}, g}) {
        for (std::size_t r = 0; r < n; ++r) {
            std::uint64_t want = (r == c) ? 1 : 0;
            if (m.matrix(r, c) % mod != want % mod) return false;
        }
    }
    return true;
}

bool lie_trace_check(const ResidueMatrix& x, const ResidueMatrix& y, int g1, int g2) {
    if (!(x.context() == y.context())) throw ContextMismatch("x and y over different rings");
    if (x.rows() != static_cast<std::size_t>(2 * g1) || !x.is_square() ||
        y.rows() != static_cast<std::size_t>(2 * g2) || !y.is_square())
        throw DimensionMismatch("blocks do not match (g1, g2)");
    const auto& ctx = x.context();
    std::uint64_t lhs = ctx.mul(ctx.reduce(static_cast<std::int64_t>(g2)), trace(x).value());
    std::uint64_t rhs = ctx.mul(ctx.reduce(static_cast<std::int64_t>(g1)), trace(y).value());
    return lhs == rhs;
}

ResidueMatrix random_sp_element(const PrecisionContext& ctx, int g, SplitMix64& rng, int steps) {
    require_genus(g);
    const auto n = static_cast<std::size_t>(2 * g);
    const auto gs = static_cast<std::size_t>(g);
    ResidueMatrix acc = ResidueMatrix::identity(ctx, n);
    for (int step = 0; step < steps; ++step) {
        ResidueMatrix gen = ResidueMatrix::identity(ctx, n);
        switch (step % 3) {
            case 0:
            case 1: {
                // [[I,S],[0,I]] or [[I,0],[S,I]] with S symmetric
                const std::size_t r0 = step % 3 == 0 ? 0 : gs;
                const std::size_t c0 = step % 3 == 0 ? gs : 0;
                for (std::size_t i = 0; i < gs; ++i) {
                    for (std::size_t j = i; j < gs; ++j) {
                        std::uint64_t v = rng.below(ctx.modulus());
                        gen.set(r0 + i, c0 + j, v);
                        gen.set(r0 + j, c0 + i, v);
                    }
                }
                break;
            }
            default: {
                // diag(A, A^{-T}) with A unipotent lower triangular times a unit diagonal
                ResidueMatrix a = ResidueMatrix::identity(ctx, gs);
                for (std::size_t i = 0; i < gs; ++i) {
                    std::uint64_t u;
                    do {
                        u = rng.below(ctx.modulus());
                    } while (!ctx.is_unit(u));
                    a.set(i, i, u);
                    for (std::size_t j = 0; j < i; ++j) a.set(i, j, rng.below(ctx.modulus()));
                }
                ResidueMatrix ait = mat_inv(a).transpose();
                for (std::size_t i = 0; i < gs; ++i) {
                    for (std::size_t j = 0; j < gs; ++j) {
                        gen.set(i, j, a(i, j));
                        gen.set(gs + i, gs + j, ait(i, j));
                    }
                }
                break;
            }
        }
        acc = acc * gen;
    }
    return acc;
}

}  // namespace gspt
