#include "gsptorsion/torsion.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

namespace gspt {

int TorsionPoint::order_exponent(const PrecisionContext& ctx) const {
    int v = ctx.precision();
    for (auto c : coords) v = std::min(v, ctx.valuation(c));
    return ctx.precision() - v;
}

void TorsionSubgroup::add_generator(const Vector& coords, int order_exp) {
    if (coords.size() != ambient) throw DimensionMismatch("point has the wrong number of coordinates");
    if (order_exp < 0 || order_exp > ctx.precision())
        throw InvalidArgument("order exponent must lie in [0, precision]");
    const std::uint64_t scale = ctx.power(ctx.precision() - order_exp);
    Vector c(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) c[i] = ctx.mul(coords[i] % ctx.modulus(), scale);
    generators.push_back(TorsionPoint{std::move(c)});
}

ResidueMatrix TorsionSubgroup::generator_matrix() const {
    if (generators.empty()) return ResidueMatrix(ctx, ambient, 1);
    std::vector<Vector> cols;
    for (const auto& p : generators) cols.push_back(p.coords);
    return ResidueMatrix::from_columns(ctx, ambient, cols);
}

int SubgroupType::log_order() const {
    int total = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) total += exponents[i] * multiplicities[i];
    return total;
}

AdaptedBasis adapted_basis(const TorsionSubgroup& h) {
    const auto& ctx = h.ctx;
    ResidueMatrix gm = h.generator_matrix();
    SmithForm snf = smith_normal_form(gm);
    ResidueMatrix left_inv = mat_inv(snf.left_transform);
    const std::size_t n = h.ambient;
    std::vector<std::pair<int, std::size_t>> idx;
    for (std::size_t i = 0; i < n; ++i) {
        int e = i < snf.exponents.size() ? snf.exponents[i] : ctx.precision();
        idx.emplace_back(ctx.precision() - e, i);
    }
    std::stable_sort(idx.begin(), idx.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    AdaptedBasis out;
    for (const auto& [order, i] : idx) {
        out.basis.push_back(left_inv.column(i));
        out.orders.push_back(order);
    }
    return out;
}

SubgroupType canonical_type(const TorsionSubgroup& h) {
    AdaptedBasis ab = adapted_basis(h);
    SubgroupType t;
    for (int m : ab.orders) {
        if (m == 0) continue;
        if (!t.exponents.empty() && t.exponents.back() == m) {
            ++t.multiplicities.back();
        } else {
            t.exponents.push_back(m);
            t.multiplicities.push_back(1);
        }
    }
    return t;
}

PairingResult weil_pairing(const PrecisionContext& ctx, const TorsionPoint& p, const TorsionPoint& q) {
    if (p.coords.size() != q.coords.size()) throw DimensionMismatch("points in different ambient ranks");
    const int n = std::max(p.order_exponent(ctx), q.order_exponent(ctx));
    if (n == 0) return {0, 0};
    const PrecisionContext layer = ctx.truncated(n);
    const std::uint64_t shift = ctx.power(ctx.precision() - n);
    Vector x(p.coords.size()), y(q.coords.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = (p.coords[i] / shift) % layer.modulus();
        y[i] = (q.coords[i] / shift) % layer.modulus();
    }
    std::uint64_t value = symplectic_pairing(layer, x, y);
    return {n, n - layer.valuation(value)};
}

namespace {

struct GramProfile {
    std::vector<int> orders;  // positive orders only, nonincreasing
    std::vector<Vector> basis;
    std::vector<std::vector<int>> val;  // valuations of pairings
    std::vector<std::vector<std::uint64_t>> gram;
};

GramProfile gram_profile(const TorsionSubgroup& h) {
    AdaptedBasis ab = adapted_basis(h);
    GramProfile gp;
    for (std::size_t i = 0; i < ab.orders.size(); ++i) {
        if (ab.orders[i] == 0) continue;
        gp.orders.push_back(ab.orders[i]);
        gp.basis.push_back(ab.basis[i]);
    }
    const std::size_t k = gp.orders.size();
    gp.val.assign(k, std::vector<int>(k, h.ctx.precision()));
    gp.gram.assign(k, std::vector<std::uint64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            gp.gram[i][j] = symplectic_pairing(h.ctx, gp.basis[i], gp.basis[j]);
            gp.val[i][j] = h.ctx.valuation(gp.gram[i][j]);
        }
    }
    return gp;
}

}  // namespace

int m1_invariant(const TorsionSubgroup& h) {
    GramProfile gp = gram_profile(h);
    int best = 0;
    for (std::size_t i = 0; i < gp.orders.size(); ++i)
        for (std::size_t j = 0; j < gp.orders.size(); ++j)
            best = std::max(best, std::min(gp.orders[i], gp.orders[j]) - gp.val[i][j]);
    return best;
}

int m_invariant(const TorsionSubgroup& h) {
    GramProfile gp = gram_profile(h);
    int best = 0;
    for (std::size_t i = 0; i < gp.orders.size(); ++i)
        for (std::size_t j = 0; j < gp.orders.size(); ++j)
            if (gp.val[i][j] == 0) best = std::max(best, std::min(gp.orders[i], gp.orders[j]));
    return best;
}

bool is_totally_isotropic(const TorsionSubgroup& h) { return m1_invariant(h) == 0; }

TorsionSubgroup multiply_by_ell_power(const TorsionSubgroup& h, int j) {
    if (j < 0) throw InvalidArgument("exponent must be nonnegative");
    TorsionSubgroup out{h.ctx, h.ambient, {}};
    const std::uint64_t scale = j >= h.ctx.precision() ? 0 : h.ctx.power(j);
    for (const auto& p : h.generators) {
        Vector c(p.coords.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = h.ctx.mul(p.coords[i], scale);
        out.generators.push_back(TorsionPoint{std::move(c)});
    }
    return out;
}

FlagChain isotropy_chain(const TorsionSubgroup& h) {
    GramProfile gp = gram_profile(h);
    SubgroupType type = canonical_type(h);
    const int t = type.t();
    const int m_h = m_invariant(h);
    // smallest class k whose exponent is at most m(H); t+1 when m(H) = 0
    int pairing_class = t + 1;
    for (int k = 1; k <= t; ++k) {
        if (m_h > 0 && type.exponents[static_cast<std::size_t>(k - 1)] <= m_h) {
            pairing_class = k;
            break;
        }
    }
    const std::uint64_t ell = h.ctx.ell();
    const PrecisionContext field = h.ctx.truncated(1);
    FlagChain chain;
    for (int k = t; k >= 1; --k) {
        const int mk = type.exponents[static_cast<std::size_t>(k - 1)];
        std::size_t size = 0;
        while (size < gp.orders.size() && gp.orders[size] >= mk) ++size;
        ResidueMatrix sub(field, size, size);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) sub.set(i, j, gp.gram[i][j] % ell);
        const int s = static_cast<int>(rank_mod_ell(sub)) / 2;
        const int r = static_cast<int>(size) - s;
        chain.levels.push_back({r, s, k >= pairing_class ? 1 : 0});
    }
    return chain;
}

std::vector<Vector> subgroup_elements(const TorsionSubgroup& h, std::size_t max_elements) {
    const auto& ctx = h.ctx;
    struct VecHash {
        std::size_t operator()(const Vector& v) const noexcept {
            std::size_t s = 0;
            for (auto x : v) s = s * 1000003u ^ std::hash<std::uint64_t>{}(x);
            return s;
        }
    };
    std::unordered_set<Vector, VecHash> seen;
    std::deque<Vector> queue;
    Vector zero(h.ambient, 0);
    seen.insert(zero);
    queue.push_back(zero);
    std::vector<Vector> out;
    while (!queue.empty()) {
        Vector cur = std::move(queue.front());
        queue.pop_front();
        out.push_back(cur);
        for (const auto& g : h.generators) {
            Vector nxt(cur.size());
            for (std::size_t i = 0; i < cur.size(); ++i) nxt[i] = ctx.add(cur[i], g.coords[i]);
            if (seen.insert(nxt).second) {
                if (seen.size() > max_elements) throw BudgetExceeded("subgroup element listing", std::to_string(seen.size()));
                queue.push_back(std::move(nxt));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<int, int> pairing_invariants_bruteforce(const TorsionSubgroup& h) {
    std::vector<Vector> elems = subgroup_elements(h, 1u << 12);
    std::vector<TorsionPoint> pts;
    std::vector<int> ord;
    for (auto& e : elems) {
        pts.push_back(TorsionPoint{e});
        ord.push_back(pts.back().order_exponent(h.ctx));
    }
    int m = 0, m1 = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (ord[i] != ord[j] || ord[i] == 0) continue;
            PairingResult pr = weil_pairing(h.ctx, pts[i], pts[j]);
            m1 = std::max(m1, pr.k);
            if (pr.k == pr.n) m = std::max(m, pr.n);
        }
    }
    return {m, m1};
}

ResidueMatrix subgroup_canonical_form(const TorsionSubgroup& h) { return canonical_span(h.generator_matrix()); }

bool subgroup_contains(const TorsionSubgroup& outer, const TorsionSubgroup& inner) {
    if (!(outer.ctx == inner.ctx)) throw ContextMismatch("subgroups at different precisions");
    ResidueMatrix canon = subgroup_canonical_form(outer);
    for (const auto& p : inner.generators)
        if (!span_contains(canon, p.coords)) return false;
    return true;
}

// ---------------------------------------------------------------------------

const StabilizerOracle::Elements& StabilizerOracle::elements(Family family, int g, std::uint64_t ell, int level) {
    auto key = std::make_tuple(static_cast<int>(family), g, ell, level);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
    auto el = std::make_unique<Elements>();
    el->n = static_cast<std::size_t>(2 * g);
    GroupDescriptor d = family == Family::GSp ? GroupDescriptor::gsp(g) : GroupDescriptor::sp(g);
    PrecisionContext ctx(ell, level);
    for_each_element(
        d, ctx,
        [&](std::span<const std::uint64_t> cm, std::uint64_t lambda) {
            el->data.insert(el->data.end(), cm.begin(), cm.end());
            el->multipliers.push_back(lambda);
        },
        opts_);
    auto& ref = *el;
    cache_.emplace(key, std::move(el));
    return ref;
}

StabilizerOracle::Result StabilizerOracle::stabilizer(const TorsionSubgroup& h, Family family) {
    if (family != Family::Sp && family != Family::GSp) throw InvalidArgument("stabilizers are computed in Sp or GSp");
    int top = 0;
    for (const auto& p : h.generators) top = std::max(top, p.order_exponent(h.ctx));
    if (top == 0) return Result{1, 1, 0, {1}};
    const Elements& el = elements(family, h.genus(), h.ctx.ell(), top);
    const PrecisionContext lvl = h.ctx.truncated(top);
    const std::uint64_t shift = h.ctx.power(h.ctx.precision() - top);
    std::vector<Vector> pts;
    for (const auto& p : h.generators) {
        Vector x(p.coords.size());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = (p.coords[i] / shift) % lvl.modulus();
        pts.push_back(std::move(x));
    }
    const std::size_t n = el.n;
    const std::size_t count = el.multipliers.size();
    std::uint64_t fixed = 0;
    std::set<std::uint64_t> mults;
    const unsigned __int128 mod = lvl.modulus();
    for (std::size_t e = 0; e < count; ++e) {
        const std::uint64_t* m = el.data.data() + e * n * n;
        bool ok = true;
        for (const auto& x : pts) {
            for (std::size_t r = 0; r < n && ok; ++r) {
                unsigned __int128 acc = 0;
                for (std::size_t c = 0; c < n; ++c) acc += static_cast<unsigned __int128>(m[c * n + r]) * x[c];
                if (static_cast<std::uint64_t>(acc % mod) != x[r]) ok = false;
            }
            if (!ok) break;
        }
        if (ok) {
            ++fixed;
            mults.insert(el.multipliers[e]);
        }
    }
    Result res;
    res.order = mpz_class(std::to_string(fixed));
    res.index = mpz_class(std::to_string(count)) / res.order;
    res.level = top;
    res.multipliers.assign(mults.begin(), mults.end());
    return res;
}

mpz_class StabilizerOracle::delta(const TorsionSubgroup& h) {
    Result r = stabilizer(h, Family::GSp);
    if (r.level == 0) return 1;
    const std::uint64_t ell = h.ctx.ell();
    mpz_class phi = mpz_class(std::to_string(h.ctx.power(r.level - 1))) * mpz_class(std::to_string(ell - 1));
    return phi / mpz_class(std::to_string(r.multipliers.size()));
}

StabilizerOracle::Result stabilizer_enumerate(const TorsionSubgroup& h, Family family, const EnumerationOptions& opts) {
    StabilizerOracle oracle(opts);
    return oracle.stabilizer(h, family);
}

mpz_class delta_estimate(const TorsionSubgroup& h, const EnumerationOptions& opts) {
    StabilizerOracle oracle(opts);
    return oracle.delta(h);
}

// ---------------------------------------------------------------------------

namespace {

void validate_prediction_input(int g, const SubgroupType& type, const FlagChain& chain) {
    const int t = type.t();
    if (static_cast<int>(type.multiplicities.size()) != t) throw InvalidArgument("type has mismatched lists");
    if (static_cast<int>(chain.levels.size()) != t) throw InvalidArgument("chain length differs from t");
    int partial = 0;
    for (int k = 1; k <= t; ++k) {
        const auto ku = static_cast<std::size_t>(k - 1);
        if (type.exponents[ku] < 1 || type.multiplicities[ku] < 1) throw InvalidArgument("type entries must be positive");
        if (k > 1 && type.exponents[ku] >= type.exponents[ku - 1]) throw InvalidArgument("type exponents must decrease");
        partial += type.multiplicities[ku];
        const auto& lv = chain.by_class(k);
        if (lv.s < 0 || lv.s > lv.r || lv.r > g) throw InvalidArgument("chain entry needs 0 <= s <= r <= g");
        if (lv.r + lv.s != partial) throw InvalidArgument("chain entry does not match the partial sums of the type");
        if (lv.delta != 0 && lv.delta != 1) throw InvalidArgument("delta flags are 0 or 1");
        if (k > 1) {
            const auto& prev = chain.by_class(k - 1);
            if (lv.r < prev.r || lv.s < prev.s) throw InvalidArgument("chain is not nested");
        }
    }
    if (partial > 2 * g) throw InvalidArgument("type exceeds rank 2g");
}

// (cyclotomic part, Sp part) of the prediction.
std::pair<int, int> prediction_parts(int g, const SubgroupType& type, const FlagChain& chain) {
    validate_prediction_input(g, type, chain);
    const int t = type.t();
    int cyc = 0, sp = 0;
    for (int k = 1; k <= t; ++k) {
        const int mk = type.exponents[static_cast<std::size_t>(k - 1)];
        const int next = k < t ? type.exponents[static_cast<std::size_t>(k)] : 0;
        const auto& lv = chain.by_class(k);
        cyc += (mk - next) * lv.delta;
        sp += (mk - next) * codim_prs(g, lv.r, lv.s);
    }
    return {cyc, sp};
}

}  // namespace

int degree_exponent_prediction(int g, const SubgroupType& type, const FlagChain& chain) {
    auto [cyc, sp] = prediction_parts(g, type, chain);
    return cyc + sp;
}

std::pair<int, int> product_degree_exponent(const std::vector<FactorPrediction>& parts) {
    if (parts.empty()) throw InvalidArgument("no factors");
    int m = 0, total = 0;
    for (const auto& p : parts) {
        auto [cyc, sp] = prediction_parts(p.g, p.type, p.chain);
        m = std::max(m, cyc);
        total += sp;
    }
    return {m, m + total};
}

TotallyIsotropicLift isotropic_group_lift(const TorsionSubgroup& h) {
    if (!is_totally_isotropic(h)) throw NotTotallyIsotropic("isotropic_group_lift needs a totally isotropic subgroup");
    const auto& ctx = h.ctx;
    GramProfile gp = gram_profile(h);
    TorsionSubgroup h_ti{ctx, h.ambient, {}};
    if (gp.orders.empty()) return {h_ti, Lattice{ResidueMatrix(ctx, h.ambient, 1), 0}};
    std::vector<Vector> lifted = isotropic_congruence_lift(ctx, gp.basis, gp.orders);
    const int top = gp.orders.front();
    for (const auto& v : lifted) h_ti.add_generator(v, top);
    return {h_ti, Lattice::from_columns(ctx, h.ambient, lifted)};
}

std::vector<TorsionSubgroup> all_subgroups_rank2(std::uint64_t ell, int n) {
    PrecisionContext ctx(ell, n);
    const std::uint64_t q = ctx.modulus();
    if (q > 100) throw BudgetExceeded("subgroup listing", std::to_string(q * q * q * q));
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<TorsionSubgroup> out;
    for (std::uint64_t a = 0; a < q * q; ++a) {
        for (std::uint64_t b = a; b < q * q; ++b) {
            ResidueMatrix m = ResidueMatrix::from_columns(ctx, 2, {Vector{a / q, a % q}, Vector{b / q, b % q}});
            ResidueMatrix canon = canonical_span(m);
            if (!seen.insert(canon.values()).second) continue;
            TorsionSubgroup h{ctx, 2, {}};
            for (std::size_t c = 0; c < canon.cols(); ++c) {
                Vector col = canon.column(c);
                if (std::any_of(col.begin(), col.end(), [](auto x) { return x != 0; }))
                    h.generators.push_back(TorsionPoint{std::move(col)});
            }
            out.push_back(std::move(h));
        }
    }
    return out;
}

}  // namespace gspt
