#include "gsptorsion/exponents.hpp"

#include <algorithm>
#include <functional>

#include "gsptorsion/errors.hpp"
#include "gsptorsion/symplectic.hpp"

namespace gspt {

namespace {

constexpr long kBoxBudget = 10'000'000;

void validate_shape(const ProductShape& shape) {
    if (shape.empty()) throw InvalidArgument("shape needs at least one factor");
    for (const auto& f : shape)
        if (f.g < 1 || f.n < 1) throw InvalidArgument("factors need g >= 1 and n >= 1");
}

// Tracks the running maximum, the witnesses attaining it and the full table.
class MaxTracker {
public:
    explicit MaxTracker(bool keep_table = true) : keep_table_(keep_table) {}

    void offer(const Witness& w, const ExactRational& v) {
        if (keep_table_) table_.emplace_back(w, v);
        if (!have_ || v > best_) {
            best_ = v;
            have_ = true;
            maximizers_.clear();
        }
        if (v == best_) maximizers_.push_back(w);
    }

    ExponentReport finish() {
        if (!have_) throw InvalidArgument("empty candidate set");
        std::sort(maximizers_.begin(), maximizers_.end());
        return ExponentReport{best_, std::move(maximizers_), std::move(table_)};
    }

private:
    bool keep_table_;
    bool have_ = false;
    ExactRational best_;
    std::vector<Witness> maximizers_;
    std::vector<std::pair<Witness, ExactRational>> table_;
};

// Calls visit(x) for every x in the box prod [lo_i, hi_i].
void for_each_in_box(const std::vector<int>& lo, const std::vector<int>& hi,
                     const std::function<void(const std::vector<int>&)>& visit) {
    long size = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (hi[i] < lo[i]) return;
        size *= hi[i] - lo[i] + 1;
        if (size > kBoxBudget) throw BudgetExceeded("box scan", "more than " + std::to_string(kBoxBudget));
    }
    std::vector<int> x = lo;
    for (;;) {
        visit(x);
        std::size_t i = 0;
        for (; i < x.size(); ++i) {
            if (++x[i] <= hi[i]) break;
            x[i] = lo[i];
        }
        if (i == x.size()) return;
    }
}

// Every nonincreasing tuple of length k with entries in [0, top].
void for_each_chain(std::size_t k, int top, const std::function<void(const std::vector<long>&)>& visit) {
    std::vector<long> m(k, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long cap) {
        if (i == k) {
            visit(m);
            return;
        }
        for (long v = 0; v <= cap; ++v) {
            m[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, top);
}

void validate_ab(const IntList& a, const IntList& b) {
    if (a.size() != b.size()) throw InvalidArgument("a and b must have equal lengths");
    if (a.empty()) throw InvalidArgument("a and b must be nonempty");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 1 || b[i] < 1) throw InvalidArgument("entries must be positive");
}

void validate_multi(const std::vector<IntList>& a, const std::vector<IntList>& b) {
    if (a.size() != b.size() || a.empty()) throw InvalidArgument("a and b must have the same nonempty shape");
    for (std::size_t i = 0; i < a.size(); ++i) validate_ab(a[i], b[i]);
}

}  // namespace

ExactRational gamma_simple(int g) {
    if (g < 1) throw InvalidArgument("genus must be >= 1");
    return ExactRational(2L * g, 2L * g * g + g + 1);
}

long masser_bound(const ProductShape& shape) {
    validate_shape(shape);
    long total = 0;
    for (const auto& f : shape) total += static_cast<long>(f.g) * f.n;
    return total;
}

long mt_dimension(const ProductShape& shape, const std::vector<int>& subset) {
    validate_shape(shape);
    if (subset.empty()) throw InvalidArgument("subset must be nonempty");
    long dim = 1;
    for (int i : subset) {
        if (i < 1 || i > static_cast<int>(shape.size())) throw InvalidArgument("subset index out of range");
        const long g = shape[static_cast<std::size_t>(i - 1)].g;
        dim += 2 * g * g + g;
    }
    return dim;
}

ExponentReport alpha_product(const ProductShape& shape) {
    validate_shape(shape);
    const std::size_t d = shape.size();
    if (d > 30) throw InvalidArgument("alpha_product supports at most 30 factors");
    MaxTracker tracker(d <= 16);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d); ++mask) {
        Witness subset;
        long num = 0, den = 1;
        for (std::size_t i = 0; i < d; ++i) {
            if (!(mask >> i & 1)) continue;
            subset.push_back(static_cast<int>(i + 1));
            const long g = shape[i].g;
            num += 2 * shape[i].n * g;
            den += 2 * g * g + g;
        }
        tracker.offer(subset, ExactRational(num, den));
    }
    return tracker.finish();
}

ExponentReport rho0(const ProductShape& shape) {
    validate_shape(shape);
    std::vector<int> lo, hi;
    for (const auto& f : shape) {
        lo.push_back(2);
        hi.push_back(2 * f.g);
    }
    MaxTracker tracker;
    for_each_in_box(lo, hi, [&](const std::vector<int>& x) {
        long num = 0, twice_den = 2;
        for (std::size_t i = 0; i < x.size(); ++i) {
            num += static_cast<long>(shape[i].n) * x[i];
            twice_den += static_cast<long>(x[i]) * (4L * shape[i].g - x[i] + 1);
        }
        tracker.offer(Witness(x.begin(), x.end()), ExactRational(2 * num, twice_den));
    });
    return tracker.finish();
}

ExponentReport rho0_rs(const ProductShape& shape) {
    validate_shape(shape);
    std::vector<int> lo, hi;
    for (const auto& f : shape) {
        lo.insert(lo.end(), {1, 1});
        hi.insert(hi.end(), {f.g, f.g});
    }
    MaxTracker tracker;
    for_each_in_box(lo, hi, [&](const std::vector<int>& rs) {
        long num = 0, twice_den = 2;
        for (std::size_t i = 0; i < shape.size(); ++i) {
            const long r = rs[2 * i], s = rs[2 * i + 1];
            if (s > r) return;
            num += shape[i].n * (r + s);
            twice_den += (r + s) * (4L * shape[i].g - (r + s - 1));
        }
        tracker.offer(Witness(rs.begin(), rs.end()), ExactRational(2 * num, twice_den));
    });
    return tracker.finish();
}

ExponentReport rho1(const ProductShape& shape) {
    validate_shape(shape);
    std::vector<int> lo(shape.size(), 0), hi;
    for (const auto& f : shape) hi.push_back(f.g);
    MaxTracker tracker;
    for_each_in_box(lo, hi, [&](const std::vector<int>& r) {
        long num = 0, twice_den = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            num += static_cast<long>(shape[i].n) * r[i];
            twice_den += static_cast<long>(r[i]) * (4L * shape[i].g - r[i] + 1);
        }
        if (twice_den == 0) return;  // the all-zero tuple
        tracker.offer(Witness(r.begin(), r.end()), ExactRational(2 * num, twice_den));
    });
    return tracker.finish();
}

bool verify_rho_bounds(const ProductShape& shape) {
    ExactRational alpha = alpha_product(shape).value;
    return rho0(shape).value <= alpha && rho1(shape).value <= alpha;
}

ExponentReport prefix_max(const IntList& a, const IntList& b) {
    validate_ab(a, b);
    MaxTracker tracker;
    long sa = 0, sb = 0;
    for (std::size_t h = 0; h < a.size(); ++h) {
        sa += a[h];
        sb += b[h];
        tracker.offer(Witness{static_cast<int>(h + 1)}, ExactRational(sa, sb));
    }
    return tracker.finish();
}

ExponentReport prefix_max_multi(const std::vector<IntList>& a, const std::vector<IntList>& b) {
    validate_multi(a, b);
    std::vector<int> lo(a.size(), 1), hi;
    for (const auto& row : a) hi.push_back(static_cast<int>(row.size()));
    MaxTracker tracker;
    for_each_in_box(lo, hi, [&](const std::vector<int>& h) {
        long sa = 0, sb = 0;
        for (std::size_t i = 0; i < h.size(); ++i) {
            for (int j = 0; j < h[i]; ++j) {
                sa += a[i][static_cast<std::size_t>(j)];
                sb += b[i][static_cast<std::size_t>(j)];
            }
        }
        tracker.offer(Witness(h.begin(), h.end()), ExactRational(sa, sb));
    });
    return tracker.finish();
}

ExactRational sup_bruteforce(const IntList& a, const IntList& b, int grid_bound) {
    validate_ab(a, b);
    if (grid_bound < 1) throw InvalidArgument("grid bound must be >= 1");
    if (a.size() > 8 || grid_bound > 64) throw BudgetExceeded("grid scan", "bound^k too large");
    bool have = false;
    ExactRational best;
    for_each_chain(a.size(), grid_bound, [&](const std::vector<long>& m) {
        long num = 0, den = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            num += a[i] * m[i];
            den += b[i] * m[i];
        }
        if (den == 0) return;
        ExactRational v(num, den);
        if (!have || v > best) {
            best = v;
            have = true;
        }
    });
    return best;
}

namespace {

ExactRational multi_grid(const std::vector<IntList>& a, const std::vector<IntList>& b, int grid_bound, bool tied) {
    validate_multi(a, b);
    if (grid_bound < 1) throw InvalidArgument("grid bound must be >= 1");
    // per-factor chain lists with their partial dot products
    struct Part {
        long num;
        long den;
        long lead;
    };
    std::vector<std::vector<Part>> per_factor;
    long total = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<Part> parts;
        for_each_chain(a[i].size(), grid_bound, [&](const std::vector<long>& m) {
            long num = 0, den = 0;
            for (std::size_t j = 0; j < m.size(); ++j) {
                num += a[i][j] * m[j];
                den += b[i][j] * m[j];
            }
            parts.push_back({num, den, m[0]});
        });
        total *= static_cast<long>(parts.size());
        if (total > kBoxBudget) throw BudgetExceeded("multi grid scan", "more than " + std::to_string(kBoxBudget));
        per_factor.push_back(std::move(parts));
    }
    bool have = false;
    ExactRational best;
    std::vector<std::size_t> idx(per_factor.size(), 0);
    for (;;) {
        long num = 0, den = 0;
        bool ok = true;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            const Part& p = per_factor[i][idx[i]];
            if (tied && (p.lead == 0 || p.lead != per_factor[0][idx[0]].lead)) ok = false;
            num += p.num;
            den += p.den;
        }
        if (ok && den > 0) {
            ExactRational v(num, den);
            if (!have || v > best) {
                best = v;
                have = true;
            }
        }
        std::size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++idx[i] < per_factor[i].size()) break;
            idx[i] = 0;
        }
        if (i == idx.size()) break;
    }
    return best;
}

}  // namespace

ExactRational sup_bruteforce_multi(const std::vector<IntList>& a, const std::vector<IntList>& b, int grid_bound) {
    return multi_grid(a, b, grid_bound, true);
}

ExactRational sup_bruteforce_multi_independent(const std::vector<IntList>& a, const std::vector<IntList>& b,
                                               int grid_bound) {
    return multi_grid(a, b, grid_bound, false);
}

ExactRational cut_max_allowing_empty(const std::vector<IntList>& a, const std::vector<IntList>& b) {
    validate_multi(a, b);
    std::vector<int> lo(a.size(), 0), hi;
    for (const auto& row : a) hi.push_back(static_cast<int>(row.size()));
    bool have = false;
    ExactRational best;
    for_each_in_box(lo, hi, [&](const std::vector<int>& h) {
        long sa = 0, sb = 0;
        for (std::size_t i = 0; i < h.size(); ++i) {
            for (int j = 0; j < h[i]; ++j) {
                sa += a[i][static_cast<std::size_t>(j)];
                sb += b[i][static_cast<std::size_t>(j)];
            }
        }
        if (sb == 0) return;
        ExactRational v(sa, sb);
        if (!have || v > best) {
            best = v;
            have = true;
        }
    });
    return best;
}

// ---------------------------------------------------------------------------

namespace {

// Largest a with a^k <= x.
long integer_root(long x, int k) {
    mpz_class r;
    mpz_root(r.get_mpz_t(), mpz_class(x).get_mpz_t(), static_cast<unsigned long>(k));
    return r.get_si();
}

long half_central_binomial(int k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
    c /= 2;
    return c.fits_slong_p() ? c.get_si() : -1;
}

}  // namespace

std::pair<bool, ExceptionalWitness> is_exceptional(long g) {
    if (g < 1) throw InvalidArgument("g must be >= 1");
    // 2g = (2a)^k: divide out 2^{k-1} and test for an exact k-th power.
    for (int k = 3; k <= 2 + 64 && (1L << std::min(k - 1, 62)) <= g; k += 2) {
        const long base = 1L << (k - 1);
        if (g % base != 0) continue;
        const long rest = g / base;
        const long a = integer_root(rest, k);
        mpz_class check;
        mpz_ui_pow_ui(check.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
        if (a >= 1 && check == rest) return {true, {ExceptionalWitness::Kind::Power, k, a}};
    }
    for (int k = 3;; k += 2) {
        const long v = half_central_binomial(k);
        if (v < 0 || v > g) break;
        if (v == g) return {true, {ExceptionalWitness::Kind::Binomial, k, 0}};
    }
    return {false, {}};
}

bool is_exceptional_scan(long g) {
    const mpz_class target(g);
    for (unsigned long k = 3; k < 130; k += 2) {
        for (unsigned long a = 1;; ++a) {
            mpz_class v, two;
            mpz_ui_pow_ui(v.get_mpz_t(), a, k);
            mpz_ui_pow_ui(two.get_mpz_t(), 2, k - 1);
            v *= two;
            if (v == target) return true;
            if (v > target) break;
        }
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), 2 * k, k);
        if (c == 2 * target) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------

ExponentReport gamma_ratio_search(int g, int max_t, int max_level) {
    if (g < 1 || max_t < 1 || max_level < 1) throw InvalidArgument("g, max_t and max_level must be >= 1");
    MaxTracker tracker;
    long visited = 0;
    std::vector<int> levels, mults;
    std::vector<std::pair<int, int>> rs;  // per class k (1-based from the top)

    auto emit = [&]() {
        const int t = static_cast<int>(levels.size());
        long log_order = 0, pred = 0;
        for (int k = 1; k <= t; ++k) {
            const auto ku = static_cast<std::size_t>(k - 1);
            const int next = k < t ? levels[ku + 1] : 0;
            const auto [r, s] = rs[ku];
            log_order += static_cast<long>(levels[ku]) * mults[ku];
            pred += static_cast<long>(levels[ku] - next) * ((s != 0 ? 1 : 0) + codim_prs(g, r, s));
        }
        Witness w{t};
        w.insert(w.end(), levels.begin(), levels.end());
        w.insert(w.end(), mults.begin(), mults.end());
        for (int i = 1; i <= t; ++i) {
            const auto [r, s] = rs[static_cast<std::size_t>(t - i)];
            w.insert(w.end(), {r, s, s != 0 ? 1 : 0});
        }
        if (++visited > kBoxBudget) throw BudgetExceeded("gamma ratio search", "more than " + std::to_string(kBoxBudget));
        tracker.offer(w, ExactRational(log_order, pred));
    };

    // chains: (r_k, s_k) with r_k + s_k = partial sum, s <= r <= g, nondecreasing in k
    std::function<void(std::size_t, int, int, int)> chains = [&](std::size_t k, int partial, int pr, int ps) {
        if (k == levels.size()) {
            emit();
            return;
        }
        const int total = partial + mults[k];
        for (int s = ps; 2 * s <= total; ++s) {
            const int r = total - s;
            if (r < pr || r > g) continue;
            rs.emplace_back(r, s);
            chains(k + 1, total, r, s);
            rs.pop_back();
        }
    };

    std::function<void(int)> multiplicities = [&](int budget) {
        if (mults.size() == levels.size()) {
            chains(0, 0, 0, 0);
            return;
        }
        for (int a = 1; a <= budget; ++a) {
            mults.push_back(a);
            multiplicities(budget - a);
            mults.pop_back();
        }
    };

    std::function<void(int)> exponents = [&](int below) {
        if (!levels.empty()) multiplicities(2 * g);
        if (static_cast<int>(levels.size()) == max_t) return;
        for (int m = below - 1; m >= 1; --m) {
            levels.push_back(m);
            exponents(m);
            levels.pop_back();
        }
    };
    exponents(max_level + 1);
    return tracker.finish();
}

}  // namespace gspt
