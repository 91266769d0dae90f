#include "gsptorsion/padic.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace gspt {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrecisionContext::PrecisionContext(std::uint64_t ell, int precision)
    : ell_(ell), precision_(precision), modulus_(1) {
    if (!is_prime(ell)) throw InvalidArgument("ell = " + std::to_string(ell) + " is not prime");
    if (precision < 1) throw InvalidArgument("precision must be >= 1");
    for (int i = 0; i < precision; ++i) {
        if (modulus_ > kMaxModulus / ell) throw InvalidArgument("ell^N exceeds 2^62");
        modulus_ *= ell;
    }
}

std::uint64_t PrecisionContext::power(int k) const {
    if (k < 0 || k > precision_) throw InvalidArgument("power exponent out of range");
    std::uint64_t p = 1;
    for (int i = 0; i < k; ++i) p *= ell_;
    return p;
}

PrecisionContext PrecisionContext::truncated(int k) const {
    if (k < 1 || k > precision_) throw InvalidArgument("truncation level out of range");
    return PrecisionContext(ell_, k);
}

std::uint64_t PrecisionContext::reduce(std::int64_t x) const noexcept {
    auto m = static_cast<std::int64_t>(modulus_);
    std::int64_t r = x % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t PrecisionContext::reduce(const mpz_class& x) const {
    mpz_class m(std::to_string(modulus_));
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return std::stoull(r.get_str());
}

std::uint64_t PrecisionContext::reduce_decimal(const std::string& s) const {
    mpz_class x;
    if (x.set_str(s, 10) != 0) throw InvalidArgument("not a decimal integer: '" + s + "'");
    return reduce(x);
}

std::uint64_t PrecisionContext::pow(std::uint64_t a, std::uint64_t e) const noexcept {
    std::uint64_t result = 1 % modulus_;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint64_t PrecisionContext::inverse(std::uint64_t a) const {
    if (!is_unit(a)) throw NotInvertible("residue " + std::to_string(a) + " is not a unit");
    // extended Euclid on signed 128-bit values
    __int128 t = 0, new_t = 1;
    __int128 r = modulus_, new_r = a;
    while (new_r != 0) {
        __int128 q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (t < 0) t += modulus_;
    return static_cast<std::uint64_t>(t);
}

int PrecisionContext::valuation(std::uint64_t a) const noexcept {
    if (a == 0) return precision_;
    int v = 0;
    while (a % ell_ == 0) {
        a /= ell_;
        ++v;
    }
    return v;
}

std::uint64_t PrecisionContext::unit_part(std::uint64_t a) const {
    if (a == 0) throw InvalidArgument("zero has no unit part");
    while (a % ell_ == 0) a /= ell_;
    return a;
}

int valuation(const PrecisionContext& ctx, Residue x) { return ctx.valuation(x.value()); }

// ---------------------------------------------------------------------------

ResidueMatrix::ResidueMatrix(PrecisionContext ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
}

ResidueMatrix::ResidueMatrix(PrecisionContext ctx, std::size_t rows, std::size_t cols,
                             std::span<const std::int64_t> row_major)
    : ResidueMatrix(ctx, rows, cols) {
    if (row_major.size() != rows * cols) throw DimensionMismatch("entry count != rows*cols");
    for (std::size_t i = 0; i < row_major.size(); ++i) data_[i] = ctx_.reduce(row_major[i]);
}

ResidueMatrix ResidueMatrix::identity(const PrecisionContext& ctx, std::size_t n) {
    ResidueMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1 % ctx.modulus());
    return m;
}

ResidueMatrix ResidueMatrix::from_rows(const PrecisionContext& ctx,
                                       std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::size_t nr = rows.size();
    std::size_t nc = nr ? rows.begin()->size() : 0;
    std::vector<std::int64_t> flat;
    for (const auto& r : rows) {
        if (r.size() != nc) throw DimensionMismatch("ragged rows");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return ResidueMatrix(ctx, nr, nc, flat);
}

ResidueMatrix ResidueMatrix::from_columns(const PrecisionContext& ctx, std::size_t rows,
                                          const std::vector<Vector>& columns) {
    ResidueMatrix m(ctx, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
    return m;
}

Vector ResidueMatrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void ResidueMatrix::set_column(std::size_t c, std::span<const std::uint64_t> v) {
    if (v.size() != rows_) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) set(r, c, v[r] % ctx_.modulus());
}

Vector ResidueMatrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ResidueMatrix ResidueMatrix::transpose() const {
    ResidueMatrix t(ctx_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
    return t;
}

ResidueMatrix ResidueMatrix::reduced(int k) const {
    PrecisionContext low = ctx_.truncated(k);
    ResidueMatrix m(low, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] % low.modulus();
    return m;
}

ResidueMatrix ResidueMatrix::lifted(int k) const {
    if (k < ctx_.precision()) throw InvalidArgument("lift target below current precision");
    ResidueMatrix m(PrecisionContext(ctx_.ell(), k), rows_, cols_);
    m.data_ = data_;
    return m;
}

ResidueMatrix ResidueMatrix::select_columns(std::span<const std::size_t> indices) const {
    ResidueMatrix m(ctx_, rows_, indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] >= cols_) throw DimensionMismatch("column index out of range");
        for (std::size_t r = 0; r < rows_; ++r) m.set(r, j, (*this)(r, indices[j]));
    }
    return m;
}

ResidueMatrix ResidueMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    ResidueMatrix m(ctx_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) m.set(r, c, (*this)(r0 + r, c0 + c));
    return m;
}

bool ResidueMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t x) { return x == 0; });
}

// ---------------------------------------------------------------------------

namespace {

void require_same_context(const ResidueMatrix& a, const ResidueMatrix& b) {
    if (!(a.context() == b.context())) throw ContextMismatch("matrices live over different residue rings");
}

}  // namespace

ResidueMatrix mat_mul(const ResidueMatrix& a, const ResidueMatrix& b) {
    require_same_context(a, b);
    if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul: a.cols != b.rows");
    const auto& ctx = a.context();
    const auto mod = static_cast<unsigned __int128>(ctx.modulus());
    ResidueMatrix c(ctx, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            unsigned __int128 acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                acc += static_cast<unsigned __int128>(a(i, k)) * b(k, j);
                acc %= mod;
            }
            c.set(i, j, static_cast<std::uint64_t>(acc));
        }
    }
    return c;
}

ResidueMatrix mat_add(const ResidueMatrix& a, const ResidueMatrix& b) {
    require_same_context(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("mat_add: shape mismatch");
    ResidueMatrix c(a.context(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a.context().add(a(i, j), b(i, j)));
    return c;
}

ResidueMatrix scalar_mul(std::uint64_t s, const ResidueMatrix& m) {
    ResidueMatrix c(m.context(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c.set(i, j, m.context().mul(s, m(i, j)));
    return c;
}

Vector mat_vec(const ResidueMatrix& m, std::span<const std::uint64_t> v) {
    if (v.size() != m.cols()) throw DimensionMismatch("mat_vec: length mismatch");
    const auto& ctx = m.context();
    Vector out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < m.cols(); ++k) acc = ctx.add(acc, ctx.mul(m(i, k), v[k]));
        out[i] = acc;
    }
    return out;
}

ResidueMatrix hconcat(const ResidueMatrix& a, const ResidueMatrix& b) {
    require_same_context(a, b);
    if (a.rows() != b.rows()) throw DimensionMismatch("hconcat: row count mismatch");
    ResidueMatrix c(a.context(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) c.set(i, a.cols() + j, b(i, j));
    }
    return c;
}

ResidueMatrix mat_inv(const ResidueMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("mat_inv: matrix is not square");
    const auto& ctx = m.context();
    const std::size_t n = m.rows();
    ResidueMatrix a = m;
    ResidueMatrix inv = ResidueMatrix::identity(ctx, n);
    auto swap_rows = [n](ResidueMatrix& x, std::size_t r1, std::size_t r2) {
        for (std::size_t c = 0; c < n; ++c) {
            std::uint64_t t = x(r1, c);
            x.set(r1, c, x(r2, c));
            x.set(r2, c, t);
        }
    };
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r) {
            if (ctx.is_unit(a(r, col))) {
                pivot = r;
                break;
            }
        }
        if (pivot == n) throw NotInvertible("mat_inv: determinant is divisible by ell");
        swap_rows(a, col, pivot);
        swap_rows(inv, col, pivot);
        std::uint64_t s = ctx.inverse(a(col, col));
        for (std::size_t c = 0; c < n; ++c) {
            a.set(col, c, ctx.mul(s, a(col, c)));
            inv.set(col, c, ctx.mul(s, inv(col, c)));
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            std::uint64_t f = a(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                a.set(r, c, ctx.sub(a(r, c), ctx.mul(f, a(col, c))));
                inv.set(r, c, ctx.sub(inv(r, c), ctx.mul(f, inv(col, c))));
            }
        }
    }
    return inv;
}

mpz_class integer_determinant(const ResidueMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant: matrix is not square");
    const std::size_t n = m.rows();
    std::vector<mpz_class> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = mpz_class(std::to_string(m(i, j)));
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };
    mpz_class sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && at(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                at(i, j) = v;
            }
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

Residue determinant(const ResidueMatrix& m) {
    return Residue::from_reduced(m.context().reduce(integer_determinant(m)));
}

Residue trace(const ResidueMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("trace: matrix is not square");
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t = m.context().add(t, m(i, i));
    return Residue::from_reduced(t);
}

// ---------------------------------------------------------------------------

SmithForm smith_normal_form(const ResidueMatrix& m) {
    const auto& ctx = m.context();
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    const std::size_t diag = std::min(nr, nc);
    ResidueMatrix a = m;
    ResidueMatrix left = ResidueMatrix::identity(ctx, nr);
    ResidueMatrix right = ResidueMatrix::identity(ctx, nc);

    auto swap_rows = [](ResidueMatrix& x, std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t c = 0; c < x.cols(); ++c) {
            std::uint64_t t = x(r1, c);
            x.set(r1, c, x(r2, c));
            x.set(r2, c, t);
        }
    };
    auto swap_cols = [](ResidueMatrix& x, std::size_t c1, std::size_t c2) {
        if (c1 == c2) return;
        for (std::size_t r = 0; r < x.rows(); ++r) {
            std::uint64_t t = x(r, c1);
            x.set(r, c1, x(r, c2));
            x.set(r, c2, t);
        }
    };
    // row_dst -= f * row_src
    auto row_axpy = [&ctx](ResidueMatrix& x, std::size_t dst, std::size_t src, std::uint64_t f) {
        for (std::size_t c = 0; c < x.cols(); ++c) x.set(dst, c, ctx.sub(x(dst, c), ctx.mul(f, x(src, c))));
    };
    auto col_axpy = [&ctx](ResidueMatrix& x, std::size_t dst, std::size_t src, std::uint64_t f) {
        for (std::size_t r = 0; r < x.rows(); ++r) x.set(r, dst, ctx.sub(x(r, dst), ctx.mul(f, x(r, src))));
    };

    std::vector<int> found(diag, ctx.precision());
    for (std::size_t k = 0; k < diag; ++k) {
        int best_v = ctx.precision();
        std::size_t pr = k, pc = k;
        for (std::size_t r = k; r < nr; ++r) {
            for (std::size_t c = k; c < nc; ++c) {
                int v = ctx.valuation(a(r, c));
                if (v < best_v) {
                    best_v = v;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (best_v == ctx.precision()) break;
        swap_rows(a, k, pr);
        swap_rows(left, k, pr);
        swap_cols(a, k, pc);
        swap_cols(right, k, pc);
        std::uint64_t u_inv = ctx.inverse(ctx.unit_part(a(k, k)));
        for (std::size_t c = 0; c < nc; ++c) a.set(k, c, ctx.mul(u_inv, a(k, c)));
        for (std::size_t c = 0; c < nr; ++c) left.set(k, c, ctx.mul(u_inv, left(k, c)));
        const std::uint64_t pivot = ctx.power(best_v);
        for (std::size_t r = k + 1; r < nr; ++r) {
            if (a(r, k) == 0) continue;
            std::uint64_t f = a(r, k) / pivot;
            row_axpy(a, r, k, f);
            row_axpy(left, r, k, f);
        }
        for (std::size_t c = k + 1; c < nc; ++c) {
            if (a(k, c) == 0) continue;
            std::uint64_t f = a(k, c) / pivot;
            col_axpy(a, c, k, f);
            col_axpy(right, c, k, f);
        }
        found[k] = best_v;
    }

    // Reorder so that exponents are nonincreasing.
    std::vector<std::size_t> order(diag);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&found](std::size_t x, std::size_t y) { return found[x] > found[y]; });
    ResidueMatrix left2 = left;
    ResidueMatrix right2 = right;
    std::vector<int> exponents(diag);
    for (std::size_t p = 0; p < diag; ++p) {
        exponents[p] = found[order[p]];
        for (std::size_t c = 0; c < nr; ++c) left2.set(p, c, left(order[p], c));
        for (std::size_t r = 0; r < nc; ++r) right2.set(r, p, right(r, order[p]));
    }
    return SmithForm{std::move(exponents), std::move(left2), std::move(right2)};
}

std::size_t rank_mod_ell(const ResidueMatrix& m) {
    auto snf = smith_normal_form(m.reduced(1));
    return static_cast<std::size_t>(std::count(snf.exponents.begin(), snf.exponents.end(), 0));
}

// ---------------------------------------------------------------------------
// Howell form, computed on generators viewed as row vectors.

namespace {

struct HowellRow {
    Vector v;
    std::size_t pivot_col;
    int pivot_val;
};

std::vector<HowellRow> howell_rows(const PrecisionContext& ctx, std::vector<Vector> pending, std::size_t n) {
    std::vector<HowellRow> out;
    auto is_zero = [](const Vector& v) { return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; }); };
    std::erase_if(pending, is_zero);
    for (std::size_t col = 0; col < n && !pending.empty(); ++col) {
        int best_v = ctx.precision();
        std::size_t best = pending.size();
        for (std::size_t i = 0; i < pending.size(); ++i) {
            int v = ctx.valuation(pending[i][col]);
            if (v < best_v) {
                best_v = v;
                best = i;
            }
        }
        if (best == pending.size()) continue;
        Vector p = std::move(pending[best]);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
        std::uint64_t u_inv = ctx.inverse(ctx.unit_part(p[col]));
        for (auto& x : p) x = ctx.mul(u_inv, x);
        const std::uint64_t pivot = ctx.power(best_v);
        for (auto& r : pending) {
            if (r[col] == 0) continue;
            std::uint64_t f = r[col] / pivot;
            for (std::size_t c = 0; c < n; ++c) r[c] = ctx.sub(r[c], ctx.mul(f, p[c]));
        }
        // ell^(N-v) * p has a zero pivot entry and must stay in the span.
        Vector annihilated(n);
        const std::uint64_t scale = ctx.power(ctx.precision() - best_v);
        for (std::size_t c = 0; c < n; ++c) annihilated[c] = ctx.mul(scale, p[c]);
        pending.push_back(std::move(annihilated));
        std::erase_if(pending, is_zero);
        out.push_back(HowellRow{std::move(p), col, best_v});
    }
    // Reduce the entries above each pivot into [0, ell^v).
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::uint64_t pivot = ctx.power(out[i].pivot_val);
        for (std::size_t j = 0; j < i; ++j) {
            std::uint64_t q = out[j].v[out[i].pivot_col] / pivot;
            if (q == 0) continue;
            for (std::size_t c = 0; c < n; ++c) out[j].v[c] = ctx.sub(out[j].v[c], ctx.mul(q, out[i].v[c]));
        }
    }
    return out;
}

}  // namespace

ResidueMatrix canonical_span(const ResidueMatrix& m) {
    std::vector<Vector> gens;
    for (std::size_t c = 0; c < m.cols(); ++c) gens.push_back(m.column(c));
    auto rows = howell_rows(m.context(), std::move(gens), m.rows());
    if (rows.empty()) return ResidueMatrix(m.context(), m.rows(), 1);
    std::vector<Vector> cols;
    for (auto& r : rows) cols.push_back(std::move(r.v));
    return ResidueMatrix::from_columns(m.context(), m.rows(), cols);
}

bool span_contains(const ResidueMatrix& canonical, std::span<const std::uint64_t> v) {
    const auto& ctx = canonical.context();
    const std::size_t n = canonical.rows();
    if (v.size() != n) throw DimensionMismatch("span_contains: length mismatch");
    Vector w(v.begin(), v.end());
    std::size_t col = 0;
    for (std::size_t j = 0; j < canonical.cols(); ++j) {
        Vector g = canonical.column(j);
        std::size_t pc = 0;
        while (pc < n && g[pc] == 0) ++pc;
        if (pc == n) continue;  // zero placeholder column
        for (; col < pc; ++col)
            if (w[col] != 0) return false;
        std::uint64_t pivot = g[pc];
        if (w[pc] % pivot != 0) return false;
        std::uint64_t f = w[pc] / pivot;
        for (std::size_t c = 0; c < n; ++c) w[c] = ctx.sub(w[c], ctx.mul(f, g[c]));
    }
    return std::all_of(w.begin(), w.end(), [](auto x) { return x == 0; });
}

std::optional<AffineSolution> solve_unit_pivot(const ResidueMatrix& a, std::span<const std::uint64_t> b) {
    const auto& ctx = a.context();
    const std::size_t k = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != k) throw DimensionMismatch("solve: rhs length mismatch");
    std::vector<Vector> rows(k);
    Vector rhs(b.begin(), b.end());
    for (std::size_t i = 0; i < k; ++i) rows[i] = a.row(i);
    std::vector<std::size_t> pivot_col(k);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t pc = n;
        for (std::size_t c = 0; c < n; ++c) {
            if (!used[c] && ctx.is_unit(rows[i][c])) {
                pc = c;
                break;
            }
        }
        if (pc == n) return std::nullopt;
        used[pc] = true;
        pivot_col[i] = pc;
        std::uint64_t s = ctx.inverse(rows[i][pc]);
        for (auto& x : rows[i]) x = ctx.mul(s, x);
        rhs[i] = ctx.mul(s, rhs[i]);
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i || rows[j][pc] == 0) continue;
            std::uint64_t f = rows[j][pc];
            for (std::size_t c = 0; c < n; ++c) rows[j][c] = ctx.sub(rows[j][c], ctx.mul(f, rows[i][c]));
            rhs[j] = ctx.sub(rhs[j], ctx.mul(f, rhs[i]));
        }
    }
    AffineSolution sol;
    sol.particular.assign(n, 0);
    for (std::size_t i = 0; i < k; ++i) sol.particular[pivot_col[i]] = rhs[i];
    for (std::size_t f = 0; f < n; ++f) {
        if (used[f]) continue;
        Vector v(n, 0);
        v[f] = 1 % ctx.modulus();
        for (std::size_t i = 0; i < k; ++i) v[pivot_col[i]] = ctx.neg(rows[i][f]);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

}  // namespace gspt
