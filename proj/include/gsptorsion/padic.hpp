#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gsptorsion/errors.hpp"

namespace gspt {

// Largest modulus ell^N accepted. Products of two residues are formed in
// unsigned __int128, so anything below 2^62 is exact with headroom.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

bool is_prime(std::uint64_t n);

/// A prime ell and working exponent N; fixes the residue ring Z/ell^N.
class PrecisionContext {
public:
    PrecisionContext(std::uint64_t ell, int precision);

    std::uint64_t ell() const noexcept { return ell_; }
    int precision() const noexcept { return precision_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    /// ell^k for 0 <= k <= precision.
    std::uint64_t power(int k) const;

    /// Same prime, precision k (1 <= k <= precision).
    PrecisionContext truncated(int k) const;

    std::uint64_t reduce(std::int64_t x) const noexcept;
    std::uint64_t reduce(const mpz_class& x) const;
    std::uint64_t reduce_decimal(const std::string& s) const;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t s = a + b;
        return s >= modulus_ ? s - modulus_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
        return a >= b ? a - b : a + modulus_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : modulus_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % modulus_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;

    bool is_unit(std::uint64_t a) const noexcept { return a % ell_ != 0; }

    /// Inverse of a unit; throws NotInvertible otherwise.
    std::uint64_t inverse(std::uint64_t a) const;

    /// Largest v <= N with ell^v | a (N for a == 0).
    int valuation(std::uint64_t a) const noexcept;

    /// Splits a nonzero a as ell^v * u with u a unit; returns u.
    std::uint64_t unit_part(std::uint64_t a) const;

    friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

private:
    std::uint64_t ell_;
    int precision_;
    std::uint64_t modulus_;
};

/// An element of Z/ell^N, always stored reduced.
class Residue {
public:
    constexpr Residue() = default;
    Residue(const PrecisionContext& ctx, std::int64_t x) : value_(ctx.reduce(x)) {}
    static constexpr Residue from_reduced(std::uint64_t v) {
        Residue r;
        r.value_ = v;
        return r;
    }

    constexpr std::uint64_t value() const noexcept { return value_; }
    bool is_unit(const PrecisionContext& ctx) const noexcept { return ctx.is_unit(value_); }

    friend constexpr bool operator==(Residue, Residue) = default;

private:
    std::uint64_t value_ = 0;
};

int valuation(const PrecisionContext& ctx, Residue x);

using Vector = std::vector<std::uint64_t>;

/// Dense row-major matrix over Z/ell^N.
class ResidueMatrix {
public:
    ResidueMatrix(PrecisionContext ctx, std::size_t rows, std::size_t cols);
    ResidueMatrix(PrecisionContext ctx, std::size_t rows, std::size_t cols,
                  std::span<const std::int64_t> row_major);

    static ResidueMatrix identity(const PrecisionContext& ctx, std::size_t n);
    static ResidueMatrix from_rows(const PrecisionContext& ctx,
                                   std::initializer_list<std::initializer_list<std::int64_t>> rows);
    /// Columns given as vectors of already reduced residues.
    static ResidueMatrix from_columns(const PrecisionContext& ctx, std::size_t rows,
                                      const std::vector<Vector>& columns);

    const PrecisionContext& context() const noexcept { return ctx_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    std::uint64_t operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Residue at(std::size_t r, std::size_t c) const noexcept {
        return Residue::from_reduced((*this)(r, c));
    }
    void set(std::size_t r, std::size_t c, std::uint64_t reduced) noexcept { data_[r * cols_ + c] = reduced; }
    void set_value(std::size_t r, std::size_t c, std::int64_t x) noexcept { set(r, c, ctx_.reduce(x)); }

    Vector column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const std::uint64_t> v);
    Vector row(std::size_t r) const;

    ResidueMatrix transpose() const;
    /// Reduction to precision k <= N.
    ResidueMatrix reduced(int k) const;
    /// Lift of every entry to precision k >= N through the canonical representative.
    ResidueMatrix lifted(int k) const;
    ResidueMatrix select_columns(std::span<const std::size_t> indices) const;
    ResidueMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    bool is_zero() const noexcept;
    const std::vector<std::uint64_t>& values() const noexcept { return data_; }

    friend bool operator==(const ResidueMatrix& a, const ResidueMatrix& b) {
        return a.ctx_ == b.ctx_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    PrecisionContext ctx_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> data_;
};

ResidueMatrix mat_mul(const ResidueMatrix& a, const ResidueMatrix& b);
inline ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b) { return mat_mul(a, b); }
ResidueMatrix mat_add(const ResidueMatrix& a, const ResidueMatrix& b);
ResidueMatrix scalar_mul(std::uint64_t s, const ResidueMatrix& m);
Vector mat_vec(const ResidueMatrix& m, std::span<const std::uint64_t> v);
ResidueMatrix hconcat(const ResidueMatrix& a, const ResidueMatrix& b);

/// Inverse of a square matrix whose determinant is a unit mod ell.
ResidueMatrix mat_inv(const ResidueMatrix& m);

/// Exact integer determinant of the canonical lift (fraction-free Bareiss).
mpz_class integer_determinant(const ResidueMatrix& m);
Residue determinant(const ResidueMatrix& m);
Residue trace(const ResidueMatrix& m);

struct SmithForm {
    // Elementary-divisor exponents, nonincreasing; N encodes a zero divisor.
    std::vector<int> exponents;
    ResidueMatrix left_transform;
    ResidueMatrix right_transform;
};

/// left * m * right = diag(ell^exponents). Pivot: minimal valuation,
/// ties broken by row-major position.
SmithForm smith_normal_form(const ResidueMatrix& m);

/// Rank over F_ell of the reduction of m.
std::size_t rank_mod_ell(const ResidueMatrix& m);

/// Canonical (Howell) generating set of the column span of m. Two matrices
/// span the same submodule of (Z/ell^N)^rows iff their canonical spans are equal.
ResidueMatrix canonical_span(const ResidueMatrix& m);
bool span_contains(const ResidueMatrix& canonical, std::span<const std::uint64_t> v);

/// Solution set {particular + sum t_i kernel[i]} of A x = b, parametrized
/// bijectively by t in (Z/ell^N)^k. Requires the rows of A to be independent
/// mod ell; returns nullopt when they are not.
struct AffineSolution {
    Vector particular;
    std::vector<Vector> kernel;
};
std::optional<AffineSolution> solve_unit_pivot(const ResidueMatrix& a, std::span<const std::uint64_t> b);

}  // namespace gspt
