#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gspt {

/// Exact rational number in lowest terms with positive denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(std::int64_t n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    ExactRational(const mpz_class& num, const mpz_class& den);
    ExactRational(std::int64_t num, std::int64_t den);
    explicit ExactRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p/q" or "p".
    static ExactRational parse(const std::string& s);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const noexcept { return q_; }

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const { return q_.get_str(); }

    friend ExactRational operator+(const ExactRational& a, const ExactRational& b) { return ExactRational(mpq_class(a.q_ + b.q_)); }
    friend ExactRational operator-(const ExactRational& a, const ExactRational& b) { return ExactRational(mpq_class(a.q_ - b.q_)); }
    friend ExactRational operator*(const ExactRational& a, const ExactRational& b) { return ExactRational(mpq_class(a.q_ * b.q_)); }
    friend ExactRational operator/(const ExactRational& a, const ExactRational& b);

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

}  // namespace gspt
