#include "gsptorsion/rational.hpp"

#include "gsptorsion/errors.hpp"

namespace gspt {

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

ExactRational::ExactRational(std::int64_t num, std::int64_t den)
    : ExactRational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

ExactRational ExactRational::parse(const std::string& s) {
    auto slash = s.find('/');
    mpz_class num, den = 1;
    if (num.set_str(s.substr(0, slash), 10) != 0) throw InvalidArgument("bad rational '" + s + "'");
    if (slash != std::string::npos && den.set_str(s.substr(slash + 1), 10) != 0)
        throw InvalidArgument("bad rational '" + s + "'");
    return ExactRational(num, den);
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
    if (b.q_ == 0) throw InvalidArgument("division by zero");
    return ExactRational(mpq_class(a.q_ / b.q_));
}

}  // namespace gspt
