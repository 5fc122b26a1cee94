#include "phirho/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace phirho {

namespace {

bool looks_like_integer(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s, const char* what) {
    if (!looks_like_integer(s))
        throw std::invalid_argument(std::string("rational: malformed ") + what +
                                    " in \"" + std::string(s) + "\"");
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    if (v_.get_den() == 0) throw std::invalid_argument("rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    mpz_class num, den;
    if (slash == std::string_view::npos) {
        num = parse_integer(text, "numerator");
        den = 1;
    } else {
        num = parse_integer(text.substr(0, slash), "numerator");
        den = parse_integer(text.substr(slash + 1), "denominator");
    }
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    mpq_class q(num);
    q /= mpq_class(den);
    return Rational(std::move(q));
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::num_str() const { return v_.get_num().get_str(); }
std::string Rational::den_str() const { return v_.get_den().get_str(); }

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw std::domain_error("rational: " + str() + " is not a machine integer");
    return v_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0) throw std::invalid_argument("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow_ui(const Rational& base, unsigned exp) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den().get_mpz_t(), exp);
    return Rational(mpq_class(num) / mpq_class(den));
}

std::strong_ordering compare_pow32(const Rational& c_squared,
                                   const Rational& x,
                                   const Rational& y) {
    if (c_squared.sign() < 0)
        throw std::invalid_argument("compare_pow32: squared coefficient is negative");
    if (x.sign() < 0)
        throw std::invalid_argument("compare_pow32: radicand is negative");
    if (y.sign() < 0) return std::strong_ordering::greater;
    return c_squared * x * x * x <=> y * y;
}

}  // namespace phirho
