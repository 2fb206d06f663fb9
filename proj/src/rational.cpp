#include "affmon/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace affmon {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    // mpq_set_str accepts some inputs we do not want (whitespace, bases);
    // validate the shape first: -?digits(/digits)?
    auto is_digits = [](std::string_view t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view body = s;
    if (body.front() == '-') body.remove_prefix(1);
    auto slash = body.find('/');
    bool ok = slash == std::string_view::npos
                  ? is_digits(body)
                  : is_digits(body.substr(0, slash)) && is_digits(body.substr(slash + 1));
    if (!ok) throw std::invalid_argument("Rational: malformed literal '" + std::string(s) + "'");

    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), std::string(s).c_str(), 10) != 0)
        throw std::invalid_argument("Rational: malformed literal '" + std::string(s) + "'");
    if (v.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
}

bool Rational::is_square() const {
    if (sgn(v_) < 0) return false;
    return mpz_perfect_square_p(v_.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(v_.get_den().get_mpz_t()) != 0;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(unsigned long k) const {
    mpq_class r;
    mpz_pow_ui(r.get_num().get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(r.get_den().get_mpz_t(), v_.get_den().get_mpz_t(), k);
    return Rational(std::move(r));  // powers of canonical values stay canonical
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

std::string Rational::str() const {
    return is_integer() ? num_str() : num_str() + "/" + den_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace affmon
