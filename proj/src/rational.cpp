#include "genus/rational.hpp"

#include <ostream>

#include "genus/errors.hpp"

namespace genus {

Rational::Rational(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return InputError("malformed rational '" + s + "'"); };
    if (s.empty()) throw bad();
    auto valid_int = [](std::string_view t) {
        if (!t.empty() && t.front() == '-') t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-') throw bad();
    mpz_class d(den, 10);
    if (d == 0) throw bad();
    mpq_class q(mpz_class(num, 10), d);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational &Rational::operator+=(const Rational &o) {
    value_ += o.value_;
    return *this;
}
Rational &Rational::operator-=(const Rational &o) {
    value_ -= o.value_;
    return *this;
}
Rational &Rational::operator*=(const Rational &o) {
    value_ *= o.value_;
    return *this;
}
Rational &Rational::operator/=(const Rational &o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::numerator() const { return value_.get_num().get_str(); }
std::string Rational::denominator() const { return value_.get_den().get_str(); }

std::int64_t Rational::to_int64() const {
    if (!is_integer() || !value_.get_num().fits_slong_p())
        throw InputError("expected a machine integer, got " + str());
    return value_.get_num().get_si();
}

std::string Rational::str() const {
    if (is_integer()) return numerator();
    return numerator() + "/" + denominator();
}

Rational Rational::binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(r));
}

Rational Rational::factorial(long n) {
    if (n < 0) throw InputError("factorial of negative number");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(mpq_class(r));
}

Rational Rational::pow(const Rational &base, unsigned exp) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.value_.get_num_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.value_.get_den_mpz_t(), exp);
    return Rational(mpq_class(num, den));
}

Rational Rational::lcm_den(const Rational &a, const Rational &b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.value_.get_den_mpz_t(), b.value_.get_den_mpz_t());
    return Rational(mpq_class(r));
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

}  // namespace genus
