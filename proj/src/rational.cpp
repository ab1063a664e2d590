#include "hypdual/rational.hpp"

#include "hypdual/errors.hpp"

#include <cctype>

namespace hypdual {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw division_by_zero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw parse_error("malformed rational: '" + std::string(text) + "'");

    mpq_class v(std::string(num) + "/" + std::string(den));
    if (v.get_den() == 0) throw division_by_zero("rational with zero denominator");
    v.canonicalize();
    if (negative) v = -v;
    return Rational(std::move(v));
}

Rational Rational::operator-() const {
    Rational out;
    out.v_ = -v_;
    return out;
}

Rational Rational::abs() const {
    Rational out;
    out.v_ = ::abs(v_);
    return out;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw division_by_zero();
    v_ /= o.v_;
    return *this;
}

} // namespace hypdual
