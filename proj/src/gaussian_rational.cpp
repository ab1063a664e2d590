#include "hypdual/gaussian_rational.hpp"

#include "hypdual/errors.hpp"

namespace hypdual {

GaussianRational GaussianRational::parse(std::string_view text) {
    if (text.empty()) throw parse_error("empty Gaussian rational");

    if (text.size() < 2 || text.substr(text.size() - 2) != "*i")
        return GaussianRational(Rational::parse(text));

    std::string_view body = text.substr(0, text.size() - 2);
    // Split at the sign separating the real and imaginary parts. Rational
    // text has no interior signs, so the last '+'/'-' past position 0 is it.
    std::size_t split = std::string_view::npos;
    for (std::size_t pos = body.size(); pos-- > 1;) {
        if (body[pos] == '+' || body[pos] == '-') {
            split = pos;
            break;
        }
    }
    if (split == std::string_view::npos)
        return {Rational(0), Rational::parse(body)};

    Rational re = Rational::parse(body.substr(0, split));
    Rational im = Rational::parse(body.substr(split + 1));
    if (body[split] == '-') im = -im;
    return {std::move(re), std::move(im)};
}

GaussianRational GaussianRational::inv() const {
    if (is_zero()) throw division_by_zero("inverse of zero");
    Rational n = norm_squared();
    return {re_ / n, -im_ / n};
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    return re_.str() + (im_.sign() > 0 ? "+" : "-") + im_.abs().str() + "*i";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inv();
}

} // namespace hypdual
