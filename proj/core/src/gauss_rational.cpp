#include "asymih/gauss_rational.hpp"

#include <stdexcept>

namespace asymih {

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    if (o.is_zero()) throw std::domain_error("GaussRat: division by zero");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

GaussRat GaussRat::pow(unsigned e) const {
    GaussRat result(1);
    GaussRat base = *this;
    while (e != 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e != 0) base *= base;
    }
    return result;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string GaussRat::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag;
    Rational a = abs(im_);
    if (a == 1) {
        imag = "i";
    } else {
        imag = a.get_str() + "*i";
    }
    if (sgn(re_) == 0) return sgn(im_) < 0 ? "-" + imag : imag;
    return "(" + re_.get_str() + (sgn(im_) < 0 ? " - " : " + ") + imag + ")";
}

}  // namespace asymih
