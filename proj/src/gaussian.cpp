#include "hodgedr/gaussian.hpp"

#include <stdexcept>

namespace hodgedr {

GaussianRational GaussianRational::parse(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty scalar");
    if (text.back() != 'i')
        return GaussianRational(Rational::parse(text));

    std::string_view body = text.substr(0, text.size() - 1);
    if (!body.empty() && body.back() == '*')
        body.remove_suffix(1);

    // Split at the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    const std::string_view re_text = split == std::string_view::npos ? std::string_view() : body.substr(0, split);
    std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);

    Rational im;
    if (im_text.empty() || im_text == "+")
        im = Rational(1);
    else if (im_text == "-")
        im = Rational(-1);
    else
        im = Rational::parse(im_text);
    Rational re = re_text.empty() ? Rational(0) : Rational::parse(re_text);
    return {std::move(re), std::move(im)};
}

std::string GaussianRational::str() const
{
    if (im_.is_zero())
        return re_.str();
    std::string out = re_.str();
    if (im_.sign() > 0)
        out += '+';
    out += im_.str();
    out += "*i";
    return out;
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero())
        throw std::domain_error("division by zero");
    const Rational n = norm2();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    if (o.im_.is_zero()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    return *this *= o.inverse();
}

} // namespace hodgedr
