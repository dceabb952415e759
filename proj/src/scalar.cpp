#include "zpdlab/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace zpdlab {

namespace {

mpq_class canonical(mpq_class q) {
    q.canonicalize();
    return q;
}

// digits ( '/' digits )? starting at pos; advances pos past the token.
mpq_class parse_unsigned_rational(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("scalar: expected digits in '" + s + "'");
    mpz_class num(s.substr(start, pos - start));
    mpz_class den(1);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw std::invalid_argument("scalar: expected denominator in '" + s + "'");
        den = mpz_class(s.substr(dstart, pos - dstart));
        if (den == 0) throw std::invalid_argument("scalar: zero denominator in '" + s + "'");
    }
    return canonical(mpq_class(num, den));
}

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(canonical(std::move(re))), im_(canonical(std::move(im))) {}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("scalar: zero denominator");
    return Scalar(canonical(mpq_class(num, den)), mpq_class(0));
}

Scalar Scalar::gaussian(long re_num, long re_den, long im_num, long im_den) {
    if (re_den == 0 || im_den == 0) throw std::invalid_argument("scalar: zero denominator");
    return Scalar(canonical(mpq_class(re_num, re_den)), canonical(mpq_class(im_num, im_den)));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("scalar: inverse of zero");
    mpq_class n = re_ * re_ + im_ * im_;  // |z|^2, nonzero
    return Scalar(canonical(re_ / n), canonical(-im_ / n));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = canonical(std::move(re));
    im_ = canonical(std::move(im));
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re_) != 0) out = re_.get_str();
    if (sgn(im_) != 0) {
        if (sgn(im_) > 0) {
            if (!out.empty()) out += "+";
        } else {
            out += "-";
        }
        mpq_class a = abs(im_);
        out += a.get_str() + " i";
    }
    return out;
}

Scalar Scalar::parse(const std::string& text) {
    // Whitespace is allowed around signs and before 'i', but not inside a
    // number: "1 2" is a typo, not 12.
    const auto numeric = [](char c) { return (c >= '0' && c <= '9') || c == '/'; };
    std::string s;
    s.reserve(text.size());
    char prev = 0;
    bool gap = false;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            gap = true;
            continue;
        }
        if (gap && numeric(prev) && numeric(ch))
            throw std::invalid_argument("scalar: whitespace inside a number in '" + text + "'");
        gap = false;
        s += ch;
        prev = ch;
    }
    if (s.empty()) throw std::invalid_argument("scalar: empty input");

    mpq_class re(0), im(0);
    bool have_re = false, have_im = false;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+') {
            ++pos;
        } else if (s[pos] == '-') {
            sign = -1;
            ++pos;
        }
        if (pos >= s.size()) throw std::invalid_argument("scalar: dangling sign in '" + text + "'");

        mpq_class mag;
        bool imag;
        if (s[pos] == 'i') {
            ++pos;
            mag = 1;
            imag = true;
        } else {
            mag = parse_unsigned_rational(s, pos);
            imag = pos < s.size() && s[pos] == 'i';
            if (imag) ++pos;
        }
        if (sign < 0) mag = -mag;
        if (imag) {
            if (have_im) throw std::invalid_argument("scalar: repeated imaginary part in '" + text + "'");
            have_im = true;
            im = mag;
        } else {
            if (have_re) throw std::invalid_argument("scalar: repeated real part in '" + text + "'");
            have_re = true;
            re = mag;
        }
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
            throw std::invalid_argument("scalar: trailing input in '" + text + "'");
    }
    return Scalar(std::move(re), std::move(im));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace zpdlab
