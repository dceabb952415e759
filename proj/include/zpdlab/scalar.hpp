#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace zpdlab {

// Exact Gaussian rational re + im*i. Both parts are mpq_class and are kept
// canonical (lowest terms, positive denominator), so operator== is exact
// equality and str() is a canonical form.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design, 0/1 literals abound
    Scalar(mpq_class re, mpq_class im);

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
    static Scalar rational(long num, long den);
    static Scalar gaussian(long re_num, long re_den, long im_num, long im_den);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar inverse() const;  // throws std::domain_error on zero

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Canonical text form: "a/b", "c/d i", "a/b+c/d i", "a/b-c/d i", "0".
    // Denominator 1 prints without "/1".
    std::string str() const;

    // Inverse of str(); whitespace-tolerant, accepts "i", "-i", "3i", "1/2+i".
    // Throws std::invalid_argument on malformed input or zero denominator.
    static Scalar parse(const std::string& text);

private:
    mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace zpdlab
