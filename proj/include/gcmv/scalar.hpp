#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gcmv {

/// Exact rational number, always in lowest terms with positive denominator.
/// Thin value wrapper over GMP's mpq_class; all arithmetic is exact.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(int n) : v_(n) {}
    Scalar(long n) : v_(static_cast<long>(n)) {}
    Scalar(long num, long den) {
        if (den == 0) throw std::domain_error("Scalar: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Scalar(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Scalar(const mpz_class& z) : v_(z) {}

    /// Parses "p/q" or "p" (optional leading '-'); throws on malformed input.
    static Scalar from_string(std::string_view s);

    [[nodiscard]] const mpz_class& numerator() const { return v_.get_num(); }
    [[nodiscard]] const mpz_class& denominator() const { return v_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] int sign() const { return sgn(v_); }

    [[nodiscard]] Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
        Scalar r;
        r.v_ = 1 / v_;
        return r;
    }

    /// "p/q", or just "p" when the denominator is 1.
    [[nodiscard]] std::string str() const { return v_.get_str(); }

    Scalar operator-() const {
        Scalar r;
        r.v_ = -v_;
        return r;
    }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace gcmv
