#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace oredil {

namespace detail {

using int128 = __int128;

inline int128 iabs(int128 a) { return a < 0 ? -a : a; }

inline int128 igcd(int128 a, int128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline std::int64_t narrow(int128 v) {
    if (v > int128(INT64_MAX) || v < int128(INT64_MIN))
        throw std::overflow_error("rational arithmetic overflowed 64 bits");
    return static_cast<std::int64_t>(v);
}

} // namespace detail

/// Exact rational number. Always stored reduced with positive denominator;
/// intermediate products run in 128 bits and overflow of the reduced result
/// is an error rather than silent wraparound.
class Rat {
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;

    Rat(detail::int128 n, detail::int128 d, int) {
        if (d == 0)
            throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        detail::int128 g = detail::igcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = detail::narrow(n);
        den_ = detail::narrow(d);
    }

public:
    constexpr Rat() = default;
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : Rat(detail::int128(n), detail::int128(d), 0) {}

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        using detail::int128;
        return Rat(int128(a.num_) * b.den_ + int128(b.num_) * a.den_,
                   int128(a.den_) * b.den_, 0);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        using detail::int128;
        return Rat(int128(a.num_) * b.den_ - int128(b.num_) * a.den_,
                   int128(a.den_) * b.den_, 0);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        using detail::int128;
        return Rat(int128(a.num_) * b.num_, int128(a.den_) * b.den_, 0);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        using detail::int128;
        if (b.num_ == 0)
            throw std::domain_error("rational division by zero");
        return Rat(int128(a.num_) * b.den_, int128(a.den_) * b.num_, 0);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        using detail::int128;
        return int128(a.num_) * b.den_ < int128(b.num_) * a.den_;
    }

    /// Floor of the rational as an integer.
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0)
            --q;
        return q;
    }

    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "a/b" or "a".
    static std::optional<Rat> parse(const std::string& s) {
        try {
            std::size_t pos = 0;
            std::int64_t n = std::stoll(s, &pos);
            if (pos == s.size())
                return Rat(n);
            if (s[pos] != '/')
                return std::nullopt;
            std::size_t pos2 = 0;
            std::int64_t d = std::stoll(s.substr(pos + 1), &pos2);
            if (pos + 1 + pos2 != s.size() || d == 0)
                return std::nullopt;
            return Rat(n, d);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
};

/// Gaussian rational: element of Q(i). The scalar field of every vector and
/// algebra in this library; closed under the fourth roots of unity, which is
/// exactly what the shipped multipliers take values in.
class GaussRat {
    Rat re_, im_;

public:
    GaussRat() = default;
    GaussRat(Rat re) : re_(re) {}
    GaussRat(std::int64_t re) : re_(re) {}
    GaussRat(Rat re, Rat im) : re_(re), im_(im) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    GaussRat conj() const { return GaussRat(re_, -im_); }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re_ * b.re_ - a.im_ * b.im_,
                        a.re_ * b.im_ + a.im_ * b.re_);
    }
    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
    GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }

    /// Multiplicative inverse; defined for nonzero values.
    GaussRat inv() const {
        Rat n = re_ * re_ + im_ * im_;
        if (n.is_zero())
            throw std::domain_error("inverse of zero Gaussian rational");
        return GaussRat(re_ / n, -im_ / n);
    }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::string str() const {
        if (im_.is_zero())
            return re_.str();
        return re_.str() + "+" + im_.str() + "i";
    }
};

} // namespace oredil
