#ifndef NDGA_SCALAR_HPP
#define NDGA_SCALAR_HPP

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ndga {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Text form is "p/q" or "p".
class Scalar {
public:
    Scalar() = default;

    template <std::integral I>
    Scalar(I value) : value_(static_cast<long>(value)) {} // NOLINT(google-explicit-constructor)

    Scalar(long numerator, long denominator);

    explicit Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Accepts "p" or "p/q" with an optional leading '-' on the numerator.
    static Scalar parse(std::string_view text);

    /// (-1)^exponent
    static Scalar sign_power(long exponent) { return Scalar(exponent % 2 == 0 ? 1 : -1); }

    std::string str() const;

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    const mpq_class& value() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    Scalar inverse() const;
    Scalar abs() const { return Scalar(mpq_class(::abs(value_))); }

    Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
    Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
    Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(mpq_class(-value_)); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    mpq_class value_;
};

using Vector = std::vector<Scalar>;

bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Scalar& s);

} // namespace ndga

#endif // NDGA_SCALAR_HPP
