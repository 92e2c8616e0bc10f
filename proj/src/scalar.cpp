#include "ndga/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "ndga/errors.hpp"

namespace ndga {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Scalar::Scalar(long numerator, long denominator) {
    if (denominator == 0) throw ArgumentError("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("", "invalid scalar \"" + std::string(text) + "\"");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("", "zero denominator in \"" + std::string(text) + "\"");
    if (negative) n = -n;
    return Scalar(mpq_class(n, d));
}

std::string Scalar::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ArgumentError("division by zero");
    return Scalar(mpq_class(1 / value_));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw ArgumentError("division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(const Vector& a, const Vector& b) {
    Vector out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vector scaled(const Vector& v, const Scalar& s) {
    Vector out(v);
    for (auto& x : out) x *= s;
    return out;
}

} // namespace ndga
