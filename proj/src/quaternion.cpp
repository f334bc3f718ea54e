#include "qnull/quaternion.hpp"

#include <ostream>
#include <sstream>

namespace qnull {

Quaternion Quaternion::inverse() const {
    Rational n = normsq();
    if (sgn(n) == 0) throw ZeroDivision();
    Quaternion c = conj();
    c *= Rational(1) / n;
    return c;
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
    w_ += o.w_;
    x_ += o.x_;
    y_ += o.y_;
    z_ += o.z_;
    return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
    w_ -= o.w_;
    x_ -= o.x_;
    y_ -= o.y_;
    z_ -= o.z_;
    return *this;
}

Quaternion& Quaternion::operator*=(const Quaternion& o) { return *this = *this * o; }

Quaternion& Quaternion::operator*=(const Rational& r) {
    w_ *= r;
    x_ *= r;
    y_ *= r;
    z_ *= r;
    return *this;
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    // Hamilton product with i^2 = j^2 = k^2 = ijk = -1.
    return {a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_,
            a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_,
            a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_,
            a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_};
}

Quaternion conjugate_by(const Quaternion& b, const Quaternion& q) {
    Quaternion binv = b.inverse();
    if (q.is_real()) return q;
    return b * q * binv;
}

bool commutes(const Quaternion& a, const Quaternion& b) {
    // ab - ba = 2 (pure(a) x pure(b)), so commuting means parallel imaginary parts.
    return a.y() * b.z() == a.z() * b.y() && a.z() * b.x() == a.x() * b.z() &&
           a.x() * b.y() == a.y() * b.x();
}

bool is_unit_pure(const Quaternion& b) { return sgn(b.w()) == 0 && b.normsq() == 1; }

NoRationalUnitPure::NoRationalUnitPure(Quaternion direction, Rational normsq)
    : Error("no rational unit-pure quaternion along " + to_string(direction) +
            " (norm squared " + to_string(normsq) + " is not a rational square)"),
      direction_(std::move(direction)), r_(std::move(normsq)) {}

namespace {

Quaternion sign_normalized(Quaternion b) {
    for (const Rational* c : {&b.x(), &b.y(), &b.z()}) {
        if (sgn(*c) > 0) return b;
        if (sgn(*c) < 0) return -b;
    }
    return b;
}

// Largest numerator and denominator tried for t when the whole admissible
// plane is pure and neither axis carries a rational unit point.
constexpr long kPlaneSearchNumerator = 24;
constexpr long kPlaneSearchDenominator = 12;

}  // namespace

Quaternion find_commuting_unit_pure(const Quaternion& q, std::span<const Quaternion> tuple) {
    Quaternion qinv = q.inverse();

    const Quaternion* direction = nullptr;
    for (const Quaternion& a : tuple) {
        if (!a.is_real()) {
            direction = &a;
            break;
        }
    }
    if (direction == nullptr) return Quaternion::i();  // centralizer is all of H

    Quaternion u = direction->pure_part();
    Quaternion v1 = qinv;
    Quaternion v2 = u * qinv;
    const Rational& r1 = v1.w();
    const Rational& r2 = v2.w();

    if (sgn(r1) != 0 || sgn(r2) != 0) {
        // Pure elements of span{v1, v2} form the line spanned by r2*v1 - r1*v2.
        Quaternion v = v1;
        v *= r2;
        Quaternion t = v2;
        t *= r1;
        v -= t;
        Rational r = v.normsq();
        auto root = exact_sqrt(r);
        if (!root) throw NoRationalUnitPure(sign_normalized(v), r);
        v *= Rational(1) / *root;
        return sign_normalized(v);
    }

    // q is pure and orthogonal to u: every element (s + t u) q^{-1} is pure,
    // with norm (s^2 + t^2 |u|^2) / |q|^2.
    Rational n = q.normsq();
    Rational m = u.normsq();
    for (long den = 1; den <= kPlaneSearchDenominator; ++den) {
        for (long num = 0; num <= kPlaneSearchNumerator; ++num) {
            if (den > 1 && gcd(Integer(num), Integer(den)) != 1) continue;
            Rational t = make_rational(num, den);
            auto s = exact_sqrt(n - m * t * t);
            if (!s) continue;
            Quaternion tu = u;
            tu *= t;
            Quaternion b = (Quaternion(*s) + tu) * qinv;
            return sign_normalized(b);
        }
    }
    throw NoRationalUnitPure(sign_normalized(v1), v1.normsq());
}

namespace {

void append_component(std::ostringstream& os, bool& first, const Rational& c, const char* unit) {
    if (sgn(c) == 0) return;
    Rational mag = abs(c);
    if (first) {
        if (sgn(c) < 0) os << '-';
    } else {
        os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (*unit == '\0' || mag != 1) os << mag.get_str();
    os << unit;
}

}  // namespace

std::string to_string(const Quaternion& q) {
    if (q.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    append_component(os, first, q.w(), "");
    append_component(os, first, q.x(), "i");
    append_component(os, first, q.y(), "j");
    append_component(os, first, q.z(), "k");
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << to_string(q); }

}  // namespace qnull
