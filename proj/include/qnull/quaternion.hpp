#pragma once

#include "qnull/errors.hpp"
#include "qnull/rational.hpp"

#include <array>
#include <iosfwd>
#include <span>
#include <string>

namespace qnull {

/// Exact quaternion w + x i + y j + z k with rational components.
class Quaternion {
public:
    Quaternion() = default;
    Quaternion(long w) : w_(w) {}  // NOLINT: implicit embedding of the integers
    Quaternion(Rational w) : w_(std::move(w)) {}  // NOLINT: implicit embedding of the rationals
    Quaternion(Rational w, Rational x, Rational y, Rational z)
        : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    const Rational& w() const noexcept { return w_; }
    const Rational& x() const noexcept { return x_; }
    const Rational& y() const noexcept { return y_; }
    const Rational& z() const noexcept { return z_; }

    // Components in the order 1, i, j, k.
    std::array<Rational, 4> components() const { return {w_, x_, y_, z_}; }

    bool is_zero() const { return sgn(w_) == 0 && sgn(x_) == 0 && sgn(y_) == 0 && sgn(z_) == 0; }
    bool is_real() const { return sgn(x_) == 0 && sgn(y_) == 0 && sgn(z_) == 0; }
    bool is_one() const { return w_ == 1 && is_real(); }

    Quaternion real_part() const { return Quaternion(w_); }
    Quaternion pure_part() const { return {0, x_, y_, z_}; }

    Quaternion conj() const { return {w_, -x_, -y_, -z_}; }
    Rational normsq() const { return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_; }

    /// conj(q) / normsq(q). Throws ZeroDivision for q = 0.
    Quaternion inverse() const;

    Quaternion& operator+=(const Quaternion& o);
    Quaternion& operator-=(const Quaternion& o);
    Quaternion& operator*=(const Quaternion& o);
    Quaternion& operator*=(const Rational& r);

    friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator-(const Quaternion& a) { return {-a.w_, -a.x_, -a.y_, -a.z_}; }

    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w_ == b.w_ && a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
    }

private:
    Rational w_{0};
    Rational x_{0};
    Rational y_{0};
    Rational z_{0};
};

/// b q b^{-1}. Throws ZeroDivision for b = 0.
Quaternion conjugate_by(const Quaternion& b, const Quaternion& q);

bool commutes(const Quaternion& a, const Quaternion& b);

/// True iff b^2 = -1, i.e. b is pure with norm 1.
bool is_unit_pure(const Quaternion& b);

/// Thrown when the unit-pure search finds a pure direction whose norm is not
/// the square of a rational, so no rational unit-pure point lies on it.
class NoRationalUnitPure : public Error {
public:
    NoRationalUnitPure(Quaternion direction, Rational normsq);

    const Quaternion& direction() const noexcept { return direction_; }
    /// Scaling direction() by 1/sqrt(r) would give a unit-pure element.
    const Rational& r() const noexcept { return r_; }

private:
    Quaternion direction_;
    Rational r_;
};

/// Finds a rational b with b^2 = -1 such that b*q commutes with every element
/// of `tuple` (a commuting tuple, typically the coordinates of a point).
///
/// b*q must lie in the centralizer C of the tuple, so b ranges over C*q^{-1}.
/// C is all of H when the tuple is real, otherwise span{1, u} for the shared
/// imaginary direction u. The result is normalized so that its first nonzero
/// imaginary component is positive.
///
/// Throws ZeroDivision for q = 0, NoRationalUnitPure when no rational point
/// of norm 1 exists on the admissible pure directions that were tried.
Quaternion find_commuting_unit_pure(const Quaternion& q, std::span<const Quaternion> tuple);

/// Quaternion literal syntax, e.g. "1/2 + 3i - 4/7k", "-k", "0".
std::string to_string(const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qnull
