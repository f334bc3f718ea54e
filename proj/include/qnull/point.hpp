#pragma once

#include "qnull/polynomial.hpp"
#include "qnull/quaternion.hpp"

#include <span>
#include <vector>

namespace qnull {

/// A point of H^n whose coordinates pairwise commute. Validated on construction.
class CommutingPoint {
public:
    /// Throws NonCommutingPoint naming the first offending index pair.
    explicit CommutingPoint(std::vector<Quaternion> coordinates);

    std::size_t size() const noexcept { return coords_.size(); }
    const Quaternion& operator[](std::size_t m) const { return coords_[m]; }
    std::span<const Quaternion> coordinates() const noexcept { return coords_; }

    friend bool operator==(const CommutingPoint&, const CommutingPoint&) = default;

private:
    std::vector<Quaternion> coords_;
};

/// The point b p b^{-1}, coordinatewise. Throws ZeroDivision for b = 0.
CommutingPoint conjugate_point(const Quaternion& b, const CommutingPoint& p);

/// Left evaluation: sum of c_a * p^a.
Quaternion eval(const Polynomial& f, const CommutingPoint& p);

/// (f g)(p) via evaluating f at the point conjugated by g(p):
/// 0 when g(p) = 0, else f(g(p) p g(p)^{-1}) * g(p).
Quaternion eval_product_formula(const Polynomial& f, const Polynomial& g, const CommutingPoint& p);

/// The linear polynomials x_m - a_m generating the left ideal of p.
std::vector<Polynomial> point_ideal_generators(const CommutingPoint& p);

}  // namespace qnull
