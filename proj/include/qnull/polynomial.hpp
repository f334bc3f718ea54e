#pragma once

#include "qnull/monomial.hpp"
#include "qnull/quaternion.hpp"

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qnull {

/// Element of H[x1..xn] with central variables. Coefficients are stored on
/// the left of their monomial; zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Quaternion>;

    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Quaternion& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial term(const Quaternion& c, const Monomial& m);

    std::size_t nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    /// Coefficient of m, zero if absent.
    Quaternion coefficient(const Monomial& m) const;
    /// Adds c to the coefficient of m, erasing it if the sum vanishes.
    void add_term(const Monomial& m, const Quaternion& c);

    /// Total degree; nullopt for the zero polynomial.
    std::optional<unsigned long> degree() const;
    /// Largest exponent of variable v; nullopt for the zero polynomial.
    std::optional<unsigned long> degree_in(std::size_t v) const;

    /// Leading term under `order`. Requires a nonzero polynomial.
    std::pair<Monomial, Quaternion> leading_term(const MonomialOrder& order) const;
    const Monomial& leading_monomial(const MonomialOrder& order) const;
    const Quaternion& leading_coefficient(const MonomialOrder& order) const;

    /// Terms sorted from largest to smallest under `order`.
    std::vector<std::pair<Monomial, Quaternion>> sorted_terms(const MonomialOrder& order) const;

    /// True iff every coefficient is real (hence central).
    bool has_real_coefficients() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    /// c * f.
    friend Polynomial operator*(const Quaternion& c, const Polynomial& f);
    /// f * c; each term c_a x^a c is rewritten as (c_a c) x^a.
    friend Polynomial operator*(const Polynomial& f, const Quaternion& c);

    /// (c x^m) * f, the elementary step of left reduction.
    Polynomial left_term_mul(const Quaternion& c, const Monomial& m) const;
    /// f * x^m.
    Polynomial monomial_mul(const Monomial& m) const;

    /// f^e by repeated multiplication; f^0 = 1.
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void check_compatible(const Polynomial& o) const;

    std::size_t nvars_;
    TermMap terms_;
};

Polynomial left_scalar_mul(const Quaternion& c, const Polynomial& f);
Polynomial right_scalar_mul(const Polynomial& f, const Quaternion& c);

/// Sum of coefficient[j] * generator[j] in H[x1..x_nvars]. Sizes must agree.
Polynomial left_combination(std::span<const Polynomial> coefficients,
                            std::span<const Polynomial> generators, std::size_t nvars);

/// Reinterprets f in H[x1..xn, y] with y appended as the last variable.
Polynomial adjoin_variable(const Polynomial& f);

/// Splits f in n+1 variables as sum_m result[m] * y^m, y being the last
/// variable. Each result[m] lives in n variables. Zero gives an empty vector.
std::vector<Polynomial> y_coefficients(const Polynomial& f);

/// f * y^power, y the last variable of f's ring.
Polynomial times_last_power(const Polynomial& f, Monomial::Exponent power);

}  // namespace qnull
