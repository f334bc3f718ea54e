#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <vector>

namespace qnull {

/// Exponent vector over central variables. Multiplication adds exponents.
class Monomial {
public:
    using Exponent = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

    static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

    std::size_t nvars() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t v) const { return exps_[v]; }
    const std::vector<Exponent>& exponents() const noexcept { return exps_; }

    unsigned long total_degree() const;
    bool is_one() const;

    bool divides(const Monomial& other) const;
    /// this / divisor; requires divisor.divides(*this).
    Monomial quotient(const Monomial& divisor) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    /// Same exponents with one more (zero) variable appended.
    Monomial extended(std::size_t extra = 1) const;
    /// Drops the last variable, returning its exponent separately.
    std::pair<Monomial, Exponent> split_last() const;

    Monomial& operator*=(const Monomial& o);
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

    // Structural order only (used for map keys); unrelated to MonomialOrder.
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
};

enum class OrderKind { degrevlex, deglex, lex };

std::string_view to_string(OrderKind kind);
std::optional<OrderKind> parse_order_kind(std::string_view name);

/// Admissible monomial order. `priority` lists variable indices from most to
/// least significant; the identity permutation gives x1 > x2 > ... > xn.
class MonomialOrder {
public:
    MonomialOrder(OrderKind kind, std::size_t nvars);
    MonomialOrder(OrderKind kind, std::vector<std::size_t> priority);

    static MonomialOrder degrevlex(std::size_t nvars) { return {OrderKind::degrevlex, nvars}; }

    OrderKind kind() const noexcept { return kind_; }
    std::size_t nvars() const noexcept { return priority_.size(); }
    const std::vector<std::size_t>& priority() const noexcept { return priority_; }

    /// Same family with one more variable of lowest priority.
    MonomialOrder extended() const;

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    OrderKind kind_;
    std::vector<std::size_t> priority_;
};

}  // namespace qnull
