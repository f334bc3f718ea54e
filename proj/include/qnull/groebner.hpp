#pragma once

#include "qnull/monomial.hpp"
#include "qnull/polynomial.hpp"

#include <optional>
#include <span>
#include <stop_token>
#include <vector>

namespace qnull {

/// input = sum_k quotients[k] * divisors[k] + remainder, with no remainder
/// monomial divisible by a divisor's leading monomial.
struct ReductionTrace {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// Full left reduction of f by `divisors` (all nonzero). Each step subtracts
/// (c lc(g)^{-1}) x^{a-b} g from the largest reducible term c x^a.
ReductionTrace normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                           const MonomialOrder& order);

/// x^{L-b} g - x^{L-c} h for monic g, h with leading monomials x^b, x^c and
/// L = lcm(b, c). Inputs need not be monic; they are normalized on the left.
Polynomial s_polynomial(const Polynomial& g, const Polynomial& h, const MonomialOrder& order);

/// True iff every S-polynomial of `basis` reduces to zero against it.
bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& order);

struct BuchbergerOptions {
    /// Checked before every pair reduction; a stop request throws Cancelled.
    std::stop_token stop;
    /// Skip pairs with coprime leading monomials. The classical argument needs
    /// g h = h g, so the skip is only taken when both elements have real
    /// coefficients; with arbitrary quaternion coefficients it is unsound
    /// (x - i, y - j has coprime leading monomials but is not a basis).
    bool coprime_criterion = false;
};

/// A left ideal of H[x1..xn] with its reduced monic left Groebner basis and a
/// cofactor matrix: basis()[k] = sum_j cofactors()[k][j] * generators()[j].
class LeftIdeal {
public:
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }
    const MonomialOrder& order() const noexcept { return order_; }
    std::size_t nvars() const noexcept { return order_.nvars(); }
    const std::vector<Polynomial>& basis() const noexcept { return basis_; }
    const std::vector<std::vector<Polynomial>>& cofactors() const noexcept { return cofactors_; }

    /// Number of S-pairs that were reduced while computing the basis.
    std::size_t pairs_reduced() const noexcept { return pairs_reduced_; }

    friend LeftIdeal buchberger(std::vector<Polynomial> generators, const MonomialOrder& order,
                                const BuchbergerOptions& options);

private:
    LeftIdeal(std::vector<Polynomial> generators, MonomialOrder order)
        : generators_(std::move(generators)), order_(std::move(order)) {}

    std::vector<Polynomial> generators_;
    MonomialOrder order_;
    std::vector<Polynomial> basis_;
    std::vector<std::vector<Polynomial>> cofactors_;
    std::size_t pairs_reduced_ = 0;
};

/// Buchberger's algorithm for left ideals: normal pair selection (smallest
/// lcm, ties by index pair), monic elements, final inter-reduction.
/// Stops early with basis {1} as soon as a nonzero constant appears.
LeftIdeal buchberger(std::vector<Polynomial> generators, const MonomialOrder& order,
                     const BuchbergerOptions& options = {});

struct Membership {
    bool member = false;
    /// f = sum_j cofactors[j] * generators[j] when member is true.
    std::vector<Polynomial> cofactors;
};

Membership is_member(const Polynomial& f, const LeftIdeal& ideal);

bool is_unit_ideal(const LeftIdeal& ideal);

/// Cofactors expressing 1 over the generators, when the ideal is the unit ideal.
std::optional<std::vector<Polynomial>> unit_cofactors(const LeftIdeal& ideal);

}  // namespace qnull
