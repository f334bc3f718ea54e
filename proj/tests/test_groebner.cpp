#include "qnull/groebner.hpp"
#include "qnull/point.hpp"

#include "oracle.hpp"
#include "random_data.hpp"

#include <doctest.h>

#include <stop_token>

using namespace qnull;

namespace {

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();

Polynomial C(std::size_t n, const Quaternion& c) { return Polynomial::constant(n, c); }
Polynomial X(std::size_t n, std::size_t v) { return Polynomial::variable(n, v); }

void check_cofactors(const LeftIdeal& ideal) {
    const auto& gens = ideal.generators();
    for (std::size_t k = 0; k < ideal.basis().size(); ++k) {
        // expansion oracle, independent of the kernel's multiplication
        oracle::Poly sum;
        for (std::size_t j = 0; j < gens.size(); ++j)
            sum = oracle::add(sum, oracle::mul(oracle::from(ideal.cofactors()[k][j]), oracle::from(gens[j])));
        REQUIRE(sum == oracle::from(ideal.basis()[k]));
    }
}

void check_reduced(const LeftIdeal& ideal) {
    const auto& order = ideal.order();
    for (const Polynomial& b : ideal.basis()) {
        REQUIRE(b.leading_coefficient(order).is_one());
        for (const Polynomial& other : ideal.basis()) {
            if (&b == &other) continue;
            const Monomial& lead = other.leading_monomial(order);
            for (const auto& [m, c] : b.terms()) REQUIRE_FALSE(lead.divides(m));
        }
    }
}

std::vector<Polynomial> random_generators(testing::RandomData& rnd, std::size_t nv, bool complex) {
    std::size_t count = static_cast<std::size_t>(rnd.uniform(1, 3));
    std::vector<Polynomial> gens;
    for (std::size_t g = 0; g < count; ++g)
        gens.push_back(complex ? rnd.complex_polynomial(nv, 2, 3) : rnd.polynomial(nv, 2, 3));
    return gens;
}

}  // namespace

TEST_CASE("normal_form examples") {
    const Polynomial x = X(1, 0);
    const Polynomial g = x - C(1, I);
    const MonomialOrder order = MonomialOrder::degrevlex(1);
    std::vector<Polynomial> basis{g};

    ReductionTrace t = normal_form(x * x + C(1, Quaternion(1)), basis, order);
    CHECK(t.remainder.is_zero());
    CHECK(t.quotients[0] == x + C(1, I));
    CHECK(oracle::mul(oracle::from(x + C(1, I)), oracle::from(g)) == oracle::from(x * x + C(1, Quaternion(1))));

    t = normal_form(C(1, I), basis, order);
    CHECK(t.remainder == C(1, I));
    CHECK(t.quotients[0].is_zero());

    t = normal_form(Polynomial(1), basis, order);
    CHECK(t.remainder.is_zero());
    CHECK(t.quotients[0].is_zero());
}

TEST_CASE("buchberger examples") {
    SUBCASE("single monic generator") {
        const Polynomial g = X(1, 0) - C(1, I);
        LeftIdeal ideal = buchberger({g}, MonomialOrder::degrevlex(1));
        REQUIRE(ideal.basis().size() == 1);
        CHECK(ideal.basis()[0] == g);
        CHECK_FALSE(is_unit_ideal(ideal));
        check_cofactors(ideal);
    }
    SUBCASE("x - i, y - j is the unit ideal") {
        const Polynomial gx = X(2, 0) - C(2, I), gy = X(2, 1) - C(2, J);
        const MonomialOrder order = MonomialOrder::degrevlex(2);
        // Hand run: S = y(x - i) - x(y - j) = -iy + jx, which reduces to -2k.
        Polynomial s = s_polynomial(gx, gy, order);
        CHECK(s == C(2, -I) * X(2, 1) + C(2, J) * X(2, 0));
        CHECK(normal_form(s, std::vector<Polynomial>{gx, gy}, order).remainder == C(2, Quaternion(0, 0, 0, -2)));

        LeftIdeal ideal = buchberger({gx, gy}, order);
        REQUIRE(is_unit_ideal(ideal));
        CHECK(ideal.basis()[0] == C(2, Quaternion(1)));
        auto cof = unit_cofactors(ideal);
        REQUIRE(cof);
        CHECK(left_combination(*cof, ideal.generators(), 2) == C(2, Quaternion(1)));
        check_cofactors(ideal);
    }
    SUBCASE("empty input is the zero ideal") {
        LeftIdeal ideal = buchberger({}, MonomialOrder::degrevlex(2));
        CHECK(ideal.basis().empty());
        CHECK_FALSE(is_unit_ideal(ideal));
        CHECK(is_member(Polynomial(2), ideal).member);
        CHECK_FALSE(is_member(X(2, 0), ideal).member);
    }
    SUBCASE("zero generators are ignored") {
        LeftIdeal ideal = buchberger({Polynomial(1), X(1, 0)}, MonomialOrder::degrevlex(1));
        REQUIRE(ideal.basis().size() == 1);
        CHECK(ideal.basis()[0] == X(1, 0));
        check_cofactors(ideal);
    }
    SUBCASE("constant generator") {
        LeftIdeal ideal = buchberger({X(1, 0), C(1, K)}, MonomialOrder::degrevlex(1));
        CHECK(is_unit_ideal(ideal));
        check_cofactors(ideal);
    }
}

TEST_CASE("membership examples") {
    const Polynomial x = X(1, 0);
    LeftIdeal ideal = buchberger({x - C(1, I)}, MonomialOrder::degrevlex(1));

    Membership m = is_member(x * x + C(1, Quaternion(1)), ideal);
    CHECK(m.member);
    REQUIRE(m.cofactors.size() == 1);
    CHECK(m.cofactors[0] == x + C(1, I));

    CHECK_FALSE(is_member(C(1, I), ideal).member);
    CHECK(is_member(Polynomial(1), ideal).member);

    // left multiples only: (x - i) j = j (x + i) is not in <x - i>
    CHECK_FALSE(is_member((x - C(1, I)) * C(1, J), ideal).member);
    CHECK(is_member(C(1, J) * (x - C(1, I)), ideal).member);

    LeftIdeal unit = buchberger({C(1, Quaternion(1))}, MonomialOrder::degrevlex(1));
    CHECK(is_unit_ideal(unit));
}

TEST_CASE("coprime criterion is unsound with quaternion coefficients") {
    const Polynomial gx = X(2, 0) - C(2, I), gy = X(2, 1) - C(2, J);
    const MonomialOrder order = MonomialOrder::degrevlex(2);
    CHECK(gx.leading_monomial(order).coprime(gy.leading_monomial(order)));
    CHECK_FALSE(is_groebner_basis(std::vector<Polynomial>{gx, gy}, order));

    // The restricted skip only fires for real coefficients, so the answer is unchanged.
    BuchbergerOptions opts;
    opts.coprime_criterion = true;
    CHECK(is_unit_ideal(buchberger({gx, gy}, order, opts)));
}

TEST_CASE("restricted coprime criterion agrees with the full run") {
    testing::RandomData rnd(0x5eed0201, 5, 5);
    for (int n = 0; n < 60; ++n) {
        std::size_t nv = static_cast<std::size_t>(rnd.uniform(2, 3));
        std::vector<Polynomial> gens;
        for (int g = 0; g < 3; ++g)
            gens.push_back(rnd.coin() ? rnd.polynomial(nv, 2, 3, [&] { return Quaternion(rnd.nonzero_rational()); })
                                      : rnd.polynomial(nv, 2, 3));
        MonomialOrder order = MonomialOrder::degrevlex(nv);
        BuchbergerOptions opts;
        opts.coprime_criterion = true;
        LeftIdeal plain = buchberger(gens, order);
        LeftIdeal skipped = buchberger(gens, order, opts);
        REQUIRE(plain.basis() == skipped.basis());
        REQUIRE(is_groebner_basis(skipped.basis(), order));
    }
}

TEST_CASE("random ideals: invariants") {
    testing::RandomData rnd(0x5eed0202, 5, 5);
    int proper = 0;
    for (int n = 0; n < 80; ++n) {
        std::size_t nv = static_cast<std::size_t>(rnd.uniform(1, 3));
        std::vector<Polynomial> gens;
        if (rnd.coin()) {
            // vanishing at a commuting point keeps the ideal proper
            CommutingPoint p = rnd.commuting_point(nv);
            for (const Polynomial& g : point_ideal_generators(p))
                if (rnd.coin(0.7)) gens.push_back(rnd.polynomial(nv, 1, 2) * g);
            if (gens.empty()) gens.push_back(point_ideal_generators(p).front());
        } else {
            gens = random_generators(rnd, nv, false);
        }
        OrderKind kind = std::array{OrderKind::degrevlex, OrderKind::deglex, OrderKind::lex}[n % 3];
        MonomialOrder order(kind, nv);
        LeftIdeal ideal = buchberger(gens, order);
        if (!is_unit_ideal(ideal)) ++proper;

        check_cofactors(ideal);
        check_reduced(ideal);
        REQUIRE(is_groebner_basis(ideal.basis(), order));
        for (const Polynomial& g : gens) {
            Membership m = is_member(g, ideal);
            REQUIRE(m.member);
            REQUIRE(left_combination(m.cofactors, gens, nv) == g);
        }
        Polynomial f = rnd.polynomial(nv, 3);
        ReductionTrace t = normal_form(f, ideal.basis(), order);
        Polynomial recombined = t.remainder;
        for (std::size_t k = 0; k < t.quotients.size(); ++k) recombined += t.quotients[k] * ideal.basis()[k];
        REQUIRE(recombined == f);
        ReductionTrace again = normal_form(t.remainder, ideal.basis(), order);
        REQUIRE(again.remainder == t.remainder);
        for (const Polynomial& q : again.quotients) REQUIRE(q.is_zero());

        LeftIdeal repeat = buchberger(gens, order);
        REQUIRE(repeat.basis() == ideal.basis());
        REQUIRE(repeat.cofactors() == ideal.cofactors());
    }
    CHECK(proper > 0);
}

TEST_CASE("commutative cross-check against Buchberger over Q(i)") {
    testing::RandomData rnd(0x5eed0203, 5, 5);
    for (int n = 0; n < 60; ++n) {
        std::size_t nv = static_cast<std::size_t>(rnd.uniform(1, 3));
        std::vector<Polynomial> gens = random_generators(rnd, nv, true);
        LeftIdeal ideal = buchberger(gens, MonomialOrder::degrevlex(nv));
        std::vector<oracle::CPoly> cgens;
        for (const Polynomial& g : gens) cgens.push_back(oracle::to_cpoly(g));
        auto expected = oracle::commutative_groebner(cgens);
        REQUIRE(expected.size() == ideal.basis().size());
        for (std::size_t k = 0; k < expected.size(); ++k) REQUIRE(oracle::to_cpoly(ideal.basis()[k]) == expected[k]);
    }
}

TEST_CASE("cancellation") {
    std::stop_source source;
    source.request_stop();
    BuchbergerOptions opts;
    opts.stop = source.get_token();
    const Polynomial gx = X(2, 0) - C(2, I), gy = X(2, 1) - C(2, J);
    CHECK_THROWS_AS(buchberger({gx, gy}, MonomialOrder::degrevlex(2), opts), Cancelled);
    // nothing to reduce, nothing to cancel
    CHECK_NOTHROW(buchberger({gx}, MonomialOrder::degrevlex(2), opts));
}

TEST_CASE("minimalization keeps independent leading monomials") {
    const Polynomial gx = X(2, 0) - C(2, Quaternion(1, 1, 0, 0)), gy = X(2, 1) - C(2, Quaternion(0, 2, 0, 0));
    LeftIdeal ideal = buchberger({gx, gy}, MonomialOrder::degrevlex(2));
    CHECK(ideal.basis() == std::vector<Polynomial>{gy, gx});
    check_cofactors(ideal);
}
