#include "qnull/groebner.hpp"
#include "qnull/point.hpp"
#include "qnull/polynomial.hpp"

#include "oracle.hpp"
#include "random_data.hpp"

#include <doctest.h>

using namespace qnull;

namespace {

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();

Polynomial C(std::size_t n, const Quaternion& c) { return Polynomial::constant(n, c); }
Polynomial X(std::size_t n, std::size_t v) { return Polynomial::variable(n, v); }

bool same_as_oracle(const Polynomial& kernel, const oracle::Poly& expected) { return oracle::from(kernel) == expected; }

}  // namespace

TEST_CASE("multiplication keeps coefficient order") {
    const Polynomial x = X(1, 0);
    // j (x - i) = j x + k, checked against the term-by-term expansion oracle
    Polynomial lhs = C(1, J) * (x - C(1, I));
    CHECK(same_as_oracle(lhs, oracle::mul(oracle::from(C(1, J)), oracle::from(x - C(1, I)))));
    CHECK(lhs == C(1, J) * x + C(1, K));

    Polynomial sq = (x + C(1, I)) * (x - C(1, I));
    CHECK(sq == x * x + C(1, Quaternion(1)));

    CHECK(left_scalar_mul(Quaternion(), x + C(1, J)).is_zero());
    CHECK(right_scalar_mul(C(1, J) * x, I) == C(1, -K) * x);
    CHECK(left_scalar_mul(I, C(1, J) * x) == C(1, K) * x);
}

TEST_CASE("variable count is checked") {
    CHECK_THROWS_AS(X(1, 0) + X(2, 0), VariableCountMismatch);
    CHECK_THROWS_AS(X(1, 0) * X(2, 1), VariableCountMismatch);
    CHECK_THROWS_AS(eval(X(2, 0), CommutingPoint({I})), VariableCountMismatch);
    CHECK_THROWS_AS(eval_product_formula(X(1, 0), X(2, 0), CommutingPoint({I})), VariableCountMismatch);
}

TEST_CASE("degree of zero is absent") {
    CHECK_FALSE(Polynomial(2).degree().has_value());
    CHECK(C(2, Quaternion(3)).degree() == 0u);
    CHECK((X(2, 0) * X(2, 1) + X(2, 1)).degree() == 2u);
}

TEST_CASE("evaluation examples") {
    const Polynomial x = X(1, 0);
    CommutingPoint at_i({I});
    CHECK(eval(x - C(1, I), at_i).is_zero());
    CHECK(oracle::to_quaternion(oracle::evaluate(oracle::from(C(1, J) * x), oracle::from(at_i))) == -K);
    CHECK(eval(C(1, J) * x, at_i) == -K);
    CHECK(eval(C(1, Quaternion(2, 0, -1, 3)), at_i) == Quaternion(2, 0, -1, 3));
}

TEST_CASE("product formula worked example") {
    const Polynomial x = X(1, 0);
    Polynomial f = C(1, J);
    Polynomial g = x - C(1, I);
    CommutingPoint at_j({J});

    CHECK(eval(g, at_j) == J - I);
    CHECK(conjugate_point(J - I, at_j) == CommutingPoint({-I}));
    Quaternion expected(-1, 0, 0, 1);  // -1 + k
    CHECK(oracle::to_quaternion(oracle::evaluate(oracle::from(f * g), oracle::from(at_j))) == expected);
    CHECK(eval(f * g, at_j) == expected);
    CHECK(eval_product_formula(f, g, at_j) == expected);
    // Without the trailing g(p) the formula would give f(...) = j.
    CHECK(eval(f, conjugate_point(J - I, at_j)) == J);

    // g(p) = 0 short-circuits to 0
    CHECK(eval_product_formula(C(1, K) * x, g, CommutingPoint({I})).is_zero());
    // f = 1 gives g(p)
    CHECK(eval_product_formula(C(1, Quaternion(1)), g, at_j) == J - I);
}

TEST_CASE("conjugate_point") {
    CHECK(conjugate_point(J, CommutingPoint({I})) == CommutingPoint({-I}));
    CommutingPoint reals({Quaternion(2), Quaternion(Rational(1, 3))});
    CHECK(conjugate_point(Quaternion(1, 2, 3, 4), reals) == reals);
    CommutingPoint p({Quaternion(1, 1, 0, 0), Quaternion(0, 2, 0, 0)});
    CHECK(conjugate_point(Quaternion(1), p) == p);
    CHECK_THROWS_AS(conjugate_point(Quaternion(), p), ZeroDivision);
}

TEST_CASE("commuting point validation") {
    CHECK_NOTHROW(CommutingPoint({I, Quaternion(2, 3, 0, 0)}));
    try {
        CommutingPoint({Quaternion(1), I, J});
        FAIL("expected NonCommutingPoint");
    } catch (const NonCommutingPoint& e) {
        CHECK(e.first() == 1);
        CHECK(e.second() == 2);
    }
}

TEST_CASE("adjoin_variable and y_coefficients") {
    const Polynomial x = X(1, 0);
    Polynomial g = x - C(1, I);
    Polynomial lifted = adjoin_variable(g);
    CHECK(lifted.nvars() == 2);
    CHECK(lifted == X(2, 0) - C(2, I));
    CHECK(adjoin_variable(Polynomial(1)).is_zero());
    CHECK(adjoin_variable(Polynomial(1)).nvars() == 2);

    Polynomial h = C(1, J) * x;
    Polynomial f = adjoin_variable(g) + times_last_power(adjoin_variable(h), 2);
    auto parts = y_coefficients(f);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == g);
    CHECK(parts[1].is_zero());
    CHECK(parts[2] == h);

    auto one = y_coefficients(C(2, Quaternion(1)));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == C(1, Quaternion(1)));
}

TEST_CASE("centrality and y roundtrip on random data") {
    testing::RandomData rnd(0x5eed0101);
    for (int n = 0; n < 300; ++n) {
        std::size_t nv = static_cast<std::size_t>(rnd.uniform(1, 3));
        Polynomial f = rnd.polynomial(nv, 3);
        for (std::size_t v = 0; v < nv; ++v) REQUIRE(X(nv, v) * f == f * X(nv, v));

        Polynomial lifted = rnd.polynomial(nv + 1, 3);
        auto parts = y_coefficients(lifted);
        Polynomial rebuilt(nv + 1);
        for (std::size_t m = 0; m < parts.size(); ++m)
            rebuilt += times_last_power(adjoin_variable(parts[m]), static_cast<Monomial::Exponent>(m));
        REQUIRE(rebuilt == lifted);
    }
}

TEST_CASE("arithmetic agrees with the expansion oracle") {
    testing::RandomData rnd(0x5eed0102);
    for (int n = 0; n < 300; ++n) {
        std::size_t nv = static_cast<std::size_t>(rnd.uniform(1, 3));
        Polynomial f = rnd.polynomial(nv, 3), g = rnd.polynomial(nv, 3);
        REQUIRE(same_as_oracle(f * g, oracle::mul(oracle::from(f), oracle::from(g))));
        REQUIRE(same_as_oracle(f + g, oracle::add(oracle::from(f), oracle::from(g))));
        REQUIRE(same_as_oracle(f.pow(2), oracle::power(oracle::from(f), 2, nv)));
        Quaternion c = rnd.quaternion();
        REQUIRE(same_as_oracle(f * c, oracle::mul(oracle::from(f), oracle::scalar(oracle::from(c), nv))));
    }
}

TEST_CASE("evaluation properties on random data") {
    testing::RandomData rnd(0x5eed0103);
    for (int n = 0; n < 1000; ++n) {
        std::size_t nv = static_cast<std::size_t>(rnd.uniform(1, 3));
        Polynomial f = rnd.polynomial(nv, 3), g = rnd.polynomial(nv, 3);
        CommutingPoint p = rnd.commuting_point(nv);
        REQUIRE(eval(f + g, p) == eval(f, p) + eval(g, p));
        REQUIRE(eval(f * g, p) == eval_product_formula(f, g, p));
        REQUIRE(eval(f, p) == oracle::to_quaternion(oracle::evaluate(oracle::from(f), oracle::from(p))));
        Quaternion b = rnd.nonzero_quaternion();
        CHECK_NOTHROW(conjugate_point(b, p));
    }
}

TEST_CASE("remainder characterization of evaluation") {
    testing::RandomData rnd(0x5eed0104);
    for (int n = 0; n < 100; ++n) {
        std::size_t nv = static_cast<std::size_t>(rnd.uniform(1, 3));
        Polynomial f = rnd.polynomial(nv, 3);
        CommutingPoint p = rnd.commuting_point(nv);
        LeftIdeal I = buchberger(point_ideal_generators(p), MonomialOrder::degrevlex(nv));
        Polynomial diff = f - Polynomial::constant(nv, eval(f, p));
        REQUIRE(normal_form(diff, I.basis(), I.order()).remainder.is_zero());
        // and the constant itself is the normal form of f
        REQUIRE(normal_form(f, I.basis(), I.order()).remainder == Polynomial::constant(nv, eval(f, p)));
    }
}

TEST_CASE("commutative copy of C") {
    testing::RandomData rnd(0x5eed0105);
    for (int n = 0; n < 300; ++n) {
        std::size_t nv = static_cast<std::size_t>(rnd.uniform(1, 3));
        Polynomial f = rnd.complex_polynomial(nv, 3), g = rnd.complex_polynomial(nv, 3);
        CommutingPoint p = rnd.complex_point(nv);
        std::vector<oracle::Gauss> pt;
        for (const Quaternion& a : p.coordinates()) pt.push_back(*oracle::to_gauss(a));
        auto fe = oracle::substitute(oracle::to_cpoly(f), pt);
        REQUIRE(oracle::to_gauss(eval(f, p)) == fe);
        REQUIRE(eval_product_formula(f, g, p) == eval(f, p) * eval(g, p));
    }
}

TEST_CASE("monomial orders") {
    Monomial a{2, 0, 0}, b{1, 1, 0}, c{0, 0, 3}, d{1, 0, 1};
    MonomialOrder grevlex = MonomialOrder::degrevlex(3);
    CHECK(grevlex.less(b, a));
    CHECK(grevlex.less(d, b));
    CHECK(grevlex.less(d, c));  // degree first
    MonomialOrder lex(OrderKind::lex, 3);
    CHECK(lex.less(c, d));
    CHECK(lex.less(b, a));
    MonomialOrder deglex(OrderKind::deglex, 3);
    CHECK(deglex.less(d, b));
    CHECK(deglex.less(a, c));
    MonomialOrder reversed(OrderKind::lex, std::vector<std::size_t>{2, 1, 0});
    CHECK(reversed.less(a, c));
    CHECK_THROWS(MonomialOrder(OrderKind::lex, std::vector<std::size_t>{0, 0, 1}));

    MonomialOrder ext = grevlex.extended();
    CHECK(ext.nvars() == 4);
    CHECK(ext.priority().back() == 3);

    // compatible with multiplication
    testing::RandomData rnd(0x5eed0106);
    for (OrderKind kind : {OrderKind::degrevlex, OrderKind::deglex, OrderKind::lex}) {
        MonomialOrder o(kind, 3);
        for (int n = 0; n < 300; ++n) {
            Monomial x = rnd.monomial(3, 4), y = rnd.monomial(3, 4), z = rnd.monomial(3, 4);
            REQUIRE((o.compare(x, y) == o.compare(x * z, y * z)));
            REQUIRE_FALSE(o.less(x * z, x));
        }
    }
}
