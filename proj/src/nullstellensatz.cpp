#include "qnull/nullstellensatz.hpp"

#include <algorithm>
#include <stdexcept>

namespace qnull {

bool zero_locus_contains(const LeftIdeal& ideal, const CommutingPoint& p) {
    return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const Polynomial& g) { return eval(g, p).is_zero(); });
}

bool vanishes_on(const Polynomial& f, std::span<const CommutingPoint> points) {
    return std::all_of(points.begin(), points.end(),
                       [&](const CommutingPoint& p) { return eval(f, p).is_zero(); });
}

namespace {

std::vector<Polynomial> powers_of(const Polynomial& af, unsigned N) {
    std::vector<Polynomial> powers;
    powers.reserve(N + 1);
    powers.push_back(Polynomial::constant(af.nvars(), Quaternion(1)));
    for (unsigned m = 1; m <= N; ++m) powers.push_back(powers.back() * af);
    return powers;
}

}  // namespace

std::optional<ConditionWitness> condition_holds(const LeftIdeal& ideal, const Polynomial& f,
                                                const Quaternion& a, unsigned N, std::stop_token stop) {
    if (N == 0) throw std::invalid_argument("condition_holds: N must be at least 1");
    if (f.nvars() != ideal.nvars()) throw VariableCountMismatch(ideal.nvars(), f.nvars());
    const std::size_t n = ideal.nvars();
    const auto& gens = ideal.generators();

    ConditionWitness w{a, N, std::vector<Polynomial>(N + 1, Polynomial(n)),
                       std::vector<std::vector<Polynomial>>(N + 1, std::vector<Polynomial>(gens.size(), Polynomial(n)))};
    Polynomial af = a * f;
    if (af.is_zero()) return w;  // 0 is in every ideal

    std::vector<Polynomial> powers = powers_of(af, N);
    std::vector<Polynomial> shifted;
    shifted.reserve((N + 1) * gens.size());
    for (unsigned m = 0; m <= N; ++m)
        for (const Polynomial& g : gens) shifted.push_back(g * powers[m]);

    LeftIdeal sum = buchberger(shifted, ideal.order(), BuchbergerOptions{stop});
    Membership mem = is_member(powers[N], sum);
    if (!mem.member) return std::nullopt;

    Polynomial rhs(n);
    for (unsigned m = 0; m <= N; ++m) {
        for (std::size_t j = 0; j < gens.size(); ++j)
            w.cofactors[m][j] = std::move(mem.cofactors[m * gens.size() + j]);
        w.by_power[m] = left_combination(w.cofactors[m], gens, n);
        rhs += w.by_power[m] * powers[m];
    }
    if (rhs != powers[N]) throw VerificationFailed("condition witness does not reproduce (aF)^N");
    return w;
}

std::optional<ConditionWitness> search_N(const LeftIdeal& ideal, const Polynomial& f,
                                         const Quaternion& a, unsigned n_max, std::stop_token stop) {
    if (n_max == 0) throw std::invalid_argument("search_N: n_max must be at least 1");
    for (unsigned N = 1; N <= n_max; ++N)
        if (auto w = condition_holds(ideal, f, a, N, stop)) return w;
    return std::nullopt;
}

CertificateCheck check_certificate(const Certificate& cert) {
    const std::size_t n = cert.F.nvars();
    auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };

    if (cert.N == 0) return fail("N must be at least 1");
    if (cert.G.size() != cert.N + 1 || cert.G_cofactors.size() != cert.N + 1)
        return fail("expected N+1 entries in G and its cofactors");
    if (cert.H.nvars() != n + 1) return fail("H must live in one more variable than F");
    for (const Polynomial& g : cert.generators)
        if (g.nvars() != n) return fail("generator variable count differs from F");

    for (unsigned m = 0; m <= cert.N; ++m) {
        if (cert.G[m].nvars() != n) return fail("G[" + std::to_string(m) + "] has the wrong variable count");
        if (cert.G_cofactors[m].size() != cert.generators.size())
            return fail("G[" + std::to_string(m) + "] cofactor count differs from generator count");
        for (const Polynomial& c : cert.G_cofactors[m])
            if (c.nvars() != n) return fail("G[" + std::to_string(m) + "] cofactor has the wrong variable count");
        if (left_combination(cert.G_cofactors[m], cert.generators, n) != cert.G[m])
            return fail("G[" + std::to_string(m) + "] is not the stated combination of generators");
    }

    Polynomial af = cert.scalar * cert.F;
    Polynomial trick = times_last_power(adjoin_variable(af), 1) -
                       Polynomial::constant(n + 1, Quaternion(1));
    Polynomial lhs = cert.H * trick;
    for (unsigned m = 0; m <= cert.N; ++m) lhs += times_last_power(adjoin_variable(cert.G[m]), m);
    if (lhs != Polynomial::constant(n + 1, Quaternion(1)))
        return fail("H((aF)y - 1) + sum G_m y^m is not 1");

    std::vector<Polynomial> powers = powers_of(af, cert.N);
    Polynomial rhs(n);
    for (unsigned m = 0; m <= cert.N; ++m) rhs += cert.G[m] * powers[cert.N - m];
    if (rhs != powers[cert.N]) return fail("(aF)^N differs from sum G_m (aF)^(N-m)");
    return {true, {}};
}

CertificateOutcome rabinowitsch_certificate(const LeftIdeal& ideal, const Polynomial& f,
                                            const Quaternion& a, std::stop_token stop) {
    if (a.is_zero()) throw std::invalid_argument("rabinowitsch_certificate: scalar must be nonzero");
    if (f.nvars() != ideal.nvars()) throw VariableCountMismatch(ideal.nvars(), f.nvars());
    const std::size_t n = ideal.nvars();
    const auto& gens = ideal.generators();

    std::vector<Polynomial> lifted;
    lifted.reserve(gens.size() + 1);
    for (const Polynomial& g : gens) lifted.push_back(adjoin_variable(g));
    lifted.push_back(times_last_power(adjoin_variable(a * f), 1) -
                     Polynomial::constant(n + 1, Quaternion(1)));

    LeftIdeal extended = buchberger(std::move(lifted), ideal.order().extended(), BuchbergerOptions{stop});
    auto unit = unit_cofactors(extended);
    if (!unit) return {CertificateStatus::not_unit_ideal, std::nullopt};

    Certificate cert;
    cert.generators = gens;
    cert.F = f;
    cert.scalar = a;
    cert.H = std::move(unit->back());

    // y is central, so H_j g_j = sum_m (H_{j,m} g_j) y^m.
    std::vector<std::vector<Polynomial>> split(gens.size());
    std::size_t top = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        split[j] = y_coefficients((*unit)[j]);
        top = std::max(top, split[j].size());
    }
    unsigned N = 1;
    if (auto dh = cert.H.degree_in(n)) N = std::max<unsigned>(N, static_cast<unsigned>(*dh) + 1);
    if (top > 0) N = std::max<unsigned>(N, static_cast<unsigned>(top - 1));
    cert.N = N;
    cert.G.assign(N + 1, Polynomial(n));
    cert.G_cofactors.assign(N + 1, std::vector<Polynomial>(gens.size(), Polynomial(n)));
    for (std::size_t j = 0; j < gens.size(); ++j) {
        for (std::size_t m = 0; m < split[j].size(); ++m) {
            if (split[j][m].is_zero()) continue;
            cert.G[m] += split[j][m] * gens[j];
            cert.G_cofactors[m][j] = std::move(split[j][m]);
        }
    }

    CertificateCheck check = check_certificate(cert);
    if (!check.ok) throw VerificationFailed("certificate failed verification: " + check.failure);
    cert.verified = true;
    return {CertificateStatus::verified, std::move(cert)};
}

bool ScalarFamilyReport::all_passed() const {
    return std::all_of(outcomes.begin(), outcomes.end(), [](const ScalarOutcome& o) { return o.N.has_value(); });
}

const char* ScalarFamilyReport::scope_note() {
    return "results cover only the listed scalars up to the stated N; passing a finite family "
           "does not establish the condition for every scalar";
}

ScalarFamilyReport check_scalar_family(const LeftIdeal& ideal, const Polynomial& f,
                                       std::span<const Quaternion> scalars, unsigned n_max,
                                       std::stop_token stop) {
    ScalarFamilyReport report;
    report.n_max = n_max;
    for (const Quaternion& a : scalars) {
        auto w = search_N(ideal, f, a, n_max, stop);
        report.outcomes.push_back({a, w ? std::optional<unsigned>(w->N) : std::nullopt});
    }
    return report;
}

bool PaperExampleReport::passed() const {
    return i_in_zero_locus && !one_vanishes_on_locus &&
           std::all_of(rows.begin(), rows.end(), [](const PaperExampleRow& r) { return r.passed; });
}

PaperExampleReport reproduce_paper_example(unsigned n_max) {
    const Quaternion i = Quaternion::i();
    const Polynomial x = Polynomial::variable(1, 0);
    const Polynomial x_minus_i = x - Polynomial::constant(1, i);
    const Polynomial one = Polynomial::constant(1, Quaternion(1));
    const LeftIdeal ideal = buchberger({x_minus_i}, MonomialOrder::degrevlex(1));
    const CommutingPoint at_i({i});

    PaperExampleReport report;
    report.n_max = n_max;
    report.i_in_zero_locus = zero_locus_contains(ideal, at_i);
    report.one_vanishes_on_locus = vanishes_on(one, std::span(&at_i, 1));

    const Quaternion b_rational(0, Rational(3, 5), Rational(4, 5), 0);
    const std::vector<std::pair<Quaternion, bool>> cases = {
        {Quaternion::j(), true}, {Quaternion::k(), true}, {b_rational, true}, {i, false}, {-i, false}};

    for (const auto& [b, expect_identity] : cases) {
        PaperExampleRow row;
        row.b = b;
        row.unit_pure = is_unit_pure(b);
        row.expect_identity = expect_identity;
        Quaternion commutator = b * i - i * b;
        try {
            Quaternion c = commutator.inverse();
            Polynomial bf = b * one;
            Polynomial rhs = -((b * c * b) * x_minus_i) + ((b * c) * x_minus_i) * bf;
            row.identity_holds = (rhs == bf);
        } catch (const ZeroDivision&) {
            row.coefficient_undefined = true;
        }
        if (expect_identity) {
            auto w = condition_holds(ideal, one, b, 1);
            if (w) row.found_N = w->N;
            row.passed = row.unit_pure && row.identity_holds && row.found_N == 1u;
        } else {
            auto w = search_N(ideal, one, b, n_max);
            if (w) row.found_N = w->N;
            row.passed = row.unit_pure && row.coefficient_undefined && !row.found_N;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace qnull
