#pragma once

#include "qnull/groebner.hpp"
#include "qnull/point.hpp"
#include "qnull/polynomial.hpp"

#include <optional>
#include <span>
#include <stop_token>
#include <string>
#include <vector>

namespace qnull {

inline constexpr unsigned kDefaultNMax = 8;

struct ZeroLocusQuery {
    const LeftIdeal& ideal;
    const CommutingPoint& point;
};

/// True iff every generator of the ideal vanishes at p. Left combinations of
/// vanishing generators vanish by the product formula, so this decides p in V(I).
bool zero_locus_contains(const LeftIdeal& ideal, const CommutingPoint& p);
inline bool zero_locus_contains(const ZeroLocusQuery& q) { return zero_locus_contains(q.ideal, q.point); }

/// True iff f(p) = 0 for every listed point.
bool vanishes_on(const Polynomial& f, std::span<const CommutingPoint> points);

/// Witness for (aF)^N in I + I(aF) + ... + I(aF)^N, indexed by power:
/// (aF)^N = sum_{m=0}^{N} by_power[m] * (aF)^m with every by_power[m] in I.
struct ConditionWitness {
    Quaternion scalar;
    unsigned N = 0;
    std::vector<Polynomial> by_power;
    /// by_power[m] = sum_j cofactors[m][j] * generators[j]
    std::vector<std::vector<Polynomial>> cofactors;
};

/// Decides (aF)^N in I + I(aF) + ... + I(aF)^N by membership in the left ideal
/// generated by g_j (aF)^m. For a = 0 the condition holds vacuously.
/// The returned witness has been checked exactly.
std::optional<ConditionWitness> condition_holds(const LeftIdeal& ideal, const Polynomial& f,
                                                const Quaternion& a, unsigned N,
                                                std::stop_token stop = {});

/// Smallest N <= n_max for which the condition holds. Absence is not a disproof.
std::optional<ConditionWitness> search_N(const LeftIdeal& ideal, const Polynomial& f,
                                         const Quaternion& a, unsigned n_max,
                                         std::stop_token stop = {});

/// Rabinowitsch certificate for scalar a:
///   H * ((aF) y - 1) + sum_m G[m] y^m = 1        in H[x1..xn, y]
///   (aF)^N = sum_{m=0}^{N} G[m] * (aF)^{N-m}     in H[x1..xn]
/// with every G[m] in I. Note the index runs opposite to ConditionWitness.
struct Certificate {
    std::vector<Polynomial> generators;
    Polynomial F;
    Quaternion scalar;
    unsigned N = 0;
    std::vector<Polynomial> G;
    /// G[m] = sum_j G_cofactors[m][j] * generators[j]
    std::vector<std::vector<Polynomial>> G_cofactors;
    /// Lives in n+1 variables, the extra one last.
    Polynomial H;
    bool verified = false;
};

enum class CertificateStatus { verified, not_unit_ideal };

struct CertificateOutcome {
    CertificateStatus status;
    std::optional<Certificate> certificate;
};

/// Runs Buchberger on <I, (aF) y - 1> in n+1 variables. When 1 lies in that
/// ideal, splits the cofactors by powers of y and verifies the resulting
/// identity exactly. Requires a != 0. Throws VerificationFailed if the
/// extracted identity does not hold; unverified certificates are never returned.
CertificateOutcome rabinowitsch_certificate(const LeftIdeal& ideal, const Polynomial& f,
                                            const Quaternion& a, std::stop_token stop = {});

struct CertificateCheck {
    bool ok = false;
    std::string failure;
};

/// Re-checks every identity a certificate claims, using polynomial arithmetic only.
CertificateCheck check_certificate(const Certificate& cert);

struct ScalarOutcome {
    Quaternion scalar;
    std::optional<unsigned> N;
};

struct ScalarFamilyReport {
    std::vector<ScalarOutcome> outcomes;
    unsigned n_max = 0;
    bool all_passed() const;
    /// States that a finite family says nothing about the quantifier over all of H.
    static const char* scope_note();
};

ScalarFamilyReport check_scalar_family(const LeftIdeal& ideal, const Polynomial& f,
                                       std::span<const Quaternion> scalars, unsigned n_max,
                                       std::stop_token stop = {});

/// The ideal <x - i> in H[x] with F = 1: for unit-pure b other than +-i,
///   bF = -(b (bi - ib)^{-1} b)(x - i) + (b (bi - ib)^{-1})(x - i)(bF),
/// while for b = +-i the coefficient is undefined and the condition fails.
struct PaperExampleRow {
    Quaternion b;
    bool unit_pure = false;
    bool expect_identity = false;
    bool identity_holds = false;
    bool coefficient_undefined = false;
    std::optional<unsigned> found_N;
    bool passed = false;
};

struct PaperExampleReport {
    std::vector<PaperExampleRow> rows;
    bool i_in_zero_locus = false;
    bool one_vanishes_on_locus = true;
    unsigned n_max = 0;
    bool passed() const;
};

PaperExampleReport reproduce_paper_example(unsigned n_max = kDefaultNMax);

}  // namespace qnull
