#include "qnull/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qnull {

Polynomial Polynomial::constant(std::size_t nvars, const Quaternion& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    Polynomial p(nvars);
    p.add_term(Monomial::variable(nvars, index), Quaternion(1));
    return p;
}

Polynomial Polynomial::term(const Quaternion& c, const Monomial& m) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Quaternion Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Quaternion() : it->second;
}

void Polynomial::add_term(const Monomial& m, const Quaternion& c) {
    if (m.nvars() != nvars_) throw VariableCountMismatch(nvars_, m.nvars());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::optional<unsigned long> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    unsigned long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::optional<unsigned long> Polynomial::degree_in(std::size_t v) const {
    if (terms_.empty()) return std::nullopt;
    unsigned long d = 0;
    for (const auto& [m, c] : terms_) d = std::max<unsigned long>(d, m[v]);
    return d;
}

std::pair<Monomial, Quaternion> Polynomial::leading_term(const MonomialOrder& order) const {
    auto it = terms_.begin();
    if (it == terms_.end()) throw std::logic_error("leading term of the zero polynomial");
    auto best = it;
    for (++it; it != terms_.end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return *best;
}

const Monomial& Polynomial::leading_monomial(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::logic_error("leading monomial of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return best->first;
}

const Quaternion& Polynomial::leading_coefficient(const MonomialOrder& order) const {
    return terms_.find(leading_monomial(order))->second;
}

std::vector<std::pair<Monomial, Quaternion>> Polynomial::sorted_terms(const MonomialOrder& order) const {
    std::vector<std::pair<Monomial, Quaternion>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
    return out;
}

bool Polynomial::has_real_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw VariableCountMismatch(nvars_, o.nvars_);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator-(Polynomial a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial operator*(const Quaternion& c, const Polynomial& f) {
    Polynomial out(f.nvars_);
    if (c.is_zero()) return out;
    for (const auto& [m, d] : f.terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * d);
    return out;
}

Polynomial operator*(const Polynomial& f, const Quaternion& c) {
    Polynomial out(f.nvars_);
    if (c.is_zero()) return out;
    for (const auto& [m, d] : f.terms_) out.terms_.emplace_hint(out.terms_.end(), m, d * c);
    return out;
}

Polynomial Polynomial::left_term_mul(const Quaternion& c, const Monomial& m) const {
    if (m.nvars() != nvars_) throw VariableCountMismatch(nvars_, m.nvars());
    Polynomial out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [mf, d] : terms_) out.terms_.emplace_hint(out.terms_.end(), m * mf, c * d);
    return out;
}

Polynomial Polynomial::monomial_mul(const Monomial& m) const {
    return left_term_mul(Quaternion(1), m);
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial out = constant(nvars_, Quaternion(1));
    for (unsigned s = 0; s < e; ++s) out = out * *this;
    return out;
}

Polynomial left_scalar_mul(const Quaternion& c, const Polynomial& f) { return c * f; }

Polynomial right_scalar_mul(const Polynomial& f, const Quaternion& c) { return f * c; }

Polynomial left_combination(std::span<const Polynomial> coefficients,
                            std::span<const Polynomial> generators, std::size_t nvars) {
    if (coefficients.size() != generators.size())
        throw std::invalid_argument("left_combination: size mismatch");
    Polynomial out(nvars);
    for (std::size_t j = 0; j < generators.size(); ++j) {
        if (coefficients[j].is_zero()) continue;
        out += coefficients[j] * generators[j];
    }
    return out;
}

Polynomial adjoin_variable(const Polynomial& f) {
    Polynomial out(f.nvars() + 1);
    for (const auto& [m, c] : f.terms()) out.add_term(m.extended(), c);
    return out;
}

std::vector<Polynomial> y_coefficients(const Polynomial& f) {
    if (f.nvars() == 0) throw std::invalid_argument("y_coefficients needs at least one variable");
    std::vector<Polynomial> out;
    for (const auto& [m, c] : f.terms()) {
        auto [rest, power] = m.split_last();
        if (out.size() <= power) out.resize(power + 1, Polynomial(f.nvars() - 1));
        out[power].add_term(rest, c);
    }
    return out;
}

Polynomial times_last_power(const Polynomial& f, Monomial::Exponent power) {
    if (f.nvars() == 0) throw std::invalid_argument("times_last_power needs at least one variable");
    return f.monomial_mul(Monomial::variable(f.nvars(), f.nvars() - 1, power));
}

}  // namespace qnull
