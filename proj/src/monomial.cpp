#include "qnull/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qnull {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
    Monomial m(nvars);
    m.exps_.at(index) = power;
    return m;
}

unsigned long Monomial::total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0UL);
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t v = 0; v < exps_.size(); ++v)
        if (exps_[v] > other.exps_[v]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    Monomial q(*this);
    for (std::size_t v = 0; v < exps_.size(); ++v) q.exps_[v] -= divisor.exps_[v];
    return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial l(*this);
    for (std::size_t v = 0; v < exps_.size(); ++v) l.exps_[v] = std::max(l.exps_[v], other.exps_[v]);
    return l;
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t v = 0; v < exps_.size(); ++v)
        if (exps_[v] != 0 && other.exps_[v] != 0) return false;
    return true;
}

Monomial Monomial::extended(std::size_t extra) const {
    Monomial m(*this);
    m.exps_.resize(exps_.size() + extra, 0);
    return m;
}

std::pair<Monomial, Monomial::Exponent> Monomial::split_last() const {
    Monomial m(*this);
    Exponent last = m.exps_.back();
    m.exps_.pop_back();
    return {std::move(m), last};
}

Monomial& Monomial::operator*=(const Monomial& o) {
    for (std::size_t v = 0; v < exps_.size(); ++v) exps_[v] += o.exps_[v];
    return *this;
}

std::string_view to_string(OrderKind kind) {
    switch (kind) {
        case OrderKind::degrevlex: return "degrevlex";
        case OrderKind::deglex: return "deglex";
        case OrderKind::lex: return "lex";
    }
    return "?";
}

std::optional<OrderKind> parse_order_kind(std::string_view name) {
    if (name == "degrevlex") return OrderKind::degrevlex;
    if (name == "deglex") return OrderKind::deglex;
    if (name == "lex") return OrderKind::lex;
    return std::nullopt;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t nvars) : kind_(kind), priority_(nvars) {
    std::iota(priority_.begin(), priority_.end(), std::size_t{0});
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
    std::vector<std::size_t> sorted = priority_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t v = 0; v < sorted.size(); ++v)
        if (sorted[v] != v) throw std::invalid_argument("monomial order priority is not a permutation");
}

MonomialOrder MonomialOrder::extended() const {
    std::vector<std::size_t> p = priority_;
    p.push_back(p.size());
    return {kind_, std::move(p)};
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind_ != OrderKind::lex) {
        auto da = a.total_degree();
        auto db = b.total_degree();
        if (da != db) return da <=> db;
    }
    if (kind_ == OrderKind::degrevlex) {
        // Among equal degrees, the smaller exponent in the least significant
        // differing variable wins.
        for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
            if (a[*it] != b[*it]) return b[*it] <=> a[*it];
        }
        return std::strong_ordering::equal;
    }
    for (std::size_t v : priority_) {
        if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
}

}  // namespace qnull
