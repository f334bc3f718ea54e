#include "qnull/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace qnull {

ReductionTrace normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                           const MonomialOrder& order) {
    const std::size_t n = f.nvars();
    std::vector<Monomial> leads;
    std::vector<Quaternion> lead_inverses;
    leads.reserve(divisors.size());
    lead_inverses.reserve(divisors.size());
    for (const Polynomial& g : divisors) {
        if (g.nvars() != n) throw VariableCountMismatch(n, g.nvars());
        auto [m, c] = g.leading_term(order);
        leads.push_back(std::move(m));
        lead_inverses.push_back(c.is_one() ? c : c.inverse());
    }

    ReductionTrace trace{std::vector<Polynomial>(divisors.size(), Polynomial(n)), Polynomial(n)};
    Polynomial work = f;
    while (!work.is_zero()) {
        auto [m, c] = work.leading_term(order);
        auto hit = std::find_if(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
        if (hit == leads.end()) {
            trace.remainder.add_term(m, c);
            work.add_term(m, -c);
            continue;
        }
        std::size_t k = static_cast<std::size_t>(hit - leads.begin());
        Quaternion coef = c * lead_inverses[k];
        Monomial shift = m.quotient(*hit);
        work -= divisors[k].left_term_mul(coef, shift);
        trace.quotients[k].add_term(shift, coef);
    }
    return trace;
}

namespace {

Polynomial monic(const Polynomial& g, const MonomialOrder& order) {
    const Quaternion& lc = g.leading_coefficient(order);
    return lc.is_one() ? g : lc.inverse() * g;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& g, const Polynomial& h, const MonomialOrder& order) {
    Polynomial gm = monic(g, order);
    Polynomial hm = monic(h, order);
    const Monomial& lg = gm.leading_monomial(order);
    const Monomial& lh = hm.leading_monomial(order);
    Monomial l = lg.lcm(lh);
    return gm.monomial_mul(l.quotient(lg)) - hm.monomial_mul(l.quotient(lh));
}

bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& order) {
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            if (!normal_form(s_polynomial(basis[a], basis[b], order), basis, order).remainder.is_zero())
                return false;
    return true;
}

namespace {

struct Element {
    Polynomial poly;
    Monomial lead;
    std::vector<Polynomial> cof;
};

struct Pair {
    std::size_t first;
    std::size_t second;
    Monomial lcm;
};

class Engine {
public:
    Engine(const std::vector<Polynomial>& gens, const MonomialOrder& order, const BuchbergerOptions& opts)
        : gens_(gens), order_(order), opts_(opts), n_(order.nvars()) {}

    void run() {
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            if (gens_[j].nvars() != n_) throw VariableCountMismatch(n_, gens_[j].nvars());
            if (gens_[j].is_zero()) continue;
            std::vector<Polynomial> cof(gens_.size(), Polynomial(n_));
            cof[j] = Polynomial::constant(n_, Quaternion(1));
            if (add(gens_[j], std::move(cof))) return;
        }
        while (!pairs_.empty()) {
            if (opts_.stop.stop_requested()) throw Cancelled();
            Pair pair = take_next_pair();
            if (skip_coprime(pair)) continue;
            ++pairs_reduced_;
            if (reduce_pair(pair)) return;
        }
        finish();
    }

    std::vector<Element> elements_;
    std::size_t pairs_reduced_ = 0;

private:
    // Appends the monic form of p; returns true once the ideal is known to be
    // the unit ideal (elements_ then holds exactly {1}).
    bool add(const Polynomial& p, std::vector<Polynomial> cof) {
        const Quaternion& lc = p.leading_coefficient(order_);
        Element e{p, p.leading_monomial(order_), std::move(cof)};
        if (!lc.is_one()) {
            Quaternion inv = lc.inverse();
            e.poly = inv * e.poly;
            for (auto& c : e.cof) c = inv * c;
        }
        if (e.lead.is_one()) {
            elements_.clear();
            pairs_.clear();
            elements_.push_back(std::move(e));
            return true;
        }
        std::size_t idx = elements_.size();
        for (std::size_t a = 0; a < idx; ++a) pairs_.push_back({a, idx, elements_[a].lead.lcm(e.lead)});
        elements_.push_back(std::move(e));
        return false;
    }

    Pair take_next_pair() {
        auto best = pairs_.begin();
        for (auto it = std::next(best); it != pairs_.end(); ++it) {
            auto c = order_.compare(it->lcm, best->lcm);
            if (c < 0 || (c == 0 && std::tie(it->first, it->second) < std::tie(best->first, best->second)))
                best = it;
        }
        Pair p = std::move(*best);
        pairs_.erase(best);
        return p;
    }

    bool skip_coprime(const Pair& p) const {
        if (!opts_.coprime_criterion) return false;
        const Element& g = elements_[p.first];
        const Element& h = elements_[p.second];
        return g.lead.coprime(h.lead) && g.poly.has_real_coefficients() && h.poly.has_real_coefficients();
    }

    bool reduce_pair(const Pair& p) {
        const Element& g = elements_[p.first];
        const Element& h = elements_[p.second];
        Monomial sg = p.lcm.quotient(g.lead);
        Monomial sh = p.lcm.quotient(h.lead);
        Polynomial s = g.poly.monomial_mul(sg) - h.poly.monomial_mul(sh);
        std::vector<Polynomial> cof(gens_.size(), Polynomial(n_));
        for (std::size_t j = 0; j < cof.size(); ++j)
            cof[j] = g.cof[j].monomial_mul(sg) - h.cof[j].monomial_mul(sh);

        std::vector<Polynomial> divisors;
        divisors.reserve(elements_.size());
        for (const Element& e : elements_) divisors.push_back(e.poly);
        ReductionTrace trace = normal_form(s, divisors, order_);
        if (trace.remainder.is_zero()) return false;
        subtract_quotients(cof, trace.quotients);
        return add(trace.remainder, std::move(cof));
    }

    // cof -= sum_k quotients[k] * elements_[k].cof
    void subtract_quotients(std::vector<Polynomial>& cof, const std::vector<Polynomial>& quotients) const {
        for (std::size_t k = 0; k < quotients.size(); ++k) {
            if (quotients[k].is_zero()) continue;
            for (std::size_t j = 0; j < cof.size(); ++j)
                if (!elements_[k].cof[j].is_zero()) cof[j] -= quotients[k] * elements_[k].cof[j];
        }
    }

    void finish() {
        // Drop elements whose leading monomial is divisible by another's.
        std::vector<bool> keep(elements_.size(), true);
        for (std::size_t a = 0; a < elements_.size(); ++a) {
            for (std::size_t b = 0; b < elements_.size() && keep[a]; ++b) {
                if (a == b) continue;
                const Monomial& la = elements_[a].lead;
                const Monomial& lb = elements_[b].lead;
                keep[a] = !(lb.divides(la) && (lb != la || b < a));
            }
        }
        std::vector<Element> minimal;
        for (std::size_t a = 0; a < elements_.size(); ++a)
            if (keep[a]) minimal.push_back(std::move(elements_[a]));
        elements_ = std::move(minimal);

        // Tail reduction; leading monomials are unaffected, so one pass suffices.
        for (std::size_t a = 0; a < elements_.size(); ++a) {
            std::vector<Polynomial> others;
            std::vector<std::size_t> index;
            for (std::size_t b = 0; b < elements_.size(); ++b) {
                if (b == a) continue;
                others.push_back(elements_[b].poly);
                index.push_back(b);
            }
            Element& e = elements_[a];
            Polynomial tail = e.poly;
            tail.add_term(e.lead, Quaternion(-1));
            ReductionTrace trace = normal_form(tail, others, order_);
            std::vector<Polynomial> quotients(elements_.size(), Polynomial(n_));
            bool changed = false;
            for (std::size_t q = 0; q < index.size(); ++q) {
                changed = changed || !trace.quotients[q].is_zero();
                quotients[index[q]] = std::move(trace.quotients[q]);
            }
            if (!changed) continue;
            std::vector<Polynomial> cof = e.cof;
            subtract_quotients(cof, quotients);
            trace.remainder.add_term(e.lead, Quaternion(1));
            e.poly = std::move(trace.remainder);
            e.cof = std::move(cof);
        }

        std::sort(elements_.begin(), elements_.end(),
                  [&](const Element& a, const Element& b) { return order_.less(a.lead, b.lead); });
    }

    const std::vector<Polynomial>& gens_;
    const MonomialOrder& order_;
    const BuchbergerOptions& opts_;
    std::size_t n_;
    std::vector<Pair> pairs_;
};

}  // namespace

LeftIdeal buchberger(std::vector<Polynomial> generators, const MonomialOrder& order,
                     const BuchbergerOptions& options) {
    LeftIdeal ideal(std::move(generators), order);
    Engine engine(ideal.generators_, ideal.order_, options);
    engine.run();
    for (Element& e : engine.elements_) {
        ideal.basis_.push_back(std::move(e.poly));
        ideal.cofactors_.push_back(std::move(e.cof));
    }
    ideal.pairs_reduced_ = engine.pairs_reduced_;
    return ideal;
}

Membership is_member(const Polynomial& f, const LeftIdeal& ideal) {
    if (f.nvars() != ideal.nvars()) throw VariableCountMismatch(ideal.nvars(), f.nvars());
    Membership out;
    const std::size_t n = ideal.nvars();
    if (ideal.basis().empty()) {
        out.member = f.is_zero();
        if (out.member) out.cofactors.assign(ideal.generators().size(), Polynomial(n));
        return out;
    }
    ReductionTrace trace = normal_form(f, ideal.basis(), ideal.order());
    if (!trace.remainder.is_zero()) return out;
    out.member = true;
    out.cofactors.assign(ideal.generators().size(), Polynomial(n));
    for (std::size_t k = 0; k < trace.quotients.size(); ++k) {
        if (trace.quotients[k].is_zero()) continue;
        for (std::size_t j = 0; j < out.cofactors.size(); ++j) {
            const Polynomial& c = ideal.cofactors()[k][j];
            if (!c.is_zero()) out.cofactors[j] += trace.quotients[k] * c;
        }
    }
    return out;
}

bool is_unit_ideal(const LeftIdeal& ideal) {
    return ideal.basis().size() == 1 && ideal.basis().front().is_constant() &&
           !ideal.basis().front().is_zero();
}

std::optional<std::vector<Polynomial>> unit_cofactors(const LeftIdeal& ideal) {
    if (!is_unit_ideal(ideal)) return std::nullopt;
    return ideal.cofactors().front();
}

}  // namespace qnull
