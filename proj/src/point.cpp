#include "qnull/point.hpp"

namespace qnull {

CommutingPoint::CommutingPoint(std::vector<Quaternion> coordinates) : coords_(std::move(coordinates)) {
    for (std::size_t r = 0; r < coords_.size(); ++r)
        for (std::size_t s = r + 1; s < coords_.size(); ++s)
            if (!commutes(coords_[r], coords_[s])) throw NonCommutingPoint(r, s);
}

CommutingPoint conjugate_point(const Quaternion& b, const CommutingPoint& p) {
    Quaternion binv = b.inverse();
    std::vector<Quaternion> out;
    out.reserve(p.size());
    for (const Quaternion& a : p.coordinates()) out.push_back(a.is_real() ? a : b * a * binv);
    return CommutingPoint(std::move(out));
}

Quaternion eval(const Polynomial& f, const CommutingPoint& p) {
    if (f.nvars() != p.size()) throw VariableCountMismatch(f.nvars(), p.size());
    // powers[v][e] = a_v^e, grown on demand.
    std::vector<std::vector<Quaternion>> powers(p.size());
    for (std::size_t v = 0; v < p.size(); ++v) powers[v].push_back(Quaternion(1));
    auto power = [&](std::size_t v, Monomial::Exponent e) -> const Quaternion& {
        auto& table = powers[v];
        while (table.size() <= e) table.push_back(table.back() * p[v]);
        return table[e];
    };

    Quaternion sum;
    for (const auto& [m, c] : f.terms()) {
        Quaternion value = c;
        for (std::size_t v = 0; v < m.nvars(); ++v)
            if (m[v] != 0) value *= power(v, m[v]);
        sum += value;
    }
    return sum;
}

Quaternion eval_product_formula(const Polynomial& f, const Polynomial& g, const CommutingPoint& p) {
    if (f.nvars() != g.nvars()) throw VariableCountMismatch(f.nvars(), g.nvars());
    Quaternion gp = eval(g, p);
    if (gp.is_zero()) return gp;
    return eval(f, conjugate_point(gp, p)) * gp;
}

std::vector<Polynomial> point_ideal_generators(const CommutingPoint& p) {
    std::vector<Polynomial> gens;
    for (std::size_t m = 0; m < p.size(); ++m)
        gens.push_back(Polynomial::variable(p.size(), m) - Polynomial::constant(p.size(), p[m]));
    return gens;
}

}  // namespace qnull
