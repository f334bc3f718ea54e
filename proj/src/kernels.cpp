#include "qnull/kernels.hpp"

#include <omp.h>

#include <exception>

namespace qnull {

namespace {

// Runs body(idx) for idx in [0, n) across threads. The first exception thrown
// by any iteration is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t n, Body body) {
    std::exception_ptr error;
    const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < count; ++idx) {
        try {
            body(static_cast<std::size_t>(idx));
        } catch (...) {
#pragma omp critical(qnull_kernel_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

ProductFormulaResult product_formula_one(const ProductFormulaSample& s) {
    return {eval(s.f * s.g, s.p), eval_product_formula(s.f, s.g, s.p)};
}

}  // namespace

std::vector<Quaternion> eval_batch(const Polynomial& f, std::span<const CommutingPoint> points) {
    std::vector<Quaternion> out(points.size());
    parallel_for(points.size(), [&](std::size_t idx) { out[idx] = eval(f, points[idx]); });
    return out;
}

std::vector<Quaternion> eval_batch_serial(const Polynomial& f, std::span<const CommutingPoint> points) {
    std::vector<Quaternion> out;
    out.reserve(points.size());
    for (const CommutingPoint& p : points) out.push_back(eval(f, p));
    return out;
}

std::vector<ProductFormulaResult> product_formula_batch(std::span<const ProductFormulaSample> samples) {
    std::vector<ProductFormulaResult> out(samples.size());
    parallel_for(samples.size(), [&](std::size_t idx) { out[idx] = product_formula_one(samples[idx]); });
    return out;
}

std::vector<ProductFormulaResult> product_formula_batch_serial(std::span<const ProductFormulaSample> samples) {
    std::vector<ProductFormulaResult> out;
    out.reserve(samples.size());
    for (const ProductFormulaSample& s : samples) out.push_back(product_formula_one(s));
    return out;
}

std::vector<ReductionTrace> normal_form_batch(std::span<const Polynomial> inputs,
                                              std::span<const Polynomial> divisors,
                                              const MonomialOrder& order) {
    std::vector<ReductionTrace> out(inputs.size());
    parallel_for(inputs.size(), [&](std::size_t idx) { out[idx] = normal_form(inputs[idx], divisors, order); });
    return out;
}

std::vector<ReductionTrace> normal_form_batch_serial(std::span<const Polynomial> inputs,
                                                     std::span<const Polynomial> divisors,
                                                     const MonomialOrder& order) {
    std::vector<ReductionTrace> out;
    out.reserve(inputs.size());
    for (const Polynomial& f : inputs) out.push_back(normal_form(f, divisors, order));
    return out;
}

int kernel_threads() { return omp_get_max_threads(); }

}  // namespace qnull
