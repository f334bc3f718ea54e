#pragma once

// Batch kernels over independent inputs. Each has an OpenMP version and a
// serial reference with identical results; tests compare the two.

#include "qnull/groebner.hpp"
#include "qnull/point.hpp"
#include "qnull/polynomial.hpp"

#include <span>
#include <vector>

namespace qnull {

std::vector<Quaternion> eval_batch(const Polynomial& f, std::span<const CommutingPoint> points);
std::vector<Quaternion> eval_batch_serial(const Polynomial& f, std::span<const CommutingPoint> points);

struct ProductFormulaSample {
    Polynomial f;
    Polynomial g;
    CommutingPoint p;
};

struct ProductFormulaResult {
    Quaternion direct;   // eval(f * g, p)
    Quaternion formula;  // eval_product_formula(f, g, p)
};

std::vector<ProductFormulaResult> product_formula_batch(std::span<const ProductFormulaSample> samples);
std::vector<ProductFormulaResult> product_formula_batch_serial(std::span<const ProductFormulaSample> samples);

std::vector<ReductionTrace> normal_form_batch(std::span<const Polynomial> inputs,
                                              std::span<const Polynomial> divisors,
                                              const MonomialOrder& order);
std::vector<ReductionTrace> normal_form_batch_serial(std::span<const Polynomial> inputs,
                                                     std::span<const Polynomial> divisors,
                                                     const MonomialOrder& order);

/// Threads OpenMP would use for the parallel kernels.
int kernel_threads();

}  // namespace qnull
