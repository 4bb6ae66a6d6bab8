#ifndef HOLOSIG_KERNELS_HPP
#define HOLOSIG_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "holosig/tensor_series.hpp"

namespace holosig::kernels {

// OpenMP kernels. Each output coefficient is gathered by exactly one thread
// with a fixed accumulation order, so results are bitwise identical to the
// serial scatter forms below and independent of the thread count.

void product_into(TensorSeries& out, const TensorSeries& a,
                  const TensorSeries& b);

// acc <- acc * other in place, processing levels top down; produces the
// same bits as product_into without a scratch series
void concat_into(TensorSeries& acc, const TensorSeries& other);

void shuffle_into(TensorSeries& out, const TensorSeries& a,
                  const TensorSeries& b);

// r-bit masks with exactly p bits set, ascending; bit i selects whether the
// i-th output position from the right takes its letter from the left factor
std::vector<std::uint32_t> interleave_masks(int r, int p);

namespace serial {

// reference implementations, kept for tests and the benchmark

void product_into(TensorSeries& out, const TensorSeries& a,
                  const TensorSeries& b);

void concat_into(TensorSeries& acc, const TensorSeries& other);

void shuffle_into(TensorSeries& out, const TensorSeries& a,
                  const TensorSeries& b);

} // namespace serial

} // namespace holosig::kernels

#endif
