#include "holosig/kernels.hpp"

#include <bit>
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace holosig::kernels {

namespace {

// minimum estimated flop count before a level is split across threads; the
// streaming product loops are memory bound, so forking pays off later than
// for the compute-bound shuffle gather
constexpr std::size_t product_work_cutoff = std::size_t{1} << 21;
constexpr std::size_t shuffle_work_cutoff = std::size_t{1} << 17;

void check_shapes(const TensorSeries& out, const TensorSeries& a,
                  const TensorSeries& b) {
  if (!out.same_shape(a) || !out.same_shape(b))
    throw shape_error("series shapes differ");
  if (&out == &a || &out == &b)
    throw domain_error("output series must not alias an input");
}

// level p of the plain product, one streaming pass per split
void product_level(TensorSeries& out, const TensorSeries& a,
                   const TensorSeries& b, int p) {
  auto& dst = out.level(p);
  for (double& c : dst) c = 0.0;
  for (int q = 0; q <= p; ++q) {
    const auto& la = a.level(p - q);
    const auto& lb = b.level(q);
    std::size_t k = 0;
    for (double ca : la)
      for (double cb : lb) dst[k++] += ca * cb;
  }
}

// level p of the in-place product acc * other
void concat_level(TensorSeries& acc, const TensorSeries& other, int p) {
  auto& dst = acc.level(p);
  const double scale = other.level(0)[0];
  for (double& c : dst) c *= scale;
  for (int q = 1; q <= p; ++q) {
    const auto& la = acc.level(p - q);
    const auto& lb = other.level(q);
    std::size_t k = 0;
    for (double ca : la)
      for (double cb : lb) dst[k++] += ca * cb;
  }
}

// shuffle on a one-letter alphabet collapses to binomial weights per level
void shuffle_into_unary(TensorSeries& out, const TensorSeries& a,
                        const TensorSeries& b) {
  for (int r = 0; r <= out.depth(); ++r) {
    double acc = 0.0;
    double binom = 1.0;
    for (int p = 0; p <= r; ++p) {
      acc += binom * a.level(p)[0] * b.level(r - p)[0];
      binom = binom * (r - p) / (p + 1);
    }
    out.level(r)[0] = acc;
  }
}

// accumulates the split (p-q, q) of the product into dst[lo, hi); walks the
// output range with carried indices instead of per-element division
void product_split_range(double* dst, const double* leva, const double* levb,
                         std::size_t bs, std::size_t lo, std::size_t hi) {
  std::size_t u = lo / bs;
  std::size_t v = lo % bs;
  std::size_t k = lo;
  while (k < hi) {
    // one (possibly clipped) row of the right factor at a time keeps the
    // inner loop a plain streaming multiply-add
    const std::size_t chunk = std::min(hi - k, bs - v);
    const double au = leva[u];
    const double* brow = levb + v;
    double* drow = dst + k;
    for (std::size_t j = 0; j < chunk; ++j) drow[j] += au * brow[j];
    k += chunk;
    v += chunk;
    if (v == bs) {
      v = 0;
      ++u;
    }
  }
}

} // namespace

std::vector<std::uint32_t> interleave_masks(int r, int p) {
  if (r < 0 || r > 31) throw domain_error("interleave masks need 0 <= r <= 31");
  std::vector<std::uint32_t> masks;
  const std::uint32_t end = 1u << r;
  for (std::uint32_t mask = 0; mask < end; ++mask)
    if (std::popcount(mask) == p) masks.push_back(mask);
  return masks;
}

void product_into(TensorSeries& out, const TensorSeries& a,
                  const TensorSeries& b) {
  check_shapes(out, a, b);
  const auto n = static_cast<std::size_t>(out.alphabet());
  for (int p = 0; p <= out.depth(); ++p) {
    auto& dst = out.level(p);
    const std::size_t total = dst.size();
    const std::size_t work = total * static_cast<std::size_t>(p + 1);
    if (work < product_work_cutoff) {
      product_level(out, a, b, p);
      continue;
    }
#ifdef _OPENMP
#pragma omp parallel
    {
      const auto threads = static_cast<std::size_t>(omp_get_num_threads());
      const auto tid = static_cast<std::size_t>(omp_get_thread_num());
#else
    {
      const std::size_t threads = 1, tid = 0;
#endif
      const std::size_t lo = total * tid / threads;
      const std::size_t hi = total * (tid + 1) / threads;
      for (std::size_t k = lo; k < hi; ++k) dst[k] = 0.0;
      std::size_t bs = 1; // n^q
      for (int q = 0; q <= p; ++q) {
        product_split_range(dst.data(), a.level(p - q).data(),
                            b.level(q).data(), bs, lo, hi);
        bs *= n;
      }
    }
  }
}

void concat_into(TensorSeries& acc, const TensorSeries& other) {
  if (!acc.same_shape(other)) throw shape_error("series shapes differ");
  if (&acc == &other) {
    const TensorSeries copy = other;
    concat_into(acc, copy);
    return;
  }
  const auto n = static_cast<std::size_t>(acc.alphabet());
  const double scale = other.level(0)[0];
  // top down, so the lower levels of acc still hold the left factor when a
  // level above them is rebuilt
  for (int p = acc.depth(); p >= 0; --p) {
    auto& dst = acc.level(p);
    const std::size_t total = dst.size();
    const std::size_t work = total * static_cast<std::size_t>(p + 1);
    if (work < product_work_cutoff) {
      concat_level(acc, other, p);
      continue;
    }
#ifdef _OPENMP
#pragma omp parallel
    {
      const auto threads = static_cast<std::size_t>(omp_get_num_threads());
      const auto tid = static_cast<std::size_t>(omp_get_thread_num());
#else
    {
      const std::size_t threads = 1, tid = 0;
#endif
      const std::size_t lo = total * tid / threads;
      const std::size_t hi = total * (tid + 1) / threads;
      for (std::size_t k = lo; k < hi; ++k) dst[k] *= scale;
      std::size_t bs = n;
      for (int q = 1; q <= p; ++q) {
        product_split_range(dst.data(), acc.level(p - q).data(),
                            other.level(q).data(), bs, lo, hi);
        bs *= n;
      }
    }
  }
}

void shuffle_into(TensorSeries& out, const TensorSeries& a,
                  const TensorSeries& b) {
  check_shapes(out, a, b);
  const int n = out.alphabet();
  if (n == 1) {
    shuffle_into_unary(out, a, b);
    return;
  }
  if (out.depth() > 31) throw domain_error("shuffle depth above 31");
  for (int r = 0; r <= out.depth(); ++r) {
    std::vector<std::vector<std::uint32_t>> masks_by_p;
    masks_by_p.reserve(static_cast<std::size_t>(r) + 1);
    for (int p = 0; p <= r; ++p) masks_by_p.push_back(interleave_masks(r, p));
    auto& dst = out.level(r);
    const auto size = static_cast<std::ptrdiff_t>(dst.size());
    const std::size_t work = dst.size() << r;
#pragma omp parallel for schedule(static) if (work >= shuffle_work_cutoff)
    for (std::ptrdiff_t k = 0; k < size; ++k) {
      // digits of k, least significant (= last letter) first
      int digits[32];
      auto rest = static_cast<std::size_t>(k);
      for (int i = 0; i < r; ++i) {
        digits[i] = static_cast<int>(rest % static_cast<std::size_t>(n));
        rest /= static_cast<std::size_t>(n);
      }
      double acc = 0.0;
      for (int p = 0; p <= r; ++p) {
        const auto& la = a.level(p);
        const auto& lb = b.level(r - p);
        for (std::uint32_t mask : masks_by_p[static_cast<std::size_t>(p)]) {
          std::size_t ua = 0, ub = 0;
          for (int j = r - 1; j >= 0; --j) {
            if (mask >> j & 1u)
              ua = ua * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(digits[j]);
            else
              ub = ub * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(digits[j]);
          }
          acc += la[ua] * lb[ub];
        }
      }
      dst[k] = acc;
    }
    (void)work;
  }
}

namespace serial {

void product_into(TensorSeries& out, const TensorSeries& a,
                  const TensorSeries& b) {
  check_shapes(out, a, b);
  for (int p = 0; p <= out.depth(); ++p) product_level(out, a, b, p);
}

void concat_into(TensorSeries& acc, const TensorSeries& other) {
  if (!acc.same_shape(other)) throw shape_error("series shapes differ");
  if (&acc == &other) {
    const TensorSeries copy = other;
    concat_into(acc, copy);
    return;
  }
  for (int p = acc.depth(); p >= 0; --p) concat_level(acc, other, p);
}

void shuffle_into(TensorSeries& out, const TensorSeries& a,
                  const TensorSeries& b) {
  check_shapes(out, a, b);
  const int n = out.alphabet();
  if (n == 1) {
    shuffle_into_unary(out, a, b);
    return;
  }
  if (out.depth() > 31) throw domain_error("shuffle depth above 31");
  for (int r = 0; r <= out.depth(); ++r) {
    auto& dst = out.level(r);
    for (double& c : dst) c = 0.0;
    for (int p = 0; p <= r; ++p) {
      const int q = r - p;
      const auto& la = a.level(p);
      const auto& lb = b.level(q);
      for (std::uint32_t mask : interleave_masks(r, p)) {
        for (std::size_t ua = 0; ua < la.size(); ++ua) {
          int adig[32];
          auto resta = ua;
          for (int i = 0; i < p; ++i) {
            adig[i] = static_cast<int>(resta % static_cast<std::size_t>(n));
            resta /= static_cast<std::size_t>(n);
          }
          for (std::size_t ub = 0; ub < lb.size(); ++ub) {
            int bdig[32];
            auto restb = ub;
            for (int i = 0; i < q; ++i) {
              bdig[i] = static_cast<int>(restb % static_cast<std::size_t>(n));
              restb /= static_cast<std::size_t>(n);
            }
            // interleave the digits of ua and ub according to the mask
            std::size_t k = 0;
            int ia = p - 1, ib = q - 1;
            for (int j = r - 1; j >= 0; --j) {
              int d;
              if (mask >> j & 1u)
                d = adig[ia--];
              else
                d = bdig[ib--];
              k = k * static_cast<std::size_t>(n) + static_cast<std::size_t>(d);
            }
            dst[k] += la[ua] * lb[ub];
          }
        }
      }
    }
  }
}

} // namespace serial

} // namespace holosig::kernels
