#include "gwva/kernels.hpp"

#ifdef GWVA_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cmath>
#include <limits>
#include <vector>

// Compiled with -mavx2 -ffp-contract=off (see CMakeLists). Intrinsics are
// emitted as written, so each lane performs exactly the scalar op sequence.

namespace gwva::kernels::avx2 {

void weighted_sum(const double* const* layers, const double* weights,
                  std::size_t n_layers, double nodata,
                  double* out, std::size_t n)
{
    const __m256d vnodata = _mm256_set1_pd(nodata);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_setzero_pd();
        __m256d bad = _mm256_setzero_pd();
        for (std::size_t l = 0; l < n_layers; ++l) {
            const __m256d v = _mm256_loadu_pd(layers[l] + i);
            const __m256d w = _mm256_set1_pd(weights[l]);
            bad = _mm256_or_pd(bad, _mm256_cmp_pd(v, vnodata, _CMP_EQ_OQ));
            acc = _mm256_add_pd(acc, _mm256_mul_pd(w, v));
        }
        _mm256_storeu_pd(out + i, _mm256_blendv_pd(acc, vnodata, bad));
    }
    if (i < n) {
        std::vector<const double*> tail(n_layers);
        for (std::size_t l = 0; l < n_layers; ++l)
            tail[l] = layers[l] + i;
        scalar::weighted_sum(tail.data(), weights, n_layers, nodata, out + i, n - i);
    }
}

void classify_cells(const double* in, const double* breaks,
                    std::size_t n_breaks, double nodata,
                    double* out, std::size_t n)
{
    const __m256d vnodata = _mm256_set1_pd(nodata);
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(in + i);
        __m256d id = one;
        for (std::size_t j = 0; j < n_breaks; ++j) {
            const __m256d b = _mm256_set1_pd(breaks[j]);
            const __m256d gt = _mm256_cmp_pd(v, b, _CMP_GT_OQ);
            id = _mm256_add_pd(id, _mm256_and_pd(gt, one));
        }
        const __m256d isnd = _mm256_cmp_pd(v, vnodata, _CMP_EQ_OQ);
        _mm256_storeu_pd(out + i, _mm256_blendv_pd(id, vnodata, isnd));
    }
    if (i < n)
        scalar::classify_cells(in + i, breaks, n_breaks, nodata, out + i, n - i);
}

void squared_distances(const double* xs, const double* ys, std::size_t n,
                       double px, double py, double* d2)
{
    const __m256d vpx = _mm256_set1_pd(px);
    const __m256d vpy = _mm256_set1_pd(py);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dx = _mm256_sub_pd(vpx, _mm256_loadu_pd(xs + i));
        const __m256d dy = _mm256_sub_pd(vpy, _mm256_loadu_pd(ys + i));
        _mm256_storeu_pd(d2 + i, _mm256_add_pd(_mm256_mul_pd(dx, dx),
                                               _mm256_mul_pd(dy, dy)));
    }
    if (i < n)
        scalar::squared_distances(xs + i, ys + i, n - i, px, py, d2 + i);
}

void minmax_valid(const double* in, std::size_t n, double nodata,
                  double& mn, double& mx, std::size_t& n_valid)
{
    const __m256d vnodata = _mm256_set1_pd(nodata);
    const __m256d pinf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    const __m256d ninf = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
    __m256d vmin = pinf;
    __m256d vmax = ninf;
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(in + i);
        const __m256d isnd = _mm256_cmp_pd(v, vnodata, _CMP_EQ_OQ);
        vmin = _mm256_min_pd(vmin, _mm256_blendv_pd(v, pinf, isnd));
        vmax = _mm256_max_pd(vmax, _mm256_blendv_pd(v, ninf, isnd));
        count += 4 - static_cast<std::size_t>(
                         __builtin_popcount(static_cast<unsigned>(
                             _mm256_movemask_pd(isnd))));
    }
    alignas(32) double lanes[4];
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    _mm256_store_pd(lanes, vmin);
    for (double lane : lanes)
        lo = (lane < lo) ? lane : lo;
    _mm256_store_pd(lanes, vmax);
    for (double lane : lanes)
        hi = (lane > hi) ? lane : hi;
    for (; i < n; ++i) {
        const double v = in[i];
        if (v == nodata)
            continue;
        lo = (v < lo) ? v : lo;
        hi = (v > hi) ? v : hi;
        ++count;
    }
    n_valid = count;
    if (count > 0) {
        mn = lo;
        mx = hi;
    }
}

} // namespace gwva::kernels::avx2

#endif // GWVA_HAVE_AVX2_KERNELS
