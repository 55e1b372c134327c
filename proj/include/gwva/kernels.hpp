#pragma once

#include <cstddef>
#include <string>

// Data-parallel inner loops shared by the raster modules. Every kernel has a
// scalar reference implementation and, on x86-64, an AVX2 variant. The two are
// required to produce bit-identical results: per cell the operation order is
// fixed (multiply then add, no FMA contraction) so vectorizing across cells
// cannot change any rounding. Equivalence is enforced by tests/test_kernels.
//
// Dispatch is resolved once at first use from CPUID; the GWVA_KERNELS
// environment variable ("scalar" or "avx2") overrides the choice.

namespace gwva::kernels {

namespace scalar {

// out[i] = sum_l weights[l] * layers[l][i]; nodata in any layer wins.
void weighted_sum(const double* const* layers, const double* weights,
                  std::size_t n_layers, double nodata,
                  double* out, std::size_t n);

// out[i] = 1 + #{j : in[i] > breaks[j]} (class ids 1..n_breaks+1, breaks
// ascending, values equal to a break fall in the lower class). Nodata passes
// through.
void classify_cells(const double* in, const double* breaks,
                    std::size_t n_breaks, double nodata,
                    double* out, std::size_t n);

// d2[i] = (px - xs[i])^2 + (py - ys[i])^2
void squared_distances(const double* xs, const double* ys, std::size_t n,
                       double px, double py, double* d2);

// Min/max over cells not equal to nodata; n_valid counts them. When no valid
// cell exists mn/mx are left untouched.
void minmax_valid(const double* in, std::size_t n, double nodata,
                  double& mn, double& mx, std::size_t& n_valid);

} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define GWVA_HAVE_AVX2_KERNELS 1
namespace avx2 {

void weighted_sum(const double* const* layers, const double* weights,
                  std::size_t n_layers, double nodata,
                  double* out, std::size_t n);
void classify_cells(const double* in, const double* breaks,
                    std::size_t n_breaks, double nodata,
                    double* out, std::size_t n);
void squared_distances(const double* xs, const double* ys, std::size_t n,
                       double px, double py, double* d2);
void minmax_valid(const double* in, std::size_t n, double nodata,
                  double& mn, double& mx, std::size_t& n_valid);

} // namespace avx2
#endif

// True when the running CPU supports AVX2 (always false off x86-64).
bool avx2_available();

// Name of the implementation the dispatcher selected ("scalar" or "avx2").
const std::string& active_implementation();

// Dispatched entry points.
void weighted_sum(const double* const* layers, const double* weights,
                  std::size_t n_layers, double nodata,
                  double* out, std::size_t n);
void classify_cells(const double* in, const double* breaks,
                    std::size_t n_breaks, double nodata,
                    double* out, std::size_t n);
void squared_distances(const double* xs, const double* ys, std::size_t n,
                       double px, double py, double* d2);
void minmax_valid(const double* in, std::size_t n, double nodata,
                  double& mn, double& mx, std::size_t& n_valid);

} // namespace gwva::kernels
