#include "gwva/kernels.hpp"

namespace gwva::kernels::scalar {

void weighted_sum(const double* const* layers, const double* weights,
                  std::size_t n_layers, double nodata,
                  double* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        bool bad = false;
        for (std::size_t l = 0; l < n_layers; ++l) {
            const double v = layers[l][i];
            bad = bad || (v == nodata);
            acc = acc + weights[l] * v; // mul then add, matching the AVX2 path
        }
        out[i] = bad ? nodata : acc;
    }
}

void classify_cells(const double* in, const double* breaks,
                    std::size_t n_breaks, double nodata,
                    double* out, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        const double v = in[i];
        if (v == nodata) {
            out[i] = nodata;
            continue;
        }
        double id = 1.0;
        for (std::size_t j = 0; j < n_breaks; ++j)
            id += (v > breaks[j]) ? 1.0 : 0.0;
        out[i] = id;
    }
}

void squared_distances(const double* xs, const double* ys, std::size_t n,
                       double px, double py, double* d2)
{
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = px - xs[i];
        const double dy = py - ys[i];
        d2[i] = dx * dx + dy * dy;
    }
}

void minmax_valid(const double* in, std::size_t n, double nodata,
                  double& mn, double& mx, std::size_t& n_valid)
{
    std::size_t count = 0;
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = in[i];
        if (v == nodata)
            continue;
        if (count == 0) {
            lo = hi = v;
        } else {
            lo = (v < lo) ? v : lo;
            hi = (v > hi) ? v : hi;
        }
        ++count;
    }
    n_valid = count;
    if (count > 0) {
        mn = lo;
        mx = hi;
    }
}

} // namespace gwva::kernels::scalar
