#include "gwva/kernels.hpp"

#include <cstdlib>

namespace gwva::kernels {

bool avx2_available()
{
#ifdef GWVA_HAVE_AVX2_KERNELS
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

namespace {

struct Dispatch {
    void (*weighted_sum)(const double* const*, const double*, std::size_t,
                         double, double*, std::size_t);
    void (*classify_cells)(const double*, const double*, std::size_t, double,
                           double*, std::size_t);
    void (*squared_distances)(const double*, const double*, std::size_t,
                              double, double, double*);
    void (*minmax_valid)(const double*, std::size_t, double, double&, double&,
                         std::size_t&);
    std::string name;
};

Dispatch select()
{
    bool want_avx2 = avx2_available();
    if (const char* env = std::getenv("GWVA_KERNELS")) {
        const std::string choice(env);
        if (choice == "scalar")
            want_avx2 = false;
        else if (choice == "avx2" && !avx2_available())
            want_avx2 = false; // requested but unsupported: fall back
    }
#ifdef GWVA_HAVE_AVX2_KERNELS
    if (want_avx2)
        return {&avx2::weighted_sum, &avx2::classify_cells,
                &avx2::squared_distances, &avx2::minmax_valid, "avx2"};
#endif
    (void)want_avx2;
    return {&scalar::weighted_sum, &scalar::classify_cells,
            &scalar::squared_distances, &scalar::minmax_valid, "scalar"};
}

const Dispatch& dispatch()
{
    static const Dispatch d = select();
    return d;
}

} // namespace

const std::string& active_implementation()
{
    return dispatch().name;
}

void weighted_sum(const double* const* layers, const double* weights,
                  std::size_t n_layers, double nodata,
                  double* out, std::size_t n)
{
    dispatch().weighted_sum(layers, weights, n_layers, nodata, out, n);
}

void classify_cells(const double* in, const double* breaks,
                    std::size_t n_breaks, double nodata,
                    double* out, std::size_t n)
{
    dispatch().classify_cells(in, breaks, n_breaks, nodata, out, n);
}

void squared_distances(const double* xs, const double* ys, std::size_t n,
                       double px, double py, double* d2)
{
    dispatch().squared_distances(xs, ys, n, px, py, d2);
}

void minmax_valid(const double* in, std::size_t n, double nodata,
                  double& mn, double& mx, std::size_t& n_valid)
{
    dispatch().minmax_valid(in, n, nodata, mn, mx, n_valid);
}

} // namespace gwva::kernels
