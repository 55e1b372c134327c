#include "gwva/mcda.hpp"

#include <cmath>

#include "gwva/errors.hpp"

namespace gwva {

namespace {

constexpr double kReciprocityTol = 1e-9;

std::vector<std::string> index_labels(int n, std::vector<std::string> labels)
{
    if (labels.empty()) {
        labels.reserve(n);
        for (int i = 0; i < n; ++i)
            labels.push_back("c" + std::to_string(i + 1));
    }
    if (static_cast<int>(labels.size()) != n)
        throw input_error("weight labels must match the matrix dimension");
    return labels;
}

} // namespace

PairwiseMatrix::PairwiseMatrix(int n, std::vector<double> entries)
    : n_(n), a_(std::move(entries))
{
    if (n_ < 1)
        throw input_error("pairwise matrix dimension must be at least 1");
    if (a_.size() != static_cast<std::size_t>(n_) * n_)
        throw input_error("pairwise matrix needs n*n entries");
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const double v = at(i, j);
            if (!(v > 0.0) || !std::isfinite(v))
                throw input_error("pairwise matrix entries must be positive");
        }
        if (std::abs(at(i, i) - 1.0) > kReciprocityTol)
            throw input_error("pairwise matrix diagonal must be 1");
    }
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (std::abs(at(i, j) * at(j, i) - 1.0) > kReciprocityTol)
                throw input_error(
                    "pairwise matrix violates reciprocity at (" +
                    std::to_string(i) + ", " + std::to_string(j) + ")");
}

bool PairwiseMatrix::saaty_bounds_ok() const
{
    for (double v : a_)
        if (v < 1.0 / 9.0 - kReciprocityTol || v > 9.0 + kReciprocityTol)
            return false;
    return true;
}

PairwiseMatrix matrix_from_priorities(std::span<const double> v)
{
    const int n = static_cast<int>(v.size());
    if (n < 1)
        throw input_error("priority vector must be non-empty");
    for (double p : v)
        if (!(p > 0.0) || !std::isfinite(p))
            throw input_error("priorities must be positive");
    std::vector<double> a;
    a.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.push_back(i == j ? 1.0 : v[i] / v[j]);
    return PairwiseMatrix(n, std::move(a));
}

WeightVector ahp_weights(const PairwiseMatrix& pm, std::vector<std::string> labels)
{
    const int n = pm.n();
    std::vector<double> colsum(n, 0.0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            colsum[j] += pm.at(i, j);
    std::vector<double> w(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double mean = 0.0;
        for (int j = 0; j < n; ++j)
            mean += pm.at(i, j) / colsum[j];
        w[i] = mean / n;
    }
    return WeightVector{std::move(w), index_labels(n, std::move(labels))};
}

ConsistencyResult consistency(const PairwiseMatrix& pm, const WeightVector& wv)
{
    const int n = pm.n();
    if (static_cast<int>(wv.w.size()) != n)
        throw input_error("weight vector dimension does not match the matrix");
    double lambda = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j)
            row += pm.at(i, j) * wv.w[j];
        lambda += row / wv.w[i];
    }
    lambda /= n;
    ConsistencyResult r{lambda, 0.0, 0.0, true};
    if (n >= 3) {
        r.ci = (lambda - n) / (n - 1);
        r.cr = r.ci / random_index(n);
        r.acceptable = r.cr <= 0.1;
    }
    return r;
}

double random_index(int n)
{
    // Saaty's table; 0 for n = 1, 2 where a reciprocal matrix is always
    // consistent.
    static constexpr double kRi[] = {0.0,  0.0,  0.58, 0.90, 1.12,
                                     1.24, 1.32, 1.41, 1.45, 1.49};
    if (n < 1 || n > 10)
        throw input_error("random index is tabulated for n in 1..10");
    return kRi[n - 1];
}

double tfn_membership(const Tfn& t, double x)
{
    if (!(t.l <= t.m && t.m <= t.u))
        throw input_error("tfn_membership requires l <= m <= u");
    // The apex always has degree 1, which also covers degenerate spans
    // (point masses and flat sides) where x == m falls on a closed boundary.
    if (x == t.m)
        return 1.0;
    if (x <= t.l || x >= t.u)
        return 0.0;
    return x < t.m ? (x - t.l) / (t.m - t.l) : (t.u - x) / (t.u - t.m);
}

double defuzzify_centroid(const Tfn& t)
{
    return (t.l + t.m + t.u) / 3.0;
}

FuzzyPairwiseMatrix::FuzzyPairwiseMatrix(int n, std::vector<Tfn> entries)
    : n_(n), a_(std::move(entries))
{
    if (n_ < 1)
        throw input_error("fuzzy matrix dimension must be at least 1");
    if (a_.size() != static_cast<std::size_t>(n_) * n_)
        throw input_error("fuzzy matrix needs n*n entries");
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const Tfn& t = at(i, j);
            if (!(t.l > 0.0) || !(t.m > 0.0) || !(t.u > 0.0) ||
                !std::isfinite(t.l + t.m + t.u))
                throw input_error("fuzzy matrix components must be positive");
        }
        const Tfn& d = at(i, i);
        if (d.l != 1.0 || d.m != 1.0 || d.u != 1.0)
            throw input_error("fuzzy matrix diagonal must be (1, 1, 1)");
    }
}

WeightVector fuzzy_ahp_weights(const FuzzyPairwiseMatrix& fm,
                               std::vector<std::string> labels)
{
    const int n = fm.n();
    std::vector<double> rowsum(n, 0.0);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            rowsum[i] += defuzzify_centroid(fm.at(i, j));
        total += rowsum[i];
    }
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i)
        w[i] = rowsum[i] / total;
    return WeightVector{std::move(w), index_labels(n, std::move(labels))};
}

} // namespace gwva
