#pragma once

#include <span>
#include <string>
#include <vector>

namespace gwva {

/// Reciprocal pairwise comparison matrix. Construction enforces a unit
/// diagonal and a[i][j]*a[j][i] == 1 within 1e-9; entries outside the Saaty
/// scale [1/9, 9] are tolerated (ratio matrices built from priorities may
/// exceed it) but reported through saaty_bounds_ok().
class PairwiseMatrix {
public:
    PairwiseMatrix(int n, std::vector<double> entries);

    int n() const { return n_; }
    double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    bool saaty_bounds_ok() const;

private:
    int n_;
    std::vector<double> a_;
};

/// Perfectly consistent ratio matrix a[i][j] = v[i] / v[j].
PairwiseMatrix matrix_from_priorities(std::span<const double> v);

/// Normalized criterion weights: sum(w) == 1, every component positive.
struct WeightVector {
    std::vector<double> w;
    std::vector<std::string> labels;
};

/// Approximate principal eigenvector: divide each column by its column sum,
/// then average each row of the normalized matrix. Exact for consistent
/// matrices.
WeightVector ahp_weights(const PairwiseMatrix& pm,
                         std::vector<std::string> labels = {});

struct ConsistencyResult {
    double lambda_max;
    double ci;
    double cr;
    bool acceptable; // cr <= 0.1
};

/// lambda_max as the mean Rayleigh quotient (pm*w)_i / w_i;
/// CI = (lambda_max - n) / (n - 1); CR = CI / RI(n). For n < 3 both CI and CR
/// are 0 by convention (RI(1) = RI(2) = 0).
ConsistencyResult consistency(const PairwiseMatrix& pm, const WeightVector& w);

/// Saaty random consistency index for n in 1..10 (RI(8) = 1.41).
double random_index(int n);

/// Triangular fuzzy number. Matrix entries are stored as given; the ordering
/// l <= m <= u is demanded only by tfn_membership.
struct Tfn {
    double l;
    double m;
    double u;
};

/// Piecewise-linear membership degree of x in (l, m, u); requires
/// l <= m <= u. Degenerate spans: a point mass (l == m == u) has degree 1 at
/// the point and 0 elsewhere; a flat side contributes a step.
double tfn_membership(const Tfn& t, double x);

/// Center-of-gravity crisp value (l + m + u) / 3.
double defuzzify_centroid(const Tfn& t);

/// n x n matrix of TFN comparisons; the diagonal must be (1, 1, 1) and every
/// component positive.
class FuzzyPairwiseMatrix {
public:
    FuzzyPairwiseMatrix(int n, std::vector<Tfn> entries);

    int n() const { return n_; }
    const Tfn& at(int i, int j) const
    {
        return a_[static_cast<std::size_t>(i) * n_ + j];
    }

private:
    int n_;
    std::vector<Tfn> a_;
};

/// Criterion weights from a fuzzy comparison matrix: defuzzify every cell by
/// centroid, then normalize row sums by the total (synthetic-extent
/// normalization applied to the crisp matrix). Sum(w) == 1.
WeightVector fuzzy_ahp_weights(const FuzzyPairwiseMatrix& fm,
                               std::vector<std::string> labels = {});

} // namespace gwva
