#pragma once

#include <vector>

#include "gwva/classify.hpp"
#include "gwva/mcda.hpp"

namespace gwva {

/// Standard DRASTIC / DRASTIC_LU coefficient set: rating bands or category
/// tables for the eight parameters (D, R, A, S, T, I, C, LU) plus the
/// conventional integer weights (5, 4, 3, 2, 1, 5, 3 and LU = 5). These are
/// the defaults baked into generated pipeline configs; any of them can be
/// overridden in the config document.
std::vector<RatingScheme> preset_rating_schemes();

/// Parameter names in overlay order, optionally including LU.
std::vector<std::string> preset_parameters(bool with_lu);

/// Integer weights matching preset_parameters(with_lu).
std::vector<double> preset_integer_weights(bool with_lu);

/// Priority vector (5, 4, 3, 2, 1, 5, 3, 5) whose ratio matrix drives the
/// AHP weighting of the eight parameters.
std::vector<double> preset_ahp_priorities();

/// 8x8 triangular-fuzzy comparison matrix of the eight parameters for the
/// fuzzy AHP weighting.
FuzzyPairwiseMatrix preset_fuzzy_matrix();

} // namespace gwva
