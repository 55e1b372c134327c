#include "gwva/presets.hpp"

namespace gwva {

std::vector<RatingScheme> preset_rating_schemes()
{
    std::vector<RatingScheme> schemes;

    RatingScheme d;
    d.parameter = "D";
    d.mode = RatingMode::continuous;
    d.weight = 5.0;
    d.bands = {{5.70, 17.90, 10},
               {17.90, 30.10, 8},
               {30.10, 42.30, 6},
               {42.30, 54.50, 4},
               {54.50, 66.50, 2}};
    schemes.push_back(std::move(d));

    RatingScheme r;
    r.parameter = "R";
    r.mode = RatingMode::continuous;
    r.weight = 4.0;
    r.bands = {{42.0, 100.0, 3},
               {100.0, 160.0, 4},
               {160.0, 220.0, 7},
               {220.0, 300.0, 8},
               {300.0, 390.0, 10}};
    schemes.push_back(std::move(r));

    RatingScheme a;
    a.parameter = "A";
    a.mode = RatingMode::categorical;
    a.weight = 3.0;
    a.categories = {{1, "Sand / Gravel", 8},
                    {2, "Sand and Clay", 6},
                    {3, "Limestone and Sandstone", 4},
                    {4, "Silty Clay", 2}};
    schemes.push_back(std::move(a));

    RatingScheme s;
    s.parameter = "S";
    s.mode = RatingMode::categorical;
    s.weight = 2.0;
    s.categories = {{1, "Pebble_Gravel_Sand", 10},
                    {2, "Gravel and Clay", 8},
                    {3, "Sand and Clay", 6},
                    {4, "Sandy Clay", 4},
                    {5, "Sandy Clay Loam", 3}};
    schemes.push_back(std::move(s));

    RatingScheme t;
    t.parameter = "T";
    t.mode = RatingMode::continuous;
    t.weight = 1.0;
    t.bands = {{0.0, 2.0, 10},
               {2.0, 6.0, 8},
               {6.0, 11.50, 6},
               {11.50, 19.50, 4},
               {19.50, 40.50, 2}};
    schemes.push_back(std::move(t));

    RatingScheme i;
    i.parameter = "I";
    i.mode = RatingMode::categorical;
    i.weight = 5.0;
    i.categories = {{1, "Pebble-Gravel-Sand", 10},
                    {2, "Sandy Loam", 8},
                    {3, "Sandy Clay, Clayey Sand, Silt Loam, Loam", 6},
                    {4, "Clay Loam", 4},
                    {5, "Clay and Silty Clay", 2}};
    schemes.push_back(std::move(i));

    RatingScheme c;
    c.parameter = "C";
    c.mode = RatingMode::continuous;
    c.weight = 3.0;
    c.bands = {{2.96e-05, 1.06e-04, 2},
               {1.06e-04, 1.84e-04, 4},
               {1.84e-04, 2.61e-04, 6},
               {2.61e-04, 3.38e-04, 8},
               {3.38e-04, 4.15e-04, 10}};
    schemes.push_back(std::move(c));

    RatingScheme lu;
    lu.parameter = "LU";
    lu.mode = RatingMode::categorical;
    lu.weight = 5.0;
    lu.categories = {{1, "Urban and Residential Areas", 10},
                     {2, "New agricultural Areas", 9},
                     {3, "Wastewater-Impacted Areas", 7},
                     {4, "Old agricultural Areas", 3},
                     {5, "Barren land", 1}};
    schemes.push_back(std::move(lu));

    return schemes;
}

std::vector<std::string> preset_parameters(bool with_lu)
{
    std::vector<std::string> p{"D", "R", "A", "S", "T", "I", "C"};
    if (with_lu)
        p.push_back("LU");
    return p;
}

std::vector<double> preset_integer_weights(bool with_lu)
{
    std::vector<double> w{5.0, 4.0, 3.0, 2.0, 1.0, 5.0, 3.0};
    if (with_lu)
        w.push_back(5.0);
    return w;
}

std::vector<double> preset_ahp_priorities()
{
    return {5.0, 4.0, 3.0, 2.0, 1.0, 5.0, 3.0, 5.0};
}

FuzzyPairwiseMatrix preset_fuzzy_matrix()
{
    // Row pattern of the (l, m, u) comparison triples: parameters with equal
    // priority share identical rows.
    const Tfn one{1.00, 1.00, 1.00};
    const std::vector<Tfn> row_p5 = {one,
                                     {1.25, 0.80, 1.00},
                                     {1.67, 0.60, 1.00},
                                     {2.50, 0.40, 1.00},
                                     {5.00, 0.20, 1.00},
                                     one,
                                     {1.67, 0.60, 1.00},
                                     one};
    const std::vector<Tfn> row_p4 = {{0.80, 1.25, 1.00},
                                     one,
                                     {1.33, 0.75, 1.00},
                                     {2.00, 0.50, 1.00},
                                     {4.00, 0.25, 1.00},
                                     {0.80, 1.25, 1.00},
                                     {1.33, 0.75, 1.00},
                                     {0.80, 1.25, 1.00}};
    const std::vector<Tfn> row_p3 = {{0.60, 1.67, 1.00},
                                     {0.75, 1.33, 1.00},
                                     one,
                                     {1.50, 0.67, 1.00},
                                     {3.00, 0.33, 1.00},
                                     {0.60, 1.67, 1.00},
                                     one,
                                     {0.60, 1.67, 1.00}};
    const std::vector<Tfn> row_p2 = {{0.40, 2.50, 1.00},
                                     {0.50, 2.00, 1.00},
                                     {0.67, 1.50, 1.00},
                                     one,
                                     {2.00, 0.50, 1.00},
                                     {0.40, 2.50, 1.00},
                                     {0.67, 1.50, 1.00},
                                     {0.40, 2.50, 1.00}};
    const std::vector<Tfn> row_p1 = {{0.20, 5.00, 1.00},
                                     {0.25, 4.00, 1.00},
                                     {0.33, 3.00, 1.00},
                                     {0.50, 2.00, 1.00},
                                     one,
                                     {0.20, 5.00, 1.00},
                                     {0.33, 3.00, 1.00},
                                     {0.20, 5.00, 1.00}};

    std::vector<Tfn> cells;
    cells.reserve(64);
    const std::vector<const std::vector<Tfn>*> rows = {
        &row_p5, &row_p4, &row_p3, &row_p2,
        &row_p1, &row_p5, &row_p3, &row_p5}; // D R A S T I C LU
    for (const auto* row : rows)
        cells.insert(cells.end(), row->begin(), row->end());
    return FuzzyPairwiseMatrix(8, std::move(cells));
}

} // namespace gwva
