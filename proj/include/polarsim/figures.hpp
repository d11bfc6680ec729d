#pragma once

#include <string>
#include <vector>

#include "polarsim/sweep.hpp"

namespace polarsim {

// The prebaked figure datasets. Each reproduces one headline result:
//   fig1  trust weight curves for the two linear responses (analytic, no sim)
//   fig2  polarization frequency vs m, by population size
//   fig3  polarization frequency vs m, by evidence strength p_b
//   fig4  rounds to consensus vs n, mild mistrust vs none
//   fig5  mean false-believer share across the full grid
//   fig6  anti-updating vs ignoring, mean false-believer share vs m
struct FigureRequest {
    std::string which;            // "fig1" .. "fig6"
    int trials_override = 0;      // 0 keeps the figure's default
    std::uint64_t base_seed = 0;
    int jobs = 1;
};

struct FigureData {
    std::string name;
    std::vector<std::string> comments;  // emitted as leading '#' lines
    std::string header;                 // CSV header row
    std::vector<std::string> rows;      // preformatted CSV data rows
    bool simulated = false;
    SweepSpec spec;                     // meaningful when simulated
};

// Builds the dataset (running the sweep if the figure needs one).
// Throws ConfigError for an unknown figure name.
FigureData make_figure(const FigureRequest& req);

std::vector<std::string> figure_names();

}  // namespace polarsim
