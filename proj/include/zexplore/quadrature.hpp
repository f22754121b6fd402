#pragma once

#include <functional>

namespace zexplore {

struct QuadResult {
    double value = 0;
    double error_estimate = 0;
    int evaluations = 0;
    bool converged = true;
};

// Adaptive Simpson with Richardson correction on each accepted panel.
QuadResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                            double abs_tol, int max_depth = 50);

}  // namespace zexplore
