#pragma once

#include <ostream>

#include "zexplore/types.hpp"

namespace zexplore {

// Tracked alpha + alpha~ against the closed-form argument sum at sigma = 1/3.
void write_figure1(std::ostream& os, const EvalConfig& cfg = {});
// Tracked arg zeta against the two readings of the Brent formula near the first zero.
void write_figure2(std::ostream& os, const EvalConfig& cfg = {});
// beta - alpha on the critical line, 30 <= rho <= 50.
void write_figure3(std::ostream& os, const EvalConfig& cfg = {});
// |zeta_c| on both sides of the critical line, s0 = 3/4 + 12 i.
void write_figure4(std::ostream& os, const EvalConfig& cfg = {});

// beta - alpha wrapped into (-pi/2, 3pi/2] so the only jumps are at zeros.
double beta_minus_alpha(double rho, const EvalConfig& cfg = {});

}  // namespace zexplore
