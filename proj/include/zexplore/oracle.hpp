#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "zexplore/types.hpp"

namespace zexplore {

// One row of the golden file: sigma,rho,re,im,quantity
struct GoldenRow {
    ComplexPoint point;
    ComplexValue value;
    std::string quantity;  // zeta, zeta_d1, zeta_d2, gamma, loggamma, digamma
};

// Throws std::runtime_error on a malformed file.
std::vector<GoldenRow> read_golden(std::istream& is);
std::vector<GoldenRow> read_golden_file(const std::string& path);

ComplexValue engine_value(const std::string& quantity, ComplexPoint s, const EvalConfig& cfg = {});

// Absolute tolerance per quantity: 1e-11 for gamma and digamma, 1e-9 otherwise.
double oracle_tolerance(const std::string& quantity);

struct OracleMismatch {
    GoldenRow row;
    ComplexValue engine;
    double abs_error = 0;
};

struct OracleReport {
    int rows = 0;
    std::map<std::string, double> worst_abs;  // per quantity
    std::vector<OracleMismatch> mismatches;
    bool ok() const { return rows > 0 && mismatches.empty(); }
};

OracleReport check_against_golden(const std::vector<GoldenRow>& rows, const EvalConfig& cfg = {});

// Ordinates from the zero file, filtered by kind (FULL or IMAG_HALF).
std::vector<double> read_oracle_zeros(const std::string& path, const std::string& kind);

}  // namespace zexplore
