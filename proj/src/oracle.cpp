#include "zexplore/oracle.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "zexplore/complexfn.hpp"

namespace zexplore {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

double number(const std::string& s, int line_no) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw std::runtime_error("golden file line " + std::to_string(line_no) + ": bad number '" + s + "'");
    return v;
}

}  // namespace

std::vector<GoldenRow> read_golden(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "sigma,rho,re,im,quantity")
        throw std::runtime_error("golden file: unexpected header");
    std::vector<GoldenRow> rows;
    int line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto c = split(line);
        if (c.size() != 5) throw std::runtime_error("golden file line " + std::to_string(line_no) + ": need 5 fields");
        rows.push_back({{number(c[0], line_no), number(c[1], line_no)},
                        {number(c[2], line_no), number(c[3], line_no)},
                        c[4]});
    }
    return rows;
}

std::vector<GoldenRow> read_golden_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden file: " + path);
    return read_golden(in);
}

ComplexValue engine_value(const std::string& quantity, ComplexPoint s, const EvalConfig& cfg) {
    if (quantity == "zeta") return zeta(s, cfg);
    if (quantity == "zeta_d1") return zeta_d1(s, cfg);
    if (quantity == "zeta_d2") return zeta_d2(s, cfg);
    if (quantity == "gamma") return gamma(s);
    if (quantity == "loggamma") return log_gamma(s);
    if (quantity == "digamma") return digamma(s);
    throw std::invalid_argument("unknown quantity: " + quantity);
}

double oracle_tolerance(const std::string& quantity) {
    return quantity == "gamma" || quantity == "digamma" ? 1e-11 : 1e-9;
}

OracleReport check_against_golden(const std::vector<GoldenRow>& rows, const EvalConfig& cfg) {
    OracleReport rep;
    for (const auto& r : rows) {
        const ComplexValue v = engine_value(r.quantity, r.point, cfg);
        const double err = std::abs(v - r.value);
        rep.rows++;
        double& worst = rep.worst_abs[r.quantity];
        if (err > worst) worst = err;
        if (!(err <= oracle_tolerance(r.quantity))) rep.mismatches.push_back({r, v, err});
    }
    return rep;
}

std::vector<double> read_oracle_zeros(const std::string& path, const std::string& kind) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open zero file: " + path);
    std::string line;
    std::getline(in, line);
    std::vector<double> out;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        auto c = split(line);
        if (c.size() == 2 && c[0] == kind) out.push_back(number(c[1], line_no));
    }
    return out;
}

}  // namespace zexplore
