#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "zexplore/types.hpp"

namespace testing {

// Fixed-seed generators; every property test reports its seed through INFO.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : seed_(seed), rng_(seed) {}
    std::uint64_t seed() const { return seed_; }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    // Strip point away from the real axis.
    zexplore::ComplexPoint strip(double rho_lo = 1.0, double rho_hi = 60.0) {
        return {uniform(0.05, 0.95), uniform(rho_lo, rho_hi)};
    }
    zexplore::ComplexPoint line(double rho_lo = 1.0, double rho_hi = 60.0) { return {0.5, uniform(rho_lo, rho_hi)}; }

private:
    std::uint64_t seed_;
    std::mt19937_64 rng_;
};

inline double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }
inline double rel(std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

// Distance between tan(a) and tan(b) read as directions: |sin(a - b)|.
inline double tan_gap(double a, double b) { return std::abs(std::sin(a - b)); }

inline std::string data_path(const std::string& name) { return std::string(ZEXPLORE_DATA_DIR) + "/" + name; }

// name,value pairs written by the mpmath generator
inline double derived(const std::string& name) {
    static const std::map<std::string, double> table = [] {
        std::map<std::string, double> t;
        std::ifstream in(data_path("oracle_derived.csv"));
        if (!in) throw std::runtime_error("missing oracle_derived.csv");
        std::string line;
        std::getline(in, line);
        while (std::getline(in, line)) {
            const auto comma = line.rfind(',');
            t[line.substr(0, comma)] = std::stod(line.substr(comma + 1));
        }
        return t;
    }();
    const auto it = table.find(name);
    if (it == table.end()) throw std::runtime_error("no derived value " + name);
    return it->second;
}

}  // namespace testing
