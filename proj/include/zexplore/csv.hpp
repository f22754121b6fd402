#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zexplore {

// 15 significant digits, "%.15g"; identical inputs give identical bytes.
std::string fmt15(double x);

class CsvWriter {
public:
    CsvWriter(std::ostream& os, const std::vector<std::string>& header);
    CsvWriter& operator<<(double x);
    CsvWriter& operator<<(int x);
    CsvWriter& operator<<(const std::string& x);
    CsvWriter& operator<<(const char* x) { return *this << std::string(x); }
    void end_row();

private:
    void sep();
    std::ostream& os_;
    bool first_ = true;
};

}  // namespace zexplore
