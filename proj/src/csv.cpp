#include "zexplore/csv.hpp"

#include <cstdio>

namespace zexplore {

std::string fmt15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x == 0.0 ? 0.0 : x);  // no "-0"
    return buf;
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& header) : os_(os) {
    for (const auto& h : header) *this << h;
    end_row();
}

void CsvWriter::sep() {
    if (!first_) os_ << ',';
    first_ = false;
}

CsvWriter& CsvWriter::operator<<(double x) {
    sep();
    os_ << fmt15(x);
    return *this;
}

CsvWriter& CsvWriter::operator<<(int x) {
    sep();
    os_ << x;
    return *this;
}

CsvWriter& CsvWriter::operator<<(const std::string& x) {
    sep();
    os_ << x;
    return *this;
}

void CsvWriter::end_row() {
    os_ << '\n';
    first_ = true;
}

}  // namespace zexplore
