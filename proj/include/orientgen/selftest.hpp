#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orientgen::selftest {

struct Result {
    int id = 0;
    std::string name;
    bool ok = false;
    std::string detail;
    double seconds = 0;
};

// The ten acceptance criteria. quick trims corpus sizes.
std::vector<Result> run_all(bool quick);
// One `PASS`/`FAIL` line per criterion; returns true iff all passed.
bool report(const std::vector<Result>& results, std::ostream& out);

}  // namespace orientgen::selftest
