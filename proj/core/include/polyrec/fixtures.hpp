#pragma once

#include "polyrec/json_io.hpp"

#include <string>
#include <vector>

namespace polyrec {

// Bundled example complexes, shipped as JSON documents in the complex file
// format.  The first three are the counterexample geometries; the square
// complex is the standard complete-complex workhorse (a square, four
// unbounded sleeves, four corner cones).
struct Fixture {
    std::string name; // file name, e.g. "example17.json"
    Json content;
};

const std::vector<Fixture>& fixtures();

// Writes every fixture into `dir` (created if missing); returns the paths.
std::vector<std::string> write_fixtures(const std::string& dir);

} // namespace polyrec
