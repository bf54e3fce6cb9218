#include "polyrec/fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <stdexcept>

namespace polyrec {

namespace {

Json constraint(std::initializer_list<int> normal, int offset) {
    Json c;
    Json n = Json::array();
    for (int x : normal) n.push_back(std::to_string(x));
    c["normal"] = std::move(n);
    c["offset"] = std::to_string(offset);
    return c;
}

Json cell(Json inequalities, Json equalities) {
    Json c;
    c["inequalities"] = std::move(inequalities);
    c["equalities"] = std::move(equalities);
    return c;
}

Json example17() {
    Json j;
    j["dim"] = 3;
    j["cells"] = Json::array({
        // Lambda_1 = {(x1,x2,0) : x1 >= 0, x2 >= 0}
        cell(Json::array({constraint({1, 0, 0}, 0), constraint({0, 1, 0}, 0)}),
             Json::array({constraint({0, 0, 1}, 0)})),
        // Lambda_2 = {(x1,x2,1) : x1+x2 >= 0, x1-x2 >= 0}
        cell(Json::array({constraint({1, 1, 0}, 0), constraint({1, -1, 0}, 0)}),
             Json::array({constraint({0, 0, 1}, 1)})),
    });
    return j;
}

Json example1_case1() {
    Json j;
    j["dim"] = 3;
    j["cells"] = Json::array({
        // {(x1,x2,0) : x1, x2 >= 0}
        cell(Json::array({constraint({1, 0, 0}, 0), constraint({0, 1, 0}, 0)}),
             Json::array({constraint({0, 0, 1}, 0)})),
        // {(x1,x2,1) : x1 >= x2 >= 0}
        cell(Json::array({constraint({1, -1, 0}, 0), constraint({0, 1, 0}, 0)}),
             Json::array({constraint({0, 0, 1}, 1)})),
        // {(x1,x2,1) : x2 >= x1 >= 0}
        cell(Json::array({constraint({-1, 1, 0}, 0), constraint({1, 0, 0}, 0)}),
             Json::array({constraint({0, 0, 1}, 1)})),
    });
    return j;
}

Json example1_case2() {
    Json j;
    j["dim"] = 3;
    j["cells"] = Json::array({
        // {(x1,x2,0) : x1 >= x2 >= 0}
        cell(Json::array({constraint({1, -1, 0}, 0), constraint({0, 1, 0}, 0)}),
             Json::array({constraint({0, 0, 1}, 0)})),
        // {(x1,x2,1) : x2 >= x1 >= 0}
        cell(Json::array({constraint({-1, 1, 0}, 0), constraint({1, 0, 0}, 0)}),
             Json::array({constraint({0, 0, 1}, 1)})),
    });
    return j;
}

Json complete_square() {
    auto box = [&](int lo1, int hi1, int lo2, int hi2) {
        // bounds given as flags: -1 = unbounded on that side
        Json ineqs = Json::array();
        if (lo1 >= 0) ineqs.push_back(constraint({1, 0}, lo1));
        if (hi1 >= 0) ineqs.push_back(constraint({-1, 0}, -hi1));
        if (lo2 >= 0) ineqs.push_back(constraint({0, 1}, lo2));
        if (hi2 >= 0) ineqs.push_back(constraint({0, -1}, -hi2));
        return cell(std::move(ineqs), Json::array());
    };
    Json j;
    j["dim"] = 2;
    j["cells"] = Json::array({
        box(0, 1, 0, 1),   // the unit square
        box(1, -1, 0, 1),  // right sleeve
        box(-1, 0, 0, 1),  // left sleeve
        box(0, 1, 1, -1),  // top sleeve
        box(0, 1, -1, 0),  // bottom sleeve
        box(1, -1, 1, -1), // corner quadrants
        box(-1, 0, 1, -1),
        box(1, -1, -1, 0),
        box(-1, 0, -1, 0),
    });
    return j;
}

} // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = {
        {"example17.json", example17()},
        {"example1-case1.json", example1_case1()},
        {"example1-case2.json", example1_case2()},
        {"complete-square-complex.json", complete_square()},
    };
    return all;
}

std::vector<std::string> write_fixtures(const std::string& dir) {
    std::filesystem::path base(dir.empty() ? "." : dir);
    std::filesystem::create_directories(base);
    std::vector<std::string> written;
    for (const auto& f : fixtures()) {
        std::filesystem::path p = base / f.name;
        std::ofstream out(p);
        if (!out)
            throw std::runtime_error("cannot write fixture file: " + p.string());
        out << f.content.dump(2) << '\n';
        written.push_back(p.string());
    }
    return written;
}

} // namespace polyrec
