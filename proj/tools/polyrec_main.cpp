#include "polyrec/fixtures.hpp"
#include "polyrec/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>

using namespace polyrec;

namespace {

// Exit codes are a stable contract: 0 = property holds / construction valid,
// 1 = property fails (witness in the report), 2 = malformed input or
// violated precondition.
constexpr int kFail = 1;
constexpr int kFault = 2;

struct Options {
    std::string command;
    std::string input;
    std::string output;
    bool witnesses = true;
    int max_dim = 6;
};

// Input-side problems (unreadable file, bad JSON, schema violations,
// dimension guard); all map to exit code 2.
struct InputFault : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputFault("cannot open input file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        // e.what() reports the byte position of the failure
        throw InputFault(std::string("JSON parse error: ") + e.what());
    }
}

ComplexResult load_complex(const Options& opt) {
    Json doc = read_json(opt.input);
    ParsedComplex parsed = parse_complex(doc);
    if (parsed.dim > opt.max_dim)
        throw InputFault("input dimension " + std::to_string(parsed.dim) +
                         " exceeds the --max-dim guard (" + std::to_string(opt.max_dim) + ")");
    return build_complex(parsed.dim, parsed.cells);
}

void require_valid(const ComplexResult& built, const std::string& command) {
    if (!built.verdict.valid())
        throw InputFault(command + ": input cells do not form a valid complex");
}

void emit(const Options& opt, const Json& report) {
    std::string text = report.dump(2) + "\n";
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw InputFault("cannot write output file: " + opt.output);
    out << text;
}

void merge(Json& report, Json payload) {
    for (auto& [key, value] : payload.items()) report[key] = std::move(value);
}

Json complex_payload(const ComplexResult& r, bool witnesses) {
    Json payload = complex_json(r.complex);
    payload["verdict"] = verdict_json(r.verdict, witnesses);
    return payload;
}

int run(const Options& opt) {
    if (opt.command == "fixtures") {
        auto written = write_fixtures(opt.output.empty() ? "." : opt.output);
        Json report;
        report["command"] = "fixtures";
        report["written"] = written;
        std::cout << report.dump(2) << "\n";
        std::cerr << "fixtures: wrote " << written.size() << " files\n";
        return 0;
    }

    ComplexResult built = load_complex(opt);
    Json report;
    report["command"] = opt.command;
    int code = 0;

    if (opt.command == "validate") {
        report["verdict"] = verdict_json(built.verdict, opt.witnesses);
        code = built.verdict.valid() ? 0 : kFail;
        std::cerr << "validate: " << report["verdict"]["status"].get<std::string>() << " ("
                  << built.complex.cells().size() << " cells after closure)\n";
    } else if (opt.command == "recession" || opt.command == "cone" || opt.command == "aff") {
        require_valid(built, opt.command);
        ComplexResult r = opt.command == "recession" ? recession_complex(built.complex)
                          : opt.command == "cone"    ? cone_complex(built.complex)
                                                     : aff(built.complex);
        merge(report, complex_payload(r, opt.witnesses));
        code = r.verdict.valid() ? 0 : kFail;
        std::cerr << opt.command << ": " << r.complex.cells().size() << " cells, verdict "
                  << (r.verdict.valid() ? "valid" : "invalid") << "\n";
    } else if (opt.command == "check-mw") {
        require_valid(built, opt.command);
        MWReport r = check_minkowski_weyl(built.complex);
        merge(report, mw_json(r, opt.witnesses));
        code = r.holds ? 0 : kFail;
        std::cerr << "check-mw: " << (r.holds ? "holds" : "fails") << "\n";
    } else if (opt.command == "check-connected") {
        require_valid(built, opt.command);
        Connectivity r = is_connected(support(built.complex));
        merge(report, connectivity_json(r));
        code = r.connected ? 0 : kFail;
        std::cerr << "check-connected: " << r.components.size() << " component(s)\n";
    } else if (opt.command == "check-complete") {
        require_valid(built, opt.command);
        // same target as is_complete, but kept explicit so a witness point
        // can be extracted on failure
        Polyhedron target = Polyhedron::whole_space(built.complex.dim());
        if (built.complex.conic()) {
            QVector last(built.complex.dim(), Rational(0));
            last.back() = 1;
            target = Polyhedron::from_hrep(
                HRep{built.complex.dim(), {Halfspace{last, Rational(0)}}, {}});
        }
        PolyhedralSet sup = support(built.complex);
        bool complete = covers(sup, target);
        report["complete"] = complete;
        if (!complete && opt.witnesses) report["witness"] = vector_json(*uncovered_point(sup, target));
        code = complete ? 0 : kFail;
        std::cerr << "check-complete: " << (complete ? "complete" : "incomplete") << "\n";
    } else if (opt.command == "theorem14") {
        require_valid(built, opt.command);
        Theorem14Report r = theorem14_pipeline(built.complex);
        merge(report, theorem14_json(r, opt.witnesses));
        code = (r.hypotheses_hold() && r.conclusions_hold()) ? 0 : kFail;
        std::cerr << "theorem14: hypotheses " << (r.hypotheses_hold() ? "hold" : "fail")
                  << ", conclusions " << (r.conclusions_hold() ? "hold" : "fail") << "\n";
    } else if (opt.command == "subdivide") {
        require_valid(built, opt.command);
        SubdivisionResult r = extendable_subdivision(built.complex);
        merge(report, complex_json(r.refined));
        report["extension"] = complex_json(r.extension);
        std::cerr << "subdivide: " << r.refined.cells().size() << " cells, extension "
                  << r.extension.cells().size() << " cells\n";
    } else if (opt.command == "roundtrip") {
        require_valid(built, opt.command);
        bool ok = roundtrip_check(built.complex);
        report["holds"] = ok;
        code = ok ? 0 : kFail;
        std::cerr << "roundtrip: " << (ok ? "holds" : "fails") << "\n";
    } else if (opt.command == "toric-datum") {
        require_valid(built, opt.command);
        ToricDatum d = toric_datum(built.complex);
        // pinned exchange format: exactly dim/cones/complete/strongly_convex
        emit(opt, toric_json(d));
        std::cerr << "toric-datum: " << d.cones.size() << " cones\n";
        return 0;
    } else {
        throw std::logic_error("unhandled command: " + opt.command);
    }

    report["input"] = complex_json(built.complex);
    emit(opt, report);
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational polyhedral complexes: recession cones, lifted fans, subdivisions"};
    app.require_subcommand(1);

    Options opt;
    const std::pair<const char*, const char*> commands[] = {
        {"validate", "check the complex axioms (after face closure)"},
        {"recession", "recession complex of every cell, with verdict"},
        {"cone", "lifted cone complex in one dimension higher, with verdict"},
        {"aff", "slice a conic complex at height 1"},
        {"check-mw", "decide the Minkowski-Weyl condition on the support"},
        {"check-connected", "connectivity of the support"},
        {"check-complete", "does the support fill the space"},
        {"theorem14", "full pipeline: hypotheses, both constructions, identities"},
        {"subdivide", "arrangement subdivision extendable to a complete complex"},
        {"roundtrip", "slice/lift round trip on a complete complex"},
        {"toric-datum", "fan datum with primitive rays for a complete SC complex"},
        {"fixtures", "write the bundled example complexes"},
    };
    for (const auto& [name, desc] : commands) {
        CLI::App* sub = app.add_subcommand(name, desc);
        if (std::string(name) != "fixtures")
            sub->add_option("--input", opt.input, "complex JSON file")->required();
        sub->add_option("--output", opt.output,
                        std::string(name) == "fixtures" ? "directory for the fixture files"
                                                        : "report file (default: stdout)");
        sub->add_flag("--witnesses,!--no-witnesses", opt.witnesses,
                      "include witness geometry in reports (default on)");
        sub->add_option("--max-dim", opt.max_dim, "refuse inputs above this dimension")
            ->default_val(6);
        sub->callback([&opt, name = std::string(name)] { opt.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kFault;
    }

    try {
        return run(opt);
    } catch (const InputFault& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFault;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFault;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFault;
    }
}
