#include "polyrec/fanops.hpp"
#include "polyrec/fixtures.hpp"
#include "polyrec/json_io.hpp"

#include <benchmark/benchmark.h>

using namespace polyrec;

namespace {

QVector qv(std::initializer_list<int> xs) {
    QVector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

Halfspace hs(std::initializer_list<int> n, int off) {
    return Halfspace{qv(n), Rational(off)};
}

// d-cube [0,1]^d: 2d facets, 2^d vertices — stresses the generator side of
// the representation conversion.
HRep cube_hrep(int d) {
    HRep h;
    h.dim = d;
    for (int i = 0; i < d; ++i) {
        QVector lo(d, Rational(0)), hi(d, Rational(0));
        lo[i] = 1;
        hi[i] = -1;
        h.inequalities.push_back(Halfspace{lo, Rational(0)});
        h.inequalities.push_back(Halfspace{hi, Rational(-1)});
    }
    return h;
}

// crosspolytope conv(+-e_i): 2^d facets from 2d generators — the opposite
// pressure, stressing the constraint side.
VRep cross_vrep(int d) {
    VRep v;
    v.dim = d;
    for (int i = 0; i < d; ++i) {
        QVector plus(d, Rational(0)), minus(d, Rational(0));
        plus[i] = 1;
        minus[i] = -1;
        v.vertices.push_back(plus);
        v.vertices.push_back(minus);
    }
    return v;
}

PolyhedralComplex fixture_complex(const char* name) {
    for (const auto& f : fixtures())
        if (f.name == name) {
            ParsedComplex parsed = parse_complex(f.content);
            return build_complex(parsed.dim, parsed.cells).complex;
        }
    throw std::runtime_error("missing fixture");
}

void BM_cube_from_hrep(benchmark::State& state) {
    HRep h = cube_hrep(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Polyhedron::from_hrep(h));
}
BENCHMARK(BM_cube_from_hrep)->Arg(3)->Arg(5)->Arg(7);

void BM_crosspolytope_from_vrep(benchmark::State& state) {
    VRep v = cross_vrep(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Polyhedron::from_vrep(v));
}
BENCHMARK(BM_crosspolytope_from_vrep)->Arg(3)->Arg(5)->Arg(7);

void BM_cube_faces(benchmark::State& state) {
    Polyhedron cube = Polyhedron::from_hrep(cube_hrep(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(faces(cube));
}
BENCHMARK(BM_cube_faces)->Arg(3)->Arg(4)->Arg(5);

void BM_arrangement(benchmark::State& state) {
    std::vector<Halfspace> planes = {hs({1, 0, 0}, 0), hs({0, 1, 0}, 0), hs({0, 0, 1}, 0),
                                     hs({1, 1, 1}, 1)};
    planes.resize(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(arrangement_complex(planes, 3));
}
BENCHMARK(BM_arrangement)->Arg(2)->Arg(3)->Arg(4);

void BM_covers_square_world(benchmark::State& state) {
    PolyhedralComplex world = fixture_complex("complete-square-complex.json");
    PolyhedralSet e = support(world);
    Polyhedron plane = Polyhedron::whole_space(2);
    for (auto _ : state) benchmark::DoNotOptimize(covers(e, plane));
}
BENCHMARK(BM_covers_square_world);

void BM_pipeline_counterexample(benchmark::State& state) {
    PolyhedralComplex pi = fixture_complex("example17.json");
    for (auto _ : state) benchmark::DoNotOptimize(theorem14_pipeline(pi));
}
BENCHMARK(BM_pipeline_counterexample);

void BM_pipeline_square_world(benchmark::State& state) {
    PolyhedralComplex pi = fixture_complex("complete-square-complex.json");
    for (auto _ : state) benchmark::DoNotOptimize(theorem14_pipeline(pi));
}
BENCHMARK(BM_pipeline_square_world);

void BM_subdivision_counterexample(benchmark::State& state) {
    PolyhedralComplex pi = fixture_complex("example17.json");
    for (auto _ : state) benchmark::DoNotOptimize(extendable_subdivision(pi));
}
BENCHMARK(BM_subdivision_counterexample);

void BM_toric_datum(benchmark::State& state) {
    PolyhedralComplex pi = fixture_complex("complete-square-complex.json");
    for (auto _ : state) benchmark::DoNotOptimize(toric_datum(pi));
}
BENCHMARK(BM_toric_datum);

} // namespace

BENCHMARK_MAIN();
