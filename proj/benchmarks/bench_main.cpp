// Microbenchmarks for the hot paths: exact polynomial arithmetic, mod-p
// factorization, field norms, residue-unit enumeration, and HNF reduction.

#include <benchmark/benchmark.h>

#include "fs19/abelian.hpp"
#include "fs19/hopf.hpp"
#include "fs19/ideal.hpp"
#include "fs19/linalg.hpp"
#include "fs19/modp.hpp"
#include "fs19/number_field.hpp"
#include "fs19/poly.hpp"

namespace {

using namespace fs19;

std::string data_path(const std::string& rel) {
    return std::string(FS19_DATA_DIR) + "/" + rel;
}

const NumberField& sextic() {
    static NumberField nf(load_field_certificate(data_path("fields/sextic_splitting.json")));
    return nf;
}

void BM_PolyResultant(benchmark::State& state) {
    Poly f = Poly::from_ints({8383, 236, 1087, -4, 53, 0, 1});
    Poly g = Poly::from_ints({-59, -36, 4, 4});
    for (auto _ : state) benchmark::DoNotOptimize(poly_resultant(f, g));
}
BENCHMARK(BM_PolyResultant);

void BM_FactorModP(benchmark::State& state) {
    Poly f = Poly::from_ints({8383, 236, 1087, -4, 53, 0, 1});
    uint64_t p = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(factor_mod_p(f, p));
}
BENCHMARK(BM_FactorModP)->Arg(2)->Arg(19)->Arg(10007);

void BM_SexticNorm(benchmark::State& state) {
    const NumberField& k = sextic();
    FieldElement a = k.from_int_coords({3, -1, 4, 1, -5, 9});
    for (auto _ : state) benchmark::DoNotOptimize(k.norm(a));
}
BENCHMARK(BM_SexticNorm);

void BM_ResidueUnits(benchmark::State& state) {
    const NumberField& k = sextic();
    FractionalIdeal two = rational_ideal(k, Rational(2));
    for (auto _ : state) {
        ResidueUnitGroup g(k, two);
        benchmark::DoNotOptimize(g.size());
    }
}
BENCHMARK(BM_ResidueUnits);

void BM_HopfCoassociativity(benchmark::State& state) {
    auto fams = load_hopf_catalog(data_path("hopf/catalog.json"));
    ConcreteHopf h = instantiate_hopf(fams.at(2), state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_coassociativity(h));
}
BENCHMARK(BM_HopfCoassociativity)->Arg(1)->Arg(8);

void BM_HnfRowLattice(benchmark::State& state) {
    ZMat rows;
    long v = 7;
    for (int i = 0; i < 12; ++i) {
        ZVec r;
        for (int j = 0; j < 4; ++j) {
            v = (v * 1103515245 + 12345) % 100003;
            r.push_back(Int(v - 50000));
        }
        rows.push_back(r);
    }
    for (auto _ : state) {
        ZMat copy = rows;
        benchmark::DoNotOptimize(hnf_row_lattice(std::move(copy)));
    }
}
BENCHMARK(BM_HnfRowLattice);

}  // namespace

BENCHMARK_MAIN();
