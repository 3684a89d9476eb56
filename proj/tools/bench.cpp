// Benchmark of the OpenMP scan kernels against their serial reference
// implementations: the axiom triple scan, the dBV seven-term scan and the
// per-generator degeneration batch. Reports wall times and verifies that the
// parallel and serial paths produce identical results.

#include "dgla/bv.hpp"
#include "dgla/dgla.hpp"

#include <chrono>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace dgla;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Rat rnd_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

Mat rnd_mat(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rnd_rat(rng);
    return m;
}

DGLieAlgebra random_candidate(std::mt19937& rng, int per_degree) {
    GradedSpace v;
    v.set_dim(0, per_degree);
    v.set_dim(1, per_degree);
    v.set_dim(2, per_degree);
    DGLieAlgebra L;
    L.space = v;
    L.d = GradedMap(v, v, 1);
    BilinearTable t(v);
    auto degrees = v.degrees();
    for (int i : degrees)
        for (int j : degrees) {
            if (v.dim(i + j) == 0) continue;
            for (int a = 0; a < v.dim(i); ++a)
                for (int b = 0; b < v.dim(j); ++b) {
                    Vec val((std::size_t)v.dim(i + j));
                    for (auto& x : val) x = rnd_rat(rng);
                    t.set_value(i, j, a, b, val);
                }
        }
    L.bracket = t;
    return L;
}

Bicomplex random_bicomplex(std::mt19937& rng, int n) {
    Bicomplex b;
    b.k = 1;
    b.space.set_dim(0, n);
    b.space.set_dim(1, n);
    b.d = GradedMap(b.space, b.space, 1);  // d = 0: everything is closed
    b.delta = GradedMap(b.space, b.space, -1);
    Mat blk((std::size_t)n, (std::size_t)n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) blk.at((std::size_t)r, (std::size_t)c) = rnd_rat(rng);
    b.delta.set_block(1, blk);
    return b;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (OpenMP disabled)\n";
#endif

    std::mt19937 rng(2024);

    {
        // a valid DGLA (so the scan runs the full triple space): End of a
        // random five-dimensional complex, 25 basis vectors, 15625 triples
        GradedSpace v;
        v.set_dim(0, 3);
        v.set_dim(1, 2);
        GradedMap dv(v, v, 1);
        dv.set_block(0, rnd_mat(rng, 2, 3));
        DGLieAlgebra L = end_dgla(v, dv).dgla;
        auto t0 = std::chrono::steady_clock::now();
        AxiomReport serial = check_axioms_serial(L, true);
        double ts = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        AxiomReport parallel = check_axioms(L, true);
        double tp = ms_since(t0);
        bool same = serial.pass() && parallel.pass() &&
                    serial.all_violations.size() == parallel.all_violations.size();
        std::cout << "axiom triple scan      serial " << ts << " ms, parallel " << tp
                  << " ms, identical: " << (same ? "yes" : "NO") << "\n";

        // and the witness path on a broken bracket: first violation must agree
        DGLieAlgebra broken = random_candidate(rng, 5);
        AxiomReport bs = check_axioms_serial(broken), bp = check_axioms(broken);
        bool wsame = (!bs.first_violation && !bp.first_violation) ||
                     (bs.first_violation && bp.first_violation &&
                      bs.first_violation->tuple == bp.first_violation->tuple &&
                      bs.first_violation->axiom == bp.first_violation->axiom);
        std::cout << "axiom witness search   identical: " << (wsame ? "yes" : "NO") << "\n";
    }

    {
        std::mt19937 rng2(7);
        Bicomplex b = random_bicomplex(rng2, 40);  // 40 stacked feasibility systems
        auto t0 = std::chrono::steady_clock::now();
        DegenerationResult serial = degeneration_solve_serial(b);
        double ts = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        DegenerationResult parallel = degeneration_solve(b);
        double tp = ms_since(t0);
        bool same = serial.verdict == parallel.verdict &&
                    serial.witnesses.size() == parallel.witnesses.size() &&
                    serial.failures.size() == parallel.failures.size();
        for (std::size_t i = 0; same && i < serial.witnesses.size(); ++i)
            for (std::size_t j = 0; j < serial.witnesses[i].chain.size(); ++j)
                same &= serial.witnesses[i].chain[j].v == parallel.witnesses[i].chain[j].v;
        std::cout << "degeneration batch     serial " << ts << " ms, parallel " << tp
                  << " ms, identical: " << (same ? "yes" : "NO") << "\n";
    }

    return 0;
}
