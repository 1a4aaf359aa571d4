// End-to-end walk through the library on the toy network: design the code,
// encode random messages at the sources, push them through an error-free
// random linear network and read the codeword back at the sink.

#include <iostream>
#include <random>

#include "lrsnc/lrsnc.hpp"

using namespace lrsnc;

int main() {
    NetworkInstance inst;
    inst.h = 4;
    inst.r = {1, 3, 2, 3};
    inst.S = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    inst.t = 2;
    inst.rho = 2;
    inst.ell = 3;

    const DesignResult d = build_distributed_code(inst);
    std::cout << "n = " << d.n << ", k = " << d.k << ", k~ = " << d.k_tilde << ", d = " << d.d << '\n';
    std::cout << "n_J =";
    for (auto x : d.n_J) std::cout << ' ' << x;
    std::cout << "\nblocks = " << d.blocks.to_string() << ", q = " << d.field.q << ", m = " << d.field.m << '\n';
    if (!d.code) {
        std::cout << d.note << '\n';
        return 0;
    }
    const ConstrainedCode& cc = *d.code;
    const FieldTower& F = cc.code.field;
    std::cout << "synthesized after " << cc.attempts << " attempt(s); support mismatches: "
              << verify_support(cc.G, cc.sc).size() << '\n';

    std::mt19937_64 rng(7);
    std::vector<Elem> x(cc.rows());
    for (auto& v : x) v = random_element(F, rng);
    const auto c = multiply(top_ops(F), x, cc.G);

    // Each source only needs the messages it holds: rows of other messages vanish on its columns.
    const auto blocks = source_blocks(F, c, d.n_J);
    const Matrix<Elem> X = lift(F, blocks);
    const auto ch = sample_channel(F, d.n, d.n, X.cols(), 0, 0, 1);
    const auto back = recover_codeword(F, transmit(F, X, ch), d.n);
    std::cout << "noiseless sink recovery: " << (back && *back == c ? "ok" : "failed") << '\n';

    const auto audit = monte_carlo_audit(F, split_blocks(d.n, inst.ell), d.blocks, X.cols(), inst.t, inst.rho, 50, 3);
    std::cout << "channel audit: " << audit.bounds_ok << "/" << audit.trials << " trials within the weight bounds\n";
    return 0;
}
