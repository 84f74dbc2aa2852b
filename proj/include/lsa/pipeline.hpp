#pragma once

#include "lsa/io.hpp"
#include "lsa/tiling.hpp"

namespace lsa {

// Parameter choices for the weak-stability demonstration: window size of the
// built approximation and modulus of the quotient representation, per kind.
struct DemoParams {
    long long window_param = 0;
    long long m = 0;
    int d = 2;
};

inline DemoParams demo_params(const AlgebraSpec& alg, const Rat& epsilon) {
    Rat four_over_eps = Rat(4) / epsilon;
    four_over_eps.canonicalize();
    mpz_class dz = (four_over_eps.get_num() + four_over_eps.get_den() - 1) /
                   four_over_eps.get_den();
    DemoParams p;
    p.d = int(std::max(2l, dz.get_si()));
    switch (alg.kind) {
        case AlgebraSpec::Kind::Polynomial:
            if (alg.rank != 1)
                throw unsupported_operation("demo supports polynomial(1), laurent, heisenberg");
            p.window_param = 128;
            p.m = 16;
            break;
        case AlgebraSpec::Kind::Laurent:
            if (alg.rank == 1) {
                p.window_param = 64;  // dim 129
                p.m = 16;
            } else if (alg.rank == 2) {
                p.window_param = 16;  // dim 1089
                p.m = 8;
            } else if (alg.rank == 3) {
                p.window_param = 4;  // dim 729
                p.m = 4;
            } else {
                throw unsupported_operation("demo supports laurent rank <= 3");
            }
            break;
        case AlgebraSpec::Kind::Heisenberg:
            p.window_param = 2;  // dim 225
            p.m = 3;
            p.d = std::min(p.d, 3);  // keeps the degree-cap ball tractable
            break;
        case AlgebraSpec::Kind::Custom:
            throw unsupported_operation("demo supports polynomial(1), laurent, heisenberg");
    }
    return p;
}

// Builds a window approximation, amplifies a quotient representation to the
// same dimension, and conjugates the two. success means the conjugated true
// representation is within epsilon of the built map on every generator.
template <class F>
json demo_weak_stability(const AlgebraSpec& alg, const F& field, const Rat& epsilon,
                         uint64_t seed) {
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    DemoParams p = demo_params(alg, epsilon);
    FolnerWindow W = candidate_window(alg, p.window_param);
    ApproxMap<F> phi = build_d_approximation(alg, W, p.d, field);
    size_t n = phi.dim();

    ApproxMap<F> rep = build_quotient_representation(alg, p.m, field, phi.degree_cap());
    ApproxMap<F> rho = std::move(amplify(rep, {n}).front());
    ConjugacyResult<F> conj = build_conjugator(phi, rho, epsilon, seed);

    const auto* fp = std::get_if<typename ApproxMap<F>::FolnerProv>(&phi.provenance());
    json j;
    j["command"] = "demo weak-stability";
    j["algebra"] = algebra_to_json(alg);
    j["field"] = field.spec().str();
    j["epsilon"] = rat_str(epsilon);
    j["seed"] = seed;
    j["n"] = n;
    j["builder"] = json{{"window_param", p.window_param},
                        {"d", p.d},
                        {"invariance", invariance_to_json(fp->invariance)}};
    j["representation"] = json{{"m", p.m},
                               {"copies", n / rep.dim()},
                               {"pad", n % rep.dim()}};
    j["conjugacy"] = conjugacy_to_json(conj, /*include_matrix=*/false);
    j["success"] = conj.holds;
    return j;
}

}  // namespace lsa
