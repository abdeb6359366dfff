#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddbar/assembly.hpp"
#include "ddbar/bicomplex.hpp"
#include "ddbar/lie_model.hpp"

namespace ddbar {

/// splitmix64; deterministic across platforms, one stream per seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int below(int n) { return n <= 0 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    bool chance(int num, int den) { return below(den) < num; }

  private:
    std::uint64_t state_;
};

struct RandomComplexOptions {
    int max_extent = 2;   // anchors drawn from [0, max_extent]^2
    int max_pieces = 4;
    bool mirror = false;  // mirror-close and attach conjugation
    bool base_change = true;
};

std::vector<Placement> random_assembly(Rng& rng, int max_extent, int max_pieces);

/// Conjugate all matrices by random invertible per-bidegree base changes
/// (products of elementary operations with unit coefficients); preserves
/// every cohomological dimension and the conjugation structure.
Bicomplex random_basis_change(const Bicomplex& x, Rng& rng);

Bicomplex random_bicomplex(Rng& rng, const RandomComplexOptions& opts = {});

/// Random valid structure equations (n in {2,3}): layered random attempts
/// with a d^2 = 0 check, falling back to a family that is always integrable.
StructureEquations random_structure_equations(Rng& rng);

/// Random Hermitian positive-definite Gram matrix A^H A with unit-ish A.
Matrix random_positive_gram(Rng& rng, int dim);

struct InvariantFailure {
    std::string invariant;
    std::string detail;
};

/// Runs every always-true identity on one bicomplex; first failure wins.
std::optional<InvariantFailure> run_invariant_suite(const Bicomplex& x);

}  // namespace ddbar
