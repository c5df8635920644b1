// Deterministic, seeded generators for every instance class the randomized
// checks need: Hermitian/PSD/unit-interval ensembles, projections, commuting
// and orthogonal-support pairs, block-compatible (v, p) pairs and diagonal
// (lattice-model) samples. Every recipe re-verifies its defining property
// after generation and aborts the trial on failure.
#ifndef AOUS_MODELS_HPP
#define AOUS_MODELS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aous/hermitian.hpp"

namespace aous {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

/// Deterministic RNG: mt19937_64 stream with a hand-rolled Box-Muller normal
/// so that frozen test values survive standard-library changes.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix64(seed ^ 0x9e3779b97f4a7c15ull)) {}

    double uniform01();                 // (0, 1)
    double uniform(double lo, double hi);
    double normal();
    std::size_t below(std::size_t n);   // [0, n)

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;

    std::uint64_t next_u64();
};

enum class RecipeKind {
    RandomHermitian,
    RandomPsd,
    UnitInterval,
    Projection,
    CommutingPair,
    OrthogonalSupportPair,
    BlockCompatible,
    Diagonal
};

struct SampleRecipe {
    RecipeKind kind = RecipeKind::RandomHermitian;
    std::size_t dim = 2;
    std::uint64_t seed = 0;
    std::size_t rank = 1;  // Projection / BlockCompatible only

    // "kind:dim:seed[:rank]"
    static SampleRecipe parse(const std::string& text);
    std::string to_string() const;
};

struct Sample {
    HermitianMatrix first;
    std::optional<HermitianMatrix> second;  // pair recipes
};

struct RecipeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Sample generate(const SampleRecipe& recipe, const ToleranceProfile& tol = {});

// Direct generator entry points (same distributions the recipes use).
HermitianMatrix random_hermitian(std::size_t dim, Rng& rng);
HermitianMatrix random_psd(std::size_t dim, Rng& rng);
HermitianMatrix random_unit_interval(std::size_t dim, Rng& rng, const ToleranceProfile& tol = {});
HermitianMatrix random_projection(std::size_t dim, std::size_t rank, Rng& rng,
                                  const ToleranceProfile& tol = {});
HermitianMatrix random_diagonal(std::size_t dim, Rng& rng);
std::pair<HermitianMatrix, HermitianMatrix> commuting_pair(std::size_t dim, Rng& rng,
                                                           const ToleranceProfile& tol = {});
std::pair<HermitianMatrix, HermitianMatrix> orthogonal_support_pair(std::size_t dim, Rng& rng,
                                                                    const ToleranceProfile& tol = {});
// (v, p): p a rank-`rank` projection, v = p h p + p' h' p' so that v lies in
// the p-compatible subspace.
std::pair<HermitianMatrix, HermitianMatrix> block_compatible(std::size_t dim, std::size_t rank,
                                                             Rng& rng,
                                                             const ToleranceProfile& tol = {});

// Random contraction with spectrum in [floor, 1].
HermitianMatrix random_contraction(std::size_t dim, Rng& rng, double floor = 0.05,
                                   const ToleranceProfile& tol = {});
// Nonzero 0 < c <= u for PSD u != 0, via u^(1/2) w u^(1/2).
HermitianMatrix sub_element(const HermitianMatrix& u, Rng& rng, const ToleranceProfile& tol = {});

HermitianMatrix direct_sum(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix diagonal_embed(const std::vector<double>& values);

}  // namespace aous

#endif
