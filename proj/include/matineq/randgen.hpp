#pragma once

#include <cstdint>
#include <utility>

#include "matineq/matrix.hpp"

namespace matineq {

/// xoshiro256** seeded through a splitmix64 expansion; pinned constants so
/// streams are bit-identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);

    /// Standard normal via the Marsaglia polar method (sqrt/ln only).
    double gaussian();

    cplx complex_gaussian();

  private:
    std::uint64_t s_[4];
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// SplitMix-style avalanche mixing of (master_seed, trial_index) into a
/// per-trial seed; bit-exact across platforms.
std::uint64_t derive_substream(std::uint64_t master_seed, std::uint64_t trial_index);

enum class GenKind {
    PD,
    PSD,             // fixed rank
    HermitianKind,
    GeneralComplex,
    UnitaryKind,
    DiagonalPD,
    CommutingPDPair,
    EqualPair,
};

struct GenSpec {
    std::size_t dim = 2;
    GenKind kind = GenKind::PD;
    std::size_t rank = 0;        // PSD only
    double cond_cap = 100.0;
    std::uint64_t seed = 0;
};

/// Single-matrix kinds. Pair kinds must go through generate_pair.
Matrix generate(const GenSpec& spec);

/// CommutingPDPair / EqualPair.
std::pair<Matrix, Matrix> generate_pair(const GenSpec& spec);

Matrix random_unitary(std::size_t n, Rng& rng);
Matrix random_general(std::size_t rows, std::size_t cols, Rng& rng);
Matrix random_pd(std::size_t n, double cond_cap, Rng& rng);
Matrix random_psd(std::size_t n, std::size_t rank, double cond_cap, Rng& rng);
Matrix random_hermitian(std::size_t n, Rng& rng);

}  // namespace matineq
