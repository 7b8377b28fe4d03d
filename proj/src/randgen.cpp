#include "matineq/randgen.hpp"

#include <cmath>

namespace matineq {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& s : s_) s = splitmix64(sm);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    have_spare_ = true;
    return u * m;
}

cplx Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return cplx{re, im} * std::sqrt(0.5);
}

std::uint64_t derive_substream(std::uint64_t master_seed, std::uint64_t trial_index) {
    std::uint64_t state = master_seed ^ (0xA3EC647659359ACDULL * (trial_index + 1));
    std::uint64_t out = splitmix64(state);
    out ^= splitmix64(state);
    return out;
}

Matrix random_general(std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.complex_gaussian();
    return m;
}

Matrix random_unitary(std::size_t n, Rng& rng) {
    // Modified Gram-Schmidt on a complex Gaussian matrix.
    Matrix g = random_general(n, n, rng);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            cplx dot{};
            for (std::size_t i = 0; i < n; ++i) dot += std::conj(g(i, k)) * g(i, j);
            for (std::size_t i = 0; i < n; ++i) g(i, j) -= dot * g(i, k);
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < n; ++i) nrm += std::norm(g(i, j));
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < n; ++i) g(i, j) /= nrm;
    }
    return g;
}

namespace {

std::vector<double> log_uniform_eigenvalues(std::size_t n, double cond_cap, Rng& rng) {
    // Log-uniform in [1/sqrt(c), sqrt(c)].
    const double half_log = 0.5 * std::log(cond_cap);
    std::vector<double> lam(n);
    for (auto& l : lam) l = std::exp((2.0 * rng.uniform() - 1.0) * half_log);
    return lam;
}

Matrix conjugate_diag(const std::vector<double>& lam, const Matrix& u) {
    const std::size_t n = lam.size();
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = lam[i];
    return u * d * u.adjoint();
}

}  // namespace

Matrix random_pd(std::size_t n, double cond_cap, Rng& rng) {
    auto lam = log_uniform_eigenvalues(n, cond_cap, rng);
    if (n == 1) return Matrix::diag({lam[0]});  // a 1x1 conjugation is the identity map
    return conjugate_diag(lam, random_unitary(n, rng));
}

Matrix random_psd(std::size_t n, std::size_t rank, double cond_cap, Rng& rng) {
    if (rank > n) throw InvalidSpec("psd rank exceeds dimension");
    auto lam = log_uniform_eigenvalues(n, cond_cap, rng);
    for (std::size_t i = rank; i < n; ++i) lam[i] = 0.0;
    return conjugate_diag(lam, random_unitary(n, rng));
}

Matrix random_hermitian(std::size_t n, Rng& rng) {
    Matrix g = random_general(n, n, rng);
    return (g + g.adjoint()) * cplx{0.5, 0.0};
}

Matrix generate(const GenSpec& spec) {
    if (spec.dim < 1 || spec.dim > 16) throw InvalidSpec("dimension outside [1,16]");
    if (spec.cond_cap < 1.0) throw InvalidSpec("cond_cap must be >= 1");
    Rng rng(spec.seed);
    switch (spec.kind) {
        case GenKind::PD: return random_pd(spec.dim, spec.cond_cap, rng);
        case GenKind::PSD: return random_psd(spec.dim, spec.rank, spec.cond_cap, rng);
        case GenKind::HermitianKind: return random_hermitian(spec.dim, rng);
        case GenKind::GeneralComplex: return random_general(spec.dim, spec.dim, rng);
        case GenKind::UnitaryKind: return random_unitary(spec.dim, rng);
        case GenKind::DiagonalPD: {
            return Matrix::diag(log_uniform_eigenvalues(spec.dim, spec.cond_cap, rng));
        }
        default: throw InvalidSpec("pair kind passed to generate()");
    }
}

std::pair<Matrix, Matrix> generate_pair(const GenSpec& spec) {
    if (spec.dim < 1 || spec.dim > 16) throw InvalidSpec("dimension outside [1,16]");
    if (spec.cond_cap < 1.0) throw InvalidSpec("cond_cap must be >= 1");
    Rng rng(spec.seed);
    switch (spec.kind) {
        case GenKind::CommutingPDPair: {
            auto la = log_uniform_eigenvalues(spec.dim, spec.cond_cap, rng);
            auto lb = log_uniform_eigenvalues(spec.dim, spec.cond_cap, rng);
            if (spec.dim == 1) return {Matrix::diag({la[0]}), Matrix::diag({lb[0]})};
            const Matrix u = random_unitary(spec.dim, rng);
            return {conjugate_diag(la, u), conjugate_diag(lb, u)};
        }
        case GenKind::EqualPair: {
            Matrix a = random_pd(spec.dim, spec.cond_cap, rng);
            return {a, a};
        }
        default: throw InvalidSpec("single kind passed to generate_pair()");
    }
}

}  // namespace matineq
