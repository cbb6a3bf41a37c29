#include "nefvol/conevol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <thread>

namespace nefvol {

double v_rho(int rho) {
    if (rho < 1) throw DomainError("V_rho needs rho >= 1, got " + std::to_string(rho));
    if (rho > 17) throw DomainError("V_rho is tabulated for rho <= 17, got " + std::to_string(rho));
    // κ_n = π^k / k!                 for n = 2k
    //     = 2^{k+1} π^k / (2k+1)!!   for n = 2k+1
    const int n = rho - 1;
    const int k = n / 2;
    std::uint64_t num = 1;
    std::uint64_t den = static_cast<std::uint64_t>(rho);
    if (n % 2 == 0) {
        for (int i = 2; i <= k; ++i) den *= static_cast<std::uint64_t>(i);
    } else {
        num = std::uint64_t{1} << (k + 1);
        for (int i = 3; i <= n; i += 2) den *= static_cast<std::uint64_t>(i);
    }
    const std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    double pi_pow = 1.0;
    for (int i = 0; i < k; ++i) pi_pow *= std::numbers::pi;
    return pi_pow * static_cast<double>(num) / static_cast<double>(den);
}

TruncatedCone::TruncatedCone(IntSymMatrix gram, IntVector h) : gram_(std::move(gram)), h_(std::move(h)) {
    if (h_.size() != gram_.dim()) throw DimensionError("ample vector length does not match Gram dimension");
    if (!is_hyperbolic(gram_)) throw SignatureError("cone form does not have signature (1, rho-1)");
    h_squared_ = gram_.square(h_);
    if (sgn(h_squared_) <= 0) throw NotPositiveError("h^2 must be positive");
}

namespace {

struct DoubleForm {
    std::size_t n;
    std::vector<double> s;   // row-major Gram
    std::vector<double> hs;  // hᵀS

    explicit DoubleForm(const TruncatedCone& cone) : n(cone.dim()), s(n * n), hs(n, 0.0) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s[i * n + j] = cone.gram()(i, j).get_d();
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) hs[j] += cone.h()[i].get_d() * s[i * n + j];
    }

    bool contains(const double* x) const {
        double level = 0.0;
        for (std::size_t j = 0; j < n; ++j) level += hs[j] * x[j];
        if (level < 0.0 || level > 1.0) return false;
        double q = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < n; ++j) row += s[i * n + j] * x[j];
            q += x[i] * row;
        }
        return q >= 0.0;
    }
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
    return splitmix64(splitmix64(seed) ^ (chunk * 0xD1B54A32D192ED03ull));
}

// Uniform in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementation.
double unit_double(std::mt19937_64& eng) { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

}  // namespace

bool contains(const TruncatedCone& cone, std::span<const double> x) {
    if (x.size() != cone.dim()) throw DimensionError("point dimension does not match cone");
    return DoubleForm(cone).contains(x.data());
}

bool contains(const TruncatedCone& cone, const std::vector<Rational>& x) {
    const std::size_t n = cone.dim();
    if (x.size() != n) throw DimensionError("point dimension does not match cone");
    Rational level = 0;
    Rational q = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            level += cone.h()[i] * cone.gram()(i, j) * x[j];
            q += x[i] * cone.gram()(i, j) * x[j];
        }
    return sgn(q) >= 0 && sgn(level) >= 0 && level <= 1;
}

double positive_cone_volume(const IntSymMatrix& gram, const IntVector& h) {
    const TruncatedCone cone(gram, h);
    const Integer disc = det_exact(gram);
    const int rho = static_cast<int>(gram.dim());
    // One square root of the exact integer |Δ|·(h²)^ρ keeps the rounding to a few ulps.
    Integer radicand;
    mpz_pow_ui(radicand.get_mpz_t(), cone.h_squared().get_mpz_t(), static_cast<unsigned long>(rho));
    radicand *= abs(disc);
    return v_rho(rho) / std::sqrt(radicand.get_d());
}

McEstimate mc_volume(const TruncatedCone& cone, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
    if (samples == 0) throw DomainError("mc_volume needs at least one sample");
    const LorentzFrame frame = lorentz_frame(cone.gram(), cone.h());
    const std::size_t n = cone.dim();
    const DoubleForm form(cone);
    const double radius = 1.0 / std::sqrt(cone.h_squared().get_d());
    const Eigen::MatrixXd& t = frame.transform;

    const std::uint64_t chunks = (samples + kMcChunkSize - 1) / kMcChunkSize;
    std::vector<std::uint64_t> hits(chunks, 0);

    auto run_chunk = [&](std::uint64_t c) {
        std::mt19937_64 eng(chunk_seed(seed, c));
        const std::uint64_t begin = c * kMcChunkSize;
        const std::uint64_t count = std::min(kMcChunkSize, samples - begin);
        std::vector<double> y(n), x(n);
        std::uint64_t local = 0;
        for (std::uint64_t s = 0; s < count; ++s) {
            y[0] = radius * unit_double(eng);
            for (std::size_t k = 1; k < n; ++k) y[k] = radius * (2.0 * unit_double(eng) - 1.0);
            for (std::size_t i = 0; i < n; ++i) {
                double acc = 0.0;
                for (std::size_t k = 0; k < n; ++k) acc += t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) * y[k];
                x[i] = acc;
            }
            if (form.contains(x.data())) ++local;
        }
        hits[c] = local;
    };

    unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
    if (workers <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::uint64_t c = w; c < chunks; c += workers) run_chunk(c);
            });
    }

    McEstimate out;
    out.samples = samples;
    out.seed = seed;
    out.hits = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
    const double box = radius * std::pow(2.0 * radius, static_cast<double>(n - 1));
    const double scale = box * std::abs(t.determinant());
    const double p = static_cast<double>(out.hits) / static_cast<double>(samples);
    out.estimate = p * scale;
    out.std_error = scale * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    return out;
}

bool within_four_stderr(const McEstimate& mc, double exact) {
    return std::abs(mc.estimate - exact) <= 4.0 * mc.std_error + 1e-12 * std::abs(exact);
}

VolumeBounds volume_bounds(const IntSymMatrix& gram, const IntVector& h, SurfaceMode mode) {
    const double v = positive_cone_volume(gram, h);
    return VolumeBounds{v, v, v, mode == SurfaceMode::Abelian};
}

}  // namespace nefvol
