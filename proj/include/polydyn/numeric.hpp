#pragma once

// Shared numeric plumbing: complex alias, log-space complex products,
// deterministic RNG draws, hashing, error taxonomy.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace polydyn {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Invalid inputs / violated preconditions (CLI exit code 2).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerical procedure failed hard: undercounts, non-convergence (CLI exit code 3).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Complex value carried as (ln|v|, arg v). Multiplier products at period ~40
// exceed the double range (|lambda| ~ 2^40^... up to 1e300+), so iterated
// derivatives accumulate here and convert back only when safe.
struct LogComplex {
    double log_abs = 0.0;  // -inf encodes exact zero
    double arg = 0.0;      // radians, kept in (-pi, pi]

    static LogComplex one() { return {0.0, 0.0}; }

    static LogComplex from(cplx v) {
        if (v == cplx(0.0, 0.0))
            return {-std::numeric_limits<double>::infinity(), 0.0};
        return {std::log(std::abs(v)), std::arg(v)};
    }

    LogComplex& operator*=(const LogComplex& o) {
        log_abs += o.log_abs;
        arg = std::remainder(arg + o.arg, kTwoPi);
        return *this;
    }
    friend LogComplex operator*(LogComplex a, const LogComplex& b) { return a *= b; }

    bool is_zero() const { return std::isinf(log_abs) && log_abs < 0; }

    double abs() const { return std::exp(log_abs); }

    // May overflow to inf for log_abs > ~709; callers needing safety stay in logs.
    cplx value() const {
        if (is_zero()) return {0.0, 0.0};
        return std::polar(std::exp(log_abs), arg);
    }
};

// FNV-1a over raw bytes; used for polynomial fingerprints in report headers.
inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    return s;
}

// mt19937_64 with hand-rolled draws: identical streams on any libstdc++,
// which the seed-determinism contracts rely on.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        // xorshift* would do; mt19937_64 keeps the period generous for 1e6-sample runs.
        return engine_step();
    }

    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform in {0, .., n-1} via 128-bit multiply-high (bias ~ n / 2^64).
    std::uint32_t uniform_index(std::uint32_t n) {
        return static_cast<std::uint32_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

private:
    std::uint64_t engine_step() {
        if (idx_ == kN) twist();
        std::uint64_t x = mt_[idx_++];
        x ^= (x >> 29) & 0x5555555555555555ull;
        x ^= (x << 17) & 0x71d67fffeda60000ull;
        x ^= (x << 37) & 0xfff7eee000000000ull;
        x ^= x >> 43;
        return x;
    }

    void init() {
        mt_[0] = state_;
        for (std::size_t i = 1; i < kN; ++i)
            mt_[i] = 6364136223846793005ull * (mt_[i - 1] ^ (mt_[i - 1] >> 62)) + i;
        idx_ = kN;
        initialized_ = true;
    }

    void twist() {
        if (!initialized_) init();
        for (std::size_t i = 0; i < kN; ++i) {
            std::uint64_t x = (mt_[i] & 0xffffffff80000000ull) | (mt_[(i + 1) % kN] & 0x7fffffffull);
            std::uint64_t xa = x >> 1;
            if (x & 1) xa ^= 0xb5026f5aa96619e9ull;
            mt_[i] = mt_[(i + 156) % kN] ^ xa;
        }
        idx_ = 0;
    }

    static constexpr std::size_t kN = 312;
    std::uint64_t state_;
    std::uint64_t mt_[kN] = {};
    std::size_t idx_ = kN;
    bool initialized_ = false;
};

}  // namespace polydyn
