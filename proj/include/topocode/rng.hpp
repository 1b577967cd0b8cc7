#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace topocode {

// Seeded mt19937_64 with an unbiased bounded draw. split() derives an
// independent child stream, so callers can hand sub-streams to helpers
// without disturbing their own sequence beyond one draw.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do x = eng_();
        while (x >= limit);
        return x % n;
    }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return (eng_() >> 63) != 0; }

    Rng split() { return Rng(eng_() ^ 0x9E3779B97F4A7C15ULL); }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace topocode
