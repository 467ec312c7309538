#pragma once
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "skewcliff/scalar.hpp"

namespace skewcliff {

struct ProbeOptions {
    std::vector<std::int64_t> primes{10007, 10009, 10037};
    std::uint64_t seed = 1;
    int enumeration_budget = 4000; // canonical small vectors per prime
    int random_trials = 400;       // random projective samples per prime
    int max_chain_length = 24;     // point sequence search depth
};

// Canonical projective representatives over Z ordered by height: all integer
// vectors with gcd 1, first nonzero coordinate positive and max |coord| = h,
// for h = 1, 2, ... in descending lexicographic order within each height, so
// early coordinates carry weight first ((1,0,..,0) precedes (0,..,0,1)).
class HeightEnumerator {
public:
    explicit HeightEnumerator(int dim) : dim_(dim) {}

    std::optional<std::vector<std::int64_t>> next(int budget) {
        while (produced_ < budget) {
            if (pending_.empty()) {
                ++height_;
                if (height_ > 1'000'000) return std::nullopt;
                fill(height_);
                if (pending_.empty()) continue;
            }
            auto v = pending_.back();
            pending_.pop_back();
            ++produced_;
            return v;
        }
        return std::nullopt;
    }

private:
    int dim_;
    int height_ = 0;
    int produced_ = 0;
    std::vector<std::vector<std::int64_t>> pending_; // reversed lexicographic

    void fill(int h) {
        std::vector<std::int64_t> cur(dim_, -h);
        std::vector<std::vector<std::int64_t>> out;
        while (true) {
            bool at_height = false;
            for (auto x : cur) at_height = at_height || (x == h || x == -h);
            if (at_height) {
                std::int64_t g = 0;
                for (auto x : cur) g = std::gcd(g, x < 0 ? -x : x);
                std::int64_t first = 0;
                for (auto x : cur)
                    if (x != 0) { first = x; break; }
                if (g == 1 && first > 0) out.push_back(cur);
            }
            int i = dim_ - 1;
            while (i >= 0 && cur[i] == h) cur[i--] = -h;
            if (i < 0) break;
            ++cur[i];
        }
        pending_.assign(out.begin(), out.end()); // popped from the back: descending
    }
};

// first-nonzero-scaled-to-one canonical form over F_p
inline bool normalize_projective(std::vector<PrimeScalar>& v) {
    int lead = -1;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) { lead = static_cast<int>(i); break; }
    if (lead < 0) return false;
    PrimeScalar inv = v[lead].inv();
    for (auto& x : v) x = x * inv;
    return true;
}

// exact projective lift via rational reconstruction of every coordinate
inline std::optional<std::vector<Scalar>> lift_point(const std::vector<PrimeScalar>& v) {
    std::vector<Scalar> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        auto r = rational_reconstruct(Int(x.v), Int(x.p));
        if (!r) return std::nullopt;
        out.push_back(Scalar(*r));
    }
    return out;
}

inline std::vector<PrimeScalar> random_point(int dim, std::int64_t p, std::mt19937_64& rng) {
    std::vector<PrimeScalar> v(dim);
    bool nonzero = false;
    for (auto& x : v) {
        x = PrimeScalar{static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p)), p};
        nonzero = nonzero || !x.is_zero();
    }
    if (!nonzero) v[0] = PrimeScalar{1, p};
    return v;
}

} // namespace skewcliff
