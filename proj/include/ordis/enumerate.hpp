#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

#include "ordis/errors.hpp"

namespace ordis {

/// Enumeration caps. The three-valued cap bounds 3^|sigma| candidate spaces
/// (and the 2^|sigma| Brewka space); the four-valued cap bounds 4^|sigma|.
struct SearchLimits {
    std::uint64_t candidate_cap = 0;  // 0 picks the per-function default
    unsigned threads = 1;
};

constexpr std::uint64_t kDefaultThreeValuedCap = 43046721;  // 3^16
constexpr std::uint64_t kDefaultFourValuedCap = 16777216;   // 4^12

namespace detail {

constexpr std::uint64_t kNoOverflowLimit = UINT64_C(1) << 62;

/// base^exponent, saturating well below uint64 overflow.
inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exponent) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (result > kNoOverflowLimit / base) return kNoOverflowLimit;
        result *= base;
    }
    return result;
}

inline std::uint64_t candidate_count(std::uint64_t base, std::size_t slots, std::uint64_t cap) {
    std::uint64_t count = saturating_pow(base, slots);
    // A saturated count is uncountable regardless of the configured cap.
    if (count >= kNoOverflowLimit || count > cap) throw BudgetExceededError(count, cap);
    return count;
}

/// Writes the base-`base` digits of `code` into `digits`, slot 0 most
/// significant. Candidate `code` thus orders interpretations lexicographically
/// over the sigma order with higher truth values first when iterated from
/// count-1 down to 0.
inline void decode_digits(std::uint64_t code, std::uint64_t base, std::vector<int>& digits) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        digits[i] = static_cast<int>(code % base);
        code /= base;
    }
}

/// Collects, in descending candidate order, every code in [0, count) that
/// satisfies `pred`. With threads > 1 the range splits into contiguous chunks
/// whose results concatenate in range order, so the output is identical to
/// the sequential one.
template <class Pred>
std::vector<std::uint64_t> filter_codes_desc(std::uint64_t count, unsigned threads, Pred pred) {
    std::vector<std::uint64_t> hits;
    if (count == 0) return hits;
    if (threads <= 1 || count < 1024) {
        for (std::uint64_t code = count; code-- > 0;)
            if (pred(code)) hits.push_back(code);
        return hits;
    }
    std::vector<std::vector<std::uint64_t>> partial(threads);
    std::vector<std::thread> workers;
    std::uint64_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        // Chunk 0 owns the highest codes so concatenation keeps descending order.
        std::uint64_t hi = count - std::min<std::uint64_t>(count, t * chunk);
        std::uint64_t lo = count - std::min<std::uint64_t>(count, (t + 1ull) * chunk);
        workers.emplace_back([&partial, t, lo, hi, &pred] {
            for (std::uint64_t code = hi; code-- > lo;)
                if (pred(code)) partial[t].push_back(code);
        });
    }
    for (std::thread& w : workers) w.join();
    for (unsigned t = 1; t < threads; ++t)
        partial[0].insert(partial[0].end(), partial[t].begin(), partial[t].end());
    return std::move(partial[0]);
}

}  // namespace detail

}  // namespace ordis
