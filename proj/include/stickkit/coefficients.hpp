#pragma once

/**
 * @file coefficients.hpp
 * @brief Exact binomial, trinomial and multinomial coefficients.
 *
 * All point queries are total functions: indices outside the valid range
 * evaluate to 0 (zero-extension), so downstream summations never need to
 * guard their bounds. Row generation rejects negative row indices.
 *
 * Trinomial rows are built by the three-term recurrence
 *   T(n,k) = T(n-1,k-1) + T(n-1,k) + T(n-1,k+1)
 * storing only positions 0..n; negative positions are answered through the
 * symmetry T(n,k) = T(n,-k).
 */

#include "stickkit/integer.hpp"

#include <cstddef>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stickkit {

enum class triangle_kind { pascal, trinomial };

// One fully materialized triangle row.
// pascal: entries hold positions 0..n (n+1 of them).
// trinomial: entries hold positions -n..n (2n+1 of them), palindromic.
struct triangle_row {
    triangle_kind kind;
    long long n;
    std::vector<Integer> entries;
};

namespace detail {

// Append-only row store, shared by batch queries and identity sweeps.
// Concurrent readers and read-while-insert are safe: rows are published
// under the unique lock and never touched again, and std::deque growth
// leaves references to existing elements valid.
class row_store {
public:
    explicit row_store(triangle_kind kind) : kind_(kind) {}

    // Row n of the triangle; trinomial rows hold only positions 0..n.
    const std::vector<Integer>& row(std::size_t n) {
        {
            std::shared_lock lock(mutex_);
            if (n < rows_.size()) return rows_[n];
        }
        std::unique_lock lock(mutex_);
        while (rows_.size() <= n) append_next_row();
        return rows_[n];
    }

private:
    void append_next_row() {
        const std::size_t n = rows_.size();
        if (n == 0) {
            rows_.push_back({Integer(1)});
            return;
        }
        const std::vector<Integer>& prev = rows_[n - 1];
        std::vector<Integer> next(n + 1);
        if (kind_ == triangle_kind::pascal) {
            next[0] = 1;
            next[n] = 1;
            for (std::size_t k = 1; k < n; ++k)
                next[k] = prev[k - 1] + prev[k];
        } else {
            // prev holds positions 0..n-1; read negative positions mirrored.
            auto at = [&](long long k) -> Integer {
                if (k < 0) k = -k;
                return k < static_cast<long long>(prev.size()) ? prev[static_cast<std::size_t>(k)]
                                                               : Integer(0);
            };
            for (std::size_t k = 0; k <= n; ++k) {
                const long long kk = static_cast<long long>(k);
                next[k] = at(kk - 1) + at(kk) + at(kk + 1);
            }
        }
        rows_.push_back(std::move(next));
    }

    triangle_kind kind_;
    std::shared_mutex mutex_;
    std::deque<std::vector<Integer>> rows_;
};

inline row_store& pascal_store() {
    static row_store store(triangle_kind::pascal);
    return store;
}

inline row_store& trinomial_store() {
    static row_store store(triangle_kind::trinomial);
    return store;
}

} // namespace detail

/// C(n,k), exactly; 0 whenever k < 0, k > n or n < 0.
///
/// Point queries use the multiplicative formula (exact division at every
/// step) so they never materialize earlier rows.
inline Integer binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

/// Trinomial coefficient T(n,k): 0 whenever n < 0 or |k| > n.
inline Integer trinomial(long long n, long long k) {
    if (k < 0) k = -k;
    if (n < 0 || k > n) return 0;
    return detail::trinomial_store().row(static_cast<std::size_t>(n))[static_cast<std::size_t>(k)];
}

/// Row n of the Pascal triangle, built by the additive recurrence.
inline triangle_row pascal_row(long long n) {
    if (n < 0) throw std::invalid_argument("pascal_row: negative row index");
    return {triangle_kind::pascal, n, detail::pascal_store().row(static_cast<std::size_t>(n))};
}

/// Row n of the trinomial triangle, all 2n+1 positions.
inline triangle_row trinomial_row(long long n) {
    if (n < 0) throw std::invalid_argument("trinomial_row: negative row index");
    const std::vector<Integer>& half = detail::trinomial_store().row(static_cast<std::size_t>(n));
    std::vector<Integer> full(static_cast<std::size_t>(2 * n + 1));
    for (long long k = -n; k <= n; ++k)
        full[static_cast<std::size_t>(n + k)] = half[static_cast<std::size_t>(k < 0 ? -k : k)];
    return {triangle_kind::trinomial, n, std::move(full)};
}

/// n! / (p0! p1! ...) when every part is nonnegative and the parts sum to n;
/// 0 otherwise. Needed in the zero-extended form because pyramid sums range
/// over part triples where one entry can go negative.
///
/// Computed as a product of binomials over prefix sums, never as a quotient
/// of full factorials.
inline Integer multinomial(long long n, std::span<const long long> parts) {
    long long sum = 0;
    for (long long p : parts) {
        if (p < 0) return 0;
        sum += p;
    }
    if (sum != n) return 0;
    Integer result = 1;
    long long prefix = 0;
    for (long long p : parts) {
        prefix += p;
        result *= binomial(prefix, p);
    }
    return result;
}

inline Integer multinomial(long long n, std::initializer_list<long long> parts) {
    return multinomial(n, std::span<const long long>(parts.begin(), parts.size()));
}

} // namespace stickkit
