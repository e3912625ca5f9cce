#pragma once

/**
 * @file identities.hpp
 * @brief Both sides of every hockey-stick identity, plus the sweep harness.
 *
 * Each evaluator returns the individual signed summands together with their
 * total, so callers can render figure-style breakdowns and diagnose a failed
 * case term by term.
 *
 * The identities covered:
 *   little_stick      sum C(n+i,i), i=0..k      = C(n+k+1,k)
 *   big_stick_puck    C(n,0)+C(n+2,1)+C(n+4,2)+C(n+6,3) = C(n+7,3)-C(n+6,1)
 *   pascal_hockey     sum C(n+2i,i), i=0..k     = sum (-1)^j C(n+2k-j+1,k-2j)
 *   trinomial_hockey  sum T(n+i,n), i=0..k      = sum (-1)^s T(n+k+1,n+2s+1)
 *   pyramid           the trinomial identity rewritten as sums of
 *                     multinomials over 2r+s = const slices
 *
 * Evaluators are templated on the coefficient source so the whole suite can
 * be re-run against an alternative route (tests drive it with coefficients
 * extracted from polynomial expansions).
 */

#include "stickkit/coefficients.hpp"
#include "stickkit/integer.hpp"

#include <array>
#include <chrono>
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace stickkit {

enum class identity_family { little_stick, big_stick_puck, pascal_hockey, trinomial_hockey, pyramid };

inline constexpr std::array<identity_family, 5> all_families = {
    identity_family::little_stick, identity_family::big_stick_puck,
    identity_family::pascal_hockey, identity_family::trinomial_hockey,
    identity_family::pyramid};

constexpr std::string_view family_name(identity_family family) {
    switch (family) {
        case identity_family::little_stick: return "little-stick";
        case identity_family::big_stick_puck: return "big-stick-puck";
        case identity_family::pascal_hockey: return "pascal-hockey";
        case identity_family::trinomial_hockey: return "trinomial-hockey";
        case identity_family::pyramid: return "pyramid";
    }
    return "?";
}

constexpr std::optional<identity_family> family_from_name(std::string_view name) {
    for (identity_family family : all_families)
        if (family_name(family) == name) return family;
    return std::nullopt;
}

// One (family, n, k) instance. big_stick_puck is the k=3 specialization of
// the general Pascal identity, so its cases always store k = 3.
struct identity_case {
    identity_family family;
    long long n;
    long long k;
};

// Ordered signed summands plus their total. LHS evaluations carry positive
// terms only; RHS evaluations alternate in sign starting positive.
struct side_evaluation {
    std::vector<Integer> terms;
    Integer total;
};

inline side_evaluation make_side(std::vector<Integer> terms) {
    Integer total = 0;
    for (const Integer& t : terms) total += t;
    return {std::move(terms), std::move(total)};
}

template <typename S>
concept coefficient_source =
    requires(long long n, long long k, std::span<const long long> parts) {
        { S::binomial(n, k) } -> std::convertible_to<Integer>;
        { S::trinomial(n, k) } -> std::convertible_to<Integer>;
        { S::multinomial(n, parts) } -> std::convertible_to<Integer>;
    };

// Default source: the recurrence/multiplicative routes of coefficients.hpp.
struct recurrence_coefficients {
    static Integer binomial(long long n, long long k) { return stickkit::binomial(n, k); }
    static Integer trinomial(long long n, long long k) { return stickkit::trinomial(n, k); }
    static Integer multinomial(long long n, std::span<const long long> parts) {
        return stickkit::multinomial(n, parts);
    }
};

namespace detail {

inline void require_sweep_args(long long n, long long k, const char* what) {
    if (n < 0 || k < 0) throw std::invalid_argument(std::string(what) + ": negative argument");
}

} // namespace detail

/// LHS of the general Pascal identity: C(n+2i, i) for i = 0..k.
template <coefficient_source Source = recurrence_coefficients>
side_evaluation pascal_hockey_lhs(long long n, long long k) {
    detail::require_sweep_args(n, k, "pascal_hockey_lhs");
    std::vector<Integer> terms;
    terms.reserve(static_cast<std::size_t>(k) + 1);
    for (long long i = 0; i <= k; ++i)
        terms.push_back(Source::binomial(n + 2 * i, i));
    return make_side(std::move(terms));
}

/// RHS of the general Pascal identity: (-1)^j C(n+2k-j+1, k-2j) for
/// j = 0..floor(k/2).
template <coefficient_source Source = recurrence_coefficients>
side_evaluation pascal_hockey_rhs(long long n, long long k) {
    detail::require_sweep_args(n, k, "pascal_hockey_rhs");
    std::vector<Integer> terms;
    terms.reserve(static_cast<std::size_t>(k / 2) + 1);
    for (long long j = 0; j <= k / 2; ++j) {
        Integer term = Source::binomial(n + 2 * k - j + 1, k - 2 * j);
        terms.push_back(j % 2 == 0 ? term : -term);
    }
    return make_side(std::move(terms));
}

/// LHS of the trinomial identity: T(n+i, n) for i = 0..k.
template <coefficient_source Source = recurrence_coefficients>
side_evaluation trinomial_hockey_lhs(long long n, long long k) {
    detail::require_sweep_args(n, k, "trinomial_hockey_lhs");
    std::vector<Integer> terms;
    terms.reserve(static_cast<std::size_t>(k) + 1);
    for (long long i = 0; i <= k; ++i)
        terms.push_back(Source::trinomial(n + i, n));
    return make_side(std::move(terms));
}

/// RHS of the trinomial identity: (-1)^s T(n+k+1, n+2s+1) for
/// s = 0..floor(k/2). Every term reads from the single row n+k+1.
template <coefficient_source Source = recurrence_coefficients>
side_evaluation trinomial_hockey_rhs(long long n, long long k) {
    detail::require_sweep_args(n, k, "trinomial_hockey_rhs");
    std::vector<Integer> terms;
    terms.reserve(static_cast<std::size_t>(k / 2) + 1);
    for (long long s = 0; s <= k / 2; ++s) {
        Integer term = Source::trinomial(n + k + 1, n + 2 * s + 1);
        terms.push_back(s % 2 == 0 ? term : -term);
    }
    return make_side(std::move(terms));
}

/// The big hockey stick and puck identity: the k=3 stick against the
/// two-term puck C(n+7,3) - C(n+6,1). The RHS is built from its own closed
/// form, not by delegating to pascal_hockey_rhs, so agreement between the
/// two stays independently checkable.
template <coefficient_source Source = recurrence_coefficients>
std::pair<side_evaluation, side_evaluation> big_stick_puck(long long n) {
    detail::require_sweep_args(n, 0, "big_stick_puck");
    side_evaluation lhs = pascal_hockey_lhs<Source>(n, 3);
    side_evaluation rhs =
        make_side({Source::binomial(n + 7, 3), -Source::binomial(n + 6, 1)});
    return {std::move(lhs), std::move(rhs)};
}

/// The little hockey stick: sum C(n+i, i) for i = 0..k against the single
/// cell C(n+k+1, k).
template <coefficient_source Source = recurrence_coefficients>
std::pair<side_evaluation, side_evaluation> little_stick(long long n, long long k) {
    detail::require_sweep_args(n, k, "little_stick");
    std::vector<Integer> terms;
    terms.reserve(static_cast<std::size_t>(k) + 1);
    for (long long i = 0; i <= k; ++i)
        terms.push_back(Source::binomial(n + i, i));
    return {make_side(std::move(terms)), make_side({Source::binomial(n + k + 1, k)})};
}

namespace detail {

// sum over all (r, s) with s >= 0 and 2r + s = slice of
// multinomial(upper; r, s, r - shift). Multinomial zero-extension discards
// every triple with a negative part, so no tighter bounds are needed.
template <coefficient_source Source>
Integer pyramid_slice(long long upper, long long slice, long long shift) {
    Integer sum = 0;
    for (long long s = slice % 2; s <= slice; s += 2) {
        const long long r = (slice - s) / 2;
        const std::array<long long, 3> parts = {r, s, r - shift};
        sum += Source::multinomial(upper, std::span<const long long>(parts));
    }
    return sum;
}

} // namespace detail

/// Pyramid form of the trinomial LHS: term i is the slice sum over
/// 2r+s = 2n+i of multinomial(n+i; r, s, r-n). Equals trinomial_hockey_lhs
/// term by term.
template <coefficient_source Source = recurrence_coefficients>
side_evaluation pyramid_lhs(long long n, long long k) {
    detail::require_sweep_args(n, k, "pyramid_lhs");
    std::vector<Integer> terms;
    terms.reserve(static_cast<std::size_t>(k) + 1);
    for (long long i = 0; i <= k; ++i)
        terms.push_back(detail::pyramid_slice<Source>(n + i, 2 * n + i, n));
    return make_side(std::move(terms));
}

/// Pyramid form of the trinomial RHS: term j is (-1)^j times the slice sum
/// over 2r+s = 2n+k+2j+2 of multinomial(n+k+1; r, s, r-n-2j-1).
template <coefficient_source Source = recurrence_coefficients>
side_evaluation pyramid_rhs(long long n, long long k) {
    detail::require_sweep_args(n, k, "pyramid_rhs");
    std::vector<Integer> terms;
    terms.reserve(static_cast<std::size_t>(k / 2) + 1);
    for (long long j = 0; j <= k / 2; ++j) {
        Integer term =
            detail::pyramid_slice<Source>(n + k + 1, 2 * n + k + 2 * j + 2, n + 2 * j + 1);
        terms.push_back(j % 2 == 0 ? term : -term);
    }
    return make_side(std::move(terms));
}

/// LHS and RHS of one identity instance.
template <coefficient_source Source = recurrence_coefficients>
std::pair<side_evaluation, side_evaluation> evaluate_case(const identity_case& c) {
    switch (c.family) {
        case identity_family::little_stick: return little_stick<Source>(c.n, c.k);
        case identity_family::big_stick_puck: return big_stick_puck<Source>(c.n);
        case identity_family::pascal_hockey:
            return {pascal_hockey_lhs<Source>(c.n, c.k), pascal_hockey_rhs<Source>(c.n, c.k)};
        case identity_family::trinomial_hockey:
            return {trinomial_hockey_lhs<Source>(c.n, c.k), trinomial_hockey_rhs<Source>(c.n, c.k)};
        case identity_family::pyramid:
            return {pyramid_lhs<Source>(c.n, c.k), pyramid_rhs<Source>(c.n, c.k)};
    }
    throw std::invalid_argument("evaluate_case: unknown family");
}

struct case_result {
    identity_case id;
    side_evaluation lhs;
    side_evaluation rhs;
    bool equal;
};

struct verification_report {
    identity_family family;
    long long n_max;
    long long k_max;
    std::vector<case_result> cases;
    std::size_t checked;
    std::size_t failed;
    std::chrono::milliseconds elapsed;
};

struct sweep_options {
    bool fail_fast = false;
};

// Evaluator signature used by sweeps; tests substitute corrupted evaluators
// here to exercise the failure paths.
using case_evaluator =
    std::function<std::pair<side_evaluation, side_evaluation>(const identity_case&)>;

/// Sweep every case of a family over [0, n_max] x [0, k_max] in lexicographic
/// (n, k) order with a caller-supplied evaluator. A failed case is recorded
/// and the sweep continues, unless fail_fast stops it after the first
/// failure; either way the report stays well formed.
inline verification_report verify_family(identity_family family, long long n_max, long long k_max,
                                         const case_evaluator& evaluate,
                                         sweep_options options = {}) {
    if (n_max < 0 || k_max < 0)
        throw std::invalid_argument("verify_family: negative sweep bound");
    const auto start = std::chrono::steady_clock::now();
    verification_report report{family, n_max, k_max, {}, 0, 0, {}};

    // big_stick_puck has no free k; it sweeps n only, at its fixed k = 3.
    const bool fixed_k = family == identity_family::big_stick_puck;
    const long long k_lo = fixed_k ? 3 : 0;
    const long long k_hi = fixed_k ? 3 : k_max;

    for (long long n = 0; n <= n_max; ++n) {
        for (long long k = k_lo; k <= k_hi; ++k) {
            identity_case c{family, n, k};
            auto [lhs, rhs] = evaluate(c);
            const bool equal = lhs.total == rhs.total;
            report.cases.push_back({c, std::move(lhs), std::move(rhs), equal});
            if (!equal) {
                ++report.failed;
                if (options.fail_fast) goto done;
            }
        }
    }
done:
    report.checked = report.cases.size();
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

/// Sweep with the default coefficient route.
inline verification_report verify_family(identity_family family, long long n_max, long long k_max,
                                         sweep_options options = {}) {
    return verify_family(
        family, n_max, k_max, [](const identity_case& c) { return evaluate_case(c); }, options);
}

} // namespace stickkit
