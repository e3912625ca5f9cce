#include "stickkit/polynomial.hpp"

#include "stickkit/coefficients.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <vector>

using stickkit::binomial_expansion;
using stickkit::binomial_oracle;
using stickkit::Integer;
using stickkit::polynomial;
using stickkit::trinomial_expansion;
using stickkit::trinomial_oracle;

TEST_CASE("multiplication is exact convolution") {
    polynomial<Integer> tri{1, 1, 1};
    CHECK((tri * tri).coefficients() == std::vector<Integer>{1, 2, 3, 2, 1});

    polynomial<Integer> p{3, 0, 7, 2};
    CHECK(p * polynomial<Integer>::one() == p);

    polynomial<Integer> a{1, 1};
    polynomial<Integer> b{1, -1};
    CHECK((a * b).coefficients() == std::vector<Integer>{1, 0, -1});
}

TEST_CASE("zero and trailing-zero handling") {
    polynomial<Integer> zero;
    polynomial<Integer> p{5, 4};
    CHECK((p * zero).is_zero());
    CHECK(polynomial<Integer>({0, 0, 0}).is_zero());
    CHECK(polynomial<Integer>({1, 2, 0, 0}).coefficients() == std::vector<Integer>{1, 2});
    CHECK(p.coefficient(0) == 5);
    CHECK(p.coefficient(7) == 0);
}

TEST_CASE("product degree adds") {
    polynomial<Integer> a{2, 0, 1};
    polynomial<Integer> b{1, 1, 1, 1};
    CHECK((a * b).degree() == a.degree() + b.degree());
}

TEST_CASE("power by binary exponentiation") {
    CHECK(pow(polynomial<Integer>{1, 1, 1}, 2).coefficients() ==
          std::vector<Integer>{1, 2, 3, 2, 1});
    CHECK(pow(polynomial<Integer>{9, -3, 4, 7}, 0) == polynomial<Integer>::one());
    CHECK(pow(polynomial<Integer>{}, 0) == polynomial<Integer>::one());
    CHECK(pow(polynomial<Integer>{1, 1}, 8).coefficients() == stickkit::pascal_row(8).entries);
    CHECK_THROWS_AS(pow(polynomial<Integer>{1, 1}, -1), std::invalid_argument);
}

TEST_CASE("binary exponentiation equals iterated multiplication") {
    const polynomial<Integer> base{1, 1, 1};
    polynomial<Integer> iterated = polynomial<Integer>::one();
    for (long long n = 0; n <= 20; ++n) {
        CHECK(pow(base, n) == iterated);
        iterated *= base;
    }
}

TEST_CASE("trinomial oracle values") {
    CHECK(trinomial_oracle(6, 2) == 90);
    CHECK(trinomial_oracle(2, 0) == 3);
    CHECK(trinomial_oracle(4, -4) == 1);
    CHECK(trinomial_oracle(3, 9) == 0);
    CHECK(trinomial_oracle(3, -9) == 0);
    CHECK_THROWS_AS(trinomial_oracle(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial oracle values") {
    CHECK(binomial_oracle(8, 3) == 56);
    CHECK(binomial_oracle(10, 5) == 252);
    for (long long n = 0; n <= 60; ++n) CHECK(binomial_oracle(n, 0) == 1);
    CHECK(binomial_oracle(4, 7) == 0);
    CHECK(binomial_oracle(4, -1) == 0);
    CHECK_THROWS_AS(binomial_oracle(-3, 1), std::invalid_argument);

    // Same value through plain repeated multiplication, no squaring.
    polynomial<Integer> acc = polynomial<Integer>::one();
    const polynomial<Integer> base{1, 1};
    for (int i = 0; i < 10; ++i) acc *= base;
    CHECK(acc.coefficient(5) == 252);
}

TEST_CASE("expansion coefficient lists are palindromic") {
    for (long long n = 0; n <= 60; ++n) {
        const auto coeffs = trinomial_expansion(n);
        REQUIRE(coeffs.size() == static_cast<std::size_t>(2 * n + 1));
        auto reversed = coeffs;
        std::reverse(reversed.begin(), reversed.end());
        CHECK(coeffs == reversed);
    }
}

TEST_CASE("shifted expansion agrees with the Laurent form") {
    // Expand (1 + x + 1/x)^n over signed exponents directly and compare the
    // coefficient of x^k with the oracle's coefficient of x^(n+k).
    for (long long n = 0; n <= 40; ++n) {
        std::map<long long, Integer> laurent = {{0, 1}};
        for (long long step = 0; step < n; ++step) {
            std::map<long long, Integer> next;
            for (const auto& [exp, coeff] : laurent)
                for (long long d : {-1LL, 0LL, 1LL}) next[exp + d] += coeff;
            laurent = std::move(next);
        }
        for (long long k = -n - 2; k <= n + 2; ++k) {
            const auto found = laurent.find(k);
            const Integer expected = found == laurent.end() ? Integer(0) : found->second;
            CHECK(trinomial_oracle(n, k) == expected);
        }
    }
}

TEST_CASE("expansion rows match the oracle point queries") {
    for (long long n = 0; n <= 25; ++n) {
        const auto pascal = binomial_expansion(n);
        REQUIRE(pascal.size() == static_cast<std::size_t>(n + 1));
        for (long long k = 0; k <= n; ++k)
            CHECK(pascal[static_cast<std::size_t>(k)] == binomial_oracle(n, k));
        const auto tri = trinomial_expansion(n);
        for (long long k = -n; k <= n; ++k)
            CHECK(tri[static_cast<std::size_t>(n + k)] == trinomial_oracle(n, k));
    }
}
