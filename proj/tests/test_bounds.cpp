#include <doctest.h>

#include "waring/bounds.hpp"
#include "waring/families.hpp"

using namespace waring;

namespace {

// Direct enumeration oracle for the bounded-tuple count.
long long count_S_oracle(const std::vector<int>& b, int delta) {
    long long count = 0;
    std::vector<int> a(b.size(), 0);
    while (true) {
        int sum = 0;
        for (int x : a) sum += x;
        if (sum == delta) ++count;
        size_t pos = 0;
        while (pos < b.size() && a[pos] == b[pos]) a[pos++] = 0;
        if (pos == b.size()) break;
        ++a[pos];
    }
    return count;
}

}  // namespace

TEST_CASE("bounded-tuple count against direct enumeration") {
    CHECK(count_S({1, 1, 1, 1, 1}, 2) == 10);
    CHECK(count_S({2, 1, 1}, 2) == 4);
    CHECK(count_S({3, 2}, 0) == 1);
    CHECK(count_S({}, 0) == 1);

    std::vector<std::vector<int>> samples = {
        {1}, {4}, {1, 1}, {3, 1}, {2, 2, 2}, {4, 3, 1}, {1, 1, 1, 1}, {5, 2, 2, 1},
        {2, 2, 1, 1, 1}, {3, 3, 3}};
    for (const auto& b : samples) {
        int total = 0;
        for (int x : b) total += x;
        for (int delta = 0; delta <= total; ++delta)
            CHECK(count_S(b, delta) == count_S_oracle(b, delta));
    }
}

TEST_CASE("tuple counts sum to the box volume") {
    std::vector<std::vector<int>> samples = {{1, 1, 1}, {3, 2}, {2, 2, 1, 1}, {5, 4}};
    for (const auto& b : samples) {
        int total = 0;
        for (int x : b) total += x;
        long long sum = 0;
        for (int delta = 0; delta <= total; ++delta) sum += count_S(b, delta);
        CHECK(sum == count_T(b));
    }
    CHECK(count_T({1, 1, 1}) == 8);
    CHECK(count_T({}) == 1);
}

TEST_CASE("dominant exponent makes the count independent of delta") {
    // For b = (b0, tail) with b0 >= sum(tail), S equals T(tail) for every
    // sum(tail) <= delta <= b0.
    std::vector<std::vector<int>> tails = {{1}, {2, 1}, {1, 1, 1}, {3, 2}};
    for (const auto& tail : tails) {
        int ts = 0;
        for (int x : tail) ts += x;
        for (int b0 = ts; b0 + ts <= 14; ++b0) {
            std::vector<int> b = {b0};
            b.insert(b.end(), tail.begin(), tail.end());
            for (int delta = ts; delta <= b0; ++delta)
                CHECK(count_S(b, delta) == count_T(tail));
        }
    }
}

TEST_CASE("monomial border bounds") {
    RankReport r1;
    monomial_border_bounds({3, 1, 1, 1}, r1);  // b0 = 3 >= 3 = tail sum
    r1.add_rank_upper(100, "cap");
    r1.merge();
    CHECK(r1.exact_border == 8);  // 2^3

    RankReport r2;
    monomial_border_bounds({2, 1, 1}, r2);
    r2.add_rank_upper(100, "cap");
    r2.merge();
    CHECK(r2.exact_border == 4);

    RankReport r3;
    monomial_border_bounds(std::vector<int>(7, 1), r3);
    r3.add_rank_upper(100, "cap");
    r3.merge();
    CHECK(r3.border_lower.value == 35);
    CHECK(r3.border_upper.value == 64);
}

TEST_CASE("monomial rank upper bound") {
    CHECK(monomial_rank_upper({2, 1, 1}) == 6);
    CHECK(monomial_rank_upper({4, 2}) == 10);
    CHECK(monomial_rank_upper(std::vector<int>(5, 1)) == 16);  // 2^{n-1}
    // never below the known exact rank of two-variable monomials
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= a; ++b) CHECK(monomial_rank_upper({a, b}) >= a + 1);
}

TEST_CASE("product bounds per size") {
    RankReport r5;
    product_bounds(5, r5);
    r5.merge();
    CHECK(r5.rank_lower.value == 12);
    CHECK(r5.rank_upper.value == 16);
    CHECK(r5.border_lower.value == 10);
    CHECK(r5.border_upper.value == 16);

    RankReport r1;
    product_bounds(1, r1);
    r1.merge();
    CHECK(r1.exact_rank == 1);

    RankReport r8;
    product_bounds(8, r8);
    r8.merge();
    CHECK(r8.rank_lower.value == 73);

    RankReport r4;
    product_bounds(4, r4);
    r4.merge();
    CHECK(r4.exact_rank == 8);
}

TEST_CASE("determinant and permanent table rows") {
    auto det4 = detperm_bounds(4, DetPerm::Det);
    CHECK(det4.rank_lower == 43);
    CHECK(det4.border_lower == 36);
    CHECK(det4.rank_upper == 192);

    auto per4 = detperm_bounds(4, DetPerm::Perm);
    CHECK(per4.rank_lower == 40);
    CHECK(per4.rank_upper == 64);

    CHECK(detperm_bounds(7, DetPerm::Det).rank_lower == 1258);
    CHECK(detperm_bounds(8, DetPerm::Perm).rank_upper == 16384);
}

TEST_CASE("aggregate on the block family") {
    auto rep = aggregate(triple_blocks_poly(2));
    CHECK(rep.exact_rank == 8);
    CHECK(rep.exact_border == 6);
}

TEST_CASE("aggregate on the line-times-quadric family") {
    auto rep = aggregate(line_times_quadric_poly(3));
    CHECK(rep.exact_rank == 6);
    CHECK_FALSE(rep.exact_border.has_value());
    CHECK(rep.border_lower.value == 4);  // m + 1

    auto with_cube = aggregate(line_times_quadric_plus_cube_poly(3));
    CHECK(with_cube.exact_rank == 6);
}

TEST_CASE("aggregate on the five-variable cubic") {
    auto rep = aggregate(two_squares_plus_cross_poly());
    CHECK(rep.exact_border == 5);
    CHECK(rep.rank_lower.value == 8);
    CHECK(rep.rank_upper.value == 9);
    CHECK_FALSE(rep.exact_rank.has_value());
}

TEST_CASE("aggregate handles degenerate inputs by reducing first") {
    // (x + y)^3 in three variables is a single power.
    LinearForm<Rational> l({Rational(1), Rational(1), Rational(0)});
    auto rep = aggregate(power_of_linear(l, 3));
    CHECK(rep.exact_rank == 1);
    CHECK(rep.exact_border == 1);

    // A quadric's rank is its essential variable count.
    Poly<Rational> q(3, 2);
    q.add_term(Monomial({1, 1, 0}), Rational(1));
    auto qrep = aggregate(q);
    CHECK(qrep.exact_rank == 2);
}

TEST_CASE("every merged report is internally consistent") {
    std::vector<Poly<Rational>> samples = {
        product_poly(4), monomial_poly({2, 1, 1}), monomial_poly({3, 2, 2}),
        triple_blocks_poly(2), two_squares_plus_cross_poly(), cubic_fermat(),
        cubic_conic_plus_tangent()};
    for (const auto& f : samples) {
        auto rep = aggregate(f);
        CHECK(rep.border_lower.value <= rep.border_upper.value);
        CHECK(rep.rank_lower.value <= rep.rank_upper.value);
        CHECK(rep.border_lower.value <= rep.rank_upper.value);
        CHECK(rep.rank_lower.value >= rep.border_lower.value);
    }
}

TEST_CASE("universal upper bound is always present") {
    auto rep = aggregate(monomial_poly({3, 3, 3}));
    bool found = false;
    for (const auto& b : rep.rank_upper_sources)
        if (b.provenance.find("universal") != std::string::npos) found = true;
    CHECK(found);
}
