#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "hullsum/subsum.hpp"

using namespace hullsum;

namespace {

using IntSets = std::vector<std::vector<Integer>>;

IntSets sets(std::initializer_list<std::initializer_list<long long>> in) {
    IntSets out;
    for (const auto& s : in) out.emplace_back(s.begin(), s.end());
    return out;
}

std::set<Integer> add(const std::set<Integer>& x, const std::vector<Integer>& y) {
    std::set<Integer> out;
    for (const auto& a : x) {
        for (const auto& b : y) out.insert(a + b);
    }
    return out;
}

struct Oracle {
    std::size_t s = 0;
    std::size_t s_prime = 0;
    std::vector<std::size_t> si;
};

// Direct enumeration over integers, independent of the point-set machinery.
Oracle oracle(const IntSets& a) {
    Oracle o;
    std::set<Integer> full{0};
    for (const auto& ai : a) full = add(full, ai);
    o.s = full.size();
    std::set<Integer> union_prime;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::set<Integer> si{0};
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j != i) si = add(si, a[j]);
        }
        o.si.push_back(si.size());
        const auto [lo, hi] = std::minmax_element(a[i].begin(), a[i].end());
        for (const auto& v : add(si, {*lo, *hi})) union_prime.insert(v);
    }
    o.s_prime = union_prime.size();
    return o;
}

}  // namespace

TEST_CASE("endpoints examples") {
    CHECK(endpoints({3, 7, 9}) == std::vector<Integer>{3, 9});
    CHECK(endpoints({5}) == std::vector<Integer>{5});
    CHECK(endpoints({-2, 0, 4}) == std::vector<Integer>{-2, 4});
    CHECK_THROWS(endpoints({}));
}

TEST_CASE("instance validation") {
    CHECK_THROWS_WITH(SubsumInstance(sets({{1, 2}})), "k must be ≥ 2 (bound divides by k−1)");
    CHECK_THROWS_WITH(SubsumInstance(sets({{1, 2}, {}})), "set A_2 is empty");
    CHECK_THROWS_WITH(SubsumInstance(sets({{1, 1}, {2}})), "set A_1 repeats a value");
}

TEST_CASE("worked example: two copies of {0,1,2}") {
    const auto r = subsum_report(SubsumInstance(sets({{0, 1, 2}, {0, 1, 2}})));
    CHECK(r.sizes.size_s == 5);
    CHECK(r.sizes.size_s_prime == 5);
    CHECK(r.bound == 5);
    CHECK(r.chain_satisfied);
}

TEST_CASE("worked example: three copies of {0,1}") {
    const auto r = subsum_report(SubsumInstance(sets({{0, 1}, {0, 1}, {0, 1}})));
    CHECK(r.sizes.size_s == 4);
    CHECK(r.sizes.sizes_si == std::vector<std::size_t>{3, 3, 3});
    CHECK(r.bound == 4);
    CHECK(r.sizes.size_s_prime == 4);
    CHECK(r.chain_satisfied);
}

TEST_CASE("singleton sets keep the chain") {
    const auto r = subsum_report(SubsumInstance(sets({{7}, {0, 3, 4}, {-1, 2}})));
    CHECK(r.sizes.s_prime_subset_of_s);
    CHECK(r.chain_satisfied);
}

TEST_CASE("non-integral bounds compare exactly") {
    // Each S_i has 4 elements, so the bound is 11/2.
    const auto r = subsum_report(SubsumInstance(sets({{0, 1}, {0, 2}, {0, 4}})));
    CHECK(r.sizes.sizes_si == std::vector<std::size_t>{4, 4, 4});
    CHECK(r.bound == Rational(11, 2));
    CHECK(r.sizes.size_s == 8);
    CHECK(r.sizes.size_s_prime == 8);
    CHECK(r.right_holds);
}

TEST_CASE("property: random instances match the oracle and satisfy the chain") {
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<int> value(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t k = 2 + trial % 4;
        IntSets a(k);
        for (auto& ai : a) {
            const std::size_t n = 1 + rng() % 8;
            std::set<int> vals;
            while (vals.size() < n) vals.insert(value(rng));
            ai.assign(vals.begin(), vals.end());
        }
        const auto r = subsum_report(SubsumInstance(a));
        const auto o = oracle(a);
        CHECK(r.sizes.size_s == o.s);
        CHECK(r.sizes.size_s_prime == o.s_prime);
        CHECK(r.sizes.sizes_si == o.si);
        CHECK(r.sizes.s_prime_subset_of_s);
        CHECK(r.left_holds);
        CHECK(r.chain_satisfied);

        // Shifting one set shifts every sum and leaves the report unchanged.
        auto shifted = a;
        for (auto& v : shifted[trial % k]) v += 1000;
        const auto t = subsum_report(SubsumInstance(shifted));
        CHECK(t.sizes.size_s == r.sizes.size_s);
        CHECK(t.sizes.size_s_prime == r.sizes.size_s_prime);
        CHECK(t.sizes.sizes_si == r.sizes.sizes_si);
        CHECK(t.bound == r.bound);
    }
}
