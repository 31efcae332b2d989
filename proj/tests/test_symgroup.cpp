#include "doctest.h"

#include <algorithm>
#include <set>

#include "core/permutation.hpp"

using namespace symtrace;

namespace {

// Independent canonicalizer: tries every rotation of every cycle, keeps the
// one satisfying the stated rules, then sorts by cycle maxima.
std::vector<std::vector<int>> oracle_canonical(const Permutation& p) {
    int k = p.degree();
    std::vector<char> seen(k + 1, 0);
    std::vector<std::vector<int>> cycles;
    for (int s = 1; s <= k; ++s) {
        if (seen[s]) continue;
        std::vector<int> c;
        int cur = s;
        do {
            seen[cur] = 1;
            c.push_back(cur);
            cur = p.apply(cur);
        } while (cur != s);
        std::vector<int> best;
        for (std::size_t r = 0; r < c.size(); ++r) {
            std::rotate(c.begin(), c.begin() + 1, c.end());
            if (c.back() == *std::max_element(c.begin(), c.end())) best = c;
        }
        cycles.push_back(best);
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.back() < b.back(); });
    return cycles;
}

int oracle_sign(const Permutation& p) {
    int inv = 0;
    for (int i = 1; i <= p.degree(); ++i)
        for (int j = i + 1; j <= p.degree(); ++j)
            if (p.apply(i) > p.apply(j)) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

// Standard tableaux counted by brute force over all fillings.
int count_standard_tableaux(const Partition& shape) {
    int k = shape.k();
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i + 1;
    int count = 0;
    do {
        std::vector<std::vector<int>> rows;
        int pos = 0;
        for (int len : shape.parts()) {
            rows.emplace_back(perm.begin() + pos, perm.begin() + pos + len);
            pos += len;
        }
        bool ok = true;
        for (const auto& row : rows)
            for (std::size_t j = 0; j + 1 < row.size(); ++j)
                if (row[j] > row[j + 1]) ok = false;
        for (std::size_t i = 0; i + 1 < rows.size() && ok; ++i)
            for (std::size_t j = 0; j < rows[i + 1].size(); ++j)
                if (rows[i][j] > rows[i + 1][j]) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

TEST_CASE("compose applies the right factor first") {
    Permutation a = Permutation::from_cycles(3, {{1, 2}});
    CHECK(compose(a, a) == Permutation::identity(3));

    Permutation q = Permutation::from_cycles(3, {{2, 3}});
    Permutation r = compose(a, q);
    CHECK(r.apply(1) == 2);
    CHECK(r.apply(2) == 3);
    CHECK(r.apply(3) == 1);

    for (const auto& p : all_permutations(3))
        for (const auto& s : all_permutations(3)) {
            Permutation c = compose(p, s);
            for (int i = 1; i <= 3; ++i) CHECK(c.apply(i) == p.apply(s.apply(i)));
        }
}

TEST_CASE("the coordinate convention: pi = (143) has pi(4) = 3") {
    Permutation pi = Permutation::from_cycles(4, {{1, 4, 3}});
    CHECK(pi.apply(4) == 3);
    CHECK(pi.inverse().apply(4) == 1);
    CHECK(pi.apply(2) == 2);
}

TEST_CASE("canonical cycle form") {
    CHECK(Permutation::identity(3).canonical_cycles() ==
          std::vector<std::vector<int>>{{1}, {2}, {3}});

    // cycles {2,1,6}, {4,5}, {3} canonically read (3)(45)(216)
    Permutation p = Permutation::from_cycles(6, {{2, 1, 6}, {4, 5}});
    CHECK(p.canonical_cycles() == std::vector<std::vector<int>>{{3}, {4, 5}, {2, 1, 6}});

    SUBCASE("matches the exhaustive canonicalizer") {
        for (const auto& q : all_permutations(5))
            CHECK(q.canonical_cycles() == oracle_canonical(q));
    }

    SUBCASE("round-trips through from_cycles") {
        for (const auto& q : all_permutations(5))
            CHECK(Permutation::from_cycles(5, q.canonical_cycles()) == q);
    }
}

TEST_CASE("sign") {
    CHECK(Permutation::identity(4).sign() == 1);
    CHECK(Permutation::from_cycles(4, {{2, 4}}).sign() == -1);
    CHECK(Permutation::from_cycles(3, {{1, 2, 3}}).sign() == 1);

    for (const auto& p : all_permutations(5)) CHECK(p.sign() == oracle_sign(p));

    SUBCASE("multiplicative") {
        for (const auto& p : all_permutations(4))
            for (const auto& q : all_permutations(4))
                CHECK(compose(p, q).sign() == p.sign() * q.sign());
    }
}

TEST_CASE("partitions enumeration and hook dimensions") {
    auto p4 = partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].parts() == std::vector<int>{4});
    CHECK(p4[4].parts() == std::vector<int>{1, 1, 1, 1});
    for (std::size_t i = 0; i + 1 < p4.size(); ++i) CHECK(p4[i + 1] < p4[i]);

    CHECK(Partition({1, 1, 1, 1}).hook_dimension() == 1);
    CHECK(Partition({2, 1}).hook_dimension() == 2);
    CHECK(Partition({2, 2}).hook_dimension() == 2);

    SUBCASE("hook dimension equals the standard-tableau count, k <= 6") {
        for (int k = 1; k <= 6; ++k)
            for (const auto& lam : partitions(k))
                CHECK(lam.hook_dimension() == count_standard_tableaux(lam));
    }

    SUBCASE("sum of squared dimensions is k!") {
        for (int k = 1; k <= 6; ++k) {
            std::int64_t sum = 0;
            for (const auto& lam : partitions(k))
                sum += lam.hook_dimension() * lam.hook_dimension();
            CHECK(sum == factorial(k));
        }
    }
}

TEST_CASE("row and column stabilizers") {
    Tableau t = Tableau::natural(Partition({4, 3, 1}));
    CHECK(t.row_stabilizer().size() == 144);    // 4! 3! 1!
    CHECK(t.column_stabilizer().size() == 24);  // 3! 2! 2! 1!

    Tableau single_row = Tableau::natural(Partition({4}));
    CHECK(single_row.row_stabilizer().size() == 24);
    CHECK(single_row.column_stabilizer().size() == 1);

    SUBCASE("stabilizers intersect trivially for natural fillings") {
        for (const auto& shape : {Partition({2, 1}), Partition({2, 2}), Partition({3, 1})}) {
            Tableau tab = Tableau::natural(shape);
            auto rows = tab.row_stabilizer();
            auto cols = tab.column_stabilizer();
            std::set<Permutation> rset(rows.begin(), rows.end());
            int common = 0;
            for (const auto& c : cols)
                if (rset.count(c)) ++common;
            CHECK(common == 1);  // only the identity
        }
    }
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
    CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), std::invalid_argument);
}
