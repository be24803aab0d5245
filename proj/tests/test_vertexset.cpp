#include <doctest.h>

#include <vector>

#include "powpath/graphs.hpp"

using powpath::VertexSet;

TEST_CASE("empty set reports empty and iterates to the sentinel") {
    VertexSet s(10);
    CHECK(s.empty());
    CHECK(s.count() == 0);
    CHECK(s.first() == -1);
}

TEST_CASE("set, test, reset round trip") {
    VertexSet s(70);  // crosses one word boundary
    s.set(0);
    s.set(63);
    s.set(64);
    s.set(69);
    CHECK(s.count() == 4);
    CHECK(s.test(63));
    CHECK(s.test(64));
    CHECK_FALSE(s.test(1));
    s.reset(64);
    CHECK_FALSE(s.test(64));
    CHECK(s.count() == 3);
}

TEST_CASE("first and next walk members in ascending order") {
    VertexSet s = VertexSet::of(100, {5, 17, 64, 99});
    std::vector<int> seen;
    for (int v = s.first(); v >= 0; v = s.next(v)) seen.push_back(v);
    CHECK(seen == std::vector<int>{5, 17, 64, 99});
}

TEST_CASE("set algebra") {
    VertexSet a = VertexSet::of(8, {0, 1, 2, 3});
    VertexSet b = VertexSet::of(8, {2, 3, 4, 5});
    CHECK((a & b) == VertexSet::of(8, {2, 3}));
    CHECK((a | b) == VertexSet::of(8, {0, 1, 2, 3, 4, 5}));
    CHECK((a - b) == VertexSet::of(8, {0, 1}));
    CHECK(a.intersects(b));
    CHECK_FALSE(a.intersects(VertexSet::of(8, {6, 7})));
    CHECK(VertexSet::of(8, {2, 3}).is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));
}

TEST_CASE("compound assignment mirrors the binary operators") {
    VertexSet a = VertexSet::of(8, {0, 1, 2});
    VertexSet b = VertexSet::of(8, {1, 2, 3});
    VertexSet c = a;
    c &= b;
    CHECK(c == (a & b));
    c = a;
    c |= b;
    CHECK(c == (a | b));
    c = a;
    c -= b;
    CHECK(c == (a - b));
}

TEST_CASE("to_vector lists members ascending") {
    VertexSet s = VertexSet::of(6, {4, 0, 2});
    CHECK(s.to_vector() == std::vector<int>{0, 2, 4});
}

TEST_CASE("clear empties the set") {
    VertexSet s = VertexSet::of(9, {1, 8});
    s.clear();
    CHECK(s.empty());
    CHECK(s.universe() == 9);
}
