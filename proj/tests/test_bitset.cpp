#include <doctest.h>

#include <random>

#include "scaledim/bitset.hpp"

using scaledim::BitSet;

TEST_CASE("basic set operations") {
  BitSet a(70);
  a.set(0);
  a.set(69);
  CHECK(a.count() == 2);
  CHECK(a.test(69));
  CHECK_FALSE(a.test(33));
  CHECK(a.first() == 0);

  BitSet b(70);
  b.set(69);
  CHECK(b.is_subset_of(a));
  CHECK(b.is_proper_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK((a & b) == b);
  CHECK((a | b) == a);
  CHECK(a.without(b).count() == 1);
  CHECK(a.complement().count() == 68);
  CHECK(a.complement().without(b.complement()).empty());
}

TEST_CASE("full and empty") {
  CHECK(BitSet::full(0).empty());
  CHECK(BitSet::full(64).count() == 64);
  CHECK(BitSet::full(65).count() == 65);
  CHECK(BitSet(5).empty());
  CHECK(BitSet::full(5).is_full());
}

TEST_CASE("lectic order compares at the smallest differing index") {
  BitSet a(3), b(3);
  a.set(0);  // {0}
  b.set(1);  // {1}
  CHECK(BitSet::lectic_less(b, a));
  CHECK_FALSE(BitSet::lectic_less(a, b));
  CHECK_FALSE(BitSet::lectic_less(a, a));
  CHECK(BitSet::lectic_less(BitSet(3), b));            // {} < {1}
  CHECK(BitSet::lectic_less(a, BitSet::full(3)));      // {0} < {0,1,2}
  BitSet c(3);
  c.set(0);
  c.set(2);  // {0,2} > {0} since index 2 differs and c has it
  CHECK(BitSet::lectic_less(a, c));
}

TEST_CASE("lectic order is a strict total order on random sets") {
  std::mt19937 rng(7);
  std::vector<BitSet> sets;
  for (int i = 0; i < 40; ++i) {
    BitSet s(90);
    for (int b = 0; b < 90; ++b)
      if (rng() & 1) s.set(b);
    sets.push_back(s);
  }
  for (const auto& x : sets)
    for (const auto& y : sets) {
      if (x == y) {
        CHECK_FALSE(BitSet::lectic_less(x, y));
      } else {
        CHECK(BitSet::lectic_less(x, y) != BitSet::lectic_less(y, x));
      }
      for (const auto& z : sets)
        if (BitSet::lectic_less(x, y) && BitSet::lectic_less(y, z))
          CHECK(BitSet::lectic_less(x, z));
    }
}

TEST_CASE("for_each visits indices ascending") {
  BitSet s(130);
  s.set(3);
  s.set(64);
  s.set(129);
  CHECK(s.indices() == std::vector<std::size_t>{3, 64, 129});
}
