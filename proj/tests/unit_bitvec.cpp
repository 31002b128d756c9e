#include <doctest.h>

#include "oraclid/bitvec.hpp"

using oraclid::BitVec;

TEST_CASE("string round trip keeps position order") {
  BitVec v = BitVec::from_string("0110001");
  CHECK(v.size() == 7);
  CHECK(v.to_string() == "0110001");
  CHECK_FALSE(v.get(0));
  CHECK(v.get(1));
  CHECK(v.get(2));
  CHECK(v.get(6));
}

TEST_CASE("set flip count") {
  BitVec v(70);
  CHECK(v.count_ones() == 0);
  CHECK_FALSE(v.any());
  v.set(0, true);
  v.set(69, true);
  v.flip(64);
  CHECK(v.count_ones() == 3);
  CHECK(v.any());
  v.flip(64);
  CHECK(v.count_ones() == 2);
  v.set(69, false);
  CHECK(v.to_string().back() == '0');
}

TEST_CASE("xor and equality") {
  BitVec a = BitVec::from_string("10110");
  BitVec b = BitVec::from_string("01110");
  BitVec c = a;
  c.xor_with(b);
  CHECK(c.to_string() == "11000");
  c.xor_with(b);
  CHECK(c == a);
  CHECK_FALSE(a == b);
  CHECK(a.hash() == c.hash());
}

TEST_CASE("equality ignores stale trailing bits") {
  BitVec a(3);
  a.set(2, true);
  BitVec b = BitVec::from_string("001");
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
}

TEST_CASE("from_string rejects other characters") {
  CHECK_THROWS_AS(BitVec::from_string("01012"), std::invalid_argument);
}
