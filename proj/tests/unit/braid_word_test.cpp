#include "braidband/braid_word.hpp"

#include <vector>

#include "braidband/errors.hpp"
#include "braidband/hurwitz.hpp"
#include "doctest.h"
#include "random_gen.hpp"

using namespace braidband;
using braidband::testing::Rng;

namespace {

BraidWord bw(int strands, std::string_view text) { return parse_braid_word(text, strands); }

}  // namespace

TEST_CASE("band generators expand to conjugated sigma ladders") {
  CHECK(expand_band(BandGenerator(1, 3), 4) == bw(4, "s1 s2 s1^-1"));
  CHECK(expand_band(BandGenerator(2, 4), 4) == bw(4, "s2 s3 s2^-1"));
  CHECK(expand_band(BandGenerator(1, 2), 2) == bw(2, "s1"));
  CHECK(expand_band(BandGenerator(1, 3, -1), 4) == bw(4, "s1 s2^-1 s1^-1"));
  CHECK(expand_band(BandGenerator(3, 1), 4) == expand_band(BandGenerator(1, 3), 4));
  CHECK_THROWS_AS(expand_band(BandGenerator(2, 5), 4), std::invalid_argument);
  CHECK_THROWS_AS(BandGenerator(2, 2), std::invalid_argument);
}

TEST_CASE("alternative band expansion") {
  CHECK(expand_band_alt(BandGenerator(1, 3), 3) == bw(3, "s2^-1 s1 s2"));
  CHECK(expand_band_alt(BandGenerator(1, 2), 3) == bw(3, "s1"));
  CHECK(expand_band_alt(BandGenerator(1, 4), 4) == bw(4, "s3^-1 s2^-1 s1 s2 s3"));
}

TEST_CASE("both band expansions agree in the braid group") {
  for (int strands = 2; strands <= 6; ++strands) {
    for (int i = 1; i < strands; ++i) {
      for (int j = i + 1; j <= strands; ++j) {
        CAPTURE(strands, i, j);
        CHECK(braid_equal(expand_band(BandGenerator(i, j), strands),
                          expand_band_alt(BandGenerator(i, j), strands)));
      }
    }
  }
}

TEST_CASE("compose applies free cancellation only") {
  CHECK((bw(3, "s1") * bw(3, "s1^-1")).is_identity_word());
  CHECK(bw(3, "s1") * bw(3, "s2") == bw(3, "s1 s2"));
  CHECK(BraidWord(3) * bw(3, "s2 s1") == bw(3, "s2 s1"));
  CHECK_THROWS_AS(bw(3, "s1") * bw(4, "s1"), std::invalid_argument);
  // The braid relation is not rewritten at the word level.
  CHECK_FALSE(bw(3, "s1 s2 s1") == bw(3, "s2 s1 s2"));
}

TEST_CASE("inverse reverses and negates") {
  CHECK(bw(3, "s1 s2^-1").inverse() == bw(3, "s2 s1^-1"));
  CHECK(BraidWord(3).inverse().is_identity_word());
  CHECK(expand_band(BandGenerator(1, 3), 4).inverse() == bw(4, "s1 s2^-1 s1^-1"));
}

TEST_CASE("permutation of a braid word") {
  CHECK(permutation_of(bw(3, "s1")) == Permutation::transposition(3, 1, 2));
  CHECK(permutation_of(expand_band(BandGenerator(1, 3), 4)) ==
        Permutation::transposition(4, 1, 3));
  CHECK(permutation_of(BraidWord(3)) == Permutation(3));

  // Band generators always map to their transposition.
  for (int i = 1; i < 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      CHECK(permutation_of(expand_band(BandGenerator(i, j), 5)) ==
            Permutation::transposition(5, i, j));
    }
  }
}

TEST_CASE("permutation_of is a homomorphism") {
  Rng rng(201);
  for (int trial = 0; trial < 200; ++trial) {
    const int strands = testing::draw(rng, 2, 5);
    const BraidWord a = testing::random_braid_word(rng, strands, testing::draw(rng, 0, 10));
    const BraidWord b = testing::random_braid_word(rng, strands, testing::draw(rng, 0, 10));
    CHECK(permutation_of(a * b) == permutation_of(a) * permutation_of(b));
    CHECK(permutation_of(a.inverse()) == permutation_of(a).inverse());
  }
}

TEST_CASE("braid relations hold under braid_equal") {
  for (int strands = 3; strands <= 6; ++strands) {
    for (int i = 1; i + 1 < strands; ++i) {
      BraidWord lhs(strands, std::vector<ArtinLetter>{{i, 1}, {i + 1, 1}, {i, 1}});
      BraidWord rhs(strands, std::vector<ArtinLetter>{{i + 1, 1}, {i, 1}, {i + 1, 1}});
      CHECK(braid_equal(lhs, rhs));
    }
    for (int i = 1; i < strands; ++i) {
      for (int j = i + 2; j < strands; ++j) {
        BraidWord lhs(strands, std::vector<ArtinLetter>{{i, 1}, {j, 1}});
        BraidWord rhs(strands, std::vector<ArtinLetter>{{j, 1}, {i, 1}});
        CHECK(braid_equal(lhs, rhs));
      }
    }
  }
}

TEST_CASE("braid_equal separates distinct generators") {
  CHECK_FALSE(braid_equal(bw(3, "s1"), bw(3, "s2")));
  CHECK(braid_equal(bw(4, "a(1,3)"), expand_band_alt(BandGenerator(1, 3), 4)));
  CHECK_THROWS_AS(braid_equal(bw(3, "s1"), bw(4, "s1")), std::invalid_argument);
}

TEST_CASE("disjoint or nested bands commute, crossing bands do not") {
  const int strands = 6;
  for (int i = 1; i <= strands; ++i) {
    for (int k = i + 1; k <= strands; ++k) {
      for (int j = 1; j <= strands; ++j) {
        for (int l = j + 1; l <= strands; ++l) {
          const bool share_endpoint = i == j || i == l || k == j || k == l;
          const bool disjoint = k < j || l < i;
          const bool nested = (i < j && l < k) || (j < i && k < l);
          if (share_endpoint || !(disjoint || nested)) continue;
          const BraidWord a = expand_band(BandGenerator(i, k), strands);
          const BraidWord b = expand_band(BandGenerator(j, l), strands);
          CAPTURE(i, k, j, l);
          CHECK(braid_equal(a * b, b * a));
        }
      }
    }
  }
  const BraidWord a13 = expand_band(BandGenerator(1, 3), 4);
  const BraidWord a24 = expand_band(BandGenerator(2, 4), 4);
  CHECK_FALSE(braid_equal(a13 * a24, a24 * a13));
}

TEST_CASE("braid_equal is consistent with compose and inverse") {
  Rng rng(202);
  for (int trial = 0; trial < 60; ++trial) {
    const int strands = testing::draw(rng, 3, 5);
    const BraidWord w = testing::random_braid_word(rng, strands, testing::draw(rng, 0, 12));

    // Insert a relator at a random spot: the result is a different word for
    // the same braid.
    const int i = testing::draw(rng, 1, strands - 2);
    const BraidWord relator_lhs(strands, std::vector<ArtinLetter>{{i, 1}, {i + 1, 1}, {i, 1}});
    const BraidWord relator_rhs(strands, std::vector<ArtinLetter>{{i + 1, 1}, {i, 1}, {i + 1, 1}});
    const BraidWord relator = relator_lhs * relator_rhs.inverse();
    const int cut = testing::draw(rng, 0, w.length());
    const BraidWord head(strands, w.letters().subspan(0, cut));
    const BraidWord tail(strands, w.letters().subspan(cut));
    const BraidWord w2 = head * relator * tail;

    CHECK(braid_equal(w, w));
    CHECK(braid_equal(w, w2));
    CHECK(braid_equal(w2, w));
    CHECK(braid_equal(w.inverse(), w2.inverse()));
    const BraidWord c = testing::random_braid_word(rng, strands, testing::draw(rng, 0, 6));
    CHECK(braid_equal(w * c, w2 * c));
    CHECK(braid_equal(c * w, c * w2));
  }
}

TEST_CASE("braid text round-trips") {
  CHECK(to_string(BraidWord(4)) == "1");
  CHECK(to_string(bw(4, "s1 s3^-1")) == "s1 s3^-1");
  CHECK(to_string(BandGenerator(2, 4, -1)) == "a(2,4)^-1");
  CHECK(bw(4, "a(1,3)") == expand_band(BandGenerator(1, 3), 4));
  CHECK(bw(4, "a(1,3)^-1") == expand_band(BandGenerator(1, 3), 4).inverse());
  CHECK(bw(3, "s1^3") == bw(3, "s1 s1 s1"));
  CHECK(bw(3, "1").is_identity_word());

  Rng rng(203);
  for (int trial = 0; trial < 100; ++trial) {
    const int strands = testing::draw(rng, 2, 5);
    const BraidWord w = testing::random_braid_word(rng, strands, testing::draw(rng, 0, 12));
    CHECK(parse_braid_word(to_string(w), strands) == w);
  }
}

TEST_CASE("braid parse errors") {
  CHECK_THROWS_AS(parse_braid_word("s3", 3), ParseError);
  CHECK_THROWS_AS(parse_braid_word("s0", 3), ParseError);
  CHECK_THROWS_AS(parse_braid_word("x1", 3), ParseError);
  CHECK_THROWS_AS(parse_braid_word("a(1,5)", 4), ParseError);
  CHECK_THROWS_AS(parse_braid_word("a(2,2)", 4), ParseError);
  CHECK_THROWS_AS(parse_braid_word("a(1 3)", 4), ParseError);
  try {
    parse_braid_word("s1 s9", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.position() == 3);
  }
}
