#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "domino/count2d.hpp"
#include "domino/errors.hpp"
#include "domino/region2d.hpp"

using namespace domino;

TEST_CASE("count_tilings on named regions") {
  CHECK(count_tilings(rect(3, 4)) == 11);
  CHECK(count_tilings(rect(3, 3)) == 0);
  CHECK(count_tilings(rect(2, 5)) == 8);
  CHECK(count_tilings(Region2D{}) == 1);
  CHECK(count_tilings(rect(8, 8)) == 12988816);
  CHECK(count_tilings(a_grid(2)) == 11);
  // Odd total but also a shape the DP must reject on its own.
  CHECK(count_tilings(from_ascii("#.#\n###")) == 0);
}

TEST_CASE("family geometry reproduces the seed values") {
  // Brute force is the reference here; the DP is checked against it below.
  CHECK(count_tilings_bruteforce(b_grid(0)) == 1);
  CHECK(count_tilings_bruteforce(b_grid(1)) == 4);
  CHECK(count_tilings_bruteforce(b_grid(2)) == 15);
  CHECK(count_tilings_bruteforce(c_grid(0)) == 2);
  CHECK(count_tilings_bruteforce(c_grid(1)) == 7);
  CHECK(count_tilings_bruteforce(c_grid(2)) == 26);
  CHECK(count_tilings_bruteforce(l2_region(1, 1)) == 2);
  CHECK(count_tilings_bruteforce(l2_region(3, 2)) == 7);
  CHECK(count_tilings_bruteforce(l3_region(1, 1)) == 11);
  CHECK(count_tilings_bruteforce(l3_region(2, 1)) == 41);
}

TEST_CASE("family agreement with printed table values") {
  const long a[] = {3, 11, 41, 153, 571, 2131, 7953, 29681, 110771, 413403, 1542841, 5757961};
  const long b[] = {1, 4, 15, 56, 209, 780, 2911, 10864, 40545, 151316, 564719, 2107560, 7865521};
  const long c[] = {2, 7, 26, 97, 362, 1351, 5042, 18817, 70226, 262087, 978122, 3650401, 13623482};
  for (int n = 1; n <= 12; ++n) CHECK(count_tilings(a_grid(n)) == a[n - 1]);
  for (int n = 0; n <= 12; ++n) {
    CHECK(count_tilings(b_grid(n)) == b[n]);
    CHECK(count_tilings(c_grid(n)) == c[n]);
  }
  long f0 = 1, f1 = 1;  // F(0), F(1)
  for (int n = 1; n <= 12; ++n) {
    CHECK(count_tilings(rect(2, n)) == f1);
    const long f2 = f0 + f1;
    f0 = f1;
    f1 = f2;
  }
}

TEST_CASE("profile DP matches brute force across the oracle corpus") {
  const auto corpus = testing::corpus_2d();
  REQUIRE(corpus.size() >= 300);
  for (const auto& [label, region] : corpus) {
    CAPTURE(label);
    CHECK(count_tilings(region) == count_tilings_bruteforce(region));
  }
}

TEST_CASE("counts are invariant under the symmetry group") {
  for (std::uint32_t seed = 0; seed < 60; ++seed) {
    const auto region = testing::random_connected_region(seed, 2 * (1 + seed % 14), 6, 9);
    const auto expected = count_tilings(region);
    for (auto op : {Transform::ReflectH, Transform::ReflectV, Transform::Rotate90, Transform::Transpose})
      CHECK(count_tilings(transform(region, op)) == expected);
  }
}

TEST_CASE("odd regions have no tilings") {
  for (std::uint32_t seed = 0; seed < 40; ++seed) {
    const auto region = testing::random_connected_region(seed, 2 * (seed % 12) + 1, 5, 8);
    REQUIRE(region.size() % 2 == 1);
    CHECK(count_tilings(region) == 0);
  }
}

TEST_CASE("disconnected regions multiply") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    // Two random blobs separated by an empty column.
    const auto left = testing::random_connected_region(rng(), 2 + rng() % 10, 4, 4);
    const auto right = testing::random_connected_region(rng(), 2 + rng() % 10, 4, 4);
    std::vector<Cell2> cells = left.cells();
    for (const auto& [r, c] : right.cells()) cells.push_back({r, c + left.width() + 1});
    const auto joined = Region2D::from_cells(cells);

    BigCount product = 1;
    for (const auto& part : connected_components(joined)) product *= count_tilings(part);
    CHECK(count_tilings(joined) == product);
    CHECK(count_tilings(joined) == count_tilings(left) * count_tilings(right));
  }
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(count_tilings(rect(33, 40)), LimitError);
  CHECK(count_tilings(rect(2, 40)) == 165580141);  // transposed, width 2
  CHECK_NOTHROW(count_tilings(rect(32, 1)));
  CHECK_THROWS_AS(count_tilings_bruteforce(rect(4, 8)), LimitError);
  CHECK_THROWS_AS(enumerate_tilings(rect(4, 8), 1), LimitError);
  CHECK_THROWS_AS(enumerate_tilings(rect(2, 2), 0), std::invalid_argument);
}

TEST_CASE("enumeration") {
  const auto single = enumerate_tilings(rect(2, 1), 10);
  REQUIRE(single.size() == 1);
  CHECK(single[0].dominoes == std::vector<Domino>{{{0, 0}, {1, 0}}});

  CHECK(enumerate_tilings(rect(3, 2), 10).size() == 3);
  CHECK(enumerate_tilings(rect(4, 4), 5).size() == 5);
  CHECK(enumerate_tilings(rect(3, 3), 5).empty());
  CHECK(enumerate_tilings(Region2D{}, 3).size() == 1);

  // Horizontal placements are tried first.
  const auto square = enumerate_tilings(rect(2, 2), 10);
  REQUIRE(square.size() == 2);
  CHECK(render_tiling_ascii(square[0]) == "<>\n<>");
  CHECK(render_tiling_ascii(square[1]) == "^^\nvv");

  for (const auto& [label, region] : testing::corpus_2d(20)) {
    CAPTURE(label);
    const auto all = enumerate_tilings(region, 1'000'000);
    CHECK(all.size() == count_tilings_bruteforce(region).get_ui());
    for (const auto& t : all) CHECK(is_tiling_of(t, region));
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] != all[i]);
  }
}

TEST_CASE("rendering round-trips") {
  const Tiling vertical{{{{0, 0}, {1, 0}}}};
  CHECK(render_tiling_ascii(vertical) == "^\nv");
  const Tiling horizontal{{{{0, 0}, {0, 1}}, {{1, 0}, {1, 1}}}};
  CHECK(render_tiling_ascii(horizontal) == "<>\n<>");

  for (const auto& t : enumerate_tilings(from_ascii(".###\n####\n###."), 100))
    CHECK(parse_tiling_ascii(render_tiling_ascii(t)) == t);
  for (const auto& t : enumerate_tilings(l3_region(1, 1), 100))
    CHECK(parse_tiling_ascii(render_tiling_ascii(t)) == t);

  CHECK_THROWS_AS(parse_tiling_ascii("<."), ParseError);
  CHECK_THROWS_AS(parse_tiling_ascii("^\n."), ParseError);
  CHECK_THROWS_AS(parse_tiling_ascii(">"), ParseError);
  CHECK_THROWS_AS(parse_tiling_ascii("#"), ParseError);
}

TEST_CASE("is_tiling_of rejects bad tilings") {
  const auto region = rect(2, 2);
  CHECK_FALSE(is_tiling_of(Tiling{{{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}}}, region));  // diagonal
  CHECK_FALSE(is_tiling_of(Tiling{{{{0, 0}, {0, 1}}}}, region));                    // incomplete
  CHECK_FALSE(is_tiling_of(Tiling{{{{0, 0}, {0, 1}}, {{0, 0}, {1, 0}}}}, region));  // overlap
}
