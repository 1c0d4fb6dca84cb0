#include "rbd/lattice.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>

using namespace rbd;

namespace {

using Chain = std::vector<std::vector<Int>>;

IntForm make_form(std::vector<std::vector<long long>> rows) {
  std::vector<std::vector<Int>> m;
  for (auto& r : rows) m.emplace_back(r.begin(), r.end());
  return IntForm(std::move(m));
}

}  // namespace

TEST_CASE("form construction") {
  CHECK_THROWS_AS(IntForm(std::vector<std::vector<Int>>{}), InvalidInput);
  CHECK_THROWS_AS(make_form({{1, 2}, {2}}), InvalidInput);
  CHECK_THROWS_AS(make_form({{1, 2}, {3, 1}}), InvalidInput);

  IntForm p = plumbing_form({2, 4, 3, 3, 2});
  IntForm want = make_form({{-2, 1, 0, 0, 0},
                            {1, -4, 1, 0, 0},
                            {0, 1, -3, 1, 0},
                            {0, 0, 1, -3, 1},
                            {0, 0, 0, 1, -2}});
  CHECK(p == want);
  CHECK(p.dot({1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}) == 1);
  CHECK(p.dot({0, 1, 1, 0, 0}, {0, 1, 1, 0, 0}) == -5);
  CHECK_THROWS_AS(plumbing_form({}), InvalidInput);
  CHECK_THROWS_AS(plumbing_form({2, 1, 2}), InvalidInput);
}

TEST_CASE("parity and definiteness") {
  CHECK(is_even(plumbing_form({2, 2, 2})));
  CHECK(is_even(plumbing_form({4, 2, 4})));
  CHECK_FALSE(is_even(plumbing_form({2, 4, 3, 3, 2})));
  CHECK_FALSE(is_even(*builtin_form("form_2132221")));

  Tuple w;
  auto sweep = [&](auto&& self, int len) -> void {
    if (len == 0) {
      if (!w.empty()) CHECK(is_negative_definite(plumbing_form(w)));
      return;
    }
    for (Entry e = 2; e <= 4; ++e) {
      w.push_back(e);
      self(self, len - 1);
      w.pop_back();
    }
  };
  for (int len = 1; len <= 4; ++len) sweep(sweep, len);
  CHECK_FALSE(is_negative_definite(make_form({{-1, 2}, {2, -1}})));
  CHECK_FALSE(is_negative_definite(make_form({{2, 0}, {0, 2}})));
  for (const auto& [name, f] : builtin_forms())
    CHECK(is_negative_definite(f));
}

TEST_CASE("short vectors match a box scan") {
  auto check_form = [](const IntForm& f, long long cmax) {
    auto table = testutil::box_square_table(f, Int(cmax));
    for (Int c = -1; c >= -Int(cmax); --c) {
      auto got = vectors_of_square(f, c);
      auto it = table.find(c);
      if (it == table.end())
        REQUIRE(got.empty());
      else
        REQUIRE(got == it->second);
    }
  };
  for (const auto& [name, f] : builtin_forms()) check_form(f, 10);
  check_form(plumbing_form({2, 4, 3, 3, 2}), 8);
  check_form(plumbing_form({4, 2, 4}), 10);
}

TEST_CASE("short vectors of a plumbing") {
  IntForm p = plumbing_form({2, 4, 3, 3, 2});
  CHECK(vectors_of_square(p, -2) ==
        Chain{{0, 0, 0, 0, 1}, {1, 0, 0, 0, 0}});
  CHECK(vectors_of_square(p, -3) ==
        Chain{{0, 0, 0, 1, 0}, {0, 0, 0, 1, 1}, {0, 0, 1, 0, 0}});
  CHECK(vectors_of_square(p, -5).size() == 10);

  IntForm f = *builtin_form("form_32132");
  CHECK(vectors_of_square(f, -2) == Chain{{1, 0}});
  CHECK(vectors_of_square(f, -5) == Chain{{0, 1}, {1, 1}});

  CHECK(vectors_of_square(*builtin_form("form_2132221"), -5).empty());
  CHECK(vectors_of_square(*builtin_form("form_1222312"), -5).empty());
  CHECK(vectors_of_square(*builtin_form("form_1231321"), -2).empty());

  CHECK_THROWS_AS(vectors_of_square(p, 0), InvalidInput);
  CHECK_THROWS_AS(vectors_of_square(p, 2), InvalidInput);
  CHECK_THROWS_AS(vectors_of_square(make_form({{-1, 2}, {2, -1}}), -2),
                  NotNegativeDefinite);
}

TEST_CASE("adjunction evaluations") {
  CHECK(adjunction_c1({2, 4, 3, 3, 2}) == std::vector<Int>{0, -2, -1, -1, 0});
  CHECK(adjunction_c1({4, 2, 4}) == std::vector<Int>{-2, 0, -2});
  CHECK(c1_eval({0, -2, -1, -1, 0}, {0, 1, 1, 0, 0}) == -3);
}

TEST_CASE("chain embeddings up to lattice automorphism") {
  IntForm p = plumbing_form({2, 4, 3, 3, 2});
  auto c1 = adjunction_c1({2, 4, 3, 3, 2});
  auto chains = chain_embeddings(p, {-2, -5, -3}, c1);
  std::vector<Chain> want{{{1, 0, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 0, 1, 0}},
                          {{1, 0, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 0, 1, 1}}};
  REQUIRE(chains == want);
  Tuple squares{-2, -5, -3};
  for (const Chain& ch : chains) {
    for (std::size_t i = 0; i < ch.size(); ++i) {
      CHECK(p.dot(ch[i], ch[i]) == Int(squares[i]));
      CHECK(c1_eval(c1, ch[i]) == 2 + Int(squares[i]));
      for (std::size_t j = 0; j < i; ++j)
        CHECK(p.dot(ch[j], ch[i]) == (j + 1 == i ? 1 : 0));
    }
  }
  // Without the adjunction constraint more chains appear.
  CHECK(chain_embeddings(p, {-2, -5, -3}).size() >= chains.size());

  CHECK(chain_embeddings(*builtin_form("form_32132"), {-2, -5}) ==
        std::vector<Chain>{{{1, 0}, {0, 1}}});
  CHECK(chain_embeddings(*builtin_form("form_31313"), {-2, -5}).empty());
  CHECK(chain_embeddings(plumbing_form({4, 2, 4}), {-2, -5}).empty());

  // Chains of two (-2)-classes in the cube plumbing: one per triple of
  // mutually linked short vectors.
  CHECK(chain_embeddings(plumbing_form({2, 2, 2}), {-2, -2}) ==
        std::vector<Chain>{{{0, 0, 1}, {0, 1, 0}},
                           {{0, 0, 1}, {1, 1, 0}},
                           {{0, 1, 0}, {1, 0, 0}},
                           {{0, 1, 1}, {1, 0, 0}}});
  CHECK(chain_embeddings(plumbing_form({2, 2, 2}), {-2}).size() == 6);

  auto empty = chain_embeddings(p, {});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());

  CHECK_THROWS_AS(chain_embeddings(p, {-2, 0}), InvalidInput);
  CHECK_THROWS_AS(chain_embeddings(p, {-2}, std::vector<Int>{0, 0}),
                  InvalidInput);
  CHECK_THROWS_AS(chain_embeddings(make_form({{-1, 2}, {2, -1}}), {-2}),
                  NotNegativeDefinite);
}

TEST_CASE("form fixtures round trip") {
  std::string dir = RBD_FIXTURE_DIR;
  for (const auto& [name, f] : builtin_forms())
    CHECK(read_form_file(dir + "/" + name + ".txt") == f);
  CHECK_THROWS_AS(read_form_file(dir + "/no_such_form.txt"), InvalidInput);

  std::istringstream bad("1 x\n");
  CHECK_THROWS_AS(read_form(bad), InvalidInput);
  std::istringstream ragged("1 2\n3\n");
  CHECK_THROWS_AS(read_form(ragged), InvalidInput);
}
