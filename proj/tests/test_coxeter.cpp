#include <atomic>
#include <random>
#include <thread>

#include "doctest.h"
#include "garsidekit/classify.hpp"
#include "garsidekit/coxeter.hpp"
#include "models.hpp"

using namespace gk;
using gktest::PermModel;

namespace {

std::unique_ptr<CoxeterGraph> a2() {
  return CoxeterGraph::parse("generators: s t\ndefault: 2\ns t 3\n");
}
std::unique_ptr<CoxeterGraph> a3() {
  return CoxeterGraph::parse("generators: a b c\ndefault: 2\na b 3\nb c 3\n");
}
std::unique_ptr<CoxeterGraph> b3() {
  return CoxeterGraph::parse("generators: a b c\ndefault: 2\na b 4\nb c 3\n");
}

// Every element of the model, as its ShortLex-least reduced word.
std::vector<Word> allWords(const PermModel& m) {
  std::vector<Word> out;
  for (int i = 0; i < m.size(); ++i) out.push_back(m.minWord(i));
  return out;
}

}  // namespace

TEST_CASE("graph parsing and validation") {
  auto g = CoxeterGraph::parse(
      "# comment\ngenerators: a b c\ndefault: inf\na b 3\nb c 2\n");
  CHECK(g->rank() == 3);
  CHECK(g->label(0, 1) == 3);
  CHECK(g->label(1, 2) == 2);
  CHECK(g->label(0, 2) == kInf);
  CHECK_THROWS_AS(g->genByName("z"), UsageError);
  CHECK_THROWS_AS(CoxeterGraph::parse("generators: a b\na b 3\n"), UsageError);
  CHECK_THROWS_AS(CoxeterGraph::parse("default: 2\n"), UsageError);
  CHECK_THROWS_AS(CoxeterGraph::parse("generators: a a\ndefault: 2\n"), UsageError);
}

TEST_CASE("reduce: involution, braid orbit, derived example") {
  auto g = a2();
  CHECK(cox::reduce(*g, {0, 0}).word.empty());
  CHECK(cox::reduce(*g, {0, 1, 0}).word == Word{0, 1, 0});  // sts < tst
  // stst -> ts, frozen from the 6-element permutation table
  PermModel m = gktest::modelI2(3);
  Word expect = m.minWord(m.evalWord({0, 1, 0, 1}));
  CHECK(expect == Word{1, 0});
  CHECK(cox::reduce(*g, {0, 1, 0, 1}).word == expect);
  // idempotence
  CHECK(cox::reduce(*g, cox::reduce(*g, {0, 1, 0, 1}).word).word == expect);
}

TEST_CASE("reduce agrees with the permutation models everywhere") {
  struct Case {
    std::unique_ptr<CoxeterGraph> g;
    PermModel m;
  };
  std::vector<Case> cases;
  cases.push_back({a2(), gktest::modelA(2)});
  cases.push_back({a3(), gktest::modelA(3)});
  cases.push_back({b3(), gktest::modelB(3)});
  cases.push_back({CoxeterGraph::parse("generators: s t\ndefault: 2\ns t 4\n"),
                   gktest::modelI2(4)});
  for (auto& c : cases) {
    REQUIRE(c.m.size() > 0);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      Word w;
      int len = static_cast<int>(rng() % 9);
      for (int i = 0; i < len; ++i) w.push_back(static_cast<Gen>(rng() % c.g->rank()));
      CHECK(cox::reduce(*c.g, w).word == c.m.minWord(c.m.evalWord(w)));
    }
  }
}

TEST_CASE("cox_mul / cox_eq") {
  auto g = a2();
  CoxeterElement st = cox::reduce(*g, {0, 1});
  CHECK(cox::mul(st, cox::inverse(st)).isIdentity());
  PermModel m = gktest::modelA(2);
  CHECK(cox::mul(st, st).word == m.minWord(m.evalWord({0, 1, 0, 1})));
  CHECK(cox::eq(cox::reduce(*g, {0, 1, 0}), cox::reduce(*g, {1, 0, 1})));
  auto h = a3();
  CHECK_THROWS_AS(cox::mul(st, cox::identity(*h)), UsageError);
}

TEST_CASE("descents") {
  auto g = a2();
  auto [l0, r0] = cox::descents(cox::identity(*g));
  CHECK(l0 == 0);
  CHECK(r0 == 0);
  auto [l1, r1] = cox::descents(cox::reduce(*g, {0}));
  CHECK(l1 == setAdd(0, 0));
  CHECK(r1 == setAdd(0, 0));
  auto [l2, r2] = cox::descents(cox::reduce(*g, {0, 1}));
  CHECK(l2 == setAdd(0, 0));
  CHECK(r2 == setAdd(0, 1));
}

TEST_CASE("length parity under right multiplication, exhaustively") {
  struct Case {
    std::unique_ptr<CoxeterGraph> g;
    PermModel m;
  };
  std::vector<Case> cases;
  cases.push_back({a2(), gktest::modelA(2)});
  cases.push_back({CoxeterGraph::parse("generators: s t\ndefault: 2\ns t 4\n"),
                   gktest::modelI2(4)});
  cases.push_back({a3(), gktest::modelA(3)});
  for (auto& c : cases) {
    for (const Word& w : allWords(c.m)) {
      CoxeterElement u = cox::reduce(*c.g, w);
      for (Gen s = 0; s < c.g->rank(); ++s) {
        Word ws = w;
        ws.push_back(s);
        int d = cox::reduce(*c.g, ws).length() - u.length();
        CHECK((d == 1 || d == -1));
      }
    }
  }
}

TEST_CASE("coset split: examples and exhaustive checks up to order 48") {
  auto g = a2();
  // u in W_X -> (u, 1)
  {
    auto [u0, u1] = cox::cosetSplit(cox::reduce(*g, {0}), setAdd(0, 0));
    CHECK(u0.word == Word{0});
    CHECK(u1.isIdentity());
  }
  {
    auto [u0, u1] = cox::cosetSplit(cox::identity(*g), setAdd(0, 0));
    CHECK(u0.isIdentity());
    CHECK(u1.isIdentity());
  }
  {
    // X={s}, u=st -> (s, t), frozen by checking all factorizations in the
    // 6-element group
    PermModel m = gktest::modelA(2);
    int target = m.evalWord({0, 1});
    std::vector<std::pair<int, int>> valid;
    for (int x : {m.identity(), m.evalWord({0})})
      for (int u1 = 0; u1 < m.size(); ++u1)
        if (m.mul(x, u1) == target &&
            m.length(x) + m.length(u1) == m.length(target) &&
            m.length(m.mul(m.evalWord({0}), u1)) > m.length(u1))
          valid.push_back({x, u1});
    REQUIRE(valid.size() == 1);
    CHECK(valid[0] == std::pair<int, int>{m.evalWord({0}), m.evalWord({1})});
    auto [u0, u1] = cox::cosetSplit(cox::reduce(*g, {0, 1}), setAdd(0, 0));
    CHECK(u0.word == Word{0});
    CHECK(u1.word == Word{1});
  }

  struct Case {
    std::unique_ptr<CoxeterGraph> g;
    PermModel m;
  };
  std::vector<Case> cases;
  cases.push_back({a3(), gktest::modelA(3)});
  cases.push_back({b3(), gktest::modelB(3)});
  for (auto& c : cases) {
    GenSet full = c.g->fullSet();
    for (const Word& w : allWords(c.m)) {
      CoxeterElement u = cox::reduce(*c.g, w);
      for (GenSet X = 0; X <= full; ++X) {
        auto [u0, u1] = cox::cosetSplit(u, X);
        // reassembly in the independent model
        CHECK(c.m.mul(c.m.evalWord(u0.word), c.m.evalWord(u1.word)) ==
              c.m.evalWord(w));
        CHECK(u0.length() + u1.length() == u.length());
        for (Gen letter : u0.word) CHECK(setContains(X, letter));
        for (Gen x : setToList(X)) {
          Word xs{x};
          xs.insert(xs.end(), u1.word.begin(), u1.word.end());
          CHECK(cox::reduce(*c.g, xs).length() > u1.length());
        }
      }
    }
  }
}

TEST_CASE("spherical classification") {
  auto check1 = [](const std::string& text, const std::string& name, int rank,
                   long long k) {
    auto g = CoxeterGraph::parse(text);
    auto r = classifySpherical(*g, g->fullSet());
    REQUIRE(r.has_value());
    REQUIRE(r->size() == 1);
    CHECK((*r)[0].name == name);
    CHECK((*r)[0].rank == rank);
    CHECK((*r)[0].kDelta == k);
  };
  check1("generators: a\ndefault: 2\n", "A1", 1, 1);
  check1("generators: a b\ndefault: 2\na b 3\n", "A2", 2, 3);
  check1("generators: a b c\ndefault: 2\na b 3\nb c 3\n", "A3", 3, 4);
  check1("generators: a b c d e\ndefault: 2\na b 3\nb c 3\nc d 3\nd e 3\n", "A5", 5,
         6);
  check1("generators: a b\ndefault: 2\na b 4\n", "B2", 2, 2);
  check1("generators: a b c\ndefault: 2\na b 4\nb c 3\n", "B3", 3, 3);
  check1("generators: a b c d\ndefault: 2\na b 4\nb c 3\nc d 3\n", "B4", 4, 4);
  check1("generators: a b c d\ndefault: 2\na b 3\nb c 3\nb d 3\n", "D4", 4, 3);
  check1("generators: a b c d e\ndefault: 2\na b 3\nb c 3\nc d 3\nc e 3\n", "D5", 5,
         8);
  check1(
      "generators: a b c d e f\ndefault: 2\na b 3\nb c 3\nc d 3\nd e 3\nc f 3\n",
      "E6", 6, 12);
  check1(
      "generators: a b c d e f g\ndefault: 2\na b 3\nb c 3\nc d 3\nd e 3\ne f 3\nd "
      "g 3\n",
      "E7", 7, 9);
  check1(
      "generators: a b c d e f g h\ndefault: 2\na b 3\nb c 3\nc d 3\nd e 3\ne f "
      "3\nf g 3\ne h 3\n",
      "E8", 8, 15);
  check1("generators: a b c d\ndefault: 2\na b 3\nb c 4\nc d 3\n", "F4", 4, 6);
  check1("generators: a b c\ndefault: 2\na b 3\nb c 5\n", "H3", 3, 5);
  check1("generators: a b c d\ndefault: 2\na b 3\nb c 3\nc d 5\n", "H4", 4, 15);
  check1("generators: a b\ndefault: 2\na b 5\n", "I2(5)", 2, 5);
  check1("generators: a b\ndefault: 2\na b 6\n", "I2(6)", 2, 3);
  check1("generators: a b\ndefault: 2\na b 8\n", "I2(8)", 2, 4);

  // reducible and empty subsets
  auto g = a3();
  auto parts = classifySpherical(*g, 0b101);
  REQUIRE(parts.has_value());
  CHECK(parts->size() == 2);
  CHECK(classifySpherical(*g, 0)->empty());

  // non-spherical: infinite label, affine triangle, infinite dihedral
  auto inf = CoxeterGraph::parse("generators: a b\ndefault: inf\n");
  CHECK(!classifySpherical(*inf, inf->fullSet()).has_value());
  auto aff = CoxeterGraph::parse("generators: a b c\ndefault: 3\n");
  CHECK(!classifySpherical(*aff, aff->fullSet()).has_value());
  auto h336 = CoxeterGraph::parse("generators: a b c\ndefault: 2\na b 6\nb c 6\n");
  CHECK(!classifySpherical(*h336, h336->fullSet()).has_value());
}

TEST_CASE("I2(6) rank is 2") {
  auto g = CoxeterGraph::parse("generators: a b\ndefault: 2\na b 6\n");
  auto r = classifySpherical(*g, g->fullSet());
  REQUIRE(r.has_value());
  CHECK((*r)[0].rank == 2);
}

TEST_CASE("shared graph survives concurrent reduction") {
  auto g = b3();
  std::vector<std::thread> threads;
  std::atomic<bool> ok{true};
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      std::mt19937 rng(100 + t);
      for (int i = 0; i < 200; ++i) {
        Word w;
        int len = static_cast<int>(rng() % 10);
        for (int k = 0; k < len; ++k) w.push_back(static_cast<Gen>(rng() % 3));
        CoxeterElement a = cox::reduce(*g, w);
        CoxeterElement b = cox::reduce(*g, w);
        if (!(a == b)) ok = false;
      }
    });
  for (auto& th : threads) th.join();
  CHECK(ok.load());
}

TEST_CASE("theta is a homomorphism on random words") {
  auto g = b3();
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    ArtinWord w1, w2;
    w1.ambient = g.get();
    w2.ambient = g.get();
    int l1 = static_cast<int>(rng() % 13), l2 = static_cast<int>(rng() % 13);
    for (int k = 0; k < l1; ++k)
      w1.letters.push_back({static_cast<Gen>(rng() % 3), rng() % 2 ? 1 : -1});
    for (int k = 0; k < l2; ++k)
      w2.letters.push_back({static_cast<Gen>(rng() % 3), rng() % 2 ? 1 : -1});
    CHECK(cox::eq(cox::theta(w1.concat(w2)),
                  cox::mul(cox::theta(w1), cox::theta(w2))));
  }
  // sign-forgetting examples
  CHECK(cox::theta(g->parseWord("a a^-1")).isIdentity());
  CHECK(cox::theta(g->parseWord("a^-1")).word == Word{0});
}
