#include <random>

#include "doctest.h"
#include "garsidekit/fc.hpp"
#include "garsidekit/garside.hpp"

using namespace gk;

namespace {

// two braid pieces glued over the middle generator
std::unique_ptr<CoxeterGraph> path3() {
  return CoxeterGraph::parse("generators: a b c\ndefault: 3\na c inf\n");
}

// free product of Z and a braid group on three strands
std::unique_ptr<CoxeterGraph> figure3() {
  return CoxeterGraph::parse(
      "generators: z s1 s2\ndefault: inf\ns1 s2 3\n");
}

ArtinWord wordOf(const CoxeterGraph& g, std::vector<Letter> ls) {
  ArtinWord w;
  w.ambient = &g;
  w.letters = std::move(ls);
  return w;
}

}  // namespace

TEST_CASE("FC detection") {
  auto g = path3();
  CHECK(fc::isFcType(*g, g->fullSet()));
  auto sph = CoxeterGraph::parse("generators: a b\ndefault: 2\na b 3\n");
  CHECK(fc::isFcType(*sph, sph->fullSet()));
  // the (6,8,2) triangle breaks FC
  auto notFc = CoxeterGraph::parse(
      "generators: c d f\ndefault: 2\nc d 6\nd f 8\n");
  CHECK(fc::isFcType(*notFc, notFc->fullSet()) == false);
}

TEST_CASE("factorize: leaf, free product, single infinite pair") {
  auto sph = CoxeterGraph::parse("generators: a b\ndefault: 2\na b 3\n");
  auto leaf = fc::factorize(*sph, sph->fullSet());
  CHECK(leaf->leaf);

  auto f3 = figure3();
  auto tree = fc::factorize(*f3, f3->fullSet());
  REQUIRE(!tree->leaf);
  CHECK(tree->K == 0);
  CHECK(((tree->I == setAdd(0, 0) && tree->J == 0b110) ||
         (tree->J == setAdd(0, 0) && tree->I == 0b110)));
  CHECK(tree->left->leaf);
  CHECK(tree->right->leaf);

  auto g = path3();
  auto t = fc::factorize(*g, g->fullSet());
  REQUIRE(!t->leaf);
  CHECK(t->I == 0b011);  // {a,b}
  CHECK(t->J == 0b110);  // {b,c}
  CHECK(t->K == 0b010);  // {b}
  CHECK(t->left->leaf);
  CHECK(t->right->leaf);
  CHECK(g->label(t->removed.first, t->removed.second) == kInf);
  CHECK(!setContains(t->I, t->removed.first));
  CHECK(!setContains(t->J, t->removed.second));

  auto odd = CoxeterGraph::parse("generators: c d f\ndefault: 2\nc d 6\nd f 8\n");
  CHECK_THROWS_AS(fc::factorize(*odd, odd->fullSet()), UsageError);
}

TEST_CASE("decomposition serializes to nested records") {
  auto g = path3();
  auto tree = fc::factorize(*g, g->fullSet());
  std::string js = fc::decompositionToJson(*g, *tree);
  CHECK(js.find("\"I\"") != std::string::npos);
  CHECK(js.find("\"K\"") != std::string::npos);
  CHECK(js.find("\"leaf\"") != std::string::npos);
}

TEST_CASE("fc word problem: basics") {
  auto g = path3();
  GenSet full = g->fullSet();
  CHECK(fc::wordTrivial(g->parseWord(""), full));
  // a defining relator of a leaf
  CHECK(fc::wordTrivial(g->parseWord("a b a b^-1 a^-1 b^-1"), full));
  CHECK(fc::wordTrivial(g->parseWord("b c b c^-1 b^-1 c^-1"), full));
  // no relation across the infinite pair
  CHECK(!fc::wordTrivial(g->parseWord("a c"), full));
  CHECK(!fc::wordTrivial(g->parseWord("a c a^-1 c^-1"), full));
  // cross-syllable collapse: b is in the edge group
  CHECK(fc::wordTrivial(g->parseWord("a b a^-1 a b^-1 a^-1"), full));
  CHECK(fc::wordTrivial(g->parseWord("c b c^-1 c b^-1 c^-1"), full));
}

TEST_CASE("fc word problem agrees with Garside on leaf words") {
  auto g = path3();
  GenSet full = g->fullSet();
  std::mt19937 rng(79);
  for (int i = 0; i < 120; ++i) {
    GenSet leaf = (i % 2) ? GenSet(0b011) : GenSet(0b110);
    std::vector<Gen> gens = setToList(leaf);
    ArtinWord w;
    w.ambient = g.get();
    int len = static_cast<int>(rng() % 11);
    for (int k = 0; k < len; ++k)
      w.letters.push_back({gens[rng() % 2], rng() % 2 ? 1 : -1});
    CHECK(fc::wordTrivial(w, full) == garside::normalize(w, leaf).isIdentity());
  }
}

TEST_CASE("syllable count is strategy independent") {
  auto g = path3();
  GenSet full = g->fullSet();
  std::mt19937 rng(83);
  for (int i = 0; i < 60; ++i) {
    ArtinWord w;
    w.ambient = g.get();
    int len = static_cast<int>(rng() % 11);
    for (int k = 0; k < len; ++k)
      w.letters.push_back({static_cast<Gen>(rng() % 3), rng() % 2 ? 1 : -1});
    CHECK(fc::reducedSyllableCount(w, full, false) ==
          fc::reducedSyllableCount(w, full, true));
  }
}

TEST_CASE("membership and rewriting into the edge group") {
  auto g = path3();
  GenSet full = g->fullSet();
  GenSet K = 0b010;
  ArtinWord w = g->parseWord("a b a b^-1 a^-1");  // = b by the braid relation
  CHECK(fc::memberStandardFc(w, full, K));
  ArtinWord kw = fc::rewriteInto(w, full, K);
  for (const Letter& l : kw.letters) CHECK(l.gen == 1);
  CHECK(fc::wordsEqual(w, kw, full));
  // the same trick on the other side, and a cross-side product
  ArtinWord w2 = g->parseWord("c b c b^-1 c^-1");
  CHECK(fc::memberStandardFc(w2, full, K));
  CHECK(fc::memberStandardFc(w.concat(w2), full, K));
  CHECK(!fc::memberStandardFc(g->parseWord("a"), full, K));
}

TEST_CASE("tree vertices and geodesics") {
  auto g = path3();
  GenSet full = g->fullSet();
  GenSet I = 0b011, J = 0b110;
  ArtinWord e = g->parseWord("");

  fc::TreeVertex u{e, I};
  CHECK(fc::vertexEq(*g, full, u, u));
  // stabilizer sanity: words over I fix 1*A_I
  fc::TreeVertex u2{g->parseWord("a b a"), I};
  CHECK(fc::vertexEq(*g, full, u, u2));
  fc::TreeVertex v{e, J};
  CHECK(!fc::vertexEq(*g, full, u, v));

  auto p0 = fc::geodesic(*g, full, u, u2);
  CHECK(p0.vertices.size() == 1);
  CHECK(p0.edgeReps.empty());

  auto p1 = fc::geodesic(*g, full, u, v);
  CHECK(p1.vertices.size() == 2);
  CHECK(p1.edgeReps.size() == 1);

  // free product: s has no A_I part, the path crosses through s A_J
  auto f3 = figure3();
  GenSet f3full = f3->fullSet();
  GenSet zI = setAdd(0, 0), sJ = 0b110;
  ArtinWord ee = f3->parseWord("");
  fc::TreeVertex a{ee, sJ};
  fc::TreeVertex b{f3->parseWord("z"), sJ};
  auto p2 = fc::geodesic(*f3, f3full, a, b);
  CHECK(p2.vertices.size() == 3);
  CHECK(p2.edgeReps.size() == 2);
  (void)zI;
}

TEST_CASE("fc intersect: leaf case, free product, edge collapse") {
  auto g = path3();
  GenSet full = g->fullSet();
  ArtinWord e = g->parseWord("");

  // both inside one leaf
  {
    ParabolicPair P{g->parseWord("a"), setAdd(0, 1)};
    ParabolicPair Q{e, 0b011};
    auto res = fc::intersectSphericalAny(*g, full, P, Q, 4);
    CHECK(res.mode == fc::CertMode::Exact);
    CHECK(res.subgroup.base == setAdd(0, 1));
  }

  // X and the edge group are disjoint: trivial
  {
    ParabolicPair P{e, setAdd(0, 0)};  // A_{a}
    ParabolicPair Q{e, setAdd(0, 2)};  // A_{c}
    auto res = fc::intersectSphericalAny(*g, full, P, Q, 4);
    CHECK(res.subgroup.base == 0);
  }

  // shared edge subgroup: A_{a,b} cap A_{b,c} = A_{b}
  {
    ParabolicPair P{e, 0b011};
    ParabolicPair Q{e, 0b110};
    auto res = fc::intersectSphericalAny(*g, full, P, Q, 4);
    CHECK(res.subgroup.base == 0b010);
  }

  // P = Q exactly
  {
    ParabolicPair P{g->parseWord("a b"), 0b011};
    auto res = fc::intersectSphericalAny(*g, full, P, P, 4);
    CHECK(res.mode == fc::CertMode::Exact);
    CHECK(res.subgroup.base == P.base);
  }

  // free product: left factor against right factor
  {
    auto f3 = figure3();
    ArtinWord fe = f3->parseWord("");
    ParabolicPair P{fe, setAdd(0, 0)};        // Z side
    ParabolicPair Q{f3->parseWord("z"), 0b110};  // conjugated braid side
    auto res = fc::intersectSphericalAny(*f3, f3->fullSet(), P, Q, 4);
    CHECK(res.subgroup.base == 0);
  }
}

TEST_CASE("fc intersect: case 2, {s,t} inside the other base") {
  auto g = path3();
  GenSet full = g->fullSet();
  ArtinWord e = g->parseWord("");
  // Q is the whole group seen as h A_S h^-1 is not allowed (improper); use a
  // four-generator FC graph where Y really contains the split pair.
  auto g4 = CoxeterGraph::parse(
      "generators: a b c d\ndefault: 2\na b 3\nb c inf\nc d 3\nb d 3\na c 2\na d 2\n");
  REQUIRE(fc::isFcType(*g4, g4->fullSet()));
  // split pair is (b, c); Y = {b, c, d} contains it, X = {a} is spherical
  ParabolicPair P{g4->parseWord(""), setAdd(0, 0)};
  GenSet Y = 0b1110;
  ParabolicPair Q{g4->parseWord(""), Y};
  auto res = fc::intersectSphericalAny(*g4, g4->fullSet(), P, Q, 4);
  // A_{a} cap A_{b,c,d} = trivial (a commutes across but is not inside)
  CHECK(res.subgroup.base == 0);
  (void)e;
  (void)full;
}
