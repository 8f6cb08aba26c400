// Test-only brute-force oracles, independent of the library's rewriting and
// Garside paths: finite Coxeter groups as explicit permutation groups, plus
// word-level BFS equality.
#pragma once

#include <vector>

#include "garsidekit/coxeter.hpp"

namespace gktest {

/// A finite group generated by involutive permutations, enumerated by BFS.
/// Words explored in ShortLex order, so minWord is the ShortLex-least
/// reduced word of an element.
class PermModel {
 public:
  explicit PermModel(std::vector<std::vector<int>> gens);

  int size() const { return static_cast<int>(elems_.size()); }
  int identity() const { return 0; }
  int genCount() const { return static_cast<int>(gens_.size()); }
  int applyGen(int el, int g) const;       // el * gen
  int applyGenLeft(int el, int g) const;   // gen * el
  int mul(int a, int b) const;
  int inverse(int a) const;
  int length(int el) const { return static_cast<int>(minWord_[el].size()); }
  const gk::Word& minWord(int el) const { return minWord_[el]; }
  int evalWord(const gk::Word& w) const;

 private:
  std::vector<std::vector<int>> gens_;
  std::vector<std::vector<int>> elems_;  // element -> permutation
  std::vector<gk::Word> minWord_;
  int find(const std::vector<int>& p) const;
};

PermModel modelA(int n);          // symmetric group on n+1 points
PermModel modelB(int n);          // signed permutations, label 4 on the first edge
PermModel modelI2(int m);         // dihedral of order 2m

/// Exact equality of positive Artin words by BFS over braid moves only (the
/// positive monoid embeds, so this decides equality of positive words).
bool positiveWordsEqual(const gk::CoxeterGraph& g, const gk::Word& u,
                        const gk::Word& v, long long cap = 2'000'000);

/// Bounded triviality prover for signed words: relator insertions plus free
/// reduction. Returns true only on a found proof.
bool provedTrivial(const gk::CoxeterGraph& g, const gk::ArtinWord& w,
                   long long stateCap = 150'000, int slack = 6);

/// Random relator-preserving rewrite of a word (for well-definedness tests):
/// applies `steps` random relator insertions / free expansions.
gk::ArtinWord scrambleWord(const gk::CoxeterGraph& g, const gk::ArtinWord& w,
                           unsigned seed, int steps);

}  // namespace gktest
