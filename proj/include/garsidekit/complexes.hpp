#pragma once

#include <string>
#include <vector>

#include "garsidekit/oracle.hpp"
#include "garsidekit/parabolic.hpp"

namespace gk {
namespace complexes {

enum class Kind { Salvetti, Deligne, Artin, Clique };

Kind kindFromName(const std::string& name);
std::string kindName(Kind k);

/// One coset (rep, T). Salvetti elements live over the Coxeter group and use
/// coxRep; the other kinds carry Artin-word representatives (ShortLex-least
/// found within the ball).
struct PosetElement {
  ArtinWord rep;
  Word coxRep;
  GenSet subset = 0;
};

struct CosetPoset {
  Kind kind = Kind::Deligne;
  const CoxeterGraph* graph = nullptr;
  int radius = 0;
  std::vector<PosetElement> elems;
  std::vector<std::pair<int, int>> relation;  // strict pairs (below, above)
};

/// All cosets with representative inside the word-metric ball. Requires a
/// deciding word-problem oracle for coset dedup (spherical or FC); refuses
/// otherwise.
CosetPoset cosetPosetBall(const CoxeterGraph& g, Kind kind, int radius);

struct DerivedComplex {
  std::vector<std::vector<int>> simplices;        // every chain, as element ids
  std::vector<long long> countsByDim;             // countsByDim[k] = #k-simplices
};

DerivedComplex derive(const CosetPoset& p);

/// Adjacency in the complex of irreducible parabolic subgroups.
/// fcSpherical mode tests the center-commutation criterion; general mode
/// evaluates the three-way definition where it can be decided exactly.
Tri irreducibleParabolicAdjacent(const CoxeterGraph& g, const ParabolicPair& P,
                                 const ParabolicPair& Q, bool fcSphericalMode,
                                 int ballRadius);

struct TwoSkeletonCell {
  Gen s, t;
  int m;
  ArtinWord boundary;  // alternating relator, length 2m
};

struct TwoSkeleton {
  std::vector<Gen> loops;  // one per generator
  std::vector<TwoSkeletonCell> cells;
};

/// One vertex, a loop per generator, a 2-cell per finite label.
TwoSkeleton salvettiTwoSkeleton(const CoxeterGraph& g);

std::string posetToJson(const CosetPoset& p);
std::string posetToDot(const CosetPoset& p);
std::string derivedToJson(const CosetPoset& p, const DerivedComplex& d);
std::string twoSkeletonToJson(const CoxeterGraph& g, const TwoSkeleton& sk);

}  // namespace complexes
}  // namespace gk
