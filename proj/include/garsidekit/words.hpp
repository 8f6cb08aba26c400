#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gk {

/// Generator index into the ambient graph's declaration order.
using Gen = int;

/// Positive word: a sequence of generator indices.
using Word = std::vector<Gen>;

/// Subset of generators as a bitmask (rank <= 31).
using GenSet = std::uint32_t;

inline bool setContains(GenSet s, Gen g) { return (s >> g) & 1u; }
inline GenSet setAdd(GenSet s, Gen g) { return s | (GenSet(1) << g); }
inline bool setSubset(GenSet a, GenSet b) { return (a & ~b) == 0; }

inline std::vector<Gen> setToList(GenSet s) {
  std::vector<Gen> out;
  for (Gen g = 0; g < 32; ++g)
    if (setContains(s, g)) out.push_back(g);
  return out;
}

inline GenSet listToSet(const std::vector<Gen>& gens) {
  GenSet s = 0;
  for (Gen g : gens) s = setAdd(s, g);
  return s;
}

/// One signed letter of an Artin word.
struct Letter {
  Gen gen;
  int sign;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

class CoxeterGraph;

/// Signed generator sequence; the universal exchange representation.
struct ArtinWord {
  std::vector<Letter> letters;
  const CoxeterGraph* ambient = nullptr;

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }

  ArtinWord inverse() const {
    ArtinWord r;
    r.ambient = ambient;
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      r.letters.push_back({it->gen, -it->sign});
    return r;
  }

  ArtinWord& append(const ArtinWord& w) {
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
    return *this;
  }

  ArtinWord concat(const ArtinWord& w) const {
    ArtinWord r = *this;
    r.append(w);
    return r;
  }

  /// Cancel adjacent s s^-1 pairs until stable.
  ArtinWord freeReduced() const {
    ArtinWord r;
    r.ambient = ambient;
    for (const Letter& l : letters) {
      if (!r.letters.empty() && r.letters.back().gen == l.gen &&
          r.letters.back().sign == -l.sign)
        r.letters.pop_back();
      else
        r.letters.push_back(l);
    }
    return r;
  }

  /// Sum of letter signs; conjugation invariant.
  long long exponentSum() const {
    long long s = 0;
    for (const Letter& l : letters) s += l.sign;
    return s;
  }

  bool operator==(const ArtinWord& o) const { return letters == o.letters; }
};

struct WordHash {
  size_t operator()(const Word& w) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Gen g : w) {
      h ^= static_cast<std::uint64_t>(g) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

/// Bad arguments: unknown generator, ambient mismatch, malformed input.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configured resource cap was hit (orbit, lattice, ball or iteration).
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Resource caps; every potentially unbounded enumeration checks one.
/// GARSIDEKIT_CAP=N overrides all of them with N.
struct Caps {
  long long orbitMembers = 1'000'000;   // Coxeter rewriting orbit size
  long long latticeOrder = 2'000;       // |W_X| allowed for Garside tables
  long long ballElements = 2'000'000;   // ball / poset enumeration size
  long long iterations = 100'000;       // swap-circuit and pinch loops
  static Caps fromEnv();
};

}  // namespace gk
