#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "garsidekit/words.hpp"

namespace gk {

/// Label value for m_{s,t} = infinity.
constexpr int kInf = 0;

struct GarsideTable;

/// Generator set plus label matrix; the single source of truth for a group.
/// Labels are symmetric, m_{s,s} is never stored or queried. Immutable after
/// construction; the rewriting and Garside memo tables it carries are
/// internally synchronized.
class CoxeterGraph {
 public:
  CoxeterGraph(std::vector<std::string> names,
               std::map<std::pair<Gen, Gen>, int> labels, Caps caps = Caps::fromEnv());
  ~CoxeterGraph();

  CoxeterGraph(const CoxeterGraph&) = delete;
  CoxeterGraph& operator=(const CoxeterGraph&) = delete;

  /// Text format:
  ///   generators: a b c
  ///   default: 2        (or "default: inf"; mandatory)
  ///   a b 3
  ///   b c inf
  static std::unique_ptr<CoxeterGraph> parse(const std::string& text);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::string& name(Gen g) const { return names_[g]; }
  Gen genByName(const std::string& n) const;  // throws UsageError if unknown
  std::optional<Gen> tryGenByName(const std::string& n) const;

  /// m_{s,t}; kInf encodes infinity. s != t required.
  int label(Gen s, Gen t) const;

  GenSet fullSet() const { return (rank() >= 32) ? ~GenSet(0) : ((GenSet(1) << rank()) - 1); }

  bool allLabelsEven() const;                    // every label even or inf
  std::vector<GenSet> components(GenSet X) const;  // no-2-convention components
  std::vector<std::pair<Gen, Gen>> infinitePairs(GenSet X) const;

  const Caps& caps() const { return caps_; }

  ArtinWord parseWord(const std::string& text) const;
  std::string printWord(const ArtinWord& w) const;
  std::string printPositive(const Word& w) const;

  // -- internal memo access (coxeter.cpp / garside.cpp) --
  struct Memo;
  Memo& memo() const { return *memo_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> m_;  // rank x rank, diag unused
  Caps caps_;
  std::unique_ptr<Memo> memo_;
};

}  // namespace gk
