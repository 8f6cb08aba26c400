#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>

#include "garsidekit/graph.hpp"

namespace gk {

struct GarsideTable;

/// Per-graph mutable caches. All fills are idempotent; the mutex makes the
/// graph shareable across threads.
struct CoxeterGraph::Memo {
  std::mutex mtx;
  std::unordered_map<Word, Word, WordHash> canonical;
  std::unordered_map<GenSet, std::shared_ptr<const GarsideTable>> garside;
  static constexpr size_t kCanonicalCacheLimit = 1u << 20;
};

}  // namespace gk
