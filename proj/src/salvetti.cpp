#include "garsidekit/salvetti.hpp"

#include <deque>
#include <unordered_map>

#include "garsidekit/garside.hpp"

namespace gk {
namespace salvetti {
namespace {

// u'' s u''^-1 as a Coxeter element; reported as a generator when it is one.
std::optional<Gen> conjugatedGenerator(const CoxeterGraph& g, const CoxeterElement& u1,
                                       Gen s) {
  Word w;
  w.reserve(2 * u1.word.size() + 1);
  w.insert(w.end(), u1.word.begin(), u1.word.end());
  w.push_back(s);
  w.insert(w.end(), u1.word.rbegin(), u1.word.rend());
  CoxeterElement x = cox::reduce(g, w);
  if (x.length() == 1) return x.word[0];
  return std::nullopt;
}

}  // namespace

Retraction retractWord(const ArtinWord& w, GenSet X) {
  if (!w.ambient) throw UsageError("word without ambient graph");
  const CoxeterGraph& g = *w.ambient;
  Retraction out;
  out.word.ambient = &g;

  CoxeterElement u = cox::identity(g);
  CoxeterElement prev1 = u;  // u''_{j-1}
  for (const Letter& l : w.letters) {
    LetterTrace tr;
    tr.input = l;
    Word uw = u.word;
    uw.push_back(l.gen);
    u = cox::reduce(g, uw);
    tr.u = u;
    auto [u0, u1] = cox::cosetSplit(u, X);
    tr.u0 = u0;
    tr.u1 = u1;
    // x_j = u''_{j-1} s u''^-1_{j-1} for a positive letter, u''_j s u''^-1_j
    // for a negative one.
    const CoxeterElement& conjBy = (l.sign > 0) ? prev1 : u1;
    tr.x = conjugatedGenerator(g, conjBy, l.gen);
    if (tr.x && setContains(X, *tr.x)) {
      tr.chi = Letter{*tr.x, l.sign};
      out.word.letters.push_back(*tr.chi);
    }
    out.trace.push_back(std::move(tr));
    prev1 = u1;
  }
  return out;
}

Tri memberStandardGeneral(const ArtinWord& w, GenSet X, const WordOracle& oracle) {
  Retraction r = retractWord(w, X);
  // w in A_X implies w == retract(w); the retract is an X-word, so oracle
  // equality in either direction decides membership.
  return oracle.equal(w, r.word);
}

ConvexityReport convexityScan(const CoxeterGraph& g, GenSet X, int maxLen) {
  GenSet full = g.fullSet();
  garside::table(g, full);  // requires a spherical ambient
  ConvexityReport report;
  if (maxLen <= 0) return report;

  auto key = [](const GarsideElement& e) {
    std::string k = std::to_string(e.power);
    for (int x : e.factors) {
      k += ',';
      k += std::to_string(x);
    }
    return k;
  };

  // Word-metric distances out to maxLen.
  std::unordered_map<std::string, int> dist;
  std::deque<GarsideElement> frontier;
  GarsideElement id = garside::identity(g, full);
  dist[key(id)] = 0;
  frontier.push_back(id);
  const long long cap = g.caps().ballElements;
  int d = 0;
  while (!frontier.empty() && d < maxLen) {
    std::deque<GarsideElement> next;
    for (const GarsideElement& e : frontier) {
      for (Gen s = 0; s < g.rank(); ++s) {
        for (int sign : {+1, -1}) {
          GarsideElement v = garside::mul(e, garside::atom(g, full, s, sign));
          auto [it, fresh] = dist.emplace(key(v), d + 1);
          if (fresh) {
            if (static_cast<long long>(dist.size()) > cap)
              throw CapError("convexity scan ball exceeded the cap");
            next.push_back(std::move(v));
          }
        }
      }
    }
    frontier = std::move(next);
    ++d;
  }

  // Enumerate all words up to maxLen; geodesic words for A_X elements must
  // use only X letters.
  struct Frame {
    GarsideElement el;
    std::vector<Letter> word;
  };
  std::vector<Frame> stack{{id, {}}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (!f.word.empty()) {
      ++report.wordsScanned;
      auto it = dist.find(key(f.el));
      bool geodesic = it != dist.end() && it->second == static_cast<int>(f.word.size());
      if (geodesic && garside::memberStandard(f.el, X)) {
        ++report.geodesicsChecked;
        for (const Letter& l : f.word)
          if (!setContains(X, l.gen)) {
            ArtinWord aw;
            aw.ambient = &g;
            aw.letters = f.word;
            report.violations.push_back(g.printWord(aw));
            break;
          }
      }
    }
    if (static_cast<int>(f.word.size()) >= maxLen) continue;
    for (Gen s = 0; s < g.rank(); ++s) {
      for (int sign : {+1, -1}) {
        Frame nf;
        nf.el = garside::mul(f.el, garside::atom(g, full, s, sign));
        nf.word = f.word;
        nf.word.push_back({s, sign});
        stack.push_back(std::move(nf));
      }
    }
  }
  return report;
}

}  // namespace salvetti
}  // namespace gk
