#include "garsidekit/graph.hpp"

#include <cstdlib>
#include <sstream>

#include "memo.hpp"

namespace gk {

Caps Caps::fromEnv() {
  Caps c;
  if (const char* v = std::getenv("GARSIDEKIT_CAP")) {
    char* end = nullptr;
    long long n = std::strtoll(v, &end, 10);
    if (end != v && n > 0) {
      c.orbitMembers = n;
      c.latticeOrder = n;
      c.ballElements = n;
      c.iterations = n;
    }
  }
  return c;
}

CoxeterGraph::CoxeterGraph(std::vector<std::string> names,
                           std::map<std::pair<Gen, Gen>, int> labels, Caps caps)
    : names_(std::move(names)), caps_(caps), memo_(std::make_unique<Memo>()) {
  const int n = rank();
  if (n > 31) throw UsageError("at most 31 generators are supported");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && names_[i] == names_[j])
        throw UsageError("duplicate generator name: " + names_[i]);
  m_.assign(n, std::vector<int>(n, 2));
  for (auto& [pair, m] : labels) {
    auto [s, t] = pair;
    if (s < 0 || t < 0 || s >= n || t >= n || s == t)
      throw UsageError("bad label pair");
    if (m != kInf && m < 2) throw UsageError("labels must be >= 2 or inf");
    m_[s][t] = m_[t][s] = m;
  }
}

CoxeterGraph::~CoxeterGraph() = default;

Gen CoxeterGraph::genByName(const std::string& n) const {
  auto g = tryGenByName(n);
  if (!g) throw UsageError("unknown generator name: " + n);
  return *g;
}

std::optional<Gen> CoxeterGraph::tryGenByName(const std::string& n) const {
  for (Gen g = 0; g < rank(); ++g)
    if (names_[g] == n) return g;
  return std::nullopt;
}

int CoxeterGraph::label(Gen s, Gen t) const {
  if (s == t) throw UsageError("label m_{s,s} is undefined");
  return m_[s][t];
}

bool CoxeterGraph::allLabelsEven() const {
  for (Gen s = 0; s < rank(); ++s)
    for (Gen t = s + 1; t < rank(); ++t) {
      int m = m_[s][t];
      if (m != kInf && m % 2 != 0) return false;
    }
  return true;
}

std::vector<GenSet> CoxeterGraph::components(GenSet X) const {
  std::vector<GenSet> out;
  GenSet seen = 0;
  for (Gen s = 0; s < rank(); ++s) {
    if (!setContains(X, s) || setContains(seen, s)) continue;
    GenSet comp = 0;
    std::vector<Gen> stack{s};
    while (!stack.empty()) {
      Gen u = stack.back();
      stack.pop_back();
      if (setContains(comp, u)) continue;
      comp = setAdd(comp, u);
      for (Gen v = 0; v < rank(); ++v) {
        if (v == u || !setContains(X, v) || setContains(comp, v)) continue;
        int m = m_[u][v];
        if (m == kInf || m >= 3) stack.push_back(v);  // no-2-convention edge
      }
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

std::vector<std::pair<Gen, Gen>> CoxeterGraph::infinitePairs(GenSet X) const {
  std::vector<std::pair<Gen, Gen>> out;
  for (Gen s = 0; s < rank(); ++s)
    for (Gen t = s + 1; t < rank(); ++t)
      if (setContains(X, s) && setContains(X, t) && m_[s][t] == kInf)
        out.push_back({s, t});
  return out;
}

std::unique_ptr<CoxeterGraph> CoxeterGraph::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> names;
  bool haveGens = false, haveDefault = false;
  int defaultLabel = 2;
  std::vector<std::tuple<std::string, std::string, int>> pairs;

  auto parseLabel = [](const std::string& tok) -> int {
    if (tok == "inf" || tok == "infinity" || tok == "oo") return kInf;
    try {
      size_t pos = 0;
      int m = std::stoi(tok, &pos);
      if (pos != tok.size() || m < 2) throw UsageError("bad label: " + tok);
      return m;
    } catch (const std::invalid_argument&) {
      throw UsageError("bad label: " + tok);
    } catch (const std::out_of_range&) {
      throw UsageError("bad label: " + tok);
    }
  };

  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "generators:") {
      std::string n;
      while (ls >> n) names.push_back(n);
      haveGens = true;
    } else if (tok == "default:") {
      std::string d;
      if (!(ls >> d)) throw UsageError("default: needs a value");
      defaultLabel = parseLabel(d);
      haveDefault = true;
    } else {
      std::string b, c;
      if (!(ls >> b >> c)) throw UsageError("bad graph line: " + line);
      pairs.emplace_back(tok, b, parseLabel(c));
    }
  }
  if (!haveGens) throw UsageError("missing 'generators:' header");
  if (!haveDefault) throw UsageError("missing mandatory 'default:' flag");

  std::map<std::pair<Gen, Gen>, int> labels;
  auto idx = [&](const std::string& n) -> Gen {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return static_cast<Gen>(i);
    throw UsageError("unknown generator name: " + n);
  };
  for (int i = 0; i < static_cast<int>(names.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(names.size()); ++j)
      labels[{i, j}] = defaultLabel;
  for (auto& [a, b, m] : pairs) {
    Gen s = idx(a), t = idx(b);
    if (s == t) throw UsageError("pair line with equal generators: " + a);
    labels[{std::min(s, t), std::max(s, t)}] = m;
  }
  return std::make_unique<CoxeterGraph>(names, labels);
}

ArtinWord CoxeterGraph::parseWord(const std::string& text) const {
  ArtinWord w;
  w.ambient = this;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1" && !tryGenByName("1")) continue;  // identity word
    int sign = 1;
    if (auto pos = tok.find('^'); pos != std::string::npos) {
      std::string exp = tok.substr(pos + 1);
      if (exp == "-1")
        sign = -1;
      else if (exp != "1" && exp != "+1")
        throw UsageError("only ^-1 exponents are supported: " + tok);
      tok = tok.substr(0, pos);
    }
    w.letters.push_back({genByName(tok), sign});
  }
  return w;
}

std::string CoxeterGraph::printWord(const ArtinWord& w) const {
  if (w.letters.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += name(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

std::string CoxeterGraph::printPositive(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (Gen g : w) {
    if (!out.empty()) out += ' ';
    out += name(g);
  }
  return out;
}

}  // namespace gk
