#pragma once

#include <array>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "signedlab/canonical.hpp"
#include "signedlab/patterns.hpp"
#include "signedlab/signed_graph.hpp"

namespace signedlab {

// Construction steps of a sided wide 2-path. Side edges are addressed by slot
// (the current F holds exactly two edges), so traces survive insertion of
// extra parallel-copy steps. Parities are recorded as cycle parities (the
// 2-cycle against the side copy, or the glued triangle's parity), which are
// re-signing invariant.
enum class TraceStepKind : std::uint8_t {
  BaseTriangle,  // p1 = triangle parity
  BaseK4i,       // F = a split pair
  AddParallel,   // slot, p1 = parity of the 2-cycle with the side edge
  GlueTriangle,  // slot, p1 = triangle parity, new_side in {0: x-lo(h), 1: x-hi(h)}
  GlueK4i        // slot, p1 = parity of triangle (h endpoints, x), p2 = of (lo(h), x, y)
};

struct TraceStep {
  TraceStepKind kind = TraceStepKind::BaseTriangle;
  int slot = 0;
  Parity p1 = Parity::Even;
  Parity p2 = Parity::Even;
  int new_side = 0;
};

struct Wide2PathTrace {
  std::vector<TraceStep> steps;
};

struct SidedGraph {
  SignedGraph graph;
  std::array<int, 2> sides{-1, -1};  // edge indices, the set F
};

namespace detail {

inline SidedGraph apply_trace_step(const SidedGraph& s, const TraceStep& st) {
  auto reject = [](const char* why) { throw std::invalid_argument(std::string("bad trace step: ") + why); };
  if (st.kind == TraceStepKind::BaseTriangle || st.kind == TraceStepKind::BaseK4i) {
    if (s.graph.vertex_count() != 0) reject("base step after the first position");
    if (st.kind == TraceStepKind::BaseTriangle) {
      SignedGraph g(3, {{1, 2, Parity::Even}, {1, 3, Parity::Even}, {2, 3, st.p1}});
      return {g, {0, 1}};
    }
    SignedGraph g(4, {{1, 2, Parity::Odd}, {1, 3, Parity::Even}, {1, 4, Parity::Even},
                      {2, 3, Parity::Even}, {2, 4, Parity::Even}, {3, 4, Parity::Even}});
    return {g, {1, 4}};  // split pair {13, 24}
  }
  if (s.graph.vertex_count() == 0) reject("first step must be a base");
  if (st.slot != 0 && st.slot != 1) reject("slot out of range");
  const Edge h = s.graph.edge(s.sides[static_cast<std::size_t>(st.slot)]);
  const int a = h.lo(), b = h.hi();
  const int n = s.graph.vertex_count();
  std::vector<Edge> es = s.graph.edges();
  SidedGraph out;
  out.sides = s.sides;
  switch (st.kind) {
    case TraceStepKind::AddParallel:
      es.emplace_back(a, b, parity_xor(st.p1, h.parity));
      out.graph = SignedGraph(n, std::move(es));
      return out;
    case TraceStepKind::GlueTriangle: {
      if (st.new_side != 0 && st.new_side != 1) reject("new_side out of range");
      const int x = n + 1;
      es.emplace_back(a, x, Parity::Even);
      es.emplace_back(b, x, parity_xor(st.p1, h.parity));
      out.graph = SignedGraph(n + 1, std::move(es));
      out.sides[static_cast<std::size_t>(st.slot)] =
          out.graph.edge_count() - 2 + st.new_side;
      return out;
    }
    case TraceStepKind::GlueK4i: {
      const int x = n + 1, y = n + 2;
      es.emplace_back(a, x, Parity::Even);
      es.emplace_back(b, x, parity_xor(st.p1, h.parity));
      es.emplace_back(a, y, Parity::Even);
      es.emplace_back(b, y, parity_xor(flipped(st.p1), h.parity));
      es.emplace_back(x, y, st.p2);
      out.graph = SignedGraph(n + 2, std::move(es));
      out.sides[static_cast<std::size_t>(st.slot)] = out.graph.edge_count() - 1;  // edge xy
      return out;
    }
    default:
      reject("unknown step");
  }
  return out;  // unreachable
}

}  // namespace detail

// Replays a trace, rejecting malformed step sequences. Returns the built
// sided wide 2-path and its final sides F.
inline SidedGraph validate_trace(const Wide2PathTrace& t) {
  if (t.steps.empty()) throw std::invalid_argument("empty trace");
  SidedGraph s;
  for (const TraceStep& st : t.steps) s = detail::apply_trace_step(s, st);
  return s;
}

// Per-pair multiplicity normalization for catalog lookups: a pair with copies
// of both parities reduces to one of each, a single-parity pile to two copies,
// singles stay. Extra copies are returned so traces can be re-extended.
struct MultNormalization {
  SignedGraph reduced;
  std::vector<std::pair<std::pair<int, int>, Parity>> extras;
};

inline MultNormalization normalize_pair_multiplicity(const SignedGraph& g) {
  MultNormalization out;
  std::map<std::pair<int, int>, std::pair<int, int>> counts;  // pair -> (even, odd)
  for (const Edge& e : g.edges()) {
    auto& c = counts[{e.lo(), e.hi()}];
    (e.parity == Parity::Even ? c.first : c.second) += 1;
  }
  std::vector<Edge> kept;
  for (const auto& [pr, c] : counts) {
    int keep_even = 0, keep_odd = 0;
    if (c.first > 0 && c.second > 0) {
      keep_even = 1;
      keep_odd = 1;
    } else if (c.first >= 2) {
      keep_even = 2;
    } else if (c.second >= 2) {
      keep_odd = 2;
    } else {
      keep_even = c.first;
      keep_odd = c.second;
    }
    for (int i = 0; i < keep_even; ++i) kept.emplace_back(pr.first, pr.second, Parity::Even);
    for (int i = 0; i < keep_odd; ++i) kept.emplace_back(pr.first, pr.second, Parity::Odd);
    for (int i = keep_even; i < c.first; ++i) out.extras.push_back({pr, Parity::Even});
    for (int i = keep_odd; i < c.second; ++i) out.extras.push_back({pr, Parity::Odd});
  }
  out.reduced = SignedGraph(g.vertex_count(), std::move(kept));
  return out;
}

// Catalog of every sided wide 2-path class within the size caps, built once by
// forward closure over the construction rules, plus the downward edge-deletion
// closure giving all partial wide 2-path classes.
struct WideTwoPathLimits {
  int max_n = 6;
  int max_pair_mult = 2;
};

class WideTwoPathCatalog {
 public:
  using Limits = WideTwoPathLimits;

  struct SidedState {
    SidedGraph sided;
    Wide2PathTrace trace;
  };

  explicit WideTwoPathCatalog(const Limits& lim = Limits()) : lim_(lim) { build(); }

  const Limits& limits() const { return lim_; }

  std::optional<int> wide_index(const std::string& unsided_key) const {
    auto it = wide_.find(unsided_key);
    if (it == wide_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<int> partial_root(const std::string& key) const {
    auto it = partial_.find(key);
    if (it == partial_.end()) return std::nullopt;
    return it->second;
  }

  const SidedState& state(int idx) const { return states_[static_cast<std::size_t>(idx)]; }

  std::size_t sided_count() const { return states_.size(); }
  std::size_t wide_count() const { return wide_.size(); }
  std::size_t partial_count() const { return partial_.size(); }

 private:
  void build() {
    std::deque<int> queue;
    auto push_state = [&](SidedGraph sg, Wide2PathTrace tr) {
      std::string skey = canonical_key(sg.graph, {sg.sides[0], sg.sides[1]});
      if (sided_seen_.count(skey)) return;
      int idx = static_cast<int>(states_.size());
      sided_seen_.emplace(std::move(skey), idx);
      std::string ukey = canonical_key(sg.graph);
      wide_.try_emplace(ukey, idx);
      states_.push_back({std::move(sg), std::move(tr)});
      queue.push_back(idx);
    };

    for (TraceStep base : {TraceStep{TraceStepKind::BaseTriangle, 0, Parity::Even, Parity::Even, 0},
                           TraceStep{TraceStepKind::BaseTriangle, 0, Parity::Odd, Parity::Even, 0},
                           TraceStep{TraceStepKind::BaseK4i, 0, Parity::Even, Parity::Even, 0}}) {
      Wide2PathTrace tr{{base}};
      push_state(validate_trace(tr), tr);
    }

    while (!queue.empty()) {
      int idx = queue.front();
      queue.pop_front();
      const SidedGraph cur = states_[static_cast<std::size_t>(idx)].sided;  // copy: states_ may grow
      const Wide2PathTrace cur_tr = states_[static_cast<std::size_t>(idx)].trace;
      for (int slot : {0, 1}) {
        const Edge h = cur.graph.edge(cur.sides[static_cast<std::size_t>(slot)]);
        const int pair_count =
            static_cast<int>(cur.graph.edges_between(h.lo(), h.hi()).size());
        for (Parity p : {Parity::Even, Parity::Odd}) {
          if (pair_count < lim_.max_pair_mult) {
            TraceStep st{TraceStepKind::AddParallel, slot, p, Parity::Even, 0};
            Wide2PathTrace tr = cur_tr;
            tr.steps.push_back(st);
            push_state(detail::apply_trace_step(cur, st), tr);
          }
          if (cur.graph.vertex_count() + 1 <= lim_.max_n) {
            for (int ns : {0, 1}) {
              TraceStep st{TraceStepKind::GlueTriangle, slot, p, Parity::Even, ns};
              Wide2PathTrace tr = cur_tr;
              tr.steps.push_back(st);
              push_state(detail::apply_trace_step(cur, st), tr);
            }
          }
          if (cur.graph.vertex_count() + 2 <= lim_.max_n) {
            for (Parity q : {Parity::Even, Parity::Odd}) {
              TraceStep st{TraceStepKind::GlueK4i, slot, p, q, 0};
              Wide2PathTrace tr = cur_tr;
              tr.steps.push_back(st);
              push_state(detail::apply_trace_step(cur, st), tr);
            }
          }
        }
      }
    }

    // downward closure: every spanning subgraph class of a wide 2-path
    std::deque<SignedGraph> dq;
    for (const auto& [key, idx] : wide_) {
      partial_.emplace(key, idx);
      dq.push_back(states_[static_cast<std::size_t>(idx)].sided.graph);
    }
    while (!dq.empty()) {
      SignedGraph h = std::move(dq.front());
      dq.pop_front();
      std::string hkey = canonical_key(h);
      int root = partial_.at(hkey);
      for (int i = 0; i < h.edge_count(); ++i) {
        SignedGraph child = delete_edge(h, i);
        std::string ck = canonical_key(child);
        if (partial_.emplace(std::move(ck), root).second) dq.push_back(std::move(child));
      }
    }
  }

  Limits lim_;
  std::vector<SidedState> states_;
  std::unordered_map<std::string, int> sided_seen_;
  std::unordered_map<std::string, int> wide_;
  std::unordered_map<std::string, int> partial_;
};

namespace detail {

// Positions after which an extra AddParallel step can be inserted without
// disturbing slot references: immediately after an existing AddParallel.
inline std::vector<std::size_t> add_positions(const Wide2PathTrace& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.steps.size(); ++i)
    if (t.steps[i].kind == TraceStepKind::AddParallel) out.push_back(i);
  return out;
}

inline bool extend_trace_search(const Wide2PathTrace& base, std::size_t extras_left,
                                const std::function<bool(const Wide2PathTrace&)>& accept,
                                Wide2PathTrace& found, int& budget) {
  if (extras_left == 0) {
    if (--budget < 0) throw size_guard_error("trace extension search budget exceeded");
    if (accept(base)) {
      found = base;
      return true;
    }
    return false;
  }
  for (std::size_t pos : add_positions(base)) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
      Wide2PathTrace ext = base;
      TraceStep st = ext.steps[pos];
      st.p1 = p;
      ext.steps.insert(ext.steps.begin() + static_cast<long>(pos) + 1, st);
      if (extend_trace_search(ext, extras_left - 1, accept, found, budget)) return true;
    }
  }
  return false;
}

}  // namespace detail

// Wide 2-path recognition via the catalog: a replayable construction trace or
// nothing. Extra parallel copies beyond the catalog's multiplicity cap are
// handled by re-extending the stored trace and re-verifying by canonical key.
inline std::optional<Wide2PathTrace> recognize_wide_2_path(const SignedGraph& g,
                                                           const WideTwoPathCatalog& cat) {
  if (g.vertex_count() > cat.limits().max_n)
    throw size_guard_error("recognize_wide_2_path: graph exceeds catalog bound");
  auto norm = normalize_pair_multiplicity(g);
  auto idx = cat.wide_index(canonical_key(norm.reduced));
  if (!idx) return std::nullopt;
  const Wide2PathTrace& tr = cat.state(*idx).trace;
  const std::string gkey = canonical_key(g);
  if (norm.extras.empty()) {
    if (canonical_key(validate_trace(tr).graph) != gkey)
      throw std::logic_error("catalog trace does not replay to its class");
    return tr;
  }
  Wide2PathTrace found;
  int budget = 200000;
  bool ok = detail::extend_trace_search(
      tr, norm.extras.size(),
      [&](const Wide2PathTrace& t) { return canonical_key(validate_trace(t).graph) == gkey; },
      found, budget);
  if (!ok) throw std::logic_error("failed to re-extend trace over extra parallel copies");
  return found;
}

// g (with parities, after re-signing on U) relabeled by phi sits inside h.
inline bool spanning_subgraph_with_signs(const SignedGraph& g, const SignedGraph& h) {
  if (g.vertex_count() != h.vertex_count()) return false;
  std::map<std::pair<int, int>, std::pair<int, int>> need, have;
  for (const Edge& e : g.edges())
    (e.parity == Parity::Even ? need[{e.lo(), e.hi()}].first : need[{e.lo(), e.hi()}].second) += 1;
  for (const Edge& e : h.edges())
    (e.parity == Parity::Even ? have[{e.lo(), e.hi()}].first : have[{e.lo(), e.hi()}].second) += 1;
  for (const auto& [pr, c] : need) {
    auto it = have.find(pr);
    if (it == have.end() || it->second.first < c.first || it->second.second < c.second) return false;
  }
  return true;
}

// Searches for a bijection phi and re-signing U with resign(g,U)^phi a
// spanning subgraph of h.
struct SpanningEmbedding {
  std::vector<int> phi;        // size n+1, phi[v] = image of v
  std::vector<int> resign_set; // on g's vertices
};

inline std::optional<SpanningEmbedding> embed_spanning(const SignedGraph& g, const SignedGraph& h) {
  const int n = g.vertex_count();
  if (h.vertex_count() != n) return std::nullopt;
  // pair multisets of h
  std::map<std::pair<int, int>, std::pair<int, int>> have;
  for (const Edge& e : h.edges())
    (e.parity == Parity::Even ? have[{e.lo(), e.hi()}].first : have[{e.lo(), e.hi()}].second) += 1;
  std::map<std::pair<int, int>, std::pair<int, int>> needs;
  for (const Edge& e : g.edges())
    (e.parity == Parity::Even ? needs[{e.lo(), e.hi()}].first : needs[{e.lo(), e.hi()}].second) += 1;

  std::vector<int> phi(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  std::optional<SpanningEmbedding> result;

  // allowed flip options per assigned pair, then a 2-coloring for U
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v > n) {
      // constraints: flip f(pair) with s_u ^ s_v = f consistent
      std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
      std::vector<std::vector<std::pair<int, int>>> cons(static_cast<std::size_t>(n) + 1);
      for (const auto& [pr, c] : needs) {
        auto key = std::pair{std::min(phi[static_cast<std::size_t>(pr.first)], phi[static_cast<std::size_t>(pr.second)]),
                             std::max(phi[static_cast<std::size_t>(pr.first)], phi[static_cast<std::size_t>(pr.second)])};
        auto it = have.find(key);
        if (it == have.end()) return false;
        bool ok0 = it->second.first >= c.first && it->second.second >= c.second;
        bool ok1 = it->second.first >= c.second && it->second.second >= c.first;
        if (!ok0 && !ok1) return false;
        if (ok0 && ok1) continue;  // unconstrained
        int f = ok0 ? 0 : 1;
        cons[static_cast<std::size_t>(pr.first)].push_back({pr.second, f});
        cons[static_cast<std::size_t>(pr.second)].push_back({pr.first, f});
      }
      for (int r = 1; r <= n; ++r) {
        if (color[static_cast<std::size_t>(r)] != -1) continue;
        color[static_cast<std::size_t>(r)] = 0;
        std::vector<int> stack{r};
        while (!stack.empty()) {
          int x = stack.back();
          stack.pop_back();
          for (auto [y, f] : cons[static_cast<std::size_t>(x)]) {
            int want = color[static_cast<std::size_t>(x)] ^ f;
            if (color[static_cast<std::size_t>(y)] == -1) {
              color[static_cast<std::size_t>(y)] = want;
              stack.push_back(y);
            } else if (color[static_cast<std::size_t>(y)] != want) {
              return false;
            }
          }
        }
      }
      // verify for real
      SpanningEmbedding emb;
      emb.phi = phi;
      for (int x = 1; x <= n; ++x)
        if (color[static_cast<std::size_t>(x)] == 1) emb.resign_set.push_back(x);
      SignedGraph image = permute(resign(g, emb.resign_set), phi);
      if (!spanning_subgraph_with_signs(image, h)) return false;
      result = std::move(emb);
      return true;
    }
    for (int w = 1; w <= n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (h.degree(w) < g.degree(v)) continue;
      // quick pair-count check against already assigned neighbours
      bool ok = true;
      for (const auto& [pr, c] : needs) {
        int other = -1;
        if (pr.first == v && phi[static_cast<std::size_t>(pr.second)] != 0)
          other = phi[static_cast<std::size_t>(pr.second)];
        else if (pr.second == v && phi[static_cast<std::size_t>(pr.first)] != 0)
          other = phi[static_cast<std::size_t>(pr.first)];
        if (other < 0) continue;
        auto it = have.find({std::min(w, other), std::max(w, other)});
        int total_need = c.first + c.second;
        if (it == have.end() || it->second.first + it->second.second < total_need) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(w)] = 1;
      phi[static_cast<std::size_t>(v)] = w;
      if (rec(v + 1)) return true;
      phi[static_cast<std::size_t>(v)] = 0;
      used[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  };
  if (!rec(1)) return std::nullopt;
  return result;
}

// Spanning-subgraph-of-a-wide-2-path decision via the downward closure; the
// answer inside the catalog's caps is exact. `max_added` mirrors the
// augmentation-bound interface: completions needing more added edges are still
// reported (with the count), never turned into a false negative.
struct PartialWideOutcome {
  enum class Verdict : std::uint8_t { Yes, No, Inconclusive } verdict = Verdict::No;
  std::optional<Wide2PathTrace> completion;      // construction of the covering class
  std::optional<SignedGraph> completion_graph;   // relabeled so g is literally contained
  std::optional<SpanningEmbedding> embedding;    // of g into completion_graph's class rep
  int added_edges = 0;
  bool within_bound = true;
};

inline PartialWideOutcome is_partial_wide_2_path(const SignedGraph& g,
                                                 const WideTwoPathCatalog& cat,
                                                 int max_added = 6) {
  PartialWideOutcome out;
  if (g.vertex_count() > cat.limits().max_n) {
    out.verdict = PartialWideOutcome::Verdict::Inconclusive;
    return out;
  }
  auto norm = normalize_pair_multiplicity(g);
  auto root = cat.partial_root(canonical_key(norm.reduced));
  if (!root) {
    out.verdict = PartialWideOutcome::Verdict::No;
    return out;
  }
  const auto& st = cat.state(*root);

  std::optional<SpanningEmbedding> emb;
  Wide2PathTrace completion = st.trace;
  SignedGraph completion_rep = st.sided.graph;
  if (norm.extras.empty()) {
    emb = embed_spanning(g, completion_rep);
  } else {
    Wide2PathTrace found;
    int budget = 200000;
    bool ok = detail::extend_trace_search(
        st.trace, norm.extras.size(),
        [&](const Wide2PathTrace& t) {
          auto h = validate_trace(t).graph;
          auto e = embed_spanning(g, h);
          return e.has_value();
        },
        found, budget);
    if (!ok) throw std::logic_error("partial-wide completion extension failed");
    completion = found;
    completion_rep = validate_trace(found).graph;
    emb = embed_spanning(g, completion_rep);
  }
  if (!emb) throw std::logic_error("partial-wide embedding missing for a closure member");

  out.verdict = PartialWideOutcome::Verdict::Yes;
  out.completion = std::move(completion);
  out.embedding = emb;
  // relabel the completion so g sits inside it literally
  std::vector<int> inv(emb->phi.size(), 0);
  for (int v = 1; v < static_cast<int>(emb->phi.size()); ++v)
    inv[static_cast<std::size_t>(emb->phi[static_cast<std::size_t>(v)])] = v;
  SignedGraph relabeled = permute(completion_rep, inv);
  out.completion_graph = resign(relabeled, emb->resign_set);
  out.added_edges = completion_rep.edge_count() - g.edge_count();
  out.within_bound = out.added_edges <= max_added;
  if (!spanning_subgraph_with_signs(g, *out.completion_graph))
    throw std::logic_error("partial-wide completion does not contain the input");
  return out;
}

// W4o up to parallel-class reduction: uniform classes and the reduced graph in
// W4o's class.
inline bool is_w4o_class(const SignedGraph& g) {
  if (g.vertex_count() != 5) return false;
  auto [reduced, uniform] = reduce_parallel_classes(g);
  if (!uniform) return false;
  return canonical_key(reduced) == canonical_key(patterns::w4o());
}

// Nonadjacent edge pairs of a signed K4 where both edges lie on one even and
// one odd triangle.
struct SplitPair {
  int e = -1, f = -1;  // edge indices
};

inline std::vector<SplitPair> find_split_pairs(const SignedGraph& g) {
  if (g.vertex_count() != 4 || g.edge_count() != 6)
    throw std::invalid_argument("find_split_pairs expects a simple K4");
  for (const auto& [pr, ps] : parallel_classes(g).pairs)
    if (ps.size() > 1) throw std::invalid_argument("find_split_pairs expects a simple K4");
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b)
      if (!g.adjacent(a, b)) throw std::invalid_argument("find_split_pairs expects a complete K4");

  // triangle parity indexed by the omitted vertex
  std::array<Parity, 5> tri{};
  for (int skip = 1; skip <= 4; ++skip) {
    int odd = 0;
    for (const Edge& e : g.edges())
      if (!e.touches(skip) && e.parity == Parity::Odd) ++odd;
    tri[static_cast<std::size_t>(skip)] = (odd % 2) ? Parity::Odd : Parity::Even;
  }
  auto edge_split = [&](const Edge& e) {
    // the two triangles containing e omit its non-endpoints
    std::vector<Parity> ps;
    for (int v = 1; v <= 4; ++v)
      if (!e.touches(v)) ps.push_back(tri[static_cast<std::size_t>(v)]);
    return ps.size() == 2 && ps[0] != ps[1];
  };
  std::vector<SplitPair> out;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const Edge& a = g.edge(i);
      const Edge& b = g.edge(j);
      if (a.touches(b.u) || a.touches(b.v)) continue;  // adjacent edges
      if (edge_split(a) && edge_split(b)) out.push_back({i, j});
    }
  return out;
}

}  // namespace signedlab
