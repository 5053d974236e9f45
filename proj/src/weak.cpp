#include "rmc/weak.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "rmc/detail/partition.hpp"
#include "rmc/ops.hpp"

namespace rmc {

namespace {

// Iterative Tarjan. Components are numbered in completion order, so every
// transition goes to a component with an equal or lower number.
std::pair<std::vector<uint32_t>, uint32_t> tarjan(
    const std::vector<std::vector<uint32_t>>& adj) {
  const uint32_t n = static_cast<uint32_t>(adj.size());
  std::vector<uint32_t> comp(n, UINT32_MAX), low(n), idx(n, UINT32_MAX);
  std::vector<uint32_t> stack;
  std::vector<bool> on_stack(n, false);
  uint32_t next_idx = 0, next_comp = 0;

  struct Frame {
    uint32_t v;
    size_t child;
  };
  std::vector<Frame> frames;

  for (uint32_t root = 0; root < n; ++root) {
    if (idx[root] != UINT32_MAX) continue;
    frames.push_back({root, 0});
    idx[root] = low[root] = next_idx++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < adj[f.v].size()) {
        uint32_t w = adj[f.v][f.child++];
        if (idx[w] == UINT32_MAX) {
          idx[w] = low[w] = next_idx++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], idx[w]);
        }
      } else {
        uint32_t v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == idx[v]) {
          while (true) {
            uint32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
      }
    }
  }
  return {std::move(comp), next_comp};
}

std::vector<std::vector<uint32_t>> adjacency(const Automaton& a) {
  std::vector<std::vector<uint32_t>> adj(a.num_states());
  for (const Trans& t : a.transitions()) adj[t.from].push_back(t.to);
  return adj;
}

// True when the subgraph of component c, restricted to states where
// keep(q) holds, still contains a cycle.
bool component_cycle(const Automaton& a, const SccDecomposition& scc,
                     uint32_t c, const std::vector<bool>& keep) {
  std::vector<StateId> members;
  for (StateId q = 0; q < a.num_states(); ++q)
    if (scc.component[q] == c && keep[q]) members.push_back(q);
  if (members.empty()) return false;
  std::map<StateId, uint32_t> local;
  for (uint32_t i = 0; i < members.size(); ++i) local[members[i]] = i;
  std::vector<std::vector<uint32_t>> adj(members.size());
  bool self_loop = false;
  for (StateId q : members)
    for (const Trans* t = a.begin_from(q); t != a.end_from(q); ++t) {
      auto it = local.find(t->to);
      if (it == local.end() || scc.component[t->to] != c) continue;
      if (t->to == q) self_loop = true;
      adj[local[q]].push_back(it->second);
    }
  if (self_loop) return true;
  auto [comp, ncomp] = tarjan(adj);
  std::vector<uint32_t> size(ncomp, 0);
  for (uint32_t x : comp) size[x]++;
  for (uint32_t s : size)
    if (s > 1) return true;
  return false;
}

}  // namespace

SccDecomposition scc_decompose(const Automaton& a) {
  auto [comp, ncomp] = tarjan(adjacency(a));
  SccDecomposition out;
  out.component = std::move(comp);
  out.num_components = ncomp;
  out.has_cycle.assign(ncomp, false);
  out.all_accepting.assign(ncomp, true);
  out.any_accepting.assign(ncomp, false);
  std::vector<uint32_t> size(ncomp, 0);
  for (StateId q = 0; q < a.num_states(); ++q) {
    uint32_t c = out.component[q];
    size[c]++;
    if (a.accepting(q))
      out.any_accepting[c] = true;
    else
      out.all_accepting[c] = false;
  }
  for (uint32_t c = 0; c < ncomp; ++c)
    if (size[c] > 1) out.has_cycle[c] = true;
  for (const Trans& t : a.transitions())
    if (t.from == t.to) out.has_cycle[out.component[t.from]] = true;
  return out;
}

bool is_weak(const Automaton& a) {
  SccDecomposition scc = scc_decompose(a);
  for (uint32_t c = 0; c < scc.num_components; ++c)
    if (scc.any_accepting[c] && !scc.all_accepting[c]) return false;
  return true;
}

bool is_inherently_weak(const Automaton& a) {
  std::vector<bool> reach = reachable_states(a);
  SccDecomposition scc = scc_decompose(a);
  std::vector<bool> nonacc(a.num_states());
  for (StateId q = 0; q < a.num_states(); ++q) nonacc[q] = !a.accepting(q);
  for (uint32_t c = 0; c < scc.num_components; ++c) {
    if (!scc.has_cycle[c] || !scc.any_accepting[c]) continue;
    bool reachable = false;
    bool acc_on_cycle = false;
    for (StateId q = 0; q < a.num_states(); ++q)
      if (scc.component[q] == c) {
        reachable = reachable || reach[q];
        acc_on_cycle = acc_on_cycle || a.accepting(q);
      }
    if (!reachable || !acc_on_cycle) continue;
    // Accepting cycle exists; a remaining cycle after removing accepting
    // states is a nonaccepting cycle.
    if (component_cycle(a, scc, c, nonacc)) return false;
  }
  return true;
}

Automaton weaken(const Automaton& a) {
  SccDecomposition scc = scc_decompose(a);
  std::vector<bool> acc(a.num_states(), false);
  for (StateId q = 0; q < a.num_states(); ++q) {
    uint32_t c = scc.component[q];
    acc[q] = scc.has_cycle[c] && scc.any_accepting[c];
  }
  return Automaton(a.alphabet(), a.kind(), a.num_states(), a.initial(),
                   std::move(acc), a.transitions());
}

DeterminizeWeakResult determinize_weak(const Automaton& a) {
  if (a.kind() != Kind::WeakBuchi)
    throw std::invalid_argument("determinize_weak expects a Buchi automaton");
  // Breakpoint construction over pairs (S, O): S the subset of reachable
  // states, O the runs that have stayed within accepting states since the
  // last breakpoint. A state with empty O is a breakpoint; the accepted
  // language is the set of words whose run hits finitely many breakpoints.
  using Pair = std::pair<std::vector<StateId>, std::vector<StateId>>;
  std::map<Pair, StateId> ids;
  std::vector<Pair> pairs;
  std::vector<bool> breakpoint;
  std::vector<Trans> trans;

  auto intern = [&](std::vector<StateId> s, std::vector<StateId> o) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
    Pair key{std::move(s), std::move(o)};
    auto [it, fresh] = ids.try_emplace(std::move(key), 0);
    if (fresh) {
      it->second = static_cast<StateId>(pairs.size());
      breakpoint.push_back(it->first.second.empty());
      pairs.push_back(it->first);
    }
    return it->second;
  };

  std::vector<StateId> init;
  if (!a.initial().empty()) {
    std::vector<StateId> s(a.initial().begin(), a.initial().end());
    std::vector<StateId> o;
    for (StateId q : s)
      if (a.accepting(q)) o.push_back(q);
    init.push_back(intern(std::move(s), std::move(o)));
  }
  const size_t nsym = a.alphabet().size();
  for (StateId i = 0; i < pairs.size(); ++i) {
    std::vector<std::vector<StateId>> next_s(nsym), next_o(nsym);
    for (StateId q : pairs[i].first)
      for (const Trans* t = a.begin_from(q); t != a.end_from(q); ++t)
        next_s[t->sym].push_back(t->to);
    // a breakpoint state restarts its obligations from the accepting part
    // of the subset when stepping
    const std::vector<StateId>* source = &pairs[i].second;
    std::vector<StateId> restart;
    if (source->empty()) {
      for (StateId q : pairs[i].first)
        if (a.accepting(q)) restart.push_back(q);
      source = &restart;
    }
    for (StateId q : *source)
      for (const Trans* t = a.begin_from(q); t != a.end_from(q); ++t)
        if (a.accepting(t->to)) next_o[t->sym].push_back(t->to);
    for (size_t sym = 0; sym < nsym; ++sym) {
      if (next_s[sym].empty()) continue;
      StateId to = intern(std::move(next_s[sym]), std::move(next_o[sym]));
      trans.push_back({i, static_cast<SymbolId>(sym), to});
    }
  }

  uint32_t n = static_cast<uint32_t>(pairs.size());
  // Inherent weakness with co-Buchi polarity: no SCC may contain both a
  // breakpoint-visiting cycle and a breakpoint-free cycle.
  Automaton bad_marked(a.alphabet(), Kind::WeakBuchi, n, init, breakpoint,
                       trans);
  bool inherently = is_inherently_weak(bad_marked);
  if (!inherently) {
    std::vector<bool> good(n);
    for (uint32_t q = 0; q < n; ++q) good[q] = !breakpoint[q];
    return {Automaton(a.alphabet(), Kind::WeakBuchi, n, std::move(init),
                      std::move(good), std::move(trans)),
            false};
  }
  SccDecomposition scc = scc_decompose(bad_marked);
  std::vector<bool> acc(n, false);
  for (uint32_t q = 0; q < n; ++q) {
    uint32_t c = scc.component[q];
    acc[q] = scc.has_cycle[c] && !scc.any_accepting[c];  // no breakpoint inside
  }
  return {Automaton(a.alphabet(), Kind::WeakBuchi, n, std::move(init),
                    std::move(acc), std::move(trans)),
          true};
}

// Loeding's canonical acceptance normalization: each component gets a color,
// even iff accepting, maximal over its successors, processed leaves first.
// Transient components inherit the maximum successor color.
std::vector<bool> detail::weak_acceptance_flags(const Automaton& a) {
  SccDecomposition scc = scc_decompose(a);
  std::vector<int32_t> color(scc.num_components, -1);
  // successor components (component ids decrease along transitions)
  std::vector<std::vector<uint32_t>> succ(scc.num_components);
  for (const Trans& t : a.transitions()) {
    uint32_t cu = scc.component[t.from], cv = scc.component[t.to];
    if (cu != cv) succ[cu].push_back(cv);
  }
  for (uint32_t c = 0; c < scc.num_components; ++c) {
    int32_t m = -1;
    for (uint32_t s : succ[c]) m = std::max(m, color[s]);
    if (scc.has_cycle[c]) {
      int32_t want = scc.any_accepting[c] ? 0 : 1;
      if (m < 0)
        color[c] = want;
      else
        color[c] = (m % 2 == want % 2) ? m : m + 1;
    } else {
      color[c] = std::max<int32_t>(m, 0);
    }
  }
  std::vector<bool> flags(a.num_states());
  for (StateId q = 0; q < a.num_states(); ++q)
    flags[q] = color[scc.component[q]] % 2 == 0;
  return flags;
}

Automaton minimize_weak(const Automaton& a) {
  if (a.kind() != Kind::WeakBuchi)
    throw std::invalid_argument("minimize_weak expects a Buchi automaton");
  if (!a.deterministic()) throw NotDeterministic();
  if (!is_weak(a)) throw NotWeak();
  Automaton p = prune(a);
  if (p.num_states() == 0) return p;
  std::vector<bool> flags = detail::weak_acceptance_flags(p);
  // Hopcroft refinement over the normalized flags, then quotient with the
  // normalized acceptance so canonical forms are directly comparable.
  Automaton m = minimize(Automaton(p.alphabet(), Kind::FiniteWord,
                                   p.num_states(), p.initial(), flags,
                                   p.transitions()));
  return Automaton(m.alphabet(), Kind::WeakBuchi, m.num_states(), m.initial(),
                   m.accepting(), m.transitions());
}

Automaton complement_weak(const Automaton& a) {
  if (a.kind() != Kind::WeakBuchi)
    throw std::invalid_argument("complement_weak expects a Buchi automaton");
  if (!a.deterministic()) throw NotDeterministic();
  if (!is_weak(a)) throw NotWeak();
  AutomatonBuilder b(a.alphabet(), Kind::WeakBuchi);
  for (StateId q = 0; q < a.num_states(); ++q) b.add_state(!a.accepting(q));
  StateId sink = b.add_state(true);
  const size_t nsym = a.alphabet().size();
  std::vector<bool> has(static_cast<size_t>(a.num_states()) * nsym, false);
  for (const Trans& t : a.transitions()) {
    b.add_trans(t.from, t.sym, t.to);
    has[static_cast<size_t>(t.from) * nsym + t.sym] = true;
  }
  for (StateId q = 0; q < a.num_states(); ++q)
    for (SymbolId s = 0; s < nsym; ++s)
      if (!has[static_cast<size_t>(q) * nsym + s]) b.add_trans(q, s, sink);
  for (SymbolId s = 0; s < nsym; ++s) b.add_trans(sink, s, sink);
  if (a.initial().empty())
    b.initial.push_back(sink);
  else
    b.initial.push_back(a.initial()[0]);
  return minimize_weak(b.build());
}

OmegaSubset omega_language_subset(const Automaton& a, const Automaton& b) {
  if (a.alphabet() != b.alphabet()) throw AlphabetMismatch();
  Automaton nb = complement_weak(b);
  // Deterministic pair product; weakness is preserved.
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  AutomatonBuilder p(a.alphabet(), Kind::WeakBuchi);
  auto intern = [&](StateId x, StateId y) {
    auto [it, fresh] = ids.try_emplace({x, y}, 0);
    if (fresh) {
      it->second = p.add_state(a.accepting(x) && nb.accepting(y));
      pairs.push_back({x, y});
    }
    return it->second;
  };
  if (!a.initial().empty() && !nb.initial().empty())
    p.initial.push_back(intern(a.initial()[0], nb.initial()[0]));
  for (StateId s = 0; s < pairs.size(); ++s) {
    auto [x, y] = pairs[s];
    for (const Trans* t = a.begin_from(x); t != a.end_from(x); ++t)
      if (auto y2 = nb.step(y, t->sym)) p.add_trans(s, t->sym, intern(t->to, *y2));
  }
  Emptiness e = is_empty(p.build());
  if (e.empty) return {true, std::nullopt};
  return {false, e.lasso};
}

Automaton canonical_form(const Automaton& a) {
  if (a.kind() == Kind::FiniteWord) return canonical_min(a);
  Automaton w = a;
  if (!is_weak(w)) {
    if (!is_inherently_weak(w)) throw NotWeak();
    w = weaken(w);
  }
  if (!w.deterministic()) {
    DeterminizeWeakResult r = determinize_weak(w);
    if (!r.inherently_weak) throw NotWeak();
    w = r.automaton;
  }
  return minimize_weak(w);
}

bool accepts_lasso(const Automaton& a, const Lasso& l) {
  if (l.loop.empty())
    throw std::invalid_argument("lasso needs a nonempty loop");
  // States reachable on the stem.
  std::vector<StateId> cur(a.initial().begin(), a.initial().end());
  std::sort(cur.begin(), cur.end());
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
  for (SymbolId s : l.stem) {
    std::vector<StateId> next;
    for (StateId q : cur)
      for (const Trans* t = a.begin_from(q); t != a.end_from(q); ++t)
        if (t->sym == s) next.push_back(t->to);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
    if (cur.empty()) return false;
  }
  // Layered loop graph on (state, position); accept iff a reachable cycle
  // visits an accepting state.
  const size_t m = l.loop.size();
  auto node = [&](StateId q, size_t i) { return q * m + i; };
  std::vector<std::vector<uint32_t>> adj(a.num_states() * m);
  for (StateId q = 0; q < a.num_states(); ++q)
    for (size_t i = 0; i < m; ++i)
      for (const Trans* t = a.begin_from(q); t != a.end_from(q); ++t)
        if (t->sym == l.loop[i])
          adj[node(q, i)].push_back(node(t->to, (i + 1) % m));
  // reachability from the stem frontier at position 0
  std::vector<bool> reach(adj.size(), false);
  std::vector<uint32_t> stack;
  for (StateId q : cur) {
    if (!reach[node(q, 0)]) reach[node(q, 0)] = true, stack.push_back(node(q, 0));
  }
  while (!stack.empty()) {
    uint32_t v = stack.back();
    stack.pop_back();
    for (uint32_t w : adj[v])
      if (!reach[w]) reach[w] = true, stack.push_back(w);
  }
  auto [comp, ncomp] = tarjan(adj);
  std::vector<uint32_t> size(ncomp, 0);
  std::vector<bool> self(ncomp, false);
  for (uint32_t v = 0; v < adj.size(); ++v) {
    size[comp[v]]++;
    for (uint32_t w : adj[v])
      if (w == v) self[comp[v]] = true;
  }
  for (uint32_t v = 0; v < adj.size(); ++v) {
    if (!reach[v]) continue;
    StateId q = static_cast<StateId>(v / m);
    if (!a.accepting(q)) continue;
    uint32_t c = comp[v];
    if (size[c] > 1 || self[c]) return true;
  }
  return false;
}

}  // namespace rmc
