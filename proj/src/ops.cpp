#include "rmc/ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "rmc/detail/partition.hpp"
#include "rmc/weak.hpp"

namespace rmc {

namespace {

// Renumbers states in BFS discovery order from the initial state, exploring
// symbols in alphabet order. Input must be deterministic with every state
// reachable. This is the canonical numbering shared by all minimizers.
Automaton bfs_renumber(const Automaton& a) {
  std::vector<StateId> order(a.num_states(), UINT32_MAX);
  std::vector<StateId> queue;
  if (!a.initial().empty()) {
    order[a.initial()[0]] = 0;
    queue.push_back(a.initial()[0]);
  }
  for (size_t i = 0; i < queue.size(); ++i) {
    StateId q = queue[i];
    for (const Trans* t = a.begin_from(q); t != a.end_from(q); ++t) {
      if (order[t->to] == UINT32_MAX) {
        order[t->to] = static_cast<StateId>(queue.size());
        queue.push_back(t->to);
      }
    }
  }
  uint32_t n = static_cast<uint32_t>(queue.size());
  std::vector<bool> acc(n, false);
  std::vector<Trans> trans;
  trans.reserve(a.num_transitions());
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (order[q] == UINT32_MAX) continue;
    acc[order[q]] = a.accepting(q);
    for (const Trans* t = a.begin_from(q); t != a.end_from(q); ++t)
      trans.push_back({order[q], t->sym, order[t->to]});
  }
  std::vector<StateId> init;
  if (!a.initial().empty()) init.push_back(0);
  return Automaton(a.alphabet(), a.kind(), n, std::move(init), std::move(acc),
                   std::move(trans));
}

}  // namespace

std::vector<uint32_t> detail::hopcroft_refine(const Automaton& a,
                                              const std::vector<bool>& accept_flag) {
  const uint32_t n = a.num_states();
  const uint32_t sink = n;
  const size_t nsym = a.alphabet().size();

  // Inverse transition lists over the completed automaton.
  std::vector<std::vector<StateId>> inv(static_cast<size_t>(n + 1) * nsym);
  std::vector<bool> has_edge(static_cast<size_t>(n) * nsym, false);
  for (const Trans& t : a.transitions()) {
    inv[static_cast<size_t>(t.to) * nsym + t.sym].push_back(t.from);
    has_edge[static_cast<size_t>(t.from) * nsym + t.sym] = true;
  }
  for (StateId q = 0; q < n; ++q)
    for (size_t s = 0; s < nsym; ++s)
      if (!has_edge[static_cast<size_t>(q) * nsym + s])
        inv[static_cast<size_t>(sink) * nsym + s].push_back(q);
  for (size_t s = 0; s < nsym; ++s)
    inv[static_cast<size_t>(sink) * nsym + s].push_back(sink);

  std::vector<uint32_t> cls(n + 1);
  std::vector<std::vector<StateId>> members(2);
  for (StateId q = 0; q < n; ++q) {
    cls[q] = accept_flag[q] ? 1 : 0;
    members[cls[q]].push_back(q);
  }
  cls[sink] = 0;
  members[0].push_back(sink);
  if (members[1].empty()) members.pop_back();

  std::deque<uint32_t> work;
  std::vector<bool> in_work(members.size(), true);
  for (uint32_t c = 0; c < members.size(); ++c) work.push_back(c);

  std::vector<uint32_t> touched_count;   // per class, states hit by X
  std::vector<uint32_t> touched_classes;
  std::vector<std::vector<StateId>> hit;  // per class, the hit states

  while (!work.empty()) {
    uint32_t splitter = work.front();
    work.pop_front();
    in_work[splitter] = false;
    std::vector<StateId> splitter_members = members[splitter];

    for (size_t s = 0; s < nsym; ++s) {
      touched_classes.clear();
      if (touched_count.size() < members.size()) {
        touched_count.resize(members.size(), 0);
        hit.resize(members.size());
      }
      for (StateId q : splitter_members) {
        for (StateId p : inv[static_cast<size_t>(q) * nsym + s]) {
          uint32_t c = cls[p];
          if (touched_count[c] == 0) touched_classes.push_back(c);
          if (touched_count[c]++ == 0) hit[c].clear();
          hit[c].push_back(p);
        }
      }
      for (uint32_t c : touched_classes) {
        if (touched_count[c] == members[c].size()) {
          touched_count[c] = 0;
          continue;  // class entirely inside X, no split
        }
        // Split class c into hit part and the rest.
        uint32_t fresh = static_cast<uint32_t>(members.size());
        std::vector<StateId> hit_part = hit[c];
        std::vector<bool> is_hit_local;
        {
          std::vector<StateId> rest;
          rest.reserve(members[c].size() - hit_part.size());
          std::vector<bool> mark(0);
          // mark hit states
          std::sort(hit_part.begin(), hit_part.end());
          for (StateId q : members[c])
            if (!std::binary_search(hit_part.begin(), hit_part.end(), q))
              rest.push_back(q);
          members[c] = std::move(rest);
          members.push_back(hit_part);
          for (StateId q : members[fresh]) cls[q] = fresh;
        }
        touched_count[c] = 0;
        touched_count.resize(members.size(), 0);
        hit.resize(members.size());
        in_work.resize(members.size(), false);
        if (in_work[c]) {
          work.push_back(fresh);
          in_work[fresh] = true;
        } else {
          uint32_t smaller =
              members[fresh].size() < members[c].size() ? fresh : c;
          work.push_back(smaller);
          in_work[smaller] = true;
        }
      }
    }
  }
  cls.pop_back();  // drop sink entry; its class survives only as a label
  return cls;
}

namespace {

// Quotient of a deterministic automaton by the given state classes. Classes
// containing the sink-equivalent (dead) states must already be pruned away.
Automaton quotient(const Automaton& a, const std::vector<uint32_t>& cls,
                   uint32_t num_classes) {
  std::vector<bool> acc(num_classes, false);
  std::vector<StateId> init;
  std::vector<Trans> trans;
  for (StateId q : a.initial()) init.push_back(cls[q]);
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (a.accepting(q)) acc[cls[q]] = true;
    for (const Trans* t = a.begin_from(q); t != a.end_from(q); ++t)
      trans.push_back({cls[q], t->sym, cls[t->to]});
  }
  return Automaton(a.alphabet(), a.kind(), num_classes, std::move(init),
                   std::move(acc), std::move(trans));
}

}  // namespace

std::vector<bool> reachable_states(const Automaton& a) {
  std::vector<bool> seen(a.num_states(), false);
  std::vector<StateId> stack;
  for (StateId q : a.initial()) {
    if (!seen[q]) seen[q] = true, stack.push_back(q);
  }
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (const Trans* t = a.begin_from(q); t != a.end_from(q); ++t)
      if (!seen[t->to]) seen[t->to] = true, stack.push_back(t->to);
  }
  return seen;
}

std::vector<bool> live_states(const Automaton& a) {
  const uint32_t n = a.num_states();
  std::vector<std::vector<StateId>> pred(n);
  for (const Trans& t : a.transitions()) pred[t.to].push_back(t.from);
  std::vector<bool> live(n, false);
  std::vector<StateId> stack;
  if (a.kind() == Kind::FiniteWord) {
    for (StateId q = 0; q < n; ++q)
      if (a.accepting(q)) live[q] = true, stack.push_back(q);
  } else {
    SccDecomposition scc = scc_decompose(a);
    for (StateId q = 0; q < n; ++q) {
      uint32_t c = scc.component[q];
      if (scc.has_cycle[c] && scc.any_accepting[c])
        live[q] = true, stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (StateId p : pred[q])
      if (!live[p]) live[p] = true, stack.push_back(p);
  }
  return live;
}

Automaton prune(const Automaton& a) {
  std::vector<bool> reach = reachable_states(a);
  std::vector<bool> live = live_states(a);
  std::vector<StateId> remap(a.num_states(), UINT32_MAX);
  uint32_t n = 0;
  for (StateId q = 0; q < a.num_states(); ++q)
    if (reach[q] && live[q]) remap[q] = n++;
  std::vector<bool> acc(n, false);
  std::vector<StateId> init;
  std::vector<Trans> trans;
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (remap[q] == UINT32_MAX) continue;
    acc[remap[q]] = a.accepting(q);
    for (const Trans* t = a.begin_from(q); t != a.end_from(q); ++t)
      if (remap[t->to] != UINT32_MAX)
        trans.push_back({remap[q], t->sym, remap[t->to]});
  }
  for (StateId q : a.initial())
    if (remap[q] != UINT32_MAX) init.push_back(remap[q]);
  return Automaton(a.alphabet(), a.kind(), n, std::move(init), std::move(acc),
                   std::move(trans));
}

Automaton determinize(const Automaton& a, const SubsetReducer& reduce) {
  std::map<std::vector<StateId>, StateId> ids;
  std::vector<std::vector<StateId>> subsets;
  std::vector<bool> acc;
  std::vector<Trans> trans;

  auto intern = [&](std::vector<StateId> set) -> StateId {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (reduce) reduce(set);
    auto [it, fresh] = ids.try_emplace(std::move(set), 0);
    if (fresh) {
      it->second = static_cast<StateId>(subsets.size());
      subsets.push_back(it->first);
      bool any = false;
      for (StateId q : it->first) any = any || a.accepting(q);
      acc.push_back(any);
    }
    return it->second;
  };

  std::vector<StateId> init;
  if (!a.initial().empty()) {
    std::vector<StateId> start(a.initial().begin(), a.initial().end());
    init.push_back(intern(std::move(start)));
  }
  const size_t nsym = a.alphabet().size();
  for (StateId s = 0; s < subsets.size(); ++s) {
    std::vector<std::vector<StateId>> next(nsym);
    for (StateId q : subsets[s])
      for (const Trans* t = a.begin_from(q); t != a.end_from(q); ++t)
        next[t->sym].push_back(t->to);
    for (size_t sym = 0; sym < nsym; ++sym) {
      if (next[sym].empty()) continue;
      StateId to = intern(std::move(next[sym]));
      trans.push_back({s, static_cast<SymbolId>(sym), to});
    }
  }
  return Automaton(a.alphabet(), a.kind(), static_cast<uint32_t>(subsets.size()),
                   std::move(init), std::move(acc), std::move(trans));
}

Automaton minimize(const Automaton& a) {
  if (a.kind() != Kind::FiniteWord)
    throw std::invalid_argument("minimize expects a finite-word automaton");
  if (!a.deterministic()) throw NotDeterministic();
  Automaton p = prune(a);
  if (p.num_states() == 0) return p;
  std::vector<bool> flags(p.accepting().begin(), p.accepting().end());
  std::vector<uint32_t> cls = detail::hopcroft_refine(p, flags);
  uint32_t num_classes = 0;
  {
    std::vector<uint32_t> remap(p.num_states() + 2, UINT32_MAX);
    for (StateId q = 0; q < p.num_states(); ++q) {
      if (remap[cls[q]] == UINT32_MAX) remap[cls[q]] = num_classes++;
      cls[q] = remap[cls[q]];
    }
  }
  return bfs_renumber(quotient(p, cls, num_classes));
}

Automaton canonical_min(const Automaton& a) {
  if (a.deterministic()) return minimize(a);
  return minimize(determinize(a));
}

Automaton union_canonical(const Automaton& a, const Automaton& b) {
  if (a.alphabet() != b.alphabet() || a.kind() != b.kind())
    throw AlphabetMismatch();
  AutomatonBuilder u(a.alphabet(), a.kind());
  for (StateId q = 0; q < a.num_states(); ++q) u.add_state(a.accepting(q));
  for (StateId q = 0; q < b.num_states(); ++q) u.add_state(b.accepting(q));
  for (const Trans& t : a.transitions()) u.add_trans(t.from, t.sym, t.to);
  for (const Trans& t : b.transitions())
    u.add_trans(a.num_states() + t.from, t.sym, a.num_states() + t.to);
  for (StateId q : a.initial()) u.initial.push_back(q);
  for (StateId q : b.initial()) u.initial.push_back(a.num_states() + q);
  return canonical_form(u.build());
}

Automaton universal(const Alphabet& alphabet, Kind kind) {
  AutomatonBuilder b(alphabet, kind);
  StateId q = b.add_state(true);
  b.initial.push_back(q);
  for (SymbolId s = 0; s < alphabet.size(); ++s) b.add_trans(q, s, q);
  return b.build();
}

Automaton empty_automaton(const Alphabet& alphabet, Kind kind) {
  return Automaton(alphabet, kind, 0, {}, {}, {});
}

Automaton boolean(BoolOp op, const Automaton& a, const Automaton& b) {
  if (a.alphabet() != b.alphabet()) throw AlphabetMismatch();
  if (a.kind() != Kind::FiniteWord || b.kind() != Kind::FiniteWord)
    throw std::invalid_argument("boolean expects finite-word automata");
  switch (op) {
    case BoolOp::Union: {
      // Disjoint union, then canonical determinization.
      AutomatonBuilder u(a.alphabet(), Kind::FiniteWord);
      for (StateId q = 0; q < a.num_states(); ++q) u.add_state(a.accepting(q));
      for (StateId q = 0; q < b.num_states(); ++q) u.add_state(b.accepting(q));
      for (const Trans& t : a.transitions()) u.add_trans(t.from, t.sym, t.to);
      for (const Trans& t : b.transitions())
        u.add_trans(a.num_states() + t.from, t.sym, a.num_states() + t.to);
      for (StateId q : a.initial()) u.initial.push_back(q);
      for (StateId q : b.initial()) u.initial.push_back(a.num_states() + q);
      return canonical_min(u.build());
    }
    case BoolOp::Intersection: {
      // Reachable pair product.
      Automaton da = a.deterministic() ? a : determinize(a);
      Automaton db = b.deterministic() ? b : determinize(b);
      std::map<std::pair<StateId, StateId>, StateId> ids;
      std::vector<std::pair<StateId, StateId>> pairs;
      AutomatonBuilder p(a.alphabet(), Kind::FiniteWord);
      auto intern = [&](StateId x, StateId y) {
        auto [it, fresh] = ids.try_emplace({x, y}, 0);
        if (fresh) {
          it->second = p.add_state(da.accepting(x) && db.accepting(y));
          pairs.push_back({x, y});
        }
        return it->second;
      };
      if (!da.initial().empty() && !db.initial().empty())
        p.initial.push_back(intern(da.initial()[0], db.initial()[0]));
      for (StateId s = 0; s < pairs.size(); ++s) {
        auto [x, y] = pairs[s];
        for (const Trans* t = da.begin_from(x); t != da.end_from(x); ++t)
          if (auto y2 = db.step(y, t->sym))
            p.add_trans(s, t->sym, intern(t->to, *y2));
      }
      return canonical_min(p.build());
    }
    case BoolOp::Difference:
      return boolean(BoolOp::Intersection, a, complement(b));
  }
  throw std::logic_error("unreachable");
}

Automaton complement(const Automaton& a) {
  if (a.kind() != Kind::FiniteWord)
    throw std::invalid_argument("complement expects a finite-word automaton");
  Automaton d = a.deterministic() ? a : determinize(a);
  AutomatonBuilder b(d.alphabet(), Kind::FiniteWord);
  for (StateId q = 0; q < d.num_states(); ++q) b.add_state(!d.accepting(q));
  StateId sink = b.add_state(true);
  for (const Trans& t : d.transitions()) b.add_trans(t.from, t.sym, t.to);
  std::vector<bool> has(static_cast<size_t>(d.num_states()) *
                            d.alphabet().size(),
                        false);
  for (const Trans& t : d.transitions())
    has[static_cast<size_t>(t.from) * d.alphabet().size() + t.sym] = true;
  for (StateId q = 0; q < d.num_states(); ++q)
    for (SymbolId s = 0; s < d.alphabet().size(); ++s)
      if (!has[static_cast<size_t>(q) * d.alphabet().size() + s])
        b.add_trans(q, s, sink);
  for (SymbolId s = 0; s < d.alphabet().size(); ++s) b.add_trans(sink, s, sink);
  if (d.initial().empty())
    b.initial.push_back(sink);
  else
    b.initial.push_back(d.initial()[0]);
  return minimize(b.build());
}

Emptiness is_empty(const Automaton& a) {
  if (a.kind() == Kind::FiniteWord) {
    // BFS for a shortest accepted word.
    std::vector<int64_t> parent(a.num_states(), -1);
    std::vector<SymbolId> via(a.num_states(), 0);
    std::vector<bool> seen(a.num_states(), false);
    std::queue<StateId> queue;
    for (StateId q : a.initial()) {
      if (!seen[q]) seen[q] = true, parent[q] = -2, queue.push(q);
    }
    std::optional<StateId> goal;
    while (!queue.empty() && !goal) {
      StateId q = queue.front();
      queue.pop();
      if (a.accepting(q)) {
        goal = q;
        break;
      }
      for (const Trans* t = a.begin_from(q); t != a.end_from(q); ++t)
        if (!seen[t->to]) {
          seen[t->to] = true;
          parent[t->to] = q;
          via[t->to] = t->sym;
          queue.push(t->to);
        }
    }
    if (!goal) return {true, std::nullopt, std::nullopt};
    Word w;
    StateId q = *goal;
    while (parent[q] != -2) {
      w.push_back(via[q]);
      q = static_cast<StateId>(parent[q]);
    }
    std::reverse(w.begin(), w.end());
    return {false, std::move(w), std::nullopt};
  }

  // Buchi emptiness: BFS depths, then the shallowest state on an accepting
  // cycle; loop found by BFS inside its component.
  std::vector<bool> reach = reachable_states(a);
  SccDecomposition scc = scc_decompose(a);
  std::vector<int64_t> parent(a.num_states(), -1);
  std::vector<SymbolId> via(a.num_states(), 0);
  std::vector<uint32_t> depth(a.num_states(), UINT32_MAX);
  std::queue<StateId> queue;
  for (StateId q : a.initial()) {
    depth[q] = 0;
    parent[q] = -2;
    queue.push(q);
  }
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop();
    for (const Trans* t = a.begin_from(q); t != a.end_from(q); ++t)
      if (depth[t->to] == UINT32_MAX) {
        depth[t->to] = depth[q] + 1;
        parent[t->to] = q;
        via[t->to] = t->sym;
        queue.push(t->to);
      }
  }
  std::optional<StateId> anchor;
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (!reach[q] || !a.accepting(q)) continue;
    uint32_t c = scc.component[q];
    if (!scc.has_cycle[c]) continue;
    if (!anchor || depth[q] < depth[*anchor]) anchor = q;
  }
  if (!anchor) return {true, std::nullopt, std::nullopt};
  Word stem;
  for (StateId q = *anchor; parent[q] != -2;
       q = static_cast<StateId>(parent[q]))
    stem.push_back(via[q]);
  std::reverse(stem.begin(), stem.end());
  // Shortest cycle through anchor staying in its component.
  uint32_t comp = scc.component[*anchor];
  std::vector<int64_t> lp(a.num_states(), -1);
  std::vector<SymbolId> lv(a.num_states(), 0);
  std::queue<StateId> lq;
  lq.push(*anchor);
  lp[*anchor] = -2;
  Word loop;
  bool closed = false;
  while (!lq.empty() && !closed) {
    StateId q = lq.front();
    lq.pop();
    for (const Trans* t = a.begin_from(q); t != a.end_from(q); ++t) {
      if (scc.component[t->to] != comp) continue;
      if (t->to == *anchor) {
        loop.push_back(t->sym);
        for (StateId p = q; lp[p] != -2; p = static_cast<StateId>(lp[p]))
          loop.push_back(lv[p]);
        std::reverse(loop.begin(), loop.end());
        closed = true;
        break;
      }
      if (lp[t->to] == -1) {
        lp[t->to] = q;
        lv[t->to] = t->sym;
        lq.push(t->to);
      }
    }
  }
  return {false, std::nullopt, Lasso{std::move(stem), std::move(loop)}};
}

bool graph_equal(const Automaton& a, const Automaton& b) {
  return a.alphabet() == b.alphabet() && a.kind() == b.kind() &&
         a.num_states() == b.num_states() && a.initial() == b.initial() &&
         a.accepting() == b.accepting() &&
         a.transitions() == b.transitions();
}

bool language_equal(const Automaton& a, const Automaton& b) {
  if (a.alphabet() != b.alphabet() || a.kind() != b.kind())
    throw AlphabetMismatch();
  return graph_equal(canonical_form(a), canonical_form(b));
}

Automaton synchronous_product(const Automaton& a, const Automaton& b) {
  if (a.kind() != b.kind())
    throw std::invalid_argument("synchronous product needs matching kinds");
  Alphabet alpha = Alphabet::product(a.alphabet(), b.alphabet());
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  AutomatonBuilder p(alpha, a.kind());
  auto intern = [&](StateId x, StateId y) {
    auto [it, fresh] = ids.try_emplace({x, y}, 0);
    if (fresh) {
      it->second = p.add_state(a.accepting(x) && b.accepting(y));
      pairs.push_back({x, y});
    }
    return it->second;
  };
  for (StateId x : a.initial())
    for (StateId y : b.initial()) p.initial.push_back(intern(x, y));
  const size_t bsz = b.alphabet().size();
  for (StateId s = 0; s < pairs.size(); ++s) {
    auto [x, y] = pairs[s];
    for (const Trans* ta = a.begin_from(x); ta != a.end_from(x); ++ta)
      for (const Trans* tb = b.begin_from(y); tb != b.end_from(y); ++tb) {
        SymbolId sym = static_cast<SymbolId>(ta->sym * bsz + tb->sym);
        p.add_trans(s, sym, intern(ta->to, tb->to));
      }
  }
  return prune(p.build());
}

Automaton project(const Automaton& a, int track) {
  if (track < 0 || track >= a.alphabet().arity()) throw BadTrackIndex();
  if (a.alphabet().arity() < 2)
    throw BadTrackIndex();
  Alphabet alpha = a.alphabet().drop_track(track);
  std::vector<Trans> trans;
  trans.reserve(a.num_transitions());
  for (const Trans& t : a.transitions())
    trans.push_back({t.from, a.alphabet().drop_symbol(t.sym, track), t.to});
  return Automaton(alpha, a.kind(), a.num_states(), a.initial(), a.accepting(),
                   std::move(trans));
}

std::optional<StateMap> find_isomorphism(const Automaton& a,
                                         const Automaton& b) {
  if (a.alphabet() != b.alphabet() || a.kind() != b.kind()) return std::nullopt;
  if (!a.deterministic() || !b.deterministic()) throw NotDeterministic();
  if (a.num_states() != b.num_states()) return std::nullopt;
  if (a.initial().empty() != b.initial().empty()) return std::nullopt;
  StateMap map;
  if (a.initial().empty()) return map;
  std::vector<int64_t> fwd(a.num_states(), -1);
  std::vector<StateId> stack;
  fwd[a.initial()[0]] = b.initial()[0];
  stack.push_back(a.initial()[0]);
  while (!stack.empty()) {
    StateId x = stack.back();
    stack.pop_back();
    StateId y = static_cast<StateId>(fwd[x]);
    if (a.accepting(x) != b.accepting(y)) return std::nullopt;
    const Trans* ta = a.begin_from(x);
    const Trans* tb = b.begin_from(y);
    if (a.end_from(x) - ta != b.end_from(y) - tb) return std::nullopt;
    for (; ta != a.end_from(x); ++ta, ++tb) {
      if (ta->sym != tb->sym) return std::nullopt;
      if (fwd[ta->to] == -1) {
        fwd[ta->to] = tb->to;
        stack.push_back(ta->to);
      } else if (fwd[ta->to] != tb->to) {
        return std::nullopt;
      }
    }
  }
  std::vector<bool> used(b.num_states(), false);
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (fwd[q] == -1) return std::nullopt;  // not total: unreachable states
    if (used[fwd[q]]) return std::nullopt;
    used[fwd[q]] = true;
    map.add(q, static_cast<StateId>(fwd[q]));
  }
  return map;
}

bool accepts(const Automaton& a, const Word& w) {
  std::vector<StateId> cur(a.initial().begin(), a.initial().end());
  for (SymbolId s : w) {
    std::vector<StateId> next;
    for (StateId q : cur)
      for (const Trans* t = a.begin_from(q); t != a.end_from(q); ++t)
        if (t->sym == s) next.push_back(t->to);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
    if (cur.empty()) return false;
  }
  for (StateId q : cur)
    if (a.accepting(q)) return true;
  return false;
}

}  // namespace rmc
