#include "rmc/counter.hpp"

#include <algorithm>
#include <map>

#include "rmc/ops.hpp"
#include "rmc/weak.hpp"

namespace rmc {

CounterAutomaton::CounterAutomaton(int dimension, Alphabet base, Kind kind,
                                   uint32_t num_states,
                                   std::vector<StateId> initial,
                                   std::vector<bool> accepting,
                                   std::vector<CounterTrans> trans)
    : dimension_(dimension),
      base_(std::move(base)),
      kind_(kind),
      num_states_(num_states),
      initial_(std::move(initial)),
      accepting_(std::move(accepting)),
      trans_(std::move(trans)) {
  if (dimension_ < 1) throw std::invalid_argument("dimension must be >= 1");
  std::sort(initial_.begin(), initial_.end());
  initial_.erase(std::unique(initial_.begin(), initial_.end()),
                 initial_.end());
  std::sort(trans_.begin(), trans_.end());
  trans_.erase(std::unique(trans_.begin(), trans_.end()), trans_.end());
  for (const CounterTrans& t : trans_) {
    if (t.from >= num_states_ || t.to >= num_states_)
      throw std::invalid_argument("transition references unknown state");
    if (t.sym >= base_.size())
      throw std::invalid_argument("transition references unknown symbol");
    if (t.inc.size() != static_cast<size_t>(dimension_))
      throw DimensionMismatch();
  }
  if (accepting_.size() != num_states_)
    throw std::invalid_argument("accepting vector size mismatch");
}

uint32_t max_increment(const CounterAutomaton& ac) {
  uint32_t d = 0;
  for (const CounterTrans& t : ac.transitions())
    for (uint32_t v : t.inc) d = std::max(d, v);
  return d;
}

Automaton counterless(const CounterAutomaton& ac) {
  std::vector<Trans> trans;
  trans.reserve(ac.transitions().size());
  for (const CounterTrans& t : ac.transitions())
    trans.push_back({t.from, t.sym, t.to});
  return Automaton(ac.base(), ac.kind(), ac.num_states(), ac.initial(),
                   ac.accepting(), std::move(trans));
}

namespace {

Alphabet extended_alphabet(const Alphabet& base, int n, uint32_t d) {
  std::vector<std::vector<std::string>> tracks;
  for (int t = 0; t < base.arity(); ++t) tracks.push_back(base.track_labels(t));
  std::vector<std::string> counts;
  for (uint32_t v = 0; v <= d; ++v) counts.push_back(std::to_string(v));
  for (int c = 0; c < n; ++c) tracks.push_back(counts);
  return Alphabet(std::move(tracks));
}

}  // namespace

Automaton extended(const CounterAutomaton& ac, uint32_t d) {
  if (d < max_increment(ac))
    throw std::invalid_argument("extended alphabet bound below max increment");
  Alphabet ext = extended_alphabet(ac.base(), ac.dimension(), d);
  int base_arity = ac.base().arity();
  std::vector<Trans> trans;
  trans.reserve(ac.transitions().size());
  std::vector<uint32_t> digits(static_cast<size_t>(ext.arity()));
  for (const CounterTrans& t : ac.transitions()) {
    for (int b = 0; b < base_arity; ++b)
      digits[static_cast<size_t>(b)] = ac.base().track(t.sym, b);
    for (int c = 0; c < ac.dimension(); ++c)
      digits[static_cast<size_t>(base_arity + c)] = t.inc[static_cast<size_t>(c)];
    trans.push_back({t.from, ext.make(digits), t.to});
  }
  return Automaton(ext, ac.kind(), ac.num_states(), ac.initial(),
                   ac.accepting(), std::move(trans));
}

CounterAutomaton from_extended(const Automaton& a, int n) {
  if (a.alphabet().arity() <= n) throw MalformedExtendedSymbol();
  int base_arity = a.alphabet().arity() - n;
  std::vector<std::vector<std::string>> base_tracks;
  for (int t = 0; t < base_arity; ++t)
    base_tracks.push_back(a.alphabet().track_labels(t));
  Alphabet base(std::move(base_tracks));
  // counter tracks must be numeric labels
  for (int c = 0; c < n; ++c)
    for (const std::string& lab : a.alphabet().track_labels(base_arity + c))
      if (lab.empty() ||
          lab.find_first_not_of("0123456789") != std::string::npos)
        throw MalformedExtendedSymbol();
  std::vector<CounterTrans> trans;
  trans.reserve(a.transitions().size());
  std::vector<uint32_t> digits(static_cast<size_t>(base_arity));
  for (const Trans& t : a.transitions()) {
    for (int b = 0; b < base_arity; ++b)
      digits[static_cast<size_t>(b)] = a.alphabet().track(t.sym, b);
    CounterVec inc(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) {
      const std::string& lab =
          a.alphabet().track_labels(base_arity + c)[a.alphabet().track(
              t.sym, base_arity + c)];
      inc[static_cast<size_t>(c)] =
          static_cast<uint32_t>(std::stoul(lab));
    }
    trans.push_back({t.from, base.make(digits), t.to, std::move(inc)});
  }
  return CounterAutomaton(n, std::move(base), a.kind(), a.num_states(),
                          a.initial(), a.accepting(), std::move(trans));
}

CounterAutomaton counter_zero(const Automaton& a) {
  std::vector<CounterTrans> trans;
  trans.reserve(a.transitions().size());
  for (const Trans& t : a.transitions())
    trans.push_back({t.from, t.sym, t.to, {0}});
  return CounterAutomaton(1, a.alphabet(), a.kind(), a.num_states(),
                          a.initial(), a.accepting(), std::move(trans));
}

namespace {

CounterVec concat(const CounterVec& a, const CounterVec& b) {
  CounterVec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

CounterAutomaton counter_intersection(const CounterAutomaton& a1,
                                      const CounterAutomaton& a2) {
  if (a1.base() != a2.base()) throw AlphabetMismatch();
  if (a1.kind() != a2.kind())
    throw std::invalid_argument("counter intersection needs matching kinds");
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  std::vector<bool> acc;
  std::vector<CounterTrans> trans;
  std::vector<std::vector<const CounterTrans*>> from1(a1.num_states()),
      from2(a2.num_states());
  for (const CounterTrans& t : a1.transitions()) from1[t.from].push_back(&t);
  for (const CounterTrans& t : a2.transitions()) from2[t.from].push_back(&t);
  auto intern = [&](StateId x, StateId y) {
    auto [it, fresh] = ids.try_emplace({x, y}, 0);
    if (fresh) {
      it->second = static_cast<StateId>(pairs.size());
      pairs.push_back({x, y});
      acc.push_back(a1.accepting(x) && a2.accepting(y));
    }
    return it->second;
  };
  std::vector<StateId> init;
  for (StateId x : a1.initial())
    for (StateId y : a2.initial()) init.push_back(intern(x, y));
  for (StateId s = 0; s < pairs.size(); ++s) {
    auto [x, y] = pairs[s];
    for (const CounterTrans* t1 : from1[x])
      for (const CounterTrans* t2 : from2[y])
        if (t1->sym == t2->sym)
          trans.push_back(
              {s, t1->sym, intern(t1->to, t2->to), concat(t1->inc, t2->inc)});
  }
  return CounterAutomaton(a1.dimension() + a2.dimension(), a1.base(),
                          a1.kind(), static_cast<uint32_t>(pairs.size()),
                          std::move(init), std::move(acc), std::move(trans));
}

CounterAutomaton counter_composition(const CounterAutomaton& outer,
                                     const CounterAutomaton& inner) {
  if (outer.base() != inner.base()) throw AlphabetMismatch();
  if (outer.base().arity() != 2)
    throw std::invalid_argument("counter composition needs pair alphabets");
  if (outer.kind() != inner.kind())
    throw std::invalid_argument("counter composition needs matching kinds");
  const Alphabet& alpha = inner.base();
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  std::vector<bool> acc;
  std::vector<CounterTrans> trans;
  std::vector<std::vector<const CounterTrans*>> from_in(inner.num_states()),
      from_out(outer.num_states());
  for (const CounterTrans& t : inner.transitions())
    from_in[t.from].push_back(&t);
  for (const CounterTrans& t : outer.transitions())
    from_out[t.from].push_back(&t);
  auto intern = [&](StateId x, StateId y) {
    auto [it, fresh] = ids.try_emplace({x, y}, 0);
    if (fresh) {
      it->second = static_cast<StateId>(pairs.size());
      pairs.push_back({x, y});
      acc.push_back(inner.accepting(x) && outer.accepting(y));
    }
    return it->second;
  };
  std::vector<StateId> init;
  for (StateId x : inner.initial())
    for (StateId y : outer.initial()) init.push_back(intern(x, y));
  for (StateId s = 0; s < pairs.size(); ++s) {
    auto [x, y] = pairs[s];
    for (const CounterTrans* ti : from_in[x]) {
      uint32_t in = alpha.track(ti->sym, 0);
      uint32_t mid = alpha.track(ti->sym, 1);
      for (const CounterTrans* to : from_out[y]) {
        if (alpha.track(to->sym, 0) != mid) continue;
        uint32_t out = alpha.track(to->sym, 1);
        trans.push_back({s, alpha.make({in, out}), intern(ti->to, to->to),
                         concat(ti->inc, to->inc)});
      }
    }
  }
  return CounterAutomaton(inner.dimension() + outer.dimension(), alpha,
                          inner.kind(), static_cast<uint32_t>(pairs.size()),
                          std::move(init), std::move(acc), std::move(trans));
}

CounterAutomaton counter_image(const Transducer& t,
                               const CounterAutomaton& ac) {
  if (ac.base().arity() != 1 ||
      ac.base().track_labels(0) != t.alphabet().track_labels(0))
    throw AlphabetMismatch();
  if (ac.kind() != t.kind())
    throw std::invalid_argument("counter image needs matching kinds");
  const Automaton& tr = t.automaton();
  const Alphabet& alpha = tr.alphabet();
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  std::vector<bool> acc;
  std::vector<CounterTrans> trans;
  std::vector<std::vector<const CounterTrans*>> from_ac(ac.num_states());
  for (const CounterTrans& ct : ac.transitions())
    from_ac[ct.from].push_back(&ct);
  auto intern = [&](StateId x, StateId y) {
    auto [it, fresh] = ids.try_emplace({x, y}, 0);
    if (fresh) {
      it->second = static_cast<StateId>(pairs.size());
      pairs.push_back({x, y});
      acc.push_back(ac.accepting(x) && tr.accepting(y));
    }
    return it->second;
  };
  std::vector<StateId> init;
  for (StateId x : ac.initial())
    for (StateId y : tr.initial()) init.push_back(intern(x, y));
  for (StateId s = 0; s < pairs.size(); ++s) {
    auto [x, y] = pairs[s];
    for (const CounterTrans* ct : from_ac[x])
      for (const Trans* tt = tr.begin_from(y); tt != tr.end_from(y); ++tt)
        if (alpha.track(tt->sym, 0) == ct->sym)
          trans.push_back({s, alpha.track(tt->sym, 1),
                           intern(ct->to, tt->to), ct->inc});
  }
  return CounterAutomaton(ac.dimension(), ac.base(), ac.kind(),
                          static_cast<uint32_t>(pairs.size()), std::move(init),
                          std::move(acc), std::move(trans));
}

CounterAutomaton counter_project(const CounterAutomaton& ac, int i) {
  if (i < 0 || i >= ac.dimension()) throw BadCounterIndex();
  if (ac.dimension() == 1)
    throw BadCounterIndex();  // would leave a zero-dimensional automaton
  std::vector<CounterTrans> trans;
  trans.reserve(ac.transitions().size());
  for (const CounterTrans& t : ac.transitions()) {
    CounterVec inc;
    inc.reserve(t.inc.size() - 1);
    for (size_t c = 0; c < t.inc.size(); ++c)
      if (static_cast<int>(c) != i) inc.push_back(t.inc[c]);
    trans.push_back({t.from, t.sym, t.to, std::move(inc)});
  }
  return CounterAutomaton(ac.dimension() - 1, ac.base(), ac.kind(),
                          ac.num_states(), ac.initial(), ac.accepting(),
                          std::move(trans));
}

CounterAutomaton counter_project_set(const CounterAutomaton& ac,
                                     std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  CounterAutomaton cur = ac;
  // project from the highest index down so earlier indices stay valid
  for (auto it = indices.rbegin(); it != indices.rend(); ++it)
    cur = counter_project(cur, *it);
  return cur;
}

CounterAutomaton universal_synchronized(const Alphabet& base, Kind kind, int n,
                                        uint32_t d, int ci, int cj,
                                        uint32_t M) {
  if (M < 1) throw std::invalid_argument("synchronization bound must be >= 1");
  if (ci == cj || ci < 0 || cj < 0 || ci >= n || cj >= n)
    throw BadCounterIndex();
  const int64_t m = static_cast<int64_t>(M);
  // state ids: 0 = initial; 1..2M-1 = difference l in [-M+1, M-1]
  // (id = l + M); 2M..3M-1 = saturated zone l in [M, 2M-1] (id = l + M).
  auto lower = [&](int64_t l) { return static_cast<StateId>(l + m); };
  auto upper = [&](int64_t l) { return static_cast<StateId>(l + m); };
  const uint32_t num_states = static_cast<uint32_t>(3 * m);
  std::vector<bool> acc(num_states, false);
  acc[0] = true;  // all-zero-difference runs accept through the initial state
  for (int64_t l = 1; l <= 2 * m - 1; ++l) acc[lower(l)] = true;

  // enumerate increment vectors in [0,d]^n
  std::vector<CounterVec> vecs;
  CounterVec cur(static_cast<size_t>(n), 0);
  while (true) {
    vecs.push_back(cur);
    int c = n - 1;
    while (c >= 0 && cur[static_cast<size_t>(c)] == d) {
      cur[static_cast<size_t>(c)] = 0;
      --c;
    }
    if (c < 0) break;
    cur[static_cast<size_t>(c)]++;
  }

  std::vector<CounterTrans> trans;
  trans.reserve(static_cast<size_t>(num_states) * base.size() * vecs.size());
  for (SymbolId s = 0; s < base.size(); ++s) {
    for (const CounterVec& v : vecs) {
      int64_t diff = static_cast<int64_t>(v[static_cast<size_t>(ci)]) -
                     static_cast<int64_t>(v[static_cast<size_t>(cj)]);
      bool moved = v[static_cast<size_t>(ci)] != 0 ||
                   v[static_cast<size_t>(cj)] != 0;
      // The initial state only carries runs whose compared counters are
      // still exactly zero; balanced nonzero steps fall into the
      // nonaccepting equal-difference state, so a run can only accept with
      // v(ci) > v(cj) or with both compared counters untouched.
      if (diff == 0)
        trans.push_back({0, s, moved ? lower(0) : 0, v});
      else if (diff > m - 1)
        trans.push_back({0, s, upper(m), v});
      else if (diff > -m)
        trans.push_back({0, s, lower(diff), v});
      // from the tracked-difference zone
      for (int64_t l = -m + 1; l <= m - 1; ++l) {
        int64_t nl = l + diff;
        if (nl > m - 1)
          trans.push_back({lower(l), s, upper(m), v});
        else if (nl > -m)
          trans.push_back({lower(l), s, lower(nl), v});
      }
      // from the saturated zone the machine only watches the drift of cj
      // over ci since saturation
      for (int64_t l = m; l <= 2 * m - 1; ++l) {
        int64_t nl = l - diff;
        if (nl <= m)
          trans.push_back({upper(l), s, upper(m), v});
        else if (nl <= 2 * m - 1)
          trans.push_back({upper(l), s, upper(nl), v});
      }
    }
  }
  return CounterAutomaton(n, base, kind, num_states, {0}, std::move(acc),
                          std::move(trans));
}

namespace {

// Product matching base symbol and full increment vector (extended
// intersection), keeping the shared vector once.
CounterAutomaton ext_intersect(const CounterAutomaton& a,
                               const CounterAutomaton& b) {
  if (a.base() != b.base() || a.dimension() != b.dimension())
    throw DimensionMismatch();
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  std::vector<bool> acc;
  std::vector<CounterTrans> trans;
  std::vector<std::vector<const CounterTrans*>> from_a(a.num_states()),
      from_b(b.num_states());
  for (const CounterTrans& t : a.transitions()) from_a[t.from].push_back(&t);
  for (const CounterTrans& t : b.transitions()) from_b[t.from].push_back(&t);
  auto intern = [&](StateId x, StateId y) {
    auto [it, fresh] = ids.try_emplace({x, y}, 0);
    if (fresh) {
      it->second = static_cast<StateId>(pairs.size());
      pairs.push_back({x, y});
      acc.push_back(a.accepting(x) && b.accepting(y));
    }
    return it->second;
  };
  std::vector<StateId> init;
  for (StateId x : a.initial())
    for (StateId y : b.initial()) init.push_back(intern(x, y));
  for (StateId s = 0; s < pairs.size(); ++s) {
    auto [x, y] = pairs[s];
    for (const CounterTrans* ta : from_a[x])
      for (const CounterTrans* tb : from_b[y])
        if (ta->sym == tb->sym && ta->inc == tb->inc)
          trans.push_back({s, ta->sym, intern(ta->to, tb->to), ta->inc});
  }
  return CounterAutomaton(a.dimension(), a.base(), a.kind(),
                          static_cast<uint32_t>(pairs.size()), std::move(init),
                          std::move(acc), std::move(trans));
}

// Restrict states to those both reachable and able to reach acceptance in
// the counterless view; counter transitions follow.
CounterAutomaton prune_counter(const CounterAutomaton& ac) {
  Automaton plain = counterless(ac);
  std::vector<bool> reach = reachable_states(plain);
  std::vector<bool> live = live_states(plain);
  std::vector<StateId> remap(ac.num_states(), UINT32_MAX);
  uint32_t n = 0;
  for (StateId q = 0; q < ac.num_states(); ++q)
    if (reach[q] && live[q]) remap[q] = n++;
  std::vector<bool> acc(n);
  std::vector<StateId> init;
  std::vector<CounterTrans> trans;
  for (StateId q = 0; q < ac.num_states(); ++q) {
    if (remap[q] == UINT32_MAX) continue;
    acc[remap[q]] = ac.accepting(q);
  }
  for (const CounterTrans& t : ac.transitions())
    if (remap[t.from] != UINT32_MAX && remap[t.to] != UINT32_MAX)
      trans.push_back({remap[t.from], t.sym, remap[t.to], t.inc});
  for (StateId q : ac.initial())
    if (remap[q] != UINT32_MAX) init.push_back(remap[q]);
  return CounterAutomaton(ac.dimension(), ac.base(), ac.kind(), n,
                          std::move(init), std::move(acc), std::move(trans));
}

}  // namespace

CounterAutomaton restrict_greater(const CounterAutomaton& ac, int i,
                                  const std::vector<int>& others, uint32_t M) {
  uint32_t d = max_increment(ac);
  CounterAutomaton cur = ac;
  for (int j : others) {
    CounterAutomaton machine = universal_synchronized(
        ac.base(), ac.kind(), ac.dimension(), d, i, j, M);
    cur = minimize_extended(prune_counter(ext_intersect(cur, machine)));
  }
  return cur;
}

CounterAutomaton counter_union_extended(const CounterAutomaton& a1,
                                        const CounterAutomaton& a2) {
  if (a1.dimension() != a2.dimension()) throw DimensionMismatch();
  if (a1.base() != a2.base()) throw AlphabetMismatch();
  uint32_t d = std::max(max_increment(a1), max_increment(a2));
  Automaton e1 = extended(a1, d);
  Automaton e2 = extended(a2, d);
  AutomatonBuilder u(e1.alphabet(), e1.kind());
  for (StateId q = 0; q < e1.num_states(); ++q) u.add_state(e1.accepting(q));
  for (StateId q = 0; q < e2.num_states(); ++q) u.add_state(e2.accepting(q));
  for (const Trans& t : e1.transitions()) u.add_trans(t.from, t.sym, t.to);
  for (const Trans& t : e2.transitions())
    u.add_trans(e1.num_states() + t.from, t.sym, e1.num_states() + t.to);
  for (StateId q : e1.initial()) u.initial.push_back(q);
  for (StateId q : e2.initial()) u.initial.push_back(e1.num_states() + q);
  return from_extended(u.build(), a1.dimension());
}

ExtendedEqual extended_equal(const CounterAutomaton& a1,
                             const CounterAutomaton& a2) {
  if (a1.dimension() != a2.dimension()) throw DimensionMismatch();
  if (a1.base() != a2.base()) throw AlphabetMismatch();
  uint32_t d = std::max(max_increment(a1), max_increment(a2));
  Automaton e1 = extended(a1, d);
  Automaton e2 = extended(a2, d);
  if (a1.kind() == Kind::FiniteWord) {
    if (language_equal(e1, e2)) return {true, ""};
    return {false, "extended languages differ"};
  }
  try {
    if (graph_equal(canonical_form(e1), canonical_form(e2))) return {true, ""};
    return {false, "extended languages differ"};
  } catch (const NotWeak&) {
    return {false, "not inherently weak"};
  }
}

CounterAutomaton minimize_extended(const CounterAutomaton& ac) {
  uint32_t d = max_increment(ac);
  Automaton e = extended(ac, d);
  try {
    Automaton m = canonical_form(e);
    if (m.num_states() == 0) {
      // canonical empty automaton; keep one unreachable state so the
      // counter wrapper stays well-formed downstream
      return CounterAutomaton(ac.dimension(), ac.base(), ac.kind(), 0, {}, {},
                              {});
    }
    return from_extended(m, ac.dimension());
  } catch (const NotWeak&) {
    return ac;
  }
}

bool is_run_bounded(const CounterAutomaton& ac) {
  if (ac.kind() != Kind::WeakBuchi) return true;
  SccDecomposition scc = scc_decompose(counterless(ac));
  for (const CounterTrans& t : ac.transitions()) {
    uint32_t c = scc.component[t.from];
    if (scc.component[t.to] != c) continue;
    if (!scc.all_accepting[c]) continue;
    for (uint32_t v : t.inc)
      if (v != 0) return false;
  }
  return true;
}

}  // namespace rmc
