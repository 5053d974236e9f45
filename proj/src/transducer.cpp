#include "rmc/transducer.hpp"

#include <algorithm>
#include <map>

#include "rmc/weak.hpp"

namespace rmc {

Transducer::Transducer(Automaton inner) : inner_(std::move(inner)) {
  if (inner_.alphabet().arity() != 2)
    throw std::invalid_argument("transducer needs an arity-2 alphabet");
  if (inner_.alphabet().track_labels(0) != inner_.alphabet().track_labels(1))
    throw std::invalid_argument("transducer tracks must share one base");
}

SamplingStrategy SamplingStrategy::linear(uint64_t a) {
  SamplingStrategy s;
  s.type = Type::Linear;
  s.base = a;
  return s;
}

SamplingStrategy SamplingStrategy::exponential(uint64_t a) {
  SamplingStrategy s;
  s.type = Type::Exponential;
  s.base = a;
  return s;
}

SamplingStrategy SamplingStrategy::explicit_list(std::vector<uint64_t> pts) {
  SamplingStrategy s;
  s.type = Type::Explicit;
  s.explicit_points = std::move(pts);
  for (size_t i = 0; i + 1 < s.explicit_points.size(); ++i)
    if (s.explicit_points[i] >= s.explicit_points[i + 1])
      throw std::invalid_argument("sampling points must strictly increase");
  return s;
}

uint64_t SamplingStrategy::point(size_t k) const {
  switch (type) {
    case Type::Linear:
      return base * k;
    case Type::Exponential: {
      uint64_t p = 1;
      for (size_t i = 0; i < k; ++i) p *= base;
      return p;
    }
    case Type::Explicit:
      if (k == 0 || k > explicit_points.size())
        throw std::out_of_range("sampling point index");
      return explicit_points[k - 1];
  }
  throw std::logic_error("unreachable");
}

Transducer identity(const std::vector<std::string>& base, Kind kind) {
  Alphabet alpha = Alphabet::power(base, 2);
  AutomatonBuilder b(alpha, kind);
  StateId q = b.add_state(true);
  b.initial.push_back(q);
  for (uint32_t i = 0; i < base.size(); ++i)
    b.add_trans(q, alpha.make({i, i}), q);
  return Transducer(b.build());
}

namespace {

struct RawResult {
  Automaton automaton;
  bool weak_ok;
  uint32_t peak;
};

// Determinize, prune, minimize; dispatching on kind. In weak mode a
// non-inherently-weak determinization is surfaced through weak_ok.
RawResult finish(Automaton raw, const SubsetReducer& reduce) {
  uint32_t peak = raw.num_states();
  if (raw.kind() == Kind::FiniteWord) {
    Automaton det = determinize(raw, reduce);
    peak = std::max(peak, det.num_states());
    Automaton min = minimize(det);
    return {std::move(min), true, peak};
  }
  DeterminizeWeakResult det = determinize_weak(raw);
  peak = std::max(peak, det.automaton.num_states());
  if (!det.inherently_weak) return {std::move(det.automaton), false, peak};
  Automaton min = minimize_weak(det.automaton);
  return {std::move(min), true, peak};
}

// prune() that keeps the product-pair bookkeeping aligned with the
// renumbered states.
Automaton prune_with_pairs(const Automaton& raw,
                           const std::vector<std::pair<StateId, StateId>>& pairs,
                           std::vector<std::pair<StateId, StateId>>* pair_of) {
  if (!pair_of) return prune(raw);
  std::vector<bool> reach = reachable_states(raw);
  std::vector<bool> live = live_states(raw);
  pair_of->clear();
  std::vector<StateId> remap(raw.num_states(), UINT32_MAX);
  uint32_t n = 0;
  for (StateId q = 0; q < raw.num_states(); ++q)
    if (reach[q] && live[q]) {
      remap[q] = n++;
      pair_of->push_back(pairs[q]);
    }
  std::vector<bool> acc(n);
  std::vector<StateId> init;
  std::vector<Trans> trans;
  for (StateId q = 0; q < raw.num_states(); ++q) {
    if (remap[q] == UINT32_MAX) continue;
    acc[remap[q]] = raw.accepting(q);
    for (const Trans* t = raw.begin_from(q); t != raw.end_from(q); ++t)
      if (remap[t->to] != UINT32_MAX)
        trans.push_back({remap[q], t->sym, remap[t->to]});
  }
  for (StateId q : raw.initial())
    if (remap[q] != UINT32_MAX) init.push_back(remap[q]);
  return Automaton(raw.alphabet(), raw.kind(), n, std::move(init),
                   std::move(acc), std::move(trans));
}

// Subset reducer for a pair product, built compositionally from the factor
// simulations: (x,y) dominates (x',y') when x >= x' and y >= y'.
SubsetReducer product_dominance_reducer(
    const Automaton& left, const Automaton& right,
    std::vector<std::pair<StateId, StateId>> pair_of) {
  Dominance dl(left);
  Dominance dr(right);
  return [dl = std::move(dl), dr = std::move(dr),
          pair_of = std::move(pair_of)](std::vector<StateId>& subset) {
    std::vector<StateId> kept;
    for (StateId q : subset) {
      bool dominated = false;
      for (StateId p : subset) {
        if (p == q) continue;
        auto [px, py] = pair_of[p];
        auto [qx, qy] = pair_of[q];
        bool p_ge_q = dl.dominates(px, qx) && dr.dominates(py, qy);
        bool q_ge_p = dl.dominates(qx, px) && dr.dominates(qy, py);
        if (p_ge_q && !(q_ge_p && p > q)) dominated = true;
      }
      if (!dominated) kept.push_back(q);
    }
    subset = std::move(kept);
  };
}

Automaton compose_raw(const Automaton& a2, const Automaton& a1,
                      std::vector<std::pair<StateId, StateId>>* pair_of) {
  // Middle-letter matched pair product: t1 consumes (a,c), t2 consumes (c,b).
  const Alphabet& alpha = a1.alphabet();
  size_t base = alpha.track_size(0);
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  AutomatonBuilder b(alpha, a1.kind());
  auto intern = [&](StateId x, StateId y) {
    auto [it, fresh] = ids.try_emplace({x, y}, 0);
    if (fresh) {
      it->second = b.add_state(a1.accepting(x) && a2.accepting(y));
      pairs.push_back({x, y});
    }
    return it->second;
  };
  for (StateId x : a1.initial())
    for (StateId y : a2.initial()) b.initial.push_back(intern(x, y));
  for (StateId s = 0; s < pairs.size(); ++s) {
    auto [x, y] = pairs[s];
    // group t2 transitions by their input digit
    std::vector<std::vector<const Trans*>> by_in(base);
    for (const Trans* t = a2.begin_from(y); t != a2.end_from(y); ++t)
      by_in[alpha.track(t->sym, 0)].push_back(t);
    for (const Trans* t1 = a1.begin_from(x); t1 != a1.end_from(x); ++t1) {
      uint32_t in = alpha.track(t1->sym, 0);
      uint32_t mid = alpha.track(t1->sym, 1);
      for (const Trans* t2 : by_in[mid]) {
        uint32_t out = alpha.track(t2->sym, 1);
        b.add_trans(s, alpha.make({in, out}), intern(t1->to, t2->to));
      }
    }
  }
  return prune_with_pairs(b.build(), pairs, pair_of);
}

Automaton union_raw(const Automaton& a, const Automaton& b) {
  AutomatonBuilder u(a.alphabet(), a.kind());
  for (StateId q = 0; q < a.num_states(); ++q) u.add_state(a.accepting(q));
  for (StateId q = 0; q < b.num_states(); ++q) u.add_state(b.accepting(q));
  for (const Trans& t : a.transitions()) u.add_trans(t.from, t.sym, t.to);
  for (const Trans& t : b.transitions())
    u.add_trans(a.num_states() + t.from, t.sym, a.num_states() + t.to);
  for (StateId q : a.initial()) u.initial.push_back(q);
  for (StateId q : b.initial()) u.initial.push_back(a.num_states() + q);
  return u.build();
}

}  // namespace

Automaton compose_product(const Transducer& t2, const Transducer& t1) {
  if (t1.alphabet() != t2.alphabet()) throw AlphabetMismatch();
  if (t1.kind() != t2.kind())
    throw std::invalid_argument("compose needs matching kinds");
  return compose_raw(t2.automaton(), t1.automaton(), nullptr);
}

ComposeResult compose(const Transducer& t2, const Transducer& t1,
                      bool use_dominance) {
  if (t1.alphabet() != t2.alphabet()) throw AlphabetMismatch();
  if (t1.kind() != t2.kind())
    throw std::invalid_argument("compose needs matching kinds");
  std::vector<std::pair<StateId, StateId>> pair_of;
  Automaton raw =
      compose_raw(t2.automaton(), t1.automaton(),
                  use_dominance ? &pair_of : nullptr);
  SubsetReducer reduce;
  if (use_dominance)
    reduce = product_dominance_reducer(t1.automaton(), t2.automaton(),
                                       pair_of);
  RawResult r = finish(std::move(raw), reduce);
  return {Transducer(std::move(r.automaton)), r.weak_ok, r.peak};
}

namespace {

Automaton image_raw(const Transducer& t, const Automaton& a,
                    std::vector<std::pair<StateId, StateId>>& pairs,
                    std::vector<std::pair<StateId, StateId>>* pair_of);

}  // namespace

Automaton image_product(const Transducer& t, const Automaton& a) {
  std::vector<std::pair<StateId, StateId>> pairs;
  return image_raw(t, a, pairs, nullptr);
}

ImageResult image(const Transducer& t, const Automaton& a,
                  bool use_dominance) {
  std::vector<std::pair<StateId, StateId>> pairs;
  std::vector<std::pair<StateId, StateId>> pair_of;
  Automaton raw = image_raw(t, a, pairs, use_dominance ? &pair_of : nullptr);
  SubsetReducer reduce;
  if (use_dominance)
    reduce = product_dominance_reducer(a, t.automaton(), std::move(pair_of));
  RawResult r = finish(std::move(raw), reduce);
  return {std::move(r.automaton), r.weak_ok, r.peak};
}

namespace {

Automaton image_raw(const Transducer& t, const Automaton& a,
                    std::vector<std::pair<StateId, StateId>>& pairs,
                    std::vector<std::pair<StateId, StateId>>* pair_of) {
  if (a.alphabet().arity() != 1 ||
      a.alphabet().track_labels(0) != t.alphabet().track_labels(0))
    throw AlphabetMismatch();
  if (a.kind() != t.kind())
    throw std::invalid_argument("image needs matching kinds");
  const Automaton& tr = t.automaton();
  const Alphabet& alpha = tr.alphabet();
  Alphabet out_alpha(a.alphabet().track_labels(0));
  std::map<std::pair<StateId, StateId>, StateId> ids;
  AutomatonBuilder b(out_alpha, a.kind());
  auto intern = [&](StateId x, StateId y) {
    auto [it, fresh] = ids.try_emplace({x, y}, 0);
    if (fresh) {
      it->second = b.add_state(a.accepting(x) && tr.accepting(y));
      pairs.push_back({x, y});
    }
    return it->second;
  };
  for (StateId x : a.initial())
    for (StateId y : tr.initial()) b.initial.push_back(intern(x, y));
  for (StateId s = 0; s < pairs.size(); ++s) {
    auto [x, y] = pairs[s];
    for (const Trans* ta = a.begin_from(x); ta != a.end_from(x); ++ta)
      for (const Trans* tt = tr.begin_from(y); tt != tr.end_from(y); ++tt)
        if (alpha.track(tt->sym, 0) == ta->sym)
          b.add_trans(s, alpha.track(tt->sym, 1), intern(ta->to, tt->to));
  }
  return prune_with_pairs(b.build(), pairs, pair_of);
}

}  // namespace

Transducer reflexive(const Transducer& t) {
  Transducer id = identity(t.base_labels(), t.kind());
  Automaton u = union_raw(t.automaton(), id.automaton());
  if (t.kind() == Kind::FiniteWord) return Transducer(canonical_min(u));
  return Transducer(canonical_form(u));
}

PowerResult power(const Transducer& t0, const Transducer& t,
                  uint64_t exponent, bool nonreflexive_opt,
                  bool use_dominance) {
  if (exponent == 0)
    return {identity(t0.base_labels(), t0.kind()), t0.num_states()};
  uint32_t peak = t0.num_states();

  auto minimize_union = [&](const Automaton& a,
                            const Automaton& b) -> Transducer {
    Automaton u = union_raw(a, b);
    Automaton m =
        u.kind() == Kind::FiniteWord ? canonical_min(u) : canonical_form(u);
    peak = std::max(peak, m.num_states());
    return Transducer(std::move(m));
  };

  // (r0, rp) = ((T0)^m, T^m) -> ((T0)^(m+d), T^(m+d))
  auto extend = [&](Transducer& r0, Transducer& rp, const Transducer& d0,
                    const Transducer& dp) {
    if (nonreflexive_opt) {
      // (T0)^(m+d) = ((T0)^m o T^d) union (T0)^m
      ComposeResult c = compose(r0, dp, use_dominance);
      peak = std::max(peak, c.peak_states);
      r0 = minimize_union(c.transducer.automaton(), r0.automaton());
      ComposeResult cp = compose(rp, dp, use_dominance);
      peak = std::max(peak, cp.peak_states);
      rp = cp.transducer;
    } else {
      ComposeResult c = compose(r0, d0, use_dominance);
      peak = std::max(peak, c.peak_states);
      r0 = c.transducer;
    }
  };

  int top = 63;
  while (top > 0 && !((exponent >> top) & 1)) --top;
  Transducer cur0 = t0;
  Transducer curp = t;
  for (int bit = top - 1; bit >= 0; --bit) {
    Transducer prev0 = cur0;
    Transducer prevp = curp;
    extend(cur0, curp, prev0, prevp);  // square
    if ((exponent >> bit) & 1) extend(cur0, curp, t0, t);
  }
  peak = std::max(peak, cur0.num_states());
  return {cur0, peak};
}

Dominance::Dominance(const Automaton& a) : n_(a.num_states()) {
  // Simulation preorder underapproximating language inclusion, computed
  // with the counting scheme of the HHK algorithm: sim(i,j) needs every
  // move of j matched by some move of i into a simulating state.
  const size_t nsym = a.alphabet().size();
  const size_t n = n_;
  std::vector<std::vector<std::vector<StateId>>> post(
      n, std::vector<std::vector<StateId>>(nsym));
  std::vector<std::vector<std::vector<StateId>>> pre(
      n, std::vector<std::vector<StateId>>(nsym));
  for (const Trans& t : a.transitions()) {
    post[t.from][t.sym].push_back(t.to);
    pre[t.to][t.sym].push_back(t.from);
  }
  table_.assign(n * n, false);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      table_[i * n + j] = !a.accepting(j) || a.accepting(i);

  // cnt[(i, jp, s)] = number of successors of i on s that simulate jp
  std::vector<uint32_t> cnt(n * n * nsym, 0);
  auto cnt_at = [&](size_t i, size_t jp, size_t s) -> uint32_t& {
    return cnt[(i * n + jp) * nsym + s];
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t s = 0; s < nsym; ++s)
      for (StateId ip : post[i][s])
        for (size_t jp = 0; jp < n; ++jp)
          if (table_[static_cast<size_t>(ip) * n + jp]) cnt_at(i, jp, s)++;

  std::vector<std::pair<uint32_t, uint32_t>> queue;
  auto falsify = [&](size_t i, size_t j) {
    if (!table_[i * n + j]) return;
    table_[i * n + j] = false;
    queue.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(j)});
  };
  // initial violations: j moves that i cannot match at all
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!table_[i * n + j]) continue;
      for (size_t s = 0; s < nsym && table_[i * n + j]; ++s)
        for (StateId jp : post[j][s])
          if (cnt_at(i, jp, s) == 0) {
            falsify(i, j);
            break;
          }
    }
  while (!queue.empty()) {
    auto [ip, jp] = queue.back();
    queue.pop_back();
    for (size_t s = 0; s < nsym; ++s)
      for (StateId i : pre[ip][s]) {
        uint32_t& c = cnt_at(i, jp, s);
        if (--c == 0)
          for (StateId j : pre[jp][s]) falsify(i, j);
      }
  }
}

Dominance::Dominance(const Dominance& left, const Dominance& right) {
  n_ = left.n_ * right.n_;
  table_.assign(n_ * n_, false);
  for (size_t x1 = 0; x1 < left.n_; ++x1)
    for (size_t y1 = 0; y1 < right.n_; ++y1)
      for (size_t x2 = 0; x2 < left.n_; ++x2)
        for (size_t y2 = 0; y2 < right.n_; ++y2) {
          size_t p = x1 * right.n_ + y1;
          size_t q = x2 * right.n_ + y2;
          table_[p * n_ + q] =
              left.table_[x1 * left.n_ + x2] &&
              right.table_[y1 * right.n_ + y2];
        }
}

SubsetReducer Dominance::reducer() const {
  // copy the table by value so the reducer outlives this object
  auto table = table_;
  size_t n = n_;
  return [table, n](std::vector<StateId>& subset) {
    std::vector<StateId> kept;
    for (StateId q : subset) {
      bool dominated = false;
      for (StateId p : subset) {
        if (p == q) continue;
        if (table[static_cast<size_t>(p) * n + q] &&
            !(table[static_cast<size_t>(q) * n + p] && p > q))
          // strict domination, ties broken toward the smaller id
          dominated = true;
      }
      if (!dominated) kept.push_back(q);
    }
    subset = std::move(kept);
  };
}

}  // namespace rmc
