#include "rmc/correctness.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "rmc/ops.hpp"
#include "rmc/weak.hpp"

namespace rmc {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string word_text(const Word& w, const Alphabet* alpha) {
  std::ostringstream out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    if (alpha)
      out << alpha->display(w[i]);
    else
      out << w[i];
  }
  return out.str();
}

const char* reason_text(InconclusiveReason r) {
  switch (r) {
    case InconclusiveReason::None:
      return "none";
    case InconclusiveReason::NotInherentlyWeak:
      return "not-inherently-weak";
    case InconclusiveReason::ExtendedLanguageGap:
      return "extended-language-gap";
    case InconclusiveReason::SynchronizationLoss:
      return "synchronization-loss";
  }
  return "?";
}

// Inclusion L(small) in L(big) without determinizing `small`: the raw
// product with the complement stays polynomial where a subset construction
// on the composition can explode. `small` may be nondeterministic.
CheckReport subset_report(const Automaton& small, const Automaton& big) {
  CheckReport report;
  Automaton bad = small.kind() == Kind::FiniteWord ? complement(big)
                                                   : complement_weak(big);
  // reachable pair product
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  AutomatonBuilder p(small.alphabet(), small.kind());
  auto intern = [&](StateId x, StateId y) {
    auto [it, fresh] = ids.try_emplace({x, y}, 0);
    if (fresh) {
      it->second = p.add_state(small.accepting(x) && bad.accepting(y));
      pairs.push_back({x, y});
    }
    return it->second;
  };
  for (StateId x : small.initial())
    for (StateId y : bad.initial()) p.initial.push_back(intern(x, y));
  for (StateId s = 0; s < pairs.size(); ++s) {
    auto [x, y] = pairs[s];
    for (const Trans* t = small.begin_from(x); t != small.end_from(x); ++t)
      if (auto y2 = bad.step(y, t->sym)) p.add_trans(s, t->sym, intern(t->to, *y2));
  }
  Automaton gap = p.build();
  report.peak_states = gap.num_states();
  Emptiness e = is_empty(gap);
  if (e.empty) {
    report.verdict = Verdict::Holds;
  } else {
    report.verdict = Verdict::Fails;
    report.witness_word = e.word;
    report.witness_lasso = e.lasso;
  }
  return report;
}

}  // namespace

std::string CheckReport::to_text(const Alphabet* alphabet) const {
  std::ostringstream out;
  out << "verdict ";
  switch (verdict) {
    case Verdict::Holds:
      out << "holds";
      break;
    case Verdict::Fails:
      out << "fails";
      break;
    case Verdict::Inconclusive:
      out << "inconclusive " << reason_text(reason);
      break;
  }
  out << '\n';
  if (witness_word)
    out << "witness " << word_text(*witness_word, alphabet) << '\n';
  if (witness_lasso) {
    out << "witness-stem " << word_text(witness_lasso->stem, alphabet) << '\n';
    out << "witness-loop " << word_text(witness_lasso->loop, alphabet) << '\n';
  }
  if (sync_bound) out << "sync-bound " << sync_bound << '\n';
  if (peak_states) out << "peak-states " << peak_states << '\n';
  out << "seconds " << seconds << '\n';
  if (!detail.empty()) out << "detail " << detail << '\n';
  return out.str();
}

CheckReport check_safety_closure(const Transducer& t_star,
                                 bool use_dominance) {
  (void)use_dominance;  // the raw-product check needs no determinization
  Stopwatch watch;
  if (t_star.kind() == Kind::WeakBuchi &&
      (!t_star.automaton().deterministic() || !is_weak(t_star.automaton()))) {
    CheckReport report;
    report.verdict = Verdict::Inconclusive;
    report.reason = InconclusiveReason::NotInherentlyWeak;
    report.seconds = watch.seconds();
    return report;
  }
  Automaton comp = compose_product(t_star, t_star);
  CheckReport report = subset_report(comp, t_star.automaton());
  report.peak_states = std::max(report.peak_states, comp.num_states());
  report.seconds = watch.seconds();
  return report;
}

CheckReport check_safety_reach(const Transducer& t, const Automaton& a_star,
                               bool use_dominance) {
  (void)use_dominance;
  Stopwatch watch;
  if (a_star.kind() == Kind::WeakBuchi &&
      (!a_star.deterministic() || !is_weak(a_star))) {
    CheckReport report;
    report.verdict = Verdict::Inconclusive;
    report.reason = InconclusiveReason::NotInherentlyWeak;
    report.seconds = watch.seconds();
    return report;
  }
  Automaton img = image_product(t, a_star);
  CheckReport report = subset_report(img, a_star);
  report.peak_states = std::max(report.peak_states, img.num_states());
  report.seconds = watch.seconds();
  return report;
}

namespace {

// The preciseness products are built in one reachable exploration with the
// synchronization machines stepped alongside, so runs the machines reject
// never materialize and the composition/image product is never stored on
// its own. counter_intersection + restrict_greater form the separately
// tested reference path for these.
namespace fused {

// The synchronized products can be intrinsically huge (tens of millions of
// states for long-diameter arithmetic closures); past these caps the
// criterion is reported Inconclusive rather than exhausting memory.
struct CapExceeded {};
constexpr size_t kStateCap = 1500000;
constexpr size_t kEdgeCap = 8000000;

const int64_t kDead = -1;

// `moved` flags a step whose compared counters are not both zero; such a
// balanced step leaves the accepting initial state for good.
int64_t machine_step(int64_t m, int64_t state, int64_t diff, bool moved) {
  // states: 0 initial, l + m for l in [-m+1, 2m-1]
  if (state == 0) {
    if (diff == 0) return moved ? m : 0;
    if (diff > m - 1) return 2 * m;
    if (diff > -m) return diff + m;
    return kDead;
  }
  int64_t l = state - m;
  if (l <= m - 1) {
    int64_t nl = l + diff;
    if (nl > m - 1) return 2 * m;
    if (nl > -m) return nl + m;
    return kDead;
  }
  int64_t nl = l - diff;
  if (nl <= m) return 2 * m;
  if (nl <= 2 * m - 1) return nl + m;
  return kDead;
}

bool machine_accepting(int64_t m, int64_t state) {
  return state == 0 || state - m >= 1;
}

struct TransIndex {
  // counter transitions grouped by (from, first track digit)
  std::vector<std::vector<const CounterTrans*>> by_in;
  size_t base;
  explicit TransIndex(const CounterAutomaton& ac) {
    base = ac.base().track_size(0);
    by_in.assign(static_cast<size_t>(ac.num_states()) * base, {});
    for (const CounterTrans& t : ac.transitions())
      by_in[t.from * base + ac.base().track(t.sym, 0)].push_back(&t);
  }
  const std::vector<const CounterTrans*>& at(StateId q, uint32_t in) const {
    return by_in[q * base + in];
  }
};

// (T_c1 cap_c (T_c2 o_c T_c3))^{c1 > {c2, c3}} with bound M, as a single
// reachable product (q1, q_inner, q_outer, m1, m2). Counter order matches
// the staged pipeline: (c1, inner, outer).
CounterAutomaton closure_product(const CounterAutomaton& counted, uint32_t M) {
  const Alphabet& alpha = counted.base();
  const int64_t m = static_cast<int64_t>(M);
  std::vector<std::vector<const CounterTrans*>> from(counted.num_states());
  for (const CounterTrans& t : counted.transitions()) from[t.from].push_back(&t);
  TransIndex idx(counted);

  struct Key {
    StateId a, in, out;
    int32_t m1, m2;
    bool operator<(const Key& o) const {
      return std::tie(a, in, out, m1, m2) <
             std::tie(o.a, o.in, o.out, o.m1, o.m2);
    }
  };
  std::map<Key, StateId> ids;
  std::vector<Key> keys;
  std::vector<bool> acc;
  std::vector<CounterTrans> trans;
  auto intern = [&](Key k) {
    auto [it, fresh] = ids.try_emplace(k, 0);
    if (fresh) {
      it->second = static_cast<StateId>(keys.size());
      bool ok = counted.accepting(k.a) && counted.accepting(k.in) &&
                counted.accepting(k.out) && machine_accepting(m, k.m1) &&
                machine_accepting(m, k.m2);
      keys.push_back(k);
      acc.push_back(ok);
    }
    return it->second;
  };
  std::vector<StateId> init;
  for (StateId x : counted.initial())
    for (StateId y : counted.initial())
      for (StateId z : counted.initial()) init.push_back(intern({x, y, z, 0, 0}));
  for (StateId s = 0; s < keys.size(); ++s) {
    if (keys.size() > kStateCap || trans.size() > kEdgeCap) throw CapExceeded{};
    Key key = keys[s];
    for (const CounterTrans* ta : from[key.a]) {
      uint32_t in_digit = alpha.track(ta->sym, 0);
      uint32_t out_digit = alpha.track(ta->sym, 1);
      for (const CounterTrans* ti : idx.at(key.in, in_digit)) {
        uint32_t mid = alpha.track(ti->sym, 1);
        for (const CounterTrans* to : idx.at(key.out, mid)) {
          if (alpha.track(to->sym, 1) != out_digit) continue;
          int64_t m1 = machine_step(
              m, key.m1,
              static_cast<int64_t>(ta->inc[0]) - static_cast<int64_t>(ti->inc[0]),
              ta->inc[0] != 0 || ti->inc[0] != 0);
          if (m1 == kDead) continue;
          int64_t m2 = machine_step(
              m, key.m2,
              static_cast<int64_t>(ta->inc[0]) - static_cast<int64_t>(to->inc[0]),
              ta->inc[0] != 0 || to->inc[0] != 0);
          if (m2 == kDead) continue;
          StateId dst = intern({ta->to, ti->to, to->to,
                                static_cast<int32_t>(m1),
                                static_cast<int32_t>(m2)});
          trans.push_back({s, ta->sym, dst,
                           {ta->inc[0], ti->inc[0], to->inc[0]}});
        }
      }
    }
  }
  return CounterAutomaton(3, alpha, counted.kind(),
                          static_cast<uint32_t>(keys.size()), std::move(init),
                          std::move(acc), std::move(trans));
}

// (A_c1 cap_c T^k(A_c2))^{c1 > c2} with bound M; product
// (q1, q2, q_transducer, m1), counter order (c1, c2).
CounterAutomaton reach_product(const CounterAutomaton& counted,
                               const Transducer& tk, uint32_t M) {
  const Alphabet& alpha = counted.base();
  const Alphabet& ta2 = tk.alphabet();
  const int64_t m = static_cast<int64_t>(M);
  std::vector<std::vector<const CounterTrans*>> from(counted.num_states());
  for (const CounterTrans& t : counted.transitions()) from[t.from].push_back(&t);
  const Automaton& tr = tk.automaton();

  struct Key {
    StateId a, b, t;
    int32_t m1;
    bool operator<(const Key& o) const {
      return std::tie(a, b, t, m1) < std::tie(o.a, o.b, o.t, o.m1);
    }
  };
  std::map<Key, StateId> ids;
  std::vector<Key> keys;
  std::vector<bool> acc;
  std::vector<CounterTrans> trans;
  auto intern = [&](Key k) {
    auto [it, fresh] = ids.try_emplace(k, 0);
    if (fresh) {
      it->second = static_cast<StateId>(keys.size());
      keys.push_back(k);
      acc.push_back(counted.accepting(k.a) && counted.accepting(k.b) &&
                    tr.accepting(k.t) && machine_accepting(m, k.m1));
    }
    return it->second;
  };
  std::vector<StateId> init;
  for (StateId x : counted.initial())
    for (StateId y : counted.initial())
      for (StateId z : tr.initial()) init.push_back(intern({x, y, z, 0}));
  for (StateId s = 0; s < keys.size(); ++s) {
    if (keys.size() > kStateCap || trans.size() > kEdgeCap) throw CapExceeded{};
    Key key = keys[s];
    for (const CounterTrans* ta : from[key.a]) {
      // image: c2 reads some a, transducer reads (a, b) with b = ta's symbol
      for (const CounterTrans* tb : from[key.b])
        for (const Trans* tt = tr.begin_from(key.t); tt != tr.end_from(key.t);
             ++tt) {
          if (ta2.track(tt->sym, 0) != tb->sym) continue;
          if (ta2.track(tt->sym, 1) != ta->sym) continue;
          int64_t m1 = machine_step(
              m, key.m1,
              static_cast<int64_t>(ta->inc[0]) - static_cast<int64_t>(tb->inc[0]),
              ta->inc[0] != 0 || tb->inc[0] != 0);
          if (m1 == kDead) continue;
          StateId dst =
              intern({ta->to, tb->to, tt->to, static_cast<int32_t>(m1)});
          trans.push_back({s, ta->sym, dst, {ta->inc[0], tb->inc[0]}});
        }
    }
  }
  return CounterAutomaton(2, alpha, counted.kind(),
                          static_cast<uint32_t>(keys.size()), std::move(init),
                          std::move(acc), std::move(trans));
}

}  // namespace fused

// Shared tail of both preciseness pipelines: synchronize, project the helper
// counters away, re-add the zero layer, compare extended languages.
CheckReport preciseness_tail(const Extrapolation& ext,
                             CounterAutomaton synced, int keep, uint32_t M) {
  CheckReport report;
  report.sync_bound = M;
  std::vector<int> drop;
  for (int c = 0; c < synced.dimension(); ++c)
    if (c != keep) drop.push_back(c);
  if (ext.origin.kind() == Kind::WeakBuchi && !is_run_bounded(synced)) {
    report.verdict = Verdict::Inconclusive;
    report.reason = InconclusiveReason::SynchronizationLoss;
    return report;
  }
  CounterAutomaton projected =
      minimize_extended(counter_project_set(synced, drop));
  CounterAutomaton lhs = counter_union_extended(projected, ext.zero_layer);
  ExtendedEqual eq = extended_equal(lhs, ext.counted);
  if (eq.holds) {
    report.verdict = Verdict::Holds;
  } else {
    report.verdict = Verdict::Inconclusive;
    report.reason = eq.reason == "not inherently weak"
                        ? InconclusiveReason::NotInherentlyWeak
                        : InconclusiveReason::ExtendedLanguageGap;
    report.detail = eq.reason;
  }
  return report;
}

}  // namespace

CheckReport check_preciseness_closure(const Extrapolation& ext, uint32_t M) {
  Stopwatch watch;
  if (ext.added.empty()) {
    // nothing was extrapolated; the origin is a genuine power
    CheckReport report;
    report.verdict = Verdict::Holds;
    report.detail = "no added transitions";
    report.seconds = watch.seconds();
    return report;
  }
  // T_c1 intersected with (T_c2 o_c T_c3) under the synchronization
  // machines; c1 is counter 0. The counted extrapolation is minimized as an
  // extended automaton first, which preserves the languages the criterion
  // compares.
  CounterAutomaton counted = minimize_extended(ext.counted);
  CheckReport report;
  try {
    CounterAutomaton synced =
        minimize_extended(fused::closure_product(counted, M));
    report = preciseness_tail(ext, std::move(synced), 0, M);
  } catch (const fused::CapExceeded&) {
    report.verdict = Verdict::Inconclusive;
    report.reason = InconclusiveReason::None;
    report.detail = "synchronized product exceeded the state cap";
    report.sync_bound = M;
  }
  report.seconds = watch.seconds();
  return report;
}

CheckReport check_preciseness_reach(const Transducer& t,
                                    const Extrapolation& ext, uint32_t M,
                                    uint64_t k) {
  Stopwatch watch;
  if (ext.added.empty()) {
    CheckReport report;
    report.verdict = Verdict::Holds;
    report.detail = "no added transitions";
    report.seconds = watch.seconds();
    return report;
  }
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  Transducer tk = t;
  if (k > 1) tk = power(t, t, k, false).transducer;
  CounterAutomaton counted = minimize_extended(ext.counted);
  CheckReport report;
  try {
    CounterAutomaton synced =
        minimize_extended(fused::reach_product(counted, tk, M));
    report = preciseness_tail(ext, std::move(synced), 0, M);
  } catch (const fused::CapExceeded&) {
    report.verdict = Verdict::Inconclusive;
    report.reason = InconclusiveReason::None;
    report.detail = "synchronized product exceeded the state cap";
    report.sync_bound = M;
  }
  report.seconds = watch.seconds();
  return report;
}

}  // namespace rmc
