// transducer.hpp -- length-preserving relations as automata over pair
// alphabets: identity, composition, image, reflexive closure, sampled powers,
// plus the dominance subset-reduction heuristic.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rmc/automaton.hpp"
#include "rmc/errors.hpp"
#include "rmc/ops.hpp"

namespace rmc {

// A transducer is an automaton whose alphabet has exactly two tracks over a
// common base. The wrapper enforces the arity and carries the relation-level
// operations; the inner automaton is always kept canonical minimal.
class Transducer {
 public:
  explicit Transducer(Automaton inner);

  const Automaton& automaton() const { return inner_; }
  const Alphabet& alphabet() const { return inner_.alphabet(); }
  std::vector<std::string> base_labels() const {
    return inner_.alphabet().track_labels(0);
  }
  Kind kind() const { return inner_.kind(); }
  uint32_t num_states() const { return inner_.num_states(); }

 private:
  Automaton inner_;
};

struct SamplingStrategy {
  enum class Type { Linear, Exponential, Explicit };
  Type type = Type::Linear;
  uint64_t base = 1;               // a in s_k = a*k or s_k = a^k
  std::vector<uint64_t> explicit_points;

  static SamplingStrategy linear(uint64_t a);
  static SamplingStrategy exponential(uint64_t a);
  static SamplingStrategy explicit_list(std::vector<uint64_t> points);

  // k-th sampling point, k >= 1, strictly increasing.
  uint64_t point(size_t k) const;
};

// Transducer for the identity relation over the given base labels.
Transducer identity(const std::vector<std::string>& base, Kind kind);

struct ComposeResult {
  Transducer transducer;
  // Weak mode only: false when the determinization of the product is not
  // inherently weak; transducer then holds the raw deterministic form and
  // must not be complemented.
  bool weak_ok = true;
  uint32_t peak_states = 0;  // largest intermediate automaton seen
};

// Relation composition R2 o R1 (t1 applied first), by the middle-letter
// matched product, then determinized, pruned and minimized. use_dominance
// drops simulation-dominated members from every generated subset, the
// dominance relation being composed from the factors' relations.
ComposeResult compose(const Transducer& t2, const Transducer& t1,
                      bool use_dominance = false);

struct ImageResult {
  Automaton automaton;
  bool weak_ok = true;
  uint32_t peak_states = 0;
};

// T(A): image of the language of a under the relation of t.
ImageResult image(const Transducer& t, const Automaton& a,
                  bool use_dominance = false);

// Raw middle-letter matched composition product: pruned but neither
// determinized nor minimized. The safety checks intersect it directly with
// a complement, avoiding the subset construction entirely.
Automaton compose_product(const Transducer& t2, const Transducer& t1);

// Raw application product of a transducer to an automaton.
Automaton image_product(const Transducer& t, const Automaton& a);

// T0 = T union T_id.
Transducer reflexive(const Transducer& t);

struct PowerResult {
  Transducer transducer;
  uint32_t peak_states = 0;
};

// (t0)^exponent by repeated squaring. With nonreflexive_opt the square of a
// reflexive power is computed as ((T0)^m o T^m) union (T0)^m, keeping a
// parallel nonreflexive power of the underlying t.
PowerResult power(const Transducer& t0, const Transducer& t,
                  uint64_t exponent, bool nonreflexive_opt,
                  bool use_dominance = false);

// Dominance relation: q1 dominates q2 when L(q2) is included in L(q1),
// underapproximated by the HHK-style simulation preorder. The returned
// reducer drops dominated states from subsets during determinization.
class Dominance {
 public:
  explicit Dominance(const Automaton& a);

  // Compositional approximation for a pair product: state ids are
  // x * right_size + y and (x,y) >= (x',y') when x >= x' and y >= y'.
  Dominance(const Dominance& left, const Dominance& right);

  bool dominates(StateId q1, StateId q2) const {
    return table_[static_cast<size_t>(q1) * n_ + q2];
  }

  SubsetReducer reducer() const;

 private:
  Dominance() = default;
  size_t n_ = 0;
  std::vector<bool> table_;
};

}  // namespace rmc
