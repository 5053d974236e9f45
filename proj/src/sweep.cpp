#include "rmc/sweep.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef RMC_HAVE_OPENMP
#include <omp.h>
#endif

#include "rmc/builders.hpp"
#include "rmc/ops.hpp"

namespace rmc::sweep {

size_t word_space_size(size_t alphabet_size, size_t max_len) {
  size_t total = 0;
  size_t layer = 1;
  for (size_t l = 0; l <= max_len; ++l) {
    total += layer;
    layer *= alphabet_size;
  }
  return total;
}

Word word_at(size_t index, size_t alphabet_size, size_t max_len) {
  size_t layer = 1;
  for (size_t l = 0; l <= max_len; ++l) {
    if (index < layer) {
      Word w(l);
      for (size_t i = l; i-- > 0;) {
        w[i] = static_cast<SymbolId>(index % alphabet_size);
        index /= alphabet_size;
      }
      return w;
    }
    index -= layer;
    layer *= alphabet_size;
  }
  throw std::out_of_range("word index");
}

std::vector<uint8_t> bounded_accept_mask_serial(const Automaton& a,
                                                size_t max_len) {
  // Incremental reference: walk the word tree depth-first, carrying the
  // subset of states alive after the prefix.
  const size_t nsym = a.alphabet().size();
  std::vector<uint8_t> mask(word_space_size(nsym, max_len), 0);
  std::vector<StateId> start(a.initial().begin(), a.initial().end());
  size_t cursor = 0;
  struct Item {
    std::vector<StateId> states;
    size_t len;
  };
  // breadth-first over lengths, lexicographic within a length, mirrors
  // word_at's order exactly
  std::vector<Item> current{{start, 0}};
  auto accepting_now = [&](const std::vector<StateId>& states) {
    for (StateId q : states)
      if (a.accepting(q)) return true;
    return false;
  };
  mask[cursor++] = accepting_now(start) ? 1 : 0;
  for (size_t len = 1; len <= max_len; ++len) {
    std::vector<Item> next;
    next.reserve(current.size() * nsym);
    for (const Item& item : current) {
      for (SymbolId s = 0; s < nsym; ++s) {
        std::vector<StateId> succ;
        for (StateId q : item.states)
          for (const Trans* t = a.begin_from(q); t != a.end_from(q); ++t)
            if (t->sym == s) succ.push_back(t->to);
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
        mask[cursor++] = accepting_now(succ) ? 1 : 0;
        next.push_back({std::move(succ), len});
      }
    }
    current = std::move(next);
  }
  return mask;
}

std::vector<uint8_t> bounded_accept_mask(const Automaton& a, size_t max_len) {
  const size_t nsym = a.alphabet().size();
  const size_t total = word_space_size(nsym, max_len);
  std::vector<uint8_t> mask(total, 0);
#ifdef RMC_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (size_t i = 0; i < total; ++i) {
    Word w = word_at(i, nsym, max_len);
    mask[i] = accepts(a, w) ? 1 : 0;
  }
  return mask;
}

std::vector<uint8_t> relation_table_serial(const Transducer& t,
                                           uint32_t bits) {
  const uint64_t n = uint64_t{1} << bits;
  std::vector<uint8_t> table(n * n, 0);
  for (uint64_t x = 0; x < n; ++x)
    for (uint64_t y = 0; y < n; ++y) {
      Word w = encode_pair(x, y, bits, t.alphabet());
      table[x * n + y] = accepts(t.automaton(), w) ? 1 : 0;
    }
  return table;
}

std::vector<uint8_t> relation_table(const Transducer& t, uint32_t bits) {
  const uint64_t n = uint64_t{1} << bits;
  std::vector<uint8_t> table(n * n, 0);
  const Automaton& a = t.automaton();
#ifdef RMC_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (uint64_t x = 0; x < n; ++x) {
    Word w(bits);
    for (uint64_t y = 0; y < n; ++y) {
      for (uint32_t i = 0; i < bits; ++i)
        w[i] = t.alphabet().make({static_cast<uint32_t>((x >> i) & 1),
                                  static_cast<uint32_t>((y >> i) & 1)});
      table[x * n + y] = accepts(a, w) ? 1 : 0;
    }
  }
  return table;
}

}  // namespace rmc::sweep
