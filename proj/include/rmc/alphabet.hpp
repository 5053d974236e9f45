// alphabet.hpp -- multi-track alphabets with flat symbol ids

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmc {

using SymbolId = uint32_t;

// An alphabet is an ordered list of tracks, each track an ordered list of
// display labels. A symbol is a tuple picking one label per track, flattened
// into a single id in mixed radix (first track most significant). Plain
// automata have one track, transducers two, synchronous products more.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> labels) {
    tracks_.push_back(std::move(labels));
    init();
  }

  explicit Alphabet(std::vector<std::vector<std::string>> tracks)
      : tracks_(std::move(tracks)) {
    init();
  }

  // Alphabet of arity-k tuples over the given base labels.
  static Alphabet power(const std::vector<std::string>& base, int arity) {
    std::vector<std::vector<std::string>> tracks(static_cast<size_t>(arity),
                                                 base);
    return Alphabet(std::move(tracks));
  }

  // Concatenation of the tracks of a and b.
  static Alphabet product(const Alphabet& a, const Alphabet& b) {
    std::vector<std::vector<std::string>> tracks = a.tracks_;
    tracks.insert(tracks.end(), b.tracks_.begin(), b.tracks_.end());
    return Alphabet(std::move(tracks));
  }

  int arity() const { return static_cast<int>(tracks_.size()); }
  size_t size() const { return size_; }

  const std::vector<std::string>& track_labels(int t) const {
    return tracks_.at(static_cast<size_t>(t));
  }

  size_t track_size(int t) const {
    return tracks_.at(static_cast<size_t>(t)).size();
  }

  // Digit of symbol s on track t.
  uint32_t track(SymbolId s, int t) const {
    return static_cast<uint32_t>((s / strides_[static_cast<size_t>(t)]) %
                                 tracks_[static_cast<size_t>(t)].size());
  }

  SymbolId make(const std::vector<uint32_t>& digits) const {
    if (digits.size() != tracks_.size())
      throw std::invalid_argument("symbol arity mismatch");
    size_t id = 0;
    for (size_t t = 0; t < tracks_.size(); ++t) {
      if (digits[t] >= tracks_[t].size())
        throw std::invalid_argument("symbol digit out of range");
      id += digits[t] * strides_[t];
    }
    return static_cast<SymbolId>(id);
  }

  // Replaces the digit of s on track t by d.
  SymbolId with_track(SymbolId s, int t, uint32_t d) const {
    size_t st = strides_[static_cast<size_t>(t)];
    size_t n = tracks_[static_cast<size_t>(t)].size();
    uint32_t old = track(s, t);
    return static_cast<SymbolId>(s - old * st + d * st);
  }

  std::string display(SymbolId s) const {
    std::string out;
    for (int t = 0; t < arity(); ++t) {
      if (t) out += '/';
      out += tracks_[static_cast<size_t>(t)][track(s, t)];
    }
    return out;
  }

  // Alphabet with track t removed; drop_symbol maps old symbol ids to new.
  Alphabet drop_track(int t) const {
    std::vector<std::vector<std::string>> tracks;
    for (int u = 0; u < arity(); ++u)
      if (u != t) tracks.push_back(tracks_[static_cast<size_t>(u)]);
    return Alphabet(std::move(tracks));
  }

  SymbolId drop_symbol(SymbolId s, int t) const {
    std::vector<uint32_t> digits;
    digits.reserve(tracks_.size() - 1);
    for (int u = 0; u < arity(); ++u)
      if (u != t) digits.push_back(track(s, u));
    return drop_track(t).make(digits);
  }

  int find_label(int t, const std::string& label) const {
    const auto& lab = tracks_.at(static_cast<size_t>(t));
    for (size_t i = 0; i < lab.size(); ++i)
      if (lab[i] == label) return static_cast<int>(i);
    return -1;
  }

  bool operator==(const Alphabet& o) const { return tracks_ == o.tracks_; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

 private:
  void init() {
    if (tracks_.empty()) throw std::invalid_argument("alphabet needs a track");
    for (const auto& t : tracks_)
      if (t.empty()) throw std::invalid_argument("alphabet track is empty");
    strides_.assign(tracks_.size(), 1);
    for (size_t t = tracks_.size() - 1; t-- > 0;)
      strides_[t] = strides_[t + 1] * tracks_[t + 1].size();
    size_ = strides_[0] * tracks_[0].size();
  }

  std::vector<std::vector<std::string>> tracks_;
  std::vector<size_t> strides_;
  size_t size_ = 0;
};

}  // namespace rmc
