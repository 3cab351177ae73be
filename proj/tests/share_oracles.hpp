// Copyright 2026 The graphshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Exhaustive checks for additive sharing: every random tape of a dealing is
// replayed so that view distributions can be counted exactly.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graphshare/access_structure.hpp"
#include "graphshare/kgh.hpp"

namespace graphshare::testing {

// Replays a fixed sequence of draws.
class TapeSource {
 public:
  explicit TapeSource(const std::vector<std::uint32_t>& tape) : tape_(tape) {}

  std::uint32_t Uniform(std::uint32_t bound) {
    if (pos_ >= tape_.size() || tape_[pos_] >= bound) throw std::logic_error("tape mismatch");
    return tape_[pos_++];
  }

  bool Consumed() const { return pos_ == tape_.size(); }

 private:
  const std::vector<std::uint32_t>& tape_;
  std::size_t pos_ = 0;
};

// Mixed-radix odometer; returns false after the last value.
inline bool NextTuple(std::vector<std::uint32_t>& values, const std::vector<std::uint32_t>& radix) {
  for (std::size_t i = values.size(); i-- > 0;) {
    if (++values[i] < radix[i]) return true;
    values[i] = 0;
  }
  return false;
}

inline std::vector<std::vector<Digit>> AllVectors(const std::vector<Digit>& moduli) {
  std::vector<std::vector<Digit>> out;
  std::vector<std::uint32_t> v(moduli.size(), 0);
  do {
    out.emplace_back(v.begin(), v.end());
  } while (NextTuple(v, moduli));
  return out;
}

// For every (t-1)-subset of share positions: the number of random tapes that
// produce each view is the same for every allowed secret, and every view is
// completed to every allowed secret by exactly one share vector.
inline bool CheckPerfectness(const std::vector<Digit>& moduli, int t,
                             const std::optional<SecretPredicate>& allowed) {
  const auto space = AllVectors(moduli);
  std::vector<std::vector<Digit>> secrets;
  for (const auto& s : space) {
    if (!allowed || allowed->allows(SecretVector(s, moduli))) secrets.push_back(s);
  }
  if (secrets.empty()) return true;

  std::vector<std::uint32_t> radix;
  for (int j = 1; j < t; ++j) radix.insert(radix.end(), moduli.begin(), moduli.end());

  // view key: (excluded position, concatenated digits of the other shares)
  std::map<std::pair<int, std::vector<Digit>>, std::map<std::vector<Digit>, int>> counts;
  for (const auto& s : secrets) {
    const SecretVector secret(s, moduli);
    std::vector<std::uint32_t> tape(radix.size(), 0);
    do {
      TapeSource source(tape);
      const auto bundles = allowed ? DealKghe(secret, t, *allowed, source)
                                   : DealKgh(secret, t, source);
      if (!source.Consumed()) return false;
      for (int missing = 0; missing < t; ++missing) {
        std::vector<Digit> view;
        for (int j = 0; j < t; ++j) {
          if (j != missing) view.insert(view.end(), bundles[j].digits.begin(), bundles[j].digits.end());
        }
        ++counts[{missing, view}][s];
      }
    } while (NextTuple(tape, radix));
  }
  for (const auto& [view, per_secret] : counts) {
    if (per_secret.size() != secrets.size()) return false;
    const int first = per_secret.begin()->second;
    for (const auto& [s, c] : per_secret) {
      if (c != first) return false;
    }
    // Exactly one completing share per candidate secret.
    std::vector<Digit> partial(moduli.size(), 0);
    for (std::size_t i = 0; i < view.second.size(); ++i) {
      const std::size_t d = i % moduli.size();
      partial[d] = (partial[d] + view.second[i]) % moduli[d];
    }
    for (const auto& s : secrets) {
      int completions = 0;
      for (const auto& candidate : space) {
        bool ok = true;
        for (std::size_t d = 0; d < moduli.size(); ++d) {
          ok &= (partial[d] + candidate[d]) % moduli[d] == s[d];
        }
        completions += ok;
      }
      if (completions != 1) return false;
    }
  }
  return true;
}

// Every monotone access structure on `participants` people, excluding the
// empty family and the family containing the empty set.
inline std::vector<AccessStructure> AllMonotoneStructures(int participants) {
  const std::uint32_t subsets = 1u << participants;
  std::vector<AccessStructure> out;
  for (std::uint64_t family = 2; family < (std::uint64_t{1} << subsets); family += 2) {
    bool monotone = true;
    for (std::uint32_t s = 0; s < subsets && monotone; ++s) {
      if (!(family >> s & 1)) continue;
      for (int p = 0; p < participants; ++p) {
        if (!(family >> (s | (1u << p)) & 1)) {
          monotone = false;
          break;
        }
      }
    }
    if (!monotone) continue;
    std::vector<ParticipantSet> sets;
    for (std::uint32_t s = 1; s < subsets; ++s)
      if (family >> s & 1) sets.push_back(s);
    out.emplace_back(participants, sets);
  }
  return out;
}

}  // namespace graphshare::testing
