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


// General (monotone) access structures realized with cumulative arrays on
// top of t-of-t KGH sharing.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphshare/error.hpp"
#include "graphshare/kgh.hpp"
#include "graphshare/random.hpp"

namespace graphshare {

// Bit p-1 set <=> participant p is a member.
using ParticipantSet = std::uint32_t;

inline constexpr int kMaxParticipants = 20;

inline ParticipantSet MakeParticipantSet(std::initializer_list<int> participants) {
  ParticipantSet s = 0;
  for (int p : participants) s |= ParticipantSet{1} << (p - 1);
  return s;
}

inline std::vector<int> Members(ParticipantSet s) {
  std::vector<int> out;
  for (int p = 1; s != 0; ++p, s >>= 1) {
    if (s & 1) out.push_back(p);
  }
  return out;
}

// Monotone family of authorized subsets of {1..num_participants}, stored by
// its minimal sets.
class AccessStructure {
 public:
  AccessStructure(int num_participants, const std::vector<ParticipantSet>& authorized)
      : num_participants_(num_participants) {
    if (num_participants < 1 || num_participants > kMaxParticipants) {
      throw Error(ErrorKind::kInvalidArgument,
                  "participant count must be in 1.." + std::to_string(kMaxParticipants));
    }
    if (authorized.empty()) {
      throw Error(ErrorKind::kInvalidArgument, "access structure has no authorized set");
    }
    const ParticipantSet everyone = FullSet();
    for (ParticipantSet s : authorized) {
      if (s == 0) {
        throw Error(ErrorKind::kInvalidArgument, "the empty set cannot be authorized");
      }
      if ((s & ~everyone) != 0) {
        throw Error(ErrorKind::kInvalidArgument, "authorized set names an unknown participant");
      }
    }
    for (ParticipantSet s : authorized) {
      const bool has_proper_subset = std::any_of(
          authorized.begin(), authorized.end(),
          [s](ParticipantSet o) { return o != s && (o & s) == o; });
      if (!has_proper_subset &&
          std::find(minimal_.begin(), minimal_.end(), s) == minimal_.end()) {
        minimal_.push_back(s);
      }
    }
    std::sort(minimal_.begin(), minimal_.end());
  }

  static AccessStructure Threshold(int threshold, int num_participants) {
    if (threshold < 1 || threshold > num_participants) {
      throw Error(ErrorKind::kInvalidArgument, "threshold outside 1..participants");
    }
    std::vector<ParticipantSet> sets;
    for (ParticipantSet s = 1; s < (ParticipantSet{1} << num_participants); ++s) {
      if (__builtin_popcount(s) == threshold) sets.push_back(s);
    }
    return AccessStructure(num_participants, sets);
  }

  int num_participants() const { return num_participants_; }
  const std::vector<ParticipantSet>& minimal_sets() const { return minimal_; }
  ParticipantSet FullSet() const { return (ParticipantSet{1} << num_participants_) - 1; }

  bool IsAuthorized(ParticipantSet s) const {
    return std::any_of(minimal_.begin(), minimal_.end(),
                       [s](ParticipantSet m) { return (m & s) == m; });
  }

 private:
  int num_participants_;
  std::vector<ParticipantSet> minimal_;
};

struct CumulativeArray {
  // One sub-secret per maximal unauthorized set, ordered by ascending bitmask.
  std::vector<ParticipantSet> maximal_unauthorized;
  // assignment[p-1]: 0-based sub-secret indices held by participant p.
  std::vector<std::vector<int>> assignment;

  int sub_secret_count() const { return static_cast<int>(maximal_unauthorized.size()); }
};

inline CumulativeArray BuildCumulativeArray(const AccessStructure& acc) {
  const ParticipantSet everyone = acc.FullSet();
  CumulativeArray out;
  for (ParticipantSet s = 0; s <= everyone; ++s) {
    if (acc.IsAuthorized(s)) continue;
    bool maximal = true;
    for (int p = 0; p < acc.num_participants(); ++p) {
      const ParticipantSet bit = ParticipantSet{1} << p;
      if ((s & bit) == 0 && !acc.IsAuthorized(s | bit)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.maximal_unauthorized.push_back(s);
  }
  out.assignment.resize(static_cast<std::size_t>(acc.num_participants()));
  for (int j = 0; j < out.sub_secret_count(); ++j) {
    for (int p = 0; p < acc.num_participants(); ++p) {
      if ((out.maximal_unauthorized[j] & (ParticipantSet{1} << p)) == 0) {
        out.assignment[p].push_back(j);
      }
    }
  }
  return out;
}

// A sub-share routed to a participant by the cumulative array.
struct IndexedShare {
  int participant_id = 1;
  int sub_index = 0;
  ShareBundle share;
};

// Splits the secret d-of-d and hands sub-share j to every participant outside
// the j-th maximal unauthorized set. With a predicate the dealing is KGHe.
template <UniformSource Source>
std::vector<std::vector<IndexedShare>> DealGeneral(
    const SecretVector& secret, const AccessStructure& acc, Source& source,
    const std::optional<SecretPredicate>& allowed = std::nullopt) {
  const CumulativeArray array = BuildCumulativeArray(acc);
  const int d = array.sub_secret_count();
  const std::vector<ShareBundle> sub = allowed ? DealKghe(secret, d, *allowed, source)
                                               : DealKgh(secret, d, source);
  std::vector<std::vector<IndexedShare>> out(array.assignment.size());
  for (std::size_t p = 0; p < out.size(); ++p) {
    for (int j : array.assignment[p]) {
      ShareBundle b = sub[static_cast<std::size_t>(j)];
      b.participant_id = static_cast<int>(p) + 1;
      out[p].push_back({static_cast<int>(p) + 1, j, std::move(b)});
    }
  }
  return out;
}

inline SecretVector RecoverGeneral(std::span<const IndexedShare> pooled,
                                   const AccessStructure& acc,
                                   const std::optional<SecretPredicate>& allowed =
                                       std::nullopt) {
  const int d = BuildCumulativeArray(acc).sub_secret_count();
  std::map<int, const ShareBundle*> by_index;
  for (const IndexedShare& s : pooled) {
    if (s.sub_index < 0 || s.sub_index >= d) {
      throw Error(ErrorKind::kInvalidArgument,
                  "sub-share index " + std::to_string(s.sub_index + 1) + " out of range");
    }
    auto [it, inserted] = by_index.emplace(s.sub_index, &s.share);
    if (!inserted && it->second->digits != s.share.digits) {
      throw Error(ErrorKind::kInvalidSecret,
                  "conflicting copies of sub-share " + std::to_string(s.sub_index + 1));
    }
  }
  if (static_cast<int>(by_index.size()) < d) {
    for (int j = 0; j < d; ++j) {
      if (!by_index.count(j)) {
        throw Error(ErrorKind::kInsufficientShares,
                    "sub-share " + std::to_string(j + 1) + " of " + std::to_string(d) +
                        " is missing");
      }
    }
  }
  std::vector<ShareBundle> subs;
  for (const auto& [j, b] : by_index) subs.push_back(*b);
  return allowed ? RecoverKghe(subs, *allowed) : RecoverKgh(subs);
}

}  // namespace graphshare
