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


// Additive (KGH) t-of-t secret sharing over a vector of digits, each with its
// own modulus, and the restricted-secret-space variant KGHe.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphshare/error.hpp"
#include "graphshare/random.hpp"

namespace graphshare {

using Digit = std::uint32_t;

struct SecretVector {
  std::vector<Digit> digits;
  std::vector<Digit> moduli;

  SecretVector() = default;
  SecretVector(std::vector<Digit> d, std::vector<Digit> m)
      : digits(std::move(d)), moduli(std::move(m)) {
    Validate();
  }

  static SecretVector Uniform(std::vector<Digit> d, Digit modulus) {
    std::vector<Digit> m(d.size(), modulus);
    return SecretVector(std::move(d), std::move(m));
  }

  std::size_t size() const { return digits.size(); }

  void Validate() const {
    if (digits.size() != moduli.size()) {
      throw Error(ErrorKind::kDimension, "digit and modulus counts differ");
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (moduli[i] < 2) {
        throw Error(ErrorKind::kInvalidArgument,
                    "modulus at position " + std::to_string(i + 1) + " is below 2");
      }
      if (digits[i] >= moduli[i]) {
        throw Error(ErrorKind::kInvalidArgument,
                    "digit " + std::to_string(digits[i]) + " at position " +
                        std::to_string(i + 1) + " outside Z_" +
                        std::to_string(moduli[i]));
      }
    }
  }

  // Concatenated decimal digits, e.g. "0011256". Needs every modulus <= 10.
  std::string Render() const {
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (moduli[i] > 10) {
        throw Error(ErrorKind::kUnsupportedCoding,
                    "decimal rendering needs moduli <= 10");
      }
      out.push_back(static_cast<char>('0' + digits[i]));
    }
    return out;
  }

  friend bool operator==(const SecretVector&, const SecretVector&) = default;
};

enum class SchemeTag { kKgh, kKghe };

inline std::string SchemeName(SchemeTag tag) {
  return tag == SchemeTag::kKgh ? "KGH" : "KGHe";
}

struct ShareBundle {
  int participant_id = 1;
  std::vector<Digit> digits;
  std::vector<Digit> moduli;
  SchemeTag scheme = SchemeTag::kKgh;
  std::optional<std::string> exclusion_id;

  friend bool operator==(const ShareBundle&, const ShareBundle&) = default;
};

// Membership test for the allowed secret space of a KGHe dealing, with a
// stable identifier recorded on every share.
struct SecretPredicate {
  std::string id;
  std::function<bool(const SecretVector&)> allows;

  static SecretPredicate AlwaysTrue() {
    return {"all", [](const SecretVector&) { return true; }};
  }
};

namespace internal {

inline Digit AddMod(Digit a, Digit b, Digit m) {
  return static_cast<Digit>((std::uint64_t{a} + b) % m);
}

inline Digit SubMod(Digit a, Digit b, Digit m) {
  return static_cast<Digit>((std::uint64_t{a} + m - b) % m);
}

}  // namespace internal

// The first t-1 shares are uniform per digit; the last one makes the
// component-wise sum equal the secret.
template <UniformSource Source>
std::vector<ShareBundle> DealKgh(const SecretVector& secret, int t, Source& source) {
  secret.Validate();
  if (t < 1) throw Error(ErrorKind::kInvalidArgument, "need at least one participant");
  std::vector<ShareBundle> bundles;
  bundles.reserve(static_cast<std::size_t>(t));
  std::vector<Digit> last = secret.digits;
  for (int j = 1; j < t; ++j) {
    ShareBundle b{j, std::vector<Digit>(secret.size()), secret.moduli, SchemeTag::kKgh,
                  std::nullopt};
    for (std::size_t i = 0; i < secret.size(); ++i) {
      b.digits[i] = static_cast<Digit>(source.Uniform(secret.moduli[i]));
      last[i] = internal::SubMod(last[i], b.digits[i], secret.moduli[i]);
    }
    bundles.push_back(std::move(b));
  }
  bundles.push_back({t, std::move(last), secret.moduli, SchemeTag::kKgh, std::nullopt});
  return bundles;
}

inline SecretVector RecoverKgh(std::span<const ShareBundle> bundles) {
  if (bundles.empty()) {
    throw Error(ErrorKind::kInsufficientShares, "no shares supplied");
  }
  const std::vector<Digit>& moduli = bundles.front().moduli;
  std::vector<Digit> sum(moduli.size(), 0);
  for (const ShareBundle& b : bundles) {
    if (b.moduli != moduli || b.digits.size() != moduli.size()) {
      throw Error(ErrorKind::kDimension,
                  "share of participant " + std::to_string(b.participant_id) +
                      " has mismatched moduli or length");
    }
    for (std::size_t i = 0; i < sum.size(); ++i) {
      if (b.digits[i] >= moduli[i]) {
        throw Error(ErrorKind::kInvalidArgument, "share digit outside its modulus");
      }
      sum[i] = internal::AddMod(sum[i], b.digits[i], moduli[i]);
    }
  }
  return SecretVector(std::move(sum), moduli);
}

template <UniformSource Source>
std::vector<ShareBundle> DealKghe(const SecretVector& secret, int t,
                                  const SecretPredicate& allowed, Source& source) {
  secret.Validate();
  if (!allowed.allows(secret)) {
    throw Error(ErrorKind::kExcludedSecret,
                "secret is excluded by predicate '" + allowed.id + "'");
  }
  std::vector<ShareBundle> bundles = DealKgh(secret, t, source);
  for (ShareBundle& b : bundles) {
    b.scheme = SchemeTag::kKghe;
    b.exclusion_id = allowed.id;
  }
  return bundles;
}

inline SecretVector RecoverKghe(std::span<const ShareBundle> bundles,
                                const SecretPredicate& allowed) {
  for (const ShareBundle& b : bundles) {
    if (b.exclusion_id && *b.exclusion_id != allowed.id) {
      throw Error(ErrorKind::kInvalidArgument,
                  "share of participant " + std::to_string(b.participant_id) +
                      " was dealt under predicate '" + *b.exclusion_id + "'");
    }
  }
  SecretVector secret = RecoverKgh(bundles);
  if (!allowed.allows(secret)) {
    throw Error(ErrorKind::kInvalidSecret,
                "recovered vector is excluded by predicate '" + allowed.id + "'");
  }
  return secret;
}

}  // namespace graphshare
