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


// Line-oriented text formats used by the command-line tool.
//
// Graph document (1-based vertices, '#' starts a comment):
//   v <vertex count>
//   k <palette size>
//   e <i> <j>          one per edge
//   c <i> <color>      optional, one per vertex when present
// A document consisting of a single line of digits is read as a matrix code.
//
// Share document:
//   graphshare-share 1
//   purpose coloring|private-key
//   scheme KGH|KGHe
//   exclusion <predicate id>          (KGHe only)
//   participant <id>
//   fingerprint <16 hex digits>
//   palette <k>                       (coloring shares)
//   colors <n>                        (coloring shares)
//   reduced <i> <j> ...               (coloring shares)
//   moduli <m1> <m2> ...
//   digits <d1> <d2> ...

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "graphshare/error.hpp"
#include "graphshare/graph.hpp"
#include "graphshare/kgh.hpp"

namespace graphshare::documents {

inline constexpr int kCompactDefaultPalette = 10;

struct GraphDocument {
  Graph graph;
  int palette_size = 1;
  std::optional<Coloring> coloring;
};

namespace internal {

inline std::string StripComment(const std::string& line) {
  std::string out = line.substr(0, line.find('#'));
  const auto first = out.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = out.find_last_not_of(" \t\r");
  return out.substr(first, last - first + 1);
}

inline std::vector<std::string> MeaningfulLines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = StripComment(line);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

inline long long ParseInt(const std::string& token, const std::string& context) {
  if (token.empty() ||
      !std::all_of(token.begin(), token.end(), [](char ch) { return std::isdigit(
                                                                   static_cast<unsigned char>(ch)); }) ||
      token.size() > 12) {
    throw Error(ErrorKind::kParse, "expected a non-negative integer in " + context +
                                       ", got '" + token + "'");
  }
  return std::stoll(token);
}

inline std::vector<std::string> Tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace internal

inline bool IsCompactCode(const std::string& text) {
  const auto lines = internal::MeaningfulLines(text);
  return lines.size() == 1 &&
         std::all_of(lines[0].begin(), lines[0].end(),
                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

// An all-zero diagonal reads as an uncolored graph.
inline GraphDocument ParseCompactCode(const std::string& digits,
                                      int palette_size = kCompactDefaultPalette) {
  auto [code, m] = SplitMatrixCode(digits, true);
  code.colored = code.diagonal_part.find_first_not_of('0') != std::string::npos;
  DecodedGraph decoded = DecodeMatrix(code, m, palette_size);
  if (decoded.coloring && !ValidateColoring(decoded.graph, *decoded.coloring)) {
    throw Error(ErrorKind::kInvalidArgument, "coded coloring is not proper");
  }
  return {std::move(decoded.graph), palette_size, std::move(decoded.coloring)};
}

inline GraphDocument ParseGraphDocument(const std::string& text,
                                        int compact_palette = kCompactDefaultPalette) {
  const auto lines = internal::MeaningfulLines(text);
  if (lines.empty()) throw Error(ErrorKind::kParse, "empty graph document");
  if (IsCompactCode(text)) return ParseCompactCode(lines[0], compact_palette);

  std::optional<long long> m;
  std::optional<long long> k;
  std::vector<Edge> edges;
  std::map<Vertex, int> colors;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto tok = internal::Tokens(lines[n]);
    const std::string where = "line '" + lines[n] + "'";
    auto expect = [&](std::size_t count) {
      if (tok.size() != count) throw Error(ErrorKind::kParse, "malformed " + where);
    };
    if (tok[0] == "v") {
      expect(2);
      if (m) throw Error(ErrorKind::kParse, "duplicate vertex count");
      m = internal::ParseInt(tok[1], where);
      if (*m < 1) throw Error(ErrorKind::kParse, "vertex count must be positive");
    } else if (tok[0] == "k") {
      expect(2);
      if (k) throw Error(ErrorKind::kParse, "duplicate palette size");
      k = internal::ParseInt(tok[1], where);
      if (*k < 1) throw Error(ErrorKind::kParse, "palette size must be positive");
    } else if (tok[0] == "e" || tok[0] == "c") {
      expect(3);
      if (!m) throw Error(ErrorKind::kParse, "'v' must precede edges and colors");
      const long long i = internal::ParseInt(tok[1], where);
      const long long j = internal::ParseInt(tok[2], where);
      if (i < 1 || i > *m) {
        throw Error(ErrorKind::kParse, "vertex " + tok[1] + " out of range in " + where);
      }
      if (tok[0] == "e") {
        if (j < 1 || j > *m) {
          throw Error(ErrorKind::kParse, "vertex " + tok[2] + " out of range in " + where);
        }
        edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1));
      } else if (!colors.emplace(static_cast<Vertex>(i - 1), static_cast<int>(j)).second) {
        throw Error(ErrorKind::kParse, "vertex " + tok[1] + " colored twice");
      }
    } else {
      throw Error(ErrorKind::kParse, "unknown record in " + where);
    }
  }
  if (!m) throw Error(ErrorKind::kParse, "missing 'v' record");
  GraphDocument doc{Graph(static_cast<std::size_t>(*m), edges), 1, std::nullopt};
  int max_color = -1;
  for (const auto& [v, s] : colors) max_color = std::max(max_color, s);
  doc.palette_size = k ? static_cast<int>(*k) : std::max(1, max_color + 1);
  if (!colors.empty()) {
    if (colors.size() != doc.graph.num_vertices()) {
      throw Error(ErrorKind::kParse, "colors given for some vertices but not all");
    }
    std::vector<int> values;
    for (const auto& [v, s] : colors) values.push_back(s);
    doc.coloring = Coloring(doc.palette_size, std::move(values));
  }
  return doc;
}

inline std::string RenderGraphDocument(const GraphDocument& doc) {
  std::ostringstream out;
  out << "v " << doc.graph.num_vertices() << "\n";
  out << "k " << doc.palette_size << "\n";
  for (const auto& [u, v] : doc.graph.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  if (doc.coloring) {
    for (Vertex v = 0; v < doc.coloring->size(); ++v) {
      out << "c " << v + 1 << " " << (*doc.coloring)[v] << "\n";
    }
  }
  return out.str();
}

// FNV-1a over the vertex count and the structure part of the matrix code.
inline std::string GraphFingerprint(const Graph& g) {
  const std::string data =
      std::to_string(g.num_vertices()) + ":" + EncodeMatrix(g).structure_part;
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

struct ShareDocument {
  std::string purpose;  // "coloring" or "private-key"
  std::string fingerprint;
  ShareBundle bundle;
  // Coloring shares carry the public scheme parameters.
  std::optional<int> palette_size;
  std::optional<int> num_colors;
  std::optional<std::vector<Vertex>> reduced;

  friend bool operator==(const ShareDocument&, const ShareDocument&) = default;
};

inline constexpr const char* kShareMagic = "graphshare-share 1";

inline std::string RenderShareDocument(const ShareDocument& doc) {
  std::ostringstream out;
  out << kShareMagic << "\n";
  out << "purpose " << doc.purpose << "\n";
  out << "scheme " << SchemeName(doc.bundle.scheme) << "\n";
  if (doc.bundle.exclusion_id) out << "exclusion " << *doc.bundle.exclusion_id << "\n";
  out << "participant " << doc.bundle.participant_id << "\n";
  out << "fingerprint " << doc.fingerprint << "\n";
  if (doc.palette_size) out << "palette " << *doc.palette_size << "\n";
  if (doc.num_colors) out << "colors " << *doc.num_colors << "\n";
  if (doc.reduced) {
    out << "reduced";
    for (Vertex v : *doc.reduced) out << " " << v + 1;
    out << "\n";
  }
  out << "moduli";
  for (Digit m : doc.bundle.moduli) out << " " << m;
  out << "\ndigits";
  for (Digit d : doc.bundle.digits) out << " " << d;
  out << "\n";
  return out.str();
}

inline ShareDocument ParseShareDocument(const std::string& text) {
  const auto lines = internal::MeaningfulLines(text);
  if (lines.empty() || lines[0] != kShareMagic) {
    throw Error(ErrorKind::kParse, "not a share document");
  }
  ShareDocument doc;
  std::map<std::string, std::vector<std::string>> fields;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto tok = internal::Tokens(lines[i]);
    const std::string key = tok[0];
    tok.erase(tok.begin());
    if (!fields.emplace(key, std::move(tok)).second) {
      throw Error(ErrorKind::kParse, "duplicate field '" + key + "'");
    }
  }
  auto single = [&](const std::string& key) -> std::optional<std::string> {
    auto it = fields.find(key);
    if (it == fields.end()) return std::nullopt;
    if (it->second.size() != 1) throw Error(ErrorKind::kParse, "field '" + key + "' needs one value");
    return it->second[0];
  };
  auto required = [&](const std::string& key) {
    auto v = single(key);
    if (!v) throw Error(ErrorKind::kParse, "missing field '" + key + "'");
    return *v;
  };
  auto numbers = [&](const std::string& key) {
    std::vector<Digit> out;
    auto it = fields.find(key);
    if (it == fields.end()) throw Error(ErrorKind::kParse, "missing field '" + key + "'");
    for (const auto& t : it->second) {
      out.push_back(static_cast<Digit>(internal::ParseInt(t, "field '" + key + "'")));
    }
    return out;
  };
  static const std::vector<std::string> kKnown = {
      "purpose", "scheme", "exclusion", "participant", "fingerprint",
      "palette", "colors", "reduced",   "moduli",      "digits"};
  for (const auto& [key, values] : fields) {
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
      throw Error(ErrorKind::kParse, "unknown field '" + key + "'");
    }
  }

  doc.purpose = required("purpose");
  if (doc.purpose != "coloring" && doc.purpose != "private-key") {
    throw Error(ErrorKind::kParse, "unknown purpose '" + doc.purpose + "'");
  }
  const std::string scheme = required("scheme");
  if (scheme == "KGH") {
    doc.bundle.scheme = SchemeTag::kKgh;
  } else if (scheme == "KGHe") {
    doc.bundle.scheme = SchemeTag::kKghe;
  } else {
    throw Error(ErrorKind::kParse, "unknown scheme '" + scheme + "'");
  }
  doc.bundle.exclusion_id = single("exclusion");
  doc.bundle.participant_id =
      static_cast<int>(internal::ParseInt(required("participant"), "participant"));
  doc.fingerprint = required("fingerprint");
  if (auto p = single("palette")) doc.palette_size = static_cast<int>(internal::ParseInt(*p, "palette"));
  if (auto n = single("colors")) doc.num_colors = static_cast<int>(internal::ParseInt(*n, "colors"));
  if (fields.count("reduced")) {
    std::vector<Vertex> reduced;
    for (Digit v : numbers("reduced")) {
      if (v < 1) throw Error(ErrorKind::kParse, "reduced vertices are 1-based");
      reduced.push_back(v - 1);
    }
    doc.reduced = std::move(reduced);
  }
  doc.bundle.moduli = numbers("moduli");
  doc.bundle.digits = numbers("digits");
  try {
    SecretVector(doc.bundle.digits, doc.bundle.moduli);
  } catch (const Error& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
  return doc;
}

// Polly Cracker private key file.
struct KeyDocument {
  std::string fingerprint;
  Coloring coloring;
};

inline constexpr const char* kKeyMagic = "graphshare-pc-key 1";

inline std::string RenderKeyDocument(const KeyDocument& doc) {
  std::ostringstream out;
  out << kKeyMagic << "\nfingerprint " << doc.fingerprint << "\ncolors";
  for (int c : doc.coloring.colors) out << " " << c;
  out << "\n";
  return out.str();
}

inline KeyDocument ParseKeyDocument(const std::string& text) {
  const auto lines = internal::MeaningfulLines(text);
  if (lines.size() != 3 || lines[0] != kKeyMagic) {
    throw Error(ErrorKind::kParse, "not a key document");
  }
  auto fp = internal::Tokens(lines[1]);
  auto colors = internal::Tokens(lines[2]);
  if (fp.size() != 2 || fp[0] != "fingerprint" || colors.empty() || colors[0] != "colors") {
    throw Error(ErrorKind::kParse, "malformed key document");
  }
  std::vector<int> values;
  for (std::size_t i = 1; i < colors.size(); ++i) {
    values.push_back(static_cast<int>(internal::ParseInt(colors[i], "colors")));
  }
  int palette = 3;
  for (int v : values) palette = std::max(palette, v + 1);
  return {fp[1], Coloring(palette, std::move(values))};
}

}  // namespace graphshare::documents
