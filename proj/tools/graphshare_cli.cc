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


// graphshare: command-line front end for coloring sharing and the Polly
// Cracker toy scheme.
//
// Exit status: 0 success, 2 bad input, 3 recovery rejected (tampered,
// mismatched or insufficient shares, invalid key).

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graphshare/graphshare.hpp"

namespace gs = graphshare;
namespace docs = graphshare::documents;

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitRecovery = 3;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gs::Error(gs::ErrorKind::kInvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw gs::Error(gs::ErrorKind::kInvalidArgument, "cannot write " + path);
}

docs::GraphDocument LoadGraph(const std::string& path, std::optional<int> palette) {
  docs::GraphDocument doc =
      docs::ParseGraphDocument(ReadFile(path), palette.value_or(docs::kCompactDefaultPalette));
  if (palette) {
    doc.palette_size = *palette;
    if (doc.coloring) doc.coloring = gs::Coloring(*palette, doc.coloring->colors);
  }
  if (doc.coloring && !gs::ValidateColoring(doc.graph, *doc.coloring)) {
    throw gs::Error(gs::ErrorKind::kInvalidArgument, path + ": coloring is not proper");
  }
  return doc;
}

const gs::Coloring& RequireColoring(const docs::GraphDocument& doc, const std::string& path) {
  if (!doc.coloring) {
    throw gs::Error(gs::ErrorKind::kInvalidArgument, path + " has no coloring");
  }
  return *doc.coloring;
}

// "3 4 7" or "3,4,7", 1-based.
std::vector<gs::Vertex> ParseVertexList(const std::string& text) {
  std::string spaced = text;
  for (char& ch : spaced)
    if (ch == ',') ch = ' ';
  std::istringstream in(spaced);
  std::vector<gs::Vertex> out;
  std::string tok;
  while (in >> tok) {
    const long long v = docs::internal::ParseInt(tok, "vertex list");
    if (v < 1) throw gs::Error(gs::ErrorKind::kParse, "vertex indices are 1-based");
    out.push_back(static_cast<gs::Vertex>(v - 1));
  }
  return out;
}

std::string Labels(const std::vector<gs::Vertex>& vertices) {
  if (vertices.empty()) return "none";
  std::string out;
  for (gs::Vertex v : vertices) out += (out.empty() ? "" : " ") + gs::VertexLabel(v);
  return out;
}

template <typename T>
std::string Joined(const std::vector<T>& values, const char* sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? sep : "") << values[i];
  return out.str();
}

std::string RenderDigits(const std::vector<gs::Digit>& digits,
                         const std::vector<gs::Digit>& moduli) {
  for (gs::Digit m : moduli)
    if (m > 10) return Joined(digits);
  return gs::SecretVector(digits, moduli).Render();
}

std::string ShareFileName(const std::string& prefix, int participant) {
  return prefix + std::to_string(participant) + ".share";
}

// Anything wrong with the supplied shares counts as a rejected recovery.
template <typename Fn>
auto AsRecovery(Fn&& fn) {
  try {
    return fn();
  } catch (const gs::Error& e) {
    if (gs::IsRecoveryError(e.kind())) throw;
    throw gs::Error(gs::ErrorKind::kInvalidSecret, e.what());
  }
}

std::vector<docs::ShareDocument> LoadShares(const std::vector<std::string>& paths,
                                            const std::string& purpose,
                                            const gs::Graph& g) {
  const std::string fingerprint = docs::GraphFingerprint(g);
  std::vector<docs::ShareDocument> shares;
  std::set<int> seen;
  for (const auto& path : paths) {
    const std::string text = ReadFile(path);
    docs::ShareDocument doc = AsRecovery([&] { return docs::ParseShareDocument(text); });
    if (doc.purpose != purpose) {
      throw gs::Error(gs::ErrorKind::kInvalidSecret,
                      path + " is a " + doc.purpose + " share, expected " + purpose);
    }
    if (doc.fingerprint != fingerprint) {
      throw gs::Error(gs::ErrorKind::kFingerprintMismatch,
                      path + " was dealt for a different graph");
    }
    if (!seen.insert(doc.bundle.participant_id).second) {
      throw gs::Error(gs::ErrorKind::kInsufficientShares,
                      "participant " + std::to_string(doc.bundle.participant_id) +
                          " supplied twice");
    }
    shares.push_back(std::move(doc));
  }
  return shares;
}

std::vector<gs::ShareBundle> Bundles(const std::vector<docs::ShareDocument>& shares) {
  std::vector<gs::ShareBundle> out;
  for (const auto& s : shares) out.push_back(s.bundle);
  return out;
}

struct Options {
  std::string graph;
  std::optional<int> n;
  std::optional<int> k;
  int t = 2;
  std::uint64_t seed = 0;
  std::string reduced;
  std::string out_prefix = "share";
  std::vector<std::string> share_files;
  std::string code;
  std::uint32_t field = 2;
  std::uint32_t message = 0;
  std::string key_file;
  std::string cipher;
  std::string cipher_file;
  int max_base_elems = gs::polly::EncryptParams{}.max_base_elems;
  int max_terms = gs::polly::EncryptParams{}.max_terms;
  int max_degree = gs::polly::EncryptParams{}.max_degree;
};

void RunAnalyze(const Options& o) {
  const docs::GraphDocument doc = LoadGraph(o.graph, o.k);
  const gs::Graph& g = doc.graph;
  const auto bounds = gs::ComputeChromaticBounds(g);
  std::cout << "vertices " << g.num_vertices() << "\n";
  std::cout << "edges " << g.num_edges() << "\n";
  std::cout << "chromatic-bounds " << bounds.lower << " " << bounds.upper << "\n";

  const int n = o.n ? *o.n
                    : doc.coloring ? static_cast<int>(doc.coloring->UsedColors().size())
                                   : gs::oracle::ChromaticNumber(g);
  std::cout << "colors " << n << "\n";
  const auto classes = gs::ClassifyVertices(g, n);
  const auto type2 = gs::VerticesOfKind(classes, gs::VertexKind::kTypeII);
  std::cout << "type-I " << Labels(gs::VerticesOfKind(classes, gs::VertexKind::kTypeI)) << "\n";
  std::cout << "type-II " << Labels(type2) << "\n";
  if (!type2.empty()) {
    std::vector<int> dof;
    for (gs::Vertex v : type2) dof.push_back(*classes[v].dof);
    std::cout << "type-II-dof " << Joined(dof) << "\n";
  }
  std::cout << "type-III " << Labels(gs::VerticesOfKind(classes, gs::VertexKind::kTypeIII))
            << "\n";
  try {
    gs::CheckSharingEligibility(g, classes);
  } catch (const gs::Error& e) {
    std::cout << "eligible no: " << e.what() << "\n";
    return;
  }
  std::cout << "eligible yes\n";
  if (!doc.coloring) return;

  const gs::Coloring& c = *doc.coloring;
  std::optional<std::vector<gs::Vertex>> override;
  if (!o.reduced.empty()) override = ParseVertexList(o.reduced);
  const gs::ColoringScheme scheme = gs::PrepareColoringScheme(g, c, n, override);
  std::cout << "reduced " << Labels(scheme.reduced.vertices) << "\n";

  const std::vector<int> used = c.UsedColors();
  const gs::PaletteMapping mapping = gs::MakePaletteMapping(used, n);
  std::vector<std::string> arrows;
  for (int color : used) arrows.push_back(std::to_string(color) + "->" +
                                          std::to_string(mapping.ToZn(color)));
  std::cout << "mapping " << Joined(arrows) << "\n";

  const gs::Coloring projected = gs::ProjectToZn(c);
  gs::oracle::PartialColoring type1_colors(g.num_vertices());
  for (gs::Vertex v : scheme.type1()) type1_colors[v] = projected[v];
  const gs::AvailableColors avail = gs::BuildAvailableSets(g, type1_colors, type2, n);
  std::vector<std::string> sets;
  for (const auto& e : avail.entries) {
    sets.push_back("C" + std::to_string(e.vertex + 1) + "={" + Joined(e.available, ",") + "}");
  }
  std::cout << "available " << (sets.empty() ? "none" : Joined(sets)) << "\n";

  const gs::SecretVector secret = gs::AssembleSecret(scheme, c).ToSecretVector();
  std::cout << "secret " << RenderDigits(secret.digits, secret.moduli) << "\n";
  std::cout << "moduli " << Joined(secret.moduli) << "\n";
  std::cout << "count-type-I-unknown "
            << gs::CountPossibilities(c.palette_size, n, avail, gs::CountMode::kType1Unknown)
            << "\n";
  std::cout << "count-type-II-unknown "
            << gs::CountPossibilities(c.palette_size, n, avail, gs::CountMode::kType2Unknown)
            << "\n";
}

void RunEncode(const Options& o) {
  const docs::GraphDocument doc = LoadGraph(o.graph, o.k);
  std::cout << gs::EncodeMatrix(doc.graph, doc.coloring).Render() << "\n";
}

void RunDecode(const Options& o) {
  const docs::GraphDocument doc =
      docs::ParseCompactCode(o.code, o.k.value_or(docs::kCompactDefaultPalette));
  std::cout << docs::RenderGraphDocument(doc);
}

void RunDealColoring(const Options& o) {
  const docs::GraphDocument doc = LoadGraph(o.graph, o.k);
  const gs::Coloring& c = RequireColoring(doc, o.graph);
  const int n = o.n.value_or(static_cast<int>(c.UsedColors().size()));
  std::optional<std::vector<gs::Vertex>> override;
  if (!o.reduced.empty()) override = ParseVertexList(o.reduced);
  const gs::ColoringScheme scheme = gs::PrepareColoringScheme(doc.graph, c, n, override);
  gs::Rng rng(o.seed);
  const auto bundles = gs::DealColoring(scheme, c, o.t, rng);
  const std::string fingerprint = docs::GraphFingerprint(doc.graph);
  for (const auto& b : bundles) {
    const docs::ShareDocument share{"coloring", fingerprint,         b,
                                    scheme.k,   scheme.n,            scheme.reduced.vertices};
    const std::string path = ShareFileName(o.out_prefix, b.participant_id);
    WriteFile(path, docs::RenderShareDocument(share));
    std::cout << path << "\n";
  }
}

void RunRecoverColoring(const Options& o) {
  const docs::GraphDocument doc = LoadGraph(o.graph, std::nullopt);
  const auto shares = LoadShares(o.share_files, "coloring", doc.graph);
  const gs::Coloring c = AsRecovery([&] {
    const auto& first = shares.front();
    if (!first.palette_size || !first.num_colors || !first.reduced) {
      throw gs::Error(gs::ErrorKind::kInvalidSecret, "share lacks the scheme parameters");
    }
    for (const auto& s : shares) {
      if (s.palette_size != first.palette_size || s.num_colors != first.num_colors ||
          s.reduced != first.reduced) {
        throw gs::Error(gs::ErrorKind::kInvalidSecret, "shares disagree on scheme parameters");
      }
    }
    const gs::ColoringScheme scheme = gs::PublicColoringScheme(
        doc.graph, *first.palette_size, *first.num_colors, *first.reduced);
    return gs::RecoverColoring(scheme, Bundles(shares));
  });
  std::cout << Joined(c.colors) << "\n";
}

void RunDealKey(const Options& o) {
  const docs::GraphDocument doc = LoadGraph(o.graph, o.k);
  const gs::Coloring& c = RequireColoring(doc, o.graph);
  gs::Rng rng(o.seed);
  const auto bundles = gs::DealPrivateKey(doc.graph, c, o.t, rng);
  const std::string fingerprint = docs::GraphFingerprint(doc.graph);
  for (const auto& b : bundles) {
    const docs::ShareDocument share{"private-key", fingerprint, b, {}, {}, {}};
    const std::string path = ShareFileName(o.out_prefix, b.participant_id);
    WriteFile(path, docs::RenderShareDocument(share));
    std::cout << path << "\n";
  }
}

void RunRecoverKey(const Options& o) {
  const docs::GraphDocument doc = LoadGraph(o.graph, std::nullopt);
  const auto shares = LoadShares(o.share_files, "private-key", doc.graph);
  const gs::Coloring c =
      AsRecovery([&] { return gs::RecoverPrivateKey(doc.graph, Bundles(shares)); });
  std::cout << Joined(c.colors) << "\n";
}

void RunPcKeygen(const Options& o) {
  const docs::GraphDocument doc = LoadGraph(o.graph, o.k);
  const gs::Coloring& c = RequireColoring(doc, o.graph);
  // Colorings over a wider palette are projected onto {0,1,2} first.
  const bool narrow = c.UsedColors().back() < gs::polly::kColors;
  const gs::Coloring z3(gs::polly::kColors, narrow ? c.colors : gs::ProjectToZn(c).colors);
  const gs::polly::KeyPair key = gs::polly::Keygen(doc.graph, z3);
  WriteFile(o.key_file, docs::RenderKeyDocument({docs::GraphFingerprint(doc.graph), key.coloring}));
  for (const auto& q : gs::polly::BuildBase(doc.graph, o.field)) std::cout << q.Render() << "\n";
}

void RunPcEncrypt(const Options& o) {
  const docs::GraphDocument doc = LoadGraph(o.graph, o.k);
  gs::Rng rng(o.seed);
  const auto cipher = gs::polly::Encrypt(gs::polly::BuildBase(doc.graph, o.field), o.message,
                                         {o.max_base_elems, o.max_terms, o.max_degree}, rng);
  std::cout << cipher.Render() << "\n";
}

void RunPcDecrypt(const Options& o) {
  const docs::KeyDocument key = AsRecovery([&] { return docs::ParseKeyDocument(ReadFile(o.key_file)); });
  if (key.coloring.palette_size != gs::polly::kColors) {
    throw gs::Error(gs::ErrorKind::kInvalidKey, "key colors must lie in {0,1,2}");
  }
  if (!o.graph.empty()) {
    const docs::GraphDocument doc = LoadGraph(o.graph, std::nullopt);
    if (docs::GraphFingerprint(doc.graph) != key.fingerprint) {
      throw gs::Error(gs::ErrorKind::kFingerprintMismatch, "key belongs to a different graph");
    }
    gs::polly::Keygen(doc.graph, key.coloring);
  }
  std::string text = o.cipher;
  if (!o.cipher_file.empty()) text = ReadFile(o.cipher_file);
  if (text.empty()) throw gs::Error(gs::ErrorKind::kInvalidArgument, "no ciphertext given");
  const auto cipher = gs::SparsePolynomial::Parse(text, o.field);
  std::cout << gs::polly::Decrypt(cipher, gs::polly::ZeroPoint(key.coloring)) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Share graph colorings and run the Polly Cracker toy scheme."};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "graph document or compact matrix code")
        ->required()
        ->check(CLI::ExistingFile);
  };
  auto add_palette = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "palette size (overrides the document)")
        ->check(CLI::Range(1, 1 << 20));
  };
  auto add_deal = [&](CLI::App* sub) {
    sub->add_option("--t", o.t, "number of shares")->check(CLI::Range(1, 1 << 16));
    sub->add_option("--seed", o.seed, "randomness seed");
    sub->add_option("--out-prefix", o.out_prefix, "share files are <prefix><id>.share");
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "prime modulus of the coefficient field");
  };

  auto* analyze = app.add_subcommand("analyze", "vertex types, reduced structure, secret layout");
  add_graph(analyze);
  add_palette(analyze);
  analyze->add_option("--n", o.n, "number of colors")->check(CLI::Range(1, 64));
  analyze->add_option("--reduced", o.reduced, "reduced structure, 1-based vertex list");

  auto* encode = app.add_subcommand("encode", "print the matrix code of a graph");
  add_graph(encode);
  add_palette(encode);

  auto* decode = app.add_subcommand("decode", "print the graph document for a matrix code");
  decode->add_option("--code", o.code, "matrix code digits")->required();
  add_palette(decode);

  auto* deal_coloring = app.add_subcommand("deal-coloring", "share a coloring");
  add_graph(deal_coloring);
  add_palette(deal_coloring);
  add_deal(deal_coloring);
  deal_coloring->add_option("--n", o.n, "number of colors")->check(CLI::Range(1, 64));
  deal_coloring->add_option("--reduced", o.reduced, "reduced structure, 1-based vertex list");

  auto* recover_coloring = app.add_subcommand("recover-coloring", "recover a shared coloring");
  add_graph(recover_coloring);
  recover_coloring->add_option("shares", o.share_files, "share files")
      ->required()
      ->check(CLI::ExistingFile);

  auto* deal_key = app.add_subcommand("deal-key", "share a coloring used as a private key");
  add_graph(deal_key);
  add_palette(deal_key);
  add_deal(deal_key);

  auto* recover_key = app.add_subcommand("recover-key", "recover a shared private key");
  add_graph(recover_key);
  recover_key->add_option("shares", o.share_files, "share files")
      ->required()
      ->check(CLI::ExistingFile);

  auto* pc_keygen = app.add_subcommand("pc-keygen", "write the private key, print the public base");
  add_graph(pc_keygen);
  add_field(pc_keygen);
  pc_keygen->add_option("--key", o.key_file, "private key output file")->required();

  auto* pc_encrypt = app.add_subcommand("pc-encrypt", "encrypt a field element");
  add_graph(pc_encrypt);
  add_field(pc_encrypt);
  pc_encrypt->add_option("--message", o.message, "message in Z_p")->required();
  pc_encrypt->add_option("--seed", o.seed, "randomness seed");
  pc_encrypt->add_option("--max-base-elems", o.max_base_elems)->check(CLI::Range(0, 1000));
  pc_encrypt->add_option("--max-terms", o.max_terms)->check(CLI::Range(1, 1000));
  pc_encrypt->add_option("--max-degree", o.max_degree)->check(CLI::Range(0, 64));

  auto* pc_decrypt = app.add_subcommand("pc-decrypt", "decrypt a ciphertext polynomial");
  pc_decrypt->add_option("--key", o.key_file, "private key file")
      ->required()
      ->check(CLI::ExistingFile);
  add_field(pc_decrypt);
  pc_decrypt->add_option("--graph", o.graph, "public graph to check the key against")
      ->check(CLI::ExistingFile);
  auto* cipher = pc_decrypt->add_option("--cipher", o.cipher, "ciphertext polynomial");
  pc_decrypt->add_option("--cipher-file", o.cipher_file, "file holding the ciphertext")
      ->excludes(cipher)
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitBadInput;
  }

  try {
    if (*analyze) RunAnalyze(o);
    if (*encode) RunEncode(o);
    if (*decode) RunDecode(o);
    if (*deal_coloring) RunDealColoring(o);
    if (*recover_coloring) RunRecoverColoring(o);
    if (*deal_key) RunDealKey(o);
    if (*recover_key) RunRecoverKey(o);
    if (*pc_keygen) RunPcKeygen(o);
    if (*pc_encrypt) RunPcEncrypt(o);
    if (*pc_decrypt) RunPcDecrypt(o);
  } catch (const gs::Error& e) {
    std::cerr << "graphshare: " << e.what() << "\n";
    return gs::IsRecoveryError(e.kind()) ? kExitRecovery : kExitBadInput;
  }
  return 0;
}
