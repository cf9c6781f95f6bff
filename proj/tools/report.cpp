#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "cli.hpp"
#include "witt/errors.hpp"

namespace witt::cli {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

Json report_json(const std::string& command, const std::string& digest, Json result, const std::vector<Check>& checks) {
  Json r;
  r["tool_version"] = kToolVersion;
  r["input_digest"] = digest;
  r["command"] = command;
  r["result"] = std::move(result);
  r["checks"] = Json::array();
  for (const auto& c : checks) r["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return r;
}

namespace {

void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + p.string());
  out << text;
}

}  // namespace

void write_certificate(const BordismCertificate& cert, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_text(dir / "W.scx", serialize_space(space_file_of(cert.w)));
  Json m;
  m["w"] = "W.scx";
  m["pieces"] = Json::array();
  for (std::size_t i = 0; i < cert.pieces.size(); ++i) {
    const auto& p = cert.pieces[i];
    const std::string file = "piece" + std::to_string(i) + ".scx";
    write_text(dir / file, serialize_space(space_file_of(p.declared)));
    Json map = Json::array();
    for (auto [a, b] : p.map) map.push_back({a, b});
    m["pieces"].push_back({{"name", p.name}, {"file", file}, {"map", map}});
  }
  m["pinch_points"] = cert.pinch_points;
  write_text(dir / "manifest.json", m.dump(2) + "\n");
}

BordismCertificate read_certificate(const std::filesystem::path& w_file, const std::filesystem::path& manifest) {
  BordismCertificate cert;
  auto w = read_space_file(w_file);
  cert.w = w.has_filtration() ? w.declared_space() : candidate_stratification(w.complex).space;
  std::ifstream in(manifest);
  if (!in) throw ParseError("cannot read " + manifest.string());
  Json m;
  try {
    m = Json::parse(in);
    for (const auto& p : m.at("pieces")) {
      BoundaryPiece piece;
      piece.name = p.at("name").get<std::string>();
      piece.declared = read_space_file(manifest.parent_path() / p.at("file").get<std::string>()).complex;
      for (const auto& pair : p.at("map")) piece.map.emplace_back(pair.at(0).get<Vertex>(), pair.at(1).get<Vertex>());
      cert.pieces.push_back(std::move(piece));
    }
    if (m.contains("pinch_points")) cert.pinch_points = m["pinch_points"].get<std::vector<Vertex>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(manifest.string() + ": " + e.what());
  }
  for (Vertex p : cert.pinch_points)
    if (!cert.w.complex().contains(Simplex({p}))) throw ValidationError("pinch point " + std::to_string(p) + " is not a vertex of W");
  return cert;
}

}  // namespace witt::cli
