#include "hfl/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace hfl {

namespace {

using ordered_json = nlohmann::ordered_json;

// alexander2 lexicographic, maslov descending.
std::vector<std::pair<MultiGrading, std::int64_t>> sorted_entries(
    const GradedDimTable& t) {
  std::vector<std::pair<MultiGrading, std::int64_t>> entries(
      t.entries.begin(), t.entries.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.first.alexander2 != b.first.alexander2)
      return a.first.alexander2 < b.first.alexander2;
    return a.first.maslov > b.first.maslov;
  });
  return entries;
}

TableKind kind_from_string(const std::string& s) {
  if (s == "tilde") return TableKind::Tilde;
  if (s == "hat") return TableKind::Hat;
  if (s == "predicted") return TableKind::Predicted;
  throw Error("unknown table kind: " + s);
}

}  // namespace

std::string to_json(const GradedDimTable& t, const LinkInfo& info) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["link"] = {{"family", info.family},
                 {"n", info.n},
                 {"multiplier", info.multiplier}};
  doc["grid_size"] = info.grid_size;
  doc["coefficients"] = "GF2";
  doc["kind"] = to_string(t.kind);
  doc["entries"] = ordered_json::array();
  for (const auto& [g, r] : sorted_entries(t)) {
    ordered_json entry;
    entry["alexander2"] = g.alexander2;
    entry["maslov"] = g.maslov;
    entry["rank"] = r;
    doc["entries"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string to_csv(const GradedDimTable& t) {
  std::ostringstream out;
  for (int i = 1; i <= t.components; ++i) out << 'a' << i << ',';
  out << "maslov,rank\n";
  for (const auto& [g, r] : sorted_entries(t)) {
    for (int v : g.alexander2) out << v << ',';
    out << g.maslov << ',' << r << '\n';
  }
  return out.str();
}

GradedDimTable table_from_json(const std::string& text, LinkInfo* info) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("table JSON does not parse: ") + e.what());
  }
  try {
    if (doc.at("schema_version").get<int>() != 1)
      throw Error("unsupported schema_version");
    if (doc.at("coefficients").get<std::string>() != "GF2")
      throw Error("unsupported coefficient field");
    LinkInfo parsed;
    parsed.family = doc.at("link").at("family").get<std::string>();
    parsed.n = doc.at("link").at("n").get<int>();
    parsed.multiplier = doc.at("link").at("multiplier").get<int>();
    parsed.grid_size = doc.at("grid_size").get<int>();

    GradedDimTable t(kind_from_string(doc.at("kind").get<std::string>()),
                     parsed.n);
    for (const auto& entry : doc.at("entries")) {
      MultiGrading g;
      g.alexander2 = entry.at("alexander2").get<std::vector<int>>();
      g.maslov = entry.at("maslov").get<int>();
      const auto rank = entry.at("rank").get<std::int64_t>();
      if (rank <= 0) throw Error("nonpositive rank in table JSON");
      t.add(g, rank);
    }
    if (info) *info = parsed;
    return t;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(std::string("table JSON is malformed: ") + e.what());
  }
}

std::string grid_hash8(const GridDiagram& g) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&h](std::uint8_t byte) {
    h ^= byte;
    h *= 1099511628211ull;
  };
  mix(std::uint8_t(g.size));
  for (auto v : g.o_perm) mix(v);
  for (auto v : g.x_perm) mix(v);
  static const char* digits = "0123456789abcdef";
  std::string out(8, '0');
  for (int i = 0; i < 8; ++i) out[7 - i] = digits[(h >> (4 * i)) & 0xF];
  return out;
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path TableCache::path_for(const LinkInfo& info,
                                           const GridDiagram& g) const {
  return dir_ / ("torus_" + std::to_string(info.n) + "_" +
                 std::to_string(info.multiplier) + "_" + grid_hash8(g) +
                 ".json");
}

std::optional<GradedDimTable> TableCache::load(const LinkInfo& info,
                                               const GridDiagram& g,
                                               std::string* warning) const {
  const auto path = path_for(info, g);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    LinkInfo parsed;
    GradedDimTable t = table_from_json(buffer.str(), &parsed);
    if (parsed.n != info.n || parsed.multiplier != info.multiplier ||
        parsed.grid_size != g.size || t.kind != TableKind::Tilde)
      throw Error("cache entry does not describe the requested link");
    return t;
  } catch (const Error& e) {
    if (warning)
      *warning = "cache entry " + path.string() + " is unusable (" +
                 e.what() + "); recomputing";
    return std::nullopt;
  }
}

void TableCache::store(const LinkInfo& info, const GridDiagram& g,
                       const GradedDimTable& t) const {
  std::filesystem::create_directories(dir_);
  const auto path = path_for(info, g);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp);
    out << to_json(t, info);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hfl
