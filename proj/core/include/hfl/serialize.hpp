#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "hfl/grid.hpp"
#include "hfl/table.hpp"

namespace hfl {

struct LinkInfo {
  std::string family = "torus";
  int n = 0;
  int multiplier = 1;
  int grid_size = 0;
};

/// Byte-deterministic JSON for a table: entries sorted by alexander2
/// lexicographically, then maslov descending.
std::string to_json(const GradedDimTable& t, const LinkInfo& info);

/// CSV with header a1,...,an,maslov,rank; doubled Alexander integers; same
/// entry order as the JSON form.
std::string to_csv(const GradedDimTable& t);

/// Parses to_json output. Throws Error on malformed input.
GradedDimTable table_from_json(const std::string& text,
                               LinkInfo* info = nullptr);

/// 8-hex-digit content hash of a grid (size and both marking permutations).
std::string grid_hash8(const GridDiagram& g);

/// One JSON file per (family, n, multiplier, grid hash) holding the tilde
/// table; hat tables are rederived on load. Writes are atomic
/// (write-temp-then-rename); unreadable entries are reported and rebuilt.
class TableCache {
public:
  explicit TableCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path path_for(const LinkInfo& info,
                                 const GridDiagram& g) const;

  /// Returns the cached tilde table, or nullopt (setting *warning when the
  /// entry existed but was unusable).
  std::optional<GradedDimTable> load(const LinkInfo& info,
                                     const GridDiagram& g,
                                     std::string* warning = nullptr) const;

  void store(const LinkInfo& info, const GridDiagram& g,
             const GradedDimTable& t) const;

private:
  std::filesystem::path dir_;
};

}  // namespace hfl
