#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cfr/designs.hpp"
#include "cfr/skipcost.hpp"

namespace cfr::test {

inline std::filesystem::path data_dir() { return CFR_TEST_DATA_DIR; }

inline CoveringDesign corpus_design(int t, int k, int v) {
  return load_design(data_dir() / "designs" /
                         ("c_" + std::to_string(v) + "_" + std::to_string(k) + "_" +
                          std::to_string(t) + ".txt"),
                     {t, k, v});
}

struct CorpusEntry {
  DesignParams params;
  std::filesystem::path path;
};

// Every design file in the corpus, parameters taken from the file name.
inline std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir() / "designs")) {
    const auto stem = entry.path().stem().string();
    int v = 0, k = 0, t = 0;
    if (std::sscanf(stem.c_str(), "c_%d_%d_%d", &v, &k, &t) == 3) {
      out.push_back({{t, k, v}, entry.path()});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.path.filename() < b.path.filename();
  });
  return out;
}

// Columns given as printed, one vector per column.
inline CfrArray array_of(int v, std::vector<std::vector<int>> columns) {
  const int k = static_cast<int>(columns.front().size());
  return CfrArray(k, v, std::move(columns));
}

inline CfrArray example_array() {
  return array_of(6, {{1, 2, 3, 5}, {2, 3, 4, 6}, {1, 3, 4, 5}, {2, 4, 5, 6}, {1, 3, 5, 6},
                      {1, 2, 4, 6}});
}

}  // namespace cfr::test
