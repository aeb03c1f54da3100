#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ordinal/simulate.hpp"

namespace ordinal::fixtures {

// The ten-row preview block of the generated dataset, columns in theme order.
inline const std::array<std::array<double, 3>, 10> kPreviewRows = {{
    {4.2515, 4.0623, 3.7852},
    {4.0794, 4.0962, 3.7712},
    {4.2924, 4.0696, 3.5077},
    {4.5295, 4.1340, 3.8352},
    {4.0535, 4.2329, 3.3881},
    {4.0535, 4.0538, 3.5687},
    {4.5447, 4.2151, 3.2782},
    {4.3248, 4.0529, 4.0467},
    {3.9897, 4.0469, 3.6600},
    {4.2639, 4.1985, 4.1780},
}};

inline SampleSet preview_theme(std::size_t column) {
  SampleSet s{default_themes().at(column).name, {}};
  for (const auto& row : kPreviewRows) s.values.push_back(row[column]);
  return s;
}

// Values recorded once from numpy's legacy RandomState (independent of this
// code base) and frozen here.
namespace numpy_oracle {

inline constexpr std::array<std::uint32_t, 5> kU32Seed42 = {1608637542U, 3421126067U, 4083286876U,
                                                            787846414U, 3143890026U};
inline constexpr std::array<std::uint32_t, 3> kU32Seed5489 = {3499211612U, 581869302U, 3890346734U};
inline constexpr std::array<double, 3> kDoubleSeed42 = {0.3745401188473625, 0.9507143064099162,
                                                        0.7319939418114051};
inline constexpr double kGauss42_0 = 0.4967141530112327;
inline constexpr double kGauss42_1 = -0.13826430117118466;
inline constexpr double kGauss42_9999 = 0.6443884535381822;
inline constexpr double kGauss42_10000 = -0.6784947304872218;
inline constexpr std::array<double, 3> kGaussSeed0 = {1.764052345967664, 0.4001572083672233,
                                                      0.9787379841057392};

// Per theme for the default dataset: sum of value*1e4, sum of row*value*1e4,
// row 5000, row 9999, min, max.
struct ThemeChecksum {
  std::int64_t sum;
  std::int64_t weighted;
  double row5000;
  double row9999;
  double min;
  double max;
};
inline constexpr std::array<ThemeChecksum, 3> kDatasetChecksums = {{
    {411627688, 2057165882152, 4.0021, 4.2915, 3.0543, 5.0},
    {412523113, 2062682778725, 4.1109, 3.9766, 3.7731, 4.5316},
    {370730821, 1853496353242, 3.7469, 3.6606, 2.9205, 4.5074},
}};

// numpy.histogram(normal(4.1, 0.27, 10000) after seed 42, bins=50).
inline constexpr std::array<std::size_t, 50> kPlotSourceCounts = {
    2,   1,   1,   0,   6,   4,   18,  12,  20,  34,  39,  76,  94,  135, 141, 213, 264,
    305, 379, 444, 468, 553, 571, 618, 621, 612, 616, 588, 536, 492, 393, 378, 322, 251,
    199, 182, 110, 86,  81,  39,  31,  25,  15,  8,   9,   4,   1,   1,   0,   2};
inline constexpr double kPlotSourceMin = 3.040951932063047;
inline constexpr double kPlotSourceMax = 5.160084180737808;

}  // namespace numpy_oracle

}  // namespace ordinal::fixtures
