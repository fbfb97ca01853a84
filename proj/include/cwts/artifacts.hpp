#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwts/data_io.hpp"
#include "cwts/scale_grid.hpp"
#include "cwts/util.hpp"

namespace cwts {

// Machine-readable spectrum exports. One annotated-CSV matrix format serves
// power, significance masks and ground-truth masks:
//
//   # cwt-spectra matrix v1
//   # kind: power
//   ... grid metadata lines ...
//   scales,2,2.1189...,...
//   2000-01-03,v0,v1,...
//
// Values are written with 17 significant digits so read(write(m)) == m.

struct MatrixFile {
  std::string kind;  // "power" | "mask" | "truth-mask"
  ScaleGrid grid;
  double omega0 = 6.0;
  std::vector<Date> dates;
  RealMatrix values;
};

std::string serialize_matrix(const MatrixFile& m);
MatrixFile parse_matrix(const std::string& bytes);

std::string serialize_thresholds(const std::vector<double>& scales,
                                 const std::vector<double>& thresholds);
void parse_thresholds(const std::string& bytes, std::vector<double>& scales,
                      std::vector<double>& thresholds);

std::string serialize_coi(const std::vector<Date>& dates, const std::vector<double>& coi);
void parse_coi(const std::string& bytes, std::vector<Date>& dates, std::vector<double>& coi);

}  // namespace cwts
