#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "htrans/hermite.hpp"

namespace htrans {

enum class OutputFormat { Csv, Json };

// One dataset: flat sample values with their per-axis node coordinates, in
// the axis-0-fastest flat ordering. kind is "zeros", "time", "frequency" or
// "space".
struct SampleTable {
  std::string kind;
  std::vector<int> orders;
  std::vector<Eigen::VectorXd> node_columns;  // one per axis, each length P
  SampleVector values;
};

// CSV: header `index,node,re,im` (one axis) or `index,node1,...,noden,re,im`;
// 1-based flat index; floats with 17 significant digits so doubles
// round-trip losslessly. JSON mirrors it: {kind, order, nodes, re, im} with
// order/nodes scalars-and-flat for one axis, arrays-of-arrays otherwise.
void write_table(std::ostream& out, const SampleTable& table, OutputFormat format);

// Auto-detects JSON (leading '{') vs CSV. CSV carries no order metadata;
// callers validate node columns against their own grid.
SampleTable read_table(std::istream& in);

std::string format_double(double v);

}  // namespace htrans
