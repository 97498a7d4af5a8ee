#include "htrans/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace htrans {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = line.find(sep, start);
    if (end == std::string::npos) {
      parts.push_back(line.substr(start));
      return parts;
    }
    parts.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  while (begin < end && *begin == ' ') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc())
    throw std::runtime_error("read_table: malformed number '" + s + "'");
  return v;
}

SampleTable read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_table: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> header = split(line, ',');
  if (header.size() < 4 || header.front() != "index" ||
      header[header.size() - 2] != "re" || header.back() != "im")
    throw std::runtime_error("read_table: expected header index,node...,re,im");
  const std::size_t axes = header.size() - 3;

  SampleTable table;
  std::vector<std::vector<double>> nodes(axes);
  std::vector<std::complex<double>> values;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split(line, ',');
    if (cells.size() != header.size())
      throw std::runtime_error("read_table: row with wrong column count: " + line);
    for (std::size_t a = 0; a < axes; ++a) nodes[a].push_back(parse_double(cells[1 + a]));
    values.emplace_back(parse_double(cells[axes + 1]), parse_double(cells[axes + 2]));
  }
  table.node_columns.resize(axes);
  for (std::size_t a = 0; a < axes; ++a)
    table.node_columns[a] =
        Eigen::Map<const Eigen::VectorXd>(nodes[a].data(), static_cast<long>(nodes[a].size()));
  table.values = Eigen::Map<const SampleVector>(values.data(), static_cast<long>(values.size()));
  return table;
}

SampleTable read_json(std::istream& in) {
  nlohmann::json j;
  in >> j;
  SampleTable table;
  table.kind = j.value("kind", std::string{});
  const auto to_vec = [](const nlohmann::json& arr) {
    Eigen::VectorXd v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) v(static_cast<long>(i)) = arr[i].get<double>();
    return v;
  };
  if (j.contains("order")) {
    if (j["order"].is_array())
      for (const auto& o : j["order"]) table.orders.push_back(o.get<int>());
    else
      table.orders.push_back(j["order"].get<int>());
  }
  if (j.contains("nodes")) {
    const auto& nodes = j["nodes"];
    if (!nodes.empty() && nodes[0].is_array())
      for (const auto& col : nodes) table.node_columns.push_back(to_vec(col));
    else
      table.node_columns.push_back(to_vec(nodes));
  }
  const Eigen::VectorXd re = to_vec(j.at("re"));
  const Eigen::VectorXd im = to_vec(j.at("im"));
  if (re.size() != im.size())
    throw std::runtime_error("read_table: re/im length mismatch");
  table.values.resize(re.size());
  table.values.real() = re;
  table.values.imag() = im;
  return table;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_table(std::ostream& out, const SampleTable& table, OutputFormat format) {
  const long p = table.values.size();
  const std::size_t axes = table.node_columns.size();
  for (const auto& col : table.node_columns)
    if (col.size() != p)
      throw std::invalid_argument("write_table: node column length mismatch");

  if (format == OutputFormat::Csv) {
    out << "index";
    if (axes == 1)
      out << ",node";
    else
      for (std::size_t a = 0; a < axes; ++a) out << ",node" << (a + 1);
    out << ",re,im\n";
    for (long r = 0; r < p; ++r) {
      out << (r + 1);
      for (std::size_t a = 0; a < axes; ++a) out << ',' << format_double(table.node_columns[a](r));
      out << ',' << format_double(table.values(r).real()) << ','
          << format_double(table.values(r).imag()) << '\n';
    }
    return;
  }

  nlohmann::json j;
  j["kind"] = table.kind;
  const auto col_json = [](const Eigen::VectorXd& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (long i = 0; i < v.size(); ++i) arr.push_back(v(i));
    return arr;
  };
  if (table.orders.size() == 1)
    j["order"] = table.orders.front();
  else
    j["order"] = table.orders;
  if (axes == 1) {
    j["nodes"] = col_json(table.node_columns.front());
  } else {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& col : table.node_columns) nodes.push_back(col_json(col));
    j["nodes"] = nodes;
  }
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  for (long r = 0; r < p; ++r) {
    re.push_back(table.values(r).real());
    im.push_back(table.values(r).imag());
  }
  j["re"] = re;
  j["im"] = im;
  out << j.dump(2) << '\n';
}

SampleTable read_table(std::istream& in) {
  // peek past whitespace for the JSON opener
  int c = in.peek();
  while (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
    in.get();
    c = in.peek();
  }
  if (c == '{') return read_json(in);
  return read_csv(in);
}

}  // namespace htrans
