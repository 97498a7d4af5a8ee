#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "htrans/io.hpp"
#include "oracle_helpers.hpp"

using namespace htrans;

namespace {

SampleTable sample_1d() {
  SampleTable t;
  t.kind = "time";
  t.orders = {3};
  Eigen::VectorXd nodes(3);
  nodes << -1.2247448713915892, 0.0, 1.2247448713915892;
  t.node_columns = {nodes};
  t.values.resize(3);
  t.values << std::complex<double>(0.1, -0.25), std::complex<double>(1.0 / 3.0, 0.0),
      std::complex<double>(-7e-17, 12.5);
  return t;
}

SampleTable sample_2d() {
  SampleTable t;
  t.kind = "frequency";
  t.orders = {2, 3};
  Eigen::VectorXd a(6), b(6);
  a << -0.7, 0.7, -0.7, 0.7, -0.7, 0.7;
  b << -1.2, -1.2, 0.0, 0.0, 1.2, 1.2;
  t.node_columns = {a, b};
  t.values = oracle::random_complex_vector(6, 5u);
  return t;
}

}  // namespace

TEST_CASE("format_double: 17 significant digits round-trip") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.0) == "-0");
  for (double v : {1.0 / 3.0, 2.5066282746310002, -7.125e-300, 3.0e21}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("csv write/read round-trips bit-exactly") {
  const SampleTable t = sample_1d();
  std::stringstream buf;
  write_table(buf, t, OutputFormat::Csv);

  const std::string text = buf.str();
  CHECK(text.rfind("index,node,re,im\n", 0) == 0);

  std::stringstream in(text);
  const SampleTable back = read_table(in);
  REQUIRE(back.values.size() == 3);
  REQUIRE(back.node_columns.size() == 1);
  for (int j = 0; j < 3; ++j) {
    CHECK(back.node_columns[0](j) == t.node_columns[0](j));
    CHECK(back.values(j) == t.values(j));
  }
}

TEST_CASE("json write/read round-trips bit-exactly") {
  for (const SampleTable& t : {sample_1d(), sample_2d()}) {
    std::stringstream buf;
    write_table(buf, t, OutputFormat::Json);
    std::stringstream in(buf.str());
    const SampleTable back = read_table(in);
    CHECK(back.kind == t.kind);
    CHECK(back.orders == t.orders);
    REQUIRE(back.node_columns.size() == t.node_columns.size());
    REQUIRE(back.values.size() == t.values.size());
    for (long j = 0; j < t.values.size(); ++j) {
      for (std::size_t a = 0; a < t.node_columns.size(); ++a)
        CHECK(back.node_columns[a](j) == t.node_columns[a](j));
      CHECK(back.values(j) == t.values(j));
    }
  }
}

TEST_CASE("multidimensional csv uses one node column per axis") {
  const SampleTable t = sample_2d();
  std::stringstream buf;
  write_table(buf, t, OutputFormat::Csv);
  const std::string text = buf.str();
  CHECK(text.rfind("index,node1,node2,re,im\n", 0) == 0);

  std::stringstream in(text);
  const SampleTable back = read_table(in);
  REQUIRE(back.node_columns.size() == 2);
  REQUIRE(back.values.size() == 6);
  for (long j = 0; j < 6; ++j) CHECK(back.values(j) == t.values(j));
}

TEST_CASE("writer output is deterministic") {
  const SampleTable t = sample_2d();
  for (OutputFormat f : {OutputFormat::Csv, OutputFormat::Json}) {
    std::stringstream one, two;
    write_table(one, t, f);
    write_table(two, t, f);
    CHECK(one.str() == two.str());
  }
}

TEST_CASE("reader rejects malformed input") {
  const auto fails = [](const std::string& text) {
    std::stringstream in(text);
    CHECK_THROWS_AS(read_table(in), std::runtime_error);
  };
  fails("");
  fails("wrong,header\n1,2\n");
  fails("index,node,re,im\n1,0.5,1.0\n");        // short row
  fails("index,node,re,im\n1,abc,1.0,2.0\n");    // bad number
}
