#include "doctest.h"
#include "spinspec/io.hpp"

#include <fstream>
#include <sstream>

using namespace spinspec;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exact value serialization forms") {
  CHECK(dump(to_json(HalfInt::from_twice(29))) == "{\n  \"two\": 29\n}\n");
  CHECK(to_json(Rational(-3, 4)) == json("-3/4"));
  json s = to_json(Surd(Rational(1, 2), 8));  // normalizes to sqrt(2)
  CHECK(s["q"] == "1");
  CHECK(s["rad"] == 2);
  CHECK(rep_from_json(to_json(RepLabel::from_twice(30, 29))) == RepLabel::from_twice(30, 29));
  CHECK(surd_from_json(to_json(Surd(Rational(2, 3), 5))) == Surd(Rational(2, 3), 5));
}

TEST_CASE("coefficient parsing") {
  CHECK(parse_coefficient("2") == Surd(Rational(2)));
  CHECK(parse_coefficient("-1/3") == Surd(Rational(-1, 3)));
  CHECK(parse_coefficient("sqrt(2)") == Surd::sqrt_of(2));
  CHECK(parse_coefficient("1/2*sqrt(12)") == Surd(Rational(1), 3));
  CHECK_THROWS(parse_coefficient("x"));
}

TEST_CASE("spectrum report round-trip") {
  LambdaMatrix lam = build_lambda(RepLabel::from_twice(3, 0), 1, CoefficientSet{});
  SpectrumReport rep = classify(lam);
  SpectrumReport back = spectrum_from_json(to_json(rep));
  CHECK(to_json(back) == to_json(rep));
  CHECK(back.charpoly == rep.charpoly);
  CHECK(back.classification == rep.classification);
}

TEST_CASE("census round-trip and csv row count") {
  CensusReport c = proton_census();
  CensusReport back = census_from_json(to_json(c));
  CHECK(to_json(back) == to_json(c));
  std::string csv = census_csv(c);
  std::size_t rows = 0;
  for (char ch : csv) rows += (ch == '\n') ? 1 : 0;
  CHECK(rows == 330);  // header + 329 eigenvalue rows
}

TEST_CASE("matter table csv has the fixed column order") {
  auto rows = matter_table(HalfInt::whole(1), Rational(1));
  std::string csv = matter_table_csv(rows);
  CHECK(csv.rfind("two_l,two_ldot,degree,spin,mass_num,mass_den,cell\n", 0) == 0);
  CHECK(csv.find("1,1,4,0,1,1,1\n") != std::string::npos);
}

TEST_CASE("matrix market export") {
  auto dir = std::filesystem::temp_directory_path() / "spinspec_io_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "lambda.mtx";
  LambdaMatrix lam = build_lambda(RepLabel::from_twice(2, 0), 1, CoefficientSet{});
  write_matrix_market(lam.entries, path);

  std::string text = slurp(path);
  CHECK(text.rfind("%%MatrixMarket matrix coordinate complex general\n3 3 4\n", 0) == 0);
  // 4 non-zeros for the (1,0) j=1 tridiagonal plus sidecar with exact entries.
  json sidecar = json::parse(slurp(path.string() + ".exact.json"));
  CHECK(sidecar["dim"] == 3);
  CHECK(sidecar["entries"].size() == 4);

  std::string again = slurp(path);
  write_matrix_market(lam.entries, path);
  CHECK(slurp(path) == again);
  std::filesystem::remove_all(dir);
}

TEST_CASE("config precedence") {
  auto dir = std::filesystem::temp_directory_path() / "spinspec_cfg_test";
  std::filesystem::create_directories(dir);
  auto file = dir / "cfg.json";
  write_text(file, "{\"default_coefficient\":\"sqrt(2)\",\"snap_tol\":1e-6,\"format\":\"csv\"}\n");
  Config cfg = load_config(file);
  CHECK(cfg.default_coefficient == Surd::sqrt_of(2));
  CHECK(cfg.snap_tol == 1e-6);
  CHECK(cfg.format == OutputFormat::csv);
  CHECK(cfg.hsf_tol == 1e-12);  // untouched default
  std::filesystem::remove_all(dir);
  CHECK_THROWS(load_config(dir / "missing.json"));
}

TEST_CASE("system manifest lists links and masses") {
  RweSystem sys = assemble_system(chain(RepLabel::from_twice(0, 3)), Rational(1), CoefficientSet{});
  json m = system_manifest(sys, "quad");
  CHECK(m["links"].size() == 4);
  CHECK(m["links"][0]["mass"] == "1");
  CHECK(m["links"][1]["mass"] == "3/2");
  CHECK(m["links"][0]["sign_pattern"] == "+i");
  CHECK(m["links"][3]["sign_pattern"] == "-i");
  CHECK(m["links"][2]["matrix_files"].size() == 3);
}
