#include "spinspec/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace spinspec {

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json_fmt;
  if (s == "csv") return OutputFormat::csv;
  if (s == "matrixmarket" || s == "mtx") return OutputFormat::matrixmarket;
  throw std::domain_error("unknown output format '" + s + "'");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json_fmt: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::matrixmarket: return "matrixmarket";
  }
  return "?";
}

Surd parse_coefficient(const std::string& s) {
  auto star = s.find("*sqrt(");
  if (star != std::string::npos) {
    if (s.back() != ')') throw std::domain_error("malformed coefficient '" + s + "'");
    Rational q = Rational::parse(s.substr(0, star));
    std::int64_t rad = std::stoll(s.substr(star + 6, s.size() - star - 7));
    return Surd(q, rad);
  }
  if (s.rfind("sqrt(", 0) == 0 && s.back() == ')') {
    std::int64_t rad = std::stoll(s.substr(5, s.size() - 6));
    return Surd(Rational(1), rad);
  }
  return Surd(Rational::parse(s));
}

Config load_config(const std::optional<std::filesystem::path>& path) {
  Config cfg;
  std::filesystem::path p;
  if (const char* env = std::getenv("SPINSPEC_CONFIG"); env && *env) {
    p = env;
  } else if (path) {
    p = *path;
  } else {
    return cfg;
  }
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open config file " + p.string());
  json j = json::parse(in);
  if (j.contains("default_coefficient"))
    cfg.default_coefficient = parse_coefficient(j["default_coefficient"].get<std::string>());
  if (j.contains("snap_tol")) cfg.snap_tol = j["snap_tol"].get<double>();
  if (j.contains("hsf_tol")) cfg.hsf_tol = j["hsf_tol"].get<double>();
  if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();
  if (j.contains("format")) cfg.format = parse_format(j["format"].get<std::string>());
  if (!(cfg.snap_tol > 0.0) || !(cfg.hsf_tol > 0.0))
    throw std::domain_error("config tolerances must be positive");
  return cfg;
}

json to_json(const HalfInt& h) { return json{{"two", h.twice}}; }
json to_json(const Rational& r) { return json(r.to_string()); }
json to_json(const Surd& s) { return json{{"q", s.coeff().to_string()}, {"rad", s.radicand()}}; }
json to_json(const GaussSurd& g) {
  json j = to_json(g.magnitude_part());
  j["imag"] = g.is_imaginary();
  return j;
}
json to_json(const RepLabel& rep) {
  return json{{"two_l", rep.l.twice}, {"two_ldot", rep.ldot.twice}};
}

HalfInt halfint_from_json(const json& j) { return HalfInt::from_twice(j.at("two").get<std::int64_t>()); }
Rational rational_from_json(const json& j) { return Rational::parse(j.get<std::string>()); }
Surd surd_from_json(const json& j) {
  return Surd(Rational::parse(j.at("q").get<std::string>()), j.at("rad").get<std::int64_t>());
}
RepLabel rep_from_json(const json& j) {
  return RepLabel::from_twice(j.at("two_l").get<std::int64_t>(),
                              j.at("two_ldot").get<std::int64_t>());
}

json to_json(const SpectrumReport& r) {
  json prof = json::array();
  for (const auto& ec : r.profile)
    prof.push_back(json{{"eig", ec.eig.to_string()}, {"alg", ec.alg}, {"geom", ec.geom}});
  json cp = json::array();
  for (const auto& c : r.charpoly.coeffs()) cp.push_back(c.to_string());
  return json{{"rep", to_json(r.rep)},
              {"j", r.j},
              {"dual", r.dual},
              {"charpoly", cp},
              {"profile", prof},
              {"distinct", r.distinct_count},
              {"class", to_string(r.classification)}};
}

SpectrumReport spectrum_from_json(const json& j) {
  SpectrumReport r;
  r.rep = rep_from_json(j.at("rep"));
  r.j = j.at("j").get<int>();
  r.dual = j.at("dual").get<bool>();
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("charpoly")) coeffs.push_back(Rational::parse(c.get<std::string>()));
  r.charpoly = RationalPolynomial(std::move(coeffs));
  for (const auto& e : j.at("profile"))
    r.profile.push_back(EigenClass{Rational::parse(e.at("eig").get<std::string>()),
                                   e.at("alg").get<int>(), e.at("geom").get<int>()});
  r.distinct_count = j.at("distinct").get<int>();
  r.classification =
      j.at("class").get<std::string>() == "simple" ? SpectrumClass::simple : SpectrumClass::degenerate;
  return r;
}

json to_json(const CensusReport& r) {
  json hist = json::object();
  json classes = json::object();
  for (const auto& [mult, count] : r.multiplicity_histogram) hist[std::to_string(mult)] = count;
  for (const auto& [mult, eigs] : r.classes) {
    json arr = json::array();
    for (const auto& e : eigs) arr.push_back(e.to_string());
    classes[std::to_string(mult)] = arr;
  }
  return json{{"distinct", r.distinct_count},
              {"histogram", hist},
              {"classes", classes},
              {"sum", r.consistency_sum}};
}

CensusReport census_from_json(const json& j) {
  CensusReport r;
  r.distinct_count = j.at("distinct").get<int>();
  r.consistency_sum = j.at("sum").get<std::int64_t>();
  for (const auto& [k, v] : j.at("histogram").items())
    r.multiplicity_histogram[std::stoi(k)] = v.get<int>();
  for (const auto& [k, v] : j.at("classes").items()) {
    std::vector<Rational> eigs;
    for (const auto& e : v) eigs.push_back(Rational::parse(e.get<std::string>()));
    r.classes[std::stoi(k)] = std::move(eigs);
  }
  return r;
}

json to_json(const StabilityResult& r) {
  return json{{"rep", to_json(r.rep)},
              {"degree", r.degree},
              {"target_degree", r.target_degree},
              {"ratio", r.ratio_used},
              {"cell", r.cell},
              {"boundary_distance", r.boundary_distance.to_string()}};
}

json to_json(const std::vector<MatterRow>& rows) {
  json arr = json::array();
  for (const auto& row : rows)
    arr.push_back(json{{"rep", to_json(row.rep)},
                       {"spin", row.spin.to_string()},
                       {"degree", row.degree},
                       {"mass", row.mass.to_string()},
                       {"cell", row.cell}});
  return arr;
}

json rep_info_json(const RepLabel& rep, const Rational& mu0) {
  SubstrateDescriptor sub = substrate(rep);
  CellIndex ci = cell_index(rep);
  json spins = json::array();
  for (const auto& s : su2_restriction(rep)) spins.push_back(s.to_string());
  return json{{"rep", to_json(rep)},
              {"degree", rep.degree()},
              {"spin", rep.spin().to_string()},
              {"mass", mass(rep, mu0).to_string()},
              {"cell", ci.cell},
              {"boundary_distance", ci.boundary_distance.to_string()},
              {"substrate", json{{"k", sub.k},
                                 {"r", sub.r},
                                 {"spinspace_dim", sub.spinspace_dim},
                                 {"sym_dim", sub.sym_dim}}},
              {"su2_content", spins}};
}

json chain_json(const RepLabel& rep) {
  json links = json::array();
  for (const auto& link : chain(rep).links) links.push_back(to_json(link));
  return json{{"rep", to_json(rep)}, {"links", links}};
}

json system_manifest(const RweSystem& sys, const std::string& matrix_prefix) {
  json links = json::array();
  for (std::size_t k = 0; k < sys.links.size(); ++k) {
    const RweLink& link = sys.links[k];
    json files = json::array();
    for (int j = 1; j <= 3; ++j)
      files.push_back(matrix_prefix + "_link" + std::to_string(k) + "_j" + std::to_string(j) +
                      (link.dual_role ? "_dual" : "") + ".mtx");
    links.push_back(json{{"rep", to_json(link.rep)},
                         {"mass", link.link_mass.to_string()},
                         {"dual_role", link.dual_role},
                         {"sign_pattern", link.dual_role ? "+i" : "-i"},
                         {"matrix_files", files}});
  }
  return json{{"mu0", sys.mu0.to_string()}, {"links", links}};
}

std::string matter_table_csv(const std::vector<MatterRow>& rows) {
  std::string out = "two_l,two_ldot,degree,spin,mass_num,mass_den,cell\n";
  for (const auto& row : rows) {
    out += std::to_string(row.rep.l.twice) + "," + std::to_string(row.rep.ldot.twice) + "," +
           std::to_string(row.degree) + "," + row.spin.to_string() + "," + row.mass.num_str() +
           "," + row.mass.den_str() + "," + std::to_string(row.cell) + "\n";
  }
  return out;
}

std::string census_csv(const CensusReport& r) {
  std::string out = "eig,multiplicity\n";
  for (const auto& [mult, eigs] : r.classes)
    for (const auto& e : eigs) out += e.to_string() + "," + std::to_string(mult) + "\n";
  return out;
}

void write_matrix_market(const OperatorMatrix& m, const std::filesystem::path& path) {
  std::string body;
  int nnz = 0;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) {
      const GaussSurd& e = m.at(r, c);
      if (e.is_zero()) continue;
      char line[96];
      std::snprintf(line, sizeof line, "%d %d %.17g %.17g\n", r + 1, c + 1, e.real_part(),
                    e.imag_part());
      body += line;
      ++nnz;
    }
  std::string head = "%%MatrixMarket matrix coordinate complex general\n" +
                     std::to_string(m.dim()) + " " + std::to_string(m.dim()) + " " +
                     std::to_string(nnz) + "\n";
  write_text(path, head + body);

  json entries = json::array();
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) {
      const GaussSurd& e = m.at(r, c);
      if (e.is_zero()) continue;
      json je = to_json(e);
      je["row"] = r + 1;
      je["col"] = c + 1;
      entries.push_back(je);
    }
  json sidecar{{"dim", m.dim()}, {"entries", entries}};
  write_text(path.string() + ".exact.json", dump(sidecar));
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failure on " + path.string());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace spinspec
