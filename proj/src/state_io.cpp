#include "witbound/state_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace witbound {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error("state file '" + path + "': " + what);
}

int read_dim(const json& doc, const std::string& path, const char* key) {
  if (!doc.contains(key)) fail(path, std::string("missing field '") + key + "'");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) {
    fail(path, std::string("field '") + key + "' must be an integer");
  }
  return v.get<int>();
}

}  // namespace

DensityMatrix load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open for reading");

  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(path, "top level must be a JSON object");

  const int d1 = read_dim(doc, path, "d1");
  const int d2 = read_dim(doc, path, "d2");
  if (d1 < 2 || d2 < 2) fail(path, "local dimensions must both be at least 2");

  if (!doc.contains("matrix")) fail(path, "missing field 'matrix'");
  const json& m = doc.at("matrix");
  if (!m.is_array()) fail(path, "field 'matrix' must be an array");
  const std::size_t dim = static_cast<std::size_t>(d1) * d2;
  if (m.size() != dim * dim) {
    fail(path, "field 'matrix' must have " + std::to_string(dim * dim) +
                   " entries for d1*d2 = " + std::to_string(dim) + ", got " +
                   std::to_string(m.size()));
  }

  ComplexMatrix rho(dim, dim);
  for (std::size_t k = 0; k < m.size(); ++k) {
    const json& cell = m.at(k);
    if (!cell.is_array() || cell.size() != 2 || !cell.at(0).is_number() ||
        !cell.at(1).is_number()) {
      fail(path, "matrix entry " + std::to_string(k) +
                     " must be a [re, im] pair of numbers");
    }
    rho(static_cast<Eigen::Index>(k / dim), static_cast<Eigen::Index>(k % dim)) =
        Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
  }

  return make_density(d1, d2, std::move(rho));
}

void save_state_file(const std::string& path, const DensityMatrix& rho) {
  const Eigen::Index dim = rho.rho.rows();
  json m = json::array();
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const Complex v = rho.rho(r, c);
      m.push_back(json::array({v.real(), v.imag()}));
    }
  }
  json doc;
  doc["d1"] = rho.d1;
  doc["d2"] = rho.d2;
  doc["matrix"] = std::move(m);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("state file '" + path + "': cannot open for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("state file '" + path + "': write failed");
}

}  // namespace witbound
