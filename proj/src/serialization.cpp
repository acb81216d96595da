#include "polyrank/serialization.hpp"

#include <fstream>
#include <sstream>

namespace polyrank {

using nlohmann::json;

json toJson(const MatrixPolynomial& p) {
  json coeffs = json::array();
  for (int i = 0; i <= p.grade(); ++i) {
    const ComplexMatrix& A = p.coeff(i);
    json rows = json::array();
    for (Eigen::Index r = 0; r < A.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < A.cols(); ++c)
        row.push_back(json::array({A(r, c).real(), A(r, c).imag()}));
      rows.push_back(std::move(row));
    }
    coeffs.push_back(std::move(rows));
  }
  return json{{"m", p.rows()}, {"n", p.cols()}, {"grade", p.grade()}, {"coeffs", std::move(coeffs)}};
}

namespace {

int requiredInt(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string("polynomial JSON: missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

Complex entryFromJson(const json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
    throw ParseError("polynomial JSON: entries must be [re, im] pairs");
  return Complex(e[0].get<double>(), e[1].get<double>());
}

}  // namespace

MatrixPolynomial polynomialFromJson(const json& j) {
  if (!j.is_object()) throw ParseError("polynomial JSON: expected an object");
  const int m = requiredInt(j, "m");
  const int n = requiredInt(j, "n");
  const int grade = requiredInt(j, "grade");
  if (m < 1 || n < 1 || grade < 0) throw ParseError("polynomial JSON: bad dimensions");
  if (!j.contains("coeffs") || !j["coeffs"].is_array() ||
      j["coeffs"].size() != static_cast<std::size_t>(grade) + 1)
    throw ParseError("polynomial JSON: \"coeffs\" must hold grade+1 matrices");
  std::vector<ComplexMatrix> coeffs;
  coeffs.reserve(static_cast<std::size_t>(grade) + 1);
  for (const auto& cm : j["coeffs"]) {
    if (!cm.is_array() || cm.size() != static_cast<std::size_t>(m))
      throw ParseError("polynomial JSON: coefficient row count mismatch");
    ComplexMatrix A(m, n);
    for (int r = 0; r < m; ++r) {
      const auto& row = cm[static_cast<std::size_t>(r)];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
        throw ParseError("polynomial JSON: coefficient column count mismatch");
      for (int c = 0; c < n; ++c) A(r, c) = entryFromJson(row[static_cast<std::size_t>(c)]);
    }
    coeffs.push_back(std::move(A));
  }
  return MatrixPolynomial(m, n, grade, std::move(coeffs));
}

json toJson(const StructureSignature& sig) {
  StructureSignature s = sig;
  s.canonicalize();
  json finite = json::array();
  for (const auto& fe : s.finiteStructure)
    finite.push_back(json{{"eig", json::array({fe.value.real(), fe.value.imag()})},
                          {"mults", fe.multiplicities}});
  return json{{"rank", s.rank},
              {"right", s.rightMinimalIndices},
              {"left", s.leftMinimalIndices},
              {"finite", std::move(finite)},
              {"infinite", s.infiniteMultiplicities}};
}

StructureSignature signatureFromJson(const json& j) {
  if (!j.is_object()) throw ParseError("signature JSON: expected an object");
  StructureSignature sig;
  sig.rank = requiredInt(j, "rank");
  try {
    sig.rightMinimalIndices = j.at("right").get<IndexList>();
    sig.leftMinimalIndices = j.at("left").get<IndexList>();
    sig.infiniteMultiplicities = j.at("infinite").get<IndexList>();
    for (const auto& fe : j.at("finite")) {
      FiniteEigenvalue f;
      f.value = entryFromJson(fe.at("eig"));
      f.multiplicities = fe.at("mults").get<IndexList>();
      sig.finiteStructure.push_back(std::move(f));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("signature JSON: ") + e.what());
  }
  sig.canonicalize();
  return sig;
}

json toJson(const GenericStructure& K) {
  json j = toJson(K.signature);
  j["a"] = K.a;
  j["alpha"] = K.alpha;
  j["s"] = K.s;
  j["beta"] = K.beta;
  j["t"] = K.t;
  j["codim"] = K.codim;
  return j;
}

json toJson(const FullRankStructure& K) {
  json j = toJson(K.signature);
  j["full_rank"] = true;
  if (K.squareRegular) {
    j["regular"] = true;
    j["simple_eigenvalues"] = K.n * K.d;
  }
  return j;
}

MatrixPolynomial readPolynomialFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("cannot parse JSON from " + path + ": " + e.what());
  }
  return polynomialFromJson(j);
}

void writeTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
}

}  // namespace polyrank
