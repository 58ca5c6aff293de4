#include "qschur/json_io.hpp"

#include <cstdio>
#include <fstream>

#include "qschur/errors.hpp"

namespace qschur {

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const BigInt& c : p.coefficients()) out.push_back(c.str());
  return out;
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw PreconditionViolated("polynomial must be an array");
  std::vector<BigInt> coeffs;
  for (const Json& c : j) {
    if (c.is_string())
      coeffs.emplace_back(c.get<std::string>());
    else if (c.is_number_integer())
      coeffs.emplace_back(c.get<long long>());
    else
      throw PreconditionViolated("polynomial coefficient must be a string");
  }
  return IntPolynomial::from_coefficients(std::move(coeffs));
}

Json to_json(const MatrixIndex& a) {
  Json out = Json::array();
  for (int i = 1; i <= a.n(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= a.n(); ++j) row.push_back(a.at(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

MatrixIndex matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw PreconditionViolated("matrix must be a non-empty array of rows");
  const int n = static_cast<int>(j.size());
  MatrixIndex a(n);
  for (int i = 0; i < n; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw PreconditionViolated("matrix rows must all have length n");
    for (int k = 0; k < n; ++k) {
      if (!row[k].is_number_integer() || row[k].get<long long>() < 0)
        throw PreconditionViolated("matrix entries must be naturals");
      a.set(i + 1, k + 1, row[k].get<int>());
    }
  }
  return a;
}

Json to_json(const SchurElement& x) {
  Json out = Json::array();
  for (const auto& [a, c] : x.terms()) {
    Json term;
    term["matrix"] = to_json(a);
    term["coeff"] = to_json(c);
    out.push_back(std::move(term));
  }
  return out;
}

SchurElement schur_element_from_json(const Json& j) {
  if (!j.is_array()) throw PreconditionViolated("element must be an array");
  SchurElement x;
  for (const Json& term : j)
    x.add_term(matrix_from_json(term.at("matrix")),
               polynomial_from_json(term.at("coeff")));
  return x;
}

Json to_json(const Multisegment& m) {
  Json out;
  out["n"] = m.n();
  Json segs = Json::array();
  for (const auto& [i, j, mult] : m.segments())
    segs.push_back(Json::array({i, j, mult}));
  out["segments"] = std::move(segs);
  return out;
}

Multisegment multisegment_from_triples(int n, const Json& triples) {
  if (!triples.is_array())
    throw PreconditionViolated("segments must be an array of triples");
  Multisegment m(n);
  for (const Json& t : triples) {
    if (!t.is_array() || t.size() != 3)
      throw PreconditionViolated("each segment must be [i, j, multiplicity]");
    const int mult = t[2].get<int>();
    if (mult < 0) throw PreconditionViolated("multiplicity must be natural");
    m.add(t[0].get<int>(), t[1].get<int>(), mult);
  }
  return m;
}

Multisegment multisegment_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("segments"))
    throw PreconditionViolated("multisegment needs n and segments");
  return multisegment_from_triples(j.at("n").get<int>(), j.at("segments"));
}

Json to_json(const HallElement& h) {
  Json out = Json::array();
  for (const auto& [m, c] : h) {
    Json term;
    term["multisegment"] = to_json(m);
    term["coeff"] = to_json(c);
    out.push_back(std::move(term));
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionViolated("cannot read " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw PreconditionViolated(path + ": " + e.what());
  }
  return doc;
}

void write_json_file(const std::string& path, const Json& doc) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw PreconditionViolated("cannot write " + tmp);
    out << doc.dump(1, '\t') << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw PreconditionViolated("cannot rename " + tmp + " to " + path);
}

}  // namespace qschur
