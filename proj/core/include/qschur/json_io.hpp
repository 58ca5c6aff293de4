#pragma once

#include <nlohmann/json.hpp>

#include "qschur/hall.hpp"
#include "qschur/matrix_index.hpp"
#include "qschur/poly.hpp"
#include "qschur/quivermod.hpp"
#include "qschur/schur.hpp"

namespace qschur {

/// Insertion-ordered JSON keeps every emitted document byte-stable.
using Json = nlohmann::ordered_json;

/// Polynomial: array of coefficients in ascending degree as decimal
/// strings (exact at any size); the zero polynomial is [].
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

/// Matrix: array of rows of naturals.
Json to_json(const MatrixIndex& a);
MatrixIndex matrix_from_json(const Json& j);

/// Schur element: array of {"matrix": ..., "coeff": ...} term objects,
/// ordered by matrix.
Json to_json(const SchurElement& x);
SchurElement schur_element_from_json(const Json& j);

/// Multisegment: {"n": ..., "segments": [[i, j, multiplicity], ...]}.
Json to_json(const Multisegment& m);
Multisegment multisegment_from_json(const Json& j);
/// Builds from a bare triple list when n comes from elsewhere.
Multisegment multisegment_from_triples(int n, const Json& triples);

/// Hall element: array of {"multisegment": ..., "coeff": ...} pairs.
Json to_json(const HallElement& h);

/// Reads a whole file as parsed JSON; throws PreconditionViolated when the
/// file cannot be read or parsed.
Json read_json_file(const std::string& path);
/// Writes atomically: to a sibling temporary file, then rename.
void write_json_file(const std::string& path, const Json& doc);

}  // namespace qschur
