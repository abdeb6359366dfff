#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "ddbar/bicomplex.hpp"
#include "ddbar/cohomology.hpp"
#include "ddbar/hodge.hpp"
#include "ddbar/lie_model.hpp"

namespace ddbar::io {

using nlohmann::json;

// Scalars serialize as {"re": "a/b", "im": "c/d"}, rationals as "a/b" or "a"
// strings; an omitted part means 0.
GaussianRational scalar_from_json(const json& j);
json scalar_to_json(const GaussianRational& z);

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);
json matrix_to_json(const Matrix& m);

/// Bicomplex document: p_max, q_max, dims [{p,q,dim}], del/delbar
/// [{p,q,matrix}] with unspecified blocks zero, optional conj, optional n.
Bicomplex bicomplex_from_json(const json& j);
json bicomplex_to_json(const Bicomplex& x);

/// Model document: name?, n, dphi (array of term lists), gram blocks?.
struct ModelFile {
    StructureEquations equations;
    MetricData metric;
};
ModelFile model_from_json(const json& j);
json model_to_json(const StructureEquations& s);

json report_to_json(const CohomologyReport& rep);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

/// True when the document looks like a model file (has "dphi").
bool is_model_document(const json& j);

}  // namespace ddbar::io
