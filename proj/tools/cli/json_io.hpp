#pragma once

#include <json.hpp>

#include <string>

#include "mukai/autoeq.hpp"
#include "mukai/lattice.hpp"
#include "mukai/spectral.hpp"
#include "mukai/wallcross.hpp"

namespace mukai::cli {

using json = nlohmann::json;

/// Integers are written as JSON numbers when they fit in int64 and as
/// decimal strings otherwise; both spellings are accepted on input.
json integer_to_json(const Integer& z);
Integer integer_from_json(const json& j);

IntMatrix matrix_from_json(const json& j);  // [[...]] or {"matrix": [[...]]}
json matrix_to_json(const IntMatrix& m);

K3LatticeModel model_from_json(const json& j);
json model_to_json(const K3LatticeModel& model);

MukaiVector vector_from_json(const json& j);
json vector_to_json(const MukaiVector& v);

json isometry_to_json(const Isometry& a);
json isometry_to_json(const IntMatrix& m, const std::string& label, std::size_t picard_rank);

json char_poly_to_json(const CharPoly& p);
CharPoly char_poly_from_json(const json& j);

json radius_to_json(const CertifiedRadius& r);
CertifiedRadius radius_from_json(const json& j);

Rational rational_from_string(const std::string& text);

struct SearchReport {
  MukaiVector v;
  Integer v_squared;
  Integer twice_square;
  bool is_square = false;
};
SearchReport make_search_report(const K3LatticeModel& model, const MukaiVector& v);
json search_report_to_json(const SearchReport& r);
SearchReport search_report_from_json(const json& j);

/// Inline JSON when the argument starts with '{' or '[', otherwise a path.
json load_json_argument(const std::string& arg);

/// Locale-independent shortest form with at most 12 significant digits.
std::string format_double(double x);

}  // namespace mukai::cli
