#include "json_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mukai/errors.hpp"

namespace mukai::cli {

json integer_to_json(const Integer& z) {
  if (mpz_fits_slong_p(z.get_mpz_t()) != 0) return json(static_cast<long>(z.get_si()));
  return json(z.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0)
      throw InputError("not an integer: \"" + j.get<std::string>() + "\"");
    return z;
  }
  throw InputError("expected an integer, got " + j.dump());
}

IntMatrix matrix_from_json(const json& j) {
  const json& rows = j.is_object() ? j.at("matrix") : j;
  if (!rows.is_array() || rows.empty()) throw InputError("matrix must be a non-empty array of rows");
  std::vector<IntVector> out;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InputError("matrix row must be an array");
    IntVector r;
    for (const auto& x : row) r.push_back(integer_from_json(x));
    out.push_back(std::move(r));
  }
  return IntMatrix::from_rows(out);
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

K3LatticeModel model_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ns_gram")) throw InputError("lattice JSON needs \"ns_gram\"");
  IntMatrix gram = matrix_from_json(j.at("ns_gram"));
  if (j.contains("picard_rank")) {
    const auto rho = integer_from_json(j.at("picard_rank"));
    if (rho != static_cast<long>(gram.rows()))
      throw InputError("picard_rank " + rho.get_str() + " does not match ns_gram size " +
                       std::to_string(gram.rows()));
  }
  return K3LatticeModel(std::move(gram));
}

json model_to_json(const K3LatticeModel& model) {
  return {{"picard_rank", model.picard_rank()}, {"ns_gram", matrix_to_json(model.ns_gram())}};
}

MukaiVector vector_from_json(const json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("c") || !j.contains("m"))
    throw InputError("Mukai vector JSON needs \"r\", \"c\" and \"m\"");
  MukaiVector v;
  v.r = integer_from_json(j.at("r"));
  v.m = integer_from_json(j.at("m"));
  const json& c = j.at("c");
  if (c.is_array()) {
    for (const auto& x : c) v.c.push_back(integer_from_json(x));
  } else {
    v.c.push_back(integer_from_json(c));
  }
  return v;
}

json vector_to_json(const MukaiVector& v) {
  json c = json::array();
  for (const auto& x : v.c) c.push_back(integer_to_json(x));
  return {{"r", integer_to_json(v.r)}, {"c", std::move(c)}, {"m", integer_to_json(v.m)}};
}

json isometry_to_json(const IntMatrix& m, const std::string& label, std::size_t picard_rank) {
  return {{"matrix", matrix_to_json(m)}, {"label", label}, {"picard_rank", picard_rank}};
}

json isometry_to_json(const Isometry& a) {
  return isometry_to_json(a.matrix(), a.label(), a.model().picard_rank());
}

json char_poly_to_json(const CharPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(integer_to_json(c));
  return {{"coeffs", std::move(coeffs)}};
}

CharPoly char_poly_from_json(const json& j) {
  IntVector coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(integer_from_json(c));
  return CharPoly(std::move(coeffs));
}

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 12);
  return {buf.data(), res.ptr};
}

namespace {

double round_to_12(double x) {
  const std::string s = format_double(x);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

}  // namespace

json radius_to_json(const CertifiedRadius& r) {
  return {{"value", round_to_12(r.value)}, {"lo", to_string(r.lo)}, {"hi", to_string(r.hi)}};
}

CertifiedRadius radius_from_json(const json& j) {
  CertifiedRadius r;
  r.value = j.at("value").get<double>();
  r.lo = rational_from_string(j.at("lo").get<std::string>());
  r.hi = rational_from_string(j.at("hi").get<std::string>());
  r.tolerance = Rational(r.hi - r.lo).get_d();
  return r;
}

Rational rational_from_string(const std::string& text) {
  auto fail = [&]() -> Rational { throw InputError("not a rational number: \"" + text + "\""); };
  if (text.empty()) return fail();
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    Integer num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0 || den.set_str(text.substr(slash + 1), 10) != 0 ||
        den == 0)
      return fail();
    return make_rational(num, den);
  }
  std::string digits;
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  long frac_digits = -1;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch == '.' && frac_digits < 0) {
      frac_digits = 0;
    } else if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      if (frac_digits >= 0) ++frac_digits;
    } else {
      return fail();
    }
  }
  if (digits.empty()) return fail();
  Integer num(digits, 10);
  Integer den = 1;
  if (frac_digits > 0) mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac_digits));
  if (negative) num = -num;
  return make_rational(num, den);
}

SearchReport make_search_report(const K3LatticeModel& model, const MukaiVector& v) {
  SearchReport r;
  r.v = v;
  r.v_squared = square(model, v);
  r.twice_square = 2 * r.v_squared;
  r.is_square = is_perfect_square(r.twice_square);
  return r;
}

json search_report_to_json(const SearchReport& r) {
  return {{"v", vector_to_json(r.v)},
          {"v_squared", integer_to_json(r.v_squared)},
          {"twice_square", integer_to_json(r.twice_square)},
          {"is_square", r.is_square}};
}

SearchReport search_report_from_json(const json& j) {
  SearchReport r;
  r.v = vector_from_json(j.at("v"));
  r.v_squared = integer_from_json(j.at("v_squared"));
  r.twice_square = integer_from_json(j.at("twice_square"));
  r.is_square = j.at("is_square").get<bool>();
  return r;
}

json load_json_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
      return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw InputError("cannot open \"" + arg + "\"");
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("invalid JSON in \"" + arg + "\": " + e.what());
  }
}

}  // namespace mukai::cli
