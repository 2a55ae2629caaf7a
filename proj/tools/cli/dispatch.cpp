#include "dispatch.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "json_io.hpp"
#include "mukai/entropy.hpp"
#include "mukai/errors.hpp"

namespace mukai::cli {

namespace {

constexpr long kMaxGridPoints = 10'000'000;

std::string usage() {
  return "usage: mukai <subcommand> [options]\n"
         "subcommands:\n"
         "  lattice-check <gram.json>\n"
         "  pair --lattice F --v V --w W\n"
         "  twist --lattice F --s S\n"
         "  phi-h --d D [--full --lattice F]\n"
         "  char-poly --matrix M.json\n"
         "  spectral-radius --matrix M.json [--tol T]\n"
         "  gy-gap --d-min A --d-max B\n"
         "  entropy-curve --spherical-dim D --complement {yes|no|unknown} --t-min A --t-max B --step S\n"
         "  ext-recursion --d D --i I --k K --n-max N\n"
         "  complement-search --lattice F --s S [--bound B]\n"
         "exit codes: 0 ok, 2 input/invariant violation, 3 certification failure, 4 search exhausted\n";
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

bool wants_csv(const RunConfig& c) { return c.format != OutputFormat::kJson; }

void reject_csv(const RunConfig& c) {
  if (c.format == OutputFormat::kCsv)
    throw InputError("subcommand " + c.subcommand + " only emits JSON");
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string("missing required option ") + flag);
}

K3LatticeModel load_model(const std::string& arg) { return model_from_json(load_json_argument(arg)); }

MukaiVector load_vector(const std::string& arg) { return vector_from_json(load_json_argument(arg)); }

int cmd_lattice_check(const RunConfig& c, std::ostream& out) {
  reject_csv(c);
  require(c.gram_path, "<gram.json>");
  const K3LatticeModel model = load_model(c.gram_path);
  const Signature ns = signature_of(model.ns_gram());
  const Signature full = signature_of(model.mukai_gram());
  if (full != Signature{2, static_cast<int>(model.picard_rank()), 0})
    throw InvarianceError("Mukai lattice signature is not (2, rho)");
  json j = model_to_json(model);
  j["ns_signature"] = {ns.n_plus, ns.n_minus, ns.n_zero};
  j["mukai_signature"] = {full.n_plus, full.n_minus, full.n_zero};
  j["valid"] = true;
  emit(out, j);
  return kOk;
}

int cmd_pair(const RunConfig& c, std::ostream& out) {
  reject_csv(c);
  require(c.lattice, "--lattice");
  require(c.v, "--v");
  require(c.w, "--w");
  const K3LatticeModel model = load_model(c.lattice);
  const MukaiVector v = load_vector(c.v);
  const MukaiVector w = load_vector(c.w);
  const Integer p = mukai_pairing(model, v, w);
  emit(out, {{"mukai_pairing", integer_to_json(p)}, {"euler_pairing", integer_to_json(-p)}});
  return kOk;
}

int cmd_twist(const RunConfig& c, std::ostream& out) {
  reject_csv(c);
  require(c.lattice, "--lattice");
  require(c.s, "--s");
  const K3LatticeModel model = load_model(c.lattice);
  emit(out, isometry_to_json(spherical_twist_action(model, load_vector(c.s))));
  return kOk;
}

int cmd_phi_h(const RunConfig& c, std::ostream& out) {
  reject_csv(c);
  if (c.full && c.lattice.empty()) throw InputError("--full needs --lattice");
  if (c.lattice.empty() && !c.d) throw InputError("phi-h needs --d or --lattice");
  const K3LatticeModel model = c.lattice.empty() ? K3LatticeModel::of_degree(*c.d) : load_model(c.lattice);
  if (c.d && model.ns_gram()(0, 0) != 2 * *c.d)
    throw InputError("--d " + std::to_string(*c.d) + " disagrees with H^2 = " +
                     model.ns_gram()(0, 0).get_str() + " of the lattice");
  const Isometry phi = phi_h_full(model);
  if (c.full) {
    emit(out, isometry_to_json(phi));
  } else {
    const auto basis = polarized_sublattice_basis(model);
    emit(out, isometry_to_json(restrict_to_sublattice(phi, basis), phi.label() + " | L_d",
                               model.picard_rank()));
  }
  return kOk;
}

int cmd_char_poly(const RunConfig& c, std::ostream& out) {
  reject_csv(c);
  require(c.matrix, "--matrix");
  emit(out, char_poly_to_json(char_poly(matrix_from_json(load_json_argument(c.matrix)))));
  return kOk;
}

int cmd_spectral_radius(const RunConfig& c, std::ostream& out) {
  reject_csv(c);
  require(c.matrix, "--matrix");
  const IntMatrix m = matrix_from_json(load_json_argument(c.matrix));
  emit(out, radius_to_json(spectral_radius(m, c.tolerance)));
  return kOk;
}

int cmd_gy_gap(const RunConfig& c, std::ostream& out) {
  if (c.d_min < 1 || c.d_max < c.d_min) throw InputError("need 1 <= d-min <= d-max");
  const std::size_t count = static_cast<std::size_t>(c.d_max - c.d_min + 1);
  std::vector<GromovYomdinGap> rows(count);
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, count / 64));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t idx = w; idx < count; idx += workers)
          rows[idx] = gy_gap(c.d_min + static_cast<long>(idx));
      });
  }
  bool certified = true;
  if (wants_csv(c)) {
    out << "d,log_d_plus_2,rho,log_rho,gap\n";
    for (const auto& r : rows) {
      out << r.d << ',' << format_double(r.lower_bound) << ',' << format_double(r.rho.to_double())
          << ',' << format_double(r.log_rho) << ',' << format_double(r.gap) << '\n';
      certified = certified && r.certified_positive;
    }
  } else {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"d", r.d},
                     {"log_d_plus_2", std::stod(format_double(r.lower_bound))},
                     {"rho", r.rho.to_string()},
                     {"log_rho", std::stod(format_double(r.log_rho))},
                     {"gap", std::stod(format_double(r.gap))},
                     {"certified", r.certified_positive}});
      certified = certified && r.certified_positive;
    }
    emit(out, arr);
  }
  return certified ? kOk : kCertificationFailure;
}

Complement parse_complement(const std::string& s) {
  if (s == "yes") return Complement::kNonempty;
  if (s == "no") return Complement::kEmpty;
  if (s == "unknown") return Complement::kUnknown;
  throw InputError("--complement must be yes, no or unknown");
}

int cmd_entropy_curve(const RunConfig& c, std::ostream& out) {
  const EntropyCurve curve = twist_entropy_curve(c.spherical_dim, parse_complement(c.complement));
  const Rational lo = rational_from_string(c.t_min);
  const Rational hi = rational_from_string(c.t_max);
  const Rational step = rational_from_string(c.step);
  if (step <= 0) throw InputError("--step must be positive");
  if (hi < lo) throw InputError("--t-max must not be below --t-min");
  const Rational span = (hi - lo) / step;
  const Integer last = span.get_num() / span.get_den();
  if (last >= kMaxGridPoints) throw InputError("grid has too many points");

  json arr = json::array();
  if (wants_csv(c)) out << "t,h_t,proven\n";
  for (long idx = 0; idx <= last.get_si(); ++idx) {
    const Rational t = lo + idx * step;
    const Rational h = curve.eval(t);
    const bool proven = curve.proven_at(t);
    if (wants_csv(c))
      out << to_string(t) << ',' << to_string(h) << ',' << (proven ? "proven" : "unproven") << '\n';
    else
      arr.push_back({{"t", to_string(t)}, {"h_t", to_string(h)}, {"proven", proven}});
  }
  if (!wants_csv(c)) emit(out, arr);
  return kOk;
}

int cmd_ext_recursion(const RunConfig& c, std::ostream& out) {
  if (!c.d) throw InputError("ext-recursion needs --d");
  const auto rows = ext_recursion_table(*c.d, c.i, c.k, c.n_max);
  if (wants_csv(c)) {
    out << "n,top_dim,paper_bound,chi\n";
    for (const auto& r : rows)
      out << r.n << ',' << r.top_dim.get_str() << ',' << r.paper_bound.get_str() << ','
          << r.chi.get_str() << '\n';
  } else {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"n", r.n},
                     {"top_degree", r.top_degree},
                     {"top_dim", integer_to_json(r.top_dim)},
                     {"paper_bound", integer_to_json(r.paper_bound)},
                     {"chi", integer_to_json(r.chi)}});
    emit(out, arr);
  }
  return kOk;
}

int cmd_complement_search(const RunConfig& c, std::ostream& out) {
  reject_csv(c);
  require(c.lattice, "--lattice");
  require(c.s, "--s");
  const K3LatticeModel model = load_model(c.lattice);
  const MukaiVector s = load_vector(c.s);
  const MukaiVector v = find_positive_orthogonal(model, s, c.bound);
  emit(out, search_report_to_json(make_search_report(model, v)));
  return kOk;
}

}  // namespace

double default_tolerance() {
  const char* env = std::getenv("MUKAI_ENTROPY_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  const std::string text(env);
  double tol = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), tol);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !(tol > 0.0))
    throw InputError("MUKAI_ENTROPY_TOL must be a positive number, got \"" + text + "\"");
  return tol;
}

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out,
                                    std::ostream& err, int& exit_code) {
  RunConfig c;
  c.tolerance = default_tolerance();

  CLI::App app{"Exact Mukai-lattice computations for K3 autoequivalences", "mukai"};
  app.require_subcommand(1);
  std::string format;
  long d_value = 0;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* lattice_check = app.add_subcommand("lattice-check", "validate an NS Gram matrix");
  lattice_check->add_option("gram", c.gram_path, "K3 lattice JSON")->required();

  auto* pair = app.add_subcommand("pair", "Mukai and Euler pairings of two vectors");
  pair->add_option("--lattice", c.lattice)->required();
  pair->add_option("--v", c.v)->required();
  pair->add_option("--w", c.w)->required();

  auto* twist = app.add_subcommand("twist", "isometry induced by a spherical twist");
  twist->add_option("--lattice", c.lattice)->required();
  twist->add_option("--s", c.s)->required();

  auto* phi_h = app.add_subcommand("phi-h", "isometry of T_O o (- (x) O(-H))");
  auto* d_opt = phi_h->add_option("--d", d_value, "H^2 = 2d");
  phi_h->add_flag("--full", c.full, "emit the action on the whole Mukai lattice");
  phi_h->add_option("--lattice", c.lattice);

  auto* cp = app.add_subcommand("char-poly", "exact characteristic polynomial");
  cp->add_option("--matrix", c.matrix)->required();

  auto* sr = app.add_subcommand("spectral-radius", "certified spectral radius");
  sr->add_option("--matrix", c.matrix)->required();
  sr->add_option("--tol", c.tolerance)->check(CLI::PositiveNumber);

  auto* gy = app.add_subcommand("gy-gap", "log(d+2) against log of the spectral radius");
  gy->add_option("--d-min", c.d_min)->required();
  gy->add_option("--d-max", c.d_max)->required();
  add_format(gy);

  auto* ec = app.add_subcommand("entropy-curve", "h_t of a spherical twist on a grid");
  ec->add_option("--spherical-dim", c.spherical_dim)->required();
  ec->add_option("--complement", c.complement)->check(CLI::IsMember({"yes", "no", "unknown"}));
  ec->add_option("--t-min", c.t_min);
  ec->add_option("--t-max", c.t_max);
  ec->add_option("--step", c.step);
  add_format(ec);

  auto* er = app.add_subcommand("ext-recursion", "top Ext dimensions along Phi^n");
  auto* er_d = er->add_option("--d", d_value)->required();
  er->add_option("--i", c.i);
  er->add_option("--k", c.k);
  er->add_option("--n-max", c.n_max);
  add_format(er);

  auto* cs = app.add_subcommand("complement-search", "positive class in s^perp with 2v^2 non-square");
  cs->add_option("--lattice", c.lattice)->required();
  cs->add_option("--s", c.s)->required();
  cs->add_option("--bound", c.bound);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << usage();
    exit_code = kOk;
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    exit_code = kOk;
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << usage();
    exit_code = kInputViolation;
    return std::nullopt;
  }

  c.subcommand = app.get_subcommands().front()->get_name();
  if (d_opt->count() > 0 || er_d->count() > 0) c.d = d_value;
  if (format == "json") c.format = OutputFormat::kJson;
  if (format == "csv") c.format = OutputFormat::kCsv;
  exit_code = kOk;
  return c;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string& s = config.subcommand;
    if (s == "lattice-check") return cmd_lattice_check(config, out);
    if (s == "pair") return cmd_pair(config, out);
    if (s == "twist") return cmd_twist(config, out);
    if (s == "phi-h") return cmd_phi_h(config, out);
    if (s == "char-poly") return cmd_char_poly(config, out);
    if (s == "spectral-radius") return cmd_spectral_radius(config, out);
    if (s == "gy-gap") return cmd_gy_gap(config, out);
    if (s == "entropy-curve") return cmd_entropy_curve(config, out);
    if (s == "ext-recursion") return cmd_ext_recursion(config, out);
    if (s == "complement-search") return cmd_complement_search(config, out);
    err << "error: unknown subcommand \"" << s << "\"\n" << usage();
    return kInputViolation;
  } catch (const CertificationError& e) {
    err << "certification failure: " << e.what() << '\n';
    return kCertificationFailure;
  } catch (const SearchExhaustedError& e) {
    err << "search exhausted: " << e.what() << '\n';
    return kSearchExhausted;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputViolation;
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return kInputViolation;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  int code = kOk;
  std::optional<RunConfig> config;
  try {
    config = parse_args(args, out, err, code);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputViolation;
  }
  if (!config) return code;
  return dispatch(*config, out, err);
}

}  // namespace mukai::cli
