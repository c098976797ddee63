// frieze-lab: command-line front end.
//
// Exit codes: 0 success, 2 input/validation error (a JSON error object is
// printed on stdout), 3 a checked criterion failed (the report is still
// printed).

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frieze_lab/frieze_lab.hpp"

using namespace frieze_lab;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kCriterion = 3;

struct Output {
  std::string path;  // empty: stdout

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text << std::flush;
      return;
    }
    const std::string tmp = path + ".tmp";
    {
      std::ofstream os(tmp, std::ios::binary);
      if (!os) fail(ErrorKind::InvalidArgument, "cannot write " + path);
      os << text;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) fail(ErrorKind::InvalidArgument, "cannot write " + path);
  }
  void write(const json& j) const { write(j.dump(2) + "\n"); }
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream is(path, std::ios::binary);
    if (!is) fail(ErrorKind::InvalidArgument, "cannot read " + path);
    ss << is.rdbuf();
  }
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
}

std::vector<Move> parse_moves(const std::string& text) {
  std::vector<Move> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "SE" || item == "se") {
      out.push_back(Move::SE);
    } else if (item == "SW" || item == "sw") {
      out.push_back(Move::SW);
    } else {
      fail(ErrorKind::InvalidArgument, "move must be SE or SW, got '" + item + "'");
    }
  }
  return out;
}

json moves_json(const std::vector<Move>& moves) {
  json a = json::array();
  for (Move m : moves) a.push_back(to_string(m));
  return a;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "expected an integer, got '" + item + "'");
    }
  }
  if (out.empty()) fail(ErrorKind::InvalidArgument, "empty list");
  return out;
}

// Vector fields on the circle: sums of terms "a*sinK", "a cosK", "sinK", or
// constants, e.g. "sin4+0.5cos2-0.25".
struct FieldTerm {
  double coef = 1.0;
  int kind = 0;  // 0 constant, 1 sin, 2 cos
  int freq = 0;
};

std::vector<FieldTerm> parse_field(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(ch);
  }
  if (s.empty()) fail(ErrorKind::InvalidArgument, "empty field expression");
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    const bool exponent = i > 0 && (s[i - 1] == 'e' || s[i - 1] == 'E') && i >= 2 && std::isdigit(s[i - 2]);
    if ((ch == '+' || ch == '-') && i > 0 && !exponent) {
      parts.push_back(cur);
      cur.clear();
    }
    cur.push_back(ch);
  }
  parts.push_back(cur);
  std::vector<FieldTerm> terms;
  for (std::string p : parts) {
    FieldTerm t;
    double sign = 1.0;
    if (!p.empty() && (p[0] == '+' || p[0] == '-')) {
      if (p[0] == '-') sign = -1.0;
      p.erase(0, 1);
    }
    auto pos = p.find_first_of("sc");
    std::string coef = pos == std::string::npos ? p : p.substr(0, pos);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    if (!coef.empty()) {
      std::size_t used = 0;
      try {
        t.coef = std::stod(coef, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != coef.size()) fail(ErrorKind::InvalidArgument, "bad coefficient in field term '" + p + "'");
    }
    t.coef *= sign;
    if (pos != std::string::npos) {
      std::string fn = p.substr(pos, 3);
      if (fn == "sin") {
        t.kind = 1;
      } else if (fn == "cos") {
        t.kind = 2;
      } else {
        fail(ErrorKind::InvalidArgument, "unknown function in field term '" + p + "'");
      }
      std::string freq = p.substr(pos + 3);
      std::size_t used = 0;
      try {
        t.freq = std::stoi(freq, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (freq.empty() || used != freq.size() || t.freq < 0) {
        fail(ErrorKind::InvalidArgument, "bad frequency in field term '" + p + "'");
      }
    } else if (coef.empty()) {
      fail(ErrorKind::InvalidArgument, "empty field term");
    }
    terms.push_back(t);
  }
  return terms;
}

SmoothFunction field_function(const std::vector<FieldTerm>& terms, double period) {
  for (const auto& t : terms) {
    // sin(k x) and cos(k x) are periodic with period T iff k T / (2 pi) is an integer.
    const double turns = t.freq * period / (2 * std::numbers::pi);
    if (t.kind != 0 && std::abs(turns - std::round(turns)) > 1e-9) {
      fail(ErrorKind::InvalidArgument, "field term with frequency " + std::to_string(t.freq) +
                                           " is not periodic with the curve's period");
    }
  }
  return SmoothFunction::from([terms](const Series& x) {
    Series acc(0.0);
    for (const auto& t : terms) {
      if (t.kind == 0) {
        acc += Series(t.coef);
      } else {
        auto sc = sincos(Series(static_cast<double>(t.freq)) * x);
        acc += Series(t.coef) * (t.kind == 1 ? sc[0] : sc[1]);
      }
    }
    return acc;
  });
}

struct CurveOptions {
  std::string family = "tan";
  double s = 0.0;
  double c = 0.5;
  double T = 0.0;  // 0: family default
};

ProjectiveCurve make_curve(const CurveOptions& o) {
  if (o.c == 0.0) fail(ErrorKind::InvalidArgument, "--c must be nonzero");
  if (o.family == "tan") {
    if (o.T != 0.0 && std::abs(o.T - std::numbers::pi) > 1e-12) {
      fail(ErrorKind::InvalidArgument, "the tan family has period pi");
    }
    auto curve = ProjectiveCurve::tan_family(o.s);
    check_admissible(curve);
    return curve;
  }
  if (o.family == "linear") {
    if (o.s != 0.0) fail(ErrorKind::InvalidArgument, "--s applies to the tan family only");
    return ProjectiveCurve::linear();
  }
  fail(ErrorKind::InvalidArgument, "unknown family '" + o.family + "' (tan or linear)");
}

void add_curve_options(CLI::App* app, CurveOptions& o) {
  app->add_option("--family", o.family, "Curve family: tan (f = tan(x + s sin 2x)) or linear (f = x)")
      ->capture_default_str();
  app->add_option("--s", o.s, "Deformation parameter of the tan family")->capture_default_str();
  app->add_option("--c", o.c, "Central constant c")->capture_default_str();
  app->add_option("--T", o.T, "Period (tan: pi; linear: length of the sampled interval, default 1)");
}

json curve_header(const CurveOptions& o) {
  return json{{"family", o.family}, {"s", o.s}, {"c", o.c}};
}

// ---------------------------------------------------------------------------
// frieze

json frieze_diagnostics(const FriezePattern<Rational>& F) {
  json d;
  d["width"] = F.width();
  d["period"] = F.period();
  const int bad = check_diamonds(F);
  d["diamonds_violated"] = bad;
  d["bounding_rows"] = check_rows(F);
  d["glide_symmetry"] = check_glide(F);
  bool period_ok = false;
  try {
    period_ok = check_period(F);
  } catch (const Error&) {
    period_ok = false;
  }
  d["horizontal_period"] = period_ok;
  auto eq = equation_of(F);
  auto M = monodromy(eq);
  d["monodromy"] = to_json(M);
  d["monodromy_is_minus_identity"] = is_closed(eq);
  bool remark = true;
  auto P = polygon_from_frieze(F);
  const auto& last = P.vertices.back();
  for (int i = 1; i <= F.width(); ++i) {
    if (bracket(last, P.vertices[static_cast<std::size_t>(i)]) != F.at(i, 0)) remark = false;
  }
  d["diagonal_brackets"] = remark;
  d["ok"] = bad == 0 && d["bounding_rows"].get<bool>() && d["glide_symmetry"].get<bool>() && period_ok &&
            d["monodromy_is_minus_identity"].get<bool>() && remark;
  return d;
}

FriezePattern<Rational> load_frieze(const std::string& input, const std::string& quiddity,
                                    const std::string& diagonal) {
  const int given = !input.empty() + !quiddity.empty() + !diagonal.empty();
  if (given != 1) fail(ErrorKind::InvalidArgument, "give exactly one of --input, --quiddity, --diagonal");
  if (!input.empty()) return frieze_from_json(parse_json(read_input(input)));
  if (!quiddity.empty()) return propagate_from_quiddity(parse_rational_list(quiddity));
  return diagonal_to_frieze(parse_rational_list(diagonal));
}

json zigzag_json(const ZigzagCoords<Rational>& z) {
  return json{{"start", z.path.start}, {"moves", moves_json(z.path.moves)}, {"values", rational_array(z.values)}};
}

// ---------------------------------------------------------------------------
// continuum

ContinuousFrieze curve_frieze(const ProjectiveCurve& curve) { return frieze_from_curve(lift_curve(curve)); }

double sample_length(const ProjectiveCurve& curve, double T) {
  if (curve.closed()) return curve.period;
  return T > 0 ? T : 1.0;
}

FriezeDomain curve_domain(const ProjectiveCurve& curve, double T) {
  if (curve.closed()) return FriezeDomain::periodic_strip(curve.period);
  const double L = sample_length(curve, T);
  return FriezeDomain::band(0.0, L, L / 4, 5 * L / 4);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frieze-lab: Coxeter friezes, cluster forms, continuous friezes and their continuum limit"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write the document to this file instead of stdout");

  // frieze --------------------------------------------------------------
  auto* frieze = app.add_subcommand("frieze", "Discrete friezes")->require_subcommand(1);

  std::string quiddity;
  auto* gen = frieze->add_subcommand("gen", "Quiddity -> frieze JSON");
  gen->add_option("--quiddity", quiddity, "Comma-separated rationals c_0..c_{n-1}")->required();

  std::string diagonal;
  int base = 0;
  auto* diag = frieze->add_subcommand("diag", "Diagonal coordinates -> frieze JSON");
  diag->add_option("--diagonal", diagonal, "Comma-separated nonzero rationals a_1..a_w")->required();
  diag->add_option("--base", base, "Column of the diagonal")->capture_default_str();

  std::string input;
  auto* check = frieze->add_subcommand("check", "Validate a frieze JSON document");
  check->add_option("--input", input, "File with a frieze document, or - for stdin")->required();

  int start = 0;
  std::string moves, values;
  int position = 0;
  auto* mutate = frieze->add_subcommand("mutate", "Elementary mutation of zigzag coordinates");
  mutate->add_option("--start", start, "Column of the row-1 entry")->capture_default_str();
  mutate->add_option("--moves", moves, "Comma-separated SE/SW moves (w - 1 of them)");
  mutate->add_option("--values", values, "Comma-separated coordinates a'_1..a'_w")->required();
  mutate->add_option("--position", position, "Entry to flip, 1-based")->required();

  std::string m_input, m_quiddity, m_diagonal;
  auto* moduli = frieze->add_subcommand("moduli", "Cross-ratio coordinates of the projected polygon");
  moduli->add_option("--input", m_input, "Frieze document file, or - for stdin");
  moduli->add_option("--quiddity", m_quiddity, "Quiddity");
  moduli->add_option("--diagonal", m_diagonal, "Diagonal");

  std::string o_diag, o_xi, o_eta, o_moves;
  int o_start = 0;
  auto* omega = frieze->add_subcommand("omega", "Evaluate the cluster 2-form");
  omega->add_option("--diagonal", o_diag, "Base point (zigzag values when --moves is given)")->required();
  omega->add_option("--xi", o_xi, "First tangent vector")->required();
  omega->add_option("--eta", o_eta, "Second tangent vector")->required();
  omega->add_option("--moves", o_moves, "Zigzag moves; evaluates the zigzag form instead");
  omega->add_option("--start", o_start, "Zigzag start column")->capture_default_str();

  // continuum -----------------------------------------------------------
  auto* continuum = app.add_subcommand("continuum", "Continuous friezes and Hill equations")->require_subcommand(1);
  CurveOptions co;
  int grid = 64;
  int steps = 0;
  std::string format = "json";
  std::string k_xi = "sin4+0.25cos2", k_eta = "cos6+0.5sin2";

  auto* hill = continuum->add_subcommand("hill", "Monodromy and non-oscillation of the Hill equation");
  add_curve_options(hill, co);
  hill->add_option("--steps", steps, "RK4 steps per period (default 4096 or FRIEZE_LAB_NODES)");

  auto* f2d = continuum->add_subcommand("frieze2d", "CSV grid of F(x, y) over one period");
  add_curve_options(f2d, co);
  f2d->add_option("--grid", grid, "Points per axis")->capture_default_str();

  auto* liou = continuum->add_subcommand("liouville", "Liouville residual, boundary conditions and potential");
  add_curve_options(liou, co);
  liou->add_option("--grid", grid, "Points per axis")->capture_default_str();

  auto* curv = continuum->add_subcommand("curvature", "Curvature of -4 F^-2 dx dy");
  add_curve_options(curv, co);
  curv->add_option("--grid", grid, "Points per axis")->capture_default_str();
  curv->add_option("--format", format, "json or csv (field dump)")->capture_default_str();
  double curv_h = 1e-4;
  curv->add_option("--step", curv_h, "Finite-difference step")->capture_default_str();

  auto* kir = continuum->add_subcommand("kirillov", "Kirillov form from fields and from the curve");
  add_curve_options(kir, co);
  kir->add_option("--xi", k_xi, "Vector field X")->capture_default_str();
  kir->add_option("--eta", k_eta, "Vector field Y")->capture_default_str();

  // limit ---------------------------------------------------------------
  auto* limit = app.add_subcommand("limit", "Discrete-to-continuum convergence")->require_subcommand(1);
  auto* study = limit->add_subcommand("study", "Convergence of the discrete cluster form");
  add_curve_options(study, co);
  std::string n_list = "100,200,400,800";
  study->add_option("--n", n_list, "Comma-separated sample counts")->capture_default_str();
  // Lower modes than the kirillov defaults: with cos 6x the form nearly cancels
  // and the relative error at n = 800 sits just above 1e-2.
  std::string s_xi = "sin2", s_eta = "cos4";
  study->add_option("--xi", s_xi, "Vector field X")->capture_default_str();
  study->add_option("--eta", s_eta, "Vector field Y")->capture_default_str();
  study->add_option("--format", format, "csv or json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_json(ErrorKind::InvalidArgument, e.what()).dump(2) << "\n";
    return kInvalid;
  }

  const Output out{output};
  const int nodes = steps > 0 ? steps : default_nodes();

  try {
    if (*gen) {
      out.write(to_json(propagate_from_quiddity(parse_rational_list(quiddity))));
      return kOk;
    }
    if (*diag) {
      out.write(to_json(diagonal_to_frieze(parse_rational_list(diagonal), base)));
      return kOk;
    }
    if (*check) {
      auto F = frieze_from_json(parse_json(read_input(input)));
      json d = frieze_diagnostics(F);
      out.write(d);
      return d["ok"].get<bool>() ? kOk : kCriterion;
    }
    if (*mutate) {
      ZigzagCoords<Rational> z{ZigzagPath{start, parse_moves(moves)}, parse_rational_list(values)};
      validate_path(z.path, z.width());
      auto F = zigzag_to_frieze(z);
      auto m = elementary_mutation(z, position - 1);
      auto G = zigzag_to_frieze(m);
      json j{{"input", zigzag_json(z)}, {"position", position}, {"output", zigzag_json(m)},
             {"same_frieze", F == G}};
      out.write(j);
      return kOk;
    }
    if (*moduli) {
      auto F = load_frieze(m_input, m_quiddity, m_diagonal);
      auto P = polygon_from_frieze(F);
      auto mp = cross_ratio_coordinates(P);
      json pts = json::array();
      for (const auto& v : mp.points) pts.push_back(json::array({v.x.str(), v.y.str()}));
      json j{{"n", P.n()}, {"points", pts}, {"cross_ratios", rational_array(mp.cross_ratios)},
             {"injective_chart", P.n() % 2 == 1}};
      out.write(j);
      return kOk;
    }
    if (*omega) {
      auto a = parse_rational_list(o_diag);
      auto xi = parse_rational_list(o_xi);
      auto eta = parse_rational_list(o_eta);
      json j{{"base", rational_array(a)}, {"xi", rational_array(xi)}, {"eta", rational_array(eta)}};
      if (!o_moves.empty()) {
        ZigzagCoords<Rational> z{ZigzagPath{o_start, parse_moves(o_moves)}, a};
        j["start"] = o_start;
        j["moves"] = moves_json(z.path.moves);
        j["value"] = omega_zigzag(z, xi, eta).str();
        // Rank is a property of the frieze; read it off the diagonal.
        j["rank"] = omega_rank(read_diagonal(zigzag_to_frieze(z)));
      } else {
        j["value"] = omega_diagonal(a, xi, eta).str();
        j["rank"] = omega_rank(a);
      }
      out.write(j);
      return kOk;
    }

    if (*hill) {
      auto curve = make_curve(co);
      const double T = sample_length(curve, co.T);
      auto pot = hill_potential(curve, co.c);
      auto sol = hill_solve(pot, T, 0.0, 1.0, nodes);
      json j = curve_header(co);
      j["T"] = T;
      j["steps"] = nodes;
      j["monodromy"] = to_json(sol.monodromy);
      j["monodromy_is_minus_identity"] = sol.antiperiodic(1e-6);
      try {
        auto rep = nonoscillation_report(pot, T, nodes);
        j["zero_counts"] = rep.zero_counts;
        j["nonoscillating"] = rep.nonoscillating;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::GridTooCoarse) throw;
        j["zero_counts"] = nullptr;
        j["nonoscillating"] = nullptr;
        j["warning"] = e.what();
      }
      out.write(j);
      return kOk;
    }
    if (*f2d) {
      auto curve = make_curve(co);
      if (grid < 2) fail(ErrorKind::InvalidArgument, "--grid must be at least 2");
      const double L = sample_length(curve, co.T);
      auto F = curve_frieze(curve);
      std::ostringstream ss;
      CsvWriter csv(ss);
      csv.row({"x", "y", "value"});
      for (int i = 0; i < grid; ++i) {
        for (int k = 0; k < grid; ++k) {
          const double x = L * i / grid, y = L * k / grid;
          csv.row({format_double(x), format_double(y), format_double(F.value(x, y))});
        }
      }
      out.write(ss.str());
      return kOk;
    }
    if (*liou) {
      auto curve = make_curve(co);
      if (grid < 32) fail(ErrorKind::InvalidArgument, "--grid must be at least 32");
      auto F = curve_frieze(curve);
      const double L = sample_length(curve, co.T);
      const double res = liouville_residual(F, curve_domain(curve, co.T), grid);
      auto b = boundary_check(F, curve.period);
      auto S = curve_schwarzian(curve);
      double spread = 0.0, mismatch = 0.0;
      for (int i = 0; i < grid; ++i) {
        const double x = L * (i + 0.5) / grid;
        auto ps = potential_from_frieze(F, x);
        spread = std::max(spread, ps.spread);
        mismatch = std::max(mismatch, std::abs(-2.0 * co.c * ps.kappa - co.c * S.value(x)));
      }
      json j = curve_header(co);
      j["grid"] = grid;
      j["liouville_residual"] = res;
      j["boundary"] = {{"diagonal", b.diagonal},
                       {"diagonal_dy", b.diagonal_dy},
                       {"diagonal_dx", b.diagonal_dx},
                       {"antiperiodic", json_double(b.antiperiodic)},
                       {"closed", b.closed}};
      j["potential_y_spread"] = spread;
      j["potential_vs_cS"] = mismatch;
      const bool ok = res < 1e-8 && b.worst() < 1e-8 && spread < 1e-6 && mismatch < 1e-6;
      j["ok"] = ok;
      out.write(j);
      return ok ? kOk : kCriterion;
    }
    if (*curv) {
      auto curve = make_curve(co);
      if (grid < 2) fail(ErrorKind::InvalidArgument, "--grid must be at least 2");
      if (format != "json" && format != "csv") fail(ErrorKind::InvalidArgument, "--format must be json or csv");
      auto F = curve_frieze(curve);
      if (!(curv_h > 0.0)) fail(ErrorKind::InvalidArgument, "--step must be positive");
      auto rep = curvature_conformal(F, curve_domain(curve, co.T), grid, curv_h);
      const bool ok = rep.max_deviation < 1e-4;
      if (format == "csv") {
        std::ostringstream ss;
        CsvWriter csv(ss);
        csv.row({"x", "y", "value"});
        for (const auto& p : rep.field) csv.row({format_double(p[0]), format_double(p[1]), format_double(p[2])});
        out.write(ss.str());
      } else {
        json j = curve_header(co);
        j["grid"] = grid;
        j["h"] = curv_h;
        j["max_abs_K_plus_1"] = rep.max_deviation;
        j["ok"] = ok;
        out.write(j);
      }
      return ok ? kOk : kCriterion;
    }
    if (*kir) {
      auto curve = make_curve(co);
      if (!curve.closed()) fail(ErrorKind::InvalidArgument, "the Kirillov form needs a closed family");
      auto X = field_function(parse_field(k_xi), curve.period);
      auto Y = field_function(parse_field(k_eta), curve.period);
      auto fields = kirillov_form_fields(hill_potential(curve, co.c), X, Y, curve.period, nodes);
      const double cur = kirillov_form_curve(curve, variation_from_field(curve, X), variation_from_field(curve, Y),
                                             co.c, nodes);
      json j = curve_header(co);
      j["xi"] = k_xi;
      j["eta"] = k_eta;
      j["nodes"] = nodes;
      j["fields_line1"] = fields.line1;
      j["fields_line2"] = fields.line2;
      j["curve"] = cur;
      j["curve_over_fields"] = fields.line1 != 0.0 ? json(cur / fields.line1) : json(nullptr);
      out.write(j);
      return kOk;
    }
    if (*study) {
      auto curve = make_curve(co);
      if (!curve.closed()) fail(ErrorKind::InvalidArgument, "the convergence study needs a closed family");
      if (format != "json" && format != "csv") fail(ErrorKind::InvalidArgument, "--format must be json or csv");
      auto ns = parse_int_list(n_list);
      for (int n : ns) {
        if (n < 8) fail(ErrorKind::InvalidArgument, "every n must be at least 8");
      }
      auto X = field_function(parse_field(s_xi), curve.period);
      auto Y = field_function(parse_field(s_eta), curve.period);
      auto rep = convergence_study(curve, X, Y, co.c, ns, nodes);
      if (!rep.warning.empty()) std::cerr << "warning: " << rep.warning << "\n";
      if (format == "csv") {
        std::ostringstream ss;
        CsvWriter csv(ss);
        csv.row({"n", "discrete", "integral", "kirillov_scaled", "err_integral", "err_kirillov", "observed_order"});
        for (const auto& r : rep.records) {
          csv.row({std::to_string(r.n), format_double(r.discrete), format_double(r.integral),
                   format_double(r.kirillov_scaled), format_double(r.err_integral), format_double(r.err_kirillov),
                   std::isfinite(r.observed_order) ? format_double(r.observed_order) : ""});
        }
        out.write(ss.str());
      } else {
        json recs = json::array();
        for (const auto& r : rep.records) {
          recs.push_back({{"n", r.n},
                          {"discrete", r.discrete},
                          {"integral", r.integral},
                          {"kirillov_scaled", r.kirillov_scaled},
                          {"err_integral", r.err_integral},
                          {"err_kirillov", r.err_kirillov},
                          {"observed_order", json_double(r.observed_order)},
                          {"boundary", r.boundary},
                          {"unimodularity_defect", r.unimodularity_defect}});
        }
        json j = curve_header(co);
        j["xi"] = s_xi;
        j["eta"] = s_eta;
        j["nodes"] = nodes;
        j["integral"] = rep.integral;
        j["kirillov_scaled"] = rep.kirillov_scaled;
        j["kirillov_fields"] = rep.kirillov_fields;
        j["claim"] = rep.claim;
        j["converged"] = rep.converged;
        j["warning"] = rep.warning.empty() ? json(nullptr) : json(rep.warning);
        j["records"] = recs;
        out.write(j);
      }
      return (!rep.claim || rep.converged) ? kOk : kCriterion;
    }
  } catch (const Error& e) {
    std::cout << error_json(e.kind(), e.what()).dump(2) << "\n";
    return kInvalid;
  }
  return kOk;
}
