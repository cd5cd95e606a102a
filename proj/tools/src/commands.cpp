#include "commands.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "document.hpp"
#include "toric_dmod/charvar.hpp"
#include "toric_dmod/dmod.hpp"
#include "toric_dmod/error.hpp"
#include "toric_dmod/fan_cox.hpp"

namespace toric::cli {

namespace {

IntVector parse_int_list(const std::string& text, const std::string& what) {
  std::string s = text;
  std::replace_if(s.begin(), s.end(), [](char c) { return c == ',' || c == '[' || c == ']' || c == '(' || c == ')'; }, ' ');
  std::istringstream in(s);
  IntVector out;
  std::string tok;
  while (in >> tok) {
    Integer z;
    if (z.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0)
      throw UsageError(what + ": '" + tok + "' is not an integer");
    out.push_back(z);
  }
  return out;
}

std::string degree_list(const GradingData& g) {
  std::string s = "[";
  for (std::size_t i = 0; i < g.num_rays(); ++i) {
    if (i) s += ", ";
    IntVector deg = g.ray_degree(i);
    s += deg.size() == 1 ? deg[0].get_str() : to_string(deg);
  }
  return s + "]";
}

std::string cone_string(const Cone& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + std::to_string(c[i] + 1);
  return s + "}";
}

std::string dim_string(const std::optional<std::size_t>& d) {
  return d ? std::to_string(*d) : "empty";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void grading_header(const GradingData& g, Report& out) {
  out.line("Cl", g.class_group().describe());
  out.line("deg", degree_list(g));
}

void grading_comment(const GradingData& g, std::ostream& out) {
  out << "# Cl = " << g.class_group().describe() << "; deg = " << degree_list(g) << '\n';
}

IntVector class_argument(const GradingData& g, const std::string& text) {
  IntVector v = parse_int_list(text, "degree");
  if (v.size() != g.class_coordinates())
    throw UsageError("degree: expected " + std::to_string(g.class_coordinates()) +
                     " coordinates, got " + std::to_string(v.size()));
  return g.class_group().reduce(v);
}

GradedPresentation load_module(const GradingData& g, const std::string& path) {
  GradedPresentation f = read_module(path, g.num_rays());
  validate_presentation(g, f);
  return f;
}

}  // namespace

void Report::line(const std::string& key, const std::string& value) {
  os_ << key << (format_ == Format::Plain ? " = " : "\t") << value << '\n';
}

void cmd_fan_info(const std::string& fan_path, Report& out) {
  GradingData g = grading_data(read_fan(fan_path));
  const std::size_t d = g.num_rays();
  out.line("d", std::to_string(d));
  out.line("n", std::to_string(g.ambient_rank()));
  grading_header(g, out);
  const auto& dual = g.dual_basis();
  for (std::size_t j = 0; j < dual.size(); ++j) out.line("u" + std::to_string(j + 1), to_string(dual[j]));
  std::vector<CommPoly> b;
  for (const auto& e : irrelevant_ideal(g.fan()).generators) b.push_back(CommPoly::monomial(e));
  out.line("b", ideal_to_string(b, indexed_names("x", d)));
  for (std::size_t j = 0; j < dual.size(); ++j) {
    std::string key = dual.size() == 1 ? "theta" : "theta[u" + std::to_string(j + 1) + "]";
    out.line(key, to_string(euler_operator(g, g.dual_values(j))));
  }
}

void cmd_dl(const std::string& fan_path, const std::string& degree, std::ostream& out) {
  GradingData g = grading_data(read_fan(fan_path));
  GradedPresentation f = d_module_left(g, class_argument(g, degree));
  grading_comment(g, out);
  write_module(out, f);
}

void cmd_dr(const std::string& fan_path, const std::string& degree, std::ostream& out) {
  GradingData g = grading_data(read_fan(fan_path));
  GradedPresentation f = d_module_right(g, class_argument(g, degree));
  grading_comment(g, out);
  write_module(out, f);
}

void cmd_check(const std::string& fan_path, const std::string& module_path, Report& out) {
  GradingData g = grading_data(read_fan(fan_path));
  GradedPresentation f = load_module(g, module_path);
  grading_header(g, out);
  out.line("side", to_string(f.side));
  out.line("rank", std::to_string(f.rank()));
  ThetaCheck c = check_theta_condition(g, f);
  if (c.holds) {
    out.line("theta", "OK");
  } else {
    out.line("theta", "FAIL at generator " + std::to_string(c.failure->generator + 1) + ", u = u" +
                          std::to_string(c.failure->functional + 1));
  }
}

void cmd_charvar(const std::string& fan_path, const std::string& module_path, bool charts,
                 bool saturate, Report& out) {
  GradingData g = grading_data(read_fan(fan_path));
  GradedPresentation f = load_module(g, module_path);
  CharReport r = dimension_report(g, f);
  const std::size_t d = g.num_rays();
  const VarNames names = cotangent_names(d);
  grading_header(g, out);
  out.line("j", ideal_to_string(r.j, names));
  out.line("dim", dim_string(r.dim));
  if (saturate) out.line("saturated", ideal_to_string(r.saturated, names));
  out.line("torsion", yes_no(r.torsion));
  if (r.torsion)
    out.line("sheaf", "0");
  else
    out.line("sheaf-dim", std::to_string(*r.sheaf_dim));
  out.line("holonomic-A", yes_no(r.holonomic_a));
  out.line("holonomic-sheaf", yes_no(r.holonomic_sheaf));
  if (!charts) return;

  std::optional<std::size_t> best;
  const auto& cones = g.fan().maximal_cones();
  for (std::size_t k = 0; k < cones.size(); ++k) {
    ChartIdeal c = chart_ideal_from(g, r.saturated, cones[k]);
    const std::string pre = "chart" + std::to_string(k + 1) + ".";
    out.line(pre + "cone", cone_string(c.sigma));
    std::string gens;
    for (const auto& gen : c.generators)
      gens += (gens.empty() ? "" : ", ") + gen.name + " = " + generator_string(gen, d);
    out.line(pre + "generators", gens);
    out.line(pre + "presentation", ideal_to_string(c.presentation, c.names));
    out.line(pre + "image", ideal_to_string(c.image, c.names));
    out.line(pre + "dim", dim_string(c.dim));
    out.line(pre + "xi-degree", std::to_string(c.xi_degree_bound));
    if (c.dim && (!best || *c.dim > *best)) best = c.dim;
  }
  out.line("chart-dim", dim_string(best));
  if (r.torsion)
    out.line("chart-check", best ? "FAIL" : "OK");
  else
    out.line("chart-check",
             best && static_cast<long>(*best) == *r.sheaf_dim ? "OK" : "FAIL");
}

void cmd_swap(const std::string& fan_path, const std::string& module_path, std::ostream& out) {
  GradingData g = grading_data(read_fan(fan_path));
  GradedPresentation f = load_module(g, module_path);
  grading_comment(g, out);
  write_module(out, left_right_swap(g, f));
}

void cmd_local(const std::string& fan_path, const std::string& cone, const std::string& p_text,
               const std::string& g_text, Report& out) {
  GradingData g = grading_data(read_fan(fan_path));
  const std::size_t d = g.num_rays(), n = g.ambient_rank();
  IntVector idx = parse_int_list(cone, "cone");
  std::vector<std::size_t> raw;
  for (const auto& i : idx) {
    if (i < 1 || i > static_cast<long>(d)) throw UsageError("cone: ray index " + i.get_str() + " out of range");
    raw.push_back(i.get_ui() - 1);
  }
  Cone sigma = normalize_cone(raw);
  if (!g.fan().is_cone(sigma)) throw UnknownCone("cone " + cone_string(sigma) + " is not in the fan");
  IntVector p = parse_int_list(p_text, "p");
  if (p.size() != n)
    throw UsageError("p: expected " + std::to_string(n) + " coordinates, got " + std::to_string(p.size()));

  grading_header(g, out);
  out.line("cone", cone_string(sigma));
  out.line("p", to_string(p));
  out.line("iota(p)", to_string(g.iota_apply(p)));
  LinearProduct h = h_p(g, sigma, p);
  const VarNames th = theta_names(d), vt = vartheta_names(n);
  ThetaPoly rh = rho(g, h.poly);
  out.line("h_p", factored_string(h));
  out.line("rho(h_p)", to_string(rh, vt));
  out.line("I(p)", ideal_to_string(groebner_basis({rh}, n), vt));
  const int radius = j_p_min_radius(g, sigma, p);
  LinearProduct oracle = j_p_oracle(g, sigma, p, radius);
  out.line("oracle", std::string(oracle.poly == h.poly ? "AGREE" : "DISAGREE") + " (radius " +
                         std::to_string(radius) + ")");
  LinearProduct closed = h_p_closed_range(g, sigma, p);
  out.line("closed-range", closed.poly == oracle.poly ? "AGREE" : "DISAGREE");
  out.line("Y(p)", y_p_check(g, sigma, p, 6) ? "OK" : "FAIL");
  if (!g_text.empty()) {
    ThetaPoly w = parse_comm_poly(g_text, th);
    LocalOperator op = local_op_image(g, sigma, p, w);
    out.line("rho(g)", to_string(op.image, vt));
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations with D-modules on smooth toric varieties", "toric-dmod"};
  app.require_subcommand(1);
  std::string format = "plain";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "machine"}));

  std::string fan, module, degree = "0", cone, p, g_text;
  bool charts = false, saturate = false;

  auto* fan_info = app.add_subcommand("fan-info", "Class group, degrees, irrelevant ideal, Euler operators");
  fan_info->add_option("fan", fan, "Fan file")->required();

  auto* dl = app.add_subcommand("dl", "Module document for D_L(b)");
  dl->add_option("fan", fan, "Fan file")->required();
  dl->add_option("-b,--degree", degree, "Class b, comma separated");

  auto* dr = app.add_subcommand("dr", "Module document for D_R(a)");
  dr->add_option("fan", fan, "Fan file")->required();
  dr->add_option("-a,--degree", degree, "Class a, comma separated");

  auto* check = app.add_subcommand("check", "Theta condition");
  check->add_option("fan", fan, "Fan file")->required();
  check->add_option("module", module, "Module file")->required();

  auto* charvar = app.add_subcommand("charvar", "Characteristic ideal and dimensions");
  charvar->add_option("fan", fan, "Fan file")->required();
  charvar->add_option("module", module, "Module file")->required();
  charvar->add_flag("--charts", charts, "Compute the chart ideals over every maximal cone");
  charvar->add_flag("--saturate", saturate, "Print the saturated characteristic ideal");

  auto* swap = app.add_subcommand("swap", "Left-right swap of a module document");
  swap->add_option("fan", fan, "Fan file")->required();
  swap->add_option("module", module, "Module file")->required();

  auto* local = app.add_subcommand("local", "h_p, rho(h_p) and I(p) on an affine chart");
  local->add_option("fan", fan, "Fan file")->required();
  local->add_option("--cone", cone, "Ray indices of the cone, 1-based, comma separated")->required();
  local->add_option("--p", p, "Character p, comma separated")->required();
  local->add_option("--g", g_text, "Polynomial in th1..thd divisible by h_p");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Report report(out, format == "machine" ? Format::Machine : Format::Plain);
  try {
    if (*fan_info) cmd_fan_info(fan, report);
    else if (*dl) cmd_dl(fan, degree, out);
    else if (*dr) cmd_dr(fan, degree, out);
    else if (*check) cmd_check(fan, module, report);
    else if (*charvar) cmd_charvar(fan, module, charts, saturate, report);
    else if (*swap) cmd_swap(fan, module, out);
    else if (*local) cmd_local(fan, cone, p, g_text, report);
    return kOk;
  } catch (const InvalidFan& e) {
    err << "error: invalid fan (" << to_string(e.kind()) << ")";
    if (e.cone()) err << " at cone " << *e.cone() + 1;
    err << ": " << e.what() << '\n';
    return kInvalid;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InhomogeneousInput& e) {
    err << "error: inhomogeneous input: " << e.what() << '\n';
    return kInvalid;
  } catch (const UnknownCone& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const ConeNotMaximal& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const ConeNotSmooth& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const PreconditionViolated& e) {
    err << "error: precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const NotInJp& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const BoxTooSmall& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }
}

}  // namespace toric::cli
