// gfrob: command-line front end. Every command prints one report
// {"command", "checks", "exit_code", "result"}; `groupoid` prints one JSON
// line per component instead.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "gfrob/braided.hpp"
#include "gfrob/error.hpp"
#include "gfrob/json_io.hpp"
#include "gfrob/reference.hpp"
#include "gfrob/singularity.hpp"

using namespace gfrob;
using namespace gfrob::json_io;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kInput = 3 };

struct Outcome {
  Report report;
  json result = json::object();
  std::string text;  // optional text rendering of the result
};

// Marks errors raised while reading inputs.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::string data;
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    data = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    data = ss.str();
  }
  try {
    return json::parse(data);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON in ") + (path.empty() || path == "-" ? "stdin" : path) + ": " + e.what());
  }
}

// Runs a reader, turning any failure into an InputError.
template <class F>
auto load(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

std::string format = "json";

void emit(const std::string& command, const Outcome& o, int code) {
  if (format == "text") {
    std::cout << command << ": " << (code == kOk ? "ok" : "FAILED") << "\n";
    for (const auto& c : o.report.checks)
      std::cout << (c.passed ? "  pass " : "  FAIL ") << c.name << (c.witness.empty() ? "" : "  " + c.witness) << "\n";
    if (!o.text.empty()) std::cout << o.text << (o.text.back() == '\n' ? "" : "\n");
    else if (!o.result.empty()) std::cout << o.result.dump(2) << "\n";
    return;
  }
  json out = {{"command", command}, {"checks", to_json(o.report)}, {"exit_code", code}, {"result", o.result}};
  std::cout << out.dump() << "\n";
}

void emit_error(const std::string& command, const std::string& kind, const std::string& message, int code) {
  if (format == "text") {
    std::cerr << command << ": " << kind << ": " << message << "\n";
  } else {
    json out = {{"command", command}, {"error", {{"kind", kind}, {"message", message}}}, {"exit_code", code}};
    std::cout << out.dump() << "\n";
  }
}

int finish(const std::string& command, const std::function<Outcome()>& body) {
  try {
    Outcome o = body();
    const int code = o.report.passed() ? kOk : kFailed;
    emit(command, o, code);
    return code;
  } catch (const InputError& e) {
    emit_error(command, "InputError", e.what(), kInput);
    return kInput;
  } catch (const BadIndex& e) {
    emit_error(command, e.kind(), e.what(), kUsage);
    return kUsage;
  } catch (const Error& e) {
    Outcome o;
    o.report.add("error", false, e.what());
    emit(command, o, kFailed);
    return kFailed;
  }
}

std::vector<std::string> render_lines(const std::vector<MultiPoly>& ps, const std::string& lhs) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ps.size(); ++i) out.push_back(lhs + std::to_string(i) + " = " + ps[i].to_string());
  return out;
}

std::string join(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) s += l + "\n";
  return s;
}

json polys(const std::vector<MultiPoly>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gfrob: braided G-Frobenius algebras and manifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  std::string group_file = "-", module_file, tensor_file, algebra_file = "-", potential_file, metric_file,
              input_file = "-", coords_list, kind;
  int n = 0;

  auto* group = app.add_subcommand("group", "validate a group table and list its conjugacy classes");
  group->add_option("--group", group_file, "group JSON (default: stdin)");

  auto* groupoid = app.add_subcommand("groupoid", "components of the braid groupoid on G^n");
  groupoid->add_option("--group", group_file, "group JSON (default: stdin)");
  groupoid->add_option("--n", n, "tensor degree")->required()->check(CLI::Range(1, 12));

  auto* braidize_cmd = app.add_subcommand("braidize", "braidize a tensor");
  braidize_cmd->add_option("--module", module_file, "module JSON")->required();
  braidize_cmd->add_option("--tensor", tensor_file, "tensor JSON")->required();

  auto* br_basis_cmd = app.add_subcommand("br-basis", "basis of the braided tensors of degree n");
  br_basis_cmd->add_option("--module", module_file, "module JSON")->required();
  br_basis_cmd->add_option("--n", n, "tensor degree")->required()->check(CLI::Range(0, 12));

  auto* check_gfa_cmd = app.add_subcommand("check-gfa", "check the G-Frobenius algebra axioms");
  check_gfa_cmd->add_option("--algebra", algebra_file, "algebra JSON (default: stdin)");

  auto* wdvv = app.add_subcommand("wdvv", "check the WDVV equations");
  wdvv->add_option("--potential", potential_file, "potential JSON")->required();
  wdvv->add_option("--metric", metric_file, "metric JSON")->required();
  wdvv->add_option("--coords", coords_list, "comma-separated coordinate order (default: the potential's vars)");

  auto* pre_gfm = app.add_subcommand("check-pre-gfm", "check a pre-G-Frobenius manifold");
  pre_gfm->add_option("--input", input_file, "JSON with module, metric, coords, potential (default: stdin)");

  auto* assemble = app.add_subcommand("assemble-z2", "glue F_e and F^G into a Z/2Z manifold");
  assemble->add_option("--input", input_file, "JSON with Fe, FG, iota_e, iota_g (default: stdin)");

  auto* potential = app.add_subcommand("potential", "potential of A_n, B_n or D_n");
  potential->add_option("kind", kind, "A, B or D")->required()->check(CLI::IsMember({"A", "B", "D"}));
  potential->add_option("n", n, "index")->required();

  auto* flat = app.add_subcommand("flat-coords", "flat coordinates of A_{2n-3}");
  flat->add_option("n", n, "index")->required();

  auto* construct = app.add_subcommand("construct-z2", "the Z/2Z Frobenius manifold from A_{2n-3} and D_n");
  construct->add_option("n", n, "index")->required();

  auto* verify = app.add_subcommand("verify-paper", "check every published example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*group)
    return finish("group", [&] {
      const FiniteGroup G = load([&] { return group_from(read_json(group_file)); });
      Outcome o;
      o.report.add("group_axioms", true);
      o.result = {{"order", G.order()},
                  {"identity", G.identity()},
                  {"abelian", G.is_abelian()},
                  {"conjugacy_classes", G.conjugacy_classes()}};
      return o;
    });

  if (*groupoid) {
    try {
      const FiniteGroup G = load([&] { return group_from(read_json(group_file)); });
      bool ok = true;
      for (const auto& c : groupoid_for(G, n)->components()) {
        json line = to_json(c);
        const bool identity = c.n_C == c.members.size() * c.m_C;
        ok = ok && identity;
        if (format == "text")
          std::cout << "component " << json(c.representative()).dump() << "  |C| = " << c.members.size()
                    << "  m_C = " << c.m_C << "  n_C = " << c.n_C << "  g_degree = " << c.g_degree << "\n";
        else
          std::cout << line.dump() << "\n";
      }
      return ok ? kOk : kFailed;
    } catch (const InputError& e) {
      emit_error("groupoid", "InputError", e.what(), kInput);
      return kInput;
    } catch (const Error& e) {
      emit_error("groupoid", e.kind(), e.what(), kFailed);
      return kFailed;
    }
  }

  if (*braidize_cmd)
    return finish("braidize", [&] {
      const GradedModule H = load([&] { return module_from(read_json(module_file)); });
      const TensorElement v = load([&] { return tensor_from(read_json(tensor_file)); });
      for (const auto& [idx, c] : v.terms)
        for (int i : idx)
          if (i < 0 || i >= static_cast<int>(H.dim())) throw InputError("tensor index out of range");
      const TensorElement b = braidize(H, v);
      Outcome o;
      o.report.add("braided", is_braided(H, b));
      o.result = {{"tensor", to_json(b)}};
      return o;
    });

  if (*br_basis_cmd)
    return finish("br-basis", [&] {
      const GradedModule H = load([&] { return module_from(read_json(module_file)); });
      Outcome o;
      json basis = json::array();
      for (const auto& b : br_basis(H, n))
        basis.push_back({{"component", b.component}, {"g_degree", b.g_degree}, {"tensor", to_json(b.tensor)}});
      o.result = {{"dimension", basis.size()}, {"basis", basis}};
      return o;
    });

  if (*check_gfa_cmd)
    return finish("check-gfa", [&] {
      const GFrobeniusAlgebra A = load([&] { return algebra_from(read_json(algebra_file)); });
      Outcome o;
      o.report = check_gfa(A);
      return o;
    });

  if (*wdvv)
    return finish("wdvv", [&] {
      const json pj = load([&] { return read_json(potential_file); });
      const MultiPoly Y = load([&] { return poly_from(pj); });
      const Matrix eta = load([&] {
        const json mj = read_json(metric_file);
        return matrix_from(mj.is_object() && mj.contains("matrix") ? mj["matrix"] : mj);
      });
      std::vector<std::string> coords;
      if (!coords_list.empty()) {
        std::stringstream ss(coords_list);
        for (std::string c; std::getline(ss, c, ',');) coords.push_back(c);
      } else {
        coords = pj.is_object() ? load([&] { return poly_vars(pj); }) : Y.vars();
      }
      if (eta.rows() != coords.size() || eta.cols() != coords.size())
        throw InputError("metric is " + std::to_string(eta.rows()) + "x" + std::to_string(eta.cols()) + " but there are " +
                         std::to_string(coords.size()) + " coordinates");
      for (const auto& v : Y.used_vars())
        if (std::find(coords.begin(), coords.end(), v) == coords.end())
          throw InputError("potential uses " + v + ", which is not a coordinate");
      const WdvvResult w = wdvv_check(Y, coords, eta);
      Outcome o;
      std::string witness;
      if (!w.passed) {
        const auto& v = w.violations.front();
        witness = "(" + coords[v[0]] + ", " + coords[v[1]] + ", " + coords[v[2]] + ", " + coords[v[3]] +
                  "): " + w.first_residual.to_string();
      }
      o.report.add("wdvv", w.passed, witness);
      json viol = json::array();
      for (const auto& v : w.violations) viol.push_back(v);
      o.result = {{"coords", coords}, {"violations", viol}};
      if (!w.passed) o.result["first_residual"] = to_json(w.first_residual);
      return o;
    });

  if (*pre_gfm)
    return finish("check-pre-gfm", [&] {
      const json j = load([&] { return read_json(input_file); });
      const GradedModule H = load([&] { return module_from(j.at("module")); });
      const FrobeniusManifold F = load([&] { return manifold_from(j); });
      if (F.coords.size() != H.dim()) throw InputError("coords and module dimension differ");
      Outcome o;
      o.report = check_pre_gfm(H, F.metric, F.coords, F.potential);
      return o;
    });

  if (*assemble)
    return finish("assemble-z2", [&] {
      const json j = load([&] { return read_json(input_file); });
      const FrobeniusManifold Fe = load([&] { return manifold_from(j.at("Fe")); });
      const FrobeniusManifold FG = load([&] { return manifold_from(j.at("FG")); });
      const Matrix ie = load([&] { return matrix_from(j.at("iota_e")); });
      const Matrix ig = load([&] { return matrix_from(j.at("iota_g")); });
      auto basis = [&](const char* key) -> std::optional<std::vector<Vector>> {
        if (!j.contains(key)) return std::nullopt;
        return load([&] {
          std::vector<Vector> out;
          for (const auto& v : j.at(key)) out.push_back(vector_from(v));
          return out;
        });
      };
      const Z2Assembly as = assemble_z2(Fe, FG, ie, ig, basis("v_basis"), basis("g_basis"));
      Outcome o;
      o.report = as.report;
      o.result = {{"module", to_json(as.module)},
                  {"coords", as.coords},
                  {"metric", to_json(as.metric)},
                  {"potential", to_json(as.potential)},
                  {"y_i", to_json(as.y_i)},
                  {"y_v", to_json(as.y_v)},
                  {"y_g", to_json(as.y_g)},
                  {"dims", {as.dim_i, as.dim_v, as.dim_g}}};
      o.text = "coords: " + json(as.coords).dump() + "\nY = " + as.potential.to_string();
      return o;
    });

  if (*potential)
    return finish("potential", [&] {
      FrobeniusManifold F;
      if (kind == "A") F = {flat_coords_A(n), metric_A(n), potential_A(n)};
      if (kind == "B") F = {flat_coords_B(n), metric_B(n), potential_B(n)};
      if (kind == "D") F = {flat_coords_D(n), metric_D(n), potential_D(n)};
      Outcome o;
      o.report.add("wdvv", wdvv_check(F.potential, F.coords, F.metric).passed);
      o.result = to_json(F);
      o.text = "Phi_" + kind + std::to_string(n) + " = " + F.potential.to_string();
      return o;
    });

  if (*flat)
    return finish("flat-coords", [&] {
      const UnfoldingChart c = flat_coordinates(n);
      std::map<std::string, MultiPoly> a_sub;
      for (int i = 0; i < c.m; ++i) a_sub[c.t[i]] = c.t_of_a[i];
      bool round_trip = true;
      for (int i = 0; i < c.m; ++i)
        round_trip = round_trip && c.a_of_t[i].subst(a_sub) == MultiPoly::variable(c.a[i]);
      Outcome o;
      o.report.add("round_trip", round_trip);
      o.result = {{"m", c.m}, {"unfolding", to_json(unfolding(c.m))}, {"a_of_t", polys(c.a_of_t)}, {"t_of_a", polys(c.t_of_a)}};
      auto lines = render_lines(c.a_of_t, "a");
      auto inv = render_lines(c.t_of_a, "t");
      lines.insert(lines.end(), inv.begin(), inv.end());
      o.text = join(lines);
      return o;
    });

  if (*construct)
    return finish("construct-z2", [&] {
      const Z2Manifold M = z2_frobenius_manifold(n);
      const Z2Assembly& as = M.assembly;
      Outcome o;
      o.report = M.report;
      o.result = {{"basis", z2_basis_names(n)},
                  {"coords", as.coords},
                  {"module", to_json(as.module)},
                  {"metric", to_json(as.metric)},
                  {"potential", to_json(as.potential)},
                  {"y_i", to_json(as.y_i)},
                  {"y_v", to_json(as.y_v)},
                  {"y_g", to_json(as.y_g)},
                  {"algebra", to_json(M.transported)}};
      o.text = "coords: " + json(as.coords).dump() + "\nY_i = " + as.y_i.to_string() + "\nY_v = " +
               as.y_v.to_string() + "\nY_g = " + as.y_g.to_string();
      return o;
    });

  if (*verify)
    return finish("verify-paper", [&] {
      Outcome o;
      o.report = verify_paper();
      return o;
    });

  return kUsage;
}
