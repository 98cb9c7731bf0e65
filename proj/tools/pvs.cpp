// pvs: command-line front end. Exit codes: 0 success, 1 usage or input error, 2 verification mismatch.

#include "pvs/golden.hpp"
#include "pvs/invariants.hpp"
#include "pvs/liealg.hpp"
#include "pvs/oppenheim.hpp"
#include "pvs/reptheory.hpp"
#include "pvs/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace pvs;

namespace {

constexpr int kUsage = 1;
constexpr int kMismatch = 2;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw ParseError("'" + path + "': " + ex.what());
  }
}

/// "builtin:name" -> name; empty for file paths.
std::string builtin_name(const std::string& src) {
  constexpr std::string_view prefix = "builtin:";
  return src.rfind(prefix, 0) == 0 ? src.substr(prefix.size()) : std::string{};
}

QTrivector load_trivector(const std::string& src) {
  const std::string name = builtin_name(src);
  if (!name.empty()) return builtin_trivector(name);
  return trivector_from_json<Rational>(read_json_file(src));
}

GroupElement<Rational> load_group_element(const std::string& src) {
  const std::string name = builtin_name(src);
  if (name == "tau") return builtin_tau();
  if (!name.empty()) throw Error("unknown built-in group element '" + name + "' (known: tau)");
  return group_element_from_json<Rational>(read_json_file(src));
}

/// builtin:identity, builtin:near-identity:<seed>, or a JSON file.
lab::RealLinearMap load_real_map(const std::string& src) {
  const std::string name = builtin_name(src);
  if (name == "identity") return lab::RealLinearMap::identity();
  if (name.rfind("near-identity:", 0) == 0) return lab::RealLinearMap::near_identity(std::stoull(name.substr(14)));
  if (!name.empty()) throw Error("unknown built-in map '" + name + "' (known: identity, near-identity:<seed>)");
  return lab::real_map_from_json(read_json_file(src));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

/// Eight comma-separated rationals, or a file holding {"m": 3x3}.
std::vector<GaussianRational> load_sl3(const std::string& src) {
  if (std::filesystem::exists(src)) {
    const json j = read_json_file(src);
    if (!j.contains("m")) throw ParseError("sl3 element JSON needs an \"m\" field");
    return matrix_to_coords(matrix_from_json<GaussianRational>(j.at("m")));
  }
  const auto parts = split(src, ',');
  if (parts.size() != kDim) throw ParseError("expected 8 comma-separated coordinates, got '" + src + "'");
  std::vector<GaussianRational> v;
  for (const auto& p : parts) v.emplace_back(Rational::parse(p));
  return v;
}

json scalar_json(const GaussianRational& z) { return z.is_real() ? to_json(z.re()) : to_json(z); }

json matrix_json(const CMatrix& m) { return is_real(m) ? to_json(real_part(m)) : to_json(m); }

std::pair<double, double> parse_window(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw ParseError("window must be a,b");
  return {std::stod(parts[0]), std::stod(parts[1])};
}

void emit(const json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << text;
}

std::optional<GroupElement<GaussianRational>> transport_for(const std::string& src, bool disabled) {
  if (disabled) return std::nullopt;
  const std::string name = builtin_name(src);
  return name.empty() ? std::nullopt : builtin_transport(name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of trivectors in dimension 8, sl(3) real forms, representation tables and an Oppenheim lab."};
  app.require_subcommand(1);
  std::string x_src, g_src, out_path;
  bool no_transport = false;

  auto* factor = app.add_subcommand("factor", "Q_x and F_x with det S_x = 1458 Q_x F_x^2");
  factor->add_option("--x", x_src, "trivector file or builtin:<w|wprime|w1|w2>")->required();
  factor->add_flag("--no-transport", no_transport, "ignore the built-in transport and normalize F");

  auto* smatrix = app.add_subcommand("smatrix", "the 8x8 matrix S_x of linear forms");
  smatrix->add_option("--x", x_src)->required();

  auto* phi_cmd = app.add_subcommand("phi", "the dual trivector Phi_x");
  phi_cmd->add_option("--x", x_src)->required();
  phi_cmd->add_flag("--no-transport", no_transport);

  auto* act_cmd = app.add_subcommand("act", "(t, g) x");
  act_cmd->add_option("--x", x_src)->required();
  act_cmd->add_option("--g", g_src, "group element file or builtin:tau")->required();

  auto* semistable = app.add_subcommand("semistable", "whether P_x != 0 and Q_x is non-degenerate");
  semistable->add_option("--x", x_src)->required();

  auto* lie = app.add_subcommand("lie", "sl(3) structure");
  lie->require_subcommand(1);
  std::string u_src, v_src, w_src;
  int form_i = 1;
  auto* lie_ad = lie->add_subcommand("ad", "ad(v) in the basis e1..e8");
  lie_ad->add_option("--v", v_src, "8 comma-separated coordinates or a {\"m\": 3x3} file")->required();
  auto* lie_killing = lie->add_subcommand("killing", "B(u, v) = tr(ad u ad v)");
  lie_killing->add_option("--u", u_src)->required();
  lie_killing->add_option("--v", v_src)->required();
  auto* lie_c3 = lie->add_subcommand("c3", "C(u, v, w) = B([u, v], w)");
  lie_c3->add_option("--u", u_src)->required();
  lie_c3->add_option("--v", v_src)->required();
  lie_c3->add_option("--w", w_src)->required();
  auto* lie_realform = lie->add_subcommand("realform", "h_D, q_D and w_i for a real form");
  lie_realform->add_option("--i", form_i)->check(CLI::IsMember({1, 2}))->required();
  auto* lie_signature = lie->add_subcommand("signature", "inertia of Q_x or of a quadratic form file");
  std::string q_src;
  lie_signature->add_option("--x", x_src);
  lie_signature->add_option("--q", q_src, "QuadraticForm JSON file");

  auto* rep = app.add_subcommand("rep", "representation theory of simple Lie algebras");
  rep->require_subcommand(1);
  std::string type, lam, mu;
  std::int64_t dim = 0;
  int max_rank = 8;
  bool screen = false;
  auto* rep_dim = rep->add_subcommand("dim", "Weyl dimension");
  rep_dim->add_option("type", type, "e.g. A3")->required();
  rep_dim->add_option("weight", lam, "e.g. 1,0,1")->required();
  auto* rep_tensor = rep->add_subcommand("tensor", "tensor product decomposition");
  rep_tensor->add_option("type", type)->required();
  rep_tensor->add_option("lambda", lam)->required();
  rep_tensor->add_option("mu", mu)->required();
  auto* rep_alt3 = rep->add_subcommand("alt3", "alternating cube decomposition");
  rep_alt3->add_option("type", type)->required();
  rep_alt3->add_option("weight", lam)->required();
  auto* rep_irreps = rep->add_subcommand("irreps-of-dim", "dominant weights of a given dimension");
  rep_irreps->add_option("type", type)->required();
  rep_irreps->add_option("dim", dim)->required()->check(CLI::PositiveNumber);
  auto* rep_table = rep->add_subcommand("table45", "dimension and smallest representation per simple algebra");
  rep_table->add_option("--max-rank", max_rank)->check(CLI::Range(1, 12));
  rep_table->add_flag("--screen", screen, "also screen the candidate subalgebra dimensions");

  auto* scan_cmd = app.add_subcommand("scan", "F-values at g v over primitive integer vectors");
  int scan_i = 0, box = 1, bins = 20, threads = 0;
  std::string window = "-10,10", kernel;
  std::size_t sample = 0, cap = 100000;
  std::uint64_t seed = 0;
  scan_cmd->add_option("--i", scan_i)->check(CLI::IsMember({0, 1}))->required();
  scan_cmd->add_option("--g", g_src, "map file or builtin:identity, builtin:near-identity:<seed>")->default_val("builtin:identity");
  scan_cmd->add_option("--box", box, "max-norm bound N")->required()->check(CLI::PositiveNumber);
  scan_cmd->add_option("--window", window, "a,b")->default_val("-10,10");
  scan_cmd->add_option("--sample", sample, "draw M vectors instead of enumerating");
  scan_cmd->add_option("--seed", seed);
  scan_cmd->add_option("--bins", bins)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--cap", cap);
  scan_cmd->add_option("--threads", threads);
  scan_cmd->add_option("--kernel", kernel, "scalar, avx2 or neon");
  scan_cmd->add_option("--out", out_path);

  auto* construct = app.add_subcommand("construct-h", "h in SL(8, R) with F(h u1) = r");
  double r = 0, lambda = 1;
  std::string basis_src;
  construct->add_option("--r", r)->required();
  construct->add_option("--lambda", lambda);
  construct->add_option("--i", form_i)->check(CLI::IsMember({0, 1}))->default_val(1);
  construct->add_option("--basis", basis_src, "lattice basis JSON {\"basis\": columns}");

  auto* rationality = app.add_subcommand("rationality", "search for a rational multiple of v -> q(g v)");
  rationality->add_option("--i", scan_i)->check(CLI::IsMember({0, 1}))->required();
  rationality->add_option("--g", g_src)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  std::string suite;
  int samples = 20;
  verify_cmd->add_option("suite", suite, "smatrix, factorization, phi, liealg, realforms, reptheory, oppenheim or all")->required();
  verify_cmd->add_option("--samples", samples, "covariance samples")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", out_path, "JSON outcome file");

  for (auto* c : {factor, smatrix, phi_cmd, act_cmd, semistable, rationality, construct}) c->add_option("--out", out_path);
  for (auto* c : {lie_ad, lie_killing, lie_c3, lie_realform, lie_signature}) c->add_option("--out", out_path);
  for (auto* c : {rep_tensor, rep_alt3, rep_irreps, rep_table}) c->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*factor) {
      emit(to_json(factor_invariants(load_trivector(x_src), transport_for(x_src, no_transport))), out_path);
    } else if (*smatrix) {
      emit(to_json(s_matrix(load_trivector(x_src))), out_path);
    } else if (*phi_cmd) {
      emit(to_json(phi(load_trivector(x_src), transport_for(x_src, no_transport))), out_path);
    } else if (*act_cmd) {
      emit(to_json(act(load_group_element(g_src), load_trivector(x_src))), out_path);
    } else if (*semistable) {
      emit(json{{"semistable", is_semistable(load_trivector(x_src))}}, out_path);
    } else if (*lie_ad) {
      emit(matrix_json(ad_matrix(load_sl3(v_src))), out_path);
    } else if (*lie_killing) {
      emit(scalar_json(killing_B(load_sl3(u_src), load_sl3(v_src))), out_path);
    } else if (*lie_c3) {
      emit(scalar_json(trilinear_C(load_sl3(u_src), load_sl3(v_src), load_sl3(w_src))), out_path);
    } else if (*lie_realform) {
      emit(to_json(real_form(form_i)), out_path);
    } else if (*lie_signature) {
      if (x_src.empty() == q_src.empty()) throw CLI::ValidationError("signature", "give exactly one of --x, --q");
      const QuadraticForm q = q_src.empty()
                                  ? factor_invariants(load_trivector(x_src), transport_for(x_src, false)).q
                                  : quadratic_form_from_json(read_json_file(q_src));
      const auto [pos, neg] = signature(q);
      emit(json{{"positive", pos}, {"negative", neg}, {"zero", kDim - pos - neg}}, out_path);
    } else if (*rep_dim) {
      std::cout << rep::weyl_dim(rep::root_system(type), rep::parse_weight(lam)) << "\n";
    } else if (*rep_tensor) {
      const auto rs = rep::root_system(type);
      emit(rep::to_json(rep::tensor_decompose(rs, rep::parse_weight(lam), rep::parse_weight(mu))), out_path);
    } else if (*rep_alt3) {
      emit(rep::to_json(rep::alt3_decompose(rep::root_system(type), rep::parse_weight(lam))), out_path);
    } else if (*rep_irreps) {
      json ws = json::array();
      for (const auto& w : rep::irreps_of_dim(rep::root_system(type), dim)) ws.push_back(rep::to_json(w));
      emit(ws, out_path);
    } else if (*rep_table) {
      json rows = json::array();
      for (const auto& row : rep::table45(max_rank)) rows.push_back(rep::to_json(row));
      json out{{"rows", rows}};
      if (screen) {
        json hits = json::array();
        for (const auto& h : rep::screen_candidates()) hits.push_back(rep::to_json(h));
        out["screening"] = hits;
      }
      emit(out, out_path);
    } else if (*scan_cmd) {
      lab::ScanConfig cfg;
      cfg.i = scan_i;
      cfg.g = load_real_map(g_src);
      cfg.enumeration = {box, sample > 0 ? lab::Mode::Sample : lab::Mode::Exhaustive, sample, seed};
      std::tie(cfg.a, cfg.b) = parse_window(window);
      cfg.cap = cap;
      cfg.bins = bins;
      cfg.threads = threads;
      if (!kernel.empty()) cfg.kernel = kernels::parse_kind(kernel);
      emit(to_json(lab::scan(cfg)), out_path);
    } else if (*construct) {
      const auto basis =
          basis_src.empty() ? lab::LatticeBasis::standard() : lab::lattice_basis_from_json(read_json_file(basis_src));
      emit(to_json(lab::construct_h(r, basis, lambda, form_i)), out_path);
    } else if (*rationality) {
      emit(to_json(lab::rationality_report(scan_i, load_real_map(g_src))), out_path);
    } else if (*verify_cmd) {
      verify::Options opt;
      opt.covariance_samples = samples;
      const auto outcomes = verify::run(suite, opt);
      json all = json::array();
      for (const auto& o : outcomes) {
        std::cout << verify::status_name(o.status) << "  [" << o.suite << "] " << o.name;
        if (!o.detail.empty()) std::cout << ": " << o.detail;
        std::cout << "\n";
        all.push_back(verify::to_json(o));
      }
      if (!out_path.empty()) emit(all, out_path);
      return verify::all_pass(outcomes) ? 0 : kMismatch;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return 0;
}
