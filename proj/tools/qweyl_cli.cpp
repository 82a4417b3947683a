// Command-line front end: braiding verification, Poincare-Hilbert series,
// actions of operators on algebra elements and isotypic data, and the
// quantum Laplace-Beltrami operator as an exact difference operator.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 input error.
#include <CLI11.hpp>

#include "qweyl/presets.hpp"
#include "qweyl/quantize.hpp"
#include "qweyl/re_weyl.hpp"
#include "qweyl/report.hpp"

#include <chrono>
#include <fstream>

using namespace qweyl;

namespace {

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  try {
    return std::stoi(v);
  } catch (...) {
    return fallback;
  }
}

Braiding load_braiding(const std::string& file, const std::string& preset,
                       const std::string& q_expr) {
  Braiding r;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open file: " + file);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("parse error: ") + e.what());
    }
    r = braiding_from_json(j);
  } else {
    r = braiding_preset(preset);
  }
  if (!q_expr.empty()) r.hecke_q = parse_scalar(q_expr, {VQ, VH});
  return r;
}

std::string dims_str(const std::vector<int>& d) {
  std::string s;
  for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

int cmd_verify_braiding(const std::string& file, const std::string& preset,
                        const std::string& q_expr, int kmax,
                        const std::string& format) {
  Report rep;
  rep.command = "verify-braiding " + (file.empty() ? preset : file);
  Braiding r = load_braiding(file, preset, q_expr);
  rep.info("dim", std::to_string(r.dim));

  bool qybe = check_qybe(r).is_zero();
  rep.add("qybe residual zero", qybe);
  if (r.hecke_q) {
    rep.info("q", r.hecke_q->str());
    rep.add("hecke residual zero", check_hecke(r, *r.hecke_q).is_zero());
  }
  auto skew = skew_inverse(r);
  rep.add("skew-invertible", bool(skew));
  if (skew) {
    rep.add("psi satisfies both defining contractions", verify_skew(r, skew->psi));
    rep.info("Tr B", skew->b_op.trace().str());
    rep.info("Tr C", skew->c_op.trace().str());
    Braiding ext = extend_braiding(r, *skew);
    rep.add("extended braiding satisfies qybe", check_qybe(ext).is_zero());
    rep.add("extension preserves the pairing embedding",
            check_pairing_invariance(ext, r.dim));
    if (r.hecke_q && qybe) {
      PHReport ph = ph_series(r, kmax);
      if (ph.bi_rank) {
        rep.info("bi-rank", "(" + std::to_string(ph.bi_rank->first) + "|" +
                                std::to_string(ph.bi_rank->second) + ")");
        rep.add("psi of the inverse braiding matches the shifted formula",
                psi_inverse_check(r, *skew, *ph.bi_rank));
        // Tr B = Tr C = (m-n)_q / q^{m-n}
        Scalar expect = q_number(ph.bi_rank->first - ph.bi_rank->second, *r.hecke_q) /
                        r.hecke_q->pow(ph.bi_rank->first - ph.bi_rank->second);
        rep.add("Tr C matches (m-n)_q / q^(m-n)", skew->c_op.trace() == expect,
                expect.str());
      } else {
        rep.add("bi-rank determined", false, "series not reconstructible");
      }
    }
  }
  rep.emit(std::cout, format);
  return rep.all_pass() ? 0 : 1;
}

int cmd_ph_series(const std::string& file, const std::string& preset,
                  const std::string& q_expr, int kmax, const std::string& format) {
  Report rep;
  rep.command = "ph-series " + (file.empty() ? preset : file) +
                " kmax=" + std::to_string(kmax);
  Braiding r = load_braiding(file, preset, q_expr);
  if (!r.hecke_q) throw std::invalid_argument("ph-series: Hecke parameter required");
  PHReport ph = ph_series(r, kmax);
  rep.info("dims_plus", dims_str(ph.dims_plus));
  rep.info("dims_minus", dims_str(ph.dims_minus));
  rep.add("series reconstructed as a rational function", bool(ph.p_minus));
  if (ph.p_minus) {
    const UniPoly& N = ph.p_minus->first;
    const UniPoly& D = ph.p_minus->second;
    rep.info("N(t)", N.str());
    rep.info("D(t)", D.str());
    rep.info("bi-rank", "(" + std::to_string(ph.bi_rank->first) + "|" +
                            std::to_string(ph.bi_rank->second) + ")");
    rep.add("reciprocal property", reciprocal_check(N, D));
    if (ph.bi_rank->second == 0) {
      auto m = mountain_check(N);
      rep.add("mountain property of N", m.pass,
              m.pass ? "" : "fails at index " + std::to_string(m.fail_index));
    }
    auto fac = factor_mountain(N);
    std::string fs;
    for (auto& f : fac.factors) fs += (fs.empty() ? "" : " * ") + f.str();
    if (fac.remainder)
      fs += (fs.empty() ? "" : " * ") +
            ("[irreducible-remainder " + fac.remainder->str() + "]");
    rep.info("N factorization", fs.empty() ? "1" : fs);
    // truncated product P_+(t) P_-(-t) = 1
    bool prod_ok = true;
    for (int k = 1; k <= kmax; ++k) {
      long long acc = 0;
      for (int j = 0; j <= k; ++j)
        acc += ((k - j) % 2 ? -1 : 1) * (long long)ph.dims_plus[size_t(j)] *
               ph.dims_minus[size_t(k - j)];
      prod_ok = prod_ok && acc == 0;
    }
    rep.add("truncated product P_+(t) P_-(-t) = 1", prod_ok);
  }
  rep.emit(std::cout, format);
  return rep.all_pass() ? 0 : 1;
}

struct IsotypicInput {
  Scalar f;
  int k = 0;
};

// "f(t,mu) : k=N"
std::optional<IsotypicInput> parse_isotypic(const std::string& s) {
  auto pos = s.find(':');
  if (pos == std::string::npos) return std::nullopt;
  std::string fpart = s.substr(0, pos), kpart = s.substr(pos + 1);
  auto eq = kpart.find('=');
  if (eq == std::string::npos || kpart.find('k') == std::string::npos)
    throw std::invalid_argument("isotypic element syntax: \"f(t,mu) : k=N\"");
  IsotypicInput in;
  in.f = parse_scalar(fpart, {VT, VMU, VH});
  in.k = std::stoi(kpart.substr(eq + 1));
  if (in.k < 0) throw std::invalid_argument("component index k must be >= 0");
  return in;
}

int cmd_act(const std::string& algebra, const std::string& op_expr,
            const std::string& on_expr, const std::string& format) {
  Report rep;
  rep.command = "act --algebra " + algebra + " --op " + op_expr + " --on " + on_expr;

  if (algebra == "uu2") {
    static U2System u2;
    static SpectralMatrices s = spectral_matrices();
    auto named_op = [&](const std::string& name) -> std::optional<NCPoly> {
      if (name == "Dt") return u2.dt_shifted();
      if (name == "dt") return u2.dt_plain();
      if (name == "Q") return u2.q_op();
      if (name == "Delta" || name == "Delta1") return u2.delta_i(1);
      if (name == "Delta0") return u2.delta_i(0);
      if (name == "Delta2") return u2.delta_i(2);
      if (name == "Delta3") return u2.delta_i(3);
      if (name == "Box") return u2.box();
      if (name == "Cas") return u2.casimir();
      return std::nullopt;
    };
    auto op_named = named_op(op_expr);
    NCPoly op = op_named ? *op_named : u2.rs().parse(op_expr);
    auto iso = parse_isotypic(on_expr);
    if (iso) {
      // closed form through the difference operator; oracle when possible
      auto span = span_decompose(u2, op);
      if (!span)
        throw std::invalid_argument("operator outside the invariant span; "
                                    "isotypic input needs an invariant operator");
      DifferenceOperator d = difference_form(s, *span, iso->k);
      Scalar image = d.apply(iso->f);
      nlohmann::ordered_json img;
      img["f"] = image.str();
      img["k"] = iso->k;
      rep.info("image", img.dump());
      if (iso->f.is_polynomial() && is_mu_even(iso->f)) {
        NCPoly via_oracle = u2.act(op, isotypic_to_nc(u2, {iso->f, iso->k}));
        bool agree = is_mu_even(image) &&
                     via_oracle == isotypic_to_nc(u2, {image, iso->k});
        rep.add("closed form agrees with the PBW oracle", agree);
      } else {
        rep.info("oracle", "skipped (f not an even polynomial)");
      }
    } else {
      NCPoly elem = u2.rs().parse(on_expr);
      NCPoly result = u2.act(op, elem);
      rep.info("action", result.str(u2.rs().alphabet()));
    }
    rep.emit(std::cout, format);
    return rep.all_pass() ? 0 : 1;
  }

  // braided Weyl presets over the flip: weyl:P:m=N and the alias ugl:N
  auto weyl_m = [&]() -> int {
    if (algebra.rfind("weyl:P:m=", 0) == 0) return std::stoi(algebra.substr(9));
    if (algebra.rfind("ugl:", 0) == 0) return std::stoi(algebra.substr(4));
    return -1;
  }();
  if (weyl_m >= 1 && weyl_m <= 3) {
    WeylPresentation w = build_weyl(preset_flip(weyl_m), Scalar::var(VH));
    NCPoly op = w.rs.parse(op_expr);
    NCPoly elem = w.rs.parse(on_expr);
    NCPoly result = w.act(op, elem);
    rep.info("action", result.str(w.rs.alphabet()));
    rep.emit(std::cout, format);
    return 0;
  }

  // RE / modified RE over the standard d=2 symmetry: normal forms
  if (algebra == "re" || algebra == "re:std:d=2") {
    REPresentation re = build_re(preset_standard_d2());
    NCPoly p = re.rs.parse(op_expr) * re.rs.parse(on_expr);
    rep.info("normal form", re.rs.normal_form(p).str(re.rs.alphabet()));
    rep.emit(std::cout, format);
    return 0;
  }
  if (algebra == "mre" || algebra == "mre:std:d=2") {
    RewriteSystem rs = RewriteSystem::from_relations(
        detail::matrix_alphabet("l", 2, false),
        mre_relations(preset_standard_d2(), Scalar::var(VH)));
    NCPoly p = rs.parse(op_expr) * rs.parse(on_expr);
    rep.info("normal form", rs.normal_form(p).str(rs.alphabet()));
    rep.emit(std::cout, format);
    return 0;
  }
  throw std::invalid_argument("unknown algebra preset: " + algebra);
}

int cmd_lb(const std::string& phi_expr, const std::string& rg_expr, int k,
           const std::string& apply_expr, const std::string& conv_name,
           int lattice, const std::string& format) {
  Report rep;
  rep.command = "lb --phi " + phi_expr +
                (rg_expr.empty() ? "" : " --rg " + rg_expr) + " --k " +
                std::to_string(k) +
                (apply_expr.empty() ? "" : " --apply " + apply_expr) +
                " --convention " + conv_name;
  classical::MetricProfile m{parse_scalar(phi_expr, {VR, VRG})};
  if (!rg_expr.empty()) m.phi = m.phi.subst(VRG, parse_scalar(rg_expr, {}));
  if (m.phi.is_zero()) throw std::invalid_argument("degenerate metric profile phi = 0");
  AlphaConvention conv = conv_name == "minus" ? AlphaConvention::RadiusMinus
                                              : AlphaConvention::DisplayPlus;
  rep.info("convention", convention_name(conv));
  InvariantQuantumOp op = lb_quantum(m, conv);
  rep.info("coeff dt^2", op.c_tt.str());
  rep.info("coeff Q^2", op.c_q2.str());
  rep.info("coeff Q", op.c_q.str());
  rep.info("coeff Q dt", op.c_qdt.str());
  rep.info("coeff Delta", op.c_delta.str());

  static SpectralMatrices s = spectral_matrices();
  DifferenceOperator d = difference_form(s, op, k);
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (auto& term : d.terms) {
    nlohmann::ordered_json e;
    e["coeff"] = term.coeff.str();
    e["dt"] = to_string(term.dt);
    e["dmu"] = to_string(term.dmu);
    terms.push_back(std::move(e));
  }
  rep.info("difference operator (shifts in units of h)", terms.dump());
  if (!apply_expr.empty()) {
    Scalar f = parse_scalar(apply_expr, {VT, VMU, VH});
    rep.info("image g_k(t,mu)", d.apply(f).str());
  }
  if (lattice > 0) {
    // stencil on a truncated lattice: t-grid step h/2, mu-grid step h;
    // (t, mu) in a weight stand for the window's base point
    Scalar h = Scalar::var(VH), t = Scalar::var(VT), mu = Scalar::var(VMU);
    Scalar half = Scalar::rational(BigRat(1, 2));
    nlohmann::ordered_json stencil = nlohmann::ordered_json::array();
    for (int i = 0; i < lattice; ++i)
      for (int j = 0; j < lattice; ++j) {
        Scalar ti = t + Scalar(i) * half * h;
        Scalar mj = mu + Scalar(j) * h;
        for (auto& term : d.terms) {
          BigRat ti2 = BigRat(i) + 2 * term.dt;
          BigRat tj = BigRat(j) + term.dmu;
          nlohmann::ordered_json e;
          e["from"] = {i, j};
          e["to"] = {to_string(ti2), to_string(tj)};
          e["weight"] = term.coeff.subst(VT, ti).subst(VMU, mj).str();
          stencil.push_back(std::move(e));
        }
      }
    rep.info("lattice stencil", stencil.dump());
  }
  rep.emit(std::cout, format);
  return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact braided-algebra calculus: braiding diagnostics, PBW "
               "rewriting, invariant-operator actions, quantized difference "
               "operators"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  int default_kmax = env_int("QWEYL_KMAX", 4);

  auto* vb = app.add_subcommand("verify-braiding", "full braiding diagnostic suite");
  vb->fallthrough();
  std::string vb_file, vb_preset = "flip:2", vb_q;
  int vb_kmax = default_kmax;
  vb->add_option("--file", vb_file, "R-matrix JSON file");
  vb->add_option("--preset", vb_preset, "flip:d | std:d=2 | superflip:1|1");
  vb->add_option("--q", vb_q, "Hecke parameter expression");
  vb->add_option("--kmax", vb_kmax, "degrees for the bi-rank computation");

  auto* ph = app.add_subcommand("ph-series", "Poincare-Hilbert series report");
  ph->fallthrough();
  std::string ph_file, ph_preset = "flip:2", ph_q;
  int ph_kmax = default_kmax;
  ph->add_option("--file", ph_file, "R-matrix JSON file");
  ph->add_option("--preset", ph_preset, "flip:d | std:d=2 | superflip:1|1");
  ph->add_option("--q", ph_q, "Hecke parameter expression");
  ph->add_option("--kmax", ph_kmax, "series truncation order");

  auto* act = app.add_subcommand("act", "apply an operator to an element");
  act->fallthrough();
  std::string act_algebra = "uu2", act_op, act_on;
  act->add_option("--algebra", act_algebra, "uu2 | weyl:P:m=N | ugl:N | re | mre");
  act->add_option("--op", act_op, "operator name or expression")->required();
  act->add_option("--on", act_on, "element expression, or \"f(t,mu) : k=N\"")
      ->required();

  auto* lb = app.add_subcommand("lb", "quantum Laplace-Beltrami difference operator");
  lb->fallthrough();
  std::string lb_phi = "1", lb_rg, lb_apply, lb_conv = "plus";
  int lb_k = 0, lb_lattice = 0;
  lb->add_option("--phi", lb_phi, "metric profile, rational in r (and rg)");
  lb->add_option("--rg", lb_rg, "optional value substituted for rg");
  lb->add_option("--k", lb_k, "isotypic component index");
  lb->add_option("--apply", lb_apply, "apply to a rational f(t,mu)");
  lb->add_option("--convention", lb_conv, "plus | minus (alpha sign convention)")
      ->check(CLI::IsMember({"plus", "minus"}));
  lb->add_option("--lattice", lb_lattice,
                 "dump the stencil on an N x N window of the (t, mu) lattice");

  auto started = std::chrono::steady_clock::now();
  int code = 2;
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int help_code = app.exit(e);
      return help_code == 0 ? 0 : 2;
    }
    if (vb->parsed())
      code = cmd_verify_braiding(vb_file, vb_preset, vb_q, vb_kmax, format);
    else if (ph->parsed())
      code = cmd_ph_series(ph_file, ph_preset, ph_q, ph_kmax, format);
    else if (act->parsed())
      code = cmd_act(act_algebra, act_op, act_on, format);
    else if (lb->parsed())
      code = cmd_lb(lb_phi, lb_rg, lb_k, lb_apply, lb_conv, lb_lattice, format);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  std::cerr << "elapsed_ms " << elapsed << "\n";
  return code;
}
