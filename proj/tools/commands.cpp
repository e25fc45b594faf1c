#include "commands.hpp"

#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include "criteria.hpp"
#include "fwcs/coherent_states.hpp"
#include "fwcs/continuous_spectrum.hpp"
#include "fwcs/foxwright.hpp"
#include "fwcs/foxwright_bicomplex.hpp"
#include "fwcs/hfunction.hpp"
#include "fwcs/params_io.hpp"
#include "output.hpp"

namespace cli {

using fwcs::Complex;
using nlohmann::json;

namespace {

void emit(const std::string& text) { std::cout << text << std::flush; }

void emit_json(const json& j) { emit(j.dump(2) + "\n"); }

std::string sign_name(fwcs::Sign s) {
  switch (s) {
    case fwcs::Sign::Negative: return "<";
    case fwcs::Sign::Zero: return "=";
    default: return ">";
  }
}

// "a..b" or a single integer.
std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const long k = std::stol(text);
      return {k, k};
    }
    return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw fwcs::ValidationError("cannot parse range '" + text + "' (expected a..b or an integer)");
  }
}

struct CheckRow {
  std::string name;
  double value;
  double tolerance;
  bool pass() const { return value <= tolerance; }
};

std::string check_table(const std::vector<CheckRow>& rows) {
  std::ostringstream os;
  os << "check,value,tolerance,pass\n";
  for (const auto& r : rows) {
    os << r.name << "," << num(r.value) << "," << num(r.tolerance) << "," << (r.pass() ? "true" : "false") << "\n";
  }
  return os.str();
}

// Random coherent model for `cs verify` without --model.
fwcs::FWParams random_model(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ab(0.5, 3.0);
  std::uniform_real_distribution<double> w(0.5, 2.0);
  std::uniform_int_distribution<int> count(0, 2);
  for (;;) {
    fwcs::FWParams p;
    const int np = count(rng);
    const int nq = count(rng);
    for (int i = 0; i < np; ++i) p.upper.push_back({ab(rng), w(rng)});
    for (int i = 0; i < nq; ++i) p.lower.push_back({ab(rng), w(rng)});
    if (fwcs::margin(p) >= 0.2) return p;
  }
}

}  // namespace

void register_fw(CLI::App& app, int& exit_code) {
  auto* fw = app.add_subcommand("fw", "Fox-Wright function pPsiq");
  fw->require_subcommand(1);

  struct EvalArgs {
    std::string params;
    std::string z;
    double tol = 1e-14;
    int max_terms = 10000;
    bool boundary = false;
  };
  auto ea = std::make_shared<EvalArgs>();
  auto* ev = fw->add_subcommand("eval", "evaluate the series at a complex point");
  ev->add_option("--params", ea->params, "parameter JSON file")->required();
  ev->add_option("--z", ea->z, "argument re,im")->required();
  ev->add_option("--tol", ea->tol, "relative stopping tolerance");
  ev->add_option("--max-terms", ea->max_terms, "term budget");
  ev->add_flag("--allow-boundary", ea->boundary, "evaluate on |z| = radius when absolutely convergent");
  ev->callback([ea, &exit_code] {
    const fwcs::FWParams p = fwcs::load_fw_params(ea->params);
    fwcs::EvalOptions opts;
    opts.tol = ea->tol;
    opts.max_terms = ea->max_terms;
    opts.allow_boundary = ea->boundary;
    const fwcs::EvalResult r = fwcs::eval(p, fwcs::parse_complex(ea->z), opts);
    emit_json({{"value", json_complex(r.value)}, {"terms", r.terms_used}, {"tail_bound", r.tail_bound}});
    exit_code = kExitOk;
  });

  auto params = std::make_shared<std::string>();
  auto* rad = fw->add_subcommand("radius", "convergence margin and radius");
  rad->add_option("--params", *params, "parameter JSON file")->required();
  rad->callback([params, &exit_code] {
    const fwcs::FWParams p = fwcs::load_fw_params(*params);
    json j = {{"margin", fwcs::margin(p)}, {"radius", json_real(fwcs::radius(p))}};
    if (fwcs::margin(p) >= -fwcs::kMarginTolerance && std::isfinite(fwcs::radius(p))) {
      j["boundary_exponent"] = json_complex(fwcs::boundary_exponent(p));
    }
    emit_json(j);
    exit_code = kExitOk;
  });
}

void register_bcfw(CLI::App& app, int& exit_code) {
  auto* bc = app.add_subcommand("bcfw", "bicomplex Fox-Wright function");
  bc->require_subcommand(1);

  auto cls_params = std::make_shared<std::string>();
  auto* cls = bc->add_subcommand("classify", "nine-case convergence classification");
  cls->add_option("--params", *cls_params, "bicomplex parameter JSON file")->required();
  cls->callback([cls_params, &exit_code] {
    const fwcs::ConvergenceReport r = fwcs::classify(fwcs::load_bc_params(*cls_params));
    emit_json({{"domain", fwcs::to_string(r.domain)},
               {"case", fwcs::case_label(r.domain)},
               {"upsilon", fwcs::to_json(r.upsilon)},
               {"signs", {sign_name(r.signs[0]), sign_name(r.signs[1])}},
               {"v_scale", fwcs::to_json(r.v_scale)},
               {"radius", {json_real(r.radius[0]), json_real(r.radius[1])}},
               {"lambda_idempotent", {json_complex(r.lambda_idem[0]), json_complex(r.lambda_idem[1])}},
               {"lambda_cartesian", {json_complex(r.lambda_cart[0]), json_complex(r.lambda_cart[1])}},
               {"boundary_abs_convergent", r.boundary_abs_convergent}});
    exit_code = kExitOk;
  });

  struct EvalArgs {
    std::string params, z1, z2;
    double tol = 1e-14;
    int max_terms = 10000;
    bool boundary = false;
  };
  auto ea = std::make_shared<EvalArgs>();
  auto* ev = bc->add_subcommand("eval", "evaluate at Z = z1 e1 + z2 e2");
  ev->add_option("--params", ea->params, "bicomplex parameter JSON file")->required();
  ev->add_option("--z1", ea->z1, "idempotent component 1, re,im")->required();
  ev->add_option("--z2", ea->z2, "idempotent component 2, re,im")->required();
  ev->add_option("--tol", ea->tol, "relative stopping tolerance");
  ev->add_option("--max-terms", ea->max_terms, "term budget per component");
  ev->add_flag("--allow-boundary", ea->boundary, "allow the hyperbolic-ball boundary");
  ev->callback([ea, &exit_code] {
    const fwcs::BCFWParams p = fwcs::load_bc_params(ea->params);
    fwcs::EvalOptions opts;
    opts.tol = ea->tol;
    opts.max_terms = ea->max_terms;
    opts.allow_boundary = ea->boundary;
    const fwcs::Bicomplex z(fwcs::parse_complex(ea->z1), fwcs::parse_complex(ea->z2));
    const fwcs::BCEvalResult r = fwcs::eval(p, z, opts);
    emit_json({{"value", fwcs::to_json(r.value)},
               {"terms", {r.components[0].terms_used, r.components[1].terms_used}},
               {"tail_bound", {r.components[0].tail_bound, r.components[1].tail_bound}}});
    exit_code = kExitOk;
  });

  struct RegionArgs {
    std::string params;
    int n1 = 41, n2 = 41;
    double z1_max = 0.0, z2_max = 0.0;
  };
  auto ra = std::make_shared<RegionArgs>();
  auto* reg = bc->add_subcommand("region", "sample the convergence region on a modulus grid (CSV)");
  reg->add_option("--params", ra->params, "bicomplex parameter JSON file")->required();
  reg->add_option("--n1", ra->n1, "probes along |z1|");
  reg->add_option("--n2", ra->n2, "probes along |z2|");
  reg->add_option("--z1-max", ra->z1_max, "largest |z1| (default 1.5 x radius)");
  reg->add_option("--z2-max", ra->z2_max, "largest |z2| (default 1.5 x radius)");
  reg->callback([ra, &exit_code] {
    const fwcs::BCFWParams p = fwcs::load_bc_params(ra->params);
    const fwcs::ConvergenceReport report = fwcs::classify(p);
    fwcs::GridSpec grid = fwcs::default_grid(report, ra->n1, ra->n2);
    if (ra->z1_max > 0.0) grid.z1_max = ra->z1_max;
    if (ra->z2_max > 0.0) grid.z2_max = ra->z2_max;
    if (grid.n1 < 1 || grid.n2 < 1) throw fwcs::ValidationError("grid needs at least one probe per axis");
    // One row of the grid per task; rows are printed in index order.
    std::vector<std::string> rows(static_cast<std::size_t>(grid.n1));
    auto coord = [](int i, int n, double max) { return n == 1 ? 0.0 : max * i / (n - 1); };
    parallel_for(rows.size(), [&](std::size_t i) {
      const double r1 = coord(int(i), grid.n1, grid.z1_max);
      std::string out;
      for (int j = 0; j < grid.n2; ++j) {
        const double r2 = coord(j, grid.n2, grid.z2_max);
        const bool inside = fwcs::membership(report, r1, r2).inside;
        out += num(r1) + "," + num(r2) + "," + (inside ? "true" : "false") + "\n";
      }
      rows[i] = std::move(out);
    });
    std::string text = "z1_abs,z2_abs,inside\n";
    for (const auto& r : rows) text += r;
    emit(text);
    exit_code = kExitOk;
  });
}

void register_cs(CLI::App& app, int& exit_code) {
  auto* cs = app.add_subcommand("cs", "Fox-Wright coherent states");
  cs->require_subcommand(1);

  struct CoeffArgs {
    std::string model, z;
    double tail = 1e-12;
  };
  auto ca = std::make_shared<CoeffArgs>();
  auto* co = cs->add_subcommand("coeffs", "state coefficients c_k");
  co->add_option("--model", ca->model, "model JSON file")->required();
  co->add_option("--z", ca->z, "label re,im")->required();
  co->add_option("--tail", ca->tail, "discarded probability target");
  co->callback([ca, &exit_code] {
    const fwcs::CoherentModel m(fwcs::load_fw_params(ca->model));
    fwcs::StateOptions opts;
    opts.tail_target = ca->tail;
    const Complex z = fwcs::parse_complex(ca->z);
    const fwcs::StateVector s = fwcs::make_state(m, z, opts);
    json coeffs = json::array();
    for (const auto& c : s.coeffs) coeffs.push_back(json_complex(c));
    emit_json({{"z", json_complex(z)}, {"coeffs", coeffs}, {"tail", s.tail_mass}});
    exit_code = kExitOk;
  });

  struct OverlapArgs {
    std::string model, z;
    std::vector<std::string> zp;
  };
  auto oa = std::make_shared<OverlapArgs>();
  auto* ov = cs->add_subcommand("overlap", "overlaps <z|z'> (CSV)");
  ov->add_option("--model", oa->model, "model JSON file")->required();
  ov->add_option("--z", oa->z, "first label re,im")->required();
  ov->add_option("--zp", oa->zp, "second labels re,im (repeatable)")->required();
  ov->callback([oa, &exit_code] {
    const fwcs::CoherentModel m(fwcs::load_fw_params(oa->model));
    const Complex z = fwcs::parse_complex(oa->z);
    std::string text = "z_re,z_im,zp_re,zp_im,re,im,abs\n";
    for (const auto& s : oa->zp) {
      const Complex zp = fwcs::parse_complex(s);
      const Complex o = fwcs::overlap(m, z, zp);
      text += num(z.real()) + "," + num(z.imag()) + "," + num(zp.real()) + "," + num(zp.imag()) + "," +
              num(o.real()) + "," + num(o.imag()) + "," + num(std::abs(o)) + "\n";
    }
    emit(text);
    exit_code = kExitOk;
  });

  struct VerifyArgs {
    std::string model;
    std::uint64_t seed = 1;
    int points = 8;
  };
  auto va = std::make_shared<VerifyArgs>();
  auto* ve = cs->add_subcommand("verify", "recurrence, normalization and eigenstate checks");
  ve->add_option("--model", va->model, "model JSON file (default: random model from --seed)");
  ve->add_option("--seed", va->seed, "seed for the model and the sample labels");
  ve->add_option("--points", va->points, "number of random labels with |z| <= 2");
  ve->callback([va, &exit_code] {
    std::mt19937_64 rng(va->seed);
    const fwcs::FWParams p = va->model.empty() ? random_model(rng) : fwcs::load_fw_params(va->model);
    const fwcs::CoherentModel m(p);
    double rec = 0.0;
    for (long k = 0; k <= 100; ++k) {
      const double lhs = fwcs::log_rho(m, double(k + 1));
      const double rhs = fwcs::log_rho(m, double(k)) + 2.0 * std::log(fwcs::f_factor(m, k));
      rec = std::max(rec, std::abs(std::expm1(lhs - rhs)));
    }
    std::uniform_real_distribution<double> mod(0.0, 2.0);
    std::uniform_real_distribution<double> arg(-3.14159265358979, 3.14159265358979);
    double self = 0.0;
    double mass = 0.0;
    double resid = 0.0;
    for (int i = 0; i < va->points; ++i) {
      const Complex z = std::polar(mod(rng), arg(rng));
      self = std::max(self, std::abs(fwcs::overlap(m, z, z) - 1.0));
      const fwcs::StateVector s = fwcs::make_state(m, z);
      double total = s.tail_mass;
      for (double w : fwcs::photon_distribution(s)) total += w;
      mass = std::max(mass, std::abs(total - 1.0));
      resid = std::max(resid, fwcs::annihilation_residual(m, s));
    }
    const std::vector<CheckRow> rows = {{"recurrence", rec, 1e-11},
                                        {"self_overlap", self, 1e-10},
                                        {"probability_mass", mass, 1e-10},
                                        {"annihilation_residual", resid, 1e-8}};
    std::string text = "model," + fwcs::to_json(p).dump() + "\n";
    text += check_table(rows);
    emit(text);
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.pass();
    exit_code = ok ? kExitOk : kExitVerification;
  });
}

void register_nu(CLI::App& app, int& exit_code) {
  auto* nu = app.add_subcommand("nu", "continuous-spectrum nu-function");
  nu->require_subcommand(1);
  struct NuArgs {
    std::string model;
    double zeta = 0.0;
    std::string scheme = "gk";
    double rel_tol = 1e-12;
    bool compare = false;
  };
  auto na = std::make_shared<NuArgs>();
  auto* ev = nu->add_subcommand("eval", "nu(zeta) by quadrature (JSON)");
  ev->add_option("--model", na->model, "model JSON file")->required();
  ev->add_option("--zeta", na->zeta, "argument zeta >= 0")->required();
  ev->add_option("--scheme", na->scheme, "quadrature: gk or ts");
  ev->add_option("--rel-tol", na->rel_tol, "quadrature relative tolerance");
  ev->add_flag("--compare", na->compare, "also run the other scheme and report agreement to 1e-8");
  ev->callback([na, &exit_code] {
    const fwcs::CoherentModel m(fwcs::load_fw_params(na->model));
    fwcs::QuadConfig cfg;
    cfg.rel_tol = na->rel_tol;
    const fwcs::QuadScheme scheme = fwcs::parse_scheme(na->scheme);
    const fwcs::NuResult r = fwcs::nu(m, na->zeta, cfg, scheme);
    json j = {{"value", r.value}, {"err_est", r.err_est}, {"scheme", fwcs::to_string(r.scheme)}};
    exit_code = kExitOk;
    if (na->compare) {
      const auto other_scheme =
          scheme == fwcs::QuadScheme::GaussKronrod ? fwcs::QuadScheme::TanhSinh : fwcs::QuadScheme::GaussKronrod;
      const fwcs::NuResult o = fwcs::nu(m, na->zeta, cfg, other_scheme);
      const double diff = std::abs(o.value - r.value) / std::max(std::abs(r.value), 1e-300);
      const bool agree = r.value == o.value || diff <= 1e-8;
      j["other_value"] = o.value;
      j["other_scheme"] = fwcs::to_string(other_scheme);
      j["agree"] = agree;
      if (!agree) exit_code = kExitVerification;
    }
    emit_json(j);
  });
}

void register_measure(CLI::App& app, int& exit_code) {
  auto* me = app.add_subcommand("measure", "resolution-of-unity measure");
  me->require_subcommand(1);
  struct MeasureArgs {
    std::string model;
    std::string k = "0..6";
    double tol = 1e-5;
  };
  auto ma = std::make_shared<MeasureArgs>();
  auto* ch = me->add_subcommand("check", "moment identity table (CSV)");
  ch->add_option("--model", ma->model, "model JSON file")->required();
  ch->add_option("--k", ma->k, "moment orders a..b");
  ch->add_option("--tol", ma->tol, "pass threshold on rel_err");
  ch->callback([ma, &exit_code] {
    const fwcs::CoherentModel m(fwcs::load_fw_params(ma->model));
    const auto [k0, k1] = parse_range(ma->k);
    if (k0 < 0 || k1 < k0) throw fwcs::ValidationError("moment orders need 0 <= a <= b");
    std::vector<fwcs::MomentCheck> rows(static_cast<std::size_t>(k1 - k0 + 1));
    const fwcs::QuadConfig cfg = fwcs::moment_quad_config();
    parallel_for(rows.size(), [&](std::size_t i) { rows[i] = fwcs::moment_check(m, k0 + long(i), cfg); });
    std::string text = "k,lhs,rhs,rel_err,pass\n";
    bool ok = true;
    for (const auto& r : rows) {
      const bool pass = r.rel_err <= ma->tol;
      ok = ok && pass;
      text += std::to_string(r.k) + "," + num(r.lhs) + "," + num(r.rhs) + "," + num(r.rel_err) + "," +
              (pass ? "true" : "false") + "\n";
    }
    emit(text);
    exit_code = ok ? kExitOk : kExitVerification;
  });
}

void register_selftest(CLI::App& app, int& exit_code) {
  auto seed = std::make_shared<std::uint64_t>(20240601);
  auto* st = app.add_subcommand("selftest", "run the acceptance suite");
  st->add_option("--seed", *seed, "seed for the randomized criteria");
  st->callback([seed, &exit_code] {
    const auto results = acceptance::run_all(*seed);
    double total = 0.0;
    std::string text;
    const acceptance::CriterionResult* first_fail = nullptr;
    for (const auto& r : results) {
      text += acceptance::format_line(r) + "\n";
      if (r.id != 9) total += r.seconds;
      if (!r.pass && first_fail == nullptr) first_fail = &r;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", total);
    text += std::string("criteria time ") + buf + " s\n";
    emit(text);
    if (first_fail != nullptr) {
      std::cerr << "selftest failed: criterion " << first_fail->id << " (" << first_fail->name << ")\n";
      exit_code = kExitVerification;
    } else {
      exit_code = kExitOk;
    }
  });
}

}  // namespace cli
