#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "sb/params.hpp"
#include "sb/sbo.hpp"
#include "suites.hpp"

namespace sb {

using ojson = nlohmann::ordered_json;

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11g", x);
  return buf;
}

ojson q_json(const Q& q) { return q.get_str(); }

ojson opt_long(const std::optional<long>& v) { return v ? ojson(*v) : ojson(nullptr); }

std::string value_str(const GammaMonomial& g) { return gm_is_zero(g) ? "0" : gm_str(g); }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

struct Common {
  int n = 0;
  std::string lambda, nu;
  std::string format = "json";
  std::string out_file;
};

void add_point_opts(CLI::App* c, Common& o, bool required = true) {
  auto* a = c->add_option("--n", o.n, "dimension n >= 2");
  auto* b = c->add_option("--lambda", o.lambda, "λ as p/q, integer or decimal");
  auto* d = c->add_option("--nu", o.nu, "ν as p/q, integer or decimal");
  if (required) {
    a->required();
    b->required();
    d->required();
  }
}

ojson point_json(const ParamPoint& p) {
  ojson j;
  j["n"] = p.n;
  if (p.exact) {
    j["lambda"] = q_json(p.lambda);
    j["nu"] = q_json(p.nu);
  } else {
    j["lambda"] =
        fmt_double(p.lambda_c.real()) + (p.lambda_c.imag() ? "+" + fmt_double(p.lambda_c.imag()) + "i" : "");
    j["nu"] = fmt_double(p.nu_c.real()) + (p.nu_c.imag() ? "+" + fmt_double(p.nu_c.imag()) + "i" : "");
  }
  j["exact"] = p.exact;
  return j;
}

int cmd_classify(const Common& o, std::ostream& out, std::ostream& err) {
  ParamPoint p = parse_point(o.n, o.lambda, o.nu);
  ojson j = point_json(p);
  if (p.exact) {
    RegionReport r = classify(p);
    j["in_slashslash"] = r.in_slashslash;
    j["k"] = opt_long(r.k);
    j["in_parallel"] = r.in_parallel;
    j["l"] = opt_long(r.l);
    j["in_X"] = r.in_X;
    j["in_Leven"] = r.in_Leven;
    j["in_Lodd"] = r.in_Lodd;
    j["in_Omega0"] = r.in_Omega0;
    j["in_Omega1"] = r.in_Omega1;
    j["in_Omega2"] = r.in_Omega2;
    j["octant"] = r.octant ? ojson(*r.octant) : ojson(nullptr);
    j["weyl_class"] = r.weyl_class;
  } else {
    err << "warning: floating-point parameters, lattice memberships are tri-state\n";
    NumericRegionReport r = classify_numeric(p);
    j["in_slashslash"] = tri_name(r.in_slashslash);
    j["in_parallel"] = tri_name(r.in_parallel);
    j["in_X"] = tri_name(r.in_X);
    j["in_Leven"] = tri_name(r.in_Leven);
    j["in_Lodd"] = tri_name(r.in_Lodd);
    j["in_Omega0"] = tri_name(r.in_Omega0);
    j["in_Omega1"] = tri_name(r.in_Omega1);
    j["in_Omega2"] = tri_name(r.in_Omega2);
    j["warning"] = "floating-point parameters: memberships reported as tri-state";
  }
  out << j.dump(2) << "\n";
  return kOk;
}

struct MultOpts {
  int i = -1, j = -1;
  std::string target;
};

int cmd_mult(const Common& o, const MultOpts& m, std::ostream& out) {
  ojson j;
  if (!m.target.empty()) {
    if (m.j < 0 || o.lambda.empty()) throw std::invalid_argument("--target needs --lambda and --j");
    if (m.target.size() != 1) throw std::invalid_argument("--target must be F or T");
    Scalar l = parse_scalar(o.lambda);
    if (!l.exact) throw std::invalid_argument("exact λ required");
    j["n"] = o.n;
    j["lambda"] = q_json(l.q);
    j["j"] = m.j;
    j["target"] = m.target;
    j["multiplicity"] = multiplicity_I_to_factor(o.n, l.q, m.j, m.target[0]);
  } else if (m.i >= 0 || m.j >= 0) {
    if (m.i < 0 || m.j < 0) throw std::invalid_argument("--i and --j go together");
    MultFactors f = multiplicity_factors(o.n, m.i, m.j);
    j["n"] = o.n;
    j["i"] = m.i;
    j["j"] = m.j;
    j["mTT"] = f.mTT;
    j["mTF"] = f.mTF;
    j["mFF"] = f.mFF;
  } else {
    if (o.lambda.empty() || o.nu.empty()) throw std::invalid_argument("mult needs --lambda and --nu");
    ParamPoint p = require_exact(parse_point(o.n, o.lambda, o.nu));
    j = point_json(p);
    j["multiplicity"] = multiplicity_principal(p);
    j["in_Leven"] = in_Leven(p);
  }
  out << j.dump(2) << "\n";
  return kOk;
}

ojson basis_json(const ParamPoint& p) {
  BasisReport b = basis_of_H(p);
  ojson j = point_json(p);
  j["dim_H"] = b.dim_H;
  j["dim_H_sing"] = b.dim_H_sing;
  j["dim_H_diff"] = b.dim_H_diff;
  ojson ks = ojson::array();
  for (Kind k : b.basis) ks.push_back(kind_name(k));
  j["basis"] = ks;
  return j;
}

int cmd_basis(const Common& o, std::ostream& out) {
  ParamPoint p = require_exact(parse_point(o.n, o.lambda, o.nu));
  out << basis_json(p).dump(2) << "\n";
  return kOk;
}

struct EvalOpts {
  std::string kind;
  bool spherical = false, kernel = false, image = false;
  std::vector<std::string> kfinite;
  std::string residue, functional;
};

void emit_value(const Common& o, ojson j, const std::string& s, double f, std::ostream& out) {
  if (o.format == "text") {
    out << "value: " << s << "\nfloat: " << fmt_double(f) << "\n";
    return;
  }
  j["str"] = s;
  j["float"] = fmt_double(f);
  out << j.dump(2) << "\n";
}

int cmd_eval(const Common& o, const EvalOpts& e, std::ostream& out) {
  ParamPoint p = require_exact(parse_point(o.n, o.lambda, o.nu));
  int modes =
      e.spherical + e.kernel + e.image + !e.kfinite.empty() + !e.residue.empty() + !e.functional.empty();
  if (modes > 1)
    throw std::invalid_argument(
        "choose one of --spherical, --kfinite, --kernel, --image, --residue, --functional");
  ojson j = point_json(p);
  if (!e.residue.empty() || !e.functional.empty()) {
    GammaMonomial g;
    if (!e.residue.empty()) {
      g = residue_constant(parse_residue(e.residue), p);
      j["residue"] = e.residue;
    } else {
      g = functional_constant(parse_functional(e.functional), p);
      j["functional"] = e.functional;
    }
    j["value"] = gm_json(g);
    emit_value(o, j, value_str(g), gm_eval_f64(g).real(), out);
    return kOk;
  }
  if (e.kind.empty()) throw std::invalid_argument("eval needs an operator kind");
  Kind k = parse_kind(e.kind);
  j["kind"] = kind_name(k);
  if (e.kernel) {
    KernelDescriptor d = kernel_descriptor(k, p);
    const char* forms[] = {"density", "delta_transverse", "delta_point"};
    j["form"] = forms[static_cast<int>(d.form)];
    j["normalization"] = gm_json(d.normalization);
    ojson cs = ojson::array();
    for (auto& [i, c] : d.coefficients) cs.push_back({i, q_json(c)});
    j["coefficients"] = cs;
    j["support"] = support_name(d.support);
    if (o.format == "text")
      out << "form: " << j["form"].get<std::string>() << "\nnormalization: " << value_str(d.normalization)
          << "\nsupport: " << support_name(d.support) << "\n";
    else
      out << j.dump(2) << "\n";
    return kOk;
  }
  if (e.image) {
    ImageClass c = image_of(k, p);
    j["image"] = c.str();
    j["spherical_in_kernel"] = spherical_in_kernel(k, p);
    if (o.format == "text")
      out << "image: " << c.str() << "\n";
    else
      out << j.dump(2) << "\n";
    return kOk;
  }
  if (!e.kfinite.empty()) {
    if (e.kfinite.size() != 2) throw std::invalid_argument("--kfinite takes N and h");
    int N = std::stoi(e.kfinite[0]);
    KFiniteVector v{N, parse_poly1(e.kfinite[1])};
    KFiniteValue r = kfinite_pairing(k, p, v);
    j["N"] = N;
    j["h"] = v.h.str();
    j["value"] = gs_json(r.value);
    emit_value(o, j, r.value.str(), r.value.eval_f64().real(), out);
    return kOk;
  }
  GammaMonomial g = spherical_action(k, p);
  j["value"] = gm_json(g);
  emit_value(o, j, value_str(g), gm_eval_f64(g).real(), out);
  return kOk;
}

struct CheckOpts {
  std::string suite;
  std::uint64_t seed = 1;
  double tol = -1;
};

int cmd_check(const Common& o, const CheckOpts& c, std::ostream& out) {
  SuiteOptions so{c.seed, c.tol};
  auto cases = run_suite(c.suite, so);
  int failed = 0;
  ojson arr = ojson::array();
  for (auto& r : cases) {
    failed += !r.pass;
    arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  if (o.format == "text") {
    for (auto& r : cases) out << (r.pass ? "PASS " : "FAIL ") << r.name << "  " << r.detail << "\n";
    out << c.suite << ": " << cases.size() - failed << " passed, " << failed << " failed\n";
  } else {
    ojson j;
    j["suite"] = c.suite;
    j["seed"] = c.seed;
    j["tol"] = c.tol > 0 ? ojson(fmt_double(c.tol)) : ojson("default");
    j["passed"] = static_cast<int>(cases.size()) - failed;
    j["failed"] = failed;
    j["cases"] = arr;
    out << j.dump(2) << "\n";
  }
  return failed ? kCheckFailed : kOk;
}

struct SweepOpts {
  std::string lrange, vrange, outputs = "region";
  int N = -1;
  bool schema = false;
};

std::pair<long, long> parse_range(const std::string& s) {
  auto c = s.find(':');
  if (c == std::string::npos) throw std::invalid_argument("range must be a:b, got " + s);
  long a, b;
  try {
    a = std::stol(s.substr(0, c));
    b = std::stol(s.substr(c + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("range must be integer a:b, got " + s);
  }
  if (a > b) throw std::invalid_argument("empty range " + s);
  if (a < -100 || b > 100) throw std::invalid_argument("sweep ranges are limited to [-100, 100]");
  return {a, b};
}

std::string region_label(const ParamPoint& p) {
  RegionReport r = classify(p);
  std::vector<std::string> t;
  if (r.in_slashslash) t.push_back("slashslash");
  if (r.in_parallel) t.push_back("parallel");
  if (r.in_X) t.push_back("X");
  if (r.in_Leven) t.push_back("L_even");
  if (r.in_Lodd) t.push_back("L_odd");
  if (nu_neg_int(p)) t.push_back("nu_neg_int");
  return t.empty() ? "generic" : join(t, "+");
}

std::string image_A_cell(const ParamPoint& p) {
  bool j_neg = nu_neg_int(p);
  bool j_pos = is_int(p.nu) && p.nu >= p.m();
  if (!j_neg && !j_pos) return "-";
  return image_of(Kind::A, p).str();
}

int cmd_sweep(const Common& o, const SweepOpts& s, std::ostream& out) {
  const auto& all = sweep_columns();
  if (s.schema) {
    out << "sweep schema v1\ncolumns: n,lambda,nu,"
        << join(std::vector<std::string>(all.begin() + 3, all.end()), ",")
        << "\nregion: '+'-joined memberships among slashslash, parallel, X, L_even, L_odd, nu_neg_int; or "
           "generic\n"
        << "mult: multiplicity of the principal series pair\nbasis: '+'-joined basis of H\n"
        << "octant: label or '-'\nimage_A: image class for ν ∈ -ℕ or ν ∈ n-1+ℕ, else '-'\n"
        << "support_A: support of the A kernel\nzero_A: 1 when every h of degree <= max(6, 2-λ-N) pairs to "
           "zero at K-type N\n";
    return kOk;
  }
  if (o.n < 2) throw std::invalid_argument("n must be at least 2");
  auto [l0, l1] = parse_range(s.lrange);
  auto [v0, v1] = parse_range(s.vrange);
  std::set<std::string> want;
  std::stringstream ss(s.outputs);
  for (std::string t; std::getline(ss, t, ',');) {
    if (std::find(all.begin() + 3, all.end(), t) == all.end())
      throw std::invalid_argument("unknown output column " + t);
    want.insert(t);
  }
  if (want.count("zero_A") && s.N < 0) throw std::invalid_argument("zero_A needs --N");
  if (want.count("zero_A") && s.N % 2) throw std::invalid_argument("--N must be even");
  std::vector<std::string> cols = {"n", "lambda", "nu"};
  for (size_t i = 3; i < all.size(); ++i)
    if (want.count(all[i])) cols.push_back(all[i]);
  std::vector<std::vector<std::string>> rows;
  for (long l = l0; l <= l1; ++l)
    for (long v = v0; v <= v1; ++v) {
      ParamPoint p = ParamPoint::make(o.n, l, v);
      std::vector<std::string> row = {std::to_string(o.n), std::to_string(l), std::to_string(v)};
      for (size_t i = 3; i < cols.size(); ++i) {
        const std::string& c = cols[i];
        if (c == "region") {
          row.push_back(region_label(p));
        } else if (c == "mult") {
          row.push_back(std::to_string(multiplicity_principal(p)));
        } else if (c == "basis") {
          std::vector<std::string> b;
          for (Kind k : basis_of_H(p).basis) b.push_back(kind_name(k));
          row.push_back(join(b, "+"));
        } else if (c == "octant") {
          auto oc = octant(p);
          row.push_back(oc ? *oc : "-");
        } else if (c == "image_A") {
          row.push_back(image_A_cell(p));
        } else if (c == "support_A") {
          row.push_back(support_name(kernel_descriptor(Kind::A, p).support));
        } else if (c == "zero_A") {
          row.push_back(kfinite_A_zero_upto(p, s.N, zn_degree_bound(p, s.N)) ? "1" : "0");
        }
      }
      rows.push_back(std::move(row));
    }
  if (o.format == "json") {
    ojson j;
    j["schema"] = "sweep/1";
    j["n"] = o.n;
    if (s.N >= 0) j["N"] = s.N;
    j["columns"] = cols;
    ojson arr = ojson::array();
    for (auto& r : rows) {
      ojson row;
      for (size_t i = 0; i < cols.size(); ++i) row[cols[i]] = r[i];
      arr.push_back(row);
    }
    j["rows"] = arr;
    out << j.dump(2) << "\n";
  } else {
    out << join(cols, ",") << "\n";
    for (auto& r : rows) out << join(r, ",") << "\n";
  }
  return kOk;
}

}  // namespace

ojson gm_json(const GammaMonomial& g) {
  ojson j;
  j["coeff"] = q_json(g.zero ? Q(0) : g.coeff);
  j["pi2"] = g.pi_half;
  j["two"] = q_json(g.two_frac);
  ojson a = ojson::array(), b = ojson::array();
  for (auto& x : g.num) a.push_back(q_json(x));
  for (auto& x : g.den) b.push_back(q_json(x));
  j["num"] = a;
  j["den"] = b;
  j["order"] = g.order;
  j["zero"] = gm_is_zero(g);
  return j;
}

ojson gs_json(const GammaSum& s) {
  ojson arr = ojson::array();
  for (auto& t : s.terms()) arr.push_back(gm_json(t));
  return arr;
}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> c = {"n",     "lambda", "nu",      "region",    "mult",
                                             "basis", "octant", "image_A", "support_A", "zero_A"};
  return c;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"symmetry breaking operators: classification, evaluation and checks", "sbtool"};
  app.require_subcommand(1);
  Common o;
  MultOpts mo;
  EvalOpts eo;
  CheckOpts co;
  SweepOpts so;
  std::function<int(std::ostream&)> action;

  std::string fmt_eval = "text", fmt_check = "json", fmt_sweep = "csv";
  auto fmt = [&](CLI::App* c, std::vector<std::string> allowed, std::string& target) {
    c->add_option("--format", target, "output format")->check(CLI::IsMember(allowed));
    c->add_option("--out", o.out_file, "write output to FILE");
  };

  auto* classify = app.add_subcommand("classify", "region memberships of (λ,ν)");
  add_point_opts(classify, o);
  classify->add_option("--out", o.out_file, "write output to FILE");
  classify->callback([&]() { action = [&](std::ostream& s) { return cmd_classify(o, s, err); }; });

  auto* mult = app.add_subcommand("mult", "multiplicities");
  add_point_opts(mult, o, false);
  mult->get_option("--n")->required();
  mult->add_option("--i", mo.i, "factor source index");
  mult->add_option("--j", mo.j, "factor target index");
  mult->add_option("--target", mo.target, "F or T, multiplicity of I(λ) into the factor of index j");
  mult->add_option("--out", o.out_file, "write output to FILE");
  mult->callback([&]() { action = [&](std::ostream& s) { return cmd_mult(o, mo, s); }; });

  auto* basis = app.add_subcommand("basis", "basis and dimensions of the operator space");
  add_point_opts(basis, o);
  basis->add_option("--out", o.out_file, "write output to FILE");
  basis->callback([&]() { action = [&](std::ostream& s) { return cmd_basis(o, s); }; });

  auto* eval = app.add_subcommand("eval", "evaluate an operator family");
  eval->add_option("kind,--kind", eo.kind, "A, AA, B, BB, C, KS_Gprime, KS_G");
  add_point_opts(eval, o);
  eval->add_flag("--spherical", eo.spherical, "action on the spherical vector (default)");
  eval->add_option("--kfinite", eo.kfinite, "N and comma-separated h coefficients, low degree first")
      ->expected(2);
  eval->add_flag("--kernel", eo.kernel, "kernel descriptor");
  eval->add_flag("--image", eo.image, "image class");
  eval->add_option("--residue", eo.residue, "B_of_A, C_of_A, C_of_B");
  eval->add_option("--functional", eo.functional,
                   "T_after_A, T_after_B, T_after_C_to_B, T_after_C_to_C, A_after_T_G, AA_after_T");
  fmt(eval, {"text", "json"}, fmt_eval);
  eval->callback([&]() {
    o.format = fmt_eval;
    action = [&](std::ostream& s) { return cmd_eval(o, eo, s); };
  });

  auto* check = app.add_subcommand("check", "run an identity-check suite");
  check->add_option("suite", co.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  check->add_option("--seed", co.seed, "RNG seed for sample points");
  check->add_option("--tol", co.tol, "numeric tolerance override");
  fmt(check, {"text", "json"}, fmt_check);
  check->callback([&]() {
    o.format = fmt_check;
    action = [&](std::ostream& s) { return cmd_check(o, co, s); };
  });

  auto* sweep = app.add_subcommand("sweep", "lattice sweep as CSV or JSON");
  sweep->add_option("--n", o.n, "dimension n >= 2");
  sweep->add_option("--lambda-range", so.lrange, "integer interval a:b");
  sweep->add_option("--nu-range", so.vrange, "integer interval a:b");
  sweep->add_option("--outputs", so.outputs, "comma-separated columns");
  sweep->add_option("--N", so.N, "K-type for zero_A");
  sweep->add_flag("--schema", so.schema, "print the column schema");
  fmt(sweep, {"csv", "json"}, fmt_sweep);
  sweep->callback([&]() {
    o.format = fmt_sweep;
    if (!so.schema && (o.n == 0 || so.lrange.empty() || so.vrange.empty()))
      throw CLI::ValidationError("sweep needs --n, --lambda-range and --nu-range");
    action = [&](std::ostream& s) { return cmd_sweep(o, so, s); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  try {
    std::ostringstream buf;
    int rc = action(buf);
    if (o.out_file.empty()) {
      out << buf.str();
    } else {
      std::ofstream f(o.out_file, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot open " + o.out_file);
      f << buf.str();
    }
    return rc;
  } catch (const domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sb
