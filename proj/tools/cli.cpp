#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "syzcx/complexity.hpp"
#include "syzcx/curvature.hpp"
#include "syzcx/error.hpp"
#include "syzcx/oracle.hpp"
#include "syzcx/parser.hpp"
#include "syzcx/serialize.hpp"

namespace syzcx::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::usage, "io_error", "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Loaded {
  AlgebraSpec spec;
  MonomialAlgebra algebra;
};

Loaded load(const std::string& path) {
  AlgebraSpec spec = parse_algebra(read_file(path));
  MonomialAlgebra a = validate_admissible(spec);
  return {std::move(spec), std::move(a)};
}

ModuleExpr named_module(const Loaded& l, const std::string& name) {
  const ModuleDef* def = l.spec.find_module(name);
  if (!def) throw Error(ErrorKind::usage, "unknown_module", "no module named '" + name + "'");
  return module_expr(*def, l.algebra);
}

std::vector<BigInt> parse_integer_list(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    BigInt v;
    if (item.empty() || v.set_str(item[0] == '+' ? item.substr(1) : item, 10) != 0)
      throw Error(ErrorKind::parse, "bad_coefficients", "cannot read coefficient list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorKind::parse, "bad_coefficients", "empty coefficient list");
  return out;
}

IntPolynomial parse_poly(const std::string& text) { return IntPolynomial(parse_integer_list(text)); }

/// Bases a bare decimal may refer to.
std::vector<AlgebraicReal> decimal_bases() {
  std::vector<AlgebraicReal> out;
  for (const auto& p : {IntPolynomial{-1, -1, 1}, IntPolynomial{1, -3, 1}, IntPolynomial{-2, 0, 1},
                        IntPolynomial{-1, 0, -1, 0, 1}, IntPolynomial{-1, -2, 1}})
    out.push_back(*largest_real_root(p));
  return out;
}

/// "0", "<base>^n", "<base>^n*n^<l>"; base is an integer, "[c0,c1,...]" or a decimal.
ComplexityClass parse_class(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  auto fail = [&](const std::string& why) -> ComplexityClass {
    throw Error(ErrorKind::parse, "bad_class", "cannot read class '" + raw + "': " + why);
  };
  if (text == "0" || text == "[0]") return ComplexityClass::zero(0);
  auto hat = text.find("^n");
  if (hat == std::string::npos) return fail("expected <base>^n[*n^<degree>]");
  std::string base = text.substr(0, hat), rest = text.substr(hat + 2);
  int degree = 0;
  if (!rest.empty()) {
    if (rest.rfind("*n^", 0) != 0) return fail("expected *n^<degree>");
    std::string d = rest.substr(3);
    if (d.empty() || d.size() > 6 || !std::all_of(d.begin(), d.end(), [](unsigned char c) { return std::isdigit(c); }))
      return fail("bad degree");
    degree = std::stoi(d);
  }
  AlgebraicReal b;
  if (!base.empty() && base.front() == '[' && base.back() == ']') {
    auto root = largest_real_root(parse_poly(base.substr(1, base.size() - 2)));
    if (!root) return fail("the polynomial has no real root");
    b = *root;
  } else if (base.find('.') != std::string::npos) {
    Rational d = parse_rational(base);
    bool found = false;
    for (const auto& r : decimal_bases())
      if (abs(Rational(d - (r.lo() + r.hi()) / 2)) < Rational(1, 1000000000)) {
        b = r;
        found = true;
        break;
      }
    if (!found) {
      Rational rounded = d;
      if (d.get_den() != 1) return fail("decimal bases must match a known base; give the polynomial as [c0,c1,...]");
      b = AlgebraicReal::from_integer(rounded.get_num());
    }
  } else {
    BigInt n;
    if (base.empty() || n.set_str(base, 10) != 0) return fail("bad base");
    b = AlgebraicReal::from_integer(n);
  }
  if (b.is_zero()) return ComplexityClass::zero(0);
  if (compare(b, Rational(1)) < 0)
    throw Error(ErrorKind::precondition, "base_below_one", "poly-exponential bases must be at least 1");
  return ComplexityClass::polyexp(b, degree);
}

std::string alperin_carlson_note(const ComplexityClass& c) {
  if (c.is_zero() || compare(c.base(), Rational(1)) != 0) return "";
  return "curvature one: growth is polynomial of degree " + std::to_string(c.degree()) +
         ", i.e. Alperin-Carlson complexity " + std::to_string(c.degree() + 1) + " (reported, not computed)";
}

int cmd_validate(const std::string& file, std::ostream& out) {
  Loaded l = load(file);
  Json modules = Json::array();
  for (const auto& m : l.spec.modules) modules.push_back(m.name);
  out << dump(Json{{"algebra", l.spec.name},
                   {"vertices", l.algebra.quiver().vertex_count()},
                   {"arrows", l.algebra.quiver().arrow_count()},
                   {"relations", l.algebra.relations().size()},
                   {"max_relation_length", l.algebra.max_relation_length()},
                   {"dimension", l.algebra.dimension()},
                   {"modules", modules}});
  return 0;
}

int cmd_paths(const std::string& file, std::ostream& out) {
  Loaded l = load(file);
  Json paths = Json::array();
  for (const auto& p : l.algebra.nonzero_paths()) paths.push_back(path_string(l.algebra.quiver(), p));
  out << dump(Json{{"dimension", l.algebra.dimension()}, {"paths", paths}});
  return 0;
}

int cmd_syzquiver(const std::string& file, const std::string& module, bool dot, std::ostream& out) {
  Loaded l = load(file);
  BuiltQuiver b = build_syzygy_quiver(named_module(l, module), l.algebra);
  if (dot)
    out << to_dot(b.quiver, l.algebra.quiver());
  else
    out << dump(to_json(b.quiver, l.algebra.quiver()));
  return 0;
}

int cmd_complexity(const std::string& file, const std::string& module, std::ostream& out) {
  Loaded l = load(file);
  ComplexityReport r = module_complexity(l.algebra, named_module(l, module));
  Json j = class_result_json(r.cls, false);
  Json starts = Json::array(), classes = Json::array();
  for (std::size_t i = 0; i < r.built.starts.size(); ++i) {
    starts.push_back(quiver_vertex_id(r.built.starts[i].vertex));
    classes.push_back(to_json(r.start_classes[i]));
  }
  Json report{{"quiver", to_json(r.built.quiver, l.algebra.quiver())},
              {"components", to_json(r.condensation)},
              {"start_vertices", starts},
              {"start_classes", classes},
              {"projective_summands", !r.built.projective_part.empty()}};
  if (auto note = alperin_carlson_note(r.cls); !note.empty()) report["note"] = note;
  j["report"] = report;
  out << dump(j);
  return 0;
}

int cmd_lower_bound(const std::string& file, const std::string& partial, const std::string& vertex, std::ostream& out) {
  Loaded l = load(file);
  Json pj;
  try {
    pj = Json::parse(read_file(partial));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::parse, "bad_quiver_json", e.what());
  }
  std::map<std::string, int> ids;
  SyzygyQuiver q = quiver_from_json(pj, l.algebra.quiver(), &ids);
  q.partial = true;
  auto it = ids.find(vertex);
  if (it == ids.end()) throw Error(ErrorKind::usage, "unknown_vertex", "no quiver vertex '" + vertex + "'");
  out << dump(class_result_json(lower_bound_from_partial(q, l.algebra, it->second), true));
  return 0;
}

int cmd_curvature_check(const std::string& coeffs, bool assume, std::ostream& out) {
  out << dump(to_json(check_condition_c(parse_poly(coeffs), assume)));
  return 0;
}

int cmd_curvature_combine(const std::string& op, const std::string& a, const std::string& b, std::ostream& out) {
  IntPolynomial p = parse_poly(a), r;
  if (op == "root") {
    BigInt ell;
    if (ell.set_str(b, 10) != 0 || !ell.fits_sint_p())
      throw Error(ErrorKind::parse, "bad_root_index", "cannot read root index '" + b + "'");
    r = closure_combine(p, IntPolynomial{}, ClosureOp::root, static_cast<int>(ell.get_si()));
  } else {
    r = closure_combine(p, parse_poly(b), op == "sum" ? ClosureOp::sum : ClosureOp::product);
  }
  out << dump(Json{{"op", op}, {"poly", coefficients_json(r)}, {"text", r.to_string()}});
  return 0;
}

std::string quiver_text(const std::string& name, const Quiver& q) {
  std::string s = "algebra " + name + "\n";
  for (const auto& v : q.vertices()) s += "vertex " + v + "\n";
  for (const auto& a : q.arrows()) s += "arrow " + a.id + " : " + q.vertex(a.source) + " -> " + q.vertex(a.target) + "\n";
  return s;
}

int cmd_curvature_realize(const std::string& coeffs, std::ostream& out) {
  Quiver q = realize_companion(parse_integer_list(coeffs));
  IntMatrix adj = adjacency_matrix(q.vertex_count(), arrow_pairs(q));
  out << "# characteristic polynomial: " << char_poly(adj).to_string() << "\n";
  out << "# perron root: " << perron_root(adj).approx() << "\n";
  out << quiver_text("companion", q);
  return 0;
}

int cmd_realize_class(const std::string& file, int ell, std::ostream& out) {
  AlgebraSpec spec = parse_algebra(read_file(file));
  out << realize_class(spec.quiver, ell).algebra_text;
  return 0;
}

int cmd_convolve(const std::string& a, const std::string& b, std::ostream& out) {
  out << dump(Json{{"class", to_json(convolve(parse_class(a), parse_class(b)))}});
  return 0;
}

int cmd_oracle_dims(const std::string& file, const std::string& builtin, const std::string& module, int n,
                    std::ostream& out, std::ostream& err) {
  const std::uint32_t prime = kOraclePrimes[0];
  DimSequenceResult r;
  std::size_t cap = default_dim_cap();
  if (!builtin.empty()) {
    auto table = builtin_table(builtin);
    if (!table) throw Error(ErrorKind::usage, "unknown_builtin", "no built-in algebra '" + builtin + "'");
    if (!module.empty() && module != "k")
      throw Error(ErrorKind::usage, "unknown_module", "built-in algebras provide the simple module 'k' only");
    r = dim_sequence(simple_rep(*table, 0, prime), *table, n, cap);
  } else {
    Loaded l = load(file);
    r = dim_sequence(rep_of(named_module(l, module), l.algebra, prime), table_of(l.algebra), n, cap);
  }
  out << dump(Json{{"dims", r.dims}, {"capped", r.capped}, {"prime", prime}});
  if (r.capped) {
    err << "error: dimension_cap_exceeded: the next syzygy exceeds " << cap << " (set SYZCX_DIM_CAP to raise it)\n";
    return exit_code(ErrorKind::precondition);
  }
  return 0;
}

int cmd_oracle_crosscheck(const std::string& file, const std::string& module, int n, std::ostream& out,
                          std::ostream& err) {
  Loaded l = load(file);
  std::size_t cap = default_dim_cap();
  CrosscheckReport r = crosscheck(l.algebra, named_module(l, module), n, cap);
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    rows.push_back(Json{{"n", i}, {"oracle", r.rows[i].oracle}, {"quiver", integer_json(r.rows[i].quiver)}, {"equal", r.rows[i].equal}});
  out << dump(Json{{"rows", rows}, {"agree", !r.first_mismatch.has_value()}, {"capped", r.capped}, {"primes", kOraclePrimes}});
  if (r.first_mismatch) {
    err << "error: crosscheck_mismatch: first discrepancy at n = " << *r.first_mismatch << "\n";
    return exit_code(ErrorKind::internal);
  }
  if (r.capped) {
    err << "error: dimension_cap_exceeded: the next syzygy exceeds " << cap << " (set SYZCX_DIM_CAP to raise it)\n";
    return exit_code(ErrorKind::precondition);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Syzygy complexity toolkit for monomial path algebras", "syzcx"};
  app.require_subcommand(1);

  std::string file, module, partial, vertex, coeffs, coeffs2, op, quiver, builtin, class_a, class_b;
  bool dot = false, json = false, assume = false;
  int ell = 0, n = 0;

  auto* validate = app.add_subcommand("validate", "Check an algebra file and report its size");
  validate->add_option("file", file, "Algebra file")->required();

  auto* paths = app.add_subcommand("paths", "List the nonzero paths (a basis of the algebra)");
  paths->add_option("file", file, "Algebra file")->required();

  auto* syzq = app.add_subcommand("syzquiver", "Build the syzygy quiver of a module");
  syzq->add_option("file", file, "Algebra file")->required();
  syzq->add_option("--module", module, "Module name")->required();
  auto* dot_flag = syzq->add_flag("--dot", dot, "Graphviz output");
  syzq->add_flag("--json", json, "JSON output (default)")->excludes(dot_flag);

  auto* cx = app.add_subcommand("complexity", "Complexity class and curvature of a module");
  cx->add_option("file", file, "Algebra file")->required();
  cx->add_option("--module", module, "Module name")->required();

  auto* lb = app.add_subcommand("lower-bound", "Certified lower bound from a partial syzygy quiver");
  lb->add_option("file", file, "Algebra file")->required();
  lb->add_option("--partial", partial, "Partial quiver (JSON)")->required();
  lb->add_option("--vertex", vertex, "Quiver vertex id")->required();

  auto* curv = app.add_subcommand("curvature", "Realizable curvatures");
  curv->require_subcommand(1);
  auto* check = curv->add_subcommand("check", "Decide whether a polynomial's dominant root is a realizable curvature");
  check->add_option("coeffs", coeffs, "Coefficients, ascending, comma separated")->required();
  check->add_flag("--assume-irreducible", assume, "Treat the squarefree part as irreducible");
  auto* combine = curv->add_subcommand("combine", "Polynomial for a sum, product or root of curvatures");
  combine->add_option("--op", op, "sum, product or root")->required()->check(CLI::IsMember({"sum", "product", "root"}));
  combine->add_option("coeffs", coeffs, "First polynomial")->required();
  combine->add_option("other", coeffs2, "Second polynomial, or the root index")->required();
  auto* realize = curv->add_subcommand("realize", "Strongly connected quiver for a nonnegative companion polynomial");
  realize->add_option("coeffs", coeffs, "a0,...,as")->required();

  auto* rc = app.add_subcommand("realize-class", "Algebra whose simples realize [rho^n n^s] for s <= ell");
  rc->add_option("--quiver", quiver, "Algebra file whose quiver is used")->required();
  rc->add_option("--ell", ell, "Degree")->required()->check(CLI::NonNegativeNumber);

  auto* conv = app.add_subcommand("convolve", "Class of a convolution");
  conv->add_option("a", class_a, "Class, e.g. 2^n*n^1, [-1,-1,1]^n or 0")->required();
  conv->add_option("b", class_b, "Class")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force syzygies over prime fields");
  oracle->require_subcommand(1);
  auto* dims = oracle->add_subcommand("dims", "dim of the first syzygies");
  auto* dims_file = dims->add_option("file", file, "Algebra file");
  dims->add_option("--builtin", builtin, "Built-in algebra id (xyz-local)")->excludes(dims_file);
  dims->add_option("--module", module, "Module name ('k' for built-ins)");
  dims->add_option("-n", n, "Last syzygy index")->required()->check(CLI::NonNegativeNumber);
  auto* cross = oracle->add_subcommand("crosscheck", "Oracle against syzygy-quiver path counts");
  cross->add_option("file", file, "Algebra file")->required();
  cross->add_option("--module", module, "Module name")->required();
  cross->add_option("-n", n, "Last syzygy index")->required()->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_code(ErrorKind::usage);
  }

  try {
    if (validate->parsed()) return cmd_validate(file, out);
    if (paths->parsed()) return cmd_paths(file, out);
    if (syzq->parsed()) return cmd_syzquiver(file, module, dot, out);
    if (cx->parsed()) return cmd_complexity(file, module, out);
    if (lb->parsed()) return cmd_lower_bound(file, partial, vertex, out);
    if (check->parsed()) return cmd_curvature_check(coeffs, assume, out);
    if (combine->parsed()) return cmd_curvature_combine(op, coeffs, coeffs2, out);
    if (realize->parsed()) return cmd_curvature_realize(coeffs, out);
    if (rc->parsed()) return cmd_realize_class(quiver, ell, out);
    if (conv->parsed()) return cmd_convolve(class_a, class_b, out);
    if (dims->parsed()) {
      if (file.empty() && builtin.empty())
        throw Error(ErrorKind::usage, "missing_input", "give an algebra file or --builtin");
      if (!file.empty() && module.empty()) throw Error(ErrorKind::usage, "missing_module", "--module is required");
      return cmd_oracle_dims(file, builtin, module, n, out, err);
    }
    if (cross->parsed()) return cmd_oracle_crosscheck(file, module, n, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return exit_code(ErrorKind::internal);
  }
  return exit_code(ErrorKind::usage);
}

}  // namespace syzcx::cli
