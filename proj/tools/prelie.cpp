// Command-line front end: GL and Rota-Baxter computations, Magnus series,
// time-ordered exponentials, coefficient tables and the verification suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prelie/enumeration.hpp"
#include "prelie/grossman_larson.hpp"
#include "prelie/identities.hpp"
#include "prelie/magnus.hpp"
#include "prelie/ode.hpp"

namespace {

using namespace prelie;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Input error detected after CLI11 parsing (bad expression, bad file).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

TimeDependentMatrix read_matrix(const std::string& path) { return parse_poly_matrix(read_input(path)); }

Forest single_forest(const GLVector& v) {
  if (v.size() != 1 || v.terms().begin()->second != Rational(1)) throw UsageError("expected a single forest");
  return v.terms().begin()->first;
}

struct FloatGrid {
  double from = 0;
  double to = 1;
  int steps = 10;
};

FloatGrid parse_grid(const std::string& text) {
  FloatGrid g;
  char c1 = 0;
  char c2 = 0;
  std::istringstream in(text);
  if (!(in >> g.from >> c1 >> g.to >> c2 >> g.steps) || c1 != ':' || c2 != ':' || g.steps < 1) {
    throw UsageError("float grid must look like a:b:steps");
  }
  return g;
}

/// Non-authoritative CSV of the truncated sum evaluated on a grid.
void print_grid(const std::vector<TimeDependentMatrix>& components, const FloatGrid& grid) {
  TimeDependentMatrix sum(components.front().dim());
  for (const auto& c : components) sum += c;
  std::cout << "# floating-point evaluation of the truncated sum (display only, not exact)\n";
  std::cout << "t";
  for (std::size_t i = 0; i < sum.dim(); ++i) {
    for (std::size_t j = 0; j < sum.dim(); ++j) std::cout << ",m" << i << j;
  }
  std::cout << "\n";
  for (int k = 0; k <= grid.steps; ++k) {
    const double t = grid.from + (grid.to - grid.from) * k / grid.steps;
    std::cout << t;
    for (double v : evaluate_at(sum, t)) std::cout << "," << v;
    std::cout << "\n";
  }
}

void print_graded(const std::vector<TimeDependentMatrix>& components, std::size_t first) {
  for (std::size_t d = first; d < components.size(); ++d) {
    std::cout << "degree " << d << ": " << format_poly_matrix(components[d]) << "\n";
  }
}

RBExpr substitute_weight(const RBExpr& x, const Rational& theta) {
  RBExpr::Terms out;
  for (const auto& [w, c] : x.terms()) out.add(w, Polynomial(c.evaluate(theta)));
  return RBExpr(std::move(out));
}

int print_reports(const std::vector<CheckReport>& reports) {
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << r.line() << "\n";
    if (!r.passed) {
      ok = false;
      std::istringstream lines(r.counterexample);
      for (std::string l; std::getline(lines, l);) std::cout << "  " << l << "\n";
    }
  }
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pre-Lie, Grossman-Larson and Rota-Baxter computations with exact arithmetic"};
  app.require_subcommand(1);
  int result = 0;

  std::size_t order = 4;
  auto add_order = [&](CLI::App* cmd) {
    cmd->add_option("--order", order, "truncation degree")->envname("PRELIE_ORDER")->check(CLI::Range(1, 12));
  };

  // gl
  auto* gl = app.add_subcommand("gl", "Grossman-Larson algebra on decorated rooted trees");
  gl->require_subcommand(1);
  std::string lhs;
  std::string rhs;
  auto* gl_mul = gl->add_subcommand("mul", "GL product of two elements");
  gl_mul->add_option("lhs", lhs)->required();
  gl_mul->add_option("rhs", rhs)->required();
  gl_mul->callback([&] { std::cout << format_element(gl_product(parse_element(lhs), parse_element(rhs))) << "\n"; });
  auto* gl_graft = gl->add_subcommand("graft", "grafting lhs <- rhs of tree combinations");
  gl_graft->add_option("lhs", lhs)->required();
  gl_graft->add_option("rhs", rhs)->required();
  gl_graft->callback([&] { std::cout << format_element(graft(parse_element(lhs), parse_element(rhs))) << "\n"; });
  auto* gl_brace = gl->add_subcommand("brace", "symmetric brace {tree; forest}");
  gl_brace->add_option("tree", lhs)->required();
  gl_brace->add_option("forest", rhs)->required();
  gl_brace->callback([&] {
    std::cout << format_element(brace(parse_tree(lhs), single_forest(parse_element(rhs)))) << "\n";
  });
  std::vector<std::string> tree_args;
  auto* gl_expand = gl->add_subcommand("expand", "forest t1...tn as signed GL products over admissible chains");
  gl_expand->add_option("trees", tree_args)->required();
  gl_expand->callback([&] {
    std::vector<Tree> ts;
    std::vector<GLVector> vs;
    for (const auto& s : tree_args) {
      ts.push_back(parse_tree(s));
      vs.push_back(tree_vector(ts.back()));
    }
    const int n = static_cast<int>(ts.size());
    for (const auto& chain : admissible_partition_chains(n)) {
      GLVector term = unit_vector();
      for (const auto& block : chain.blocks) term = gl_product(term, block_graft(vs, block));
      const int k = static_cast<int>(chain.blocks.size());
      std::cout << chain.str() << "\t" << ((n - k) % 2 == 0 ? "+" : "-") << "\t" << format_element(term) << "\n";
    }
    std::cout << "sum: " << format_element(expand_forest(ts)) << "\n";
  });

  // rb
  auto* rb = app.add_subcommand("rb", "free Rota-Baxter algebra with formal weight th");
  rb->require_subcommand(1);
  std::string strategy = "leftmost";
  auto* rb_nf = rb->add_subcommand("normal-form", "reduce an expression by the Rota-Baxter rewrite rule");
  rb_nf->add_option("expr", lhs)->required();
  rb_nf->add_option("--strategy", strategy, "redex order")->check(CLI::IsMember({"leftmost", "rightmost"}));
  rb_nf->callback([&] {
    const auto o = strategy == "leftmost" ? RewriteOrder::leftmost_outermost : RewriteOrder::rightmost_innermost;
    std::cout << rb_normal_form(RBTerm::parse(lhs), o) << "\n";
  });
  std::string side = "left";
  auto* rb_pl = rb->add_subcommand("pre-lie", "pre-Lie product a |> b (left) or a <| b (right)");
  rb_pl->add_option("a", lhs)->required();
  rb_pl->add_option("b", rhs)->required();
  rb_pl->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  rb_pl->callback([&] {
    const FreeRB free;
    const RBExpr a = RBExpr::parse(lhs);
    const RBExpr b = RBExpr::parse(rhs);
    std::cout << (side == "left" ? pre_lie_left(free, a, b) : pre_lie_right(free, a, b)) << "\n";
  });
  auto* rb_double = rb->add_subcommand("double", "double product R(a)b + aR(b) + th ab");
  rb_double->add_option("a", lhs)->required();
  rb_double->add_option("b", rhs)->required();
  rb_double->callback([&] {
    std::cout << double_product(FreeRB(), RBExpr::parse(lhs), RBExpr::parse(rhs)) << "\n";
  });
  std::vector<std::string> rb_args;
  std::vector<int> perm;
  auto* rb_iter = rb->add_subcommand("iterate", "R(...R(R(b1)b2)...)b_n, optionally with permuted arguments");
  rb_iter->add_option("elements", rb_args)->required();
  rb_iter->add_option("--perm", perm, "one-line permutation, e.g. --perm 2 1 3");
  rb_iter->callback([&] {
    const FreeRB free;
    std::vector<RBExpr> bs;
    for (const auto& s : rb_args) bs.push_back(RBExpr::parse(s));
    if (perm.empty()) {
      std::cout << iterated_R<FreeRB>(free, bs) << "\n";
    } else {
      std::cout << iterated_R_perm<FreeRB>(free, bs, Permutation(perm)) << "\n";
    }
  });

  // magnus
  auto* magnus = app.add_subcommand("magnus", "pre-Lie Magnus expansion");
  magnus->require_subcommand(1);
  std::string powers = "star";
  auto* magnus_trees = magnus->add_subcommand("trees", "tree series of the GL fixed point");
  add_order(magnus_trees);
  magnus_trees->add_option("--powers", powers, "product used for the powers")
      ->check(CLI::IsMember({"star", "commutative"}));
  magnus_trees->callback([&] {
    const auto mode = powers == "star" ? ProductMode::star : ProductMode::commutative;
    const GLSeries omega = gl_magnus_fixed_point(order, "a", mode);
    std::cout << "degree\tforest\tcoefficient\n";
    for (std::size_t d = 1; d <= order; ++d) {
      for (const auto& [f, c] : omega.component(d)) std::cout << d << "\t" << f.str() << "\t" << c << "\n";
    }
  });
  std::string weight = "formal";
  auto* magnus_model = magnus->add_subcommand("model", "Magnus expansion in the free Rota-Baxter algebra on a");
  add_order(magnus_model);
  magnus_model->add_option("--weight", weight, "'formal' or a rational value for th");
  magnus_model->callback([&] {
    const auto omega = magnus_in_model(FreeRB(), RBExpr::letter("a"), order);
    for (std::size_t d = 1; d <= order; ++d) {
      const RBExpr x = weight == "formal" ? omega[d] : substitute_weight(omega[d], Rational::parse(weight));
      std::cout << "degree " << d << ": " << x << "\n";
    }
  });

  // mps
  std::string matrix_path;
  auto* mps = app.add_subcommand("mps", "descent-class logarithm of the time-ordered exponential");
  add_order(mps);
  mps->add_option("--matrix", matrix_path, "file with U(t), e.g. [[1+2t, 0],[t, 3]]; '-' for stdin")->required();
  mps->callback([&] {
    const TimeDependentMatrix u = read_matrix(matrix_path);
    const MatrixPolyModel model(u.dim());
    const auto log = mps_log(u, order);
    const auto omega = magnus_in_model(model, u, order);
    print_graded(log, 1);
    for (std::size_t d = 1; d <= order; ++d) {
      const bool same = log[d] == model.R(omega[d]);
      std::cout << "residual degree " << d << " vs Magnus: " << (same ? "0" : format_poly_matrix(log[d] - model.R(omega[d])))
                << "\n";
      if (!same) result = kExitFailure;
    }
  });

  // ode
  auto* ode = app.add_subcommand("ode", "time-ordered exponentials of polynomial matrices");
  ode->require_subcommand(1);
  std::string orientation = "left";
  std::string grid_text;
  auto add_ode_options = [&](CLI::App* cmd) {
    add_order(cmd);
    cmd->add_option("--matrix", matrix_path, "file with U(t); '-' for stdin")->required();
    cmd->add_option("--float-grid", grid_text, "also print a float CSV on a:b:steps (display only)");
  };
  auto* dyson = ode->add_subcommand("dyson", "Dyson series of Y' = UY (left) or Y' = YU (right)");
  add_ode_options(dyson);
  dyson->add_option("--orientation", orientation)->check(CLI::IsMember({"left", "right"}));
  dyson->callback([&] {
    const auto y = dyson_series(read_matrix(matrix_path), order,
                                orientation == "left" ? Orientation::left : Orientation::right);
    print_graded(y, 0);
    if (!grid_text.empty()) print_grid(y, parse_grid(grid_text));
  });
  auto* texp = ode->add_subcommand("texp", "pre-Lie form of the time-ordered exponential");
  add_ode_options(texp);
  texp->callback([&] {
    const auto y = texp_prelie_form(read_matrix(matrix_path), order);
    print_graded(y, 0);
    if (!grid_text.empty()) print_grid(y, parse_grid(grid_text));
  });

  // tables
  auto* tables = app.add_subcommand("tables", "coefficient tables");
  tables->require_subcommand(1);
  int table_n = 3;
  auto* c_coeffs = tables->add_subcommand("c-coeffs", "c(s_1..s_k) = n!/prod of partial sums");
  c_coeffs->add_option("--n", table_n)->required()->check(CLI::Range(1, 12));
  c_coeffs->callback([&] {
    auto comps = compositions(table_n);
    for (auto it = comps.rbegin(); it != comps.rend(); ++it) {
      std::cout << format_composition(*it) << "\t" << c_coefficient(*it) << "\n";
    }
  });
  auto* chains = tables->add_subcommand("chains", "admissible partition chains of [n]");
  chains->add_option("--n", table_n)->required()->check(CLI::Range(1, 9));
  chains->callback([&] {
    const auto all = admissible_partition_chains(table_n);
    for (const auto& c : all) std::cout << c.str() << "\n";
    std::cout << "count\t" << all.size() << "\n";
  });
  auto* bernoulli = tables->add_subcommand("bernoulli", "Bernoulli numbers with B_1 = -1/2");
  bernoulli->add_option("--n", table_n)->required()->check(CLI::Range(0, 40));
  bernoulli->callback([&] {
    for (int k = 0; k <= table_n; ++k) std::cout << "B_" << k << "\t" << bernoulli_number(k) << "\n";
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run identity checks");
  std::string check_id;
  std::string suite;
  CheckParams params;
  auto* check_opt = verify_cmd->add_option("--check", check_id, "check id");
  auto* suite_opt = verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"quick", "full"}));
  check_opt->excludes(suite_opt);
  verify_cmd->add_option("--n", params.n, "instance size or truncation degree");
  verify_cmd->add_option("--model", params.model, "prop21 model: free, poly, seq, pole, all");
  verify_cmd->add_option("--seed", params.seed);
  verify_cmd->add_option("--samples", params.samples);
  verify_cmd->add_flag_callback("--list", [] {
    for (const auto& c : check_catalog()) {
      std::cout << c.id << "\tn=" << c.min_n << ".." << c.max_n << "\t" << c.summary << "\n";
    }
    std::exit(0);
  });
  verify_cmd->callback([&] {
    if (check_id.empty() == suite.empty()) throw UsageError("give exactly one of --check or --suite");
    if (!check_id.empty()) {
      result = print_reports({verify(check_id, params)});
    } else {
      result = print_reports(run_suite(suite == "quick" ? SuiteLevel::quick : SuiteLevel::full, params.seed));
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownDecoration& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return result;
}
