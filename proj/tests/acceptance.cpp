// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic only.
//
// Exit status is nonzero when a criterion's outcome differs from the
// expectation table below. Criterion 7 is expected to fail: its displayed
// degree-3 coefficients cannot hold together with the other claims it makes
// (see README, "Known discrepancies"). A surprise pass is also reported.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "prelie/enumeration.hpp"
#include "prelie/grossman_larson.hpp"
#include "prelie/identities.hpp"
#include "prelie/iota.hpp"
#include "prelie/magnus.hpp"
#include "prelie/mutation.hpp"

namespace {

using namespace prelie;

struct Outcome {
  bool passed = true;
  std::string detail;
};

/// Runs the suite checks for the given sizes; stops at the first failure.
Outcome run_checks(const std::string& id, int from, int to, int samples, std::ostringstream& detail) {
  for (int n = from; n <= to; ++n) {
    CheckParams p;
    p.n = n;
    p.samples = samples;
    const CheckReport r = verify(id, p);
    if (!r.passed) return {false, r.line() + " | " + r.counterexample};
  }
  detail << id << " n=" << from << ".." << to << " ";
  return {};
}

Outcome finish(Outcome o, const std::ostringstream& detail) {
  if (o.passed) o.detail = detail.str();
  return o;
}

Outcome criterion_forest_expansion() {
  std::ostringstream d;
  return finish(run_checks("thm1", 1, 5, 100, d), d);
}

Outcome criterion_pre_lie_and_associativity() {
  const std::vector<std::string> ab{"a", "b"};
  const auto trees = all_trees_up_to(3, ab);
  std::size_t triples = 0;
  for (const auto& x : trees) {
    for (const auto& y : trees) {
      for (const auto& z : trees) {
        const GLVector vx = tree_vector(x);
        const GLVector vy = tree_vector(y);
        const GLVector vz = tree_vector(z);
        const GLVector assoc_yz = graft(graft(vx, vy), vz) - graft(vx, graft(vy, vz));
        const GLVector assoc_zy = graft(graft(vx, vz), vy) - graft(vx, graft(vz, vy));
        if (assoc_yz != assoc_zy) return {false, "grafting associator not symmetric at " + x.str() + ", " + y.str() + ", " + z.str()};
        ++triples;
      }
    }
  }
  std::vector<Forest> forests;
  for (std::size_t deg = 1; deg <= 3; ++deg) {
    for (auto& f : all_forests(deg, ab)) forests.push_back(f);
  }
  std::size_t products = 0;
  for (const auto& f : forests) {
    for (const auto& g : forests) {
      const GLVector fg = gl_product(f, g);
      for (const auto& h : forests) {
        if (gl_product(fg, forest_vector(h)) != gl_product(forest_vector(f), gl_product(g, h))) {
          return {false, "GL product not associative at " + f.str() + ", " + g.str() + ", " + h.str()};
        }
        ++products;
      }
    }
  }
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    const GLVector x = random_tree_combination(rng, 2, 5, ab);
    const GLVector y = random_tree_combination(rng, 2, 4, ab);
    const GLVector z = random_tree_combination(rng, 2, 4, ab);
    if (graft(graft(x, y), z) - graft(x, graft(y, z)) != graft(graft(x, z), y) - graft(x, graft(z, y))) {
      return {false, "random grafting associator not symmetric"};
    }
    if (gl_product(gl_product(x, y), z) != gl_product(x, gl_product(y, z))) return {false, "random GL triple"};
  }
  return {true, "graft triples=" + std::to_string(triples) + " gl triples=" + std::to_string(products) + " random=30"};
}

/// Reduced words of the free Rota-Baxter algebra over {a, b} with size
/// (letters plus applications of R) at most `max_size`.
std::vector<RBExpr> small_words(std::size_t max_size) {
  std::vector<RBExpr> out;
  std::set<std::string> seen;
  std::vector<std::vector<RBExpr>> by_size(max_size + 1);
  for (std::size_t s = 1; s <= max_size; ++s) {
    if (s == 1) {
      by_size[1] = {RBExpr::letter("a"), RBExpr::letter("b"), rota(RBExpr::unit())};
    } else {
      for (const auto& w : by_size[s - 1]) by_size[s].push_back(rota(w));
      for (std::size_t left = 1; left < s; ++left) {
        for (const auto& u : by_size[left]) {
          for (const auto& v : by_size[s - left]) {
            const RBExpr uv = u * v;
            // keep products that are already words
            if (uv.size() == 1 && !seen.contains(uv.str())) by_size[s].push_back(uv);
            seen.insert(uv.str());
          }
        }
      }
    }
    for (const auto& w : by_size[s]) out.push_back(w);
  }
  return out;
}

Outcome criterion_rewriting() {
  std::mt19937_64 rng(500);
  for (int i = 0; i < 500; ++i) {
    const RBTerm t = random_rb_term(rng, 3, {"a", "b"});
    const RBExpr x = rb_normal_form(t, RewriteOrder::leftmost_outermost);
    if (rb_normal_form(t, RewriteOrder::rightmost_innermost) != x) return {false, "strategies disagree on " + t.str()};
  }
  const FreeRB free;
  const Complemented<FreeRB> tilde(free);
  const auto words = small_words(3);
  for (const auto& x : words) {
    for (const auto& y : words) {
      if (!rota_baxter_defect(tilde, x, y).is_zero()) return {false, "complement fails at " + x.str() + ", " + y.str()};
    }
  }
  return {true, "terms=500 complement words=" + std::to_string(words.size())};
}

Outcome criterion_embedding() {
  std::ostringstream d;
  return finish(run_checks("iota_power", 1, 5, 1, d), d);
}

Outcome criterion_bohnenblust_spitzer() {
  std::ostringstream d;
  for (auto [id, to] : {std::pair{"bs_partition", 4}, {"bs_records", 4}, {"bs_commutative", 5}}) {
    if (auto o = run_checks(id, 1, to, 10, d); !o.passed) return o;
  }
  d << "(commutative reduction with (-th)^(n-k))";
  return finish({}, d);
}

Outcome criterion_c_coefficients() {
  std::ostringstream d;
  if (auto o = run_checks("keyeq2", 1, 5, 1, d); !o.passed) return o;
  auto row = [](int n) {
    auto comps = compositions(n);
    std::string s;
    for (auto it = comps.rbegin(); it != comps.rend(); ++it) s += (s.empty() ? "" : ",") + c_coefficient(*it).str();
    return s;
  };
  if (row(2) != "1,1" || row(3) != "2,1,2,1") return {false, "tables " + row(2) + " / " + row(3)};
  d << "table n=2 (" << row(2) << ") n=3 (" << row(3) << ")";
  return finish({}, d);
}

Outcome criterion_magnus() {
  std::vector<std::string> failed;
  std::vector<std::string> held;
  const GLSeries omega = gl_magnus_fixed_point(5);
  const GLSeries log_exp = gl_log_of_exp(5);
  bool equivalence = true;
  for (std::size_t n = 1; n <= 5; ++n) equivalence = equivalence && omega.component(n) == log_exp.component(n);
  (equivalence ? held : failed).push_back("fixed point = log*(exp a) for degrees <= 5");

  const bool low = omega.component(1) == parse_element("a") && omega.component(2) == parse_element("-1/2*a[a]");
  (low ? held : failed).push_back("degrees 1-2 = a, -1/2 a[a]");
  const GLVector displayed3 = parse_element("1/4*a[a[a]] + 1/12*a[a,a]");
  if (omega.component(3) == displayed3) {
    held.push_back("degree 3 as displayed");
  } else {
    failed.push_back("degree 3 displayed as 1/4 a[a[a]] + 1/12 a[a,a], computed " + format_element(omega.component(3)));
  }

  const FreeRB free;
  const RBExpr a = RBExpr::letter("a");
  const auto model = magnus_in_model(free, a, 3);
  const RBExpr aa = pre_lie_left(free, a, a);
  const bool second = model[2] == Polynomial(Rational(1, 2)) * aa;
  (second ? held : failed).push_back("model degree 2 = +1/2 a|>a");
  const RBExpr shown = Polynomial(Rational(-1, 4)) * pre_lie_left(free, aa, a) + Polynomial(Rational(-1, 12)) * pre_lie_left(free, a, aa);
  const RBExpr opposite = Polynomial(Rational(1, 4)) * pre_lie_left(free, aa, a) + Polynomial(Rational(1, 12)) * pre_lie_left(free, a, aa);
  if (model[3] == shown) {
    held.push_back("model degree 3 as displayed");
  } else {
    failed.push_back(std::string("model degree 3 displayed as -1/4 (a|>a)|>a - 1/12 a|>(a|>a), computed ") +
                     (model[3] == opposite ? "+1/4 (a|>a)|>a + 1/12 a|>(a|>a)" : model[3].str()));
  }
  std::string detail;
  for (const auto& f : failed) detail += "[fails] " + f + "; ";
  for (const auto& h : held) detail += "[holds] " + h + "; ";
  return {failed.empty(), detail};
}

Outcome criterion_mps() {
  std::ostringstream d;
  return finish(run_checks("mps_vs_magnus", 1, 4, 6, d), d);
}

Outcome criterion_texp() {
  std::ostringstream d;
  if (auto o = run_checks("texp_eq22", 1, 4, 6, d); !o.passed) return o;
  d << "(equals the Dyson series of Y' = YU; integration by parts on random pairs)";
  return finish({}, d);
}

Outcome criterion_products_of_exponentials() {
  std::ostringstream d;
  for (auto [id, to] : {std::pair{"prod_exp", 5}, {"sharp", 5}, {"bch", 3}}) {
    if (auto o = run_checks(id, 1, to, 1, d); !o.passed) return o;
  }
  return finish({}, d);
}

Outcome criterion_mutation() {
  std::string detail;
  const std::vector<std::pair<testing::Mutant, std::string>> mutants{
      {testing::Mutant::bernoulli_b1_sign, "B1 sign"},
      {testing::Mutant::c_coefficient_sign, "c(1,1) sign"},
      {testing::Mutant::admissibility_order, "admissibility order"}};
  for (const auto& [m, name] : mutants) {
    const testing::ScopedMutant mutant(m);
    std::string caught;
    for (const auto& r : run_suite(SuiteLevel::quick, 0)) {
      if (!r.passed) caught += (caught.empty() ? "" : ",") + r.id;
    }
    if (caught.empty()) return {false, name + " mutant not detected"};
    detail += name + " caught by " + caught + "; ";
  }
  for (const auto& r : run_suite(SuiteLevel::quick, 0)) {
    if (!r.passed) return {false, "unmutated suite fails at " + r.id};
  }
  return {true, detail + "clean suite passes"};
}

struct Criterion {
  int number;
  std::string title;
  std::function<Outcome()> run;
  bool expected_pass;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "forest expansion over admissible chains", criterion_forest_expansion, true},
      {2, "pre-Lie grafting and GL associativity", criterion_pre_lie_and_associativity, true},
      {3, "free Rota-Baxter rewriting", criterion_rewriting, true},
      {4, "embedding into the free Rota-Baxter algebra", criterion_embedding, true},
      {5, "Bohnenblust-Spitzer identities", criterion_bohnenblust_spitzer, true},
      {6, "c-coefficients", criterion_c_coefficients, true},
      {7, "Magnus series coefficients", criterion_magnus, false},
      {8, "descent-class logarithm equals Magnus", criterion_mps, true},
      {9, "pre-Lie form of the time-ordered exponential", criterion_texp, true},
      {10, "products of exponentials and BCH", criterion_products_of_exponentials, true},
      {11, "mutation sanity", criterion_mutation, true},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", seconds);
    while (!o.detail.empty() && (o.detail.back() == ' ' || o.detail.back() == ';')) o.detail.pop_back();
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << timing
              << "] " << o.detail;
    if (o.passed != c.expected_pass) {
      ++unexpected;
      std::cout << (o.passed ? " (UNEXPECTED PASS)" : " (UNEXPECTED FAIL)");
    } else if (!o.passed) {
      std::cout << " (expected: the displayed values are inconsistent with the stated equivalence)";
    }
    std::cout << std::endl;
  }
  std::cout << (unexpected == 0 ? "all criteria match expectations" : "criteria deviate from expectations") << "\n";
  return unexpected == 0 ? 0 : 1;
}
