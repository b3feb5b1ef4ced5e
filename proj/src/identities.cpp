#include "prelie/identities.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "prelie/enumeration.hpp"
#include "prelie/grossman_larson.hpp"
#include "prelie/iota.hpp"
#include "prelie/magnus.hpp"
#include "prelie/ode.hpp"

namespace prelie {

namespace {

const std::vector<std::string> kTwoLetters{"a", "b"};

/// Accumulates statistics and keeps the first counterexample.
class Report {
 public:
  Report(std::string id, int n) {
    out_.id = std::move(id);
    add("n", n);
  }
  template <class T>
  void add(const std::string& key, const T& value) {
    std::ostringstream os;
    os << value;
    out_.fields.emplace_back(key, os.str());
  }
  void fail(const std::string& input, const std::string& lhs, const std::string& rhs) {
    if (!out_.passed) return;
    out_.passed = false;
    out_.counterexample = "input: " + input + "\nlhs: " + lhs + "\nrhs: " + rhs;
  }
  [[nodiscard]] bool passed() const { return out_.passed; }
  CheckReport done() { return std::move(out_); }

 private:
  CheckReport out_;
};

std::mt19937_64 rng_for(const CheckParams& p, std::uint64_t salt) { return std::mt19937_64(p.seed * 1000003u + salt); }

std::string join_trees(const std::vector<Tree>& ts) {
  std::string out;
  for (const auto& t : ts) out += (out.empty() ? "" : " ") + t.str();
  return out;
}

std::vector<RBExpr> letters(int n, const std::string& stem = "b") {
  std::vector<RBExpr> out;
  for (int i = 1; i <= n; ++i) out.push_back(RBExpr::letter(stem + std::to_string(i)));
  return out;
}

/// Sum over orderings of the non-maximal indices of
///   ((x_max |> x_s(h-1)) |> ...) |> x_s(1),
/// the block element of the noncommutative Bohnenblust-Spitzer formula.
template <RotaBaxterModel M>
typename M::Element left_block(const M& m, std::span<const typename M::Element> xs, const Block& block) {
  std::vector<int> rest(block.begin(), block.end() - 1);
  auto out = m.zero();
  do {
    auto acc = xs[static_cast<std::size_t>(block.back() - 1)];
    for (std::size_t j = rest.size(); j-- > 0;) acc = pre_lie_left(m, acc, xs[static_cast<std::size_t>(rest[j] - 1)]);
    out = m.add(out, acc);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

/// Left-hand side shared by the Bohnenblust-Spitzer checks.
template <RotaBaxterModel M>
typename M::Element pre_time_ordered(const M& m, std::span<const typename M::Element> bs) {
  auto out = m.zero();
  for (const auto& s : Permutation::all(static_cast<int>(bs.size()))) out = m.add(out, iterated_R_perm<M>(m, bs, s));
  return out;
}

template <RotaBaxterModel M>
typename M::Element double_product_all(const M& m, const std::vector<typename M::Element>& xs) {
  auto acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = double_product(m, acc, xs[i]);
  return acc;
}

// ---------------------------------------------------------------- thm1

/// Calls f on every n-tuple over the pool; with `ordered` false only on
/// nondecreasing index tuples.
void for_each_tuple(const std::vector<Tree>& pool, int n, bool ordered,
                    const std::function<void(const std::vector<Tree>&)>& f) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  std::vector<Tree> tuple(static_cast<std::size_t>(n), pool.front());
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) tuple[i] = pool[idx[i]];
    f(tuple);
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] + 1 == pool.size()) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < idx.size(); ++i) idx[i] = ordered ? 0 : idx[pos - 1];
  }
}

CheckReport check_thm1(const CheckParams& p) {
  Report r("thm1", p.n);
  r.add("chains", admissible_partition_chains(p.n).size());
  auto check = [&](const std::vector<Tree>& ts) {
    if (!r.passed()) return;
    const GLVector lhs = expand_forest(ts);
    const GLVector rhs = forest_vector(Forest(ts));
    if (lhs != rhs) r.fail(join_trees(ts), format_element(lhs), format_element(rhs));
  };
  const auto pool = all_trees_up_to(3, kTwoLetters);
  std::size_t count = 0;
  if (p.n <= 3) {
    for_each_tuple(pool, p.n, true, [&](const auto& ts) { check(ts), ++count; });
    r.add("tuples", count);
  } else if (p.n == 4) {
    // every multiset of four trees, in sorted and in reversed order
    for_each_tuple(pool, p.n, false, [&](const auto& ts) {
      check(ts);
      check(std::vector<Tree>(ts.rbegin(), ts.rend()));
      count += 2;
    });
    r.add("tuples", count);
  } else {
    auto rng = rng_for(p, 1);
    std::uniform_int_distribution<std::size_t> vertices(1, 3);
    for (int i = 0; i < p.samples; ++i) {
      std::vector<Tree> ts;
      for (int j = 0; j < p.n; ++j) ts.push_back(random_tree(rng, vertices(rng), kTwoLetters));
      check(ts);
    }
    r.add("samples", p.samples);
  }
  return r.done();
}

// ---------------------------------------------------------------- prop21

template <RotaBaxterModel M>
typename M::Element brace_recursive(const M& m, const typename M::Element& l, std::vector<typename M::Element> ls) {
  if (ls.empty()) return l;
  const auto last = ls.back();
  ls.pop_back();
  auto out = pre_lie_right(m, brace_recursive(m, l, ls), last);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    auto modified = ls;
    modified[i] = pre_lie_right(m, ls[i], last);
    out = m.sub(out, brace_recursive(m, l, modified));
  }
  return out;
}

template <RotaBaxterModel M>
typename M::Element brace_by_chains(const M& m, const typename M::Element& l, const std::vector<typename M::Element>& ls) {
  const int n = static_cast<int>(ls.size());
  auto out = m.zero();
  for (const auto& chain : admissible_partition_chains(n)) {
    auto acc = l;
    for (const auto& block : chain.blocks) acc = pre_lie_right(m, acc, right_block<M>(m, ls, block));
    out = (n - static_cast<int>(chain.blocks.size())) % 2 == 0 ? m.add(out, acc) : m.sub(out, acc);
  }
  return out;
}

template <RotaBaxterModel M, class Gen>
void prop21_model(Report& r, const M& m, const std::string& name, int n, int samples, Gen gen) {
  for (int i = 0; i < samples && r.passed(); ++i) {
    const auto l = gen();
    std::vector<typename M::Element> ls;
    for (int j = 0; j < n; ++j) ls.push_back(gen());
    const auto lhs = brace_by_chains(m, l, ls);
    const auto rhs = brace_recursive(m, l, ls);
    if (!m.equal(lhs, rhs)) {
      std::string input = name + ": " + m.str(l);
      for (const auto& x : ls) input += " ; " + m.str(x);
      r.fail(input, m.str(lhs), m.str(rhs));
    }
  }
}

CheckReport check_prop21(const CheckParams& p) {
  static const std::vector<std::string> kModels{"free", "poly", "seq", "pole"};
  if (p.model != "all" && std::find(kModels.begin(), kModels.end(), p.model) == kModels.end()) {
    throw ParameterOutOfRange("unknown model '" + p.model + "' (free, poly, seq, pole or all)");
  }
  Report r("prop21", p.n);
  r.add("model", p.model);
  r.add("samples", p.samples);
  auto rng = rng_for(p, 2);

  // tree pre-Lie algebra: the chain expansion of a product of combinations
  for (int i = 0; i < p.samples && r.passed(); ++i) {
    std::vector<GLVector> ls;
    for (int j = 0; j < p.n; ++j) ls.push_back(random_tree_combination(rng, 2, 2, kTwoLetters));
    GLVector rhs = ls.front();
    for (std::size_t j = 1; j < ls.size(); ++j) rhs = commutative_product(rhs, ls[j]);
    const GLVector lhs = expand_product(ls);
    if (lhs != rhs) {
      std::string input;
      for (const auto& l : ls) input += (input.empty() ? "" : " ; ") + format_element(l);
      r.fail("trees: " + input, format_element(lhs), format_element(rhs));
    }
  }

  // Rota-Baxter pre-Lie algebras: closed-form brace against the recursion
  auto wants = [&](const std::string& m) { return p.model == "all" || p.model == m; };
  if (wants("free")) {
    const FreeRB free;
    int next = 0;
    const auto bs = letters(p.n + 1);
    prop21_model(r, free, "free", p.n, 1, [&] { return bs[static_cast<std::size_t>(next++)]; });
  }
  if (wants("poly")) {
    const MatrixPolyModel poly(2);
    prop21_model(r, poly, "poly", p.n, p.samples, [&] { return poly.random(rng, 2); });
  }
  if (wants("seq")) {
    const MatrixSeqModel seq(2, 5, Rational(3, 2));
    prop21_model(r, seq, "seq", p.n, p.samples, [&] { return seq.random(rng); });
  }
  if (wants("pole")) {
    const LaurentPoleModel pole(2);
    prop21_model(r, pole, "pole", p.n, p.samples, [&] { return pole.random(rng, -2, 1); });
  }
  return r.done();
}

// ---------------------------------------------------------------- cor22

CheckReport check_cor22(const CheckParams& p) {
  Report r("cor22", p.n);
  const auto pool = all_trees_up_to(2, kTwoLetters);
  std::size_t count = 0;
  for (const auto& l : pool) {
    for_each_tuple(pool, p.n, true, [&](const std::vector<Tree>& ls) {
      ++count;
      if (!r.passed()) return;
      const GLVector lhs = brace_closed_form(l, ls);
      const GLVector rhs = brace(l, Forest(ls));
      if (lhs != rhs) r.fail(l.str() + " ; " + join_trees(ls), format_element(lhs), format_element(rhs));
    });
  }
  r.add("instances", count);
  return r.done();
}

// ---------------------------------------------------------------- iota_power

CheckReport check_iota_power(const CheckParams& p) {
  Report r("iota_power", p.n);
  const FreeRB free;
  const RBExpr b = RBExpr::letter("b");
  {
    const GLEmbedding<FreeRB> embed(free, {{"b", b}});
    const RBExpr lhs = embed.forest(Forest(std::vector<Tree>(static_cast<std::size_t>(p.n), Tree("b"))));
    const std::vector<RBExpr> bs(static_cast<std::size_t>(p.n), b);
    const RBExpr rhs = Polynomial(factorial(p.n)) * iterated_R<FreeRB>(free, bs);
    if (lhs != rhs) r.fail("b^" + std::to_string(p.n), lhs.str(), rhs.str());
  }
  if (p.n <= 4) {
    const auto bs = letters(p.n);
    std::map<std::string, RBExpr> assignment;
    std::vector<Tree> ts;
    for (int i = 1; i <= p.n; ++i) {
      const std::string name = "b" + std::to_string(i);
      assignment.emplace(name, RBExpr::letter(name));
      ts.emplace_back(name);
    }
    const RBExpr lhs = GLEmbedding<FreeRB>(free, assignment).forest(Forest(ts));
    const RBExpr rhs = pre_time_ordered<FreeRB>(free, bs);
    if (lhs != rhs) r.fail(join_trees(ts), lhs.str(), rhs.str());
    r.add("distinct", "yes");
  } else {
    r.add("distinct", "no");
  }
  return r.done();
}

// ---------------------------------------------------------------- Bohnenblust-Spitzer

CheckReport check_bs_partition(const CheckParams& p) {
  Report r("bs_partition", p.n);
  const FreeRB free;
  const auto bs = letters(p.n);
  const RBExpr lhs = pre_time_ordered<FreeRB>(free, bs);
  RBExpr rhs;
  const auto chains = admissible_partition_chains(p.n);
  for (const auto& chain : chains) {
    std::vector<RBExpr> blocks;
    for (const auto& block : chain.blocks) blocks.push_back(left_block<FreeRB>(free, bs, block));
    rhs += double_product_all(free, blocks);
  }
  r.add("permutations", factorial(p.n));
  r.add("chains", chains.size());
  if (lhs != rhs) r.fail("b1..b" + std::to_string(p.n), lhs.str(), rhs.str());

  // the two block formulas differ by (-1)^(h-1)
  Block whole;
  for (int i = 1; i <= p.n; ++i) whole.push_back(i);
  const RBExpr nested_right = right_block<FreeRB>(free, bs, whole);
  RBExpr nested_left = left_block<FreeRB>(free, bs, whole);
  if (p.n % 2 == 0) nested_left = -nested_left;
  if (nested_right != nested_left) r.fail("block sign b1..b" + std::to_string(p.n), nested_right.str(), nested_left.str());
  return r.done();
}

CheckReport check_bs_records(const CheckParams& p) {
  Report r("bs_records", p.n);
  const FreeRB free;
  const auto bs = letters(p.n);
  const RBExpr lhs = pre_time_ordered<FreeRB>(free, bs);
  RBExpr rhs;
  for (const auto& s : Permutation::all(p.n)) {
    std::vector<RBExpr> factors;
    for (const auto& cycle : canonical_cycle_decomposition(s)) {
      RBExpr acc = bs[static_cast<std::size_t>(cycle.front() - 1)];
      for (std::size_t i = 1; i < cycle.size(); ++i) acc = pre_lie_left(free, acc, bs[static_cast<std::size_t>(cycle[i] - 1)]);
      factors.push_back(acc);
    }
    rhs += double_product_all(free, factors);
  }
  r.add("permutations", factorial(p.n));
  if (lhs != rhs) r.fail("b1..b" + std::to_string(p.n), lhs.str(), rhs.str());
  return r.done();
}

CheckReport check_bs_commutative(const CheckParams& p) {
  Report r("bs_commutative", p.n);
  auto rng = rng_for(p, 7);
  bool literal_holds = true;
  for (int i = 0; i < p.samples && r.passed(); ++i) {
    const MatrixSeqModel seq(1, 6, random_rational(rng));
    std::vector<MatrixSeqModel::Element> bs;
    for (int j = 0; j < p.n; ++j) bs.push_back(seq.random(rng));
    const auto lhs = pre_time_ordered<MatrixSeqModel>(seq, bs);
    // sum over set partitions of prod_i (|P_i|-1)! (-th)^(|P_i|-1) prod_{j in P_i} b_j
    auto rhs = seq.zero();
    auto literal = seq.zero();
    for (const auto& partition : set_partitions(p.n)) {
      std::vector<MatrixSeqModel::Element> blocks;
      std::vector<MatrixSeqModel::Element> literal_blocks;
      for (const auto& block : partition) {
        auto prod = seq.one();
        for (int j : block) prod = seq.mul(prod, bs[static_cast<std::size_t>(j - 1)]);
        Rational weight = factorial(static_cast<int>(block.size()) - 1);
        Rational literal_weight = weight;
        for (std::size_t k = 1; k < block.size(); ++k) {
          weight *= -seq.theta();
          literal_weight *= seq.theta();
        }
        blocks.push_back(seq.scale(weight, prod));
        literal_blocks.push_back(seq.scale(literal_weight, prod));
      }
      rhs = seq.add(rhs, double_product_all(seq, blocks));
      literal = seq.add(literal, double_product_all(seq, literal_blocks));
    }
    if (!seq.equal(lhs, rhs)) {
      std::string input = "theta=" + seq.theta().str();
      for (const auto& x : bs) input += " ; " + seq.str(x);
      r.fail(input, seq.str(lhs), seq.str(rhs));
    }
    literal_holds = literal_holds && seq.equal(lhs, literal);
  }
  r.add("samples", p.samples);
  r.add("partitions", bell_number(p.n));
  r.add("positive_weight_sign", literal_holds ? "holds" : "fails");
  return r.done();
}

// ---------------------------------------------------------------- keyeq2

CheckReport check_keyeq2(const CheckParams& p) {
  Report r("keyeq2", p.n);
  const FreeRB free;
  const RBExpr b = RBExpr::letter("b");
  const std::vector<RBExpr> bs(static_cast<std::size_t>(p.n), b);
  const RBExpr lhs = Polynomial(factorial(p.n)) * iterated_R<FreeRB>(free, bs);
  std::vector<RBExpr> powers{RBExpr(), b};  // b^{|>k}
  for (int k = 2; k <= p.n; ++k) powers.push_back(pre_lie_left(free, powers.back(), b));
  RBExpr rhs;
  const auto comps = compositions(p.n);
  for (const auto& comp : comps) {
    std::vector<RBExpr> factors;
    for (int s : comp) factors.push_back(powers[static_cast<std::size_t>(s)]);
    rhs += Polynomial(c_coefficient(comp)) * double_product_all(free, factors);
  }
  r.add("compositions", comps.size());
  if (lhs != rhs) r.fail("b^" + std::to_string(p.n), lhs.str(), rhs.str());
  return r.done();
}

// ---------------------------------------------------------------- ode and magnus

CheckReport check_texp_eq22(const CheckParams& p) {
  Report r("texp_eq22", p.n);
  auto rng = rng_for(p, 9);
  for (int i = 0; i < p.samples && r.passed(); ++i) {
    const MatrixPolyModel model(static_cast<std::size_t>(i % 3 + 1));
    const TimeDependentMatrix u = model.random(rng, 2);
    const auto lhs = texp_prelie_form(u, static_cast<std::size_t>(p.n));
    const auto rhs = dyson_series(u, static_cast<std::size_t>(p.n), Orientation::right);
    for (std::size_t d = 0; d < lhs.size(); ++d) {
      if (lhs[d] != rhs[d]) {
        r.fail("U=" + format_poly_matrix(u) + " degree " + std::to_string(d), format_poly_matrix(lhs[d]),
               format_poly_matrix(rhs[d]));
        break;
      }
    }
    // integration by parts for two independent factors
    const TimeDependentMatrix u1 = u;
    const TimeDependentMatrix u2 = model.random(rng, 2);
    const std::vector<TimeDependentMatrix> pair{u1, u2};
    const TimeDependentMatrix sym = texp_symmetrized(pair);
    const TimeDependentMatrix parts =
        model.R(u1) * model.R(u2) + model.R(model.R(u2) * u1 - u1 * model.R(u2));
    if (sym != parts) {
      r.fail("U1=" + format_poly_matrix(u1) + " U2=" + format_poly_matrix(u2), format_poly_matrix(sym),
             format_poly_matrix(parts));
    }
  }
  r.add("samples", p.samples);
  r.add("orientation", "right");
  return r.done();
}

CheckReport check_mps_vs_magnus(const CheckParams& p) {
  Report r("mps_vs_magnus", p.n);
  auto rng = rng_for(p, 11);
  const auto order = static_cast<std::size_t>(p.n);
  for (int i = 0; i < p.samples && r.passed(); ++i) {
    const MatrixPolyModel model(static_cast<std::size_t>(i % 3 + 1));
    const TimeDependentMatrix u = model.random(rng, 2);
    const auto mps = mps_log(u, order);
    const auto omega = magnus_in_model(model, u, order);
    const auto log = log_series(dyson_series(u, order, Orientation::right));
    for (std::size_t d = 1; d <= order; ++d) {
      const TimeDependentMatrix magnus = model.R(omega[d]);
      if (mps[d] != magnus || mps[d] != log[d]) {
        r.fail("U=" + format_poly_matrix(u) + " degree " + std::to_string(d), format_poly_matrix(mps[d]),
               format_poly_matrix(mps[d] != magnus ? magnus : log[d]));
        break;
      }
    }
  }
  r.add("samples", p.samples);
  return r.done();
}

GLSeries exp_product(std::size_t order) {
  const GLSeries x(tree_vector(Tree("x")), order);
  const GLSeries y(tree_vector(Tree("y")), order);
  return gl_exp(x, ProductMode::commutative).multiply(gl_exp(y, ProductMode::commutative), ProductMode::star);
}

void compare_series(Report& r, const std::string& input, const GLSeries& lhs, const GLSeries& rhs) {
  for (std::size_t d = 0; d <= lhs.truncation(); ++d) {
    if (lhs.component(d) != rhs.component(d)) {
      r.fail(input + " degree " + std::to_string(d), format_element(lhs.component(d)), format_element(rhs.component(d)));
      return;
    }
  }
}

CheckReport check_prod_exp(const CheckParams& p) {
  Report r("prod_exp", p.n);
  const auto order = static_cast<std::size_t>(p.n);
  const GLVector y_exp = gl_exp(GLSeries(tree_vector(Tree("y")), order), ProductMode::commutative).total();
  const GLVector exponent = tree_vector(Tree("y")) + forest_action(tree_vector(Tree("x")), y_exp);
  const GLSeries rhs = gl_exp(GLSeries(exponent, order), ProductMode::commutative);
  compare_series(r, "x, y", exp_product(order), rhs);
  return r.done();
}

CheckReport check_sharp(const CheckParams& p) {
  Report r("sharp", p.n);
  const auto order = static_cast<std::size_t>(p.n);
  const GLSeries s = sharp_product("y", tree_vector(Tree("x")), order);
  compare_series(r, "y # x", exp_product(order), gl_exp(s, ProductMode::commutative));
  return r.done();
}

CheckReport check_bch(const CheckParams& p) {
  Report r("bch", p.n);
  const BchComparison bch = bch_check("x", "y", static_cast<std::size_t>(p.n));
  compare_series(r, "x, y", bch.computed, bch.displayed);
  return r.done();
}

struct Entry {
  CheckInfo info;
  CheckReport (*run)(const CheckParams&);
  int full_samples;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table{
      {{"thm1", 1, 5, 3, "forest = sum over admissible chains of signed GL products"}, check_thm1, 100},
      {{"prop21", 1, 4, 2, "chain expansion in pre-Lie algebras (trees and Rota-Baxter models)"}, check_prop21, 20},
      {{"cor22", 1, 4, 2, "closed form of symmetric braces"}, check_cor22, 0},
      {{"iota_power", 1, 5, 3, "image of b^n is n! times the iterated operator"}, check_iota_power, 0},
      {{"bs_partition", 1, 4, 3, "noncommutative Bohnenblust-Spitzer, partition form"}, check_bs_partition, 0},
      {{"bs_records", 1, 4, 3, "noncommutative Bohnenblust-Spitzer, record form"}, check_bs_records, 0},
      {{"bs_commutative", 1, 5, 3, "classical Bohnenblust-Spitzer in a commutative model"}, check_bs_commutative, 10},
      {{"keyeq2", 1, 5, 2, "n! R^[n(b) through c-coefficients"}, check_keyeq2, 0},
      {{"texp_eq22", 1, 4, 3, "pre-Lie form of the time-ordered exponential"}, check_texp_eq22, 6},
      {{"mps_vs_magnus", 1, 4, 3, "descent-class logarithm equals pre-Lie Magnus"}, check_mps_vs_magnus, 6},
      {{"prod_exp", 1, 5, 3, "exp(x) * exp(y) = exp(y + {x; exp(y)})"}, check_prod_exp, 0},
      {{"sharp", 1, 5, 3, "exp(x) * exp(y) = exp(y # x)"}, check_sharp, 0},
      {{"bch", 1, 3, 3, "first BCH terms"}, check_bch, 0},
  };
  return table;
}

}  // namespace

std::string CheckReport::line() const {
  std::string out = (passed ? "PASS " : "FAIL ") + id;
  for (const auto& [k, v] : fields) out += " " + k + "=" + v;
  return out;
}

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

CheckReport verify(const std::string& id, const CheckParams& params) {
  const auto& table = entries();
  const auto it = std::find_if(table.begin(), table.end(), [&](const Entry& e) { return e.info.id == id; });
  if (it == table.end()) throw UnknownCheck(id);
  CheckParams p = params;
  if (p.n == 0) p.n = it->info.quick_n;
  if (p.n < it->info.min_n || p.n > it->info.max_n) {
    throw ParameterOutOfRange(id + " supports n in [" + std::to_string(it->info.min_n) + ", " +
                              std::to_string(it->info.max_n) + "]");
  }
  if (p.samples < 1) throw ParameterOutOfRange("samples must be positive");
  CheckReport report = it->run(p);
  report.fields.emplace_back("seed", std::to_string(p.seed));
  return report;
}

std::vector<CheckReport> run_suite(SuiteLevel level, std::uint64_t seed) {
  std::vector<CheckReport> out;
  for (const auto& e : entries()) {
    CheckParams p;
    p.seed = seed;
    if (level == SuiteLevel::quick) {
      p.n = e.info.quick_n;
      p.samples = 3;
      out.push_back(verify(e.info.id, p));
      continue;
    }
    if (e.full_samples > 0) p.samples = e.full_samples;
    for (int n = e.info.min_n; n <= e.info.max_n; ++n) {
      p.n = n;
      out.push_back(verify(e.info.id, p));
    }
  }
  return out;
}

}  // namespace prelie
