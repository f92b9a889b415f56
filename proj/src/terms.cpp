#include "raq/terms.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

namespace raq {

TermPtr make_var(int index) {
  if (index < 0)
    throw std::invalid_argument("variable index must be nonnegative");
  auto t = std::make_shared<Term>();
  t->var = index;
  return t;
}

TermPtr make_op(TermOp op, TermPtr left, TermPtr right) {
  if (!left || !right)
    throw std::invalid_argument("operation node needs two operands");
  auto t = std::make_shared<Term>();
  t->op = op;
  t->left = std::move(left);
  t->right = std::move(right);
  return t;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get())
    return true;
  if (!a || !b)
    return false;
  if (a->is_leaf() != b->is_leaf())
    return false;
  if (a->is_leaf())
    return a->var == b->var;
  return a->op == b->op && term_equal(a->left, b->left) &&
         term_equal(a->right, b->right);
}

int term_nodes(const TermPtr& t) {
  if (!t)
    throw std::invalid_argument("null term");
  if (t->is_leaf())
    return 1;
  return 1 + term_nodes(t->left) + term_nodes(t->right);
}

namespace {

void collect_vars(const TermPtr& t, std::vector<int>& out) {
  if (t->is_leaf()) {
    out.push_back(t->var);
    return;
  }
  collect_vars(t->left, out);
  collect_vars(t->right, out);
}

} // namespace

std::vector<int> term_vars(const TermPtr& t) {
  if (!t)
    throw std::invalid_argument("null term");
  std::vector<int> vars;
  collect_vars(t, vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

int var_occurrences(const TermPtr& t, int index) {
  if (!t)
    throw std::invalid_argument("null term");
  if (t->is_leaf())
    return t->var == index ? 1 : 0;
  return var_occurrences(t->left, index) + var_occurrences(t->right, index);
}

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("syntax error at position " +
                                std::to_string(pos + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  TermPtr parse_primary() {
    skip_ws();
    if (pos >= text.size())
      fail("expected a variable or '('");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      TermPtr inner = parse_expr();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')')
        fail("expected ')'");
      ++pos;
      return inner;
    }
    if (c == 'x') {
      ++pos;
      size_t start = pos;
      int value = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        if (pos - start >= 6)
          fail("variable number too large");
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      if (pos == start)
        fail("expected a number after 'x'");
      if (value < 1)
        fail("variable numbers start at 1");
      return make_var(value - 1);
    }
    fail("expected a variable or '('");
  }

  TermPtr parse_expr() {
    TermPtr left = parse_primary();
    skip_ws();
    if (pos < text.size() && (text[pos] == '*' || text[pos] == '\\')) {
      TermOp op = text[pos] == '*' ? TermOp::mul : TermOp::ldiv;
      ++pos;
      TermPtr right = parse_expr();
      return make_op(op, std::move(left), std::move(right));
    }
    return left;
  }
};

} // namespace

TermPtr parse_term(const std::string& text) {
  Parser parser{text};
  TermPtr t = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size())
    parser.fail("unexpected trailing input");
  return t;
}

namespace {

void render_rec(const TermPtr& t, std::string& out) {
  if (t->is_leaf()) {
    out += 'x';
    out += std::to_string(t->var + 1);
    return;
  }
  if (t->left->is_leaf()) {
    render_rec(t->left, out);
  } else {
    out += '(';
    render_rec(t->left, out);
    out += ')';
  }
  out += t->op == TermOp::mul ? '*' : '\\';
  render_rec(t->right, out);
}

} // namespace

std::string render_term(const TermPtr& t) {
  if (!t)
    throw std::invalid_argument("null term");
  std::string out;
  render_rec(t, out);
  return out;
}

bool is_lt_form(const TermPtr& t) {
  if (!t)
    throw std::invalid_argument("null term");
  if (t->is_leaf())
    return true;
  return term_vars(t->left).size() == 1 && is_lt_form(t->right);
}

namespace {

TermOp opposite(TermOp op) {
  return op == TermOp::mul ? TermOp::ldiv : TermOp::mul;
}

// Expands the redex closest to the root, which always lies on the right
// spine: a node whose left operand is itself an operation node.  Returns
// null when the term has no redex.
TermPtr rewrite_uppermost(const TermPtr& t, RuleSet rules) {
  if (t->is_leaf())
    return nullptr;
  if (!t->left->is_leaf()) {
    const TermPtr& a = t->left->left;
    const TermPtr& b = t->left->right;
    const TermPtr& r = t->right;
    TermOp inner = t->left->op;
    TermOp outer = t->op;
    TermOp o1 = rules == RuleSet::rack ? inner : opposite(inner);
    TermOp o2 = rules == RuleSet::rack ? outer : opposite(outer);
    TermOp o3 = rules == RuleSet::rack ? opposite(inner) : inner;
    return make_op(o1, a, make_op(o2, b, make_op(o3, a, r)));
  }
  TermPtr rewritten = rewrite_uppermost(t->right, rules);
  if (!rewritten)
    return nullptr;
  return make_op(t->op, t->left, rewritten);
}

} // namespace

TermPtr lt_normalize(const TermPtr& t, RuleSet rules) {
  if (!t)
    throw std::invalid_argument("null term");
  TermPtr cur = t;
  while (TermPtr next = rewrite_uppermost(cur, rules))
    cur = std::move(next);
  return cur;
}

int evaluate(const TermPtr& t, const LeftQuasigroup& q,
             const std::vector<int>& assignment) {
  if (!t)
    throw std::invalid_argument("null term");
  if (t->is_leaf()) {
    if (t->var >= static_cast<int>(assignment.size()))
      throw std::invalid_argument("unassigned variable x" +
                                  std::to_string(t->var + 1));
    int value = assignment[t->var];
    if (value < 0 || value >= q.order())
      throw std::invalid_argument("assignment for x" +
                                  std::to_string(t->var + 1) +
                                  " is out of range");
    return value;
  }
  int l = evaluate(t->left, q, assignment);
  int r = evaluate(t->right, q, assignment);
  return t->op == TermOp::mul ? q.mul(l, r) : q.ldiv(l, r);
}

std::optional<TcWitness> tc_falsify(const LeftQuasigroup& q,
                                    const Partition& alpha,
                                    const Partition& beta,
                                    const Partition& delta, int max_nodes) {
  const int n = q.order();
  if (alpha.size() != n || beta.size() != n || delta.size() != n)
    throw std::invalid_argument("partition size does not match the algebra");
  if (!is_congruence(q, alpha) || !is_congruence(q, beta) ||
      !is_congruence(q, delta))
    throw std::invalid_argument("tc_falsify requires congruences");
  if (max_nodes < 1)
    throw std::invalid_argument("max_nodes must be positive");
  // A violating term needs at least one wrap around x1, hence 3 nodes.
  if (delta.is_all() || max_nodes < 3)
    return std::nullopt;

  constexpr int kInf = std::numeric_limits<int>::max();
  const int np = n * n;

  // Subalgebra of QxQ generated by the beta pairs, with the minimal node
  // count of a term over fresh variables realizing each pair.  bparent
  // records one minimal construction; levels are filled in ascending cost
  // order, first writer wins, so the record is deterministic.
  const int wrap_budget = max_nodes - 2;
  struct BParent {
    int left = -1; // -1 marks a generator pair
    int right = -1;
    TermOp op = TermOp::mul;
  };
  std::vector<int> bcost(np, kInf);
  std::vector<BParent> bparent(np);
  std::vector<std::vector<int>> blevel(wrap_budget + 1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (beta.same_block(u, v)) {
        bcost[u * n + v] = 1;
        blevel[1].push_back(u * n + v);
      }
  auto apply = [&q](TermOp op, int x, int y) {
    return op == TermOp::mul ? q.mul(x, y) : q.ldiv(x, y);
  };
  for (int c = 2; c <= wrap_budget; ++c) {
    for (int c1 = 1; c1 + 2 <= c; ++c1) {
      int c2 = c - 1 - c1;
      for (int lcode : blevel[c1]) {
        int lu = lcode / n, lv = lcode % n;
        for (int rcode : blevel[c2]) {
          int ru = rcode / n, rv = rcode % n;
          for (int opi = 0; opi < 2; ++opi) {
            TermOp op = opi == 0 ? TermOp::mul : TermOp::ldiv;
            int code = apply(op, lu, ru) * n + apply(op, lv, rv);
            if (bcost[code] > c) {
              bcost[code] = c;
              bparent[code] = {lcode, rcode, op};
              blevel[c].push_back(code);
            }
          }
        }
      }
    }
  }

  // States track the four values of the current term at
  // (x1=a, u), (x1=a, v), (x1=b, u), (x1=b, v); wrapping the term in a
  // subalgebra pair transforms all four at once.
  const int nstates = np * np;
  struct SParent {
    int prev = -1;
    int wcode = -1;
    TermOp op = TermOp::mul;
    int side = 0; // 0: pair wraps from the left, 1: from the right
  };
  std::vector<int> dist(nstates);
  std::vector<SParent> parent(nstates);
  std::vector<std::vector<int>> slevel(max_nodes + 1);
  auto encode = [n](int pu, int pv, int cu, int cv) {
    return ((pu * n + pv) * n + cu) * n + cv;
  };

  std::optional<TcWitness> best;
  int best_cost = max_nodes + 1;
  bool done = false;
  for (int a = 0; a < n && !done; ++a) {
    for (int b = 0; b < n && !done; ++b) {
      if (a == b || !alpha.same_block(a, b))
        continue;
      int bound = best_cost - 1;
      if (bound < 3)
        break;

      std::fill(dist.begin(), dist.end(), kInf);
      for (auto& level : slevel)
        level.clear();
      const int s0 = encode(a, a, b, b);
      dist[s0] = 1;
      slevel[1].push_back(s0);

      int hit = -1, hit_cost = -1;
      for (int c = 1; c <= bound && hit < 0; ++c) {
        auto& bucket = slevel[c];
        std::sort(bucket.begin(), bucket.end());
        for (int s : bucket) {
          if (dist[s] != c)
            continue;
          int cv = s % n, cu = (s / n) % n, pv = (s / np) % n,
              pu = s / (np * n);
          if (delta.same_block(pu, pv) && !delta.same_block(cu, cv)) {
            hit = s;
            hit_cost = c;
            break;
          }
        }
        if (hit >= 0)
          break;
        int wlimit = bound - c - 1;
        if (wlimit < 1)
          continue;
        for (int s : bucket) {
          if (dist[s] != c)
            continue;
          int cv = s % n, cu = (s / n) % n, pv = (s / np) % n,
              pu = s / (np * n);
          for (int w = 0; w < np; ++w) {
            if (bcost[w] > wlimit)
              continue;
            int wu = w / n, wv = w % n;
            int ncost = c + bcost[w] + 1;
            for (int opi = 0; opi < 2; ++opi) {
              TermOp op = opi == 0 ? TermOp::mul : TermOp::ldiv;
              for (int side = 0; side < 2; ++side) {
                int t = side == 0
                            ? encode(apply(op, wu, pu), apply(op, wv, pv),
                                     apply(op, wu, cu), apply(op, wv, cv))
                            : encode(apply(op, pu, wu), apply(op, pv, wv),
                                     apply(op, cu, wu), apply(op, cv, wv));
                if (dist[t] > ncost) {
                  dist[t] = ncost;
                  parent[t] = {s, w, op, side};
                  slevel[ncost].push_back(t);
                }
              }
            }
          }
        }
      }
      if (hit < 0)
        continue;

      TcWitness witness;
      witness.a = a;
      witness.b = b;
      std::vector<SParent> edges;
      for (int s = hit; s != s0; s = parent[s].prev)
        edges.push_back(parent[s]);
      std::reverse(edges.begin(), edges.end());
      std::function<TermPtr(int)> expand = [&](int code) -> TermPtr {
        const BParent& bp = bparent[code];
        if (bp.left < 0) {
          int idx = 1 + static_cast<int>(witness.u.size());
          witness.u.push_back(code / n);
          witness.v.push_back(code % n);
          return make_var(idx);
        }
        TermPtr l = expand(bp.left);
        TermPtr r = expand(bp.right);
        return make_op(bp.op, std::move(l), std::move(r));
      };
      witness.term = make_var(0);
      for (const SParent& e : edges) {
        TermPtr wrap = expand(e.wcode);
        witness.term = e.side == 0 ? make_op(e.op, wrap, witness.term)
                                   : make_op(e.op, witness.term, wrap);
      }

      auto value_at = [&](int x1, const std::vector<int>& tuple) {
        std::vector<int> assign;
        assign.reserve(1 + tuple.size());
        assign.push_back(x1);
        assign.insert(assign.end(), tuple.begin(), tuple.end());
        return evaluate(witness.term, q, assign);
      };
      if (!delta.same_block(value_at(a, witness.u), value_at(a, witness.v)) ||
          delta.same_block(value_at(b, witness.u), value_at(b, witness.v)))
        throw std::logic_error("term condition witness failed certification");

      best = std::move(witness);
      best_cost = hit_cost;
      if (best_cost <= 3)
        done = true;
    }
  }
  return best;
}

} // namespace raq
