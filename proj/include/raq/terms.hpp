#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "raq/left_quasigroup.hpp"
#include "raq/partition.hpp"

namespace raq {

/*
 * Terms over the binary operations * and \ with variables x1, x2, ...
 * Text syntax: both operators are infix, right associative and of equal
 * precedence, so "x1*x2\x3" reads x1*(x2\x3); parentheses override.
 * Trees are immutable and freely shared.
 */
enum class TermOp { mul, ldiv };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  int var = -1; // 0-based variable index on leaves, -1 on operation nodes
  TermOp op = TermOp::mul;
  TermPtr left;
  TermPtr right;

  bool is_leaf() const { return left == nullptr; }
};

TermPtr make_var(int index);
TermPtr make_op(TermOp op, TermPtr left, TermPtr right);

bool term_equal(const TermPtr& a, const TermPtr& b);
int term_nodes(const TermPtr& t);
// Distinct variable indices, ascending.
std::vector<int> term_vars(const TermPtr& t);
int var_occurrences(const TermPtr& t, int index);

// Throws std::invalid_argument naming the 1-based character position.
TermPtr parse_term(const std::string& text);
// Minimal parentheses: only left operands that are operation nodes get them.
std::string render_term(const TermPtr& t);

enum class RuleSet { rack, class_c };

// Left translation form: the left operand of every operation node uses
// exactly one variable.
bool is_lt_form(const TermPtr& t);

/*
 * Rewrites t into left translation form by repeatedly expanding, at the
 * node closest to the root, a left operand that is not a leaf.  Each rule
 * replaces (a o b) o' r by a o1 (b o2 (a o3 r)) with operators chosen per
 * rule set, so the term function is preserved on every algebra satisfying
 * the rule set's identities (racks, respectively the variety where
 * (x*y)*z = x\(y\(x*z)) and (x\y)*z = x*(y\(x\z))).  Each step strictly
 * decreases the potential p(leaf) = 2, p(u o v) = p(u)^2 + p(v), so the
 * rewriting terminates.
 */
TermPtr lt_normalize(const TermPtr& t, RuleSet rules);

int evaluate(const TermPtr& t, const LeftQuasigroup& q,
             const std::vector<int>& assignment);

/*
 * A certified violation of the term condition TC(term, alpha, beta, delta):
 * a alpha b, u[i] beta v[i], the term has x1 exactly once and x2, x3, ...
 * stand for the listed pairs, and
 *   term(a, u) delta term(a, v)  but not  term(b, u) delta term(b, v).
 */
struct TcWitness {
  TermPtr term;
  int a = 0;
  int b = 0;
  std::vector<int> u;
  std::vector<int> v;
};

/*
 * Bounded search for a term-condition violation, disproving that alpha
 * centralizes beta over delta.  The search is complete over all terms with
 * at most max_nodes nodes: any violating term is matched by one in which
 * the first variable occurs exactly once and every other leaf carries its
 * own variable, at no extra node cost, and those are enumerated as walks
 * wrapping x1 in subterms evaluated over pairs from the subalgebra of QxQ
 * generated by beta.  A returned witness is certified by evaluation; none
 * means no violation within the bound, which is evidence for
 * C(alpha, beta; delta) but not a proof.  Deterministic: reports the
 * violation minimal in (node count, start pair (a, b), wrapped state).
 */
std::optional<TcWitness> tc_falsify(const LeftQuasigroup& q,
                                    const Partition& alpha,
                                    const Partition& beta,
                                    const Partition& delta, int max_nodes);

} // namespace raq
