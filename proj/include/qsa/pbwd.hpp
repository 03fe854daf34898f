#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qsa/shuffle.hpp"

namespace qsa {

// Positive root alpha_j + ... + alpha_i.
struct Root {
    int j = 1;
    int i = 1;
    bool odd = false;

    bool contains(int color) const { return j <= color && color <= i; }
    int length() const { return i - j + 1; }
    std::string to_string() const;  // "[j;i]"

    friend bool operator==(const Root& a, const Root& b) { return a.j == b.j && a.i == b.i; }
    friend bool operator<(const Root& a, const Root& b) { return std::tie(a.j, a.i) < std::tie(b.j, b.i); }
};

// Sorted by (j, i); parities set for super kinds.
std::vector<Root> positive_roots(const Flavor& flavor);
Root make_root(const Flavor& flavor, int j, int i);
// 1-based position in positive_roots.
int root_index(const Flavor& flavor, const Root& root);
// Root-indexed grading contribution of one copy of `root`.
std::vector<int> root_grading(const Flavor& flavor, const Root& root);

// How e_beta(r) is built: an ordering of the simple roots of beta, the split
// r_t = offsets[t] + (t == carrier ? r : 0), and the bracket parameters.
struct RootRecipe {
    std::vector<int> colors;
    std::vector<int> offsets;
    int carrier = 0;
    std::vector<ParamPoly> lambdas;
};

class PbwdChoice {
public:
    explicit PbwdChoice(const Flavor& flavor) : flavor_(flavor) {}

    const Flavor& flavor() const { return flavor_; }
    // Overrides for individual roots; other roots use the default recipe.
    void set_recipe(const Root& root, RootRecipe recipe);
    // Order of the mode index within a root; ascending unless set.
    void set_descending(const Root& root, bool descending);

    RootRecipe recipe(const Root& root) const;
    RootRecipe default_recipe(const Root& root) const;
    bool descending(const Root& root) const;
    bool is_default() const { return recipes_.empty() && descending_.empty(); }
    const std::map<std::pair<int, int>, RootRecipe>& overrides() const { return recipes_; }
    const std::map<std::pair<int, int>, bool>& orders() const { return descending_; }

    // (beta, r) < (beta', r') in the ordering used for ordered monomials.
    bool factor_less(const Root& a, int ra, const Root& b, int rb) const;

private:
    Flavor flavor_;
    std::map<std::pair<int, int>, RootRecipe> recipes_;
    std::map<std::pair<int, int>, bool> descending_;
};

// Multiplicity function h on (root, mode) pairs.
class PbwdMonomial {
public:
    using Key = std::tuple<int, int, int>;  // (j, i, r)

    PbwdMonomial() = default;
    void add(const Root& root, int r, int mult = 1);
    const std::map<Key, int>& support() const { return support_; }
    bool empty() const { return support_.empty(); }
    int size() const;  // sum of multiplicities

    // Factors in product order, each repeated by multiplicity.
    std::vector<std::pair<Root, int>> factors(const PbwdChoice& choice) const;
    std::vector<int> grading(const Flavor& flavor) const;
    // d_beta = sum_r h(beta, r), indexed like positive_roots.
    std::vector<int> degree(const Flavor& flavor) const;
    // Raises InvalidInput if h violates the flavor's constraints.
    void validate(const Flavor& flavor) const;
    std::string to_string() const;

    friend bool operator==(const PbwdMonomial&, const PbwdMonomial&) = default;
    friend bool operator<(const PbwdMonomial& a, const PbwdMonomial& b) { return a.support_ < b.support_; }

private:
    std::map<Key, int> support_;
};

// d < d' iff at the first root where they differ, d has the larger entry.
bool degree_less(const std::vector<int>& d, const std::vector<int>& e);

// F*G - (-1)^{|F||G|} lambda G*F; the sign only for super kinds with both odd.
ShuffleElement q_bracket(const ShuffleElement& F, const ShuffleElement& G, const ParamPoly& lambda,
                         std::pair<bool, bool> parities = {false, false});

ShuffleElement pbwd_element(const Flavor& flavor, const Root& root, int r, const PbwdChoice& choice);
ShuffleElement pbwd_element(const Flavor& flavor, const Root& root, int r);

// Left-to-right product of generators.
using Word = std::vector<std::pair<int, int>>;  // (i, r)
ShuffleElement psi_word(const Flavor& flavor, const Word& word);
Word parse_word(const std::string& text);

ShuffleElement psi_monomial(const Flavor& flavor, const PbwdMonomial& h, const PbwdChoice& choice);

// Multiplies by normalizer^count.
ShuffleElement tilde_scale(const ShuffleElement& F, int count);

// Every valid h of the given grading with modes in [lo, hi].
std::vector<PbwdMonomial> enumerate_monomials(const Flavor& flavor, const std::vector<int>& grading, int lo, int hi);

// Caches root elements and ordered monomials for one choice.
class PbwdEvaluator {
public:
    explicit PbwdEvaluator(PbwdChoice choice) : choice_(std::move(choice)) {}

    const PbwdChoice& choice() const { return choice_; }
    const Flavor& flavor() const { return choice_.flavor(); }
    const ShuffleElement& element(const Root& root, int r);
    const ShuffleElement& monomial(const PbwdMonomial& h);

private:
    PbwdChoice choice_;
    std::map<std::tuple<int, int, int>, ShuffleElement> elements_;
    std::map<PbwdMonomial, ShuffleElement> monomials_;
};

}  // namespace qsa
