#include "qsa/pbwd.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <regex>
#include <sstream>

#include "qsa/error.hpp"

namespace qsa {

std::string Root::to_string() const { return "[" + std::to_string(j) + ";" + std::to_string(i) + "]"; }

std::vector<Root> positive_roots(const Flavor& flavor) {
    std::vector<Root> out;
    for (int j = 1; j <= flavor.rank(); ++j)
        for (int i = j; i <= flavor.rank(); ++i) out.push_back(make_root(flavor, j, i));
    return out;
}

Root make_root(const Flavor& flavor, int j, int i) {
    if (j < 1 || j > i || i > flavor.rank())
        throw InvalidInput("[" + std::to_string(j) + ";" + std::to_string(i) + "] is not a positive root of " +
                           flavor.to_string());
    Root root{j, i, false};
    root.odd = flavor.is_super() && root.contains(flavor.m());
    return root;
}

int root_index(const Flavor& flavor, const Root& root) {
    // Roots starting at j' < j come first: sum over j' of (rank - j' + 1).
    int n = flavor.rank();
    int before = 0;
    for (int jj = 1; jj < root.j; ++jj) before += n - jj + 1;
    return before + (root.i - root.j) + 1;
}

std::vector<int> root_grading(const Flavor& flavor, const Root& root) {
    std::vector<int> g(flavor.rank(), 0);
    for (int c = root.j; c <= root.i; ++c) g[c - 1] = 1;
    return g;
}

// -------------------------------------------------------------- PbwdChoice

void PbwdChoice::set_recipe(const Root& root, RootRecipe recipe) {
    make_root(flavor_, root.j, root.i);
    int p = root.length();
    std::vector<int> sorted = recipe.colors;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(p);
    std::iota(expected.begin(), expected.end(), root.j);
    if (sorted != expected) throw InvalidInput("recipe colors must list the simple roots of " + root.to_string());
    if (recipe.offsets.empty()) recipe.offsets.assign(p, 0);
    if (static_cast<int>(recipe.offsets.size()) != p) throw InvalidInput("recipe offsets have the wrong length");
    if (recipe.carrier < 0 || recipe.carrier >= p) throw InvalidInput("recipe carrier out of range");
    if (recipe.lambdas.empty() && p > 1) recipe.lambdas = default_recipe(root).lambdas;
    if (static_cast<int>(recipe.lambdas.size()) != p - 1) throw InvalidInput("recipe needs length-1 lambdas");
    for (const auto& l : recipe.lambdas)
        if (!l.is_monomial()) throw InvalidInput("bracket parameters must be monomials");
    recipes_[{root.j, root.i}] = std::move(recipe);
}

void PbwdChoice::set_descending(const Root& root, bool descending) {
    make_root(flavor_, root.j, root.i);
    if (descending) {
        descending_[{root.j, root.i}] = true;
    } else {
        descending_.erase({root.j, root.i});
    }
}

RootRecipe PbwdChoice::default_recipe(const Root& root) const {
    RootRecipe rec;
    int p = root.length();
    rec.colors.resize(p);
    std::iota(rec.colors.begin(), rec.colors.end(), root.j);
    rec.offsets.assign(p, 0);
    rec.carrier = 0;
    for (int t = 1; t < p; ++t) {
        switch (flavor_.kind()) {
            case Kind::TrigA: rec.lambdas.push_back(ParamPoly::param(0)); break;
            case Kind::TrigTwoParam: rec.lambdas.push_back(ParamPoly::monomial({2, 0})); break;
            case Kind::TrigSuper: rec.lambdas.push_back(flavor_.color_base(root.j + t)); break;
            case Kind::YangA:
            case Kind::YangSuper: rec.lambdas.push_back(ParamPoly(1)); break;
        }
    }
    return rec;
}

RootRecipe PbwdChoice::recipe(const Root& root) const {
    auto it = recipes_.find({root.j, root.i});
    return it == recipes_.end() ? default_recipe(root) : it->second;
}

bool PbwdChoice::descending(const Root& root) const { return descending_.count({root.j, root.i}) > 0; }

bool PbwdChoice::factor_less(const Root& a, int ra, const Root& b, int rb) const {
    if (!(a == b)) return a < b;
    return descending(a) ? ra > rb : ra < rb;
}

// ------------------------------------------------------------ PbwdMonomial

void PbwdMonomial::add(const Root& root, int r, int mult) {
    if (mult <= 0) throw InvalidInput("multiplicities must be positive");
    support_[{root.j, root.i, r}] += mult;
}

int PbwdMonomial::size() const {
    int total = 0;
    for (const auto& [k, m] : support_) total += m;
    return total;
}

std::vector<std::pair<Root, int>> PbwdMonomial::factors(const PbwdChoice& choice) const {
    std::vector<std::pair<Root, int>> keys;
    for (const auto& [k, m] : support_) {
        auto [j, i, r] = k;
        Root root = make_root(choice.flavor(), j, i);
        for (int t = 0; t < m; ++t) keys.emplace_back(root, r);
    }
    std::stable_sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
        return choice.factor_less(a.first, a.second, b.first, b.second);
    });
    return keys;
}

std::vector<int> PbwdMonomial::grading(const Flavor& flavor) const {
    std::vector<int> g(flavor.rank(), 0);
    for (const auto& [k, m] : support_) {
        auto [j, i, r] = k;
        for (int c = j; c <= i; ++c) g[c - 1] += m;
    }
    return g;
}

std::vector<int> PbwdMonomial::degree(const Flavor& flavor) const {
    std::vector<int> d(positive_roots(flavor).size(), 0);
    for (const auto& [k, m] : support_) {
        auto [j, i, r] = k;
        d[root_index(flavor, make_root(flavor, j, i)) - 1] += m;
    }
    return d;
}

void PbwdMonomial::validate(const Flavor& flavor) const {
    for (const auto& [k, m] : support_) {
        auto [j, i, r] = k;
        Root root = make_root(flavor, j, i);
        if (m <= 0) throw InvalidInput("multiplicities must be positive");
        if (root.odd && m > 1)
            throw InvalidInput("odd root " + root.to_string() + " repeated with mode " + std::to_string(r));
        if (flavor.is_yangian() && r < 0) throw InvalidInput("Yangian modes must be non-negative");
    }
}

std::string PbwdMonomial::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, m] : support_) {
        auto [j, i, r] = k;
        if (!first) os << ", ";
        first = false;
        os << "([" << j << ";" << i << "]," << r << ")^" << m;
    }
    os << "}";
    return os.str();
}

bool degree_less(const std::vector<int>& d, const std::vector<int>& e) {
    for (size_t k = 0; k < std::min(d.size(), e.size()); ++k)
        if (d[k] != e[k]) return d[k] > e[k];
    return false;
}

// --------------------------------------------------------------- elements

ShuffleElement q_bracket(const ShuffleElement& F, const ShuffleElement& G, const ParamPoly& lambda,
                         std::pair<bool, bool> parities) {
    if (!(F.flavor() == G.flavor())) throw FlavorMismatch("bracket of different flavors");
    ShuffleElement fg = shuffle_product(F, G);
    ShuffleElement gf = shuffle_product(G, F) * lambda;
    if (F.flavor().is_super() && parities.first && parities.second) return fg + gf;
    return fg - gf;
}

ShuffleElement pbwd_element(const Flavor& flavor, const Root& root, int r, const PbwdChoice& choice) {
    if (!(choice.flavor() == flavor)) throw FlavorMismatch("choice belongs to another flavor");
    make_root(flavor, root.j, root.i);
    RootRecipe rec = choice.recipe(root);
    const int p = root.length();
    std::vector<int> modes(p);
    for (int t = 0; t < p; ++t) {
        modes[t] = rec.offsets[t] + (t == rec.carrier ? r : 0);
        if (flavor.is_yangian() && modes[t] < 0) throw InvalidInput("Yangian split produces a negative mode");
    }
    auto odd = [&](int color) { return flavor.is_super() && color == flavor.m(); };
    ShuffleElement acc = ShuffleElement::generator(flavor, rec.colors[0], modes[0]);
    bool acc_odd = odd(rec.colors[0]);
    for (int t = 1; t < p; ++t) {
        ShuffleElement g = ShuffleElement::generator(flavor, rec.colors[t], modes[t]);
        acc = q_bracket(acc, g, rec.lambdas[t - 1], {acc_odd, odd(rec.colors[t])});
        acc_odd = acc_odd != odd(rec.colors[t]);
    }
    if (acc.is_zero())
        throw InvalidInput("choice for " + root.to_string() + " gives a vanishing bracket at r=" + std::to_string(r));
    return acc;
}

ShuffleElement pbwd_element(const Flavor& flavor, const Root& root, int r) {
    return pbwd_element(flavor, root, r, PbwdChoice(flavor));
}

ShuffleElement psi_word(const Flavor& flavor, const Word& word) {
    ShuffleElement acc = ShuffleElement::unit(flavor);
    for (const auto& [i, r] : word) acc = shuffle_product(acc, ShuffleElement::generator(flavor, i, r));
    return acc;
}

Word parse_word(const std::string& text) {
    static const std::regex token(R"(\s*e\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*)");
    Word out;
    auto begin = text.cbegin();
    std::smatch m;
    while (begin != text.cend()) {
        if (!std::regex_search(begin, text.cend(), m, token, std::regex_constants::match_continuous)) {
            if (std::all_of(begin, text.cend(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
                break;
            throw InvalidInput("cannot parse word near '" + std::string(begin, text.cend()) + "'");
        }
        out.emplace_back(std::stoi(m[1].str()), std::stoi(m[2].str()));
        begin = m[0].second;
    }
    return out;
}

ShuffleElement psi_monomial(const Flavor& flavor, const PbwdMonomial& h, const PbwdChoice& choice) {
    PbwdEvaluator eval(choice);
    if (!(choice.flavor() == flavor)) throw FlavorMismatch("choice belongs to another flavor");
    return eval.monomial(h);
}

ShuffleElement tilde_scale(const ShuffleElement& F, int count) {
    if (count < 0) throw InvalidInput("tilde_scale needs a non-negative count");
    return F * F.flavor().normalizer().pow(count);
}

std::vector<PbwdMonomial> enumerate_monomials(const Flavor& flavor, const std::vector<int>& grading, int lo,
                                              int hi) {
    if (static_cast<int>(grading.size()) != flavor.rank()) throw InvalidInput("grading has the wrong length");
    std::vector<std::pair<Root, int>> keys;
    for (const auto& root : positive_roots(flavor))
        for (int r = lo; r <= hi; ++r)
            if (!(flavor.is_yangian() && r < 0)) keys.emplace_back(root, r);
    std::vector<PbwdMonomial> out;
    std::vector<int> rest = grading;
    PbwdMonomial cur;
    std::function<void(size_t, PbwdMonomial)> walk = [&](size_t k, PbwdMonomial h) {
        if (k == keys.size()) {
            if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) out.push_back(h);
            return;
        }
        const auto& [root, r] = keys[k];
        int cap = root.odd ? 1 : INT_MAX;
        for (int c = root.j; c <= root.i; ++c) cap = std::min(cap, rest[c - 1]);
        for (int mult = 0; mult <= cap; ++mult) {
            PbwdMonomial next = h;
            if (mult > 0) next.add(root, r, mult);
            for (int c = root.j; c <= root.i; ++c) rest[c - 1] -= mult;
            walk(k + 1, std::move(next));
            for (int c = root.j; c <= root.i; ++c) rest[c - 1] += mult;
        }
    };
    walk(0, cur);
    return out;
}

const ShuffleElement& PbwdEvaluator::element(const Root& root, int r) {
    auto key = std::make_tuple(root.j, root.i, r);
    auto it = elements_.find(key);
    if (it != elements_.end()) return it->second;
    return elements_.emplace(key, pbwd_element(flavor(), root, r, choice_)).first->second;
}

const ShuffleElement& PbwdEvaluator::monomial(const PbwdMonomial& h) {
    auto it = monomials_.find(h);
    if (it != monomials_.end()) return it->second;
    h.validate(flavor());
    auto factors = h.factors(choice_);
    PbwdMonomial prefix;
    const ShuffleElement* prev = nullptr;
    ShuffleElement unit = ShuffleElement::unit(flavor());
    for (const auto& [root, r] : factors) {
        prefix.add(root, r);
        auto found = monomials_.find(prefix);
        if (found == monomials_.end()) {
            ShuffleElement value = shuffle_product(prev ? *prev : unit, element(root, r));
            found = monomials_.emplace(prefix, std::move(value)).first;
        }
        prev = &found->second;
    }
    if (!prev) return monomials_.emplace(h, unit).first->second;
    return *prev;
}

}  // namespace qsa
