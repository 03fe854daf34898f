#include "qsa/json_io.hpp"

#include <limits>

#include "qsa/error.hpp"

namespace qsa {

namespace {

Json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<long>(z.get_si());
    return z.get_str();
}

mpz_class integer_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("not an integer: " + j.dump());
        return z;
    }
    throw InvalidInput("expected an integer, got " + j.dump());
}

void expect(bool ok, const std::string& what, const Json& j) {
    if (!ok) throw InvalidInput("expected " + what + ", got " + j.dump());
}

std::string root_key(const Root& root) { return std::to_string(root.j) + ":" + std::to_string(root.i); }

Root root_from_key(const std::string& key, const Flavor& flavor) {
    auto colon = key.find(':');
    if (colon == std::string::npos) throw InvalidInput("bad root key " + key);
    try {
        return make_root(flavor, std::stoi(key.substr(0, colon)), std::stoi(key.substr(colon + 1)));
    } catch (const std::logic_error&) {
        throw InvalidInput("bad root key " + key);
    }
}

Root root_from_json(const Json& j, const Flavor& flavor) {
    expect(j.is_array() && j.size() == 2, "a root [j, i]", j);
    return make_root(flavor, j[0].get<int>(), j[1].get<int>());
}

}  // namespace

Json to_json(const Rational& q) {
    // Only used for whole rationals in printing; general ones go through num/den.
    if (q.get_den() == 1) return integer_to_json(q.get_num());
    return q.get_str();
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        Rational q;
        if (q.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("not a rational: " + j.dump());
        q.canonicalize();
        return q;
    }
    return Rational(integer_from_json(j));
}

Json to_json(const ParamPoly& p, ParamSet ps) {
    int np = param_count(ps);
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json exps = Json::array();
        for (int k = 0; k < np; ++k) exps.push_back(e[k]);
        out.push_back(Json::array({exps, integer_to_json(c.get_num()), integer_to_json(c.get_den())}));
    }
    return out;
}

ParamPoly param_poly_from_json(const Json& j, ParamSet ps) {
    expect(j.is_array(), "a parameter polynomial (list of [exponents, num, den])", j);
    int np = param_count(ps);
    std::vector<ParamPoly::Term> terms;
    for (const auto& t : j) {
        expect(t.is_array() && t.size() == 3 && t[0].is_array() && static_cast<int>(t[0].size()) == np,
               "[exponents, num, den] with " + std::to_string(np) + " exponents", t);
        PExp e{0, 0};
        for (int k = 0; k < np; ++k) e[k] = t[0][k].get<int>();
        mpz_class den = integer_from_json(t[2]);
        if (den == 0) throw InvalidInput("zero denominator in " + t.dump());
        Rational c(integer_from_json(t[1]), den);
        c.canonicalize();
        terms.emplace_back(e, c);
    }
    return ParamPoly::from_terms(std::move(terms));
}

Json to_json(const XPoly& f, ParamSet ps) {
    Json out = Json::array();
    for (const auto& [m, c] : f.coefficients()) {
        Json vars = Json::object();
        for (const auto& entry : m) vars[decode(entry.code).key()] = entry.exp;
        out.push_back({{"vars", vars}, {"coeff", to_json(c, ps)}});
    }
    return out;
}

XPoly xpoly_from_json(const Json& j, ParamSet ps) {
    expect(j.is_array(), "a polynomial (list of {vars, coeff})", j);
    XPoly out;
    for (const auto& t : j) {
        expect(t.is_object() && t.contains("vars") && t.contains("coeff"), "{vars, coeff}", t);
        expect(t["vars"].is_object(), "an object of variable exponents", t["vars"]);
        XPoly term(param_poly_from_json(t["coeff"], ps));
        for (const auto& [key, e] : t["vars"].items()) term *= XPoly::var(VarId::parse(key), e.get<int>());
        out += term;
    }
    return out;
}

Json to_json(const Flavor& flavor) {
    Json out{{"kind", flavor.kind_name()}};
    if (flavor.is_super())
        out["n"] = Json::array({flavor.m(), flavor.n()});
    else
        out["n"] = flavor.n();
    return out;
}

Flavor flavor_from_json(const Json& j) {
    expect(j.is_object() && j.contains("kind") && j.contains("n"), "{kind, n}", j);
    Kind kind = parse_kind(j["kind"].get<std::string>());
    const Json& n = j["n"];
    bool super = kind == Kind::TrigSuper || kind == Kind::YangSuper;
    if (super) {
        expect(n.is_array() && n.size() == 2, "[m, n] for a super kind", n);
        int a = n[0].get<int>(), b = n[1].get<int>();
        return kind == Kind::TrigSuper ? Flavor::trig_super(a, b) : Flavor::yang_super(a, b);
    }
    expect(n.is_number_integer(), "an integer n", n);
    int k = n.get<int>();
    switch (kind) {
        case Kind::TrigA: return Flavor::trig_a(k);
        case Kind::TrigTwoParam: return Flavor::two_param(k);
        case Kind::YangA: return Flavor::yang_a(k);
        default: break;
    }
    throw InternalError("unreachable flavor kind");
}

Json to_json(const ShuffleElement& F) {
    ParamSet ps = F.flavor().params();
    return {{"flavor", to_json(F.flavor())},
            {"grading", F.grading()},
            {"numerator", to_json(F.numerator(), ps)}};
}

ShuffleElement element_from_json(const Json& j) {
    expect(j.is_object() && j.contains("flavor") && j.contains("grading") && j.contains("numerator"),
           "{flavor, grading, numerator}", j);
    Flavor flavor = flavor_from_json(j["flavor"]);
    return ShuffleElement(flavor, j["grading"].get<std::vector<int>>(),
                          xpoly_from_json(j["numerator"], flavor.params()));
}

Json to_json(const PbwdMonomial& h) {
    Json out = Json::array();
    for (const auto& [key, mult] : h.support()) {
        auto [j, i, r] = key;
        out.push_back({{"root", Json::array({j, i})}, {"r", r}, {"mult", mult}});
    }
    return out;
}

PbwdMonomial monomial_from_json(const Json& j, const Flavor& flavor) {
    expect(j.is_array(), "a monomial (list of {root, r, mult})", j);
    PbwdMonomial h;
    for (const auto& f : j) {
        expect(f.is_object() && f.contains("root") && f.contains("r"), "{root, r, mult}", f);
        int mult = f.value("mult", 1);
        if (mult <= 0) throw InvalidInput("multiplicities must be positive: " + f.dump());
        h.add(root_from_json(f["root"], flavor), f["r"].get<int>(), mult);
    }
    h.validate(flavor);
    return h;
}

Json to_json(const PbwdChoice& choice) {
    ParamSet ps = choice.flavor().params();
    Json recipes = Json::array();
    for (const auto& [key, recipe] : choice.overrides()) {
        Json lambdas = Json::array();
        for (const auto& l : recipe.lambdas) lambdas.push_back(to_json(l, ps));
        recipes.push_back({{"root", Json::array({key.first, key.second})},
                           {"colors", recipe.colors},
                           {"offsets", recipe.offsets},
                           {"carrier", recipe.carrier},
                           {"lambdas", lambdas}});
    }
    Json descending = Json::array();
    for (const auto& [key, desc] : choice.orders())
        if (desc) descending.push_back(Json::array({key.first, key.second}));
    return {{"recipes", recipes}, {"descending", descending}};
}

PbwdChoice choice_from_json(const Json& j, const Flavor& flavor) {
    expect(j.is_object(), "a choice object", j);
    PbwdChoice choice(flavor);
    ParamSet ps = flavor.params();
    for (const auto& r : j.value("recipes", Json::array())) {
        expect(r.is_object() && r.contains("root") && r.contains("colors"), "{root, colors, ...}", r);
        RootRecipe recipe;
        recipe.colors = r["colors"].get<std::vector<int>>();
        recipe.offsets = r.value("offsets", std::vector<int>{});
        recipe.carrier = r.value("carrier", 0);
        for (const auto& l : r.value("lambdas", Json::array())) recipe.lambdas.push_back(param_poly_from_json(l, ps));
        choice.set_recipe(root_from_json(r["root"], flavor), std::move(recipe));
    }
    for (const auto& root : j.value("descending", Json::array()))
        choice.set_descending(root_from_json(root, flavor), true);
    return choice;
}

Json to_json(const SpecPlan& plan, const Flavor& flavor) {
    auto roots = positive_roots(flavor);
    Json d = Json::array();
    Json t = Json::object();
    Json slots = Json::object();
    for (size_t b = 0; b < roots.size() && b < plan.d.size(); ++b) {
        if (plan.d[b] == 0) continue;
        d.push_back(Json::array({roots[b].j, roots[b].i, plan.d[b]}));
        if (b < plan.t.size() && !plan.t[b].empty()) t[root_key(roots[b])] = plan.t[b];
        if (b < plan.assignment.size() && !plan.assignment[b].empty())
            slots[root_key(roots[b])] = plan.assignment[b];
    }
    Json out{{"d", d}, {"t", t}};
    if (!slots.empty()) out["slots"] = slots;
    return out;
}

SpecPlan plan_from_json(const Json& j, const Flavor& flavor) {
    expect(j.is_object() && j.contains("d"), "{d, t}", j);
    auto roots = positive_roots(flavor);
    SpecPlan plan;
    plan.d.assign(roots.size(), 0);
    for (const auto& e : j["d"]) {
        expect(e.is_array() && e.size() == 3, "[j, i, mult]", e);
        Root root = make_root(flavor, e[0].get<int>(), e[1].get<int>());
        int mult = e[2].get<int>();
        if (mult < 0) throw InvalidInput("negative multiplicity in " + e.dump());
        plan.d[root_index(flavor, root) - 1] += mult;
    }
    const Json t = j.value("t", Json::object());
    expect(t.is_object(), "an object of compositions", t);
    if (!t.empty()) {
        plan.t.assign(roots.size(), {});
        for (const auto& [key, parts] : t.items()) {
            int b = root_index(flavor, root_from_key(key, flavor)) - 1;
            plan.t[b] = parts.get<std::vector<int>>();
            int sum = 0;
            for (int p : plan.t[b]) {
                if (p <= 0) throw InvalidInput("composition parts must be positive for " + key);
                sum += p;
            }
            if (sum != plan.d[b]) throw InvalidInput("composition for " + key + " does not sum to its multiplicity");
        }
    }
    if (j.contains("slots")) {
        plan.assignment.assign(roots.size(), {});
        for (const auto& [key, s] : j["slots"].items()) {
            int b = root_index(flavor, root_from_key(key, flavor)) - 1;
            plan.assignment[b] = s.get<std::vector<std::vector<int>>>();
        }
    }
    return plan;
}

Json to_json(const ParamFrac& c, ParamSet ps) { return {{"num", to_json(c.num(), ps)}, {"den", to_json(c.den(), ps)}}; }

ParamFrac param_frac_from_json(const Json& j, ParamSet ps) {
    expect(j.is_object() && j.contains("num") && j.contains("den"), "{num, den}", j);
    ParamPoly den = param_poly_from_json(j["den"], ps);
    if (den.is_zero()) throw InvalidInput("zero denominator");
    return ParamFrac(param_poly_from_json(j["num"], ps), den);
}

Json to_json(const Decomposition& dec) {
    ParamSet ps = dec.choice.flavor().params();
    Json entries = Json::array();
    for (const auto& e : dec.entries)
        entries.push_back({{"monomial", to_json(e.monomial)}, {"coeff", to_json(e.coeff, ps)}});
    return {{"flavor", to_json(dec.choice.flavor())}, {"choice", to_json(dec.choice)}, {"entries", entries}};
}

Decomposition decomposition_from_json(const Json& j) {
    expect(j.is_object() && j.contains("flavor") && j.contains("entries"), "{flavor, choice, entries}", j);
    Flavor flavor = flavor_from_json(j["flavor"]);
    Decomposition dec{choice_from_json(j.value("choice", Json::object()), flavor), {}};
    for (const auto& e : j["entries"]) {
        expect(e.is_object() && e.contains("monomial") && e.contains("coeff"), "{monomial, coeff}", e);
        dec.entries.push_back({monomial_from_json(e["monomial"], flavor), param_frac_from_json(e["coeff"], flavor.params())});
    }
    return dec;
}

}  // namespace qsa
