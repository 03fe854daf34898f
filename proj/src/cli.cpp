#include "qsa/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qsa/error.hpp"
#include "qsa/json_io.hpp"
#include "qsa/verify.hpp"

namespace qsa {

namespace {

struct Options {
    std::string kind;
    int n = 0;
    int m = 0;
    int n2 = 0;
    std::vector<std::string> inputs;
    std::string out_path;
    std::string word;
    std::string lambda = "1";
    std::string plan_path;
    std::string choice_path;
    std::string predicate;
    std::string suite;
    std::string mode = "phi";
    std::string grading;
    std::string root;
    std::string window;
    int r = 0;
    int max_k = 0;
    int trials = 0;
    std::uint64_t guard = 0;
    bool printed_b = false;
    bool pretty = false;
};

// Restores the process-wide guard when a run ends.
class GuardScope {
public:
    GuardScope() : saved_(symmetrization_guard()) {}
    ~GuardScope() { set_symmetrization_guard(saved_); }
    GuardScope(const GuardScope&) = delete;
    GuardScope& operator=(const GuardScope&) = delete;

private:
    std::uint64_t saved_;
};

// A property did not hold; the JSON report is still printed.
struct PropertyFailure {};

std::uint64_t parse_guard(const std::string& text, const std::string& source) {
    try {
        size_t used = 0;
        long long value = std::stoll(text, &used);
        if (used == text.size() && value > 0) return static_cast<std::uint64_t>(value);
    } catch (const std::logic_error&) {
    }
    throw InvalidInput(source + " must be a positive integer, got '" + text + "'");
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw InvalidInput("expected comma-separated integers, got '" + text + "'");
        }
    }
    if (out.empty()) throw InvalidInput("empty integer list");
    return out;
}

std::pair<int, int> parse_window(const std::string& text) {
    auto colon = text.find(':', 1);
    if (colon == std::string::npos) throw InvalidInput("window must look like lo:hi, got '" + text + "'");
    try {
        size_t a = 0, b = 0;
        int lo = std::stoi(text.substr(0, colon), &a);
        int hi = std::stoi(text.substr(colon + 1), &b);
        if (a != colon || b != text.size() - colon - 1) throw std::invalid_argument(text);
        if (lo > hi) throw InvalidInput("empty window " + text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw InvalidInput("window must look like lo:hi, got '" + text + "'");
    }
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

std::optional<Flavor> flavor_from_flags(const Options& o) {
    if (o.kind.empty()) {
        if (o.n || o.m || o.n2) throw InvalidInput("--n, --m and --n2 need --flavor");
        return std::nullopt;
    }
    Kind kind = parse_kind(o.kind);
    bool super = kind == Kind::TrigSuper || kind == Kind::YangSuper;
    if (super) {
        if (o.n) throw InvalidInput(o.kind + " takes --m and --n2, not --n");
        if (!o.m || !o.n2) throw InvalidInput(o.kind + " needs both --m and --n2");
        return kind == Kind::TrigSuper ? Flavor::trig_super(o.m, o.n2) : Flavor::yang_super(o.m, o.n2);
    }
    if (o.m || o.n2) throw InvalidInput(o.kind + " takes --n, not --m/--n2");
    if (!o.n) throw InvalidInput(o.kind + " needs --n");
    switch (kind) {
        case Kind::TrigA: return Flavor::trig_a(o.n);
        case Kind::TrigTwoParam: return Flavor::two_param(o.n);
        case Kind::YangA: return Flavor::yang_a(o.n);
        default: break;
    }
    throw InternalError("unreachable flavor kind");
}

Flavor require_flavor(const Options& o) {
    auto f = flavor_from_flags(o);
    if (!f) throw InvalidInput("this command needs --flavor");
    return *f;
}

std::vector<ShuffleElement> load_elements(const Options& o, size_t min_count, size_t max_count) {
    if (o.inputs.size() < min_count || o.inputs.size() > max_count) {
        std::string want = min_count == max_count ? std::to_string(min_count)
                                                  : std::to_string(min_count) + " or more";
        throw InvalidInput("expected " + want + " --in element files, got " + std::to_string(o.inputs.size()));
    }
    auto flags = flavor_from_flags(o);
    std::vector<ShuffleElement> out;
    for (const auto& path : o.inputs) {
        out.push_back(element_from_json(read_json(path)));
        if (flags && !(out.back().flavor() == *flags))
            throw FlavorMismatch(path + " holds a " + out.back().flavor().to_string() + " element, not " +
                                 flags->to_string());
    }
    return out;
}

PbwdChoice load_choice(const Options& o, const Flavor& flavor) {
    if (o.choice_path.empty()) return PbwdChoice(flavor);
    return choice_from_json(read_json(o.choice_path), flavor);
}

class Output {
public:
    Output(const Options& o, std::ostream& out) : pretty_(o.pretty) {
        if (!o.out_path.empty()) {
            file_.open(o.out_path);
            if (!file_) throw InvalidInput("cannot write " + o.out_path);
        }
        stream_ = o.out_path.empty() ? &out : &file_;
    }
    void emit(const Json& j) { *stream_ << j.dump(pretty_ ? 2 : -1) << '\n' << std::flush; }
    // One record per line regardless of --pretty.
    void line(const Json& j) { *stream_ << j.dump() << '\n' << std::flush; }

private:
    bool pretty_;
    std::ofstream file_;
    std::ostream* stream_;
};

bool is_odd(const ShuffleElement& F) {
    const Flavor& f = F.flavor();
    return f.is_super() && F.grading()[f.m() - 1] % 2 == 1;
}

// ------------------------------------------------------------ commands

void cmd_product(const Options& o, Output& out) {
    auto elements = load_elements(o, 2, SIZE_MAX);
    ShuffleElement acc = elements[0];
    for (size_t k = 1; k < elements.size(); ++k) acc = shuffle_product(acc, elements[k]);
    out.emit(to_json(acc));
}

void cmd_psi(const Options& o, Output& out) {
    Flavor f = require_flavor(o);
    if (o.word.empty()) throw InvalidInput("psi needs --word");
    out.emit(to_json(psi_word(f, parse_word(o.word))));
}

void cmd_bracket(const Options& o, Output& out) {
    auto elements = load_elements(o, 2, 2);
    const auto& F = elements[0];
    const auto& G = elements[1];
    ParamPoly lambda = parse_param_poly(o.lambda, F.flavor().params());
    out.emit(to_json(q_bracket(F, G, lambda, {is_odd(F), is_odd(G)})));
}

Root parse_root(const std::string& text, const Flavor& flavor) {
    auto parts = parse_int_list(text);
    if (parts.size() != 2) throw InvalidInput("--root must look like j,i");
    return make_root(flavor, parts[0], parts[1]);
}

void cmd_pbwd(const Options& o, Output& out) {
    Flavor f = require_flavor(o);
    PbwdChoice choice = load_choice(o, f);
    if (o.root.empty() == o.inputs.empty()) throw InvalidInput("pbwd needs either --root with --r, or one --in monomial file");
    if (!o.root.empty()) {
        out.emit(to_json(pbwd_element(f, parse_root(o.root, f), o.r, choice)));
        return;
    }
    if (o.inputs.size() != 1) throw InvalidInput("pbwd takes one --in monomial file");
    out.emit(to_json(psi_monomial(f, monomial_from_json(read_json(o.inputs[0]), f), choice)));
}

void cmd_specialize(const Options& o, Output& out) {
    auto F = load_elements(o, 1, 1)[0];
    if (o.plan_path.empty()) throw InvalidInput("specialize needs --plan");
    const Flavor& f = F.flavor();
    SpecPlan plan = plan_from_json(read_json(o.plan_path), f);
    XPoly value;
    if (o.mode == "phi")
        value = phi(F, plan);
    else if (o.mode == "reduced")
        value = reduced_phi(F, plan.d, o.printed_b);
    else
        value = cross_specialize(F, plan, o.printed_b);
    out.emit({{"mode", o.mode}, {"plan", to_json(plan, f)}, {"value", to_json(value, f.params())}});
}

void cmd_check(const Options& o, Output& out) {
    auto F = load_elements(o, 1, 1)[0];
    PredicateReport report;
    if (o.predicate == "pole") {
        report.holds = check_pole(F);
        if (!report.holds) report.detail = "numerator is not a Laurent polynomial of the right shape";
    } else if (o.predicate == "wheel") {
        report.holds = check_wheel(F);
        if (!report.holds) report.detail = "some wheel substitution does not vanish";
    } else if (o.predicate == "integral") {
        report = integrality_report(F);
    } else if (o.predicate == "good") {
        report = goodness_report(F);
    } else {
        report = basis_integrality_report(F, load_choice(o, F.flavor()));
    }
    out.emit({{"predicate", o.predicate}, {"holds", report.holds}, {"detail", report.detail}});
    if (!report.holds) throw PropertyFailure{};
}

void cmd_decompose(const Options& o, Output& out) {
    auto F = load_elements(o, 1, 1)[0];
    out.emit(to_json(decompose(F, load_choice(o, F.flavor()))));
}

void cmd_certify(const Options& o, Output& out) {
    Flavor f = require_flavor(o);
    if (o.grading.empty()) throw InvalidInput("certify needs --grading");
    auto grading = parse_int_list(o.grading);
    auto [lo, hi] = o.window.empty() ? std::pair{0, 1} : parse_window(o.window);
    auto cert = independence_certificate(f, grading, lo, hi, load_choice(o, f));
    Json basis = Json::array();
    for (const auto& h : cert.basis) basis.push_back(to_json(h));
    Json kernel = Json::array();
    for (const auto& c : cert.kernel) kernel.push_back(to_json(c, f.params()));
    out.emit({{"flavor", to_json(f)},
              {"grading", grading},
              {"window", {lo, hi}},
              {"monomials", cert.monomials},
              {"rows", cert.rows},
              {"rank", cert.rank},
              {"independent", cert.independent},
              {"method", cert.method},
              {"basis", basis},
              {"kernel", kernel}});
    if (!cert.independent) throw PropertyFailure{};
}

void cmd_verify(const Options& o, Output& out) {
    SuiteOptions so;
    so.max_k = o.max_k;
    so.trials = o.trials;
    if (!o.window.empty()) so.window = parse_window(o.window);
    int failed = 0;
    auto results = run_suite(o.suite, so, [&](const CheckResult& r) {
        if (!r.passed) ++failed;
        out.line({{"suite", o.suite}, {"check", r.name}, {"pass", r.passed}, {"detail", r.detail}});
    });
    out.line({{"suite", o.suite}, {"passed", failed == 0}, {"checks", results.size()}, {"failed", failed}});
    if (failed) throw PropertyFailure{};
}

void add_flavor_flags(CLI::App* sub, Options& o) {
    sub->add_option("--flavor", o.kind, "Algebra kind")
        ->check(CLI::IsMember({"trig-a", "trig-2p", "trig-super", "yang-a", "yang-super"}));
    sub->add_option("--n", o.n, "n of sl_n for trig-a, trig-2p and yang-a")->check(CLI::PositiveNumber);
    sub->add_option("--m", o.m, "m of sl(m|n) for the super kinds")->check(CLI::PositiveNumber);
    sub->add_option("--n2", o.n2, "n of sl(m|n) for the super kinds")->check(CLI::PositiveNumber);
}

void add_inputs(CLI::App* sub, Options& o, const std::string& what) {
    sub->add_option("--in", o.inputs, what)->allow_extra_args(false);
}

void add_choice(CLI::App* sub, Options& o) {
    sub->add_option("--choice", o.choice_path, "JSON file with root recipes and mode orders");
}

}  // namespace

ParamPoly parse_param_poly(const std::string& text, ParamSet ps) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw InvalidInput("empty parameter expression");
    if (s[0] == '[') {
        try {
            return param_poly_from_json(Json::parse(s), ps);
        } catch (const Json::exception& e) {
            throw InvalidInput(std::string("bad parameter polynomial: ") + e.what());
        }
    }
    auto symbols = param_symbols(ps);
    auto fail = [&]() -> InvalidInput {
        return InvalidInput("cannot parse parameter expression '" + text + "'");
    };
    std::vector<std::string> terms;
    size_t start = 0;
    for (size_t k = 1; k <= s.size(); ++k) {
        bool boundary = k == s.size() || ((s[k] == '+' || s[k] == '-') && s[k - 1] != '^' && s[k - 1] != '*' &&
                                          s[k - 1] != '/');
        if (boundary) {
            terms.push_back(s.substr(start, k - start));
            start = k;
        }
    }
    ParamPoly out;
    for (std::string term : terms) {
        Rational coeff = 1;
        if (term[0] == '+' || term[0] == '-') {
            if (term[0] == '-') coeff = -1;
            term = term.substr(1);
        }
        if (term.empty()) throw fail();
        PExp e{0, 0};
        std::stringstream in(term);
        std::string factor;
        while (std::getline(in, factor, '*')) {
            if (factor.empty()) throw fail();
            if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
                Rational q;
                if (q.set_str(factor, 10) != 0) throw fail();
                q.canonicalize();
                coeff *= q;
                continue;
            }
            auto caret = factor.find('^');
            std::string name = factor.substr(0, caret);
            int power = 1;
            if (caret != std::string::npos) {
                try {
                    size_t used = 0;
                    power = std::stoi(factor.substr(caret + 1), &used);
                    if (used != factor.size() - caret - 1) throw fail();
                } catch (const std::logic_error&) {
                    throw fail();
                }
            }
            auto it = std::find(symbols.begin(), symbols.end(), name);
            if (it == symbols.end()) throw InvalidInput("unknown parameter '" + name + "' in '" + text + "'");
            e[it - symbols.begin()] += power;
        }
        out += ParamPoly::monomial(e, coeff);
    }
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact computations in type A shuffle algebras", "qsa"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.set_help_all_flag("--help-all", "Show help for every command");
    std::string guard_text;
    app.add_option("--guard", guard_text, "Largest number of summands a symmetrization may generate");
    app.add_flag("--pretty", o.pretty, "Indent JSON output");
    app.add_option("--out", o.out_path, "Write the result to this file instead of standard output");

    auto* product = app.add_subcommand("product", "Multiply element files from left to right");
    add_inputs(product, o, "Element JSON files (two or more)");
    add_flavor_flags(product, o);

    auto* psi = app.add_subcommand("psi", "Image of a word in the generators");
    add_flavor_flags(psi, o);
    psi->add_option("--word", o.word, "Generators like \"e(1,0) e(2,-1)\"");

    auto* bracket = app.add_subcommand("bracket", "F*G - (sign) lambda G*F");
    add_inputs(bracket, o, "Exactly two element files");
    add_flavor_flags(bracket, o);
    bracket->add_option("--lambda", o.lambda, "Parameter polynomial, e.g. v^-1 or -1/2*u1*u2^-1");

    auto* pbwd = app.add_subcommand("pbwd", "Root vector or ordered PBWD monomial");
    add_flavor_flags(pbwd, o);
    add_inputs(pbwd, o, "Monomial JSON file");
    add_choice(pbwd, o);
    pbwd->add_option("--root", o.root, "Root j,i for a single root vector");
    pbwd->add_option("--r", o.r, "Mode of the root vector");

    auto* specialize = app.add_subcommand("specialize", "Specialization maps at a degree vector");
    add_inputs(specialize, o, "Element file");
    add_flavor_flags(specialize, o);
    specialize->add_option("--plan", o.plan_path, "Plan JSON with the degree vector and compositions");
    specialize->add_option("--mode", o.mode, "phi, reduced or cross")->check(CLI::IsMember({"phi", "reduced", "cross"}));
    specialize->add_flag("--printed-b", o.printed_b, "Use the v^-2 variant of the second pairwise factor");

    auto* check = app.add_subcommand("check", "Test a predicate; exit 1 when it fails");
    add_inputs(check, o, "Element file");
    add_flavor_flags(check, o);
    add_choice(check, o);
    check->add_option("--predicate", o.predicate, "pole, wheel, integral, good or integral-by-basis")
        ->required()
        ->check(CLI::IsMember({"pole", "wheel", "integral", "good", "integral-by-basis"}));

    auto* decompose_cmd = app.add_subcommand("decompose", "Coefficients in the ordered PBWD basis");
    add_inputs(decompose_cmd, o, "Element file");
    add_flavor_flags(decompose_cmd, o);
    add_choice(decompose_cmd, o);

    auto* certify = app.add_subcommand("certify", "Linear independence of ordered monomials");
    add_flavor_flags(certify, o);
    add_choice(certify, o);
    certify->add_option("--grading", o.grading, "Comma-separated grading, e.g. 2,1");
    certify->add_option("--window", o.window, "Mode window lo:hi (default 0:1)");

    auto* verify = app.add_subcommand("verify", "Run a named identity suite");
    verify->add_option("--suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-k", o.max_k, "Largest size to try")->check(CLI::PositiveNumber);
    verify->add_option("--window", o.window, "Mode window lo:hi");
    verify->add_option("--trials", o.trials, "Random cases per flavor")->check(CLI::PositiveNumber);

    GuardScope scope;
    try {
        std::vector<std::string> argv_store{"qsa"};
        argv_store.insert(argv_store.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : argv_store) argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            int code = app.exit(e, out, err);
            return code == 0 ? kExitOk : kExitUsage;
        }

        if (const char* env = std::getenv("QSA_GUARD"); env && *env)
            set_symmetrization_guard(parse_guard(env, "QSA_GUARD"));
        if (!guard_text.empty()) set_symmetrization_guard(parse_guard(guard_text, "--guard"));

        Output output(o, out);
        CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "product")
            cmd_product(o, output);
        else if (name == "psi")
            cmd_psi(o, output);
        else if (name == "bracket")
            cmd_bracket(o, output);
        else if (name == "pbwd")
            cmd_pbwd(o, output);
        else if (name == "specialize")
            cmd_specialize(o, output);
        else if (name == "check")
            cmd_check(o, output);
        else if (name == "decompose")
            cmd_decompose(o, output);
        else if (name == "certify")
            cmd_certify(o, output);
        else
            cmd_verify(o, output);
        return kExitOk;
    } catch (const PropertyFailure&) {
        return kExitPropertyFailed;
    } catch (const GuardExceeded& e) {
        err << "qsa: guard exceeded: " << e.what() << '\n';
        return kExitGuard;
    } catch (const DivisionFailure& e) {
        err << "qsa: " << e.what() << '\n';
        return kExitPropertyFailed;
    } catch (const InternalError& e) {
        err << "qsa: internal error: " << e.what() << '\n';
        return kExitPropertyFailed;
    } catch (const Error& e) {
        err << "qsa: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Json::exception& e) {
        err << "qsa: malformed JSON: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace qsa
