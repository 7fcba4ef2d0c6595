#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tlrep/functors.hpp"
#include "tlrep/homology.hpp"
#include "tlrep/io.hpp"
#include "tlrep/quiver.hpp"
#include "tlrep/verify.hpp"

using namespace tlrep;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kDomain = 2, kVerify = 3 };

struct Common {
    std::string family = "tl";
    int n = 0;
    int ell = 0;
    bool as_json = false;

    AlgebraCtx ctx() const {
        AlgebraCtx c{family == "dtl" ? Family::DTL : Family::TL, n, ell};
        check_ctx(c);
        return c;
    }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--family", c.family, "tl or dtl")->check(CLI::IsMember({"tl", "dtl"}))->capture_default_str();
    sub->add_option("--n", c.n, "number of strands")->required();
    sub->add_option("--ell", c.ell, "order parameter (>= 2)")->required();
    sub->add_flag("--json", c.as_json, "machine-readable output");
}

Indec single(const AlgebraCtx& ctx, const std::string& text) {
    const ModuleSum s = parse_module(ctx, text);
    if (s.empty()) throw DomainError(text + " is the zero module over " + describe(ctx));
    if (s.total() != 1 || s.terms.size() != 1) throw DomainError(text + " is not indecomposable");
    return s.terms.begin()->first;
}

void print_sum(const ModuleSum& s, bool as_json) {
    if (as_json) std::cout << sum_json(s) << "\n";
    else std::cout << to_string(s) << "\n";
}

int cmd_orbits(const Common& c) {
    const AlgebraCtx ctx = c.ctx();
    std::vector<int> crit;
    std::vector<std::vector<int>> orbits;
    for (const OrbitView& o : orbit_partition(ctx)) {
        if (o.critical) crit.push_back(o.k_L());
        else orbits.push_back(o.members);
    }
    if (c.as_json) {
        std::cout << json{{"criticals", crit}, {"orbits", orbits}}.dump() << "\n";
        return kOk;
    }
    std::cout << "criticals:";
    for (int k : crit) std::cout << " " << k;
    std::cout << "\norbits:";
    for (const auto& o : orbits) std::cout << " " << to_string(Factors(o.begin(), o.end()));
    std::cout << "\n";
    return kOk;
}

ModuleSum per_summand(const ModuleSum& s, ModuleSum (*fn)(const AlgebraCtx&, const Indec&)) {
    ModuleSum out(s.ctx);
    for (const auto& [m, c] : s.terms) out.add(fn(s.ctx, m), c);
    return out;
}

int cmd_quiver(const Common& c, int k, bool all, const std::string& format, bool show_tau) {
    const AlgebraCtx ctx = c.ctx();
    std::vector<ARQuiver> qs;
    if (all) {
        qs = full_quiver(ctx);
    } else {
        if (!in_lambda0(ctx, k)) throw DomainError("label " + std::to_string(k) + " not in Lambda_0 for " + describe(ctx));
        qs.push_back(build_block_quiver(ctx, orbit_of(ctx, k)));
    }
    if (format == "json") {
        json arr = json::array();
        for (const ARQuiver& q : qs) arr.push_back(json::parse(quiver_json(q, show_tau)));
        std::cout << (all ? arr.dump() : arr.front().dump()) << "\n";
    } else {
        for (const ARQuiver& q : qs) std::cout << quiver_dot(q, show_tau);
    }
    return kOk;
}

int cmd_verify(int max_n, int max_ell, int threads, bool as_json) {
    if (max_n < 1 || max_ell < 2) throw DomainError("verify needs --max-n >= 1 and --max-ell >= 2");
    const SweepRange r{1, max_n, 2, max_ell};
    const auto results = run_all_sweeps(r, threads);
    bool ok = true;
    json arr = json::array();
    for (const CheckResult& res : results) {
        ok = ok && res.ok();
        arr.push_back({{"name", res.name}, {"checks", res.checks}, {"failures", res.failures}, {"samples", res.samples}});
        if (!as_json) {
            std::cout << (res.ok() ? "ok   " : "FAIL ") << res.name << ": " << res.checks << " checks, " << res.failures
                      << " failures\n";
        }
        for (const auto& s : res.samples) std::cerr << "  " << res.name << ": " << s << "\n";
    }
    if (as_json) std::cout << json{{"max_n", max_n}, {"max_ell", max_ell}, {"ok", ok}, {"checks", arr}}.dump() << "\n";
    return ok ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tlrep: representation theory of Temperley-Lieb and dilute Temperley-Lieb algebras"};
    app.require_subcommand(1);

    Common c;
    std::string spec, spec2;
    int qk = -1, threads = 0, max_n = 12, max_ell = 6;
    bool qall = false, show_tau = false;
    std::string format = "dot";

    auto* orbits = app.add_subcommand("orbits", "list critical labels and orbits");
    add_common(orbits, c);

    struct Unary {
        const char* name;
        const char* help;
    };
    std::vector<CLI::App*> unary;
    for (Unary u : {Unary{"normalize", "canonical form of a module spec"}, Unary{"factors", "composition factors"},
                    Unary{"loewy", "Loewy layers, head first"}, Unary{"dual", "twisted dual"},
                    Unary{"cover", "projective cover"}, Unary{"hull", "injective hull"},
                    Unary{"res", "restriction to n-1"}, Unary{"ind", "induction to n+1"}}) {
        auto* sub = app.add_subcommand(u.name, u.help);
        add_common(sub, c);
        sub->add_option("spec", spec, "module spec, e.g. \"B(2,3)\" or \"S(10) + 2*I(4)\"")->required();
        unary.push_back(sub);
    }
    auto* hom = app.add_subcommand("hom", "dimension of Hom(A, B)");
    auto* ext = app.add_subcommand("ext", "dimension of Ext^1(A, B)");
    for (auto* sub : {hom, ext}) {
        add_common(sub, c);
        sub->add_option("a", spec, "first module")->required();
        sub->add_option("b", spec2, "second module")->required();
    }
    auto* quiver = app.add_subcommand("quiver", "Auslander-Reiten quiver of a block");
    add_common(quiver, c);
    auto* kopt = quiver->add_option("--k", qk, "any label of the block");
    auto* aopt = quiver->add_flag("--all", qall, "every block");
    kopt->excludes(aopt);
    quiver->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
    quiver->add_flag("--show-tau", show_tau, "include the translation");

    auto* verify = app.add_subcommand("verify", "run the consistency sweeps");
    verify->add_option("--max-n", max_n)->capture_default_str();
    verify->add_option("--max-ell", max_ell)->capture_default_str();
    verify->add_option("--threads", threads, "worker threads, 0 for all cores")->capture_default_str();
    verify->add_flag("--json", c.as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    if (quiver->parsed() && !qall && kopt->count() == 0) {
        std::cerr << "quiver: one of --k or --all is required\n";
        return kUsage;
    }

    try {
        if (orbits->parsed()) return cmd_orbits(c);
        if (verify->parsed()) return cmd_verify(max_n, max_ell, threads, c.as_json);
        if (quiver->parsed()) return cmd_quiver(c, qk, qall, format, show_tau);

        const AlgebraCtx ctx = c.ctx();
        if (hom->parsed() || ext->parsed()) {
            const Indec a = single(ctx, spec), b = single(ctx, spec2);
            const DimResult d = hom->parsed() ? hom_dim(ctx, a, b) : ext_dim(ctx, a, b);
            if (c.as_json) std::cout << json{{"dim", d.known() ? json(*d.value) : json(nullptr)}, {"known", d.known()}}.dump() << "\n";
            else std::cout << d.str() << "\n";
            return kOk;
        }

        const ModuleSum s = parse_module(ctx, spec);
        const std::string name = app.get_subcommands().front()->get_name();
        if (name == "normalize") print_sum(s, c.as_json);
        else if (name == "factors") {
            const Factors f = composition_factors(s);
            if (c.as_json) std::cout << json{{"factors", f}}.dump() << "\n";
            else std::cout << to_string(f) << "\n";
        } else if (name == "loewy") {
            const Indec m = single(ctx, spec);
            const auto layers = loewy_layers(ctx, m);
            if (c.as_json) std::cout << json{{"layers", layers}}.dump() << "\n";
            else
                for (const Factors& f : layers) std::cout << to_string(f) << "\n";
        } else if (name == "dual") print_sum(dual(s), c.as_json);
        else if (name == "cover") print_sum(per_summand(s, projective_cover), c.as_json);
        else if (name == "hull") print_sum(per_summand(s, injective_hull), c.as_json);
        else if (name == "res") print_sum(restrict_sum(s), c.as_json);
        else if (name == "ind") print_sum(induce_sum(s), c.as_json);
        return kOk;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    }
}
