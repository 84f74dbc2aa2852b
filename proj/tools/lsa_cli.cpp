#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "lsa/io.hpp"
#include "lsa/pipeline.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
    std::string algebra_json = R"({"kind":"polynomial","vars":1})";
    std::string field = "q";
    int d = 2;
    std::string epsilon = "1/4";
    long long n = 8;
    long long m = 16;
    uint64_t seed = 0;
    std::string out;
    std::string in;
    std::string in_b;
    std::string targets = "";
    std::string dims = "2x2";
    int window_radius = 0;
    bool exhaustive = false;
    std::string config;
};

void apply_config(Options& o) {
    if (o.config.empty()) return;
    std::ifstream f(o.config);
    if (!f) throw lsa::parse_error("cannot open config file: " + o.config);
    lsa::json j = lsa::json::parse(f);
    if (j.contains("algebra")) o.algebra_json = j["algebra"].dump();
    if (j.contains("field")) o.field = j["field"].get<std::string>();
    if (j.contains("d")) o.d = j["d"].get<int>();
    if (j.contains("epsilon")) o.epsilon = j["epsilon"].get<std::string>();
    if (j.contains("n")) o.n = j["n"].get<long long>();
    if (j.contains("m")) o.m = j["m"].get<long long>();
    if (j.contains("seed")) o.seed = j["seed"].get<uint64_t>();
    if (j.contains("out")) o.out = j["out"].get<std::string>();
    if (j.contains("in")) o.in = j["in"].get<std::string>();
    if (j.contains("targets")) o.targets = j["targets"].get<std::string>();
    if (j.contains("dims")) o.dims = j["dims"].get<std::string>();
    if (j.contains("window_radius")) o.window_radius = j["window_radius"].get<int>();
    if (j.contains("exhaustive")) o.exhaustive = j["exhaustive"].get<bool>();
}

void emit(const Options& o, const lsa::json& result) {
    lsa::json report;
    report["version"] = kVersion;
    report["result"] = result;
    std::string text = report.dump(2);
    text.push_back('\n');
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw lsa::parse_error("cannot open output file: " + o.out);
        f << text;
    }
}

lsa::json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw lsa::parse_error("cannot open input file: " + path);
    return lsa::json::parse(f);
}

std::vector<size_t> parse_targets(const std::string& s) {
    std::vector<size_t> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoull(tok));
    if (out.empty()) throw lsa::parse_error("empty target list");
    return out;
}

template <class F, class Fn>
int with_field_impl(const lsa::FieldSpec& fs, Fn&& fn) {
    return fn(F(fs));
}

template <class Fn>
int with_field(const std::string& spec, Fn&& fn) {
    lsa::FieldSpec fs = lsa::FieldSpec::parse(spec);
    if (fs.kind == lsa::FieldSpec::Kind::PrimeField)
        return with_field_impl<lsa::GFp>(fs, fn);
    return with_field_impl<lsa::Rationals>(fs, fn);
}

template <class F>
lsa::ApproxMap<F> map_from_options(const Options& o, const F& field) {
    if (!o.in.empty()) return lsa::approx_from_json(load_json(o.in).at("result"), field);
    lsa::AlgebraSpec alg = lsa::algebra_from_json(lsa::json::parse(o.algebra_json));
    lsa::FolnerWindow w = lsa::candidate_window(alg, o.n);
    return lsa::build_d_approximation(alg, w, o.d, field);
}

int cmd_build(const Options& o) {
    return with_field(o.field, [&](const auto& f) {
        lsa::AlgebraSpec alg = lsa::algebra_from_json(lsa::json::parse(o.algebra_json));
        lsa::FolnerWindow w = lsa::candidate_window(alg, o.n);
        auto phi = lsa::build_d_approximation(alg, w, o.d, f);
        emit(o, lsa::approx_to_json(phi));
        return 0;
    });
}

int cmd_check(const Options& o) {
    return with_field(o.field, [&](const auto& f) {
        auto phi = map_from_options(o, f);
        lsa::RankPolicy policy;
        if (o.exhaustive) policy.kind = lsa::RankPolicy::Kind::Exhaustive;
        auto rep = lsa::check_d_approximation(phi, o.d, policy, o.seed);
        emit(o, lsa::cert_to_json(rep));
        return rep.certified ? 0 : 1;
    });
}

int cmd_quotient_rep(const Options& o) {
    return with_field(o.field, [&](const auto& f) {
        lsa::AlgebraSpec alg = lsa::algebra_from_json(lsa::json::parse(o.algebra_json));
        auto rep = lsa::build_quotient_representation(alg, o.m, f, 2 * o.d);
        emit(o, lsa::approx_to_json(rep));
        return 0;
    });
}

int cmd_amplify(const Options& o) {
    return with_field(o.field, [&](const auto& f) {
        auto src = map_from_options(o, f);
        auto maps = lsa::amplify(src, parse_targets(o.targets));
        lsa::json out = lsa::json::array();
        for (const auto& m : maps) out.push_back(lsa::approx_to_json(m));
        emit(o, out);
        return 0;
    });
}

int cmd_tile(const Options& o) {
    return with_field(o.field, [&](const auto& f) {
        auto phi = map_from_options(o, f);
        int radius = o.window_radius > 0 ? o.window_radius : 1;
        lsa::FolnerWindow w = lsa::ball_window(phi.algebra(), radius);
        auto basis = lsa::tiling_mult_basis(phi, w);
        auto t = lsa::monotile(phi, w, basis, o.d, o.seed);
        lsa::json j = lsa::tiling_to_json(t);
        j["hyperfinite"] = lsa::hyperfinite_to_json(lsa::hyperfinite_decompose(phi, t));
        emit(o, j);
        return 0;
    });
}

int cmd_conjugate(const Options& o) {
    return with_field(o.field, [&](const auto& f) {
        if (o.in.empty() || o.in_b.empty())
            throw lsa::parse_error("conjugate needs --a and --b map files");
        auto a = lsa::approx_from_json(load_json(o.in).at("result"), f);
        auto b = lsa::approx_from_json(load_json(o.in_b).at("result"), f);
        auto r = lsa::build_conjugator(a, b, lsa::parse_rat(o.epsilon), o.seed);
        emit(o, lsa::conjugacy_to_json(r));
        return r.holds ? 0 : 1;
    });
}

int cmd_lld_verify(const Options& o) {
    size_t x = o.dims.find('x');
    if (x == std::string::npos) throw lsa::parse_error("--dims must look like 3x3");
    size_t a = std::stoull(o.dims.substr(0, x));
    size_t b = std::stoull(o.dims.substr(x + 1));
    auto rep = lsa::verify_bms_sweep(a, b, size_t(o.d), lsa::FieldSpec::parse(o.field));
    emit(o, lsa::sweep_to_json(rep));
    return (rep.all_within_bms && rep.all_within_amitsur) ? 0 : 1;
}

int cmd_demo(const Options& o) {
    return with_field(o.field, [&](const auto& f) {
        lsa::AlgebraSpec alg = lsa::algebra_from_json(lsa::json::parse(o.algebra_json));
        lsa::json j = lsa::demo_weak_stability(alg, f, lsa::parse_rat(o.epsilon), o.seed);
        emit(o, j);
        return j.at("success").get<bool>() ? 0 : 1;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear sofic approximation toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--algebra", o.algebra_json, "algebra spec as JSON");
        c->add_option("--field", o.field, "gf:p or q");
        c->add_option("--d", o.d, "approximation parameter d");
        c->add_option("--epsilon", o.epsilon, "target epsilon as p/q");
        c->add_option("--n", o.n, "window size parameter");
        c->add_option("--m", o.m, "quotient modulus");
        c->add_option("--seed", o.seed, "root seed");
        c->add_option("--out", o.out, "output path (stdout when absent)");
        c->add_option("--in", o.in, "input map JSON");
        c->add_option("--config", o.config, "JSON config file (overrides flags)");
        c->add_flag("--exhaustive", o.exhaustive, "force exhaustive rank policy");
    };

    CLI::App* build = app.add_subcommand("build", "build a window d-approximation");
    CLI::App* check = app.add_subcommand("check", "certify a d-approximation");
    CLI::App* tile = app.add_subcommand("tile", "monotile a map by a ball window");
    CLI::App* conj = app.add_subcommand("conjugate", "conjugate two approximations");
    CLI::App* amp = app.add_subcommand("amplify", "amplify a map to target dimensions");
    CLI::App* quot = app.add_subcommand("quotient-rep", "build a quotient representation");
    CLI::App* lld = app.add_subcommand("lld", "locally-linearly-dependent sweeps");
    CLI::App* lld_verify = lld->add_subcommand("verify", "exhaustive family sweep");
    CLI::App* demo = app.add_subcommand("demo", "end-to-end demonstrations");
    CLI::App* demo_ws = demo->add_subcommand("weak-stability", "conjugate to a true representation");

    for (CLI::App* c : {build, check, tile, conj, amp, quot, lld_verify, demo_ws}) add_common(c);
    conj->add_option("--a", o.in, "first map JSON");
    conj->add_option("--b", o.in_b, "second map JSON");
    amp->add_option("--targets", o.targets, "comma-separated target dimensions");
    tile->add_option("--window-radius", o.window_radius, "tiling ball radius");
    lld_verify->add_option("--dims", o.dims, "operator shape, e.g. 3x3");

    try {
        app.parse(argc, argv);
        apply_config(o);
        if (build->parsed()) return cmd_build(o);
        if (check->parsed()) return cmd_check(o);
        if (tile->parsed()) return cmd_tile(o);
        if (conj->parsed()) return cmd_conjugate(o);
        if (amp->parsed()) return cmd_amplify(o);
        if (quot->parsed()) return cmd_quotient_rep(o);
        if (lld->parsed() && lld_verify->parsed()) return cmd_lld_verify(o);
        if (demo->parsed() && demo_ws->parsed()) return cmd_demo(o);
        std::cerr << "unknown command\n";
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
