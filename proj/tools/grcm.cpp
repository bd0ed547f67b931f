// grcm: command-line front end for rank 2 modules over B_{k,n}.
//
// Exit codes: 0 success, 1 invalid input (error JSON on stderr),
// 2 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grcm/classify.hpp"
#include "grcm/cmmod.hpp"
#include "grcm/combinat.hpp"
#include "grcm/io.hpp"
#include "grcm/oracle.hpp"
#include "grcm/render.hpp"

namespace {

using grcm::Errc;
using grcm::Error;
using grcm::io::json;

int env_truncation() {
    const char* env = std::getenv("CM_TRUNCATION");
    if (!env || !*env) return grcm::default_truncation;
    try {
        std::size_t used = 0;
        const int n = std::stoi(env, &used);
        if (used != std::string(env).size() || n < 2) throw std::invalid_argument(env);
        return n;
    } catch (const std::exception&) {
        throw Error(Errc::InvalidInput, std::string("CM_TRUNCATION must be an integer >= 2, got '") + env + "'");
    }
}

std::vector<int> parse_labels(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw Error(Errc::InvalidInput, "bad label '" + item + "' in '" + text + "'");
        out.push_back(v);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidInput, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    std::string I, J, spec, format = "ascii", out;
    int n = 0;
    int truncation = 0; // 0: not given on the command line
    bool with_witness = false, oracle = false, summands = false;
};

int truncation(const Options& o) { return o.truncation > 0 ? o.truncation : env_truncation(); }

grcm::Rim rim_arg(const Options& o, const std::string& labels) {
    if (o.n < 1) throw Error(Errc::InvalidInput, "--n is required with --I/--J");
    return grcm::Rim(o.n, parse_labels(labels));
}

// Spec file; an explicit --truncation re-expresses b at that order.
grcm::RankTwoSpec load_spec(const Options& o) {
    if (o.spec.empty()) throw Error(Errc::InvalidInput, "--spec is required");
    grcm::RankTwoSpec s = grcm::io::spec_from_json(grcm::io::parse(read_file(o.spec)), truncation(o));
    if (o.truncation > 0 && o.truncation != s.truncation) {
        for (auto& b : s.b) {
            if (b.degree() >= o.truncation)
                throw Error(Errc::InvalidInput, "parameter " + b.to_string() + " does not fit truncation " +
                                                    std::to_string(o.truncation));
            b = b.with_order(o.truncation);
        }
        s.truncation = o.truncation;
        grcm::validate(s);
    }
    return s;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw Error(Errc::InvalidInput, "cannot write " + o.out);
    f << text;
}

json oracle_json(const grcm::RankTwoSpec& s, const grcm::DecompositionResult& thm) {
    const grcm::QuiverRep M = grcm::build_rank2(s);
    const auto found = grcm::decompose_exhaustive(M, s.I.k());
    json rims = json::array(), dims = json::array();
    for (const auto& X : found) {
        rims.push_back(grcm::io::to_json(X));
        const grcm::QuiverRep L = grcm::build_rank1(X, s.truncation);
        dims.push_back({{"X", grcm::io::to_json(X)},
                        {"hom_into", grcm::hom_space(L, M).dimension()},
                        {"hom_from", grcm::hom_space(M, L).dimension()}});
    }
    bool agree;
    if (thm.indecomposable)
        agree = found.empty();
    else
        agree = found.size() == 2 && ((found[0] == *thm.X && found[1] == *thm.Y) || (found[0] == *thm.Y && found[1] == *thm.X));
    return {{"candidates", grcm::binomial(s.I.n(), s.I.k())},
            {"verdict", found.empty() ? "indecomposable" : "split"},
            {"summands", rims},
            {"hom_dimensions", dims},
            {"agree", agree}};
}

int run(int argc, char** argv) {
    CLI::App app{"Rank 2 Cohen-Macaulay modules over B_{k,n}: construction, classification, decomposition"};
    app.require_subcommand(1);
    Options o;

    auto rims = [&](CLI::App* c) {
        c->add_option("--I", o.I, "comma-separated labels of I")->required();
        c->add_option("--J", o.J, "comma-separated labels of J")->required();
        c->add_option("--n", o.n, "number of labels")->required();
    };
    auto spec = [&](CLI::App* c) {
        c->add_option("--spec", o.spec, "rank 2 spec JSON file")->required()->check(CLI::ExistingFile);
        c->add_option("--truncation", o.truncation, "truncation order N (default $CM_TRUNCATION or 16)")
            ->check(CLI::Range(2, 4096));
    };

    auto* interlace = app.add_subcommand("interlace", "interlacing report of two rims");
    rims(interlace);
    auto* construct = app.add_subcommand("construct", "quiver representation of a spec and its relation check");
    spec(construct);
    auto* classify = app.add_subcommand("classify", "indecomposability verdict");
    spec(classify);
    auto* decompose = app.add_subcommand("decompose", "summands of a decomposable spec");
    spec(decompose);
    decompose->add_flag("--with-witness", o.with_witness, "include the splitting idempotent and eigenvectors");
    decompose->add_flag("--oracle", o.oracle, "cross-check against the exhaustive Hom oracle");
    auto* enumerate = app.add_subcommand("enumerate", "one decomposable extension per pair of complementary peak sets");
    rims(enumerate);
    enumerate->add_option("--truncation", o.truncation, "truncation order N")->check(CLI::Range(2, 4096));
    auto* oracle = app.add_subcommand("oracle-check", "classifier verdict against the exhaustive oracle");
    spec(oracle);
    auto* render = app.add_subcommand("render", "lattice diagram of a profile");
    render->add_option("--spec", o.spec, "rank 2 spec JSON file")->check(CLI::ExistingFile);
    render->add_option("--I", o.I, "comma-separated labels (single rim or upper rim)");
    render->add_option("--J", o.J, "comma-separated labels of the lower rim");
    render->add_option("--n", o.n, "number of labels");
    render->add_option("--truncation", o.truncation, "truncation order N")->check(CLI::Range(2, 4096));
    render->add_option("--format", o.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
    render->add_option("--out", o.out, "output file (default stdout)");
    render->add_flag("--summands", o.summands, "for a split spec, also draw the two summand paths");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        throw Error(Errc::InvalidInput, e.what());
    }

    json result;
    if (*interlace) {
        result = grcm::io::to_json(grcm::interlacing(rim_arg(o, o.I), rim_arg(o, o.J)));
    } else if (*construct) {
        const auto s = load_spec(o);
        const auto M = grcm::build_rank2(s);
        result = {{"spec", grcm::io::to_json(s)}, {"module", grcm::io::to_json(M)}, {"relations", grcm::verify_relations(M)}};
    } else if (*classify) {
        const auto s = load_spec(o);
        const auto pat = grcm::pair_pattern(s);
        result = grcm::io::classification_json(pat, grcm::indecomposability(pat));
    } else if (*decompose) {
        const auto s = load_spec(o);
        const auto res = grcm::decompose(s);
        result = grcm::io::to_json(res, o.with_witness, s.truncation);
        if (o.oracle) result["oracle"] = oracle_json(s, res);
    } else if (*enumerate) {
        const grcm::Rim I = rim_arg(o, o.I), J = rim_arg(o, o.J);
        const auto entries = grcm::enumerate_decomposables(I, J, truncation(o));
        json list = json::array();
        for (const auto& e : entries) list.push_back(grcm::io::to_json(e));
        result = {{"I", grcm::io::to_json(I)},
                  {"J", grcm::io::to_json(J)},
                  {"r", grcm::model_reduction(I, J).r},
                  {"truncation", truncation(o)},
                  {"count", entries.size()},
                  {"entries", list}};
    } else if (*oracle) {
        const auto s = load_spec(o);
        const auto res = grcm::decompose(s);
        const json orc = oracle_json(s, res);
        result = {{"classifier", grcm::io::to_json(res, false, s.truncation)}, {"oracle", orc}, {"agree", orc["agree"]}};
    } else if (*render) {
        const grcm::Format f = grcm::parse_format(o.format);
        std::vector<grcm::LatticeLayout> layouts;
        if (!o.spec.empty()) {
            const auto s = load_spec(o);
            layouts.push_back(grcm::layout_profile(s.I, s.J));
            if (o.summands) {
                const auto res = grcm::decompose(s);
                if (res.indecomposable) throw Error(Errc::InvalidInput, "--summands needs a decomposable spec");
                layouts.push_back(grcm::layout_summand(s.I, s.J, *res.X));
                layouts.push_back(grcm::layout_summand(s.I, s.J, *res.Y));
            }
        } else if (!o.I.empty() || o.n > 0) {
            const grcm::Rim I = rim_arg(o, o.I);
            layouts.push_back(o.J.empty() ? grcm::layout_rim(I) : grcm::layout_profile(I, rim_arg(o, o.J)));
        } else {
            throw Error(Errc::InvalidInput, "render needs --spec or --I/--n");
        }
        emit(o, grcm::emit_stack(layouts, f));
        return 0;
    }
    emit(o, result.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << grcm::io::error_json(e).dump() << "\n";
        return e.code() == Errc::InvariantViolation ? 2 : 1;
    } catch (const json::exception& e) {
        std::cerr << grcm::io::error_json(Error(Errc::InvalidInput, e.what())).dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    }
}
