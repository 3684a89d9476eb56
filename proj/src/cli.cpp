#include "dgla/cli.hpp"

#include "dgla/fixture.hpp"
#include "dgla/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <sstream>

namespace dgla {

namespace {

std::string basename_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

int verbosity() {
    const char* env = std::getenv("DGLA_VERBOSITY");
    if (!env) return 1;
    try {
        return std::stoi(env);
    } catch (...) {
        return 1;
    }
}

std::string scenario_default(const Fixture& fx, const std::string& key, const std::string& fallback) {
    if (fx.scenario.is_object() && fx.scenario.contains(key) && fx.scenario[key].is_string())
        return fx.scenario[key].get<std::string>();
    return fallback;
}

struct Outcome {
    std::string status;  // "pass" | "fail" | "undecided"
    Json payload;
};

Outcome do_check(const Fixture& fx, bool exhaustive) {
    AxiomReport rep = check_axioms(fx.main, exhaustive);
    return {rep.pass() ? "pass" : "fail", json_report(rep)};
}

Outcome do_cohomology(const Fixture& fx) {
    CohomologyReport rep = cohomology(fx.main.space, fx.main.d);
    Json j = json_report(rep);
    BracketTable bt = h_star_bracket(fx.main);
    j["h_star_bracket_zero"] = bt.abelian_cohomology;
    return {"pass", j};
}

Outcome do_btt(const Fixture& fx, const std::string& lname, const std::string& iname,
               const std::string& hname, bool relaxed) {
    CartanCalculus calc{{fx.algebra(lname), fx.main, fx.map(iname)}, fx.subspace(hname)};
    BTTCertificate cert = relaxed ? btt_relaxed(calc) : btt_certify(calc);
    bool ok = relaxed ? cert.verdict == BTTVerdict::smoothness_only
                      : cert.verdict == BTTVerdict::certified;
    return {ok ? "pass" : "fail", json_report(cert)};
}

Outcome do_fiber(const Fixture& fx, const std::string& lname, const std::string& fname) {
    DGLAMorphism m{fx.algebra(lname), fx.main, fx.map(fname)};
    FiberProbe probe = homotopy_fiber_abelian_probe(m);
    bool ok = probe.cone.les_exact && probe.verdict != FiberVerdict::none;
    return {ok ? "pass" : "fail", json_report(probe)};
}

const DBVAlgebra& require_dbv(const Fixture& fx) {
    if (!fx.dbv) throw input_error("this command needs a dBV fixture (product/delta/k blocks)");
    return *fx.dbv;
}

Outcome do_bv(const Fixture& fx, const std::string& sub, std::optional<int> trunc, int vars,
              int order) {
    const DBVAlgebra& A = require_dbv(fx);
    if (sub == "check") {
        BvReport rep = bv_check(A);
        return {rep.pass() ? "pass" : "fail", json_report(rep)};
    }
    if (sub == "dgla") {
        DGLieAlgebra L = bv_to_dgla(A);
        AxiomReport rep = check_axioms(L);
        Json j;
        j["shifted_space"] = json_space(L.space);
        j["axioms"] = json_report(rep);
        j["bracket_zero"] = L.bracket.is_zero();
        return {rep.pass() ? "pass" : "fail", j};
    }
    if (sub == "degeneration") {
        BvReport rep = bv_check(A);
        if (!rep.pass()) return {"fail", json_report(rep)};
        DegenerationResult res = degeneration_solve(A.bicomplex(), trunc);
        std::string status = res.verdict == DegVerdict::holds
                                 ? "pass"
                                 : (res.verdict == DegVerdict::fails ? "fail" : "undecided");
        return {status, json_report(res)};
    }
    if (sub == "pipeline") {
        BvPipelineResult res = bv_pipeline(A, trunc, vars, order);
        std::string status = res.verdict == "degeneration-and-consequences-verified"
                                 ? "pass"
                                 : (res.verdict == "degeneration-undecided" ? "undecided" : "fail");
        return {status, json_report(res)};
    }
    throw input_error("unknown bv subcommand: " + sub);
}

Outcome do_coder(const Fixture& fx, const std::string& sub, int trunc) {
    if (sub == "q2") {
        QSquareReport rep = q_square_check(fx.main, std::max(trunc, 3));
        return {rep.all_zero() && rep.matches ? "pass" : "fail", json_report(rep)};
    }
    if (sub == "split") {
        SplittingResult res = splitting_check(fx.main, std::max(trunc, 3));
        std::string status = res.verdict == SplitVerdict::certified
                                 ? "pass"
                                 : (res.verdict == SplitVerdict::obstructed ? "fail" : "undecided");
        return {status, json_report(res)};
    }
    throw input_error("unknown coder subcommand: " + sub);
}

LieTypeSplit lietype_split_of(const Fixture& fx, const std::string& lname, const std::string& aname,
                              std::optional<PiExample>& built) {
    if (fx.pi_example) {
        built = pi_example_build(*fx.pi_example);
        return built->split;
    }
    return LieTypeSplit{fx.main, fx.subspace(lname), fx.subspace(aname)};
}

Outcome do_lietype(const Fixture& fx, const std::string& sub, const std::string& lname,
                   const std::string& aname) {
    std::optional<PiExample> built;
    LieTypeSplit split = lietype_split_of(fx, lname, aname, built);
    if (sub == "check") {
        LieTypeReport rep = lietype_check(split);
        return {rep.pass() ? "pass" : "fail", json_report(rep)};
    }
    if (sub == "dgla") {
        DGLieAlgebra A = lietype_dgla(split);
        AxiomReport rep = check_axioms(A);
        Json j;
        j["space"] = json_space(A.space);
        j["axioms"] = json_report(rep);
        j["bracket_zero"] = A.bracket.is_zero();
        return {rep.pass() ? "pass" : "fail", j};
    }
    if (sub == "btt") {
        BTTCertificate cert = lietype_btt(split);
        return {cert.verdict == BTTVerdict::certified ? "pass" : "fail", json_report(cert)};
    }
    throw input_error("unknown lietype subcommand: " + sub);
}

Outcome do_mc(const Fixture& fx, int vars, int order, int max_order) {
    ArtinianBase base(vars, order);
    ProbeResult res = unobstructed_probe(fx.main, base, std::min(max_order, order));
    return {res.pass ? "pass" : "fail", json_report(res, base)};
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Exact-rational workbench for DG-Lie algebra homotopy-abelianity certificates"};
    app.require_subcommand(1);
    // keep -h free: btt takes --h as the subspace name
    app.set_help_flag("--help", "print help");
    bool json_out = false;
    app.add_flag("--json", json_out, "emit the machine-readable report");

    std::string file;
    bool exhaustive = false;
    std::string lname, iname, hname, fname, aname;
    int trunc = -1;
    int vars = 1, order = 5, max_order = 5;
    std::string bv_sub, coder_sub, lt_sub;

    auto add_file = [&](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help");
        cmd->add_option("file", file, "fixture file")->required();
    };

    CLI::App* c_check = app.add_subcommand("check", "verify the DG-Lie axioms");
    add_file(c_check);
    c_check->add_flag("--exhaustive", exhaustive, "list every violation");

    CLI::App* c_coh = app.add_subcommand("cohomology", "cohomology report with representatives");
    add_file(c_coh);

    CLI::App* c_btt = app.add_subcommand("btt", "abstract BTT certificate");
    add_file(c_btt);
    c_btt->add_option("--l", lname, "auxiliary algebra for L (default: scenario or \"L\")");
    c_btt->add_option("--i", iname, "Cartan homotopy map name");
    c_btt->add_option("--h", hname, "sub-DGLA subspace name");

    CLI::App* c_bttr = app.add_subcommand("btt-relaxed", "relaxed (obstruction-only) certificate");
    add_file(c_bttr);
    c_bttr->add_option("--l", lname, "auxiliary algebra for L");
    c_bttr->add_option("--i", iname, "Cartan homotopy map name");
    c_bttr->add_option("--h", hname, "sub-DGLA subspace name");

    CLI::App* c_fiber = app.add_subcommand("fiber", "cone model and long exact sequence probe");
    add_file(c_fiber);
    c_fiber->add_option("--l", lname, "auxiliary source algebra");
    c_fiber->add_option("--f", fname, "morphism name");

    CLI::App* c_bv = app.add_subcommand("bv", "differential BV algebra checks");
    c_bv->add_option("subcommand", bv_sub, "check|dgla|degeneration|pipeline")->required();
    add_file(c_bv);
    c_bv->add_option("--trunc", trunc, "chain-length truncation for k = -1");
    c_bv->add_option("--vars", vars, "probe variables");
    c_bv->add_option("--order", order, "probe order");

    CLI::App* c_coder = app.add_subcommand("coder", "symmetric-coalgebra checks");
    c_coder->add_option("subcommand", coder_sub, "q2|split")->required();
    add_file(c_coder);
    c_coder->add_option("--trunc", trunc, "word-length truncation (>= 3)");

    CLI::App* c_lt = app.add_subcommand("lietype", "derived brackets of Lie type");
    c_lt->add_option("subcommand", lt_sub, "check|dgla|btt")->required();
    add_file(c_lt);
    c_lt->add_option("--l", lname, "sub-DGLA subspace name");
    c_lt->add_option("--a", aname, "complement subspace name");

    CLI::App* c_mc = app.add_subcommand("mc", "Maurer-Cartan unobstructedness probe");
    add_file(c_mc);
    c_mc->add_option("--vars", vars, "base variables g");
    c_mc->add_option("--order", order, "base truncation order n");
    c_mc->add_option("--max-order", max_order, "probe order K");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        int code = app.exit(e, os, os);
        return {code == 0 ? 0 : 2, os.str()};
    }

    Json envelope;
    envelope["tool"] = "dgla";
    std::string command;
    Outcome outcome;
    try {
        Fixture fx = load_fixture(file);
        if (app.got_subcommand(c_check)) {
            command = "check";
            outcome = do_check(fx, exhaustive);
        } else if (app.got_subcommand(c_coh)) {
            command = "cohomology";
            outcome = do_cohomology(fx);
        } else if (app.got_subcommand(c_btt) || app.got_subcommand(c_bttr)) {
            bool relaxed = app.got_subcommand(c_bttr);
            command = relaxed ? "btt-relaxed" : "btt";
            if (lname.empty()) lname = scenario_default(fx, "l", "L");
            if (iname.empty()) iname = scenario_default(fx, "i", "i");
            if (hname.empty()) hname = scenario_default(fx, "h", "H");
            outcome = do_btt(fx, lname, iname, hname, relaxed);
        } else if (app.got_subcommand(c_fiber)) {
            command = "fiber";
            if (lname.empty()) lname = scenario_default(fx, "l", "L");
            if (fname.empty()) fname = scenario_default(fx, "f", "f");
            outcome = do_fiber(fx, lname, fname);
        } else if (app.got_subcommand(c_bv)) {
            command = "bv " + bv_sub;
            std::optional<int> tr;
            if (trunc >= 0)
                tr = trunc;
            else if (fx.scenario.is_object() && fx.scenario.contains("trunc"))
                tr = fx.scenario["trunc"].get<int>();
            outcome = do_bv(fx, bv_sub, tr, vars, order);
        } else if (app.got_subcommand(c_coder)) {
            command = "coder " + coder_sub;
            outcome = do_coder(fx, coder_sub, trunc >= 0 ? trunc : 3);
        } else if (app.got_subcommand(c_lt)) {
            command = "lietype " + lt_sub;
            if (lname.empty()) lname = scenario_default(fx, "l", "L");
            if (aname.empty()) aname = scenario_default(fx, "a", "A");
            outcome = do_lietype(fx, lt_sub, lname, aname);
        } else if (app.got_subcommand(c_mc)) {
            command = "mc";
            outcome = do_mc(fx, vars, order, max_order);
        }
        envelope["command"] = command;
        envelope["fixture"] = basename_of(file);
        envelope["status"] = outcome.status;
        envelope["result"] = outcome.payload;
    } catch (const input_error& e) {
        Json err;
        err["tool"] = "dgla";
        err["status"] = "error";
        err["error"] = e.what();
        std::string text = json_out ? err.dump(2) + "\n" : std::string("error: ") + e.what() + "\n";
        return {2, text};
    }

    std::string text;
    if (json_out)
        text = envelope.dump(2) + "\n";
    else
        text = render_human(envelope, verbosity());
    return {outcome.status == "pass" ? 0 : 1, text};
}

}  // namespace dgla
