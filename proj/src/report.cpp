#include "dgla/report.hpp"

#include <sstream>

namespace dgla {

Json json_vec(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
}

Json json_mat(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_str(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Json json_elt(const Elt& e) {
    Json j;
    j["degree"] = e.degree;
    j["coords"] = json_vec(e.v);
    return j;
}

Json json_space(const GradedSpace& s) {
    Json dims = Json::object();
    for (int d : s.degrees()) dims[std::to_string(d)] = s.dim(d);
    return dims;
}

Json json_graded_map(const GradedMap& f) {
    Json j;
    j["degree"] = f.degree();
    Json blocks = Json::object();
    for (int d : f.source().degrees())
        if (!f.block(d).is_zero()) blocks[std::to_string(d)] = json_mat(f.block(d));
    j["blocks"] = blocks;
    return j;
}

namespace {

Json json_violation(const AxiomViolation& v) {
    Json j;
    j["axiom"] = v.axiom;
    Json tuple = Json::array();
    for (auto& [deg, idx] : v.tuple) {
        Json slot;
        slot["degree"] = deg;
        slot["index"] = idx;
        tuple.push_back(slot);
    }
    j["tuple"] = tuple;
    j["lhs"] = json_elt(v.lhs);
    j["rhs"] = json_elt(v.rhs);
    return j;
}

}  // namespace

Json json_report(const AxiomReport& r) {
    Json j;
    j["pass"] = r.pass();
    j["d_squared"] = r.d_squared;
    j["skew"] = r.skew;
    j["jacobi"] = r.jacobi;
    j["leibniz"] = r.leibniz;
    if (r.first_violation) j["first_violation"] = json_violation(*r.first_violation);
    if (!r.all_violations.empty()) {
        Json all = Json::array();
        for (auto& v : r.all_violations) all.push_back(json_violation(v));
        j["all_violations"] = all;
    }
    return j;
}

Json json_report(const MorphismReport& r) {
    Json j;
    j["pass"] = r.pass();
    j["chain"] = r.chain;
    j["brackets"] = r.brackets;
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

Json json_report(const CohomologyReport& r) {
    Json j;
    Json dims = Json::object();
    for (int d : r.h.degrees()) dims[std::to_string(d)] = r.h.dim(d);
    j["h_dims"] = dims;
    Json reps = Json::object();
    for (auto& [deg, vecs] : r.representatives) {
        Json per = Json::array();
        for (auto& v : vecs) per.push_back(json_vec(v));
        reps[std::to_string(deg)] = per;
    }
    j["representatives"] = reps;
    return j;
}

Json json_report(const InducedMapReport& r) {
    Json j;
    j["injective"] = r.injective_all;
    j["surjective"] = r.surjective_all;
    j["iso"] = r.iso_all;
    Json per = Json::object();
    for (auto& [deg, inj] : r.injective) {
        Json d;
        d["injective"] = inj;
        d["surjective"] = r.surjective.at(deg);
        d["iso"] = r.iso.at(deg);
        per[std::to_string(deg)] = d;
    }
    j["per_degree"] = per;
    return j;
}

Json json_report(const BTTCertificate& r) {
    Json j;
    switch (r.verdict) {
        case BTTVerdict::certified: j["verdict"] = "homotopy-abelian-certified"; break;
        case BTTVerdict::smoothness_only: j["verdict"] = "smoothness-only-certified"; break;
        case BTTVerdict::failed:
            j["verdict"] = "failed(hypothesis " + std::to_string(r.failed_hypothesis) + ")";
            break;
    }
    Json ledger = Json::array();
    for (auto& e : r.ledger) {
        Json item;
        item["hypothesis"] = e.name;
        item["pass"] = e.pass;
        if (!e.detail.empty()) item["detail"] = e.detail;
        ledger.push_back(item);
    }
    j["ledger"] = ledger;
    if (r.verdict == BTTVerdict::certified) j["h_star_bracket_zero"] = r.h_bracket_zero;
    Json chi = Json::object(), iota = Json::object();
    for (auto& [deg, inj] : r.chi_injective) chi[std::to_string(deg)] = inj;
    for (auto& [deg, inj] : r.iota_injective) iota[std::to_string(deg)] = inj;
    j["inclusion_injectivity"] = chi;
    j["iota_injectivity"] = iota;
    return j;
}

Json json_report(const CartanReport& r) {
    Json j;
    j["pass"] = r.pass();
    j["squares_vanish"] = r.squares_vanish;
    j["bracket_identity"] = r.bracket_identity;
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

Json json_report(const BvReport& r) {
    Json j;
    j["pass"] = r.pass();
    j["associative"] = r.associative;
    j["commutative"] = r.commutative;
    j["unital"] = r.unital;
    j["d_squared"] = r.d_squared;
    j["delta_squared"] = r.delta_squared;
    j["delta_unit"] = r.delta_unit;
    j["derivation"] = r.derivation;
    j["anticommute"] = r.anticommute;
    j["seven_term"] = r.seven_term;
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

Json json_report(const DegenerationResult& r) {
    Json j;
    switch (r.verdict) {
        case DegVerdict::holds: j["verdict"] = "holds"; break;
        case DegVerdict::fails: j["verdict"] = "fails"; break;
        case DegVerdict::undecided: j["verdict"] = "undecided"; break;
    }
    if (!r.note.empty()) j["note"] = r.note;
    Json wit = Json::array();
    for (auto& w : r.witnesses) {
        Json e;
        e["degree"] = w.degree;
        e["generator"] = w.gen_index;
        e["a0"] = json_vec(w.a0.v);
        Json chain = Json::array();
        for (auto& ai : w.chain) chain.push_back(json_elt(ai));
        e["chain"] = chain;
        wit.push_back(e);
    }
    j["witnesses"] = wit;
    Json fails = Json::array();
    for (auto& f : r.failures) {
        Json e;
        e["degree"] = f.degree;
        e["generator"] = f.gen_index;
        e["note"] = f.note;
        fails.push_back(e);
    }
    if (!fails.empty()) j["failures"] = fails;
    return j;
}

Json json_report(const BvPipelineResult& r) {
    Json j;
    j["verdict"] = r.verdict;
    j["bv_check"] = json_report(r.bv);
    j["degeneration"] = json_report(r.degeneration);
    if (r.consequences_checked) {
        Json c;
        c["dgla_axioms_pass"] = r.axioms_pass;
        c["h_star_bracket_zero"] = r.h_bracket_zero;
        c["mc_unobstructed"] = r.mc_unobstructed;
        j["consequences"] = c;
    }
    return j;
}

Json json_report(const QSquareReport& r) {
    Json j;
    j["q_square_zero"] = r.all_zero();
    j["n1_zero"] = r.n1_zero;
    j["n2_zero"] = r.n2_zero;
    j["n3_zero"] = r.n3_zero;
    j["axioms"] = json_report(r.axioms);
    j["equivalence_holds"] = r.matches;
    return j;
}

Json json_report(const SplittingResult& r) {
    Json j;
    switch (r.verdict) {
        case SplitVerdict::certified: j["verdict"] = "homotopy-abelian-certified"; break;
        case SplitVerdict::obstructed: j["verdict"] = "obstructed"; break;
        case SplitVerdict::stage_limited:
            j["verdict"] = "surjective-up-to-stage-" + std::to_string(r.trunc);
            break;
    }
    j["exact"] = r.exact;
    j["truncation"] = r.trunc;
    if (r.exactness_bound >= 0) j["one_sided_bound"] = r.exactness_bound;
    Json cls = Json::array();
    for (auto& c : r.classes) {
        Json e;
        e["degree"] = c.degree;
        e["index"] = c.index;
        e["status"] = c.status == SplitStatus::exact_success
                          ? "solved"
                          : (c.status == SplitStatus::obstructed ? "obstructed-at-stage-" +
                                                                       std::to_string(c.stage)
                                                                 : "open-at-stage-" +
                                                                       std::to_string(c.stage));
        cls.push_back(e);
    }
    j["classes"] = cls;
    if (r.verdict == SplitVerdict::certified) {
        Json c;
        c["h_star_bracket_zero"] = r.h_bracket_zero;
        c["cartan_homotopy_ok"] = r.cartan_ok;
        c["lie_derivatives_in_ker_b"] = r.l_in_ker_b;
        Json inj = Json::object();
        for (auto& [deg, ok] : r.kerb_injective) inj[std::to_string(deg)] = ok;
        c["ker_b_injectivity"] = inj;
        j["certificate"] = c;
    }
    return j;
}

Json json_report(const LieTypeReport& r) {
    Json j;
    j["pass"] = r.pass();
    j["direct_sum"] = r.direct_sum;
    j["l_sub_dgla"] = r.l_sub_dgla;
    j["a_brackets_vanish"] = r.a_brackets_vanish;
    j["da_bracket_in_a"] = r.da_bracket_in_a;
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

Json json_report(const FiberProbe& r) {
    Json j;
    switch (r.verdict) {
        case FiberVerdict::homotopy_abelian: j["verdict"] = "fiber-homotopy-abelian"; break;
        case FiberVerdict::unobstructed_only: j["verdict"] = "fiber-def-unobstructed"; break;
        case FiberVerdict::none: j["verdict"] = "no-certificate"; break;
    }
    j["h_of_f"] = json_report(r.h_of_f);
    Json evidence = Json::object();
    for (int deg : r.h_of_f.on_h.source().degrees())
        evidence[std::to_string(deg)] = json_mat(r.h_of_f.on_h.block(deg));
    j["h_of_f_matrices"] = evidence;
    j["les_exact"] = r.cone.les_exact;
    Json hc = Json::object();
    for (int d : r.cone.h_cone.h.degrees()) hc[std::to_string(d)] = r.cone.h_cone.h.dim(d);
    j["cone_h_dims"] = hc;
    return j;
}

Json json_report(const ProbeResult& r, const ArtinianBase& base) {
    Json j;
    j["pass"] = r.pass;
    j["h1_dim"] = r.h1_dim;
    j["vars"] = base.vars();
    j["order"] = base.order();
    Json runs = Json::array();
    for (auto& run : r.runs) {
        Json e;
        Json tuple = Json::array();
        for (int t : run.class_tuple) tuple.push_back(t);
        e["classes"] = tuple;
        e["success"] = run.state.success;
        e["achieved_order"] = run.state.achieved_order;
        if (!run.state.success) e["failed_order"] = run.state.failed_order;
        Json ledger = Json::object();
        for (auto& [order, per_mono] : run.state.ledger) {
            Json po = Json::object();
            for (auto& [mono, cls] : per_mono) po[base.mono_str(mono)] = json_vec(cls);
            ledger[std::to_string(order)] = po;
        }
        e["obstruction_ledger"] = ledger;
        runs.push_back(e);
    }
    j["runs"] = runs;
    return j;
}

namespace {

void render_node(std::ostringstream& os, const std::string& key, const Json& v, int indent,
                 int verbosity) {
    std::string pad((std::size_t)indent * 2, ' ');
    if (v.is_object()) {
        os << pad << key << ":\n";
        for (auto it = v.begin(); it != v.end(); ++it)
            render_node(os, it.key(), it.value(), indent + 1, verbosity);
    } else if (v.is_array()) {
        if (verbosity < 2 && v.size() > 8) {
            os << pad << key << ": [" << v.size() << " entries]\n";
            return;
        }
        os << pad << key << ": " << v.dump() << "\n";
    } else {
        os << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

}  // namespace

std::string render_human(const Json& report, int verbosity) {
    std::ostringstream os;
    for (auto it = report.begin(); it != report.end(); ++it) {
        if (verbosity < 1 && it.key() != "command" && it.key() != "status" && it.key() != "fixture")
            continue;
        render_node(os, it.key(), it.value(), 0, verbosity);
    }
    return os.str();
}

}  // namespace dgla
