#include "nichols/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "nichols/errors.hpp"
#include "nichols/reflection.hpp"

namespace nichols::cli {

using nlohmann::ordered_json;

namespace {

std::vector<int> one_based(const std::vector<int>& nodes) {
    std::vector<int> out;
    for (int v : nodes) out.push_back(v + 1);
    return out;
}

ordered_json matrix_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(row);
    }
    return rows;
}

std::string root_list(const std::vector<IntVector>& roots) {
    std::string s;
    for (const auto& r : roots) s += (s.empty() ? "" : " ") + vector_to_string(r);
    return s.empty() ? "-" : s;
}

ordered_json analysis_json(const AnalysisReport& r) {
    ordered_json j;
    j["input"] = serialize_braiding(r.input);
    j["rank"] = r.input.rank();
    j["cartan_matrix"] = r.cartan ? matrix_json(r.cartan->matrix()) : ordered_json(nullptr);
    if (r.finite_type) {
        ordered_json ft;
        ft["finite"] = r.finite_type->finite;
        ft["components"] = ordered_json::array();
        for (const auto& c : r.finite_type->components)
            ft["components"].push_back({{"nodes", one_based(c.nodes)}, {"label", c.label}});
        ft["symmetrizer"] = r.finite_type->symmetrizer ? ordered_json(*r.finite_type->symmetrizer) : ordered_json(nullptr);
        j["finite_type"] = ft;
    } else {
        j["finite_type"] = nullptr;
    }
    ordered_json g;
    g["states"] = r.states;
    g["arrows"] = r.arrows;
    g["cap_exceeded"] = r.cap_exceeded;
    g["obstructions"] = ordered_json::array();
    for (const auto& o : r.obstructions)
        g["obstructions"].push_back({{"state", o.state}, {"index", o.label + 1}, {"blocking", o.blocking + 1}});
    j["groupoid"] = g;
    j["shown_finite"] = r.shown_finite();
    j["positive_real_roots"] = r.positive_roots ? ordered_json(*r.positive_roots) : ordered_json(nullptr);
    if (r.weyl_groupoid_size) {
        ordered_json w;
        w["elements"] = *r.weyl_groupoid_size;
        if (r.brandt) {
            w["brandt_pass"] = r.brandt->pass();
            w["brandt_axioms"] = ordered_json::array();
            for (const auto& a : r.brandt->axioms)
                w["brandt_axioms"].push_back({{"axiom", a.axiom}, {"pass", a.pass}, {"witness", a.witness}});
        } else {
            w["brandt_pass"] = nullptr;
        }
        j["weyl_groupoid"] = w;
    } else {
        j["weyl_groupoid"] = nullptr;
    }
    return j;
}

ordered_json oracle_json(const OracleReport& r) {
    ordered_json j;
    j["max_degree"] = r.max_degree;
    int64_t total = 0;
    std::vector<IntVector> degrees;
    for (const auto& [d, v] : r.hilbert) degrees.push_back(d);
    std::sort(degrees.begin(), degrees.end(), graded_lex_less);
    j["hilbert"] = ordered_json::array();
    for (const auto& d : degrees) {
        j["hilbert"].push_back({{"degree", d}, {"dimension", r.hilbert.at(d)}});
        total += r.hilbert.at(d);
    }
    j["total_dimension_to_cutoff"] = total;
    if (r.cutoff_error) {
        j["pbw"] = nullptr;
        j["error"] = *r.cutoff_error;
    } else {
        j["pbw"] = ordered_json::array();
        for (const auto& p : r.pbw)
            j["pbw"].push_back({{"root", p.root},
                                {"multiplicity", p.multiplicity},
                                {"height", p.height ? ordered_json(*p.height) : ordered_json(nullptr)},
                                {"height_bound", p.height_bound}});
    }
    return j;
}

std::string analysis_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "input:\n" << serialize_braiding(r.input);
    if (r.cartan) {
        os << "cartan matrix:\n";
        const auto& m = r.cartan->matrix();
        for (int i = 0; i < m.rows(); ++i) {
            os << ' ';
            for (int k = 0; k < m.cols(); ++k) os << ' ' << (m(i, k) < 0 ? "" : " ") << m(i, k);
            os << '\n';
        }
        os << "finite type: " << (r.finite_type->finite ? "yes" : "no");
        for (const auto& c : r.finite_type->components) {
            os << " [" << c.label << " on";
            for (int v : c.nodes) os << ' ' << v + 1;
            os << ']';
        }
        os << '\n';
        if (r.finite_type->symmetrizer) {
            os << "symmetrizer:";
            for (auto d : *r.finite_type->symmetrizer) os << ' ' << d;
            os << '\n';
        } else {
            os << "symmetrizer: none\n";
        }
    } else {
        os << "cartan matrix: not Cartan type\n";
    }
    os << "groupoid: " << r.states << " states, " << r.arrows << " arrows, " << r.obstructions.size()
       << " obstructions" << (r.cap_exceeded ? ", cap exceeded, not shown finite" : "") << '\n';
    for (const auto& o : r.obstructions)
        os << "  obstruction: state " << o.state << " index " << o.label + 1 << " blocked by " << o.blocking + 1 << '\n';
    if (r.positive_roots)
        os << "positive real roots (" << r.positive_roots->size() << "): " << root_list(*r.positive_roots) << '\n';
    else if (!r.obstructions.empty())
        os << "positive real roots: undefined, reflection obstructed\n";
    else
        os << "positive real roots: not shown finite\n";
    if (r.weyl_groupoid_size) {
        os << "weyl groupoid: " << *r.weyl_groupoid_size << " elements";
        if (r.brandt) {
            os << ", brandt axioms " << (r.brandt->pass() ? "pass" : "fail");
            if (auto f = r.brandt->first_failure()) os << " (axiom " << f->axiom << ": " << f->witness << ')';
        } else {
            os << ", brandt axioms not checked";
        }
        os << '\n';
    }
    return os.str();
}

std::string oracle_text(const OracleReport& r) {
    std::ostringstream os;
    std::vector<IntVector> degrees;
    for (const auto& [d, v] : r.hilbert) degrees.push_back(d);
    std::sort(degrees.begin(), degrees.end(), graded_lex_less);
    int64_t total = 0;
    os << "hilbert table to total degree " << r.max_degree << ":\n";
    for (const auto& d : degrees) {
        const auto v = r.hilbert.at(d);
        total += v;
        if (v) os << "  " << vector_to_string(d) << ' ' << v << '\n';
    }
    os << "total dimension to cutoff: " << total << '\n';
    if (r.cutoff_error) {
        os << "pbw data: unavailable (" << *r.cutoff_error << ")\n";
        return os.str();
    }
    os << "pbw data:\n";
    for (const auto& p : r.pbw) {
        os << "  root " << vector_to_string(p.root) << " multiplicity " << p.multiplicity << " height ";
        if (p.height) os << *p.height;
        else os << ">= " << p.height_bound;
        os << '\n';
    }
    return os.str();
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

AnalysisReport analyze(const BraidingMatrix& q, const Caps& caps) {
    AnalysisReport r{q, is_cartan_type(q), std::nullopt, 0, 0, {}, false, std::nullopt, std::nullopt, std::nullopt};
    if (r.cartan) r.finite_type = is_finite_type(*r.cartan);
    const auto g = build_groupoid(q, caps);
    r.states = g.states().size();
    r.arrows = g.arrows().size();
    r.obstructions = g.obstructions();
    r.cap_exceeded = g.cap_exceeded();
    if (r.cap_exceeded || !r.obstructions.empty()) return r;
    const auto orbit = basis_orbit(g, caps);
    if (orbit.cap_exceeded) {
        r.cap_exceeded = true;
        return r;
    }
    const auto roots = real_roots(orbit);
    r.positive_roots.emplace(roots.positive().begin(), roots.positive().end());
    try {
        const auto elements = weyl_brandt_elements(q, caps);
        r.weyl_groupoid_size = elements.size();
        if (elements.size() <= kBrandtCheckLimit) r.brandt = check_brandt_axioms(elements);
    } catch (const CapExceeded&) {
    }
    return r;
}

OracleReport run_oracle(const BraidingMatrix& q, int max_degree, int threads) {
    OracleReport r;
    r.max_degree = max_degree;
    r.hilbert = hilbert_data(q, max_degree, threads);
    try {
        r.pbw = pbw_infer(r.hilbert, q.rank(), max_degree);
    } catch (const NegativeDiscrepancy& e) {
        r.cutoff_error = e.what();
    } catch (const AmbiguousFactorization& e) {
        r.cutoff_error = e.what();
    }
    return r;
}

Comparison compare_roots(const AnalysisReport& analysis, const OracleReport& oracle) {
    Comparison c;
    std::set<IntVector, GradedLexLess> oracle_set, groupoid_set;
    for (const auto& p : oracle.pbw) {
        oracle_set.insert(p.root);
        if (p.multiplicity != 1) c.non_unit_multiplicity.push_back(p.root);
    }
    if (analysis.positive_roots) {
        for (const auto& r : *analysis.positive_roots)
            if (total_degree(r) <= oracle.max_degree) groupoid_set.insert(r);
    } else if (!analysis.obstructions.empty()) {
        c.note = "reflection obstructed; the groupoid has no complete set of real roots";
    } else {
        c.note = "groupoid not shown finite; its real roots are not certified";
    }
    c.groupoid_roots.assign(groupoid_set.begin(), groupoid_set.end());
    c.oracle_roots.assign(oracle_set.begin(), oracle_set.end());
    std::set_difference(groupoid_set.begin(), groupoid_set.end(), oracle_set.begin(), oracle_set.end(),
                        std::back_inserter(c.only_groupoid), GradedLexLess{});
    std::set_difference(oracle_set.begin(), oracle_set.end(), groupoid_set.begin(), groupoid_set.end(),
                        std::back_inserter(c.only_oracle), GradedLexLess{});
    c.match = analysis.shown_finite() && c.only_groupoid.empty() && c.only_oracle.empty() && c.non_unit_multiplicity.empty();
    return c;
}

std::string render_analysis(const AnalysisReport& r, bool json) {
    return json ? analysis_json(r).dump(2) + "\n" : analysis_text(r);
}

std::string render_oracle(const OracleReport& r, bool json) {
    return json ? oracle_json(r).dump(2) + "\n" : oracle_text(r);
}

std::string render_comparison(const AnalysisReport& a, const OracleReport& o, const Comparison& c, bool json) {
    if (json) {
        ordered_json j;
        j["verdict"] = c.match ? "match" : "mismatch";
        j["max_degree"] = o.max_degree;
        j["groupoid_roots"] = c.groupoid_roots;
        j["oracle_roots"] = c.oracle_roots;
        j["only_groupoid"] = c.only_groupoid;
        j["only_oracle"] = c.only_oracle;
        j["non_unit_multiplicity"] = c.non_unit_multiplicity;
        j["note"] = c.note ? ordered_json(*c.note) : ordered_json(nullptr);
        j["analysis"] = analysis_json(a);
        j["oracle"] = oracle_json(o);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << analysis_text(a) << oracle_text(o);
    os << "comparison to total degree " << o.max_degree << ": " << (c.match ? "match" : "mismatch") << '\n';
    os << "  groupoid roots: " << root_list(c.groupoid_roots) << '\n';
    os << "  oracle roots:   " << root_list(c.oracle_roots) << '\n';
    if (!c.only_groupoid.empty()) os << "  only in groupoid: " << root_list(c.only_groupoid) << '\n';
    if (!c.only_oracle.empty()) os << "  only in oracle: " << root_list(c.only_oracle) << '\n';
    if (!c.non_unit_multiplicity.empty()) os << "  multiplicity above 1: " << root_list(c.non_unit_multiplicity) << '\n';
    if (c.note) os << "  note: " << *c.note << '\n';
    return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weyl groupoids and root systems of diagonal Nichols algebras", "nichols"};
    app.require_subcommand(1);

    std::string file, dot_path;
    size_t max_objects = Caps{}.max_states;
    int max_depth = Caps{}.max_depth;
    int max_degree = 6, threads = 1, index = 0;
    bool json = false, require_finite = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "groupoid, real roots and Cartan data");
    analyze_cmd->add_option("file", file, "braiding file")->required();
    analyze_cmd->add_option("--max-objects", max_objects, "cap on groupoid states and bases")->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--max-depth", max_depth, "cap on search depth")->check(CLI::PositiveNumber);
    analyze_cmd->add_flag("--json", json, "structured output");
    analyze_cmd->add_option("--dot", dot_path, "write the groupoid graph in DOT format");
    analyze_cmd->add_flag("--require-finite", require_finite, "exit 1 unless the groupoid is shown finite");

    auto* reflect_cmd = app.add_subcommand("reflect", "print the reflected braiding");
    reflect_cmd->add_option("file", file, "braiding file")->required();
    reflect_cmd->add_option("index", index, "1-based index")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Hilbert table and PBW data by brute force");
    oracle_cmd->add_option("file", file, "braiding file")->required();
    oracle_cmd->add_option("--max-degree", max_degree, "total degree cutoff")->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    oracle_cmd->add_flag("--json", json, "structured output");

    auto* compare_cmd = app.add_subcommand("compare", "groupoid real roots against the oracle");
    compare_cmd->add_option("file", file, "braiding file")->required();
    compare_cmd->add_option("--max-degree", max_degree, "total degree cutoff")->check(CLI::PositiveNumber);
    compare_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    compare_cmd->add_option("--max-objects", max_objects, "cap on groupoid states and bases")->check(CLI::PositiveNumber);
    compare_cmd->add_option("--max-depth", max_depth, "cap on search depth")->check(CLI::PositiveNumber);
    compare_cmd->add_flag("--json", json, "structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    const auto text = read_file(file);
    if (!text) {
        err << "cannot read " << file << '\n';
        return kBadInput;
    }
    std::optional<BraidingMatrix> parsed;
    try {
        parsed = parse_braiding(*text);
    } catch (const ParseError& e) {
        err << file << ": " << e.what() << '\n';
        return kBadInput;
    }
    const BraidingMatrix& q = *parsed;
    const Caps caps{max_objects, Caps{}.max_arrows, max_depth};

    if (reflect_cmd->parsed()) {
        if (index < 1 || index > q.rank()) {
            err << "index " << index << " out of range 1.." << q.rank() << '\n';
            return kBadInput;
        }
        try {
            out << serialize_braiding(reflect_braiding(q, index - 1));
        } catch (const NotReflectable& e) {
            err << e.what() << '\n';
            return kNotReflectable;
        }
        return kOk;
    }

    if (analyze_cmd->parsed()) {
        std::ofstream dot;
        if (!dot_path.empty()) {
            dot.open(dot_path);
            if (!dot) {
                err << "cannot write " << dot_path << '\n';
                return kBadInput;
            }
        }
        const auto report = analyze(q, caps);
        if (dot.is_open()) dot << export_dot(build_groupoid(q, caps));
        out << render_analysis(report, json);
        return require_finite && !report.shown_finite() ? kMismatch : kOk;
    }

    const auto oracle = run_oracle(q, max_degree, threads);
    if (oracle_cmd->parsed()) {
        out << render_oracle(oracle, json);
        if (oracle.cutoff_error) {
            err << *oracle.cutoff_error << "; raise --max-degree\n";
            return kCutoffTooSmall;
        }
        return kOk;
    }

    if (oracle.cutoff_error) {
        err << *oracle.cutoff_error << "; raise --max-degree\n";
        return kCutoffTooSmall;
    }
    const auto analysis = analyze(q, caps);
    const auto comparison = compare_roots(analysis, oracle);
    out << render_comparison(analysis, oracle, comparison, json);
    return comparison.match ? kOk : kMismatch;
}

}  // namespace nichols::cli
