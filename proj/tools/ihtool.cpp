// Command-line front end: parse input documents, dispatch computations,
// emit human-readable or machine-readable reports.

#include <CLI11.hpp>
#include <iostream>

#include "ih/errors.hpp"
#include "ih/io.hpp"
#include "ih/surgery.hpp"

using namespace ih;

namespace {

struct Options {
    std::string format = "human";
    bool data() const { return format == "data"; }
};

void print(const Json& data, const std::string& human, const Options& opt) {
    if (opt.data())
        std::cout << data.dump(2) << "\n";
    else
        std::cout << human;
}

std::string render_dims(const GradedVectorSpace& g) {
    std::string out;
    for (int d = 0; d <= g.top_degree(); ++d) {
        if (d) out += ",";
        out += std::to_string(g.at(d));
    }
    return out.empty() ? "(empty)" : out;
}

std::string render_matrix(const RationalMatrix& m) {
    std::string out = "  [" + std::to_string(m.rows) + "x" + std::to_string(m.cols) + "]";
    if (m.is_zero()) return out + " zero\n";
    out += "\n";
    for (int i = 0; i < m.rows; ++i) {
        out += "   ";
        for (int j = 0; j < m.cols; ++j) out += " " + to_string(m.get(i, j));
        out += "\n";
    }
    return out;
}

std::string render_perversity(const Perversity& p, const Stratification& s) {
    std::string out = "perversity " + p.name();
    if (s.members.empty()) return out + " (no strata)\n";
    out += " with values";
    for (const auto& m : s.members)
        out += " " + std::to_string(m.codim) + ":" + std::to_string(p(m.codim));
    return out + "\n";
}

Subcomplex parse_rel(const std::string& path, const SimplicialComplex& ambient) {
    StratifiedComplex rel = parse_complex_document(read_json_file(path));
    std::vector<Simplex> gens;
    for (int d = 0; d <= rel.complex.dim(); ++d)
        for (const auto& s : rel.complex.simplices_of_dim(d)) {
            Simplex t;
            for (int v : s) t.push_back(ambient.require_vertex(rel.complex.vertex_name(v)));
            std::sort(t.begin(), t.end());
            gens.push_back(t);
        }
    return Subcomplex(ambient, gens);
}

GradedVectorSpace parse_dims_option(const std::string& text) {
    GradedVectorSpace g;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
        try {
            g.dims.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw parse_error("invalid dimension list '" + text + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return g;
}

void cmd_validate(const std::string& path, const Options& opt) {
    StratifiedComplex sc = parse_complex_document(read_json_file(path));
    ValidationReport report = validate(sc.complex, sc.strat);
    Json data;
    data["clean"] = report.clean();
    data["faults"] = Json::array();
    data["hints"] = Json::array();
    std::string human;
    for (const auto& item : report.items) {
        Json entry{{"code", item.code}, {"message", item.message}};
        bool fault = item.severity == ValidationItem::Severity::Fault;
        data[fault ? "faults" : "hints"].push_back(entry);
        human += std::string(fault ? "fault" : "hint") + " [" + item.code + "]: " + item.message +
                 "\n";
    }
    human += report.clean() ? "clean\n" : "not clean\n";
    print(data, human, opt);
}

void cmd_betti(const std::string& path, const std::string& perversity, const std::string& rel_path,
               bool with_cycles, const Options& opt) {
    StratifiedComplex sc = parse_complex_document(read_json_file(path));
    Perversity p = parse_perversity(perversity);
    std::optional<Subcomplex> rel;
    if (!rel_path.empty()) rel = parse_rel(rel_path, sc.complex);
    IHTable table = ih_betti(sc.complex, sc.strat, p, rel);

    Json data;
    data["perversity"] = perversity_table(p, sc.strat);
    data["dims"] = emit_graded(table.dims);
    if (with_cycles) {
        data["cycles"] = Json::array();
        for (const auto& level : table.basis_cycles) {
            Json row = Json::array();
            for (const auto& c : level) row.push_back(emit_chain(c, sc.complex));
            data["cycles"].push_back(row);
        }
    }
    std::string human = render_perversity(p, sc.strat);
    human += "degrees 0.." + std::to_string(table.dims.top_degree()) + ": " +
             render_dims(table.dims) + "\n";
    print(data, human, opt);
}

void cmd_emit_complex(const StratifiedComplex& sc, const Options& opt) {
    Json doc = emit_complex_document(sc);
    std::string human = "complex with " + std::to_string(sc.complex.simplex_count()) +
                        " simplices, dimension " + std::to_string(sc.complex.dim()) + "\n" +
                        doc.dump(2) + "\n";
    print(doc, human, opt);
}

void cmd_linkmap(const std::string& xpath, const std::string& ypath, const std::string& vertex,
                 int degree, const std::string& perversity, const Options& opt) {
    StratifiedComplex x = parse_complex_document(read_json_file(xpath));
    StratifiedComplex y = parse_complex_document(read_json_file(ypath));
    LinkMapResult r = link_map(x, y, vertex, degree, parse_perversity(perversity));
    Json data;
    data["matrix"] = emit_matrix(r.matrix);
    data["zero"] = r.is_zero;
    data["verdict"] = r.is_zero ? "zero, extension permitted" : "nonzero, extension obstructed";
    std::string human = std::string("link map in degree ") + std::to_string(degree) + ":\n" +
                        render_matrix(r.matrix) +
                        (r.is_zero ? "zero, extension permitted\n"
                                   : "nonzero, extension obstructed\n");
    print(data, human, opt);
}

void cmd_surgery(const std::string& xpath, const std::string& ypath, const std::string& apex,
                 const std::string& cycle_path, bool subdivide, const Options& opt) {
    SurgeryProblem problem;
    problem.x = parse_complex_document(read_json_file(xpath));
    problem.y = parse_complex_document(read_json_file(ypath));
    problem.apex = apex;
    problem.xi = parse_chain(read_json_file(cycle_path), problem.x.complex);
    if (subdivide) problem = subdivide_problem(problem);

    Chain eta = extract_link_cycle(problem);
    auto outcome = repair_cycle(problem);

    Json data;
    data["link_cycle"] = emit_chain(eta, problem.x.complex);
    data["obstructed"] = !outcome.has_value();
    if (outcome) {
        data["repaired"] = emit_chain(outcome->repaired, problem.y.complex);
        data["bounding"] = emit_chain(outcome->bounding, problem.y.complex);
        data["middle_allowable"] = outcome->middle_allowable_in_y;
        data["log_allowable"] = outcome->log_allowable_in_y;
    } else {
        data["repaired"] = nullptr;
        data["bounding"] = nullptr;
    }
    std::string human = "link cycle has " + std::to_string(eta.terms.size()) + " terms\n";
    if (outcome) {
        human += "repaired cycle has " + std::to_string(outcome->repaired.terms.size()) +
                 " terms, avoids the apex\n";
        human += std::string("middle-allowable in the ambient space: ") +
                 (outcome->middle_allowable_in_y ? "yes" : "no") + "\n";
    } else {
        human += "obstructed: the link cycle does not bound in the ambient link\n";
    }
    print(data, human, opt);
}

void cmd_lift(const std::string& ypath, const std::string& cycle_path, const Options& opt) {
    StratifiedComplex y = parse_complex_document(read_json_file(ypath));
    Chain z = parse_chain(read_json_file(cycle_path), y.complex);
    auto lifted = lift_class(y.complex, y.strat, z);
    Json data;
    data["found"] = lifted.has_value();
    data["lifted"] = lifted ? emit_chain(*lifted, y.complex) : Json(nullptr);
    std::string human = lifted ? "lift found with " + std::to_string(lifted->terms.size()) +
                                     " terms\n"
                               : "no lift: the class is not in the image of middle-perversity "
                                 "intersection homology\n";
    print(data, human, opt);
}

void cmd_flag(const std::vector<std::string>& paths, const Options& opt) {
    FlagInput flag;
    for (const auto& p : paths) flag.steps.push_back(parse_complex_document(read_json_file(p)));
    auto classes = flag_classes(flag);
    Json data;
    data["classes"] = Json::array();
    data["degrees"] = Json::array();
    std::string human;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        Json row = Json::array();
        for (const auto& v : classes[i]) row.push_back(to_string(v));
        data["classes"].push_back(row);
        int degree = flag.steps[0].complex.dim() - static_cast<int>(i);
        data["degrees"].push_back(degree);
        human += "step " + std::to_string(i) + " (degree " + std::to_string(degree) + "): [";
        for (std::size_t j = 0; j < classes[i].size(); ++j)
            human += (j ? "," : "") + to_string(classes[i][j]);
        human += "]\n";
    }
    print(data, human, opt);
}

void cmd_cone_formula(const std::string& path, const std::string& dims_text, const Options& opt) {
    if (!dims_text.empty()) {
        GradedVectorSpace ih_l = parse_dims_option(dims_text);
        GradedVectorSpace out = cone_formula(ih_l, static_cast<int>(ih_l.dims.size()));
        Json data;
        data["formula"] = emit_graded(out);
        print(data, "formula side: " + render_dims(out) + "\n", opt);
        return;
    }
    StratifiedComplex sc = parse_complex_document(read_json_file(path));
    ConeFormulaReport report = verify_cone_formula(sc.complex, sc.strat);
    Json data;
    data["link_ih"] = emit_graded(report.link_ih);
    data["formula"] = emit_graded(report.formula_side);
    data["engine"] = emit_graded(report.engine_side);
    data["apex_codim"] = report.apex_codim;
    data["apex_perversity_value"] = report.apex_perversity_value;
    data["match"] = report.match;
    data["diffs"] = Json::array();
    for (const auto& d : report.diffs) data["diffs"].push_back(d);
    std::string human = "link IH:  " + render_dims(report.link_ih) + "\n";
    human += "formula:  " + render_dims(report.formula_side) + "\n";
    human += "engine:   " + render_dims(report.engine_side) + "\n";
    human += "apex codim " + std::to_string(report.apex_codim) + " with perversity value " +
             std::to_string(report.apex_perversity_value) + "\n";
    human += report.match ? "match\n" : "MISMATCH\n";
    for (const auto& d : report.diffs) human += "  " + d + "\n";
    print(data, human, opt);
}

void cmd_table(const std::string& path, int n, const Options& opt) {
    PairMorphismData d = parse_pair_morphism(read_json_file(path));
    if (n <= 0) n = d.y.dims.top_degree() / 2;
    ConeTableResult r = projective_cone_table(d, n);
    Json data;
    data["kx"] = emit_graded(r.kx);
    data["ky"] = emit_graded(r.ky);
    data["kind_x"] = r.kind_x;
    data["kind_y"] = r.kind_y;
    data["maps"] = Json::array();
    data["ranks"] = Json::array();
    for (const auto& m : r.maps) {
        data["maps"].push_back(emit_matrix(m));
        data["ranks"].push_back(rank(m));
    }
    std::string human = "cone over the subspace:  " + render_dims(r.kx) + "\n";
    human += "cone over the ambient:   " + render_dims(r.ky) + "\n";
    human += "map ranks per degree:   ";
    for (const auto& m : r.maps) human += " " + std::to_string(rank(m));
    human += "\n";
    print(data, human, opt);
}

void cmd_gysin(const std::string& path, const Options& opt) {
    LefschetzData base = parse_lefschetz(read_json_file(path));
    GysinLinkResult r = gysin_link(base);
    Json data;
    data["link_dims"] = emit_graded(r.link_dims);
    data["p_pull"] = Json::array();
    data["p_push"] = Json::array();
    for (const auto& m : r.p_pull) data["p_pull"].push_back(emit_matrix(m));
    for (const auto& m : r.p_push) data["p_push"].push_back(emit_matrix(m));
    print(data, "link dims: " + render_dims(r.link_dims) + "\n", opt);
}

void cmd_chase(const std::string& path, int degree, const Options& opt) {
    PairMorphismData d = parse_pair_morphism(read_json_file(path));
    ChaseResult r = link_map_chase(d, degree);
    Json data;
    data["matrix"] = emit_matrix(r.matrix);
    data["zero"] = r.zero;
    data["certificate"] = r.certificate;
    std::string human;
    for (const auto& step : r.certificate) human += "- " + step + "\n";
    human += std::string("link map is ") + (r.zero ? "zero" : "nonzero") + "\n";
    print(data, human, opt);
}

int cmd_hl(const std::string& path, const Options& opt) {
    Json doc = read_json_file(path);
    LefschetzData x = parse_lefschetz(doc.contains("x") ? doc["x"] : Json::object());
    LefschetzData y = parse_lefschetz(doc.contains("y") ? doc["y"] : Json::object());
    std::vector<RationalMatrix> i_star;
    if (doc.contains("i_star"))
        for (const auto& m : doc["i_star"]) i_star.push_back(parse_matrix(m));
    bool link_zero = doc.value("link_middle_map_is_zero", false);
    int n = doc.value("n", y.dims.top_degree() / 2);

    HardLefschetzVerdict v = hard_lefschetz_from_links(x, y, i_star, link_zero, n);
    Json data;
    data["weak_lefschetz_ok"] = v.weak_lefschetz_ok;
    data["palindromic_ok"] = v.palindromic_ok;
    data["link_map_zero"] = v.link_map_zero;
    data["concluded"] = v.concluded;
    data["lambda_surjective"] = v.lambda_surjective;
    data["lambda_iso"] = v.lambda_iso;
    data["lambda_rank"] = v.lambda_rank;
    data["target_dim"] = v.target_dim;
    data["certificate"] = v.certificate;
    std::string human;
    for (const auto& step : v.certificate) human += "- " + step + "\n";
    human += v.concluded ? (v.lambda_iso ? "hyperplane operator certified as an isomorphism\n"
                                         : "derivation complete but the data disagrees\n")
                         : "no conclusion (precondition gate)\n";
    print(data, human, opt);
    return v.concluded ? 0 : 2;
}

void cmd_chern(const std::string& path, const Options& opt) {
    PolarData p = parse_polar(read_json_file(path));
    auto classes = chern_mather_lift(p);
    Json data;
    data["classes"] = Json::array();
    data["degrees"] = Json::array();
    std::string human;
    for (int i = 0; i <= p.n; ++i) {
        Json row = Json::array();
        for (const auto& v : classes[i]) row.push_back(to_string(v));
        data["classes"].push_back(row);
        data["degrees"].push_back(2 * (p.n - i));
        human += "c_" + std::to_string(i) + " in degree " + std::to_string(2 * (p.n - i)) + ": [";
        for (std::size_t j = 0; j < classes[i].size(); ++j)
            human += (j ? "," : "") + to_string(classes[i][j]);
        human += "]\n";
    }
    print(data, human, opt);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic intersection homology engine for stratified "
                 "simplicial pseudomanifolds"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format: human or data")
        ->check(CLI::IsMember({"human", "data"}));

    std::string doc_path, second_path, rel_path, cycle_path, vertex, apex;
    std::string perversity = "middle";
    std::string dims_text;
    std::vector<std::string> flag_paths;
    std::string apex_name = "apex", north = "north", south = "south";
    int degree = 0, n = 0;
    bool with_cycles = false, subdivide = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check a stratified complex document");
    validate_cmd->add_option("doc", doc_path)->required();

    auto* betti_cmd = app.add_subcommand("betti", "Intersection homology Betti numbers");
    betti_cmd->add_option("doc", doc_path)->required();
    betti_cmd->add_option("--perversity", perversity, "zero|middle|log|top|k=<int>|custom=<c:v,...>");
    betti_cmd->add_option("--rel", rel_path, "Relative subcomplex document");
    betti_cmd->add_flag("--cycles", with_cycles, "Include basis cycles in the output");

    auto* cone_cmd = app.add_subcommand("cone", "Cone over a stratified complex");
    cone_cmd->add_option("doc", doc_path)->required();
    cone_cmd->add_option("--apex", apex_name, "Name for the new apex vertex");

    auto* suspend_cmd = app.add_subcommand("suspend", "Suspension of a stratified complex");
    suspend_cmd->add_option("doc", doc_path)->required();
    suspend_cmd->add_option("--north", north);
    suspend_cmd->add_option("--south", south);

    auto* link_cmd = app.add_subcommand("link", "Link of a vertex");
    link_cmd->add_option("doc", doc_path)->required();
    link_cmd->add_option("--vertex", vertex)->required();

    auto* linkmap_cmd = app.add_subcommand("linkmap", "Induced map on the links of a singular vertex");
    linkmap_cmd->add_option("xdoc", doc_path)->required();
    linkmap_cmd->add_option("ydoc", second_path)->required();
    linkmap_cmd->add_option("--vertex", vertex)->required();
    linkmap_cmd->add_option("--degree", degree)->required();
    linkmap_cmd->add_option("--perversity", perversity);

    auto* surgery_cmd = app.add_subcommand("surgery", "Repair a cycle across an isolated singular apex");
    surgery_cmd->add_option("xdoc", doc_path)->required();
    surgery_cmd->add_option("ydoc", second_path)->required();
    surgery_cmd->add_option("--apex", apex)->required();
    surgery_cmd->add_option("--cycle", cycle_path)->required();
    surgery_cmd->add_flag("--subdivide", subdivide, "Subdivide the problem once first");

    auto* lift_cmd = app.add_subcommand("lift", "Find a middle-perversity representative of a log-perversity cycle");
    lift_cmd->add_option("ydoc", doc_path)->required();
    lift_cmd->add_option("--cycle", cycle_path)->required();

    auto* flag_cmd = app.add_subcommand("flag", "Flag classes in middle-perversity intersection homology");
    flag_cmd->add_option("docs", flag_paths, "Descending flag of complex documents")->required();

    auto* cf_cmd = app.add_subcommand("cone-formula", "Evaluate or verify the cone identity");
    cf_cmd->add_option("doc", doc_path, "Link document (engine verification mode)");
    cf_cmd->add_option("--dims", dims_text, "Link IH dimensions (pure formula mode)");

    auto* table_cmd = app.add_subcommand("table", "Projective-cone intersection homology table");
    table_cmd->add_option("doc", doc_path)->required();
    table_cmd->add_option("--n", n, "Ambient complex dimension (default from the data)");

    auto* gysin_cmd = app.add_subcommand("gysin", "Circle-bundle link homology from base data");
    gysin_cmd->add_option("doc", doc_path)->required();

    auto* chase_cmd = app.add_subcommand("chase", "Link-map vanishing chase through the Gysin sequences");
    chase_cmd->add_option("doc", doc_path)->required();
    chase_cmd->add_option("--degree", degree)->required();

    auto* hl_cmd = app.add_subcommand("hl", "Derive the hyperplane-operator isomorphism from link vanishing");
    hl_cmd->add_option("doc", doc_path)->required();

    auto* chern_cmd = app.add_subcommand("chern", "Chern class lift from polar class data");
    chern_cmd->add_option("doc", doc_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) {
            cmd_validate(doc_path, opt);
        } else if (betti_cmd->parsed()) {
            cmd_betti(doc_path, perversity, rel_path, with_cycles, opt);
        } else if (cone_cmd->parsed()) {
            StratifiedComplex sc = parse_complex_document(read_json_file(doc_path));
            cmd_emit_complex(cone(sc.complex, sc.strat, apex_name), opt);
        } else if (suspend_cmd->parsed()) {
            StratifiedComplex sc = parse_complex_document(read_json_file(doc_path));
            cmd_emit_complex(suspension(sc.complex, sc.strat, north, south), opt);
        } else if (link_cmd->parsed()) {
            StratifiedComplex sc = parse_complex_document(read_json_file(doc_path));
            cmd_emit_complex(link(sc.complex, sc.strat, vertex), opt);
        } else if (linkmap_cmd->parsed()) {
            cmd_linkmap(doc_path, second_path, vertex, degree, perversity, opt);
        } else if (surgery_cmd->parsed()) {
            cmd_surgery(doc_path, second_path, apex, cycle_path, subdivide, opt);
        } else if (lift_cmd->parsed()) {
            cmd_lift(doc_path, cycle_path, opt);
        } else if (flag_cmd->parsed()) {
            cmd_flag(flag_paths, opt);
        } else if (cf_cmd->parsed()) {
            if (doc_path.empty() && dims_text.empty())
                throw parse_error("cone-formula needs a document or --dims");
            cmd_cone_formula(doc_path, dims_text, opt);
        } else if (table_cmd->parsed()) {
            cmd_table(doc_path, n, opt);
        } else if (gysin_cmd->parsed()) {
            cmd_gysin(doc_path, opt);
        } else if (chase_cmd->parsed()) {
            cmd_chase(doc_path, degree, opt);
        } else if (hl_cmd->parsed()) {
            return cmd_hl(doc_path, opt);
        } else if (chern_cmd->parsed()) {
            cmd_chern(doc_path, opt);
        }
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
