#include "ih/io.hpp"

#include <fstream>
#include <set>

#include "ih/errors.hpp"

namespace ih {

namespace {

const Json& field(const Json& doc, const char* name) {
    if (!doc.is_object() || !doc.contains(name))
        throw parse_error(std::string("missing field '") + name + "'");
    return doc[name];
}

std::vector<std::string> string_list(const Json& j, const char* what) {
    if (!j.is_array()) throw parse_error(std::string(what) + " must be a list");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw parse_error(std::string(what) + " must contain strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

Simplex named_simplex(const Json& j, const SimplicialComplex& x) {
    Simplex s;
    for (const auto& name : string_list(j, "simplex")) s.push_back(x.require_vertex(name));
    return s;
}

Json simplex_names(const SimplicialComplex& x, const Simplex& s) {
    Json out = Json::array();
    for (int v : s) out.push_back(x.vertex_name(v));
    return out;
}

} // namespace

StratifiedComplex parse_complex_document(const Json& doc) {
    std::vector<std::string> vertices = string_list(field(doc, "vertices"), "vertices");

    // Vertex ids follow the declared order.
    std::map<std::string, int> ids;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        if (!ids.emplace(vertices[i], i).second)
            throw parse_error("duplicate vertex name '" + vertices[i] + "'");

    const Json& simp_field = field(doc, "simplices");
    if (!simp_field.is_array()) throw parse_error("simplices must be a list");
    std::vector<Simplex> simplices;
    std::set<Simplex> seen;
    for (const auto& entry : simp_field) {
        Simplex s;
        for (const auto& name : string_list(entry, "simplex")) {
            auto it = ids.find(name);
            if (it == ids.end()) throw parse_error("simplex names unknown vertex '" + name + "'");
            s.push_back(it->second);
        }
        auto [norm, sign] = normalize_simplex(s);
        if (sign == 0) throw parse_error("simplex with repeated vertex");
        if (!seen.insert(norm).second) throw parse_error("duplicate simplex in document");
        simplices.push_back(norm);
    }

    StratifiedComplex out;
    out.complex = SimplicialComplex(vertices, simplices);

    if (doc.contains("filtration")) {
        const Json& filt = doc["filtration"];
        if (!filt.is_array()) throw parse_error("filtration must be a list");
        for (const auto& member : filt) {
            int codim = field(member, "codim").get<int>();
            std::vector<Simplex> gens;
            for (const auto& entry : field(member, "simplices"))
                gens.push_back(named_simplex(entry, out.complex));
            out.strat.members.push_back({codim, Subcomplex(out.complex, gens)});
        }
        std::sort(out.strat.members.begin(), out.strat.members.end(),
                  [](const auto& a, const auto& b) { return a.codim < b.codim; });
        out.strat.check_structure();
    }
    return out;
}

StratifiedComplex parse_complex_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw parse_error(std::string("document is not valid JSON: ") + e.what());
    }
    return parse_complex_document(doc);
}

Json emit_complex_document(const StratifiedComplex& sc) {
    const SimplicialComplex& x = sc.complex;
    Json doc;
    doc["vertices"] = Json::array();
    for (const auto& name : x.vertex_names()) doc["vertices"].push_back(name);

    doc["simplices"] = Json::array();
    for (const auto& s : x.maximal_simplices()) doc["simplices"].push_back(simplex_names(x, s));

    doc["filtration"] = Json::array();
    for (const auto& m : sc.strat.members) {
        Json entry;
        entry["codim"] = m.codim;
        entry["simplices"] = Json::array();
        // Maximal simplices of the member.
        for (const auto& s : m.part.simplices()) {
            bool maximal = true;
            for (const auto& t : m.part.simplices())
                if (t.size() == s.size() + 1 &&
                    std::includes(t.begin(), t.end(), s.begin(), s.end()))
                    maximal = false;
            if (maximal) entry["simplices"].push_back(simplex_names(x, s));
        }
        doc["filtration"].push_back(entry);
    }
    return doc;
}

Chain parse_chain(const Json& doc, const SimplicialComplex& x) {
    Chain c;
    c.degree = field(doc, "degree").get<int>();
    for (const auto& term : field(doc, "terms")) {
        if (!term.is_array() || term.size() != 2)
            throw parse_error("chain term must be a [simplex, coefficient] pair");
        Simplex raw = named_simplex(term[0], x);
        auto [norm, sign] = normalize_simplex(raw);
        if (sign == 0) throw parse_error("chain term with repeated vertex");
        if (static_cast<int>(norm.size()) - 1 != c.degree)
            throw parse_error("chain term of the wrong degree");
        if (!x.contains(norm)) throw parse_error("chain term is not a simplex of the complex");
        Rational coeff = parse_rational(term[1].get<std::string>());
        c.add(norm, sign > 0 ? coeff : -coeff);
    }
    return c;
}

Json emit_chain(const Chain& c, const SimplicialComplex& x) {
    Json doc;
    doc["degree"] = c.degree;
    doc["terms"] = Json::array();
    for (const auto& [s, v] : c.terms) {
        Json term = Json::array();
        term.push_back(simplex_names(x, s));
        term.push_back(to_string(v));
        doc["terms"].push_back(term);
    }
    return doc;
}

RationalMatrix parse_matrix(const Json& doc) {
    RationalMatrix m(field(doc, "rows").get<int>(), field(doc, "cols").get<int>());
    for (const auto& e : field(doc, "entries")) {
        if (!e.is_array() || e.size() != 3) throw parse_error("matrix entry must be [row, col, value]");
        int r = e[0].get<int>(), c = e[1].get<int>();
        if (r < 0 || r >= m.rows || c < 0 || c >= m.cols)
            throw parse_error("matrix entry out of bounds");
        m.set(r, c, parse_rational(e[2].get<std::string>()));
    }
    return m;
}

Json emit_matrix(const RationalMatrix& m) {
    Json doc;
    doc["rows"] = m.rows;
    doc["cols"] = m.cols;
    doc["entries"] = Json::array();
    for (const auto& [rc, v] : m.entries)
        doc["entries"].push_back(Json::array({rc.first, rc.second, to_string(v)}));
    return doc;
}

GradedVectorSpace parse_graded(const Json& doc) {
    if (!doc.is_array()) throw parse_error("graded dimensions must be a list");
    GradedVectorSpace g;
    for (const auto& e : doc) {
        int d = e.get<int>();
        if (d < 0) throw parse_error("graded dimension must be nonnegative");
        g.dims.push_back(d);
    }
    return g;
}

Json emit_graded(const GradedVectorSpace& g) {
    Json out = Json::array();
    for (int d : g.dims) out.push_back(d);
    return out;
}

LefschetzData parse_lefschetz(const Json& doc) {
    LefschetzData d;
    d.dims = parse_graded(field(doc, "dims"));
    if (doc.contains("lambda"))
        for (const auto& m : doc["lambda"]) d.lambda.push_back(parse_matrix(m));
    d.check_shapes();
    return d;
}

Json emit_lefschetz(const LefschetzData& d) {
    Json doc;
    doc["dims"] = emit_graded(d.dims);
    doc["lambda"] = Json::array();
    for (const auto& m : d.lambda) doc["lambda"].push_back(emit_matrix(m));
    return doc;
}

PairMorphismData parse_pair_morphism(const Json& doc) {
    PairMorphismData d;
    d.x = parse_lefschetz(field(doc, "x"));
    d.y = parse_lefschetz(field(doc, "y"));
    if (doc.contains("alpha"))
        for (const auto& m : doc["alpha"]) d.alpha.push_back(parse_matrix(m));
    d.check_shapes();
    return d;
}

PolarData parse_polar(const Json& doc) {
    PolarData p;
    p.n = field(doc, "n").get<int>();
    p.dims = parse_graded(field(doc, "dims"));
    for (const auto& cls : field(doc, "classes")) {
        std::vector<Rational> v;
        for (const auto& e : cls) v.push_back(parse_rational(e.get<std::string>()));
        p.classes.push_back(std::move(v));
    }
    if (doc.contains("h"))
        for (const auto& m : doc["h"]) p.h_action.push_back(parse_matrix(m));
    p.check_shapes();
    return p;
}

Perversity parse_perversity(const std::string& text) {
    if (text == "zero") return Perversity::zero();
    if (text == "middle") return Perversity::middle();
    if (text == "log") return Perversity::logarithmic();
    if (text == "top") return Perversity::top();
    if (text.rfind("k=", 0) == 0) {
        try {
            return Perversity::k_family(std::stoi(text.substr(2)));
        } catch (const std::exception&) {
            throw parse_error("invalid k-family perversity '" + text + "'");
        }
    }
    if (text.rfind("custom=", 0) == 0) {
        std::map<int, int> values;
        std::string body = text.substr(7);
        std::size_t start = 0;
        while (start < body.size()) {
            std::size_t comma = body.find(',', start);
            std::string piece = body.substr(start, comma == std::string::npos ? comma : comma - start);
            std::size_t colon = piece.find(':');
            if (colon == std::string::npos)
                throw parse_error("custom perversity entries look like codim:value");
            try {
                values[std::stoi(piece.substr(0, colon))] = std::stoi(piece.substr(colon + 1));
            } catch (const std::exception&) {
                throw parse_error("invalid custom perversity entry '" + piece + "'");
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return Perversity::custom(values);
    }
    throw parse_error("unknown perversity '" + text +
                      "' (expected zero|middle|log|top|k=<int>|custom=<c:v,...>)");
}

Json perversity_table(const Perversity& p, const Stratification& s) {
    Json table;
    table["name"] = p.name();
    table["values"] = Json::object();
    for (const auto& m : s.members)
        table["values"][std::to_string(m.codim)] = p(m.codim);
    return table;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw parse_error("file '" + path + "' is not valid JSON: " + e.what());
    }
}

} // namespace ih
