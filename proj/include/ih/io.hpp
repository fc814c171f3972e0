#pragma once

#include <json.hpp>

#include "ih/conecalc.hpp"
#include "ih/intersection.hpp"

namespace ih {

using Json = nlohmann::json;

// ---- complex documents ----------------------------------------------------
// {"vertices": [names...],
//  "simplices": [[names...], ...],              faces auto-completed
//  "filtration": [{"codim": c, "simplices": [[names...], ...]}, ...]}
StratifiedComplex parse_complex_document(const Json& doc);
StratifiedComplex parse_complex_document(const std::string& text);
// Canonical form: maximal simplices only, everything sorted.
Json emit_complex_document(const StratifiedComplex& sc);

// ---- chains ----------------------------------------------------------------
// {"degree": d, "terms": [[[names...], "p/q"], ...]}
Chain parse_chain(const Json& doc, const SimplicialComplex& x);
Json emit_chain(const Chain& c, const SimplicialComplex& x);

// ---- graded data and matrices ----------------------------------------------
RationalMatrix parse_matrix(const Json& doc);
Json emit_matrix(const RationalMatrix& m);
GradedVectorSpace parse_graded(const Json& doc);
Json emit_graded(const GradedVectorSpace& g);

// {"dims": [...], "lambda": [matrix per source degree, ...]}
LefschetzData parse_lefschetz(const Json& doc);
Json emit_lefschetz(const LefschetzData& d);

// {"x": lefschetz, "y": lefschetz, "alpha": [matrix per degree, ...]}
PairMorphismData parse_pair_morphism(const Json& doc);

// {"n": n, "dims": [...], "classes": [[...], ...], "h": [matrix, ...]}
PolarData parse_polar(const Json& doc);

// Perversity option grammar: zero|middle|log|top|k=<int>|custom=<c:v,...>
Perversity parse_perversity(const std::string& text);
// The values the perversity takes on the codimensions of a stratification.
Json perversity_table(const Perversity& p, const Stratification& s);

Json read_json_file(const std::string& path);

} // namespace ih
