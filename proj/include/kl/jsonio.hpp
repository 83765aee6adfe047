#pragma once

#include <json.hpp>

#include "kl/ideal.hpp"
#include "kl/ktheory.hpp"
#include "kl/mult.hpp"
#include "kl/sampler.hpp"

namespace kl {

using nlohmann::json;

json json_boxes(const std::vector<Box>& boxes);
json json_poly(const Polynomial& p);
json json_dream(const PipeDream& p);  // {"v": word, "crosses": [[r,c],...]}
json json_perm(const Permutation& p);

json cmd_diagram(const Permutation& v);
json cmd_rank_matrix(const Permutation& w);
json cmd_zmatrix(const Permutation& v);
json cmd_minors(const GeneratorSet& g);
json cmd_groebner(const GeneratorSet& g, const BuchbergerReport& rep);
json cmd_initial(const Permutation& v, const Permutation& w);
json cmd_complex(const PipeComplex& c, const TopologyReport& topo);
json cmd_pipes(const Permutation& v, const Permutation& target, bool reduced,
               const std::vector<PipeDream>& dreams);
json cmd_poly_result(const std::string& name, const Permutation& v, const Permutation& w,
                     const Polynomial& p);
json cmd_double(const Permutation& w, bool groth, const Polynomial& p);
json cmd_specialize(const Permutation& v, const Permutation& w, const BuchRimanyiResult& r);
json cmd_mult(const Permutation& v, const Permutation& w, const MultiplicityOutcome& o);
json cmd_vmax(const Permutation& v, const Permutation& w, const Permutation& vm);
json cmd_homog(const Permutation& v, const Permutation& w, bool homog, const GeneratorSet& red);
json cmd_gamma(const GammaReport& rep);
json cmd_sample(const EstimateReport& rep);

// Minimal structural validation against the published schema (type /
// properties / required / items / enum subset of JSON Schema).
bool validate_against_schema(const json& value, const json& schema, const json& root,
                             std::string* error = nullptr);
bool validate_output(const json& output, const json& schema_doc, std::string* error = nullptr);

}  // namespace kl
