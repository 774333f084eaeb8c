#pragma once
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ht/clifford.hpp"
#include "ht/htype.hpp"
#include "ht/prolong.hpp"

namespace ht {

using json = nlohmann::json;

struct UnsupportedDepth : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scalars are serialized as "num/den" strings, matrices as nested arrays.
json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

// {"degrees":{"-2":4,"-1":8},"labels":{...},
//  "brackets":[{"i":["-1",0],"j":["-1",3],"val":[["-2",3,"-1/1"]]},...]}
json algebra_to_json(const GradedNilpotentAlgebra& n);

// Accepts depth 1 or 2; throws UnsupportedDepth for anything deeper.
GradedNilpotentAlgebra algebra_from_json(const json& j);

json rep_to_json(const CliffordModuleRep& rep);

// The algebra schema extended over the whole truncation, plus growth vector,
// termination flag and the optional Killing / identification reports.
json result_to_json(const ProlongationResult& res, const KillingReport* killing = nullptr,
                    const IdentifyOutcome* ident = nullptr);

}  // namespace ht
