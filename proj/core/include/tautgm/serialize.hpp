#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "tautgm/gmmodel.hpp"
#include "tautgm/mck.hpp"
#include "tautgm/qlinalg.hpp"
#include "tautgm/relations.hpp"
#include "tautgm/schubert.hpp"
#include "tautgm/tautring.hpp"

namespace tautgm::serialize {

/// Insertion-ordered JSON so reports are byte-stable and read in the order
/// they are assembled. All rationals are emitted as "p/q" strings.
using Json = nlohmann::ordered_json;

[[nodiscard]] Json rat_json(const Rat& r);
[[nodiscard]] Json schub_json(const schubert::SchubElem& a);
[[nodiscard]] Json constants_json(const schubert::ChowConstants& k);
[[nodiscard]] Json params_json(const gmmodel::ModelParams& p);

/// {"factors":["s[0,0]","s[2,1]"],"tau":[[1,2]]} with 1-based tau indices.
[[nodiscard]] Json monomial_json(const tautring::TautMonomial& mono);
[[nodiscard]] Json taut_json(const tautring::TautElem& a);

/// {"labels":[["s[0,0]","e3"],...],"coeffs":["1",...]} in term order.
[[nodiscard]] Json tensor_json(const gmmodel::TensorClass& a);

/// Dense array-of-rows form; entries are rational strings.
[[nodiscard]] Json matrix_json(const qlinalg::SparseMat& m);
/// Comma-separated dense rows, one line per row, no header.
[[nodiscard]] std::string matrix_csv(const qlinalg::SparseMat& m);

[[nodiscard]] Json injectivity_json(const tautring::InjectivityResult& r);
[[nodiscard]] Json relations_json(const relations::RelationsReport& r);
[[nodiscard]] Json ck_json(const mck::CKReport& r);
[[nodiscard]] Json mck_json(const mck::MCKReport& r);
[[nodiscard]] Json involution_json(const mck::InvolutionReport& r);

}  // namespace tautgm::serialize
