#pragma once

#include <nlohmann/json.hpp>

#include "idem/decompose.hpp"
#include "idem/factor.hpp"
#include "idem/freeword.hpp"
#include "idem/matrix_units.hpp"
#include "idem/nf.hpp"
#include "idem/report.hpp"

namespace idem {

// JSON shapes: scalars are strings ("3/4" or a decimal residue); polynomials
// are arrays of scalar strings in ascending degree; elements keep the
// five-coordinate layout under the keys unit/sigma/a/b/ab.
nlohmann::json field_to_json(const FieldDesc& f);
FieldDesc field_from_json(const nlohmann::json& j);

nlohmann::json scalar_to_json(const FieldScalar& c);
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const FieldDesc& f, const nlohmann::json& j);

nlohmann::json nf_to_json(const NFElem& x);
NFElem nf_from_json(const FieldDesc& f, const nlohmann::json& j);

nlohmann::json free_to_json(const FreeElem& x);
nlohmann::json q_to_json(const QElem& x);
nlohmann::json mat2_to_json(const Mat2& m);

nlohmann::json factorization_to_json(const Factorization& f);
nlohmann::json witness_to_json(const IdealWitness& w);
nlohmann::json block_to_json(const Block& b);
nlohmann::json decomposition_to_json(const Decomposition& d);
nlohmann::json report_to_json(const Report& r);

}  // namespace idem
