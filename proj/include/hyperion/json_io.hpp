#pragma once

#include "json.hpp"

#include "hyperion/axioms.hpp"
#include "hyperion/conjectures.hpp"
#include "hyperion/homomorphism.hpp"
#include "hyperion/lifting.hpp"
#include "hyperion/roots.hpp"

namespace hyperion {

using Json = nlohmann::ordered_json;

// -inf is encoded as the string "-inf".
Json number_json(double v);
Json to_json(const Element& x);
Json to_json(const ValueSet& s);
Json to_json(const Polynomial& p);
Json to_json(const EvalResult& r);
Json to_json(const RootReport& r);
Json to_json(const CertifyReport& r);
Json to_json(const AxiomReport& r);
Json to_json(const HomReport& r);
Json to_json(const ConjectureReport& r);
Json to_json(const LiftResult& r);
Json to_json(const LiftContext& c);
Json to_json(const InclusionReport& r);
Json to_json(const RacReport& r);

}  // namespace hyperion
