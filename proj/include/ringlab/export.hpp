#pragma once

#include <string>

#include <json.hpp>

#include "ringlab/chains.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/properties.hpp"

namespace ringlab {

// Poset as JSON: classes (ideals as ascending element lists, canonical
// generators, minimality flag), the full order relation as index pairs, and
// the minimal set. Field order is fixed; output is byte-deterministic.
nlohmann::ordered_json poset_to_json(const RingScans& S, const RcpPoset& P);

// Hasse diagram in DOT: one node per class labeled
// "<a,b> |aR|=p |bR|=q", covering edges only (lower -> upper), minimal
// classes double-circled. Byte-deterministic.
std::string poset_to_dot(const RingScans& S, const RcpPoset& P);

nlohmann::ordered_json classification_to_json(const ClassificationReport& r);

nlohmann::ordered_json chain_to_json(const RingScans& S, const RcpPoset& P,
                                     const WitnessedChain& c);

nlohmann::ordered_json implication_audit_to_json(const ImplicationAudit& a);

nlohmann::ordered_json property_report_to_json(const PropertyReport& r);

}  // namespace ringlab
