#pragma once

#include <string>

#include "arcdom/constructions.hpp"
#include "arcdom/domination.hpp"
#include "arcdom/error.hpp"
#include "arcdom/recognition.hpp"

namespace arcdom {

// JSON renderings used by the CLI and fixtures. Keys are stable:
//   certificate: {vertices, target, size, optimal}
//   plan:        {gammaSet, W, U, AS, AD, repairCase, resultArcs, size, bound, verified}
//   witness:     {v1, v2, e}
std::string to_json(const DominationCertificate& cert, int indent = 2);
std::string to_json(const ArcDominationPlan& plan, int indent = 2);
std::string to_json(const CharacterizationCertificate& cert, int indent = 2);
std::string error_json(const Error& e);

}  // namespace arcdom
