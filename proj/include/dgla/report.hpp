#pragma once

// Machine-readable reports. Every ledger and certificate serializes to an
// ordered JSON document; rationals are emitted as "p/q" strings so round
// trips are bit-exact and repeated runs are byte-identical.

#include "dgla/bv.hpp"
#include "dgla/cartan.hpp"
#include "dgla/coder.hpp"
#include "dgla/dgla.hpp"
#include "dgla/homotopy.hpp"
#include "dgla/lietype.hpp"
#include "dgla/mc.hpp"

#include <json.hpp>

namespace dgla {

using Json = nlohmann::ordered_json;

Json json_vec(const Vec& v);
Json json_mat(const Mat& m);
Json json_elt(const Elt& e);
Json json_space(const GradedSpace& s);
Json json_graded_map(const GradedMap& f);

Json json_report(const AxiomReport& r);
Json json_report(const MorphismReport& r);
Json json_report(const CohomologyReport& r);
Json json_report(const InducedMapReport& r);
Json json_report(const BTTCertificate& r);
Json json_report(const CartanReport& r);
Json json_report(const BvReport& r);
Json json_report(const DegenerationResult& r);
Json json_report(const BvPipelineResult& r);
Json json_report(const QSquareReport& r);
Json json_report(const SplittingResult& r);
Json json_report(const LieTypeReport& r);
Json json_report(const FiberProbe& r);
Json json_report(const ProbeResult& r, const ArtinianBase& base);

/// Render a report document as an aligned human-readable table.
std::string render_human(const Json& report, int verbosity);

}  // namespace dgla
