#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dimerlab/nccr.hpp"

namespace dimerlab {

// Ordered JSON throughout so identical inputs and bounds produce
// byte-identical reports. Every report carries schema_version and the
// resolved bounds. No timestamps or timings.
using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

json report_validate(const DimerQuiver& q, const ValidationReport& r);
json report_matchings(const DimerQuiver& q, const std::vector<Matching>& ms);
json report_contract(const Contraction& c);
json report_cancellative(const CancellativityVerdict& v);
json report_impression(const Impression& imp, const AliasTable* alias);
json report_algebra(const CycleAlgebra& S, const CenterPresentation& R, const RunConfig& cfg,
                    const DimerQuiver& q, const AliasTable* alias);
json report_decompose(const OriginIdeal& oi, const HeightsReport& h, const RunConfig& cfg,
                      const DimerQuiver& q, const AliasTable* alias);
json report_certify(const CertificationReport& r, const AliasTable* alias);
json report_present(const CertificationReport& r, const TiledPresentation& tiled,
                    const AliasTable* alias);

// Rendering helpers shared by reports and the CLI's text mode.
json monomial_list(const MonomialSet& s, const AliasTable* alias);
std::string path_to_string(const Path& p);
std::string entry_to_string(const TiledEntry& e, const AliasTable* alias);

}  // namespace dimerlab
