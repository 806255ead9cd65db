#pragma once

// JSON views of the library types. All big integers and rationals are emitted
// as canonical strings, keys serialize in sorted order, and nothing here
// depends on locale or pointer identity, so equal values dump to equal bytes.

#include <string>

#include "json.hpp"
#include "nz/crystal.hpp"
#include "nz/demazure.hpp"
#include "nz/oracles.hpp"
#include "nz/polytope.hpp"
#include "nz/verify.hpp"

namespace nz {

using Json = nlohmann::json;

Json weight_json(const Weight& w);
Json qvec_json(const QVec& v);
Json zvec_json(const ZVec& v);
Json llvec_json(const std::vector<long long>& v);

Json halfspace_json(const Halfspace& h);
Json polytope_json(const RationalPolytope& p);
Json crystal_json(const CrystalGraph& g);
Json fiber_json(const LatticeFiber& f);
Json chain_json(const ChainResult& r);
Json system_json(const InequalitySystem& s);
Json gz_json(const GzData& g);
Json hoshino_json(const HoshinoData& h);
Json counterexample_json(const CounterexampleData& d);
Json report_json(const VerificationReport& r);

}  // namespace nz
