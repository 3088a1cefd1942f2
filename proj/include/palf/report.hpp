#pragma once
#include <json.hpp>
#include <string>

#include "palf/construct.hpp"
#include "palf/monodromy.hpp"
#include "palf/openbook.hpp"
#include "palf/verify.hpp"

namespace palf {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr const char* kToolVersion = "0.1.0";

Json document(const std::string& command);
Json grid_json(const GridDiagram& g);
Json invariants_json(const GridDiagram& g);
Json fiber_json(const RibbonFiber& f);
Json curve_json(const Curve& c);
Json palf_json(const PALF& p);
Json report_json(const VerificationReport& r);
Json factorization_json(const MonodromyFactorization& fac);
Json matrix_json(const IMatrix& m);

std::string dump(const Json& j);

}  // namespace palf
