#pragma once

#include "json.hpp"

#include "tzero/cmform.hpp"
#include "tzero/kl_lfunction.hpp"
#include "tzero/linvariant.hpp"
#include "tzero/padic.hpp"
#include "tzero/quadfield.hpp"
#include "tzero/sympower.hpp"

namespace tzero {

using json = nlohmann::json;

/// {"valuation", "digits", "precision"}; precision is absolute. Exact zero has null
/// valuation and precision.
json to_json(const PadicNumber& x);
json to_json(const mpq_class& q);
json to_json(const QuadFieldData& f);
json to_json(const SplitPrimeData& s);
json to_json(const HeckeRoots& r);
json to_json(const SymPowerFactor& f);
json to_json(const TrivialZeroReport& r);
json to_json(const SymPowerDecomposition& d);
json to_json(const BranchSeries& s);
json to_json(const OrderCertificate& c);
json to_json(const FgCheck& c);
json to_json(const LInvariantReport& r);
json to_json(const TrivialZeroCertificate& c);

/// Inverse of to_json(PadicNumber) in the given context.
PadicNumber padic_from_json(const json& j, const PadicContext& ctx);

}  // namespace tzero
