#pragma once

#include <string>

#include <json.hpp>

#include "hhverify/chain.hpp"
#include "hhverify/commuting.hpp"
#include "hhverify/trace_checks.hpp"
#include "hhverify/types.hpp"
#include "hhverify/verdict.hpp"

namespace hhv {

using json = nlohmann::json;

/// Matrix wire format: {"n": int, "re": [[...]], "im": [[...]]}, row-major.
json matrix_to_json(const ComplexMatrix& m);

/// Rejects non-square payloads and non-finite entries (ConfigError /
/// NotFinite).
ComplexMatrix matrix_from_json(const json& j);

json hermitian_to_json(const HermitianMatrix& m);
HermitianMatrix hermitian_from_json(const json& j);

/// Pair format: {"u": matrix, "a": [...], "b": [...]}.
json pair_to_json(const CommutingPositivePair& p);
CommutingPositivePair pair_from_json(const json& j);

json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const json& j);

/// inputs, when non-null, is echoed under "inputs" so a report can be
/// replayed from its serialization alone.
json chain_report_to_json(const ChainReport& r, const json& inputs = json());
json operator_chain_report_to_json(const OperatorChainReport& r);
json trace_log_hh_report_to_json(const TraceLogHHReport& r);

/// One CSV row per trial, one column per link.
std::string chain_report_csv_header(const ChainReport& r);
std::string chain_report_csv_row(const ChainReport& r);

}  // namespace hhv
