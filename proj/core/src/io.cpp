#include "hhverify/io.hpp"

#include <cmath>
#include <sstream>

#include "hhverify/errors.hpp"

namespace hhv {

json matrix_to_json(const ComplexMatrix& m) {
  const int n = m.n();
  json re = json::array(), im = json::array();
  for (int i = 0; i < n; ++i) {
    json row_re = json::array(), row_im = json::array();
    for (int j = 0; j < n; ++j) {
      row_re.push_back(m(i, j).real());
      row_im.push_back(m(i, j).imag());
    }
    re.push_back(std::move(row_re));
    im.push_back(std::move(row_im));
  }
  return json{{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("re") || !j.contains("im"))
    throw ConfigError("matrix: expected object with n/re/im");
  const int n = j.at("n").get<int>();
  if (n < 1) throw ConfigError("matrix: n must be >= 1");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || !im.is_array() ||
      static_cast<int>(re.size()) != n || static_cast<int>(im.size()) != n)
    throw ConfigError("matrix: payload is not square");
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const auto& row_re = re.at(static_cast<size_t>(i));
    const auto& row_im = im.at(static_cast<size_t>(i));
    if (static_cast<int>(row_re.size()) != n || static_cast<int>(row_im.size()) != n)
      throw ConfigError("matrix: payload is not square");
    for (int jj = 0; jj < n; ++jj) {
      const auto& jx = row_re.at(static_cast<size_t>(jj));
      const auto& jy = row_im.at(static_cast<size_t>(jj));
      // NaN/Inf serialize to null in JSON; reject both forms.
      if (!jx.is_number() || !jy.is_number())
        throw NotFinite("matrix: non-finite entry");
      const double x = jx.get<double>();
      const double y = jy.get<double>();
      if (!std::isfinite(x) || !std::isfinite(y))
        throw NotFinite("matrix: non-finite entry");
      m(i, jj) = cd{x, y};
    }
  }
  return m;
}

json hermitian_to_json(const HermitianMatrix& m) { return matrix_to_json(m.mat()); }

HermitianMatrix hermitian_from_json(const json& j) {
  return HermitianMatrix(matrix_from_json(j));
}

json pair_to_json(const CommutingPositivePair& p) {
  return json{{"u", matrix_to_json(p.u)}, {"a", p.a}, {"b", p.b}};
}

CommutingPositivePair pair_from_json(const json& j) {
  if (!j.is_object() || !j.contains("u") || !j.contains("a") || !j.contains("b"))
    throw ConfigError("pair: expected object with u/a/b");
  return make_commuting_pair(matrix_from_json(j.at("u")),
                             j.at("a").get<std::vector<double>>(),
                             j.at("b").get<std::vector<double>>());
}

json verdict_to_json(const Verdict& v) {
  json j{{"status", to_string(v.status)}, {"margin", v.margin}};
  if (!v.details.empty()) j["details"] = v.details;
  if (v.witness) j["witness"] = *v.witness;
  return j;
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  v.status = status_from_string(j.at("status").get<std::string>());
  v.margin = j.at("margin").get<double>();
  if (j.contains("details"))
    v.details = j.at("details").get<std::map<std::string, double>>();
  if (j.contains("witness")) v.witness = j.at("witness").get<std::string>();
  return v;
}

json chain_report_to_json(const ChainReport& r, const json& inputs) {
  json links = json::array();
  for (size_t i = 0; i < r.link_names.size(); ++i)
    links.push_back(json{{"name", r.link_names[i]}, {"value", r.link_values[i]}});
  json j{{"links", std::move(links)},
         {"margins", r.margins},
         {"verdict", verdict_to_json(r.verdict)}};
  if (!r.extras.empty()) j["extras"] = r.extras;
  if (!inputs.is_null()) j["inputs"] = inputs;
  return j;
}

json operator_chain_report_to_json(const OperatorChainReport& r) {
  json links = json::array();
  for (size_t i = 0; i < r.link_names.size(); ++i)
    links.push_back(json{{"name", r.link_names[i]},
                         {"matrix", hermitian_to_json(r.link_matrices[i])}});
  json pairwise = json::array();
  for (const auto& v : r.pairwise_verdicts) pairwise.push_back(verdict_to_json(v));
  json j{{"links", std::move(links)},
         {"pairwise_verdicts", std::move(pairwise)},
         {"overall", verdict_to_json(r.overall)}};
  if (r.scalar_route) j["scalar_route"] = verdict_to_json(*r.scalar_route);
  if (!r.extras.empty()) j["extras"] = r.extras;
  return j;
}

json trace_log_hh_report_to_json(const TraceLogHHReport& r) {
  return json{{"sqrt_chain", chain_report_to_json(r.sqrt_chain)},
              {"squared_chain", chain_report_to_json(r.squared_chain)},
              {"overall", verdict_to_json(r.overall)}};
}

std::string chain_report_csv_header(const ChainReport& r) {
  std::ostringstream out;
  for (size_t i = 0; i < r.link_names.size(); ++i) {
    if (i) out << ",";
    std::string name = r.link_names[i];
    for (char& c : name)
      if (c == ',') c = ';';
    out << name;
  }
  return out.str();
}

std::string chain_report_csv_row(const ChainReport& r) {
  std::ostringstream out;
  out.precision(17);
  for (size_t i = 0; i < r.link_values.size(); ++i) {
    if (i) out << ",";
    out << r.link_values[i];
  }
  return out.str();
}

}  // namespace hhv
