#include "dynsgd/instance_io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace dynsgd {

namespace {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("instance: field '" + field + "' must be a non-empty array");
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw std::invalid_argument("instance: field '" + field + "' is ragged");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = j[i][c].get<double>();
  }
  return m;
}

Vector vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array())
    throw std::invalid_argument("instance: field '" + field + "' must be an array");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = j[i].get<double>();
  return v;
}

void require_keys(const json& j, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.contains(key))
      throw std::invalid_argument("instance: unknown key '" + key + "'");
  }
  for (const auto& key : allowed)
    if (!j.contains(key)) throw std::invalid_argument("instance: missing key '" + key + "'");
}

}  // namespace

void save_instance(const InstanceSpec& spec, const std::string& path) {
  json j;
  if (const auto* nv = std::get_if<NewsvendorSpec>(&spec)) {
    j["kind"] = "newsvendor";
    j["n_products"] = nv->n_products;
    j["prices"] = nv->prices;
    j["costs"] = nv->costs;
    j["risk_aversion"] = nv->risk_aversion;
    j["demand_mu"] = nv->demand_mu;
    j["demand_sigma"] = nv->demand_sigma;
    j["demand_corr"] = matrix_to_json(nv->demand_corr);
  } else {
    const auto& opt = std::get<OptionsPortfolioSpec>(spec);
    j["kind"] = "options";
    j["n_stocks"] = opt.n_stocks;
    j["mu"] = opt.mu;
    j["own_cov"] = matrix_to_json(opt.own_cov);
    j["market_cov"] = matrix_to_json(opt.market_cov);
    j["rate"] = opt.rate;
    j["s0"] = opt.s0;
    j["call_prices"] = opt.call_prices;
    j["put_prices"] = opt.put_prices;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("instance: cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

InstanceSpec load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("instance: cannot read '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("instance: '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("instance: missing 'kind'");

  const std::string kind = j["kind"].get<std::string>();
  if (kind == "newsvendor") {
    require_keys(j, {"kind", "n_products", "prices", "costs", "risk_aversion", "demand_mu",
                     "demand_sigma", "demand_corr"});
    const auto n = j["n_products"].get<std::size_t>();
    return make_newsvendor_spec(n, vector_from_json(j["prices"], "prices"),
                                vector_from_json(j["costs"], "costs"),
                                j["risk_aversion"].get<double>(),
                                vector_from_json(j["demand_mu"], "demand_mu"),
                                vector_from_json(j["demand_sigma"], "demand_sigma"),
                                matrix_from_json(j["demand_corr"], "demand_corr"));
  }
  if (kind == "options") {
    require_keys(j, {"kind", "n_stocks", "mu", "own_cov", "market_cov", "rate", "s0",
                     "call_prices", "put_prices"});
    const auto m = j["n_stocks"].get<std::size_t>();
    return make_options_spec(m, vector_from_json(j["mu"], "mu"),
                             matrix_from_json(j["own_cov"], "own_cov"),
                             matrix_from_json(j["market_cov"], "market_cov"),
                             j["rate"].get<double>(), vector_from_json(j["s0"], "s0"),
                             vector_from_json(j["call_prices"], "call_prices"),
                             vector_from_json(j["put_prices"], "put_prices"));
  }
  throw std::invalid_argument("instance: unknown kind '" + kind + "'");
}

}  // namespace dynsgd
