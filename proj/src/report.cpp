#include "connspec/report.hpp"

namespace connspec {

nlohmann::json CheckReport::to_json() const {
  return {{"check", check}, {"pass", pass}, {"violations", violations}, {"stats", stats}};
}

CheckReport combine(std::string name, const std::vector<CheckReport>& parts) {
  CheckReport out{std::move(name)};
  nlohmann::json summary = nlohmann::json::object();
  for (const auto& part : parts) {
    summary[part.check] = part.pass;
    if (!part.pass) out.fail({{"check", part.check}, {"violations", part.violations}});
  }
  out.stats["checks"] = std::move(summary);
  return out;
}

}  // namespace connspec
