#include "zmeasure/json_io.hpp"

#include <charconv>
#include <cmath>

#include "zmeasure/errors.hpp"

namespace zmeasure::io {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json to_json(Complex v) { return Json{{"re", v.real()}, {"im", v.imag()}}; }

Json to_json(const ZParams& zp) {
  return Json{{"z", to_json(zp.z())}, {"zp", to_json(zp.zp())}, {"t", zp.t()}, {"meixner", zp.meixner_mode()}};
}

Json to_json(const GrandParams& gp) {
  Json j = to_json(gp.zp());
  j["xi"] = gp.xi();
  return j;
}

Json to_json(const YoungDiagram& lambda) { return Json(lambda.parts()); }

Json frobenius_json(const YoungDiagram& lambda) {
  return Json{{"p", lambda.frobenius().p}, {"q", lambda.frobenius().q}};
}

Json to_json(const Configuration& x) {
  Json arr = Json::array();
  for (const auto& p : x.points()) arr.push_back(p.to_string());
  return arr;
}

YoungDiagram diagram_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("diagram JSON must be an array of parts");
  return YoungDiagram(j.get<std::vector<int>>());
}

Configuration configuration_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("configuration JSON must be an array of half-integers");
  std::vector<HalfInteger> pts;
  for (const auto& e : j) pts.push_back(HalfInteger::parse(e.get<std::string>()));
  return Configuration(std::move(pts));
}

Json to_json(const VerificationReport& report) {
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    cases.push_back({{"input", c.input},
                     {"lhs", c.lhs},
                     {"rhs", c.rhs},
                     {"abs_err", c.abs_err},
                     {"rel_err", c.rel_err},
                     {"tolerance", c.tolerance},
                     {"metric", to_string(c.metric)},
                     {"pass", c.pass}});
  }
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"schema", kReportSchema},
              {"suite", report.suite},
              {"pass", report.pass()},
              {"runtime_seconds", report.runtime_seconds},
              {"worst_error_over_tolerance", report.worst_ratio()},
              {"cases", cases},
              {"checks", checks}};
}

Json kernel_block_json(const KernelBlock& block, const GrandParams& gp) {
  Json rows = Json::array();
  for (Eigen::Index k = 0; k < block.entries.rows(); ++k) {
    Json row = Json::array();
    for (Eigen::Index l = 0; l < block.entries.cols(); ++l) row.push_back(block.entries(k, l));
    rows.push_back(row);
  }
  return Json{{"schema", kKernelSchema},
              {"block", to_string(block.block)},
              {"trunc", block.trunc},
              {"params", to_json(gp)},
              {"entries", rows}};
}

std::string kernel_block_csv(const KernelBlock& block) {
  std::string out = "k";
  for (int l = 0; l < block.trunc; ++l) out += "," + std::to_string(l);
  out += "\n";
  for (int k = 0; k < block.trunc; ++k) {
    out += std::to_string(k);
    for (int l = 0; l < block.trunc; ++l) out += "," + format_double(block.entries(k, l));
    out += "\n";
  }
  return out;
}

Json sample_header_json(const SampleBatch& batch) {
  return Json{{"schema", kSampleSchema},
              {"seed", batch.seed},
              {"rng", batch.rng},
              {"streams", batch.streams},
              {"count", batch.count()},
              {"params", to_json(batch.gp)}};
}

Json sample_line_json(std::size_t index, const YoungDiagram& lambda) {
  return Json{{"index", index}, {"n", lambda.size()}, {"parts", to_json(lambda)}};
}

}  // namespace zmeasure::io
