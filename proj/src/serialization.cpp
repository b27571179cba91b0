#include "pipframe/serialization.hpp"

namespace pipframe::serial {

Json to_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json to_json(const Eigen::VectorXcd& v) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return Json{{"re", re}, {"im", im}};
}

Json to_json(const Eigen::MatrixXcd& m) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json rr = Json::array(), ri = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  return Json{{"re", re}, {"im", im}};
}

Json to_json(const measure::FiniteMeasureSpace& space) {
  return Json{{"labels", space.labels()}, {"weights", to_json(space.weights())}};
}

Json to_json(const spaces::SpaceDescriptor& desc) {
  using Kind = spaces::SpaceDescriptor::Kind;
  switch (desc.kind()) {
    case Kind::Lp:
      return Json{{"kind", "Lp"},
                  {"p", std::isinf(desc.p()) ? Json("inf") : Json(desc.p())}};
    case Kind::WeightedL2:
      return Json{{"kind", "WeightedL2"}, {"weight", to_json(desc.weight())}};
    case Kind::Projective:
      return Json{{"kind", "Projective"},
                  {"a", to_json(*desc.a())},
                  {"b", to_json(*desc.b())}};
    case Kind::Inductive:
      return Json{{"kind", "Inductive"},
                  {"a", to_json(*desc.a())},
                  {"b", to_json(*desc.b())}};
  }
  throw ConfigError("unknown descriptor kind");
}

Json to_json(const frames::VectorFamily& family) {
  Json j{{"space", to_json(family.space)},
         {"dim", family.dim()},
         {"members", to_json(family.members)}};
  if (family.uniform_bound) j["uniform_bound"] = *family.uniform_bound;
  return j;
}

Json to_json(const frames::FrameBounds& fb) {
  return Json{{"lower", fb.lower},
              {"upper", fb.upper},
              {"lower_witness", to_json(fb.lower_witness)},
              {"upper_witness", to_json(fb.upper_witness)}};
}

Json to_json(const frames::PairReport& rep) {
  return Json{{"operator_norm", rep.operator_norm},
              {"sigma_min", rep.sigma_min},
              {"condition_number", rep.condition_number},
              {"invertible", rep.invertible},
              {"gl_tolerance_used", rep.gl_tolerance_used},
              {"dual_residual", rep.dual_residual},
              {"psi_class", frames::to_string(rep.psi_class)},
              {"phi_class", frames::to_string(rep.phi_class)}};
}

Json to_json(const frames::SweepEvidence& ev) {
  Json rows = Json::array();
  for (const auto& row : ev.rows)
    rows.push_back(Json{{"n", row.n},
                        {"psi_lower", row.psi_bounds.lower},
                        {"psi_upper", row.psi_bounds.upper},
                        {"phi_lower", row.phi_bounds.lower},
                        {"phi_upper", row.phi_bounds.upper}});
  return Json{{"rows", rows},
              {"psi_class", frames::to_string(ev.psi_class)},
              {"phi_class", frames::to_string(ev.phi_class)},
              {"psi_domain_fraction", ev.psi_domain_fraction},
              {"phi_domain_fraction", ev.phi_domain_fraction}};
}

Json to_json(const frames::RangeCertificate& cert) {
  return Json{{"constant", cert.constant}, {"witness", to_json(cert.witness)}};
}

Json to_json(const vspace::QuotientDimsReport& rep) {
  return Json{{"dim_v_phi", rep.dim_v_phi},
              {"dim_v_psi", rep.dim_v_psi},
              {"kernel_phi", rep.kernel_phi},
              {"kernel_psi", rep.kernel_psi},
              {"dims_equal_d", rep.dims_equal_d},
              {"isomorphism_verified", rep.isomorphism_verified}};
}

Json to_json(const ops::PipOperator& op) {
  Json jset = Json::array();
  for (const auto& [q, p] : op.jset) jset.push_back(Json::array({q, p}));
  return Json{{"matrix", to_json(op.matrix)},
              {"jset", jset},
              {"norm_threshold", op.norm_threshold}};
}

measure::FiniteMeasureSpace space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("weights"))
    throw ConfigError("measure space needs a \"weights\" array");
  const auto& jw = j.at("weights");
  Eigen::VectorXd w(jw.size());
  for (std::size_t i = 0; i < jw.size(); ++i) w(i) = jw.at(i).get<double>();
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = j.at("labels").get<std::vector<std::string>>();
  } else {
    for (Eigen::Index i = 0; i < w.size(); ++i) labels.push_back(std::to_string(i));
  }
  return measure::FiniteMeasureSpace(std::move(labels), std::move(w));
}

spaces::DescPtr descriptor_from_json(const Json& j,
                                     const measure::FiniteMeasureSpace& space) {
  if (!j.is_object() || !j.contains("kind"))
    throw ConfigError("descriptor needs a \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "Lp") {
    const auto& jp = j.at("p");
    const double p = jp.is_string()
                         ? std::numeric_limits<double>::infinity()
                         : jp.get<double>();
    return spaces::SpaceDescriptor::lp(space, p);
  }
  if (kind == "WeightedL2") {
    const auto& jw = j.at("weight");
    Eigen::VectorXd w(jw.size());
    for (std::size_t i = 0; i < jw.size(); ++i) w(i) = jw.at(i).get<double>();
    return spaces::SpaceDescriptor::weighted_l2(space, std::move(w));
  }
  if (kind == "Projective")
    return spaces::SpaceDescriptor::projective(
        descriptor_from_json(j.at("a"), space),
        descriptor_from_json(j.at("b"), space));
  if (kind == "Inductive")
    return spaces::SpaceDescriptor::inductive(
        descriptor_from_json(j.at("a"), space),
        descriptor_from_json(j.at("b"), space));
  throw ConfigError("unknown descriptor kind: " + kind);
}

Eigen::VectorXcd field_from_json(const Json& j) {
  if (j.is_array()) {
    Eigen::VectorXcd v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v(i) = j.at(i).get<double>();
    return v;
  }
  const auto& re = j.at("re");
  Eigen::VectorXcd v(re.size());
  if (j.contains("im")) {
    const auto& im = j.at("im");
    if (im.size() != re.size())
      throw ConfigError("\"re\" and \"im\" lengths disagree");
    for (std::size_t i = 0; i < re.size(); ++i)
      v(i) = {re.at(i).get<double>(), im.at(i).get<double>()};
  } else {
    for (std::size_t i = 0; i < re.size(); ++i) v(i) = re.at(i).get<double>();
  }
  return v;
}

}  // namespace pipframe::serial
