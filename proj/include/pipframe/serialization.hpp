#ifndef PIPFRAME_SERIALIZATION_HPP
#define PIPFRAME_SERIALIZATION_HPP

#include <json.hpp>

#include "pipframe/frames.hpp"
#include "pipframe/operators.hpp"
#include "pipframe/spaces.hpp"
#include "pipframe/vspace.hpp"

namespace pipframe::serial {

// insertion-ordered JSON keeps report layouts stable across runs
using Json = nlohmann::ordered_json;

Json to_json(const Eigen::VectorXd& v);
Json to_json(const Eigen::VectorXcd& v);  // {"re": [...], "im": [...]}
Json to_json(const Eigen::MatrixXcd& m);  // row-major nested arrays
Json to_json(const measure::FiniteMeasureSpace& space);
Json to_json(const spaces::SpaceDescriptor& desc);
Json to_json(const frames::VectorFamily& family);
Json to_json(const frames::FrameBounds& fb);
Json to_json(const frames::PairReport& rep);
Json to_json(const frames::SweepEvidence& ev);
Json to_json(const frames::RangeCertificate& cert);
Json to_json(const vspace::QuotientDimsReport& rep);
Json to_json(const ops::PipOperator& op);

measure::FiniteMeasureSpace space_from_json(const Json& j);

// nested {"kind": "Lp", "p": 2} / {"kind": "Projective", "a": ..., "b": ...}
spaces::DescPtr descriptor_from_json(const Json& j,
                                     const measure::FiniteMeasureSpace& space);

Eigen::VectorXcd field_from_json(const Json& j);

}  // namespace pipframe::serial

#endif
