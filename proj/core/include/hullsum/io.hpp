#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "hullsum/bounds.hpp"
#include "hullsum/decomposition.hpp"
#include "hullsum/partition.hpp"
#include "hullsum/subsum.hpp"
#include "hullsum/types.hpp"

// JSON formats. Keys are emitted in sorted order and integers as JSON numbers
// (decimal strings when they exceed 64 bits), so identical values always
// serialize to identical bytes.

namespace hullsum::io {

using nlohmann::json;

json integer_to_json(const Integer& v);
/// Accepts JSON integers and decimal strings; `what` names the value in errors.
Integer integer_from_json(const json& j, const std::string& what);
json rational_to_json(const Rational& q);

json point_to_json(const LatticePoint& p);
json points_to_json(const PointSet& p);

/// PointSetFile: {"dim": d, "points": [[x1,...,xd], ...]}.
json point_set_to_json(const PointSet& p);
PointSet point_set_from_json(const json& j);

/// {"ground": [[...]], "simplices": [[i,...]], "adjacency": [[i,j]]}.
json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const json& j);

json check_to_json(const DecompositionCheck& c);
json disjoint_sums_to_json(const DisjointSumsReport& r);

json record_to_json(const VerificationRecord& r);
/// Re-runs the verification embedded in a serialized record.
VerificationRecord replay_record(const json& j);

/// {"sets": [[ints]...]}.
SubsumInstance subsum_instance_from_json(const json& j);
json subsum_instance_to_json(const SubsumInstance& i);
json subsum_report_to_json(const SubsumReport& r);

/// Two-space indented dump with a trailing newline.
std::string dump(const json& j);

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

PointSet read_point_set(const std::filesystem::path& path);

}  // namespace hullsum::io
