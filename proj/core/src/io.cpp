#include "hullsum/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace hullsum::io {

namespace {

const Integer kInt64Min = std::numeric_limits<std::int64_t>::min();
const Integer kInt64Max = std::numeric_limits<std::int64_t>::max();

std::size_t index_from_json(const json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw Error(what + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

const json& require_key(const json& j, const char* key, const std::string& context) {
    if (!j.is_object() || !j.contains(key)) throw Error(context + ": missing \"" + key + "\"");
    return j.at(key);
}

PointSet points_from_json(const json& arr, std::size_t dim, const std::string& context) {
    if (!arr.is_array()) throw Error(context + ": points must be an array");
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& pj = arr[i];
        const std::string name = context + ": point " + std::to_string(i);
        if (!pj.is_array()) throw Error(name + " must be an array of integers");
        if (pj.size() != dim) {
            throw Error(name + " has " + std::to_string(pj.size()) + " coordinates, expected " + std::to_string(dim));
        }
        std::vector<Integer> coords;
        for (std::size_t c = 0; c < pj.size(); ++c) {
            coords.push_back(integer_from_json(pj[c], name + " coordinate " + std::to_string(c)));
        }
        pts.emplace_back(std::move(coords));
    }
    try {
        return PointSet(dim, std::move(pts));
    } catch (const Error& e) {
        throw Error(context + ": " + e.what());
    }
}

json optional_pair(const std::optional<std::pair<std::size_t, std::size_t>>& p) {
    if (!p) return nullptr;
    return json::array({p->first, p->second});
}

}  // namespace

json integer_to_json(const Integer& v) {
    if (v >= kInt64Min && v <= kInt64Max) return v.convert_to<std::int64_t>();
    return v.str();
}

Integer integer_from_json(const json& j, const std::string& what) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
        return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        const bool digits = s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos;
        if (digits) return Integer(s);
    }
    throw Error(what + " is not an integer");
}

json rational_to_json(const Rational& q) { return to_string(q); }

json point_to_json(const LatticePoint& p) {
    json arr = json::array();
    for (const auto& c : p.coords()) arr.push_back(integer_to_json(c));
    return arr;
}

json points_to_json(const PointSet& p) {
    json arr = json::array();
    for (const auto& q : p) arr.push_back(point_to_json(q));
    return arr;
}

json point_set_to_json(const PointSet& p) { return json{{"dim", p.dim()}, {"points", points_to_json(p)}}; }

PointSet point_set_from_json(const json& j) {
    const json& dim = require_key(j, "dim", "point set");
    if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1) throw Error("point set: \"dim\" must be a positive integer");
    return points_from_json(require_key(j, "points", "point set"), dim.get<std::size_t>(), "point set");
}

json decomposition_to_json(const Decomposition& d) {
    json simplices = json::array();
    for (const auto& s : d.simplices) simplices.push_back(s.vertices);
    json adjacency = json::array();
    for (const auto& [i, j] : d.adjacency) adjacency.push_back(json::array({i, j}));
    return json{{"ground", points_to_json(d.ground)}, {"simplices", simplices}, {"adjacency", adjacency}};
}

Decomposition decomposition_from_json(const json& j) {
    const json& ground = require_key(j, "ground", "decomposition");
    if (!ground.is_array() || ground.empty() || !ground[0].is_array() || ground[0].empty()) {
        throw Error("decomposition: \"ground\" must be a nonempty list of points");
    }
    Decomposition d;
    d.ground = points_from_json(ground, ground[0].size(), "decomposition ground");
    const json& simplices = require_key(j, "simplices", "decomposition");
    if (!simplices.is_array()) throw Error("decomposition: \"simplices\" must be an array");
    for (const auto& s : simplices) {
        if (!s.is_array()) throw Error("decomposition: each simplex must be an index array");
        Simplex simplex;
        for (const auto& v : s) simplex.vertices.push_back(index_from_json(v, "simplex index"));
        d.simplices.push_back(std::move(simplex));
    }
    const json& adjacency = require_key(j, "adjacency", "decomposition");
    if (!adjacency.is_array()) throw Error("decomposition: \"adjacency\" must be an array");
    for (const auto& pair : adjacency) {
        if (!pair.is_array() || pair.size() != 2) throw Error("decomposition: adjacency entries must be index pairs");
        d.adjacency.emplace_back(index_from_json(pair[0], "adjacency index"), index_from_json(pair[1], "adjacency index"));
    }
    validate(d);
    return d;
}

json check_to_json(const DecompositionCheck& c) {
    json regular{{"passed", c.regular.passed}, {"offending_pair", optional_pair(c.regular.offending_pair)}};
    if (c.regular.offending_vertex) {
        json v = json::array();
        for (const auto& x : *c.regular.offending_vertex) v.push_back(rational_to_json(x));
        regular["offending_vertex"] = v;
    }
    json adjacency{{"passed", c.adjacency.passed},
                   {"connected", c.adjacency.connected},
                   {"order_ok", c.adjacency.order_ok},
                   {"adjacency_consistent", c.adjacency.adjacency_consistent},
                   {"reordering", c.adjacency.reordering ? json(*c.adjacency.reordering) : json(nullptr)}};
    return json{
        {"passed", c.passed()},
        {"regular_position", regular},
        {"cover",
         {{"passed", c.cover.passed},
          {"simplex_volume_sum", rational_to_json(c.cover.simplex_volume_sum)},
          {"hull_volume", rational_to_json(c.cover.hull_volume)},
          {"overlapping_pair", optional_pair(c.cover.overlapping_pair)}}},
        {"adjacency_chain", adjacency},
        {"vertex_property", {{"passed", c.vertex_property.passed}, {"offending", optional_pair(c.vertex_property.offending)}}},
    };
}

json disjoint_sums_to_json(const DisjointSumsReport& r) {
    return json{{"passed", r.passed},
                {"pairwise_disjoint", r.pairwise_disjoint},
                {"sum_within_total", r.sum_within_total},
                {"later_cells_meet_vertices_at_most_once", r.later_cells_meet_vertices_at_most_once},
                {"intersecting_cells", optional_pair(r.intersecting_cells)},
                {"cell_sum_sizes", r.cell_sum_sizes},
                {"cell_sum_total", r.cell_sum_total},
                {"full_sum_size", r.full_sum_size}};
}

json record_to_json(const VerificationRecord& r) {
    json params{{"m", r.m}, {"d", r.d}, {"k", r.k}};
    if (r.m1) params["m1"] = *r.m1;
    json witness{{"A", point_set_to_json(r.a)}};
    if (r.theorem == Theorem::nested_chain) {
        json chain = json::array();
        for (const auto& b : r.b) chain.push_back(point_set_to_json(b));
        witness["chain"] = chain;
    } else if (r.theorem != Theorem::freiman && r.theorem != Theorem::vertex_sum && !r.b.empty()) {
        witness["B"] = point_set_to_json(r.b.front());
    }
    return json{{"instance", r.instance_id},
                {"theorem", std::string(to_string(r.theorem))},
                {"params", params},
                {"bound", integer_to_json(r.bound)},
                {"actual", integer_to_json(r.actual)},
                {"slack", integer_to_json(r.slack())},
                {"satisfied", r.satisfied},
                {"witness", witness}};
}

VerificationRecord replay_record(const json& j) {
    const auto& tag_name = require_key(j, "theorem", "record");
    const auto tag = tag_name.is_string() ? parse_theorem(tag_name.get<std::string>()) : std::nullopt;
    if (!tag) throw Error("record: unknown theorem tag");
    const json& witness = require_key(j, "witness", "record");
    const PointSet a = point_set_from_json(require_key(witness, "A", "record witness"));
    const std::string id = j.value("instance", std::string{});
    if (*tag == Theorem::nested_chain) {
        std::vector<PointSet> chain;
        for (const auto& b : require_key(witness, "chain", "record witness")) chain.push_back(point_set_from_json(b));
        return verify_nested_chain(a, chain, id);
    }
    std::optional<PointSet> b;
    if (witness.contains("B")) b = point_set_from_json(witness.at("B"));
    const json& params = require_key(j, "params", "record");
    return verify_theorem(*tag, a, b, index_from_json(require_key(params, "k", "record params"), "k"), id);
}

SubsumInstance subsum_instance_from_json(const json& j) {
    const json& sets = require_key(j, "sets", "subsum instance");
    if (!sets.is_array()) throw Error("subsum instance: \"sets\" must be an array of integer arrays");
    std::vector<std::vector<Integer>> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!sets[i].is_array()) throw Error("subsum instance: set " + std::to_string(i + 1) + " must be an array");
        auto& values = out.emplace_back();
        for (const auto& v : sets[i]) values.push_back(integer_from_json(v, "set " + std::to_string(i + 1) + " value"));
    }
    return SubsumInstance(std::move(out));
}

json subsum_instance_to_json(const SubsumInstance& inst) {
    json sets = json::array();
    for (const auto& s : inst.sets()) {
        json arr = json::array();
        for (const auto& v : s) arr.push_back(integer_to_json(v));
        sets.push_back(arr);
    }
    return json{{"sets", sets}};
}

json subsum_report_to_json(const SubsumReport& r) {
    return json{{"S", r.sizes.size_s},
                {"S_prime", r.sizes.size_s_prime},
                {"S_i", r.sizes.sizes_si},
                {"S_i_prime", r.sizes.sizes_si_prime},
                {"bound", rational_to_json(r.bound)},
                {"left_holds", r.left_holds},
                {"right_holds", r.right_holds},
                {"chain_satisfied", r.chain_satisfied}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("file not found: " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error("invalid JSON in " + path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path.string());
    out << text;
    if (!out) throw Error("write failed: " + path.string());
}

PointSet read_point_set(const std::filesystem::path& path) {
    const json j = read_json_file(path);
    try {
        return point_set_from_json(j);
    } catch (const Error& e) {
        throw Error(path.string() + ": " + e.what());
    }
}

}  // namespace hullsum::io
