#include "hcolor/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hcolor {

using nlohmann::json;

namespace {

int as_int(const json& value, const std::string& what) {
    if (!value.is_number_integer()) throw InputError(what + " must be an integer");
    return value.get<int>();
}

const json& field(const json& obj, const char* name) {
    if (!obj.is_object() || !obj.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
    return obj.at(name);
}

std::vector<Vertex> vertex_list(const json& arr, const std::string& what) {
    if (!arr.is_array()) throw InputError(what + " must be an array");
    std::vector<Vertex> out;
    for (const auto& v : arr) out.push_back(as_int(v, what + " entry"));
    return out;
}

}  // namespace

json instance_to_json(const HColoredGraph& inst, const std::vector<std::string>& labels) {
    json doc;
    doc["n"] = inst.order();
    if (!labels.empty()) doc["labels"] = labels;
    json edges = json::array();
    for (const auto& e : inst.pattern().edges()) edges.push_back({e.u, e.v});
    doc["h"] = {{"colors", inst.pattern().color_count()}, {"edges", edges}};
    json coloring = json::array();
    for (const auto& ce : inst.coloring()) coloring.push_back({ce.u, ce.v, ce.color});
    doc["coloring"] = coloring;
    return doc;
}

InstanceDocument instance_from_json(const json& doc) {
    if (!doc.is_object()) throw InputError("instance document must be a JSON object");
    const int n = as_int(field(doc, "n"), "n");
    if (n < 0) throw InputError("n must be non-negative");

    InstanceDocument out;
    if (doc.contains("labels")) {
        const auto& labels = doc.at("labels");
        if (!labels.is_array() || static_cast<int>(labels.size()) != n)
            throw InputError("labels must be an array naming every vertex");
        for (const auto& l : labels) {
            if (!l.is_string()) throw InputError("labels must be strings");
            out.labels.push_back(l.get<std::string>());
        }
    }

    const auto& coloring_json = field(doc, "coloring");
    if (!coloring_json.is_array()) throw InputError("coloring must be an array");
    std::vector<ColoredEdge> coloring;
    std::set<Edge> edge_set;
    Color top = -1;
    for (const auto& entry : coloring_json) {
        if (!entry.is_array() || entry.size() != 3) throw InputError("coloring entries must be [u, v, color]");
        ColoredEdge ce{as_int(entry[0], "coloring vertex"), as_int(entry[1], "coloring vertex"),
                       as_int(entry[2], "coloring color")};
        if (ce.u == ce.v) throw InputError("coloring entry [" + std::to_string(ce.u) + "," +
                                           std::to_string(ce.v) + "] is a loop");
        top = std::max(top, ce.color);
        if (ce.u >= 0 && ce.u < n && ce.v >= 0 && ce.v < n) edge_set.insert(make_edge(ce.u, ce.v));
        coloring.push_back(ce);
    }

    const auto& h_json = field(doc, "h");
    PatternGraph h;
    if (h_json.is_string()) {
        if (h_json.get<std::string>() != "complete_loopless")
            throw InputError("unknown pattern shorthand \"" + h_json.get<std::string>() + "\"");
        const int colors = doc.contains("colors") ? as_int(doc.at("colors"), "colors") : std::max(1, top + 1);
        h = PatternGraph::complete_loopless(colors);
    } else {
        const int colors = as_int(field(h_json, "colors"), "h.colors");
        if (colors < 0) throw InputError("h.colors must be non-negative");
        std::vector<Edge> edges;
        const auto& edges_json = field(h_json, "edges");
        if (!edges_json.is_array()) throw InputError("h.edges must be an array");
        for (const auto& e : edges_json) {
            if (!e.is_array() || e.size() != 2) throw InputError("h.edges entries must be [c1, c2]");
            const Edge pair{as_int(e[0], "h.edges color"), as_int(e[1], "h.edges color")};
            if (pair.u < 0 || pair.u >= colors || pair.v < 0 || pair.v >= colors)
                throw InputError("h.edges entry references an undeclared color");
            edges.push_back(pair);
        }
        h = PatternGraph(colors, std::move(edges));
    }

    out.instance = HColoredGraph(SimpleGraph(n, {edge_set.begin(), edge_set.end()}), std::move(h), std::move(coloring));
    if (doc.contains("spec")) out.spec = spec_from_json(doc.at("spec"));
    return out;
}

InstanceDocument parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InputError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    try {
        return instance_from_json(doc);
    } catch (const json::exception& e) {
        throw InputError(e.what());
    }
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

InstanceDocument load_instance(const std::filesystem::path& path) { return parse_instance(read_file(path)); }

json spec_to_json(const SearchSpec& spec) {
    json body;
    body["n"] = spec.n;
    body["colors"] = spec.colors;
    body["budget"] = spec.budget;
    body["seed"] = spec.seed;
    if (!spec.labels.empty()) body["labels"] = spec.labels;
    json constraints = json::array();
    for (const auto& c : spec.constraints) {
        if (const auto* pc = std::get_if<PartCountConstraint>(&c)) {
            constraints.push_back({{"kind", "part_count"}, {"vertex", pc->vertex}, {"k", pc->k}});
        } else if (const auto* co = std::get_if<CycleObstructionsConstraint>(&c)) {
            constraints.push_back(
                {{"kind", "cycle_obstructions"}, {"cycle", co->cycle}, {"obstructions", co->obstructions}});
        } else if (const auto* oa = std::get_if<CycleObstructedAtConstraint>(&c)) {
            constraints.push_back({{"kind", "cycle_obstructed_at"}, {"cycle", oa->cycle}, {"vertex", oa->vertex}});
        } else if (const auto* nh = std::get_if<NoHCycleConstraint>(&c)) {
            constraints.push_back({{"kind", "no_h_cycle"}, {"vertex", nh->vertex}, {"length", nh->length}});
        }
    }
    body["constraints"] = constraints;
    return body;
}

SearchSpec spec_from_json(const json& body) {
    try {
        SearchSpec spec;
        spec.n = as_int(field(body, "n"), "spec.n");
        spec.colors = as_int(field(body, "colors"), "spec.colors");
        if (body.contains("budget")) spec.budget = body.at("budget").get<std::uint64_t>();
        if (body.contains("seed")) spec.seed = body.at("seed").get<std::uint64_t>();
        if (body.contains("labels")) spec.labels = body.at("labels").get<std::vector<std::string>>();
        const auto& constraints = field(body, "constraints");
        if (!constraints.is_array()) throw InputError("spec.constraints must be an array");
        for (const auto& c : constraints) {
            const auto kind = field(c, "kind").get<std::string>();
            if (kind == "part_count") {
                spec.constraints.push_back(
                    PartCountConstraint{as_int(field(c, "vertex"), "vertex"), as_int(field(c, "k"), "k")});
            } else if (kind == "cycle_obstructions") {
                spec.constraints.push_back(CycleObstructionsConstraint{vertex_list(field(c, "cycle"), "cycle"),
                                                                       vertex_list(field(c, "obstructions"), "obstructions")});
            } else if (kind == "cycle_obstructed_at") {
                spec.constraints.push_back(CycleObstructedAtConstraint{vertex_list(field(c, "cycle"), "cycle"),
                                                                       as_int(field(c, "vertex"), "vertex")});
            } else if (kind == "no_h_cycle") {
                spec.constraints.push_back(
                    NoHCycleConstraint{as_int(field(c, "vertex"), "vertex"), as_int(field(c, "length"), "length")});
            } else {
                throw InputError("unknown constraint kind \"" + kind + "\"");
            }
        }
        return spec;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed spec: ") + e.what());
    }
}

SearchSpec load_spec(const std::filesystem::path& path) {
    const auto text = read_file(path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return spec_from_json(field(doc, "spec"));
}

json walk_to_json(const Walk& w, const std::vector<std::string>& labels) {
    json out = json::array();
    for (Vertex x : w.vertices) {
        if (static_cast<std::size_t>(x) < labels.size())
            out.push_back(labels[x]);
        else
            out.push_back(x);
    }
    return out;
}

namespace {

json cycle_check_to_json(const CycleCheck& check, const std::vector<std::string>& labels) {
    json offending = json::array();
    for (const auto& report : check.offending)
        offending.push_back({{"cycle", walk_to_json(report.walk, labels)}, {"obstructions", report.obstructions}});
    return {{"holds", check.holds}, {"total", check.total}, {"offending", offending}};
}

}  // namespace

json verdict_to_json(const TheoremVerdict& verdict, const std::vector<std::string>& labels) {
    json out;
    out["theorem"] = to_string(verdict.statement);
    out["n"] = verdict.n;
    out["hypotheses_hold"] = verdict.hypotheses_hold;
    json hyp;
    hyp["multipartite"] = !verdict.not_multipartite.has_value();
    if (verdict.not_multipartite)
        hyp["not_multipartite"] = {{"vertex", verdict.not_multipartite->x},
                                   {"witness", verdict.not_multipartite->witness}};
    if (verdict.degree) hyp["degree"] = {{"holds", verdict.degree->holds}, {"k", verdict.degree->k}};
    hyp["no_c4_exactly3"] = cycle_check_to_json(verdict.no_c4_exactly3, labels);
    if (verdict.no_c3_exactly2) hyp["no_c3_exactly2"] = cycle_check_to_json(*verdict.no_c3_exactly2, labels);
    out["hypotheses"] = hyp;
    out["conclusion_holds"] = verdict.conclusion_holds;
    out["missing"] = verdict.missing;
    if (verdict.counterexample)
        out["counterexample"] = {{"vertex", verdict.counterexample->vertex}, {"length", verdict.counterexample->length}};
    return out;
}

void write_json(const std::filesystem::path& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path.string());
    out << doc.dump(2) << '\n';
}

}  // namespace hcolor
