#include "poset/poset.hpp"

#include <algorithm>

#include <json.hpp>

#include "homology/complex.hpp"
#include "support/errors.hpp"

namespace morse {

int StrataPoset::index_of(const std::string& class_id) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), class_id,
                               [](const Node& n, const std::string& id) { return n.cls.class_id < id; });
    if (it != nodes.end() && it->cls.class_id == class_id)
        return (int)(it - nodes.begin());
    return -1;
}

std::vector<int> StrataPoset::successors(int node) const {
    std::vector<int> out;
    for (const auto& e : edges)
        if (e.from == node)
            out.push_back(e.to);
    return out;
}

StrataPoset build_poset(const ClassSet& classes) {
    StrataPoset poset;
    poset.saddles = classes.query.signature.saddles;
    for (const auto& cls : classes.classes)
        poset.nodes.push_back({cls, cls.s_value + 2 * poset.saddles});

    std::map<std::pair<int, int>, std::vector<OrderedPartition>> edges;
    for (int i = 0; i < (int)poset.nodes.size(); ++i) {
        const CanonicalClass& cls = poset.nodes[i].cls;
        for (const auto& finer : cls.partition.proper_refinements()) {
            CanonicalClass img = delta(cls, finer);
            int j = poset.index_of(img.class_id);
            if (j < 0)
                fail(Err::incomplete_input,
                     "delta image " + img.class_id + " missing from the class set; enumeration incomplete");
            edges[{i, j}].push_back(finer);
        }
    }
    for (auto& [key, witnesses] : edges) {
        std::sort(witnesses.begin(), witnesses.end());
        poset.edges.push_back({key.first, key.second, std::move(witnesses)});
    }
    return poset;
}

std::vector<int> filtration(const StrataPoset& poset, int s) {
    if (s < 1 || s > poset.saddles + 1)
        fail(Err::invalid_argument, "filtration level must lie in 1..q+1");
    std::vector<int> out;
    for (int i = 0; i < (int)poset.nodes.size(); ++i)
        if (poset.nodes[i].cls.s_value >= s)
            out.push_back(i);
    return out;
}

std::set<int> specialty_neighborhood(const StrataPoset& poset, int node) {
    if (node < 0 || node >= (int)poset.nodes.size())
        fail(Err::invalid_argument, "node out of range");
    std::set<int> seen{node};
    std::vector<int> stack{node};
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int next : poset.successors(cur))
            if (seen.insert(next).second)
                stack.push_back(next);
    }
    return seen;
}

std::string poset_to_dot(const StrataPoset& poset) {
    std::string s = "digraph strata {\n  rankdir=BT;\n";
    for (const auto& n : poset.nodes)
        s += "  \"" + n.cls.class_id.substr(0, 12) + "\" [label=\"" + n.cls.class_id.substr(0, 12) + ":" +
             std::to_string(n.cls.s_value) + ":" + std::to_string(n.dim) + "\"];\n";
    for (const auto& e : poset.edges)
        s += "  \"" + poset.nodes[e.from].cls.class_id.substr(0, 12) + "\" -> \"" +
             poset.nodes[e.to].cls.class_id.substr(0, 12) + "\";\n";
    s += "}\n";
    return s;
}

std::string poset_to_json(const StrataPoset& poset, int indent) {
    nlohmann::ordered_json j;
    j["saddles"] = poset.saddles;
    j["total_dim"] = poset.total_dim();
    auto nodes = nlohmann::ordered_json::array();
    for (int i = 0; i < (int)poset.nodes.size(); ++i) {
        const auto& n = poset.nodes[i];
        nlohmann::ordered_json nj;
        nj["class_id"] = n.cls.class_id;
        nj["s"] = n.cls.s_value;
        nj["dim"] = n.dim;
        nj["partition"] = n.cls.partition.blocks;
        auto nb = specialty_neighborhood(poset, i);
        nj["neighborhood"] = std::vector<int>(nb.begin(), nb.end());
        RelativeH1 h1 = relative_h1(build_cell_complex(n.cls.canonical_program));
        nj["h1_rank"] = h1.rank;
        nj["certificate"] = nlohmann::ordered_json::parse(matrix_to_json(h1.certificate.matrix));
        nj["certificate_det"] = h1.certificate.determinant;
        nodes.push_back(std::move(nj));
    }
    j["nodes"] = std::move(nodes);
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : poset.edges) {
        nlohmann::ordered_json ej;
        ej["from"] = e.from;
        ej["to"] = e.to;
        auto w = nlohmann::ordered_json::array();
        for (const auto& part : e.witnesses)
            w.push_back(part.blocks);
        ej["witnesses"] = std::move(w);
        edges.push_back(std::move(ej));
    }
    j["edges"] = std::move(edges);
    return j.dump(indent) + "\n";
}

std::string poset_to_csv(const StrataPoset& poset) {
    std::string s = "class_id,s,dim\n";
    for (const auto& n : poset.nodes)
        s += n.cls.class_id + "," + std::to_string(n.cls.s_value) + "," + std::to_string(n.dim) + "\n";
    return s;
}

} // namespace morse
