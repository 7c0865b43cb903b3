#include "morsemoduli.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include <json.hpp>

#include "atlas/atlas.hpp"
#include "enumerate/cache.hpp"
#include "enumerate/enumerate.hpp"
#include "homology/complex.hpp"
#include "homology/incidence.hpp"
#include "invariants/invariants.hpp"
#include "model/level_graph.hpp"
#include "model/serialize.hpp"
#include "poset/poset.hpp"
#include "support/errors.hpp"

using namespace morse;
using ordered_json = nlohmann::ordered_json;

struct mm_program {
    RawProgram raw;
    Program checked; // populated lazily for operations that need validity
    bool is_checked = false;
};

struct mm_classset {
    ClassSet set;
};

struct mm_poset {
    StrataPoset poset;
};

namespace {

thread_local std::string g_last_error;

mm_status status_of(Err code) {
    switch (code) {
        case Err::invalid_argument: return MM_ERR_INVALID_ARGUMENT;
        case Err::parse_error: return MM_ERR_PARSE;
        case Err::invalid_program: return MM_ERR_INVALID_PROGRAM;
        case Err::not_a_refinement: return MM_ERR_NOT_A_REFINEMENT;
        case Err::budget_exceeded: return MM_ERR_BUDGET_EXCEEDED;
        case Err::incomplete_input: return MM_ERR_INCOMPLETE_INPUT;
        case Err::missing_stratum_data: return MM_ERR_MISSING_STRATUM_DATA;
        case Err::rank_mismatch: return MM_ERR_RANK_MISMATCH;
        case Err::non_unimodular: return MM_ERR_NON_UNIMODULAR;
        case Err::value_out_of_range: return MM_ERR_VALUE_OUT_OF_RANGE;
        case Err::not_in_star: return MM_ERR_NOT_IN_STAR;
        case Err::non_positive_period: return MM_ERR_NON_POSITIVE_PERIOD;
        case Err::foreign_element: return MM_ERR_FOREIGN_ELEMENT;
        case Err::not_adjacent: return MM_ERR_NOT_ADJACENT;
        case Err::cone_violation: return MM_ERR_CONE_VIOLATION;
        case Err::io_error: return MM_ERR_IO;
        case Err::internal: return MM_ERR_INTERNAL;
    }
    return MM_ERR_INTERNAL;
}

template <typename Fn>
mm_status guarded(Fn&& fn) {
    try {
        fn();
        return MM_OK;
    } catch (const MorseError& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MM_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const Program& checked(mm_program* p) {
    if (!p->is_checked) {
        p->checked = check_program(p->raw);
        p->is_checked = true;
    }
    return p->checked;
}
const Program& checked(const mm_program* p) { return checked(const_cast<mm_program*>(p)); }

void require(bool cond, const char* what) {
    if (!cond)
        fail(Err::invalid_argument, what);
}

EnumerationQuery query_from_json(const char* text) {
    require(text, "query must not be null");
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Err::parse_error, std::string("bad query JSON: ") + e.what());
    }
    try {
        EnumerationQuery query;
        query.signature = {j.at("minima").get<int>(), j.at("saddles").get<int>(), j.at("maxima").get<int>()};
        if (!j.contains("labels") || j["labels"] == "all") {
            query.labels = LabelSpec::all_labeled(query.signature);
        } else if (j["labels"] == "none") {
            query.labels = LabelSpec::none();
        } else {
            const auto& l = j.at("labels");
            query.labels.labeled_minima = l.value("labeled_minima", 0);
            query.labels.labeled_saddles = l.value("labeled_saddles", 0);
            query.labels.labeled_maxima = l.value("labeled_maxima", 0);
            query.labels.fixed_minima = l.value("fixed_minima", 0);
            query.labels.fixed_saddles = l.value("fixed_saddles", 0);
            query.labels.fixed_maxima = l.value("fixed_maxima", 0);
        }
        if (j.contains("filter_s"))
            query.filter_s = j["filter_s"].get<int>();
        if (j.contains("filter_shape"))
            query.filter_shape = j["filter_shape"].get<std::vector<int>>();
        if (j.contains("filter_partition")) {
            OrderedPartition part;
            part.blocks = j["filter_partition"].get<std::vector<std::vector<int>>>();
            for (auto& b : part.blocks)
                std::sort(b.begin(), b.end());
            query.filter_partition = std::move(part);
        }
        if (j.contains("genus"))
            query.filter_genus = j["genus"].get<int>();
        if (j.contains("budget"))
            query.budget = j["budget"].get<long long>();
        if (j.contains("threads"))
            query.threads = j["threads"].get<int>();
        return query;
    } catch (const nlohmann::json::exception& e) {
        fail(Err::parse_error, std::string("bad query document: ") + e.what());
    }
}

OrderedPartition partition_from_json(const char* text) {
    require(text, "partition must not be null");
    try {
        OrderedPartition part;
        part.blocks = ordered_json::parse(text).get<std::vector<std::vector<int>>>();
        for (auto& b : part.blocks)
            std::sort(b.begin(), b.end());
        return part;
    } catch (const nlohmann::json::exception& e) {
        fail(Err::parse_error, std::string("bad partition JSON: ") + e.what());
    }
}

ordered_json classset_json(const ClassSet& set) {
    ordered_json j;
    j["query"] = set.query.str();
    j["count"] = set.classes.size();
    j["main_condition"] = set.query.labels.satisfies_main_condition(set.query.signature);
    j["identity_component_factor"] = identity_component_factor(set.query.signature, set.query.labels);
    ordered_json hist = ordered_json::object();
    for (auto [s, n] : set.s_histogram())
        hist[std::to_string(s)] = n;
    j["s_histogram"] = std::move(hist);
    auto arr = ordered_json::array();
    for (const auto& cls : set.classes) {
        ordered_json cj;
        cj["class_id"] = cls.class_id;
        cj["s"] = cls.s_value;
        cj["partition"] = cls.partition.blocks;
        cj["program"] = ordered_json::parse(program_to_json(cls.canonical_program.raw(), -1));
        arr.push_back(std::move(cj));
    }
    j["classes"] = std::move(arr);
    return j;
}

} // namespace

extern "C" {

const char* mm_version(void) { return "1.0.0"; }

const char* mm_last_error(void) { return g_last_error.c_str(); }

void mm_string_free(char* s) { std::free(s); }

mm_status mm_program_parse(const char* json, mm_program** out) {
    return guarded([&] {
        require(json && out, "null argument");
        auto p = std::make_unique<mm_program>();
        p->raw = program_from_json(json);
        *out = p.release();
    });
}

mm_status mm_program_to_json(const mm_program* p, char** json) {
    return guarded([&] {
        require(p && json, "null argument");
        *json = dup_string(program_to_json(p->raw));
    });
}

mm_status mm_program_validate(const char* json, char** report_json) {
    return guarded([&] {
        require(json && report_json, "null argument");
        ValidationReport rep = validate_program(program_from_json(json));
        ordered_json r;
        r["ok"] = rep.ok();
        auto arr = ordered_json::array();
        for (const auto& v : rep.violations)
            arr.push_back({{"code", v.code}, {"detail", v.detail}});
        r["violations"] = std::move(arr);
        *report_json = dup_string(r.dump(2) + "\n");
    });
}

mm_status mm_program_signature(const mm_program* p, int* minima, int* saddles, int* maxima,
                               int* euler_char, int* genus) {
    return guarded([&] {
        require(p, "null program");
        SurfaceSignature sig = surface_signature(checked(p));
        if (minima) *minima = sig.minima;
        if (saddles) *saddles = sig.saddles;
        if (maxima) *maxima = sig.maxima;
        if (euler_char) *euler_char = sig.euler_char();
        if (genus) *genus = sig.genus();
    });
}

mm_status mm_program_level_graph(const mm_program* p, char** json) {
    return guarded([&] {
        require(p && json, "null argument");
        LevelGraph g = extract_level_graph(checked(p));
        ordered_json jg;
        auto verts = ordered_json::array();
        for (const auto& v : g.vertices)
            verts.push_back({{"saddle", v.saddle}, {"level", v.level}});
        jg["vertices"] = std::move(verts);
        auto edges = ordered_json::array();
        for (const auto& e : g.edges)
            edges.push_back({{"id", e.id},
                             {"level", e.level},
                             {"source", e.source_saddle},
                             {"target", e.target_saddle},
                             {"circle", e.circle},
                             {"position", e.position}});
        jg["edges"] = std::move(edges);
        jg["degrees"] = g.degrees();
        *json = dup_string(jg.dump(2) + "\n");
    });
}

mm_status mm_program_canonical(const mm_program* p, char** class_id, mm_program** canonical) {
    return guarded([&] {
        require(p, "null program");
        CanonicalResult res = canonical_form(checked(p));
        if (class_id)
            *class_id = dup_string(res.cls.class_id);
        if (canonical) {
            auto c = std::make_unique<mm_program>();
            c->checked = res.cls.canonical_program;
            c->raw = c->checked.raw();
            c->is_checked = true;
            *canonical = c.release();
        }
    });
}

mm_status mm_program_automorphisms(const mm_program* p, char** json) {
    return guarded([&] {
        require(p && json, "null argument");
        AutomorphismGroup g = automorphism_group(canonical_form(checked(p)).cls);
        ordered_json jg;
        jg["order"] = g.elements.size();
        auto arr = ordered_json::array();
        for (const auto& e : g.elements)
            arr.push_back({{"saddle_perm", e.saddle_perm}, {"edge_perm", e.edge_perm}});
        jg["elements"] = std::move(arr);
        *json = dup_string(jg.dump(2) + "\n");
    });
}

mm_status mm_program_homology(const mm_program* p, char** json) {
    return guarded([&] {
        require(p && json, "null argument");
        SurfaceComplex complex = build_cell_complex(checked(p));
        RelativeH1 h1 = relative_h1(complex);
        ordered_json jh;
        jh["euler_char_closed"] = complex.closed.euler_char();
        jh["rank"] = h1.rank;
        jh["torsion"] = h1.torsion;
        auto rows = ordered_json::array();
        for (int i = 0; i < h1.certificate.matrix.rows(); ++i) {
            auto row = ordered_json::array();
            for (int c = 0; c < h1.certificate.matrix.cols(); ++c)
                row.push_back(h1.certificate.matrix.at(i, c));
            rows.push_back(std::move(row));
        }
        jh["certificate"] = std::move(rows);
        jh["determinant"] = h1.certificate.determinant;
        *json = dup_string(jh.dump(2) + "\n");
    });
}

mm_status mm_program_delta(const mm_program* p, const char* finer_json, char** class_id,
                           mm_program** canonical) {
    return guarded([&] {
        require(p, "null program");
        CanonicalClass cls = canonical_form(checked(p)).cls;
        CanonicalClass img = delta(cls, partition_from_json(finer_json));
        if (class_id)
            *class_id = dup_string(img.class_id);
        if (canonical) {
            auto c = std::make_unique<mm_program>();
            c->checked = img.canonical_program;
            c->raw = c->checked.raw();
            c->is_checked = true;
            *canonical = c.release();
        }
    });
}

mm_status mm_program_incidence(const mm_program* p, const char* finer_json, char** json) {
    return guarded([&] {
        require(p && json, "null argument");
        CanonicalClass cls = canonical_form(checked(p)).cls;
        IncidenceData inc = incidence_matrix(cls, partition_from_json(finer_json));
        ordered_json ji;
        ji["target"] = inc.target.class_id;
        ji["saddle_perm"] = inc.saddle_perm;
        auto rows = ordered_json::array();
        for (int i = 0; i < inc.matrix.rows(); ++i) {
            auto row = ordered_json::array();
            for (int c = 0; c < inc.matrix.cols(); ++c)
                row.push_back(inc.matrix.at(i, c));
            rows.push_back(std::move(row));
        }
        ji["matrix"] = std::move(rows);
        ji["determinant"] = inc.matrix.det();
        *json = dup_string(ji.dump(2) + "\n");
    });
}

void mm_program_free(mm_program* p) { delete p; }

mm_status mm_enumerate(const char* query_json, mm_classset** out) {
    return guarded([&] {
        require(out, "null output");
        auto set = std::make_unique<mm_classset>();
        set->set = enumerate_classes(query_from_json(query_json));
        *out = set.release();
    });
}

mm_status mm_enumerate_cached(const char* query_json, const char* cache_dir, int use_cache,
                              mm_classset** out) {
    return guarded([&] {
        require(out, "null output");
        auto set = std::make_unique<mm_classset>();
        set->set = enumerate_cached(query_from_json(query_json), cache_dir ? cache_dir : "",
                                    use_cache != 0);
        *out = set.release();
    });
}

mm_status mm_classset_count(const mm_classset* c, long long* n) {
    return guarded([&] {
        require(c && n, "null argument");
        *n = (long long)c->set.classes.size();
    });
}

mm_status mm_classset_class_id(const mm_classset* c, long long index, char** id) {
    return guarded([&] {
        require(c && id, "null argument");
        require(index >= 0 && index < (long long)c->set.classes.size(), "index out of range");
        *id = dup_string(c->set.classes[index].class_id);
    });
}

mm_status mm_classset_program(const mm_classset* c, long long index, mm_program** out) {
    return guarded([&] {
        require(c && out, "null argument");
        require(index >= 0 && index < (long long)c->set.classes.size(), "index out of range");
        auto p = std::make_unique<mm_program>();
        p->checked = c->set.classes[index].canonical_program;
        p->raw = p->checked.raw();
        p->is_checked = true;
        *out = p.release();
    });
}

mm_status mm_classset_histogram(const mm_classset* c, char** json) {
    return guarded([&] {
        require(c && json, "null argument");
        ordered_json hist = ordered_json::object();
        for (auto [s, n] : c->set.s_histogram())
            hist[std::to_string(s)] = n;
        *json = dup_string(hist.dump(2) + "\n");
    });
}

mm_status mm_classset_to_json(const mm_classset* c, char** json) {
    return guarded([&] {
        require(c && json, "null argument");
        *json = dup_string(classset_json(c->set).dump(2) + "\n");
    });
}

mm_status mm_classset_euler(const mm_classset* c, long long* chi) {
    return guarded([&] {
        require(c && chi, "null argument");
        *chi = euler_characteristic(c->set.classes, c->set.query.signature.saddles);
    });
}

void mm_classset_free(mm_classset* c) { delete c; }

mm_status mm_poset_build(const mm_classset* c, mm_poset** out) {
    return guarded([&] {
        require(c && out, "null argument");
        auto p = std::make_unique<mm_poset>();
        p->poset = build_poset(c->set);
        *out = p.release();
    });
}

mm_status mm_poset_counts(const mm_poset* p, long long* nodes, long long* edges) {
    return guarded([&] {
        require(p, "null poset");
        if (nodes) *nodes = (long long)p->poset.nodes.size();
        if (edges) *edges = (long long)p->poset.edges.size();
    });
}

mm_status mm_poset_export(const mm_poset* p, const char* format, char** out) {
    return guarded([&] {
        require(p && format && out, "null argument");
        std::string fmt = format;
        if (fmt == "json")
            *out = dup_string(poset_to_json(p->poset));
        else if (fmt == "dot")
            *out = dup_string(poset_to_dot(p->poset));
        else if (fmt == "csv")
            *out = dup_string(poset_to_csv(p->poset));
        else
            fail(Err::invalid_argument, "format must be json, dot or csv");
    });
}

mm_status mm_poset_q_polynomial(const mm_poset* p, const char* plugin_json, char** report_json) {
    return guarded([&] {
        require(p && report_json, "null argument");
        StratumHomotopyPlugin plugin = plugin_json && *plugin_json
                                           ? StratumHomotopyPlugin::from_json(plugin_json)
                                           : StratumHomotopyPlugin::contractible();
        PoincarePolynomial q_poly = q_polynomial(p->poset, plugin);
        ordered_json r;
        r["plugin"] = plugin.describe();
        r["warnings"] = plugin.warnings;
        r["q_coefficients"] = q_poly.coeffs;
        r["q_text"] = q_poly.str();
        VanishingReport van = dimension_vanishing_check(q_poly, p->poset.saddles);
        r["degree"] = van.degree;
        r["degree_bound"] = van.bound;
        r["degree_ok"] = van.ok;
        if (!plugin.betti.empty()) {
            MorseSmaleReport ms = morse_smale_check(plugin.betti, q_poly);
            ordered_json rows = ordered_json::array();
            for (const auto& row : ms.rows)
                rows.push_back({{"j", row.j},
                                {"beta", row.beta},
                                {"q", row.q},
                                {"beta_alt", row.beta_alt},
                                {"q_alt", row.q_alt},
                                {"alternating_ok", row.alternating_ok},
                                {"weak_ok", row.weak_ok}});
            r["morse_smale"] = {{"pass", ms.pass}, {"weak_pass", ms.weak_pass}, {"rows", std::move(rows)}};
        }
        *report_json = dup_string(r.dump(2) + "\n");
    });
}

void mm_poset_free(mm_poset* p) { delete p; }

mm_status mm_morse_smale(const char* betti_json, const char* q_coeffs_json, char** report_json) {
    return guarded([&] {
        require(betti_json && q_coeffs_json && report_json, "null argument");
        std::vector<long long> betti, q_coeffs;
        try {
            betti = ordered_json::parse(betti_json).get<std::vector<long long>>();
            q_coeffs = ordered_json::parse(q_coeffs_json).get<std::vector<long long>>();
        } catch (const nlohmann::json::exception& e) {
            fail(Err::parse_error, std::string("bad vector JSON: ") + e.what());
        }
        PoincarePolynomial q_poly{q_coeffs};
        MorseSmaleReport ms = morse_smale_check(betti, q_poly);
        ordered_json r;
        r["pass"] = ms.pass;
        r["weak_pass"] = ms.weak_pass;
        auto rows = ordered_json::array();
        for (const auto& row : ms.rows)
            rows.push_back({{"j", row.j},
                            {"beta", row.beta},
                            {"q", row.q},
                            {"beta_alt", row.beta_alt},
                            {"q_alt", row.q_alt},
                            {"alternating_ok", row.alternating_ok},
                            {"weak_ok", row.weak_ok}});
        r["rows"] = std::move(rows);
        *report_json = dup_string(r.dump(2) + "\n");
    });
}

mm_status mm_atlas_check(const mm_classset* c, long long samples_per_chart, unsigned long long seed,
                         char** report_json) {
    return guarded([&] {
        require(c && report_json, "null argument");
        require(samples_per_chart >= 0, "negative sample count");
        Prng rng(seed);
        long long transitions = 0, cocycle_failures = 0, cone_violations = 0, fixed_points = 0;
        ordered_json fixed_list = ordered_json::array();
        for (const auto& chart : c->set.classes) {
            AutomorphismGroup group = automorphism_group(chart);
            for (long long i = 0; i < samples_per_chart; ++i) {
                AtlasPoint point = sample_point(chart, rng);
                for (const auto& g : group.elements) {
                    if (g.is_identity())
                        continue;
                    if (act(g, point, group).same_location(point)) {
                        ++fixed_points;
                        if (fixed_list.size() < 16)
                            fixed_list.push_back(point_to_json(point, -1));
                    }
                }
                OrderedPartition induced = induced_partition(point.saddle_values);
                CanonicalClass direct_target = delta(chart, induced);
                AtlasPoint direct;
                try {
                    direct = transition(point, direct_target);
                    ++transitions;
                } catch (const MorseError& e) {
                    if (e.code() == Err::cone_violation) {
                        ++cone_violations;
                        continue;
                    }
                    throw;
                }
                for (const auto& mid : chart.partition.refinements()) {
                    if (!induced.refines(mid))
                        continue;
                    try {
                        AtlasPoint half = transition(point, delta(chart, mid));
                        AtlasPoint full = transition(half, direct_target);
                        ++transitions;
                        if (!full.same_location(direct))
                            ++cocycle_failures;
                    } catch (const MorseError& e) {
                        if (e.code() == Err::cone_violation)
                            ++cone_violations;
                        else
                            throw;
                    }
                }
            }
        }
        ordered_json r;
        r["charts"] = c->set.classes.size();
        r["samples_per_chart"] = samples_per_chart;
        r["seed"] = seed;
        r["transitions"] = transitions;
        r["cocycle_failures"] = cocycle_failures;
        r["cone_violations"] = cone_violations;
        r["fixed_points_observed"] = fixed_points;
        r["fixed_point_examples"] = std::move(fixed_list);
        *report_json = dup_string(r.dump(2) + "\n");
    });
}

} // extern "C"
