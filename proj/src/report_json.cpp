#include "grouplat/report_json.hpp"

#include <json.hpp>

#include "grouplat/errors.hpp"
#include "grouplat/version.hpp"

namespace grouplat {

using nlohmann::json;

namespace {

json to_json(const SchmidtClassification& c) {
    return json{{"index", c.sub_index},
                {"order", c.order},
                {"members", c.members},
                {"p", c.witness.p},
                {"q", c.witness.q},
                {"y", c.witness.y},
                {"p_order", c.p_order},
                {"q_order", c.q_order},
                {"subnormal", c.subnormal},
                {"defect", c.defect},
                {"modular", c.modular},
                {"permutable", c.permutable},
                {"normal", c.normal}};
}

SchmidtClassification schmidt_from_json(const json& j) {
    SchmidtClassification c;
    c.sub_index = j.at("index").get<int>();
    c.order = j.at("order").get<int>();
    c.members = j.at("members").get<std::vector<int>>();
    c.witness.p = j.at("p").get<int>();
    c.witness.q = j.at("q").get<int>();
    c.witness.y = j.at("y").get<int>();
    c.p_order = j.at("p_order").get<int>();
    c.q_order = j.at("q_order").get<int>();
    c.subnormal = j.at("subnormal").get<bool>();
    c.defect = j.at("defect").get<int>();
    c.modular = j.at("modular").get<bool>();
    c.permutable = j.at("permutable").get<bool>();
    c.normal = j.at("normal").get<bool>();
    return c;
}

json to_json(const LemmaOutcome& o) {
    return json{{"pass", o.pass},
                {"vacuous", o.vacuous},
                {"checked", o.checked},
                {"failures", o.failures}};
}

LemmaOutcome lemma_from_json(const json& j) {
    LemmaOutcome o;
    o.pass = j.at("pass").get<bool>();
    o.vacuous = j.at("vacuous").get<bool>();
    o.checked = j.at("checked").get<int>();
    o.failures = j.at("failures").get<std::vector<std::string>>();
    return o;
}

json to_json(const TheoremReport& r) {
    json schmidt = json::array();
    for (const auto& c : r.schmidt) schmidt.push_back(to_json(c));
    return json{{"spec", r.spec},
                {"label", r.label},
                {"order", r.order},
                {"skipped", r.skipped},
                {"skip_reason", r.skip_reason},
                {"subgroup_count", r.subgroup_count},
                {"fitting_order", r.fitting_order},
                {"quotient_order", r.quotient_order},
                {"quotient_cyclic", r.quotient_cyclic},
                {"schmidt_subgroups", schmidt},
                {"hypothesis_holds", r.hypothesis_holds},
                {"hypothesis_vacuous", r.hypothesis_vacuous},
                {"conclusion_holds", r.conclusion_holds},
                {"theorem_respected", r.theorem_respected},
                {"lemmas",
                 json{{"lsch", to_json(r.lsch)},
                      {"lsch2", to_json(r.lsch2)},
                      {"lm1", to_json(r.lm1)},
                      {"tsch", to_json(r.tsch)},
                      {"vedernikov", to_json(r.vedernikov)},
                      {"implications", to_json(r.implications)}}},
                {"cross_check_bound", r.cross_check_bound},
                {"modular_not_permutable", r.modular_not_permutable},
                {"permutable_not_normal", r.permutable_not_normal},
                {"first_modular_not_permutable", r.first_modular_not_permutable},
                {"first_permutable_not_normal", r.first_permutable_not_normal},
                {"failure_witnesses", r.failure_witnesses},
                {"all_pass", r.all_pass()}};
}

TheoremReport report_from_json(const json& j) {
    TheoremReport r;
    r.spec = j.at("spec").get<std::string>();
    r.label = j.at("label").get<std::string>();
    r.order = j.at("order").get<int>();
    r.skipped = j.at("skipped").get<bool>();
    r.skip_reason = j.at("skip_reason").get<std::string>();
    r.subgroup_count = j.at("subgroup_count").get<int>();
    r.fitting_order = j.at("fitting_order").get<int>();
    r.quotient_order = j.at("quotient_order").get<int>();
    r.quotient_cyclic = j.at("quotient_cyclic").get<bool>();
    for (const auto& c : j.at("schmidt_subgroups")) r.schmidt.push_back(schmidt_from_json(c));
    r.hypothesis_holds = j.at("hypothesis_holds").get<bool>();
    r.hypothesis_vacuous = j.at("hypothesis_vacuous").get<bool>();
    r.conclusion_holds = j.at("conclusion_holds").get<bool>();
    r.theorem_respected = j.at("theorem_respected").get<bool>();
    const json& lm = j.at("lemmas");
    r.lsch = lemma_from_json(lm.at("lsch"));
    r.lsch2 = lemma_from_json(lm.at("lsch2"));
    r.lm1 = lemma_from_json(lm.at("lm1"));
    r.tsch = lemma_from_json(lm.at("tsch"));
    r.vedernikov = lemma_from_json(lm.at("vedernikov"));
    r.implications = lemma_from_json(lm.at("implications"));
    r.cross_check_bound = j.at("cross_check_bound").get<int>();
    r.modular_not_permutable = j.at("modular_not_permutable").get<int>();
    r.permutable_not_normal = j.at("permutable_not_normal").get<int>();
    r.first_modular_not_permutable = j.at("first_modular_not_permutable").get<std::string>();
    r.first_permutable_not_normal = j.at("first_permutable_not_normal").get<std::string>();
    r.failure_witnesses = j.at("failure_witnesses").get<std::vector<std::string>>();
    return r;
}

json to_json(const ScanSummary& s) {
    return json{{"groups_total", s.groups_total},
                {"groups_processed", s.groups_processed},
                {"groups_skipped", s.groups_skipped},
                {"all_pass", s.all_pass},
                {"schmidt_total", s.schmidt_total},
                {"modular_not_permutable_total", s.modular_not_permutable_total},
                {"permutable_not_normal_total", s.permutable_not_normal_total},
                {"first_modular_not_permutable", s.first_modular_not_permutable},
                {"first_permutable_not_normal", s.first_permutable_not_normal}};
}

ScanSummary summary_from_json(const json& j) {
    ScanSummary s;
    s.groups_total = j.at("groups_total").get<int>();
    s.groups_processed = j.at("groups_processed").get<int>();
    s.groups_skipped = j.at("groups_skipped").get<int>();
    s.all_pass = j.at("all_pass").get<bool>();
    s.schmidt_total = j.at("schmidt_total").get<int>();
    s.modular_not_permutable_total = j.at("modular_not_permutable_total").get<int>();
    s.permutable_not_normal_total = j.at("permutable_not_normal_total").get<int>();
    s.first_modular_not_permutable = j.at("first_modular_not_permutable").get<std::string>();
    s.first_permutable_not_normal = j.at("first_permutable_not_normal").get<std::string>();
    return s;
}

}  // namespace

ReportDocument make_document(const ScanReport& scan) {
    ReportDocument doc;
    doc.schema_version = kSchemaVersion;
    doc.engine_version = kEngineVersion;
    doc.reports = scan.reports;
    doc.summary = scan.summary;
    return doc;
}

std::string emit_report(const ReportDocument& doc) {
    json reports = json::array();
    for (const auto& r : doc.reports) reports.push_back(to_json(r));
    const json j{{"schema_version", doc.schema_version},
                 {"engine_version", doc.engine_version},
                 {"reports", reports},
                 {"summary", to_json(doc.summary)}};
    return j.dump(2) + "\n";
}

ReportDocument parse_report(const std::string& bytes) {
    json j;
    try {
        j = json::parse(bytes);
        ReportDocument doc;
        doc.schema_version = j.at("schema_version").get<std::string>();
        doc.engine_version = j.at("engine_version").get<std::string>();
        for (const auto& r : j.at("reports")) doc.reports.push_back(report_from_json(r));
        doc.summary = summary_from_json(j.at("summary"));
        return doc;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad report document: ") + e.what());
    }
}

}  // namespace grouplat
