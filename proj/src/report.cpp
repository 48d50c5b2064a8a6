#include "mvspec/report.hpp"

#include <json.hpp>

#include "mvspec/errors.hpp"

namespace mvspec {

using nlohmann::ordered_json;

std::string reportJson(const std::vector<StatementReport>& reports, const SuiteEcho& suite, JsonOptions options) {
    ordered_json doc;
    doc["suite"] = {{"source", suite.source},
                    {"algebras", suite.algebras},
                    {"samples", suite.samples},
                    {"seed", suite.seed},
                    {"only", suite.only}};
    doc["statements"] = ordered_json::array();
    std::size_t verified = 0, counterexamples = 0, vacuous = 0;
    for (const auto& r : reports) {
        ordered_json s;
        s["id"] = r.id;
        s["variant"] = toString(r.variant);
        s["mode"] = r.mode;
        s["status"] = toString(r.status);
        s["instances"] = r.instances;
        s["hypothesis_hits"] = r.hypothesis_hits;
        s["elapsed_ms"] = options.timing ? ordered_json(r.elapsed_ms) : ordered_json(nullptr);
        if (r.witness) {
            ordered_json observed = ordered_json::object();
            for (const auto& o : r.witness->observed) observed[o.name] = o.value;
            s["witness"] = {{"algebra", r.witness->algebra},
                            {"filters", r.witness->filters},
                            {"elements", r.witness->elements},
                            {"observed", std::move(observed)}};
        } else {
            s["witness"] = nullptr;
        }
        ordered_json subcases = ordered_json::object();
        for (const auto& c : r.subcases) subcases[c.name] = c.count;
        s["subcases"] = std::move(subcases);
        s["vacuous_subcases"] = r.vacuous_subcases;
        s["expected_counterexample"] = r.expected_counterexample;
        s["partial"] = r.partial;
        doc["statements"].push_back(std::move(s));
        switch (r.status) {
            case Status::Verified: ++verified; break;
            case Status::Counterexample: ++counterexamples; break;
            case Status::Vacuous: ++vacuous; break;
        }
    }
    doc["summary"] = {{"verified", verified}, {"counterexamples", counterexamples}, {"vacuous", vacuous}};
    return doc.dump(2) + "\n";
}

std::vector<StoredWitness> witnessesFromJson(std::string_view text) {
    std::vector<StoredWitness> out;
    try {
        const auto doc = ordered_json::parse(text);
        for (const auto& s : doc.at("statements")) {
            const auto& w = s.at("witness");
            if (w.is_null()) continue;
            StoredWitness sw;
            sw.id = s.at("id").get<std::string>();
            const auto variant = s.at("variant").get<std::string>();
            if (variant == "paper-stated")
                sw.variant = Variant::PaperStated;
            else if (variant == "repaired")
                sw.variant = Variant::Repaired;
            else
                throw InvalidArgument("unknown variant '" + variant + "'");
            sw.algebra = w.at("algebra").get<std::string>();
            sw.filters = w.at("filters").get<std::vector<std::string>>();
            sw.elements = w.at("elements").get<std::vector<std::string>>();
            out.push_back(std::move(sw));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed report: ") + e.what());
    }
    return out;
}

}  // namespace mvspec
