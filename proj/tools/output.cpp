#include "output.hpp"

#include <sstream>

namespace prefasp::cli {

Document literals(const Interpretation& I) {
    Document out = Document::array();
    for (const auto& l : I) {
        out.push_back(l.str());
    }
    return out;
}

Document rule_ids(const std::vector<RuleId>& ids) {
    Document out = Document::array();
    for (const auto& id : ids) {
        out.push_back(id.str());
    }
    return out;
}

namespace {

std::string join(const Document& arr, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i != arr.size(); ++i) {
        if (i != 0) {
            out += sep;
        }
        out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
    }
    return out;
}

std::string set_text(const Document& lits) { return "{" + join(lits) + "}"; }

void render_sets(const Document& doc, std::ostream& os) {
    const auto& sets = doc.at("answer_sets");
    std::size_t k    = 0;
    for (const auto& s : sets) {
        os << "Answer " << ++k << ": " << set_text(s.at("literals")) << "\n";
        if (s.contains("objective")) {
            os << "  H = " << s["objective"]["H"].get<std::int64_t>();
            for (const auto& [level, w] : s["objective"]["levels"].items()) {
                os << "  [level " << level << ": " << w.get<std::int64_t>() << "]";
            }
            os << "\n";
        }
        if (s.contains("preferred")) {
            os << "  preferred:";
            for (const auto& [name, v] : s["preferred"].items()) {
                os << " " << name << "=" << (v.get<bool>() ? "yes" : "no");
            }
            os << "\n";
        }
        if (s.contains("pvd")) {
            const auto& w = s["witness"];
            os << "  pvd = " << s["pvd"].get<std::int64_t>() << "\n";
            os << "  <1: " << join(w["from"], " < ") << "\n";
            os << "  <2: " << join(w["to"], " < ") << "\n";
            for (const auto& p : w["swapped"]) {
                os << "  swapped (" << join(p) << ")\n";
            }
        }
    }
    os << sets.size() << (sets.size() == 1 ? " set" : " sets");
    if (doc.contains("optimum")) {
        os << ", optimum " << doc["optimum"].get<std::int64_t>();
    }
    if (doc.contains("pvd")) {
        os << ", pvd " << doc["pvd"].get<std::int64_t>();
    }
    os << "\n";
}

void render_explain(const Document& doc, std::ostream& os) {
    for (const auto& e : doc.at("explain")) {
        os << "\n" << set_text(e["literals"]) << ": " << (e["accepted"].get<bool>() ? "accepted" : "rejected") << "\n";
        if (e.contains("rounds")) {
            for (std::size_t i = 0; i != e["rounds"].size(); ++i) {
                os << "  round " << i + 1 << ": remove " << join(e["rounds"][i]) << "  S = "
                   << set_text(e["s_after"][i]) << "\n";
            }
            os << "  labels:";
            for (const auto& [id, l] : e["labels"].items()) {
                os << " " << id << "=" << l.get<std::string>();
            }
            os << "\n";
            if (!e["witness"].is_null()) {
                os << "  witness: " << join(e["witness"], " < ") << "\n";
            }
        }
        else {
            for (std::size_t i = 0; i != e["stages"].size(); ++i) {
                os << "  S" << i << " = " << set_text(e["stages"][i]);
                if (e.contains("derivations") && i < e["derivations"].size() && !e["derivations"][i].empty()) {
                    os << "  via";
                    for (const auto& d : e["derivations"][i]) {
                        os << " " << d[0].get<std::string>() << "/" << d[1].get<std::string>();
                    }
                }
                os << "\n";
            }
            if (!e["consistent"].get<bool>()) {
                os << "  inconsistent\n";
            }
        }
    }
}

void render_validate(const Document& doc, std::ostream& os) {
    for (const auto& r : doc.at("reports")) {
        if (r["agree"].get<bool>()) {
            continue;
        }
        os << "DISAGREE " << r["program"].get<std::string>() << " " << r["semantics"].get<std::string>() << "\n";
        for (const auto& s : r["only_native"]) {
            os << "  native only: " << set_text(s) << "\n";
        }
        for (const auto& s : r["only_meta"]) {
            os << "  meta only:   " << set_text(s) << "\n";
        }
    }
    const auto& sum = doc.at("summary");
    os << sum["programs"].get<std::size_t>() << " programs, " << sum["checks"].get<std::size_t>() << " checks, "
       << sum["disagreements"].get<std::size_t>() << " disagreements\n";
}

} // namespace

std::string render_text(const Document& doc) {
    std::ostringstream os;
    if (doc.contains("text")) {
        os << doc["text"].get<std::string>();
    }
    else if (doc.contains("reports")) {
        render_validate(doc, os);
    }
    else {
        render_sets(doc, os);
        if (doc.contains("raw")) {
            os << "raw meta answer sets:\n";
            for (const auto& s : doc["raw"]) {
                os << "  " << set_text(s) << "\n";
            }
        }
        if (doc.contains("explain")) {
            render_explain(doc, os);
        }
    }
    for (const auto& d : doc.at("diagnostics")) {
        os << "% " << d.get<std::string>() << "\n";
    }
    return os.str();
}

std::string render_json(const Document& doc) { return doc.dump(2) + "\n"; }

} // namespace prefasp::cli
