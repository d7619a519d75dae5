#pragma once

#include "qml/oracle.hpp"
#include "qml/parameter.hpp"
#include "qml/pullback.hpp"

#include <json.hpp>

#include <sstream>

namespace qml {

using json = nlohmann::json;

inline json to_json(const Angle& a) { return a.to_string(); }
inline Angle angle_from_json(const json& j) { return Angle::parse(j.get<std::string>()); }

inline json to_json(const Chord& c) { return c.to_string(); }
inline Chord chord_from_json(const json& j) { return Chord::parse(j.get<std::string>()); }

inline json to_json(const Lamination& lam) {
    json leaves = json::array();
    for (const Chord& c : lam.leaves)
        leaves.push_back({{"a", c.a().to_string()}, {"b", c.b().to_string()}});
    return json{{"seed", lam.seed.to_string()},
                {"depth", lam.depth},
                {"includes_quadrilateral", lam.includes_quadrilateral},
                {"leaves", leaves}};
}

inline Lamination lamination_from_json(const json& j) {
    Lamination lam;
    lam.seed = Chord::parse(j.at("seed").get<std::string>());
    lam.depth = j.at("depth").get<long>();
    lam.includes_quadrilateral = j.at("includes_quadrilateral").get<bool>();
    for (const json& leaf : j.at("leaves"))
        lam.leaves.emplace_back(Angle::parse(leaf.at("a").get<std::string>()),
                                Angle::parse(leaf.at("b").get<std::string>()));
    std::sort(lam.leaves.begin(), lam.leaves.end());
    return lam;
}

inline std::string lamination_csv(const Lamination& lam) {
    std::ostringstream out;
    for (const Chord& c : lam.leaves)
        out << c.a().to_string() << "," << c.b().to_string() << "\n";
    return out.str();
}

inline json to_json(const Strip& s) {
    json quad = json::array();
    for (const Angle& v : s.quad) quad.push_back(v.to_string());
    return json{{"M", s.major.to_string()}, {"minus_M", s.minus_major.to_string()}, {"Q", quad}};
}

inline json to_json(const MinorRecord& rec) {
    json orbit = json::array();
    for (const Chord& c : rec.orbit_chords) orbit.push_back(c.to_string());
    return json{{"chord", rec.chord.to_string()},
                {"accepted", true},
                {"classification", to_string(rec.classification)},
                {"strip", to_json(rec.strip)},
                {"orbit", orbit},
                {"chord_preperiod", rec.chord_preperiod},
                {"chord_period", rec.chord_period},
                {"endpoints",
                 {{"a", {{"preperiod", rec.a_orbit.preperiod}, {"period", rec.a_orbit.period}}},
                  {"b", {{"preperiod", rec.b_orbit.preperiod}, {"period", rec.b_orbit.period}}}}},
                {"certificate",
                 {{"sa1", rec.certificate.sa1}, {"sa2", rec.certificate.sa2}, {"sa3", rec.certificate.sa3}}}};
}

inline json to_json(const SaRejection& rej) {
    return json{{"chord", rej.chord.to_string()},
                {"accepted", false},
                {"violated", to_string(rej.violated)},
                {"witness", rej.witness},
                {"detail", rej.detail},
                {"certificate",
                 {{"sa1", rej.certificate.sa1},
                  {"sa2", rej.certificate.sa2},
                  {"sa3", rej.certificate.sa3}}}};
}

inline json to_json(const VerifyResult& v) {
    if (const auto* rec = std::get_if<MinorRecord>(&v)) return to_json(*rec);
    return to_json(std::get<SaRejection>(v));
}

/// Reconstructs a record from its certificate by re-running verification on
/// the chord; rejects certificates that no longer verify.
inline MinorRecord minor_record_from_json(const json& j) {
    Chord chord = Chord::parse(j.at("chord").get<std::string>());
    VerifyResult v = verify_minor(chord);
    if (auto* rec = std::get_if<MinorRecord>(&v)) return std::move(*rec);
    throw std::invalid_argument("minor_record_from_json: chord does not verify");
}

inline json to_json(const QmlNrResult& r) {
    json leaves = json::array();
    for (const QmlNrLeaf& leaf : r.leaves)
        leaves.push_back({{"chord", leaf.record.chord.to_string()},
                          {"root", leaf.root},
                          {"iterates_to_root", leaf.iterates_to_root}});
    return json{{"params",
                 {{"max_q", r.params.max_q},
                  {"generations", r.params.generations},
                  {"depth", r.params.depth}}},
                {"leaves", leaves}};
}

inline std::string qmlnr_csv(const QmlNrResult& r) {
    std::ostringstream out;
    for (const QmlNrLeaf& leaf : r.leaves)
        out << leaf.record.chord.to_string() << "," << leaf.root << "," << leaf.iterates_to_root << "\n";
    return out.str();
}

inline std::string oracle_csv(const EnumerationReport& report) {
    std::ostringstream out;
    out << "chord,verdict,violated,witness\n";
    for (const MinorRecord& rec : report.accepted)
        out << rec.chord.to_string() << ",accepted,,\n";
    for (const RejectionEntry& rej : report.rejected)
        out << rej.chord.to_string() << ",rejected," << to_string(rej.violated) << "," << rej.witness
            << "\n";
    return out.str();
}

}  // namespace qml
