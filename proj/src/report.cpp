#include "cx2/report.hpp"

#include "cx2/diagrams.hpp"

namespace cx2 {

namespace {

Json flags(const std::vector<bool>& v) {
    Json j = Json::array();
    for (bool b : v) j.push_back(b);
    return j;
}

Json named(const std::vector<std::pair<std::string, bool>>& v) {
    Json j = Json::object();
    for (const auto& [name, ok] : v) j[name] = ok;
    return j;
}

Json objects(const ComplexSequence& s) {
    Json j = Json::array();
    for (const auto& o : s.objects) j.push_back(toJson(o));
    return j;
}

bool all(const std::vector<bool>& v) {
    for (bool b : v)
        if (!b) return false;
    return true;
}

}  // namespace

Json toJson(const ArrowClassification& c) {
    Json j;
    j["faithful"] = c.faithful;
    j["full"] = c.full;
    j["fullyFaithful"] = c.fullyFaithful;
    j["cofaithful"] = c.cofaithful;
    j["fullyCofaithful"] = c.fullyCofaithful;
    j["normalFaithful"] = c.normalFaithful;
    j["normalFullyFaithful"] = c.normalFullyFaithful;
    j["normalCofaithful"] = c.normalCofaithful;
    j["normalFullyCofaithful"] = c.normalFullyCofaithful;
    j["equivalence"] = c.equivalence;
    j["discreteSource"] = c.discreteSource;
    j["connectedSource"] = c.connectedSource;
    j["splitSource"] = c.splitSource;
    return j;
}

Json toJson(const EquivalenceData& e) {
    Json j;
    j["inverse"] = toJson(e.inverse);
    j["unit"] = toJson(e.unit);
    j["counit"] = toJson(e.counit);
    return j;
}

Json toJson(const ExactnessReport& r) {
    Json j;
    j["exact"] = r.exact;
    j["viaCokernel"] = r.viaCokernel;
    j["viaKernel"] = r.viaKernel;
    j["routesAgree"] = r.routesAgree;
    return j;
}

Json toJson(const LoopExactness& r) {
    Json j;
    j["sequence"] = r.sequence;
    j["suspension"] = r.suspension;
    j["loop"] = r.loop;
    j["agree"] = r.agree;
    return j;
}

Json toJson(const PuppeResult& p) {
    Json j;
    j["labels"] = p.labels;
    j["objects"] = objects(p.sequence);
    j["exact"] = flags(p.exact);
    j["identities"] = named(p.identities);
    j["mu"] = toJson(p.mu);
    j["muExact"] = toJson(p.muExact);
    j["allExact"] = p.allExact();
    j["identitiesHold"] = p.identitiesHold();
    return j;
}

Json toJson(const SnakeResult& s) {
    Json j;
    j["labels"] = {"Ker a", "Ker b", "Ker c", "Coker a", "Coker b", "Coker c"};
    j["objects"] = objects(s.sixTerm);
    j["d"] = toJson(s.d);
    j["exact"] = flags(s.exact);
    j["identities"] = named(s.muIdentities);
    j["allExact"] = s.allExact();
    j["identitiesHold"] = s.identitiesHold();
    return j;
}

Json toJson(const AnacondaResult& a) {
    Json j;
    j["labels"] = a.labels;
    j["objects"] = objects(a.sequence);
    j["exact"] = flags(a.exact);
    Json loops = Json::object();
    for (size_t i = 0; i < a.loopNames.size(); ++i) loops[a.loopNames[i]] = a.loopSigns[i];
    j["loopSigns"] = loops;
    j["allExact"] = a.allExact();
    j["loopsMatch"] = a.loopsMatch();
    return j;
}

Json toJson(const LesResult& l) {
    Json j;
    j["lo"] = l.lo;
    j["hi"] = l.hi;
    Json labels = Json::array();
    for (int n = l.lo - 1; n <= l.hi + 1; ++n)
        for (const char* x : {"A", "B", "C"}) labels.push_back("H" + std::to_string(n) + "(" + x + ")");
    j["labels"] = labels;
    j["objects"] = objects(l.sequence);
    j["exact"] = flags(l.exact);
    j["identities"] = flags(l.identities);
    j["homologyMatches"] = flags(l.homologyMatches);
    j["pi0Exact"] = l.pi0Exact;
    j["omegaExact"] = l.omegaExact;
    j["allExact"] = l.allExact();
    j["homologyAgrees"] = all(l.homologyMatches);
    return j;
}

Json toJson(const Report3x3& r) {
    Json j;
    j["hypotheses"] = named(r.hypotheses);
    j["failure"] = r.failure;
    j["firstRowRelativeExact"] = r.firstRowRelativeExact;
    j["firstRowExtension"] = r.firstRowExtension;
    j["middleRelativeExact"] = r.middleRelativeExact;
    j["allRelativeExact"] = r.allRelativeExact;
    j["holds"] = r.holds();
    return j;
}

Json toJson(const ShortFiveReport& r) {
    Json j;
    j["failure"] = r.failure;
    if (!r.failure.empty()) return j;
    j["a"] = toJson(r.a);
    j["b"] = toJson(r.b);
    j["c"] = toJson(r.c);
    Json imp;
    imp["equivalence"] = r.equivalenceHolds;
    imp["faithful"] = r.faithfulHolds;
    imp["full"] = r.fullHolds;
    imp["cofaithful"] = r.cofaithfulHolds;
    imp["fullyFaithful"] = r.fullyFaithfulHolds;
    imp["fullyCofaithful"] = r.fullyCofaithfulHolds;
    j["implications"] = imp;
    j["holds"] = r.holds();
    j["refinedHolds"] = r.refinedHolds();
    return j;
}

Json demoNonSplit() {
    const auto entry = [](const TwoMorphism& u) {
        Json j;
        j["ring"] = toJson(u.src.ring());
        j["square"] = toJson(u);
        j["classification"] = toJson(classify2(u));
        const BaseMorphism m = leftMap(u), e = rightMap(u);
        Json w;
        w["threeTermExact"] = isExactBase(m, e);
        w["leftMapRetraction"] = lsolveBase(m, identity(m.src)).has_value();
        w["rightMapSection"] = solveBase(e, identity(e.tgt)).has_value();
        j["splitWitness"] = w;
        const auto d = equivalenceData2(u);
        j["equivalenceData"] = d ? toJson(*d) : Json(nullptr);
        return j;
    };
    Json j;
    j["nonsplit"] = entry(nonSplitSquare());
    j["contrast"] = entry(nonSplitContrast());
    return j;
}

}  // namespace cx2
