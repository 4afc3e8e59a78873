#pragma once

#include "cx2/exactness.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace cx2 {

using Json = nlohmann::ordered_json;

// Text does not parse, or an entity violates its invariants.
class FormatError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Two-space indentation with arrays of scalars kept on one line; ends in a newline.
std::string dumpPretty(const Json& j);

// "fp:<p>" or "Z".
BaseRing parseRing(const std::string& text);
std::string ringFlag(BaseRing r);

Json toJson(BaseRing r);
BaseRing ringFromJson(const Json& j);

// Integers that fit in 64 bits are numbers, larger ones decimal strings.
Json toJson(const Int& v);
Int intFromJson(const Json& j);

// Row-major; shape checked against the expected one.
Json toJson(const Mat& m);
Mat matFromJson(const Json& j, Eigen::Index rows, Eigen::Index cols);

// {"dim": n} over a field, {"free": r, "torsion": [..]} for canonical groups, else {"orders": [..]}.
Json toJson(const BaseObject& a);
BaseObject objectFromJson(const Json& j, BaseRing r);

Json toJson(const TwoObject& x);
Json toJson(const TwoMorphism& u);
Json toJson(const TwoCell& c);
Json toJson(const ComplexSequence& s);

bool sameSequence(const ComplexSequence& a, const ComplexSequence& b);

struct Workspace {
    BaseRing ring;
    std::map<std::string, TwoObject> objects;
    std::map<std::string, TwoMorphism> morphisms;
    std::map<std::string, TwoCell> cells;
    std::map<std::string, ComplexSequence> complexes;

    const TwoObject& object(const std::string& name) const;
    const TwoMorphism& morphism(const std::string& name) const;
    const TwoCell& cell(const std::string& name) const;
    const ComplexSequence& complex(const std::string& name) const;
};

bool operator==(const Workspace& a, const Workspace& b);

Workspace parseWorkspace(const std::string& text);
// References are written by name whenever a named entity matches.
std::string serializeWorkspace(const Workspace& w);
Workspace loadWorkspace(const std::string& path);
void saveWorkspace(const Workspace& w, const std::string& path);

}  // namespace cx2
