#include "cx2/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace cx2 {

namespace {

[[noreturn]] void fail(const std::string& what) { throw FormatError(what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) fail(where + ": missing \"" + key + "\"");
    return j.at(key);
}

std::int64_t smallInt(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where + ": expected an integer");
    return j.get<std::int64_t>();
}

template <class T>
const T& lookup(const std::map<std::string, T>& m, const std::string& name, const char* kind) {
    const auto it = m.find(name);
    if (it == m.end()) fail(std::string("unknown ") + kind + " \"" + name + "\"");
    return it->second;
}

// Entity constructors throw ValidationError; prefix the entity name.
template <class F>
auto named(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const FormatError&) {
        throw;
    } catch (const ValidationError& e) {
        fail(where + ": " + e.what());
    }
}

class Reader {
public:
    explicit Reader(Workspace& w) : w_(w) {}

    TwoObject object(const Json& j, const std::string& where) const {
        if (j.is_string()) return lookup(w_.objects, j.get<std::string>(), "object");
        const BaseObject top = objectFromJson(field(j, "top", where), w_.ring);
        const BaseObject bottom = objectFromJson(field(j, "bottom", where), w_.ring);
        const Mat d = matFromJson(field(j, "d", where), bottom.size(), top.size());
        return named(where, [&] { return TwoObject(BaseMorphism(top, bottom, d)); });
    }

    TwoMorphism morphism(const Json& j, const std::string& where) const {
        if (j.is_string()) return lookup(w_.morphisms, j.get<std::string>(), "morphism");
        const TwoObject s = object(field(j, "src", where), where + ".src");
        const TwoObject t = object(field(j, "tgt", where), where + ".tgt");
        const Mat u1 = matFromJson(field(j, "u1", where), t.top().size(), s.top().size());
        const Mat u0 = matFromJson(field(j, "u0", where), t.bottom().size(), s.bottom().size());
        return named(where, [&] {
            return TwoMorphism(s, t, BaseMorphism(s.top(), t.top(), u1), BaseMorphism(s.bottom(), t.bottom(), u0));
        });
    }

    TwoCell cell(const Json& j, const std::string& where) const {
        if (j.is_string()) return lookup(w_.cells, j.get<std::string>(), "cell");
        const TwoMorphism f = morphism(field(j, "from", where), where + ".from");
        const TwoMorphism t = morphism(field(j, "to", where), where + ".to");
        const Mat a = matFromJson(field(j, "a", where), f.tgt.top().size(), f.src.bottom().size());
        return named(where, [&] { return TwoCell(f, t, BaseMorphism(f.src.bottom(), f.tgt.top(), a)); });
    }

    ComplexSequence complex(const Json& j, const std::string& where) const {
        ComplexSequence s;
        if (j.contains("lo")) s.lo = int(smallInt(j.at("lo"), where + ".lo"));
        const auto list = [&](const char* key) {
            const Json& v = field(j, key, where);
            if (!v.is_array()) fail(where + "." + key + ": expected an array");
            return v;
        };
        size_t i = 0;
        for (const auto& o : list("objects")) s.objects.push_back(object(o, where + ".objects[" + std::to_string(i++) + "]"));
        i = 0;
        for (const auto& m : list("maps")) s.maps.push_back(morphism(m, where + ".maps[" + std::to_string(i++) + "]"));
        i = 0;
        for (const auto& c : list("cells")) s.cells.push_back(cell(c, where + ".cells[" + std::to_string(i++) + "]"));
        named(where, [&] { s.validate(); });
        return s;
    }

private:
    Workspace& w_;
};

class Writer {
public:
    explicit Writer(const Workspace& w) : w_(w) {}

    Json object(const TwoObject& x) const {
        for (const auto& [name, y] : w_.objects)
            if (y == x) return name;
        return toJson(x);
    }

    Json morphism(const TwoMorphism& u) const {
        for (const auto& [name, v] : w_.morphisms)
            if (v == u) return name;
        return namedMorphism(u);
    }

    Json cell(const TwoCell& c) const {
        for (const auto& [name, d] : w_.cells)
            if (d == c) return name;
        return namedCell(c);
    }

    // Inline form; named entities refer only to earlier sections.
    Json namedMorphism(const TwoMorphism& u) const {
        Json j;
        j["src"] = object(u.src);
        j["tgt"] = object(u.tgt);
        j["u1"] = toJson(u.u1.m);
        j["u0"] = toJson(u.u0.m);
        return j;
    }

    Json namedCell(const TwoCell& c) const {
        Json j;
        j["from"] = morphism(c.from);
        j["to"] = morphism(c.to);
        j["a"] = toJson(c.a.m);
        return j;
    }

    Json complex(const ComplexSequence& s) const {
        Json j;
        j["lo"] = s.lo;
        j["objects"] = Json::array();
        j["maps"] = Json::array();
        j["cells"] = Json::array();
        for (const auto& o : s.objects) j["objects"].push_back(object(o));
        for (const auto& m : s.maps) j["maps"].push_back(morphism(m));
        for (const auto& c : s.cells) j["cells"].push_back(cell(c));
        return j;
    }

private:
    const Workspace& w_;
};

bool scalarArray(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j)
        if (e.is_structured()) return false;
    return true;
}

void pretty(const Json& j, int depth, std::string& out) {
    const std::string pad(size_t(2 * (depth + 1)), ' '), close(size_t(2 * depth), ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        size_t i = 0;
        for (const auto& [k, v] : j.items()) {
            out += pad + Json(k).dump() + ": ";
            pretty(v, depth + 1, out);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += close + "}";
    } else if (j.is_array() && !j.empty() && !scalarArray(j)) {
        out += "[\n";
        for (size_t i = 0; i < j.size(); ++i) {
            out += pad;
            pretty(j[i], depth + 1, out);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += close + "]";
    } else if (j.is_array()) {
        out += "[";
        for (size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
        out += "]";
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string dumpPretty(const Json& j) {
    std::string out;
    pretty(j, 0, out);
    return out + "\n";
}

BaseRing parseRing(const std::string& text) {
    if (text == "Z") return BaseRing::integers();
    if (text.rfind("fp:", 0) == 0) {
        std::int64_t p = 0;
        std::istringstream in(text.substr(3));
        if (in >> p && in.eof()) {
            try {
                return BaseRing::field(p);
            } catch (const ValidationError& e) {
                fail(e.what());
            }
        }
    }
    fail("ring must be fp:<p> or Z, got \"" + text + "\"");
}

std::string ringFlag(BaseRing r) { return r.isField() ? "fp:" + std::to_string(r.p) : "Z"; }

Json toJson(BaseRing r) {
    Json j;
    if (r.isField())
        j["field"] = r.p;
    else
        j["ring"] = "Z";
    return j;
}

BaseRing ringFromJson(const Json& j) {
    if (j.is_object() && j.contains("field")) {
        const std::int64_t p = smallInt(j.at("field"), "ring.field");
        try {
            return BaseRing::field(p);
        } catch (const ValidationError& e) {
            fail(std::string("ring: ") + e.what());
        }
    }
    if (j.is_object() && j.contains("ring") && j.at("ring") == "Z") return BaseRing::integers();
    fail("ring must be {\"field\": p} or {\"ring\": \"Z\"}");
}

Json toJson(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Int intFromJson(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
        if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) return Int(s);
    }
    fail("expected an integer, got " + j.dump());
}

Json toJson(const Mat& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(toJson(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat matFromJson(const Json& j, Eigen::Index rows, Eigen::Index cols) {
    const std::string want = std::to_string(rows) + "x" + std::to_string(cols);
    if (!j.is_array() || Eigen::Index(j.size()) != rows) fail("matrix shape: expected " + want + ", got " + j.dump());
    Mat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Json& row = j[size_t(i)];
        if (!row.is_array() || Eigen::Index(row.size()) != cols)
            fail("matrix shape: expected " + want + ", row " + std::to_string(i) + " is " + row.dump());
        for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = intFromJson(row[size_t(k)]);
    }
    return m;
}

Json toJson(const BaseObject& a) {
    Json j;
    if (a.ring.isField()) {
        j["dim"] = a.size();
    } else if (a.isCanonical()) {
        j["free"] = a.freeRank();
        j["torsion"] = Json::array();
        for (const auto& t : a.torsion()) j["torsion"].push_back(toJson(t));
    } else {
        j["orders"] = Json::array();
        for (const auto& o : a.ord) j["orders"].push_back(toJson(o));
    }
    return j;
}

BaseObject objectFromJson(const Json& j, BaseRing r) {
    if (!j.is_object()) fail("object: expected {\"dim\": n}, {\"free\": r, \"torsion\": [..]} or {\"orders\": [..]}");
    try {
        if (j.contains("dim")) {
            if (!r.isField()) fail("object: \"dim\" needs a field");
            const std::int64_t n = smallInt(j.at("dim"), "object.dim");
            if (n < 0) fail("object: negative dimension");
            return BaseObject::vectorSpace(r, int(n));
        }
        if (r.isField()) fail("object over a field must be {\"dim\": n}");
        if (j.contains("free")) {
            const std::int64_t f = smallInt(j.at("free"), "object.free");
            if (f < 0) fail("object: negative free rank");
            std::vector<Int> t;
            if (j.contains("torsion"))
                for (const auto& v : j.at("torsion")) t.push_back(intFromJson(v));
            return BaseObject::group(int(f), t);
        }
        if (j.contains("orders")) {
            std::vector<Int> o;
            for (const auto& v : j.at("orders")) o.push_back(intFromJson(v));
            return BaseObject::group(o);
        }
    } catch (const FormatError&) {
        throw;
    } catch (const ValidationError& e) {
        fail(std::string("object: ") + e.what());
    }
    fail("object: expected {\"dim\": n}, {\"free\": r, \"torsion\": [..]} or {\"orders\": [..]}");
}

Json toJson(const TwoObject& x) {
    Json j;
    j["top"] = toJson(x.top());
    j["bottom"] = toJson(x.bottom());
    j["d"] = toJson(x.d.m);
    return j;
}

Json toJson(const TwoMorphism& u) {
    Json j;
    j["src"] = toJson(u.src);
    j["tgt"] = toJson(u.tgt);
    j["u1"] = toJson(u.u1.m);
    j["u0"] = toJson(u.u0.m);
    return j;
}

Json toJson(const TwoCell& c) {
    Json j;
    j["from"] = toJson(c.from);
    j["to"] = toJson(c.to);
    j["a"] = toJson(c.a.m);
    return j;
}

Json toJson(const ComplexSequence& s) { return Writer(Workspace{}).complex(s); }

bool sameSequence(const ComplexSequence& a, const ComplexSequence& b) {
    return a.lo == b.lo && a.objects == b.objects && a.maps == b.maps && a.cells == b.cells;
}

const TwoObject& Workspace::object(const std::string& name) const { return lookup(objects, name, "object"); }
const TwoMorphism& Workspace::morphism(const std::string& name) const { return lookup(morphisms, name, "morphism"); }
const TwoCell& Workspace::cell(const std::string& name) const { return lookup(cells, name, "cell"); }
const ComplexSequence& Workspace::complex(const std::string& name) const {
    return lookup(complexes, name, "complex");
}

bool operator==(const Workspace& a, const Workspace& b) {
    if (!(a.ring == b.ring && a.objects == b.objects && a.morphisms == b.morphisms && a.cells == b.cells))
        return false;
    if (a.complexes.size() != b.complexes.size()) return false;
    for (auto i = a.complexes.begin(), k = b.complexes.begin(); i != a.complexes.end(); ++i, ++k)
        if (i->first != k->first || !sameSequence(i->second, k->second)) return false;
    return true;
}

Workspace parseWorkspace(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(e.what());
    }
    if (!doc.is_object()) fail("workspace must be a JSON object");
    Workspace w;
    w.ring = ringFromJson(field(doc, "ring", "workspace"));
    Reader r(w);
    const auto section = [&](const char* key) {
        if (!doc.contains(key)) return Json::object();
        if (!doc.at(key).is_object()) fail(std::string(key) + ": expected an object");
        return doc.at(key);
    };
    // Entities may refer to entities named earlier in the same section.
    const Json objects = section("objects"), morphisms = section("morphisms"), cells = section("cells"),
               complexes = section("complexes");
    for (const auto& [name, j] : objects.items()) w.objects[name] = r.object(j, "object " + name);
    for (const auto& [name, j] : morphisms.items()) w.morphisms[name] = r.morphism(j, "morphism " + name);
    for (const auto& [name, j] : cells.items()) w.cells[name] = r.cell(j, "cell " + name);
    for (const auto& [name, j] : complexes.items()) w.complexes[name] = r.complex(j, "complex " + name);
    return w;
}

std::string serializeWorkspace(const Workspace& w) {
    Json doc;
    doc["ring"] = toJson(w.ring);
    doc["objects"] = Json::object();
    doc["morphisms"] = Json::object();
    doc["cells"] = Json::object();
    doc["complexes"] = Json::object();
    const Writer out(w);
    for (const auto& [name, x] : w.objects) doc["objects"][name] = toJson(x);
    for (const auto& [name, u] : w.morphisms) doc["morphisms"][name] = out.namedMorphism(u);
    for (const auto& [name, c] : w.cells) doc["cells"][name] = out.namedCell(c);
    for (const auto& [name, s] : w.complexes) doc["complexes"][name] = out.complex(s);
    return dumpPretty(doc);
}

Workspace loadWorkspace(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parseWorkspace(ss.str());
}

void saveWorkspace(const Workspace& w, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail("cannot write " + path);
    out << serializeWorkspace(w);
}

}  // namespace cx2
