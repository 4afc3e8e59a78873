#pragma once

#include "cx2/base.hpp"

#include <functional>
#include <set>
#include <vector>

// Element enumeration for finite base objects, independent of the SNF engine.
namespace oracle {

using cx2::BaseMorphism;
using cx2::BaseObject;
using cx2::Int;
using cx2::Mat;
using Elem = std::vector<Int>;

inline bool finite(const BaseObject& a) {
    for (const auto& o : a.ord)
        if (o == 0) return false;
    return true;
}

inline Int order(const BaseObject& a) {
    Int n = 1;
    for (const auto& o : a.ord) n *= o;
    return n;
}

inline std::vector<Elem> elements(const BaseObject& a) {
    std::vector<Elem> out{Elem{}};
    for (const auto& o : a.ord) {
        std::vector<Elem> next;
        for (const auto& e : out)
            for (Int v = 0; v < o; ++v) {
                Elem x = e;
                x.push_back(v);
                next.push_back(std::move(x));
            }
        out = std::move(next);
    }
    return out;
}

inline Elem apply(const BaseMorphism& f, const Elem& x) {
    Elem y(size_t(f.tgt.size()), Int(0));
    for (Eigen::Index i = 0; i < f.m.rows(); ++i) {
        Int s = 0;
        for (Eigen::Index j = 0; j < f.m.cols(); ++j) s += f.m(i, j) * x[size_t(j)];
        y[size_t(i)] = cx2::floorMod(s, f.tgt.ord[size_t(i)]);
    }
    return y;
}

inline bool isZeroElem(const Elem& x) {
    for (const auto& v : x)
        if (v != 0) return false;
    return true;
}

inline std::set<Elem> image(const BaseMorphism& f) {
    std::set<Elem> s;
    for (const auto& x : elements(f.src)) s.insert(apply(f, x));
    return s;
}

inline std::set<Elem> kernel(const BaseMorphism& f) {
    std::set<Elem> s;
    for (const auto& x : elements(f.src))
        if (isZeroElem(apply(f, x))) s.insert(x);
    return s;
}

inline bool injective(const BaseMorphism& f) { return kernel(f).size() == 1; }
inline bool surjective(const BaseMorphism& f) { return Int(image(f).size()) == order(f.tgt); }

// Joint injectivity of (f, g) on a common source.
inline bool jointlyInjective(const BaseMorphism& f, const BaseMorphism& g) {
    for (const auto& x : elements(f.src))
        if (!isZeroElem(x) && isZeroElem(apply(f, x)) && isZeroElem(apply(g, x))) return false;
    return true;
}

inline Elem add(const BaseObject& a, const Elem& x, const Elem& y) {
    Elem z(x.size(), Int(0));
    for (size_t i = 0; i < x.size(); ++i) z[i] = a.ord[i] == 0 ? Int(x[i] + y[i]) : cx2::floorMod(x[i] + y[i], a.ord[i]);
    return z;
}

// Square g u1 = u0 f with f: A1 -> A0, u1: A1 -> B1, u0: A0 -> B0, g: B1 -> B0.
struct Square {
    BaseMorphism f, u1, u0, g;
};

// Pairs (x, y) in A0 x B1 with u0 x = g y.
inline std::set<std::pair<Elem, Elem>> matchingPairs(const Square& s) {
    std::set<std::pair<Elem, Elem>> out;
    const auto ys = elements(s.g.src);
    for (const auto& x : elements(s.u0.src)) {
        const Elem ux = apply(s.u0, x);
        for (const auto& y : ys)
            if (apply(s.g, y) == ux) out.emplace(x, y);
    }
    return out;
}

inline std::set<std::pair<Elem, Elem>> boundaryPairs(const Square& s) {
    std::set<std::pair<Elem, Elem>> out;
    for (const auto& a : elements(s.f.src)) out.emplace(apply(s.f, a), apply(s.u1, a));
    return out;
}

// Every matching pair comes from A1.
inline bool matchingFromTop(const Square& s) { return matchingPairs(s) == boundaryPairs(s); }

// A1 -> A0 x_B0 B1 is bijective.
inline bool isPullback(const Square& s) { return jointlyInjective(s.f, s.u1) && matchingFromTop(s); }

// u0 and g jointly surjective onto B0.
inline bool jointlySurjective(const Square& s) {
    std::set<Elem> sums;
    const auto ys = elements(s.g.src);
    for (const auto& x : elements(s.u0.src)) {
        const Elem ux = apply(s.u0, x);
        for (const auto& y : ys) sums.insert(add(s.g.tgt, ux, apply(s.g, y)));
    }
    return Int(sums.size()) == order(s.g.tgt);
}

// A0 + B1 modulo the pairs from A1 maps bijectively onto B0.
inline bool isPushout(const Square& s) { return jointlySurjective(s) && matchingFromTop(s); }

}  // namespace oracle
