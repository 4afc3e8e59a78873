#include "cx2/diagrams.hpp"

namespace cx2 {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

// Sample (b, theta) with b: B -> B' and theta: g' b f => 0.
std::pair<TwoMorphism, TwoCell> sampleMiddle(Rng& rng, const TwoMorphism& f, const TwoMorphism& gp) {
    const TwoObject &A = f.src, &B = f.tgt, &Bp = gp.src, &Cp = gp.tgt;
    LinSys s(A.ring());
    const int b1 = s.unknown(B.top(), Bp.top()), b0 = s.unknown(B.bottom(), Bp.bottom());
    const int t = s.unknown(A.bottom(), Cp.top());
    s.equation({{.var = b1, .left = Bp.d}, {.var = b0, .right = B.d, .negative = true}}, zeroMap(B.top(), Bp.bottom()));
    s.equation({{.var = b1, .left = gp.u1, .right = f.u1}, {.var = t, .right = A.d, .negative = true}},
               zeroMap(A.top(), Cp.top()));
    s.equation({{.var = b0, .left = gp.u0, .right = f.u0}, {.var = t, .left = Cp.d, .negative = true}},
               zeroMap(A.bottom(), Cp.bottom()));
    const auto r = s.sample(rng);
    require(r.has_value(), "no middle map");
    const TwoMorphism b(B, Bp, (*r)[size_t(b1)], (*r)[size_t(b0)]);
    return {b, TwoCell(gp * b * f, zero2(A, Cp), (*r)[size_t(t)])};
}

TwoCell nullCell(const TwoCell& c) { return TwoCell(c.from, zero2(c.from.src, c.from.tgt), c.a); }

BaseMorphism upperTriangular(const BaseMorphism& a, const BaseMorphism& t, const BaseMorphism& c) {
    return copair(pair(a, zeroMap(a.src, c.tgt)), pair(t, c));
}

Extension twist(Rng& rng, Extension e, const Bounds& bounds) {
    if (uniform(rng, 0, 1)) {
        const TwoMorphism t = randomEquivalence(rng, e.g.tgt, bounds);
        e.g = t * e.g;
        e.eta = whiskerPost(t, e.eta);
        e.eta = TwoCell(e.eta.from, zero2(e.f.src, e.g.tgt), e.eta.a);
    }
    if (uniform(rng, 0, 1)) {
        const TwoMorphism t = randomEquivalence(rng, e.f.src, bounds);
        const auto data = equivalenceData2(t);
        if (data) {
            e.f = e.f * data->inverse;
            e.eta = whiskerPre(e.eta, data->inverse);
            e.eta = TwoCell(e.eta.from, zero2(e.f.src, e.g.tgt), e.eta.a);
        }
    }
    return e;
}

}  // namespace

TwoMorphism nonSplitSquare() {
    const BaseObject Z = BaseObject::group(1, {}), Z2 = BaseObject::group(0, {2});
    const BaseObject O = BaseObject::zero(BaseRing::integers());
    const TwoObject f(BaseMorphism(Z, Z, Mat::Constant(1, 1, Int(2))));
    return {f, TwoObject::discrete(Z2), zeroMap(Z, O), BaseMorphism(Z, Z2, Mat::Constant(1, 1, Int(1)))};
}

TwoMorphism nonSplitContrast() {
    const BaseRing F2 = BaseRing::field(2);
    const BaseObject V = BaseObject::vectorSpace(F2, 1), O = BaseObject::zero(F2);
    return {TwoObject(identity(V)), TwoObject::discrete(O), zeroMap(V, O), zeroMap(V, O)};
}

Extension biproductExtension(const TwoObject& a, const TwoObject& c) {
    const Biproduct2 s = biproduct2(a, c);
    return {s.i1, s.p2, identityCell(s.p2 * s.i1)};
}

Extension randomExtension(Rng& rng, BaseRing ring, const Bounds& bounds) {
    if (uniform(rng, 0, 4) == 0)
        return twist(rng, biproductExtension(randomTwoObject(rng, ring, bounds), randomTwoObject(rng, ring, bounds)),
                     bounds);
    const TwoObject B = randomTwoObject(rng, ring, bounds), X = randomTwoObject(rng, ring, bounds);
    const Kernel2 K = kernel2(randomSquareBetween(rng, B, X));
    const Cokernel2 Q = cokernel2(K.k);
    return twist(rng, {K.k, Q.q, Q.zeta}, bounds);
}

SnakeDiagram snakeFromMiddle(const Extension& top, const Extension& bottom, const TwoMorphism& b,
                             const TwoCell& theta) {
    SnakeDiagram D;
    D.f = top.f;
    D.g = top.g;
    D.eta = top.eta;
    D.fp = bottom.f;
    D.gp = bottom.g;
    D.etap = bottom.eta;
    D.b = b;
    const auto A = liftKernel({D.gp, D.fp, D.etap}, b * D.f, theta);
    const auto C = descendCokernel({D.f, D.g, D.eta}, D.gp * b, theta);
    require(A && C, "rows do not induce the side columns");
    D.a = A->map;
    D.phi = A->cell;
    D.c = C->map;
    D.psi = inverse2(C->cell);
    return D;
}

SnakeDiagram randomSnakeDiagram(Rng& rng, BaseRing ring, SnakeRows rows, const Bounds& bounds) {
    Extension top, bottom;
    switch (rows) {
    case SnakeRows::Generalized: {
        const Cokernel2 Q = cokernel2(randomSquare(rng, ring, bounds));
        top = {Q.u, Q.q, Q.zeta};
        const Kernel2 K = kernel2(randomSquare(rng, ring, bounds));
        bottom = {K.k, K.u, K.kappa};
        break;
    }
    case SnakeRows::Extensions:
        top = randomExtension(rng, ring, bounds);
        bottom = randomExtension(rng, ring, bounds);
        break;
    case SnakeRows::Biproducts:
        top = biproductExtension(randomTwoObject(rng, ring, bounds), randomTwoObject(rng, ring, bounds));
        bottom = biproductExtension(randomTwoObject(rng, ring, bounds), randomTwoObject(rng, ring, bounds));
        break;
    }
    const auto [b, theta] = sampleMiddle(rng, top.f, bottom.g);
    return snakeFromMiddle(top, bottom, b, theta);
}

SnakeDiagram discreteSnake(Rng& rng, BaseRing field, int maxDim) {
    const Bounds bounds{.maxGens = maxDim, .maxEntry = int(field.p), .finite = false};
    auto space = [&] { return TwoObject::discrete(randomObject(rng, field, bounds)); };
    const Extension top = biproductExtension(space(), space());
    const Extension bottom = biproductExtension(space(), space());
    const auto [b, theta] = sampleMiddle(rng, top.f, bottom.g);
    return snakeFromMiddle(top, bottom, b, theta);
}

Extension directSumExtension(const Extension& x, const Extension& y) {
    auto sum = [](const TwoMorphism& u, const TwoMorphism& v) {
        return TwoMorphism(directSum2(u.src, v.src), directSum2(u.tgt, v.tgt), blockDiag(u.u1, v.u1),
                           blockDiag(u.u0, v.u0));
    };
    const TwoMorphism f = sum(x.f, y.f), g = sum(x.g, y.g);
    return {f, g, TwoCell(g * f, zero2(f.src, g.tgt), blockDiag(x.eta.a, y.eta.a))};
}

ComplexSequence randomComplex(Rng& rng, BaseRing ring, int length, const Bounds& bounds, int lo) {
    require(length >= 1, "a complex needs an object");
    ComplexSequence s;
    s.lo = lo;
    for (int i = 0; i < length; ++i) s.objects.push_back(randomTwoObject(rng, ring, bounds));
    for (int i = 0; i + 1 < length; ++i) {
        const TwoObject X = s.objects[size_t(i)], Y = s.objects[size_t(i + 1)];
        if (i == 0) {
            s.maps.push_back(randomSquareBetween(rng, X, Y));
            continue;
        }
        const TwoMorphism prev = s.maps.back();
        const TwoObject W = prev.src;
        LinSys sys(ring);
        const int a1 = sys.unknown(X.top(), Y.top()), a0 = sys.unknown(X.bottom(), Y.bottom());
        const int c = sys.unknown(W.bottom(), Y.top());
        sys.equation({{.var = a1, .left = Y.d}, {.var = a0, .right = X.d, .negative = true}}, zeroMap(X.top(), Y.bottom()));
        sys.equation({{.var = a1, .right = prev.u1}, {.var = c, .right = W.d, .negative = true}}, zeroMap(W.top(), Y.top()));
        sys.equation({{.var = a0, .right = prev.u0}, {.var = c, .left = Y.d, .negative = true}},
                     zeroMap(W.bottom(), Y.bottom()));
        if (i >= 2) {
            const TwoCell alpha = s.cells.back();
            const TwoMorphism t = s.maps[size_t(i - 2)];
            sys.equation({{.var = a1, .right = alpha.a}, {.var = c, .right = t.u0, .negative = true}},
                         zeroMap(t.src.bottom(), Y.top()));
        }
        const auto r = sys.sample(rng);
        require(r.has_value(), "no differential");
        s.maps.emplace_back(X, Y, (*r)[size_t(a1)], (*r)[size_t(a0)]);
        s.cells.emplace_back(s.maps.back() * prev, zero2(W, Y), (*r)[size_t(c)]);
    }
    s.validate();
    return s;
}

ComplexExtension splitComplexExtension(Rng& rng, const ComplexSequence& A, const ComplexSequence& C) {
    require(A.lo == C.lo && A.objects.size() == C.objects.size(), "complexes on different windows");
    const size_t m = A.objects.size();
    const BaseRing ring = A.objects.front().ring();
    // t_n: C_n -> A_{n+1} and tau_n: C_n.bottom -> A_{n+2}.top.
    LinSys sys(ring);
    std::vector<int> t1, t0, tau;
    for (size_t n = 0; n + 1 < m; ++n) {
        const TwoObject &Cn = C.objects[n], &An1 = A.objects[n + 1];
        t1.push_back(sys.unknown(Cn.top(), An1.top()));
        t0.push_back(sys.unknown(Cn.bottom(), An1.bottom()));
        sys.equation({{.var = t1[n], .left = An1.d}, {.var = t0[n], .right = Cn.d, .negative = true}},
                     zeroMap(Cn.top(), An1.bottom()));
    }
    for (size_t n = 0; n + 2 < m; ++n) {
        const TwoObject &Cn = C.objects[n], &An2 = A.objects[n + 2];
        tau.push_back(sys.unknown(Cn.bottom(), An2.top()));
        sys.equation({{.var = t1[n], .left = A.maps[n + 1].u1},
                      {.var = t1[n + 1], .right = C.maps[n].u1},
                      {.var = tau[n], .right = Cn.d, .negative = true}},
                     zeroMap(Cn.top(), An2.top()));
        sys.equation({{.var = t0[n], .left = A.maps[n + 1].u0},
                      {.var = t0[n + 1], .right = C.maps[n].u0},
                      {.var = tau[n], .left = An2.d, .negative = true}},
                     zeroMap(Cn.bottom(), An2.bottom()));
    }
    for (size_t n = 1; n + 2 < m; ++n) {
        sys.equation({{.var = tau[n - 1], .left = A.maps[n + 1].u1},
                      {.var = t1[n + 1], .right = C.cells[n - 1].a},
                      {.var = t0[n - 1], .left = A.cells[n].a, .negative = true},
                      {.var = tau[n], .right = C.maps[n - 1].u0, .negative = true}},
                     zeroMap(C.objects[n - 1].bottom(), A.objects[n + 2].top()));
    }
    const auto r = sys.sample(rng);
    require(r.has_value(), "no twisted differential");
    auto val = [&](int v) { return (*r)[size_t(v)]; };

    ComplexExtension E;
    E.A = A;
    E.C = C;
    E.B.lo = A.lo;
    std::vector<Biproduct2> bp;
    for (size_t n = 0; n < m; ++n) {
        bp.push_back(biproduct2(A.objects[n], C.objects[n]));
        E.B.objects.push_back(bp[n].sum);
    }
    for (size_t n = 0; n + 1 < m; ++n)
        E.B.maps.emplace_back(E.B.objects[n], E.B.objects[n + 1], upperTriangular(A.maps[n].u1, val(t1[n]), C.maps[n].u1),
                              upperTriangular(A.maps[n].u0, val(t0[n]), C.maps[n].u0));
    for (size_t n = 0; n + 2 < m; ++n)
        E.B.cells.emplace_back(E.B.maps[n + 1] * E.B.maps[n], zero2(E.B.objects[n], E.B.objects[n + 2]),
                               upperTriangular(A.cells[n].a, val(tau[n]), C.cells[n].a));
    for (size_t n = 0; n < m; ++n) {
        E.f.maps.push_back(bp[n].i1);
        E.g.maps.push_back(bp[n].p2);
        E.omega.push_back(identityCell(bp[n].p2 * bp[n].i1));
    }
    for (size_t n = 0; n + 1 < m; ++n) {
        E.f.cells.emplace_back(E.B.maps[n] * bp[n].i1, bp[n + 1].i1 * A.maps[n], zeroMap(A.objects[n].bottom(), E.B.objects[n + 1].top()));
        E.g.cells.emplace_back(C.maps[n] * bp[n].p2, bp[n + 1].p2 * E.B.maps[n], zeroMap(E.B.objects[n].bottom(), C.objects[n + 1].top()));
    }
    E.B.validate();
    return E;
}

ComplexExtension randomComplexExtension(Rng& rng, BaseRing ring, int length, const Bounds& bounds) {
    const ComplexSequence A = randomComplex(rng, ring, length, bounds);
    const ComplexSequence C = randomComplex(rng, ring, length, bounds);
    return splitComplexExtension(rng, A, C);
}

Grid3x3 biproduct3x3(const Extension& top, const Extension& bottom) {
    const Extension mid = directSumExtension(top, bottom);
    const Biproduct2 A = biproduct2(top.f.src, bottom.f.src), B = biproduct2(top.f.tgt, bottom.f.tgt),
                     C = biproduct2(top.g.tgt, bottom.g.tgt);
    Grid3x3 G;
    G.f[0] = top.f, G.f[1] = mid.f, G.f[2] = bottom.f;
    G.g[0] = top.g, G.g[1] = mid.g, G.g[2] = bottom.g;
    G.eta[0] = top.eta, G.eta[1] = mid.eta, G.eta[2] = bottom.eta;
    G.a[0] = A.i1, G.a[1] = A.p2, G.b[0] = B.i1, G.b[1] = B.p2, G.c[0] = C.i1, G.c[1] = C.p2;
    G.alpha = identityCell(A.p2 * A.i1);
    G.beta = identityCell(B.p2 * B.i1);
    G.gamma = identityCell(C.p2 * C.i1);
    for (int i = 0; i < 2; ++i) {
        G.phi[i] = TwoCell(G.b[i] * G.f[i], G.f[i + 1] * G.a[i], zeroMap(G.f[i].src.bottom(), G.f[i + 1].tgt.top()));
        G.psi[i] = TwoCell(G.c[i] * G.g[i], G.g[i + 1] * G.b[i], zeroMap(G.g[i].src.bottom(), G.g[i + 1].tgt.top()));
    }
    return G;
}

Grid3x3 random3x3(Rng& rng, BaseRing ring, const Bounds& bounds) {
    Bounds small = bounds;
    small.maxGens = std::max(1, bounds.maxGens - 1);
    for (int attempt = 0; attempt < 20; ++attempt) {
        const Extension top = randomExtension(rng, ring, bounds), bottom = randomExtension(rng, ring, small);
        const auto [b, theta] = sampleMiddle(rng, top.f, bottom.g);
        const SnakeDiagram D = snakeFromMiddle(top, bottom, b, theta);
        if (!classify2(D.a).cofaithful || !classify2(D.b).cofaithful || !classify2(D.c).cofaithful) continue;
        const SnakeResult S = snake(D, std::nullopt, {}, true);
        Grid3x3 G;
        G.f[0] = S.fbar, G.f[1] = D.f, G.f[2] = D.fp;
        G.g[0] = S.gbar, G.g[1] = D.g, G.g[2] = D.gp;
        G.eta[0] = S.etabar, G.eta[1] = D.eta, G.eta[2] = D.etap;
        G.a[0] = S.cols.ka.k, G.a[1] = D.a, G.alpha = S.cols.ka.kappa;
        G.b[0] = S.cols.kb.k, G.b[1] = D.b, G.beta = S.cols.kb.kappa;
        G.c[0] = S.cols.kc.k, G.c[1] = D.c, G.gamma = S.cols.kc.kappa;
        G.phi[0] = inverse2(S.phibar), G.phi[1] = D.phi;
        G.psi[0] = inverse2(S.psibar), G.psi[1] = D.psi;
        return G;
    }
    return biproduct3x3(randomExtension(rng, ring, bounds), randomExtension(rng, ring, bounds));
}

Grid3x3 brokenCorner(const Grid3x3& G) {
    Grid3x3 H = G;
    const TwoObject Z = TwoObject::zero(G.f[0].src.ring());
    H.f[0] = zero2(Z, G.f[0].tgt);
    H.a[0] = zero2(Z, G.a[0].tgt);
    H.eta[0] = identityCell(H.g[0] * H.f[0]);
    H.alpha = identityCell(H.a[1] * H.a[0]);
    H.phi[0] = identityCell(H.b[0] * H.f[0]);
    return H;
}

SnakeDiagram shortFiveEquivalences(Rng& rng, BaseRing ring, const Bounds& bounds) {
    const Extension top = randomExtension(rng, ring, bounds);
    const TwoMorphism &f = top.f, &g = top.g;
    const auto sA = equivalenceData2(randomEquivalence(rng, f.src, bounds));
    const TwoMorphism t = randomEquivalence(rng, g.tgt, bounds);
    const TwoMorphism eB = randomEquivalence(rng, f.tgt, bounds);
    const auto dB = equivalenceData2(eB);
    require(sA && dB, "equivalence without inverse data");
    const TwoMorphism& v = sA->inverse;
    Extension bottom;
    bottom.f = eB * f * v;
    bottom.g = t * g * dB->inverse;
    bottom.eta = nullCell(vcomp2(whiskerPost(t * g, whiskerPre(dB->counit, f * v)), whiskerPost(t, whiskerPre(top.eta, v))));
    const TwoCell theta = nullCell(vcomp2(whiskerPost(t * g, whiskerPre(dB->counit, f)), whiskerPost(t, top.eta)));
    return snakeFromMiddle(top, bottom, eB, theta);
}

SnakeDiagram shortFiveInclusion(Rng& rng, BaseRing ring, const Bounds& bounds) {
    const Extension x = randomExtension(rng, ring, bounds), y = randomExtension(rng, ring, bounds);
    const Extension sum = directSumExtension(x, y);
    const TwoMorphism b = biproduct2(x.f.tgt, y.f.tgt).i1;
    const TwoMorphism m = sum.g * b * x.f;
    const TwoCell theta(m, zero2(m.src, m.tgt), pair(x.eta.a, zeroMap(x.f.src.bottom(), y.g.tgt.top())));
    return snakeFromMiddle(x, sum, b, theta);
}

SnakeDiagram shortFiveProjection(Rng& rng, BaseRing ring, const Bounds& bounds) {
    const Extension x = randomExtension(rng, ring, bounds), y = randomExtension(rng, ring, bounds);
    const Extension sum = directSumExtension(x, y);
    const TwoMorphism b = biproduct2(x.f.tgt, y.f.tgt).p1;
    const TwoMorphism m = x.g * b * sum.f;
    const TwoCell theta(m, zero2(m.src, m.tgt), copair(x.eta.a, zeroMap(y.f.src.bottom(), x.g.tgt.top())));
    return snakeFromMiddle(sum, x, b, theta);
}

ComplexSequence splicedRelativeExact(Rng& rng, BaseRing ring, int length, const Bounds& bounds) {
    require(length >= 2, "a spliced window needs two objects");
    // Extensions I_i -f_i-> A_i -q_i-> I_{i+1}; the first has I_1 = 0, the last I_{m+1} = 0.
    std::vector<TwoMorphism> f, q;
    std::vector<TwoCell> zeta;
    const TwoObject X = randomTwoObject(rng, ring, bounds);
    const TwoObject Z = TwoObject::zero(ring);
    f.push_back(zero2(Z, X));
    q.push_back(identity2(X));
    zeta.push_back(identityCell(q.back() * f.back()));
    for (int i = 1; i + 1 < length; ++i) {
        const TwoObject& I = q.back().tgt;
        const TwoObject Y = randomTwoObject(rng, ring, bounds);
        const TwoMorphism fi = pair2(identity2(I), randomSquareBetween(rng, I, Y));
        const Cokernel2 Q = cokernel2(fi);
        const Extension e = twist(rng, {fi, Q.q, Q.zeta}, bounds);
        f.push_back(e.f);
        q.push_back(e.g);
        zeta.push_back(e.eta);
        if (!(e.f.src == I)) {
            // twist replaced the source; keep the splice strict
            f.back() = fi;
            q.back() = Q.q;
            zeta.back() = Q.zeta;
        }
    }
    const TwoObject& I = q.back().tgt;
    f.push_back(identity2(I));
    q.push_back(zero2(I, Z));
    zeta.push_back(identityCell(q.back() * f.back()));

    std::vector<TwoMorphism> maps;
    std::vector<TwoCell> cells;
    for (int i = 0; i + 1 < length; ++i) maps.push_back(f[size_t(i + 1)] * q[size_t(i)]);
    for (int i = 0; i + 2 < length; ++i)
        cells.push_back(nullCell(whiskerPost(f[size_t(i + 2)], whiskerPre(zeta[size_t(i + 1)], q[size_t(i)]))));
    return makeSequence(maps, cells, 0);
}

}  // namespace cx2
