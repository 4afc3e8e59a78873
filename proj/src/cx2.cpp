#include "cx2/cx2.hpp"

#include "cx2/linsys.hpp"

namespace cx2 {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

BaseMorphism solved(const BaseMorphism& a, const BaseMorphism& b, const char* what) {
    auto x = solveBase(a, b);
    require(x.has_value(), std::string("no factorization: ") + what);
    return *x;
}

BaseMorphism lsolved(const BaseMorphism& a, const BaseMorphism& b, const char* what) {
    auto x = lsolveBase(a, b);
    require(x.has_value(), std::string("no factorization: ") + what);
    return *x;
}

BaseObject zeroOf(const BaseObject& a) { return BaseObject::zero(a.ring); }

// Block matrix morphism from a grid of base morphisms m[j][k]: S_k -> T_j.
BaseMorphism assembleBase(const std::vector<std::vector<BaseMorphism>>& m, const std::vector<BaseObject>& src,
                          const std::vector<BaseObject>& tgt, BaseRing r) {
    const BaseObject S = src.empty() ? BaseObject::zero(r) : directSum(src);
    const BaseObject T = tgt.empty() ? BaseObject::zero(r) : directSum(tgt);
    Mat M = zeros(T.size(), S.size());
    Eigen::Index ro = 0;
    for (size_t j = 0; j < tgt.size(); ++j) {
        Eigen::Index co = 0;
        for (size_t k = 0; k < src.size(); ++k) {
            const BaseMorphism& x = m[j][k];
            require(x.src == src[k] && x.tgt == tgt[j], "grid entry has the wrong shape");
            if (x.m.size()) M.block(ro, co, x.m.rows(), x.m.cols()) = x.m;
            co += src[k].size();
        }
        ro += tgt[j].size();
    }
    return BaseMorphism::trusted(S, T, M);
}

BaseMorphism blockOf(const BaseMorphism& f, const std::vector<BaseObject>& src, const std::vector<BaseObject>& tgt,
                     size_t j, size_t k) {
    Eigen::Index ro = 0, co = 0;
    for (size_t i = 0; i < j; ++i) ro += tgt[i].size();
    for (size_t i = 0; i < k; ++i) co += src[i].size();
    return BaseMorphism::trusted(src[k], tgt[j], f.m.block(ro, co, tgt[j].size(), src[k].size()));
}

std::vector<BaseObject> tops(const std::vector<TwoObject>& xs) {
    std::vector<BaseObject> r;
    for (const auto& x : xs) r.push_back(x.top());
    return r;
}

std::vector<BaseObject> bottoms(const std::vector<TwoObject>& xs) {
    std::vector<BaseObject> r;
    for (const auto& x : xs) r.push_back(x.bottom());
    return r;
}

}  // namespace

TwoObject TwoObject::zero(BaseRing r) {
    const BaseObject z = BaseObject::zero(r);
    return TwoObject(identity(z));
}

TwoObject TwoObject::discrete(const BaseObject& a) { return TwoObject(zeroMap(zeroOf(a), a)); }
TwoObject TwoObject::connected(const BaseObject& a) { return TwoObject(zeroMap(a, zeroOf(a))); }

TwoMorphism::TwoMorphism(TwoObject s, TwoObject t, BaseMorphism top, BaseMorphism bottom)
    : src(std::move(s)), tgt(std::move(t)), u1(std::move(top)), u0(std::move(bottom)) {
    require(u1.src == src.top() && u1.tgt == tgt.top(), "top component has the wrong shape");
    require(u0.src == src.bottom() && u0.tgt == tgt.bottom(), "bottom component has the wrong shape");
    require(tgt.d * u1 == u0 * src.d, "square does not commute");
}

TwoCell::TwoCell(TwoMorphism f, TwoMorphism t, BaseMorphism alpha)
    : from(std::move(f)), to(std::move(t)), a(std::move(alpha)) {
    require(from.src == to.src && from.tgt == to.tgt, "cell between non-parallel morphisms");
    require(a.src == from.src.bottom() && a.tgt == from.tgt.top(), "cell component has the wrong shape");
    require(from.u1 - to.u1 == a * from.src.d, "cell fails on the top component");
    require(from.u0 - to.u0 == from.tgt.d * a, "cell fails on the bottom component");
}

bool TwoCell::isLoop() const { return isZero2(from) && isZero2(to); }

TwoMorphism identity2(const TwoObject& x) { return {x, x, identity(x.top()), identity(x.bottom())}; }

TwoMorphism zero2(const TwoObject& x, const TwoObject& y) {
    return {x, y, zeroMap(x.top(), y.top()), zeroMap(x.bottom(), y.bottom())};
}

bool isZero2(const TwoMorphism& u) { return isZero(u.u1) && isZero(u.u0); }

TwoMorphism operator*(const TwoMorphism& v, const TwoMorphism& u) {
    require(u.tgt == v.src, "composition of non-composable morphisms");
    return {u.src, v.tgt, v.u1 * u.u1, v.u0 * u.u0};
}

TwoMorphism compose2(const TwoMorphism& a, const TwoMorphism& b) { return b * a; }

TwoMorphism operator+(const TwoMorphism& u, const TwoMorphism& v) {
    require(u.src == v.src && u.tgt == v.tgt, "sum of non-parallel morphisms");
    return {u.src, u.tgt, u.u1 + v.u1, u.u0 + v.u0};
}

TwoMorphism operator-(const TwoMorphism& u) { return {u.src, u.tgt, -u.u1, -u.u0}; }
TwoMorphism operator-(const TwoMorphism& u, const TwoMorphism& v) { return u + (-v); }

TwoCell identityCell(const TwoMorphism& u) { return {u, u, zeroMap(u.src.bottom(), u.tgt.top())}; }

TwoCell loop2(const TwoObject& x, const TwoObject& y, const BaseMorphism& a) {
    const TwoMorphism z = zero2(x, y);
    return {z, z, a};
}

TwoCell vcomp2(const TwoCell& c1, const TwoCell& c2) {
    require(c1.to == c2.from, "vertical composition of non-composable cells");
    return {c1.from, c2.to, c1.a + c2.a};
}

TwoCell inverse2(const TwoCell& c) { return {c.to, c.from, -c.a}; }

TwoCell whiskerPost(const TwoMorphism& v, const TwoCell& alpha) {
    return {v * alpha.from, v * alpha.to, v.u1 * alpha.a};
}

TwoCell whiskerPre(const TwoCell& alpha, const TwoMorphism& w) {
    return {alpha.from * w, alpha.to * w, alpha.a * w.u0};
}

TwoCell hcomp2(const TwoCell& beta, const TwoCell& alpha) {
    const BaseMorphism one = beta.to.u1 * alpha.a + beta.a * alpha.from.u0;
    const BaseMorphism two = beta.a * alpha.to.u0 + beta.from.u1 * alpha.a;
    require(one == two, "horizontal composition formulas disagree");
    return {beta.from * alpha.from, beta.to * alpha.to, one};
}

std::optional<TwoCell> cellBetween(const TwoMorphism& u, const TwoMorphism& v, const BaseMorphism& a) {
    try {
        return TwoCell(u, v, a);
    } catch (const ValidationError&) {
        return std::nullopt;
    }
}

TwoObject directSum2(const TwoObject& x, const TwoObject& y) { return TwoObject(blockDiag(x.d, y.d)); }

TwoObject directSum2(const std::vector<TwoObject>& parts, BaseRing r) {
    TwoObject s = TwoObject::zero(r);
    for (const auto& p : parts) s = directSum2(s, p);
    return s;
}

Biproduct2 biproduct2(const TwoObject& x, const TwoObject& y) {
    const TwoObject s = directSum2(x, y);
    const auto t = biproductBase(x.top(), y.top());
    const auto b = biproductBase(x.bottom(), y.bottom());
    return {s, {x, s, t.i1, b.i1}, {y, s, t.i2, b.i2}, {s, x, t.p1, b.p1}, {s, y, t.p2, b.p2}};
}

TwoMorphism copair2(const TwoMorphism& u, const TwoMorphism& v) {
    require(u.tgt == v.tgt, "copair needs a common target");
    return {directSum2(u.src, v.src), u.tgt, copair(u.u1, v.u1), copair(u.u0, v.u0)};
}

TwoMorphism pair2(const TwoMorphism& u, const TwoMorphism& v) {
    require(u.src == v.src, "pair needs a common source");
    return {u.src, directSum2(u.tgt, v.tgt), pair(u.u1, v.u1), pair(u.u0, v.u0)};
}

TwoMorphism matrixAssemble2(const Grid2& grid, const std::vector<TwoObject>& sources,
                            const std::vector<TwoObject>& targets, BaseRing ring) {
    require(grid.size() == targets.size(), "grid row count does not match the targets");
    std::vector<std::vector<BaseMorphism>> m1(targets.size()), m0(targets.size());
    for (size_t j = 0; j < targets.size(); ++j) {
        require(grid[j].size() == sources.size(), "grid column count does not match the sources");
        for (size_t k = 0; k < sources.size(); ++k) {
            require(grid[j][k].src == sources[k] && grid[j][k].tgt == targets[j], "grid entry has the wrong shape");
            m1[j].push_back(grid[j][k].u1);
            m0[j].push_back(grid[j][k].u0);
        }
    }
    return {directSum2(sources, ring), directSum2(targets, ring), assembleBase(m1, tops(sources), tops(targets), ring),
            assembleBase(m0, bottoms(sources), bottoms(targets), ring)};
}

Grid2 matrixOf2(const TwoMorphism& u, const std::vector<TwoObject>& sources, const std::vector<TwoObject>& targets) {
    require(u.src == directSum2(sources, u.src.ring()) && u.tgt == directSum2(targets, u.tgt.ring()),
            "morphism is not between the given biproducts");
    Grid2 g(targets.size());
    for (size_t j = 0; j < targets.size(); ++j)
        for (size_t k = 0; k < sources.size(); ++k)
            g[j].push_back({sources[k], targets[j], blockOf(u.u1, tops(sources), tops(targets), j, k),
                            blockOf(u.u0, bottoms(sources), bottoms(targets), j, k)});
    return g;
}

TwoMorphism injection2(const std::vector<TwoObject>& parts, size_t k) {
    const BaseRing r = parts.at(k).ring();
    Grid2 g(parts.size());
    for (size_t j = 0; j < parts.size(); ++j)
        g[j].push_back(j == k ? identity2(parts[j]) : zero2(parts[k], parts[j]));
    return matrixAssemble2(g, {parts[k]}, parts, r);
}

TwoMorphism projection2(const std::vector<TwoObject>& parts, size_t k) {
    const BaseRing r = parts.at(k).ring();
    Grid2 g(1);
    for (size_t j = 0; j < parts.size(); ++j) g[0].push_back(j == k ? identity2(parts[j]) : zero2(parts[j], parts[k]));
    return matrixAssemble2(g, parts, {parts[k]}, r);
}

Kernel2 kernel2(const TwoMorphism& u) {
    const TwoObject &f = u.src, &g = u.tgt;
    const BaseMorphism j = kernelBase(copair(u.u0, -g.d));
    const BaseObject& P = j.src;
    const BaseMorphism k = projection(f.bottom(), g.top(), 1) * j;
    const BaseMorphism kappa = projection(f.bottom(), g.top(), 2) * j;
    const BaseMorphism kp = solved(j, pair(f.d, u.u1), "kernel boundary");
    const TwoObject K(kp);
    const TwoMorphism kmor(K, f, identity(f.top()), k);
    return {K, kmor, TwoCell(u * kmor, zero2(K, g), kappa), j, u};
}

TwoMorphism kernelFactor(const Kernel2& K, const TwoMorphism& a, const TwoCell& alpha) {
    require(a.tgt == K.k.tgt, "rival does not land in the kernel's domain");
    require(alpha.from == K.u * a && isZero2(alpha.to), "rival cell is not u a => 0");
    const BaseMorphism p = solved(K.incl, pair(a.u0, alpha.a), "kernel rival");
    return {a.src, K.obj, a.u1, p};
}

Cokernel2 cokernel2(const TwoMorphism& u) {
    const TwoObject &f = u.src, &g = u.tgt;
    const BaseMorphism q = cokernelBase(pair(u.u1, -f.d));
    const BaseMorphism qB = q * injection(g.top(), f.bottom(), 1);
    const BaseMorphism zeta = q * injection(g.top(), f.bottom(), 2);
    const BaseMorphism qp = lsolved(q, copair(g.d, u.u0), "cokernel boundary");
    const TwoObject Q(qp);
    const TwoMorphism qmor(g, Q, qB, identity(g.bottom()));
    return {Q, qmor, TwoCell(qmor * u, zero2(f, Q), zeta), q, u};
}

TwoMorphism cokernelFactor(const Cokernel2& Q, const TwoMorphism& b, const TwoCell& beta) {
    require(b.src == Q.q.src, "rival does not start at the cokernel's codomain");
    require(beta.from == b * Q.u && isZero2(beta.to), "rival cell is not b u => 0");
    const BaseMorphism l = lsolved(Q.proj, copair(b.u1, beta.a), "cokernel rival");
    return {Q.obj, b.tgt, l, b.u0};
}

Root2 root2(const TwoCell& loop) {
    require(loop.isLoop(), "root of a cell that is not a loop");
    const TwoObject& f = loop.from.src;
    const BaseMorphism k = kernelBase(loop.a);
    const TwoObject R(solved(k, f.d, "root boundary"));
    return {R, TwoMorphism(R, f, identity(f.top()), k), k};
}

TwoMorphism rootFactor(const Root2& R, const TwoMorphism& a) {
    return {a.src, R.obj, a.u1, solved(R.k, a.u0, "root rival")};
}

Coroot2 coroot2(const TwoCell& loop) {
    require(loop.isLoop(), "coroot of a cell that is not a loop");
    const TwoObject& g = loop.from.tgt;
    const BaseMorphism q = cokernelBase(loop.a);
    const TwoObject R(lsolved(q, g.d, "coroot boundary"));
    return {R, TwoMorphism(g, R, q, identity(g.bottom())), q};
}

TwoMorphism corootFactor(const Coroot2& R, const TwoMorphism& b) {
    return {R.obj, b.tgt, lsolved(R.q, b.u1, "coroot rival"), b.u0};
}

Pip2 pip2(const TwoMorphism& u) {
    const BaseMorphism n = kernelBase(pair(-u.src.d, u.u1));
    const TwoObject P = TwoObject::discrete(n.src);
    return {P, loop2(P, u.src, n)};
}

TwoMorphism pipFactor(const Pip2& P, const TwoCell& beta) {
    require(beta.isLoop(), "pip rival is not a loop");
    const BaseMorphism b = solved(P.loop.a, beta.a, "pip rival");
    return {beta.from.src, P.obj, zeroMap(beta.from.src.top(), P.obj.top()), b};
}

Copip2 copip2(const TwoMorphism& u) {
    const BaseMorphism c = cokernelBase(copair(u.u0, u.tgt.d));
    const TwoObject C = TwoObject::connected(c.tgt);
    return {C, loop2(u.tgt, C, c)};
}

TwoMorphism copipFactor(const Copip2& P, const TwoCell& beta) {
    require(beta.isLoop(), "copip rival is not a loop");
    const BaseMorphism b = lsolved(P.loop.a, beta.a, "copip rival");
    return {P.obj, beta.from.tgt, b, zeroMap(P.obj.bottom(), beta.from.tgt.bottom())};
}

RelKernel2 relKernel2(const TwoMorphism& u, const TwoMorphism& y, const TwoCell& phi) {
    require(phi.from == y * u && isZero2(phi.to), "relative kernel needs a cell y u => 0");
    Kernel2 K = kernel2(u);
    const BaseMorphism pi = y.u1 * K.kappa.a - phi.a * K.k.u0;
    const TwoCell loop = loop2(K.obj, y.tgt, pi);
    Root2 R = root2(loop);
    const TwoMorphism k = K.k * R.r;
    const TwoCell kappa = whiskerPre(K.kappa, R.r);
    return {std::move(K), R, R.obj, k, kappa};
}

TwoMorphism relKernelFactor(const RelKernel2& K, const TwoMorphism& a, const TwoCell& alpha) {
    return rootFactor(K.root, kernelFactor(K.ker, a, alpha));
}

RelCokernel2 relCokernel2(const TwoMorphism& x, const TwoMorphism& u, const TwoCell& phi) {
    require(phi.from == u * x && isZero2(phi.to), "relative cokernel needs a cell u x => 0");
    Cokernel2 Q = cokernel2(u);
    const BaseMorphism pi = Q.q.u1 * phi.a - Q.zeta.a * x.u0;
    const TwoCell loop = loop2(x.src, Q.obj, pi);
    Coroot2 R = coroot2(loop);
    const TwoMorphism q = R.r * Q.q;
    const TwoCell zeta = whiskerPost(R.r, Q.zeta);
    return {std::move(Q), R, R.obj, q, zeta};
}

TwoMorphism relCokernelFactor(const RelCokernel2& Q, const TwoMorphism& b, const TwoCell& beta) {
    return corootFactor(Q.coroot, cokernelFactor(Q.coker, b, beta));
}

LoopSuspension loopSuspension(const TwoObject& x) {
    LoopSuspension s;
    s.kd = kernelBase(x.d);
    s.qd = cokernelBase(x.d);
    s.omega = TwoObject::discrete(s.kd.src);
    s.sigma = TwoObject::connected(s.qd.tgt);
    s.pi0 = TwoObject::discrete(s.qd.tgt);
    s.pi1 = TwoObject::connected(s.kd.src);
    s.omegaLoop = loop2(s.omega, x, s.kd);
    s.sigmaLoop = loop2(x, s.sigma, s.qd);
    s.eta = TwoMorphism(x, s.pi0, zeroMap(x.top(), s.pi0.top()), s.qd);
    s.eps = TwoMorphism(s.pi1, x, s.kd, zeroMap(s.pi1.bottom(), x.bottom()));
    return s;
}

TwoMorphism omegaMap(const TwoMorphism& u) {
    const BaseMorphism kx = kernelBase(u.src.d), ky = kernelBase(u.tgt.d);
    const TwoObject X = TwoObject::discrete(kx.src), Y = TwoObject::discrete(ky.src);
    return {X, Y, zeroMap(X.top(), Y.top()), solved(ky, u.u1 * kx, "loop functor")};
}

TwoMorphism sigmaMap(const TwoMorphism& u) {
    const BaseMorphism qx = cokernelBase(u.src.d), qy = cokernelBase(u.tgt.d);
    const TwoObject X = TwoObject::connected(qx.tgt), Y = TwoObject::connected(qy.tgt);
    return {X, Y, lsolved(qx, qy * u.u0, "suspension functor"), zeroMap(X.bottom(), Y.bottom())};
}

TwoMorphism pi0Map(const TwoMorphism& u) {
    const BaseMorphism qx = cokernelBase(u.src.d), qy = cokernelBase(u.tgt.d);
    const TwoObject X = TwoObject::discrete(qx.tgt), Y = TwoObject::discrete(qy.tgt);
    return {X, Y, zeroMap(X.top(), Y.top()), lsolved(qx, qy * u.u0, "pi0 functor")};
}

TwoMorphism pi1Map(const TwoMorphism& u) {
    const BaseMorphism kx = kernelBase(u.src.d), ky = kernelBase(u.tgt.d);
    const TwoObject X = TwoObject::connected(kx.src), Y = TwoObject::connected(ky.src);
    return {X, Y, solved(ky, u.u1 * kx, "pi1 functor"), zeroMap(X.bottom(), Y.bottom())};
}

BaseMorphism leftMap(const TwoMorphism& u) { return pair(-u.src.d, u.u1); }
BaseMorphism rightMap(const TwoMorphism& u) { return copair(u.u0, u.tgt.d); }

ArrowClassification classify2(const TwoMorphism& u) {
    const BaseMorphism m = leftMap(u), e = rightMap(u);
    ArrowClassification c;
    c.faithful = isMono(m);
    c.full = isExactBase(m, e);
    c.cofaithful = isEpi(e);
    c.fullyFaithful = c.faithful && c.full;
    c.fullyCofaithful = c.full && c.cofaithful;
    c.normalFaithful = lsolveBase(m, identity(m.src)).has_value();
    c.normalCofaithful = solveBase(e, identity(e.tgt)).has_value();
    c.normalFullyFaithful = c.full && c.normalFaithful;
    c.normalFullyCofaithful = c.full && c.normalCofaithful;
    c.equivalence = c.normalFullyFaithful && c.cofaithful;
    c.discreteSource = isMono(u.src.d);
    c.connectedSource = isEpi(u.src.d);
    c.splitSource = splitDataBase(u.src.d).has_value();
    return c;
}

std::optional<EquivalenceData> equivalenceData2(const TwoMorphism& u) {
    const BaseMorphism m = leftMap(u), e = rightMap(u);
    if (!isExactBase(m, e)) return std::nullopt;
    const auto r = lsolveBase(m, identity(m.src));
    const auto sp = solveBase(e, identity(e.tgt));
    if (!r || !sp) return std::nullopt;
    const BaseMorphism s = *sp - m * *r * *sp;
    const BaseObject &A0 = u.src.bottom(), &B1 = u.tgt.top();
    EquivalenceData d;
    d.eta = -(*r * injection(A0, B1, 1));
    d.v1 = *r * injection(A0, B1, 2);
    d.v0 = projection(A0, B1, 1) * s;
    d.epsilon = projection(A0, B1, 2) * s;
    for (const auto& [name, ok] : equivalenceEquations(u, d))
        require(ok, "equivalence data fails: " + name);
    d.inverse = TwoMorphism(u.tgt, u.src, d.v1, d.v0);
    d.unit = TwoCell(u * d.inverse, identity2(u.tgt), -d.epsilon);
    d.counit = TwoCell(d.inverse * u, identity2(u.src), -d.eta);
    return d;
}

std::vector<std::pair<std::string, bool>> equivalenceEquations(const TwoMorphism& u, const EquivalenceData& e) {
    const BaseMorphism &f = u.src.d, &g = u.tgt.d;
    const BaseMorphism &u1 = u.u1, &u0 = u.u0;
    const BaseMorphism &v1 = e.v1, &v0 = e.v0, &eps = e.epsilon, &eta = e.eta;
    return {
        {"g u1 = u0 f", g * u1 == u0 * f},
        {"f v1 = v0 g", f * v1 == v0 * g},
        {"eps u0 = u1 eta", eps * u0 == u1 * eta},
        {"eta v0 = v1 eps", eta * v0 == v1 * eps},
        {"eta f + v1 u1 = 1", eta * f + v1 * u1 == identity(f.src)},
        {"f eta + v0 u0 = 1", f * eta + v0 * u0 == identity(f.tgt)},
        {"eps g + u1 v1 = 1", eps * g + u1 * v1 == identity(g.src)},
        {"g eps + u0 v0 = 1", g * eps + u0 * v0 == identity(g.tgt)},
    };
}

TwoMorphism comparisonBar(const TwoMorphism& u) {
    const Kernel2 K = kernel2(u);
    const Cokernel2 C = cokernel2(K.k);
    const Copip2 P = copip2(u);
    const Root2 R = root2(P.loop);
    const TwoMorphism ut = rootFactor(R, u);
    return cokernelFactor(C, ut, TwoCell(ut * K.k, zero2(K.obj, R.obj), K.kappa.a));
}

TwoMorphism comparison(const TwoMorphism& u) {
    const Cokernel2 Q = cokernel2(u);
    const Kernel2 K = kernel2(Q.q);
    const Pip2 P = pip2(u);
    const Coroot2 R = coroot2(P.loop);
    const TwoMorphism uh = corootFactor(R, u);
    return kernelFactor(K, uh, TwoCell(Q.q * uh, zero2(R.obj, Q.obj), Q.zeta.a));
}

Factorization2 factor2(const TwoMorphism& u) {
    Factorization2 F;
    F.pip = pip2(u);
    F.coroot = coroot2(F.pip.loop);
    F.copip = copip2(u);
    F.root = root2(F.copip.loop);
    F.e = F.coroot.r;
    F.mhat = F.root.r;
    F.l = TwoMorphism(F.coroot.obj, F.root.obj, lsolved(F.coroot.q, u.u1, "factorization top"),
                      solved(F.root.k, u.u0, "factorization bottom"));
    F.witness = identityCell(u);
    require(F.mhat * F.l * F.e == u, "factorization does not recompose");
    const Kernel2 K = kernel2(u);
    const Cokernel2 C = cokernel2(K.k);
    F.ehat = C.q;
    F.mbar = cokernelFactor(C, u, K.kappa);
    F.mprime = corootFactor(F.coroot, u);
    return F;
}

OrthogonalityResult orthogonal2(const TwoMorphism& e, const TwoMorphism& m) {
    // e: x -> y, m: z -> w.
    const TwoObject &x = e.src, &y = e.tgt, &z = m.src, &w = m.tgt;
    const BaseRing ring = x.ring();
    OrthogonalityResult res;

    // Squares (a, b, psi: m a => b e).
    LinSys sq(ring);
    const int a1 = sq.unknown(x.top(), z.top()), a0 = sq.unknown(x.bottom(), z.bottom());
    const int b1 = sq.unknown(y.top(), w.top()), b0 = sq.unknown(y.bottom(), w.bottom());
    const int ps = sq.unknown(x.bottom(), w.top());
    sq.equation({{.var = a1, .left = z.d}, {.var = a0, .right = x.d, .negative = true}}, zeroMap(x.top(), z.bottom()));
    sq.equation({{.var = b1, .left = w.d}, {.var = b0, .right = y.d, .negative = true}}, zeroMap(y.top(), w.bottom()));
    sq.equation({{.var = a1, .left = m.u1},
                 {.var = b1, .right = e.u1, .negative = true},
                 {.var = ps, .right = x.d, .negative = true}},
                zeroMap(x.top(), w.top()));
    sq.equation({{.var = a0, .left = m.u0},
                 {.var = b0, .right = e.u0, .negative = true},
                 {.var = ps, .left = w.d, .negative = true}},
                zeroMap(x.bottom(), w.bottom()));

    res.existence = true;
    for (const auto& gen : sq.homogeneousGenerators()) {
        // Filler c: y -> z, mu: a => c e, nu: m c => b with m1 mu + nu e0 = psi.
        LinSys fl(ring);
        const int c1 = fl.unknown(y.top(), z.top()), c0 = fl.unknown(y.bottom(), z.bottom());
        const int mu = fl.unknown(x.bottom(), z.top()), nu = fl.unknown(y.bottom(), w.top());
        fl.equation({{.var = c1, .left = z.d}, {.var = c0, .right = y.d, .negative = true}}, zeroMap(y.top(), z.bottom()));
        fl.equation({{.var = c1, .right = e.u1}, {.var = mu, .right = x.d}}, gen[size_t(a1)]);
        fl.equation({{.var = c0, .right = e.u0}, {.var = mu, .left = z.d}}, gen[size_t(a0)]);
        fl.equation({{.var = c1, .left = m.u1}, {.var = nu, .right = y.d, .negative = true}}, gen[size_t(b1)]);
        fl.equation({{.var = c0, .left = m.u0}, {.var = nu, .left = w.d, .negative = true}}, gen[size_t(b0)]);
        fl.equation({{.var = mu, .left = m.u1}, {.var = nu, .right = e.u0}}, gen[size_t(ps)]);
        if (!fl.solve()) {
            res.existence = false;
            res.failure = "a square admits no filler";
            break;
        }
    }

    // Cells gamma: c => c with gamma e = 0 and m gamma = 0 must vanish.
    LinSys un(ring);
    const int g = un.unknown(y.bottom(), z.top());
    un.equation({{.var = g, .right = y.d}}, zeroMap(y.top(), z.top()));
    un.equation({{.var = g, .left = z.d}}, zeroMap(y.bottom(), z.bottom()));
    un.equation({{.var = g, .right = e.u0}}, zeroMap(x.bottom(), z.top()));
    un.equation({{.var = g, .left = m.u1}}, zeroMap(y.bottom(), w.top()));
    res.uniqueness = un.homogeneousTrivial();

    // Every (c, c', alpha, beta) with m alpha = beta e admits gamma.
    if (res.uniqueness) {
        LinSys pr(ring);
        const int c1 = pr.unknown(y.top(), z.top()), c0 = pr.unknown(y.bottom(), z.bottom());
        const int d1 = pr.unknown(y.top(), z.top()), d0 = pr.unknown(y.bottom(), z.bottom());
        const int al = pr.unknown(x.bottom(), z.top()), be = pr.unknown(y.bottom(), w.top());
        for (auto [t1, t0] : {std::pair{c1, c0}, std::pair{d1, d0}})
            pr.equation({{.var = t1, .left = z.d}, {.var = t0, .right = y.d, .negative = true}},
                        zeroMap(y.top(), z.bottom()));
        pr.equation({{.var = c1, .right = e.u1},
                     {.var = d1, .right = e.u1, .negative = true},
                     {.var = al, .right = x.d, .negative = true}},
                    zeroMap(x.top(), z.top()));
        pr.equation({{.var = c0, .right = e.u0},
                     {.var = d0, .right = e.u0, .negative = true},
                     {.var = al, .left = z.d, .negative = true}},
                    zeroMap(x.bottom(), z.bottom()));
        pr.equation({{.var = c1, .left = m.u1},
                     {.var = d1, .left = m.u1, .negative = true},
                     {.var = be, .right = y.d, .negative = true}},
                    zeroMap(y.top(), w.top()));
        pr.equation({{.var = c0, .left = m.u0},
                     {.var = d0, .left = m.u0, .negative = true},
                     {.var = be, .left = w.d, .negative = true}},
                    zeroMap(y.bottom(), w.bottom()));
        pr.equation({{.var = al, .left = m.u1}, {.var = be, .right = e.u0, .negative = true}},
                    zeroMap(x.bottom(), w.top()));
        for (const auto& gen : pr.homogeneousGenerators()) {
            LinSys gs(ring);
            const int gm = gs.unknown(y.bottom(), z.top());
            gs.equation({{.var = gm, .right = y.d}}, gen[size_t(c1)] - gen[size_t(d1)]);
            gs.equation({{.var = gm, .left = z.d}}, gen[size_t(c0)] - gen[size_t(d0)]);
            gs.equation({{.var = gm, .right = e.u0}}, gen[size_t(al)]);
            gs.equation({{.var = gm, .left = m.u1}}, gen[size_t(be)]);
            if (!gs.solve()) {
                res.uniqueness = false;
                res.failure = "a pair of cells admits no common preimage";
                break;
            }
        }
    } else {
        res.failure = "fillers are not unique";
    }
    res.holds = res.existence && res.uniqueness;
    return res;
}

std::string describe(const TwoObject& x) {
    return x.top().describe() + " -> " + x.bottom().describe() + " " + toString(x.d.m);
}

}  // namespace cx2
