#include "cx2/exactness.hpp"

#include "cx2/linsys.hpp"

namespace cx2 {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

void requireNull(const TwoCell& c, const TwoMorphism& from, const char* what) {
    require(c.from == from && isZero2(c.to), std::string("cell has the wrong shape: ") + what);
}

// Unknown component of a cell from => to, with its two defining equations.
int cellUnknown(LinSys& s, const TwoMorphism& from, const TwoMorphism& to) {
    const int n = s.unknown(from.src.bottom(), from.tgt.top());
    s.equation({{.var = n, .right = from.src.d}}, from.u1 - to.u1);
    s.equation({{.var = n, .left = from.tgt.d}}, from.u0 - to.u0);
    return n;
}

}  // namespace

KernelData kernelData(const Kernel2& K) { return {K.u, K.k, K.kappa}; }
CokernelData cokernelData(const Cokernel2& Q) { return {Q.u, Q.q, Q.zeta}; }

bool isKernelData(const KernelData& K) {
    return classify2(kernelFactor(kernel2(K.u), K.k, K.kappa)).equivalence;
}

bool isCokernelData(const CokernelData& Q) {
    return classify2(cokernelFactor(cokernel2(Q.u), Q.q, Q.zeta)).equivalence;
}

std::optional<Lift> liftKernel(const KernelData& K, const TwoMorphism& x, const TwoCell& theta) {
    requireNull(K.kappa, K.u * K.k, "kernel data");
    requireNull(theta, K.u * x, "lift");
    const TwoObject &X = x.src, &Ko = K.k.src, &A = K.u.src;
    LinSys s(X.ring());
    const int x1 = s.unknown(X.top(), Ko.top()), x0 = s.unknown(X.bottom(), Ko.bottom());
    const int c = s.unknown(X.bottom(), A.top());
    s.equation({{.var = x1, .left = Ko.d}, {.var = x0, .right = X.d, .negative = true}},
               zeroMap(X.top(), Ko.bottom()));
    s.equation({{.var = x1, .left = K.k.u1}, {.var = c, .right = X.d}}, x.u1);
    s.equation({{.var = x0, .left = K.k.u0}, {.var = c, .left = A.d}}, x.u0);
    s.equation({{.var = c, .left = K.u.u1}, {.var = x0, .left = K.kappa.a}}, theta.a);
    const auto r = s.solve();
    if (!r) return std::nullopt;
    TwoMorphism m(X, Ko, (*r)[size_t(x1)], (*r)[size_t(x0)]);
    TwoCell chi(x, K.k * m, (*r)[size_t(c)]);
    return Lift{std::move(m), std::move(chi)};
}

std::optional<Lift> descendCokernel(const CokernelData& Q, const TwoMorphism& y, const TwoCell& theta) {
    requireNull(Q.zeta, Q.q * Q.u, "cokernel data");
    requireNull(theta, y * Q.u, "descent");
    const TwoObject &Y = y.tgt, &Qo = Q.q.tgt, &B = Q.u.tgt;
    LinSys s(Y.ring());
    const int y1 = s.unknown(Qo.top(), Y.top()), y0 = s.unknown(Qo.bottom(), Y.bottom());
    const int c = s.unknown(B.bottom(), Y.top());
    s.equation({{.var = y1, .left = Y.d}, {.var = y0, .right = Qo.d, .negative = true}},
               zeroMap(Qo.top(), Y.bottom()));
    s.equation({{.var = y1, .right = Q.q.u1}, {.var = c, .right = B.d}}, y.u1);
    s.equation({{.var = y0, .right = Q.q.u0}, {.var = c, .left = Y.d}}, y.u0);
    s.equation({{.var = c, .right = Q.u.u0}, {.var = y1, .right = Q.zeta.a}}, theta.a);
    const auto r = s.solve();
    if (!r) return std::nullopt;
    TwoMorphism m(Qo, Y, (*r)[size_t(y1)], (*r)[size_t(y0)]);
    TwoCell chi(y, m * Q.q, (*r)[size_t(c)]);
    return Lift{std::move(m), std::move(chi)};
}

std::optional<TwoCell> liftNullCell(const KernelData& K, const TwoMorphism& xp, const TwoCell& theta) {
    requireNull(theta, K.k * xp, "null cell lift");
    const TwoMorphism z = zero2(xp.src, xp.tgt);
    LinSys s(xp.src.ring());
    const int n = cellUnknown(s, xp, z);
    s.equation({{.var = n, .left = K.k.u1}}, theta.a);
    const auto r = s.solve();
    if (!r) return std::nullopt;
    return TwoCell(xp, z, (*r)[size_t(n)]);
}

std::optional<TwoCell> descendNullCell(const CokernelData& Q, const TwoMorphism& yp, const TwoCell& theta) {
    requireNull(theta, yp * Q.q, "null cell descent");
    const TwoMorphism z = zero2(yp.src, yp.tgt);
    LinSys s(yp.src.ring());
    const int n = cellUnknown(s, yp, z);
    s.equation({{.var = n, .right = Q.q.u0}}, theta.a);
    const auto r = s.solve();
    if (!r) return std::nullopt;
    return TwoCell(yp, z, (*r)[size_t(n)]);
}

TwoCell adjacentLoop(const TwoMorphism& m1, const TwoCell& c1, const TwoMorphism& m3, const TwoCell& c2) {
    return vcomp2(whiskerPost(m3, inverse2(c1)), whiskerPre(c2, m1));
}

bool isCompatible(const TwoMorphism& t, const TwoMorphism& u, const TwoMorphism& v, const TwoCell& alpha,
                  const TwoCell& beta) {
    requireNull(alpha, u * t, "first cell");
    requireNull(beta, v * u, "second cell");
    return v.u1 * alpha.a == beta.a * t.u0;
}

ExactnessReport exactnessAt(const TwoMorphism& a, const TwoCell& alpha, const TwoMorphism& b) {
    requireNull(alpha, b * a, "exactness");
    ExactnessReport r;
    r.viaCokernel = classify2(cokernelFactor(cokernel2(a), b, alpha)).fullyFaithful;
    r.viaKernel = classify2(kernelFactor(kernel2(b), a, alpha)).fullyCofaithful;
    r.routesAgree = r.viaCokernel == r.viaKernel;
    r.exact = r.viaCokernel;
    return r;
}

bool exactAt(const TwoMorphism& a, const TwoCell& alpha, const TwoMorphism& b) {
    return exactnessAt(a, alpha, b).exact;
}

bool isExtension(const TwoMorphism& a, const TwoCell& alpha, const TwoMorphism& b) {
    requireNull(alpha, b * a, "extension");
    return classify2(kernelFactor(kernel2(b), a, alpha)).equivalence &&
           classify2(cokernelFactor(cokernel2(a), b, alpha)).equivalence;
}

HomologyResult homologyAt(const TwoMorphism& x, const TwoCell& phi, const TwoMorphism& a, const TwoCell& alpha,
                          const TwoMorphism& b, const TwoCell& psi, const TwoMorphism& y) {
    require(isCompatible(x, a, b, phi, alpha), "phi and alpha are not compatible");
    require(isCompatible(a, b, y, alpha, psi), "alpha and psi are not compatible");
    HomologyResult h{.kb = relKernel2(b, y, psi), .qa = relCokernel2(x, a, phi)};
    h.aprime = relKernelFactor(h.kb, a, alpha);
    h.phiPrime = TwoCell(h.aprime * x, zero2(x.src, h.kb.obj), phi.a);
    h.bprime = relCokernelFactor(h.qa, b, alpha);
    h.psiPrime = TwoCell(y * h.bprime, zero2(h.qa.obj, y.tgt), psi.a);
    h.coker = relCokernel2(x, h.aprime, h.phiPrime);
    h.ker = relKernel2(h.bprime, y, h.psiPrime);
    h.H = h.coker.obj;
    h.qprime = h.coker.q;
    h.zetaPrime = h.coker.zeta;
    const TwoMorphism t = h.qa.q * h.kb.k;
    h.kprime = relCokernelFactor(h.coker, t, TwoCell(t * h.aprime, zero2(a.src, h.qa.obj), h.qa.zeta.a));
    h.kappaPrime = TwoCell(h.bprime * h.kprime, zero2(h.H, b.tgt), h.kb.kappa.a);
    h.comparison = relKernelFactor(h.ker, h.kprime, h.kappaPrime);
    h.comparisonEquivalence = classify2(h.comparison).equivalence;
    return h;
}

bool relativeExactAt(const TwoMorphism& x, const TwoCell& phi, const TwoMorphism& a, const TwoCell& alpha,
                     const TwoMorphism& b, const TwoCell& psi, const TwoMorphism& y) {
    return isIso(homologyAt(x, phi, a, alpha, b, psi, y).H.d);
}

LoopExactness loopExactness(const TwoCell& pi) {
    require(pi.isLoop(), "loop exactness needs a loop");
    const TwoObject &A = pi.from.src, &B = pi.from.tgt;
    const TwoObject Z = TwoObject::zero(A.ring());
    LoopExactness r;
    r.sequence = exactAt(zero2(A, Z), pi, zero2(Z, B));
    const LoopSuspension la = loopSuspension(A), lb = loopSuspension(B);
    const auto top = lsolveBase(la.qd, pi.a);
    const auto bottom = solveBase(lb.kd, pi.a);
    require(top && bottom, "loop does not factor");
    r.suspension = classify2(TwoMorphism(la.sigma, B, *top, zeroMap(la.sigma.bottom(), B.bottom()))).fullyFaithful;
    r.loop = classify2(TwoMorphism(A, lb.omega, zeroMap(A.top(), lb.omega.top()), *bottom)).fullyCofaithful;
    r.agree = r.sequence == r.suspension && r.suspension == r.loop;
    return r;
}

void ComplexSequence::validate() const {
    require(!objects.empty() && maps.size() + 1 == objects.size(), "sequence needs one map per gap");
    require(cells.size() + 1 == std::max<size_t>(maps.size(), 1), "sequence needs one cell per adjacent pair");
    for (size_t i = 0; i < maps.size(); ++i)
        require(maps[i].src == objects[i] && maps[i].tgt == objects[i + 1], "map " + std::to_string(i) + " misplaced");
    for (size_t i = 0; i < cells.size(); ++i) requireNull(cells[i], maps[i + 1] * maps[i], "sequence cell");
}

ComplexSequence ComplexSequence::padded() const {
    const TwoObject Z = TwoObject::zero(objects.front().ring());
    ComplexSequence s;
    s.lo = lo - 1;
    s.objects.push_back(Z);
    s.objects.insert(s.objects.end(), objects.begin(), objects.end());
    s.objects.push_back(Z);
    const TwoMorphism first = zero2(Z, objects.front()), last = zero2(objects.back(), Z);
    s.maps.push_back(first);
    s.maps.insert(s.maps.end(), maps.begin(), maps.end());
    s.maps.push_back(last);
    s.cells.push_back(identityCell(zero2(Z, s.objects[2])));
    s.cells.insert(s.cells.end(), cells.begin(), cells.end());
    s.cells.push_back(identityCell(zero2(s.objects[s.objects.size() - 3], Z)));
    if (maps.empty()) s.cells = {identityCell(zero2(Z, Z))};
    return s;
}

std::vector<bool> ComplexSequence::exactness() const {
    std::vector<bool> r;
    for (size_t i = 0; i < cells.size(); ++i) r.push_back(exactAt(maps[i], cells[i], maps[i + 1]));
    return r;
}

std::vector<TwoCell> ComplexSequence::loops() const {
    std::vector<TwoCell> r;
    for (size_t i = 0; i + 1 < cells.size(); ++i) r.push_back(adjacentLoop(maps[i], cells[i], maps[i + 2], cells[i + 1]));
    return r;
}

ComplexSequence makeSequence(const std::vector<TwoMorphism>& maps, const std::vector<TwoCell>& cells, int lo) {
    require(!maps.empty(), "sequence without maps");
    ComplexSequence s;
    s.lo = lo;
    s.objects.push_back(maps.front().src);
    for (const auto& m : maps) s.objects.push_back(m.tgt);
    s.maps = maps;
    s.cells = cells;
    s.validate();
    return s;
}

bool PuppeResult::allExact() const {
    for (bool e : exact)
        if (!e) return false;
    return true;
}

bool PuppeResult::identitiesHold() const {
    for (const auto& [name, ok] : identities)
        if (!ok) return false;
    return true;
}

PuppeResult puppe(const TwoMorphism& u) {
    const TwoObject &A = u.src, &B = u.tgt;
    const TwoObject Z = TwoObject::zero(A.ring());
    PuppeResult r;
    r.ker = kernel2(u);
    r.coker = cokernel2(u);
    const TwoObject &K = r.ker.obj, &Q = r.coker.obj;
    const LoopSuspension lk = loopSuspension(K), la = loopSuspension(A), lb = loopSuspension(B),
                         lq = loopSuspension(Q);
    const TwoMorphism &k = r.ker.k, &q = r.coker.q;
    const TwoMorphism ok = omegaMap(k), ou = omegaMap(u), su = sigmaMap(u), sq = sigmaMap(q);

    r.d = kernelFactor(r.ker, zero2(lb.omega, A), inverse2(lb.omegaLoop));
    r.delta = identityCell(k * r.d);
    r.epsilon = TwoCell(r.d * ou, zero2(la.omega, K), -la.omegaLoop.a);
    r.dPrime = cokernelFactor(r.coker, zero2(B, la.sigma), la.sigmaLoop);
    r.deltaPrime = identityCell(r.dPrime * q);
    r.epsilonPrime = TwoCell(su * r.dPrime, zero2(Q, lb.sigma), lb.sigmaLoop.a);
    const TwoCell omegaKappa = identityCell(ou * ok), sigmaZeta = identityCell(sq * su);
    require(isZero2(ou * ok) && isZero2(sq * su), "loop functor does not kill the kernel cell");

    r.sequence = makeSequence(
        {zero2(Z, lk.omega), ok, ou, r.d, k, u, q, r.dPrime, su, sq, zero2(lq.sigma, Z)},
        {identityCell(zero2(Z, la.omega)), omegaKappa, r.epsilon, r.delta, r.ker.kappa, r.coker.zeta, r.deltaPrime,
         r.epsilonPrime, sigmaZeta, identityCell(zero2(lb.sigma, Z))});
    r.labels = {"0", "Pf", "Omega A", "Omega B", "Kf", "A", "B", "Qf", "Sigma A", "Sigma B", "Rf", "0"};

    r.mu = adjacentLoop(k, r.ker.kappa, q, r.coker.zeta);
    r.identities = {
        {"eps Omega k . d Omega kappa^-1 = omega_K^-1",
         adjacentLoop(ok, omegaKappa, r.d, r.epsilon) == inverse2(lk.omegaLoop)},
        {"delta Omega f . k eps^-1 = omega_A", adjacentLoop(ou, r.epsilon, k, r.delta) == la.omegaLoop},
        {"kappa d . f delta^-1 = omega_B^-1", adjacentLoop(r.d, r.delta, u, r.ker.kappa) == inverse2(lb.omegaLoop)},
        {"zeta k . q kappa^-1 = mu_f", r.mu.a == r.coker.zeta.a * k.u0 - q.u1 * r.ker.kappa.a},
        {"delta' f . d' zeta^-1 = sigma_A^-1",
         adjacentLoop(u, r.coker.zeta, r.dPrime, r.deltaPrime) == inverse2(la.sigmaLoop)},
        {"eps' q . Sigma f delta'^-1 = sigma_B", adjacentLoop(q, r.deltaPrime, su, r.epsilonPrime) == lb.sigmaLoop},
        {"Sigma zeta d' . Sigma q eps'^-1 = sigma_Q^-1",
         adjacentLoop(r.dPrime, r.epsilonPrime, sq, sigmaZeta) == inverse2(lq.sigmaLoop)},
    };
    r.exact = r.sequence.exactness();
    r.muExact = loopExactness(r.mu);
    return r;
}

}  // namespace cx2
