"""Additive functions, determinants and their representability oracles.

Every enumeration here is paired with an independent oracle: additive
functions against simplicial maps into the group nerve, determinants
against maps into the 2-group nerve, Segal determinants against
bisimplicial maps through the (p+q <= 3)-truncation.  The bijections are
constructed explicitly and verified, never assumed.
"""

from . import simplicial as sp
from . import catalg as ca
from . import nerves as nv
from .groups import FiniteGroup


class DeterminantError(Exception):
    pass


# -- simplicial map front ends ----------------------------------------------


def hom_sset(x_sset, y_sset, budget=None):
    """All simplicial maps at d = X.dim (Y extended coskeletally when
    flagged and shallower), in deterministic order."""
    maps = sp.enumerate_maps(x_sset, y_sset, upto=x_sset.dim, budget=budget)
    return sorted(maps, key=lambda f: f.key())


def _post_delta(i, phi):
    """delta_i . phi on digit strings."""
    return "".join(str(v if v < i else v + 1) for v in (int(c) for c in phi))


def _post_sigma(j, phi):
    return "".join(str(v if v <= j else v - 1) for v in (int(c) for c in phi))


class EnrichedHom:
    """The reduced enriched hom: level n = maps (X x Delta^n)/(* x Delta^n) -> Y.

    Materialized as a TruncatedSSet (attribute .sset) whose level-n ids
    index the stored maps (.maps[n])."""

    def __init__(self, x_sset, y_sset, n_max, budget=None):
        if not x_sset.is_reduced():
            raise DeterminantError("enriched hom needs a reduced source")
        self.x = x_sset
        self.y = y_sset
        d = x_sset.dim
        quots = []
        reps = []
        pair_of = []
        pid_of = []
        for n in range(n_max + 1):
            dn = sp.standard_simplex(n, d)
            prod = sp.product(x_sset, dn)
            pairs = {}
            byxy = {}
            for k in range(d + 1):
                for a in x_sset.level(k):
                    for b in dn.level(k):
                        pid = "(%s|%s)" % (a, b)
                        pairs[pid] = (a, b)
                        byxy[(a, b)] = pid
            sub = sp.sq0_subcomplex(x_sset)
            ids = [["(%s|%s)" % (a, b) for a in sub[k] for b in dn.level(k)]
                   for k in range(d + 1)]
            q = sp.quotient_by_subcomplex(prod, ids)
            # the quotient relabels every collapsed cell to the least id
            # of its level; record the full projection map
            subsets = [set(l) for l in ids]
            proj = {}
            for k in range(d + 1):
                collapsed = min(subsets[k]) if subsets[k] else None
                for a in x_sset.level(k):
                    for b in dn.level(k):
                        pid = byxy[(a, b)]
                        proj[(k, pid)] = collapsed if pid in subsets[k] else pid
            quots.append(q)
            reps.append(proj)
            pair_of.append(pairs)
            pid_of.append(byxy)
        self.quots = quots
        self._proj = reps
        self._pairs = pair_of
        self._byxy = pid_of

        # cross maps Q_{n-1} -> Q_n induced by X x delta_i, and
        # Q_{n+1} -> Q_n by X x sigma_j
        self.maps = []
        keys = []
        for n in range(n_max + 1):
            found = sp.enumerate_maps(quots[n], y_sset, upto=d, budget=budget)
            found.sort(key=lambda f: f.key())
            self.maps.append(found)
            keys.append({f.key(): i for i, f in enumerate(found)})

        levels = [["h%d_%d" % (n, i) for i in range(len(self.maps[n]))]
                  for n in range(n_max + 1)]
        face = {}
        degen = {}
        for n in range(1, n_max + 1):
            for i in range(n + 1):
                cross = self._cross_map(n - 1, n, lambda phi: _post_delta(i, phi))
                mp = {}
                for idx, f in enumerate(self.maps[n]):
                    comps = {k: {qid: f(k, cross[(k, qid)])
                                 for qid in quots[n - 1].level(k)}
                             for k in range(d + 1)}
                    key = tuple(tuple(sorted(comps[k].items()))
                                for k in sorted(comps))
                    mp["h%d_%d" % (n, idx)] = "h%d_%d" % (n - 1, keys[n - 1][key])
                face[(n, i)] = mp
        for n in range(n_max):
            for j in range(n + 1):
                cross = self._cross_map(n + 1, n, lambda phi: _post_sigma(j, phi))
                mp = {}
                for idx, f in enumerate(self.maps[n]):
                    comps = {k: {qid: f(k, cross[(k, qid)])
                                 for qid in quots[n + 1].level(k)}
                             for k in range(d + 1)}
                    key = tuple(tuple(sorted(comps[k].items()))
                                for k in sorted(comps))
                    mp["h%d_%d" % (n, idx)] = "h%d_%d" % (n + 1, keys[n + 1][key])
                degen[(n, j)] = mp
        self.sset = sp.TruncatedSSet(n_max, levels, face, degen)

    def _cross_map(self, n_from, n_to, post):
        """Map Q_{n_from} -> Q_{n_to}: class of (x, phi) -> class of
        (x, post(phi))."""
        d = self.x.dim
        out = {}
        for k in range(d + 1):
            for qid in self.quots[n_from].level(k):
                a, b = self._pairs[n_from][qid]
                target_pid = self._byxy[n_to][(a, post(b))]
                out[(k, qid)] = self._proj[n_to][(k, target_pid)]
        return out


def enriched_hom0(x_sset, y_sset, n_max, budget=None):
    """The enriched hom as a truncated simplicial set."""
    return EnrichedHom(x_sset, y_sset, n_max, budget=budget).sset


# -- additive functions ------------------------------------------------------


def enumerate_additive(x_sset, group, budget=None):
    """All D : level 1 -> H with D(degenerate loop) = e and
    D(d1 a) = D(d2 a) * D(d0 a) for every 2-simplex a."""
    if not x_sset.is_reduced():
        raise DeterminantError("additive functions need a reduced complex")
    if x_sset.dim < 2:
        raise sp.DimensionOutOfRange("additive functions need dim >= 2")
    star = x_sset.level(0)[0]
    loop0 = x_sset.s(0, 0, star)
    edges = list(x_sset.level(1))
    cons = [(x_sset.d(2, 1, a), x_sset.d(2, 2, a), x_sset.d(2, 0, a))
            for a in x_sset.level(2)]
    cap = budget if budget is not None else sp.enumeration_budget()
    counter = [0]
    out = []
    assign = {loop0: group.unit}
    frees = [e for e in edges if e != loop0]

    def touched(e, partial_set):
        cs = []
        for (m, l, r) in cons:
            if e in (m, l, r) and all(t in partial_set or t == e for t in (m, l, r)):
                cs.append((m, l, r))
        return cs

    def rec(i):
        counter[0] += 1
        if counter[0] > cap:
            raise sp.SearchBudgetExceeded("additive enumeration exceeded cap")
        if i == len(frees):
            out.append(dict(assign))
            return
        e = frees[i]
        for val in group.elements:
            assign[e] = val
            ok = True
            for (m, l, r) in cons:
                if m in assign and l in assign and r in assign:
                    if assign[m] != group.mul(assign[l], assign[r]):
                        ok = False
                        break
            if ok:
                rec(i + 1)
            del assign[e]

    rec(0)
    return out


def additive_vs_hom(x_sset, group, budget=None):
    """The explicit bijection between additive functions and maps into
    the group nerve; returns (adds, homs, ok)."""
    h_grpd = ca.one_object_groupoid(group)
    ner = nv.nerve_category(h_grpd, max(2, x_sset.dim))
    adds = enumerate_additive(x_sset, group, budget=budget)
    homs = hom_sset(x_sset, ner, budget=budget)
    code = {e: ner._chain1[h_grpd.ident["*"]] if e == group.unit else None
            for e in group.elements}
    mor_code = {e: "m%s" % (e,) for e in group.elements}
    # build f^D from D and check it lands in the enumerated set
    hom_keys = {f.key() for f in homs}
    images = set()
    ok = len(adds) == len(homs)
    for d_fun in adds:
        comps = {0: {x_sset.level(0)[0]: "*"}}
        comps[1] = {e: ner._chain1[mor_code[d_fun[e]]] for e in x_sset.level(1)}
        complete = True
        for k in range(2, x_sset.dim + 1):
            idxk = {ner.faces(k, s): s for s in ner.level(k)}
            comps[k] = {}
            for a in x_sset.level(k):
                want = tuple(comps[k - 1][x_sset.d(k, i, a)] for i in range(k + 1))
                if want not in idxk:
                    complete = False
                    break
                comps[k][a] = idxk[want]
            if not complete:
                break
        if not complete:
            ok = False
            continue
        key = tuple(tuple(sorted(comps[k].items())) for k in sorted(comps))
        if key not in hom_keys or key in images:
            ok = False
        images.add(key)
    if images != hom_keys:
        ok = False
    return adds, homs, ok


# -- determinants into a 2-group ---------------------------------------------


def enumerate_determinants(x_sset, g, budget=None):
    """All (D, T) on a reduced complex of dim >= 3: D on edges valued in
    objects, T on triangles valued in morphisms, subject to the
    compatibility, unit and associativity conditions.  The degeneracy
    forcing (T(s_i A) = s_i(D A)) is re-derived, then asserted."""
    if not x_sset.is_reduced():
        raise DeterminantError("determinants need a reduced complex")
    if x_sset.dim < 3:
        raise sp.DimensionOutOfRange("determinants need dim >= 3")
    c = g.base
    star = x_sset.level(0)[0]
    loop0 = x_sset.s(0, 0, star)
    loop1 = x_sset.s(1, 0, loop0)
    l_unit_inv = g.mor_inverse(g.l(g.unit))
    edges = [e for e in x_sset.level(1) if e != loop0]
    tris = [t for t in x_sset.level(2) if t != loop1]
    tetra = list(x_sset.level(3))
    cap = budget if budget is not None else sp.enumeration_budget()
    counter = [0]

    hom_by_src = {}
    for f in c.morphisms:
        hom_by_src.setdefault(c.src[f], []).append(f)
    for v in hom_by_src.values():
        v.sort()

    results = []
    d_assign = {loop0: g.unit}
    t_assign = {loop1: l_unit_inv}

    tri_faces = {t: x_sset.faces(2, t) for t in x_sset.level(2)}
    tet_faces = {h: x_sset.faces(3, h) for h in tetra}
    # A_01 = d2 d2 eta and A_23 = d0 d0 eta for the associativity square
    tet_corner = {h: (x_sset.d(2, 2, x_sset.d(3, 2, h)),
                      x_sset.d(2, 0, x_sset.d(3, 1, h))) for h in tetra}

    def tick():
        counter[0] += 1
        if counter[0] > cap:
            raise sp.SearchBudgetExceeded("determinant enumeration exceeded cap")

    def assoc_ok(h):
        xi0, xi1, xi2, xi3 = (t_assign.get(tet_faces[h][0]),
                              t_assign.get(tet_faces[h][1]),
                              t_assign.get(tet_faces[h][2]),
                              t_assign.get(tet_faces[h][3]))
        if None in (xi0, xi1, xi2, xi3):
            return True
        a01, a23 = tet_corner[h]
        x01, x23 = d_assign[a01], d_assign[a23]
        x12 = d_assign[x_sset.d(2, 0, tet_faces[h][3])]
        lhs = c.comp(xi2, c.comp(g.tm(c.id_of(x01), xi0), g.a(x01, x12, x23)))
        rhs = c.comp(xi1, g.tm(xi3, c.id_of(x23)))
        return lhs == rhs

    def t_candidates(t):
        f0, f1, f2 = tri_faces[t]
        srcobj = g.t(d_assign[f2], d_assign[f0])
        return [m for m in hom_by_src.get(srcobj, [])
                if c.tgt[m] == d_assign[f1]]

    def rec_t(i):
        tick()
        if i == len(tris):
            results.append((dict(d_assign), dict(t_assign)))
            return
        t = tris[i]
        for m in t_candidates(t):
            t_assign[t] = m
            if all(assoc_ok(h) for h in tetra):
                rec_t(i + 1)
            del t_assign[t]

    def rec_d(i):
        tick()
        if i == len(edges):
            rec_t(0)
            return
        e = edges[i]
        for obj in c.objects:
            d_assign[e] = obj
            rec_d(i + 1)
            del d_assign[e]

    rec_d(0)
    # assert the degeneracy forcing on every result
    for d_fun, t_fun in results:
        for e in x_sset.level(1):
            s0e, s1e = x_sset.s(1, 0, e), x_sset.s(1, 1, e)
            if t_fun[s0e] != g.mor_inverse(g.l(d_fun[e])):
                raise DeterminantError("degeneracy forcing fails (s0)")
            if t_fun[s1e] != g.mor_inverse(g.r(d_fun[e])):
                raise DeterminantError("degeneracy forcing fails (s1)")
    return results


def determinants_vs_hom(x_sset, g, budget=None):
    """The bijection f -> (f_1, f_2) between maps into the 2-group nerve
    and determinants; returns (dets, homs, ok)."""
    ng = nv.nerve_2group(g, max(3, x_sset.dim))
    dets = enumerate_determinants(x_sset, g, budget=budget)
    homs = hom_sset(x_sset, ng, budget=budget)
    struct2 = ng._struct[2]
    ok = len(dets) == len(homs)
    seen = set()
    det_keys = {(tuple(sorted(d.items())), tuple(sorted(t.items())))
                for d, t in dets}
    for f in homs:
        d_fun = {e: ng._struct[1][f(1, e)][1] for e in x_sset.level(1)}
        t_fun = {t: struct2[f(2, t)][3] for t in x_sset.level(2)}
        key = (tuple(sorted(d_fun.items())), tuple(sorted(t_fun.items())))
        if key in seen or key not in det_keys:
            ok = False
        seen.add(key)
    if seen != det_keys:
        ok = False
    return dets, homs, ok


def det_morphisms(x_sset, g, det1, det2, budget=None):
    """All H : level 1 -> morphisms with H(A) : D(A) -> D'(A),
    H(degenerate loop) = id and naturality over every triangle."""
    c = g.base
    d1, t1 = det1
    d2, t2 = det2
    star = x_sset.level(0)[0]
    loop0 = x_sset.s(0, 0, star)
    edges = [e for e in x_sset.level(1) if e != loop0]
    assign = {loop0: c.id_of(g.unit)}
    out = []
    cap = budget if budget is not None else sp.enumeration_budget()
    counter = [0]

    def nat_ok(t):
        f0, f1, f2 = x_sset.faces(2, t)
        h0, h1, h2 = assign.get(f0), assign.get(f1), assign.get(f2)
        if None in (h0, h1, h2):
            return True
        lhs = c.comp(h1, t1[t])
        rhs = c.comp(t2[t], g.tm(h2, h0))
        return lhs == rhs

    tris = list(x_sset.level(2))

    def rec(i):
        counter[0] += 1
        if counter[0] > cap:
            raise sp.SearchBudgetExceeded("determinant morphism search exceeded cap")
        if i == len(edges):
            out.append(dict(assign))
            return
        e = edges[i]
        for h in c.hom(d1[e], d2[e]):
            assign[e] = h
            if all(nat_ok(t) for t in tris):
                rec(i + 1)
            del assign[e]

    rec(0)
    return out


def pi0_det(x_sset, g, dets=None, budget=None):
    """Classes of determinants under the exists-a-morphism relation;
    symmetry and transitivity are verified, not assumed."""
    if dets is None:
        dets = enumerate_determinants(x_sset, g, budget=budget)
    n = len(dets)
    related = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            related[i][j] = bool(det_morphisms(x_sset, g, dets[i], dets[j],
                                               budget=budget))
    for i in range(n):
        if not related[i][i]:
            raise DeterminantError("determinant relation not reflexive")
        for j in range(n):
            if related[i][j] != related[j][i]:
                raise DeterminantError("determinant relation not symmetric")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if related[i][j] and related[j][k] and not related[i][k]:
                    raise DeterminantError("determinant relation not transitive")
    classes = []
    seen = set()
    for i in range(n):
        if i in seen:
            continue
        cls = [j for j in range(n) if related[i][j]]
        seen.update(cls)
        classes.append(cls)
    return classes, dets


# -- the homotopy group comparison -------------------------------------------


def grho_check(g, budget=None):
    """pi_0(G) = pi_1(N G) via the identity on objects and
    pi_1(G) = pi_2(N G) via phi -> phi . l_unit^{-1}; both verified as
    group isomorphisms by table comparison."""
    errs = []
    c = g.base
    ng = nv.nerve_2group(g, 4)
    p1, cls1 = sp.pi_with_classes(ng, 1)
    p0 = ca.pi0_two_group(g)
    obj_id = {x: _obj_simplex_id(x) for x in c.objects}
    mapping = {r: cls1[obj_id[r]] for r in p0.elements}
    if len(set(mapping.values())) != len(p1.elements) or \
            set(mapping.values()) != set(p1.elements):
        errs.append("pi0 -> pi1(N) is not bijective")
    else:
        for a in p0.elements:
            for b in p0.elements:
                if mapping[p0.mul(a, b)] != p1.mul(mapping[a], mapping[b]):
                    errs.append("pi0 -> pi1(N) is not a homomorphism")
                    break
    p2, cls2 = sp.pi_with_classes(ng, 2)
    pi1g = ca.pi1_two_group(g)
    l_inv = g.mor_inverse(g.l(g.unit))
    amap = {}
    for phi in pi1g.elements:
        st = nv._q2_struct(g, g.unit, g.unit, c.comp(phi, l_inv))
        amap[phi] = cls2[nv._struct_id(st)]
    if len(set(amap.values())) != len(p2.elements) or \
            set(amap.values()) != set(p2.elements):
        errs.append("alpha1 : pi1 -> pi2(N) is not bijective")
    else:
        for a in pi1g.elements:
            for b in pi1g.elements:
                if amap[pi1g.mul(a, b)] != p2.mul(amap[a], amap[b]):
                    errs.append("alpha1 is not a homomorphism")
                    break
    if not p2.is_abelian():
        errs.append("pi2 of a 2-group nerve must be abelian")
    return errs, (p0, p1, p2, pi1g)


def _obj_simplex_id(x):
    return nv._struct_id(("q1", x))


# -- Segal determinants --------------------------------------------------------


def enumerate_segal_determinants(x_bx, g, budget=None):
    """All (D, T): D a simplicial map X_{*,1} -> N(sG) (2-truncated), T on
    X_{0,2} valued in morphisms, with the compatibility, unit,
    naturality and associativity conditions."""
    c = g.base
    nsg = nv.nerve_category(g.base, 2)
    col1 = x_bx.column(1)
    col1_t = sp.TruncatedSSet(min(col1.dim, 2),
                              [col1.level(k) for k in range(min(col1.dim, 2) + 1)],
                              {k: v for k, v in col1.face.items() if k[0] <= 2},
                              {k: v for k, v in col1.degen.items() if k[0] <= 1},
                              base=col1.base)
    d_maps = sp.enumerate_maps(col1_t, nsg, upto=col1_t.dim, budget=budget)
    d_maps.sort(key=lambda f: f.key())
    star = x_bx.level(0, 0)[0]
    v_deg1 = x_bx.vdegen[(0, 0, 0)][star]
    v_deg2 = x_bx.vdegen[(0, 1, 0)][v_deg1]
    l_unit_inv = g.mor_inverse(g.l(g.unit))

    hom_by_src = {}
    for f in c.morphisms:
        hom_by_src.setdefault(c.src[f], []).append(f)
    for v in hom_by_src.values():
        v.sort()

    results = []
    x02 = list(x_bx.level(0, 2))
    x12 = list(x_bx.level(1, 2)) if (1, 2) in x_bx.region else []
    x03 = list(x_bx.level(0, 3)) if (0, 3) in x_bx.region else []
    cap = budget if budget is not None else sp.enumeration_budget()
    counter = [0]

    for dm in d_maps:
        if dm(0, v_deg1) != g.unit:
            continue

        def dobj(e):
            return dm(0, e)

        def dmor(e1):
            return nsg._mor1[dm(1, e1)]

        t_assign = {}
        tv2 = v_deg2
        ok0 = True
        # forced unit on the doubly degenerate 2-cell
        forced = {tv2: l_unit_inv}

        def t_candidates(xi):
            srcobj = g.t(dobj(x_bx.dv(0, 2, 2, xi)), dobj(x_bx.dv(0, 2, 0, xi)))
            tgtobj = dobj(x_bx.dv(0, 2, 1, xi))
            return [m for m in hom_by_src.get(srcobj, [])
                    if c.tgt[m] == tgtobj]

        def nat_ok(z):
            xi_top = x_bx.dh(1, 2, 1, z)
            xi_bot = x_bx.dh(1, 2, 0, z)
            if xi_top not in t_assign or xi_bot not in t_assign:
                return True
            h2 = dmor(x_bx.dv(1, 2, 2, z))
            h0 = dmor(x_bx.dv(1, 2, 0, z))
            h1 = dmor(x_bx.dv(1, 2, 1, z))
            lhs = c.comp(h1, t_assign[xi_top])
            rhs = c.comp(t_assign[xi_bot], g.tm(h2, h0))
            return lhs == rhs

        def assoc_ok(h):
            f0 = x_bx.dv(0, 3, 0, h)
            f1 = x_bx.dv(0, 3, 1, h)
            f2 = x_bx.dv(0, 3, 2, h)
            f3 = x_bx.dv(0, 3, 3, h)
            if any(f not in t_assign for f in (f0, f1, f2, f3)):
                return True
            a01 = x_bx.dv(0, 2, 2, f3)
            a12 = x_bx.dv(0, 2, 0, f3)
            a23 = x_bx.dv(0, 2, 0, f1)
            x01, x12v, x23 = dobj(a01), dobj(a12), dobj(a23)
            lhs = c.comp(t_assign[f2],
                         c.comp(g.tm(c.id_of(x01), t_assign[f0]),
                                g.a(x01, x12v, x23)))
            rhs = c.comp(t_assign[f1], g.tm(t_assign[f3], c.id_of(x23)))
            return lhs == rhs

        frees = [xi for xi in x02 if xi != tv2]
        if forced[tv2] not in t_candidates(tv2):
            continue
        t_assign.update(forced)

        def rec(i):
            counter[0] += 1
            if counter[0] > cap:
                raise sp.SearchBudgetExceeded("segal determinant search exceeded cap")
            if i == len(frees):
                results.append((dm, dict(t_assign)))
                return
            xi = frees[i]
            for m in t_candidates(xi):
                t_assign[xi] = m
                if all(nat_ok(z) for z in x12) and all(assoc_ok(h) for h in x03):
                    rec(i + 1)
                del t_assign[xi]

        rec(0)
    return results


def segal_determinants_vs_hom(x_bx, g, ns=None, budget=None):
    """Maps of (p+q <= 3)-truncations against Segal determinants via
    F -> (F_{*,1}, F_{0,2}); returns (dets, maps, ok)."""
    if ns is None:
        ns = nv.segal_nerve(g, 2, 3)
    mu = nv.mu3_region() & set(x_bx.region) & set(ns.region)
    maps = nv.enumerate_bimaps(x_bx, ns, region=mu, budget=budget)
    dets = enumerate_segal_determinants(x_bx, g, budget=budget)
    lv = ns._segal_levels
    ok = len(maps) == len(dets)
    det_keys = set()
    for dm, t_fun in dets:
        # canonical key: the chain assignment on columns p <= 2 plus T
        parts = []
        for p in (0, 1, 2):
            if p in dm.components:
                parts.append(tuple(sorted(dm.components[p].items())))
        parts.append(tuple(sorted(t_fun.items())))
        det_keys.add(tuple(parts))
    seen = set()
    for f in maps:
        parts = []
        for p in (0, 1, 2):
            if (p, 1) not in mu:
                continue
            sub = {}
            for e in x_bx.level(p, 1):
                img = f[(p, 1)][e]
                if p == 0:
                    st = lv.sid[1][img]
                    sub[e] = st[1]
                elif p == 1:
                    st, fam, _ = lv.mor[1][img]
                    sub[e] = nv._chain_id((fam[(0, 1)],))
                else:
                    m1, m2 = img[1:-1].split(";")
                    f1 = lv.mor[1][m1][1][(0, 1)]
                    f2 = lv.mor[1][m2][1][(0, 1)]
                    sub[e] = nv._chain_id((f1, f2))
            parts.append(tuple(sorted(sub.items())))
        tmap = {}
        for xi in x_bx.level(0, 2):
            st = lv.sid[2][f[(0, 2)][xi]]
            tmap[xi] = st[3]
        parts.append(tuple(sorted(tmap.items())))
        key = tuple(parts)
        if key in seen or key not in det_keys:
            ok = False
        seen.add(key)
    if seen != det_keys:
        ok = False
    return dets, maps, ok


def segal_det_morphisms(x_bx, g, det1, det2, budget=None):
    """Homotopies X_{*,1} x Delta^1 -> N(sG) from det1 to det2, pointed
    and compatible with the T data over X_{1,2}."""
    c = g.base
    nsg = nv.nerve_category(g.base, 2)
    col1 = x_bx.column(1)
    top = min(col1.dim, 2)
    col1_t = sp.TruncatedSSet(top, [col1.level(k) for k in range(top + 1)],
                              {k: v for k, v in col1.face.items() if k[0] <= top},
                              {k: v for k, v in col1.degen.items()
                               if k[0] <= top - 1},
                              base=col1.base)
    d1 = sp.standard_simplex(1, top)
    prod = sp.product(col1_t, d1)
    dm1, t1 = det1
    dm2, t2 = det2
    homotopies = sp.enumerate_maps(prod, nsg, upto=top, budget=budget)
    base_cell = {k: x_bx.sv(k, 0, 0, x_bx.level(k, 0)[0])
                 for k in range(top + 1)}
    unit_chain = {k: nsg.deg_base(k, g.unit) for k in range(top + 1)}
    out = []
    for h in homotopies:
        def ev(k, e, phi):
            return h(k, "(%s|%s)" % (e, phi))
        # endpoints: the delta_1 end restricts to det1, the delta_0 end
        # to det2
        good = True
        for k in range(top + 1):
            end1 = "1" * (k + 1)
            end0 = "0" * (k + 1)
            for e in col1_t.level(k):
                if ev(k, e, end1) != dm1(k, e) or ev(k, e, end0) != dm2(k, e):
                    good = False
                    break
            if not good:
                break
        if not good:
            continue
        # pointedness: the degenerate-base cylinder maps to identity chains
        for k in range(top + 1):
            for phi in d1.level(k):
                if ev(k, base_cell[k], phi) != unit_chain[k]:
                    good = False
                    break
            if not good:
                break
        if not good:
            continue
        # compatibility over X_{1,2}
        if (1, 2) in x_bx.region:
            for z in x_bx.level(1, 2):
                xi_top = x_bx.dh(1, 2, 1, z)
                xi_bot = x_bx.dh(1, 2, 0, z)
                hmor = {j: nsg._mor1[ev(1, x_bx.dv(1, 2, j, z), "01")]
                        for j in (0, 1, 2)}
                lhs = c.comp(hmor[1], t1[xi_top])
                rhs = c.comp(t2[xi_bot], g.tm(hmor[2], hmor[0]))
                if lhs != rhs:
                    good = False
                    break
        if good:
            out.append(h)
    return out


def segal_pi0(x_bx, g, budget=None):
    """Classes of Segal determinants under the exists-a-morphism
    relation, with symmetry/transitivity verified."""
    dets = enumerate_segal_determinants(x_bx, g, budget=budget)
    n = len(dets)
    related = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            related[i][j] = bool(segal_det_morphisms(x_bx, g, dets[i], dets[j],
                                                     budget=budget))
    for i in range(n):
        if not related[i][i]:
            raise DeterminantError("segal determinant relation not reflexive")
        for j in range(n):
            if related[i][j] != related[j][i]:
                raise DeterminantError("segal determinant relation not symmetric")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if related[i][j] and related[j][k] and not related[i][k]:
                    raise DeterminantError("segal determinant relation not transitive")
    classes = []
    seen = set()
    for i in range(n):
        if i in seen:
            continue
        cls = [j for j in range(n) if related[i][j]]
        seen.update(cls)
        classes.append(cls)
    return classes, dets


def hom1_enriched(x_bx, g, n_max=2, ns=None, budget=None):
    """The direction-1 enriched hom into the Segal nerve, as a truncated
    simplicial set: level n = bisimplicial maps X x p1*(Delta^n) -> N_S(G)."""
    if ns is None:
        ns = nv.segal_nerve(g, 2, 3)
    region = set(x_bx.region) & set(ns.region)
    prods = []
    pair_tables = []
    for n in range(n_max + 1):
        dn = sp.standard_simplex(n, max(p for p, q in region))
        prod, pairs = _bi_product_p1(x_bx, dn, region)
        prods.append(prod)
        pair_tables.append(pairs)
    maps = []
    keys = []
    for n in range(n_max + 1):
        found = nv.enumerate_bimaps(prods[n], ns, region=region, budget=budget)
        canon = []
        for f in found:
            canon.append(tuple((k, tuple(sorted(f[k].items())))
                               for k in sorted(region)))
        order = sorted(range(len(found)), key=lambda i: canon[i])
        maps.append([found[i] for i in order])
        keys.append({canon[i]: rank for rank, i in enumerate(order)})

    levels = [["H%d_%d" % (n, i) for i in range(len(maps[n]))]
              for n in range(n_max + 1)]
    face = {}
    degen = {}

    def transported(n_from, n_to, post, f):
        out = {}
        for k in sorted(region):
            p, q = k
            sub = {}
            for cell in prods[n_to].level(p, q):
                x, phi = pair_tables[n_to][(p, q, cell)]
                img_cell = "(%s|%s)" % (x, post(phi))
                sub[cell] = f[k][img_cell]
            out[k] = sub
        return tuple((k, tuple(sorted(out[k].items()))) for k in sorted(region))

    for n in range(1, n_max + 1):
        for i in range(n + 1):
            mp = {}
            for idx, f in enumerate(maps[n]):
                key = transported(n, n - 1, lambda phi: _post_delta(i, phi), f)
                mp["H%d_%d" % (n, idx)] = "H%d_%d" % (n - 1, keys[n - 1][key])
            face[(n, i)] = mp
    for n in range(n_max):
        for j in range(n + 1):
            mp = {}
            for idx, f in enumerate(maps[n]):
                key = transported(n, n + 1, lambda phi: _post_sigma(j, phi), f)
                mp["H%d_%d" % (n, idx)] = "H%d_%d" % (n + 1, keys[n + 1][key])
            degen[(n, j)] = mp
    return sp.TruncatedSSet(n_max, levels, face, degen)


def _bi_product_p1(x_bx, dn, region):
    """X x p1*(Delta^n) over the region, with a pair decode table."""
    def bid(x, y):
        return "(%s|%s)" % (x, y)

    levels = {}
    pairs = {}
    hface, vface, hdegen, vdegen = {}, {}, {}, {}
    for (p, q) in region:
        levels[(p, q)] = [bid(x, y) for x in x_bx.level(p, q)
                          for y in dn.level(p)]
        for x in x_bx.level(p, q):
            for y in dn.level(p):
                pairs[(p, q, bid(x, y))] = (x, y)
    for (p, q) in region:
        if p >= 1 and (p - 1, q) in region:
            for i in range(p + 1):
                hface[(p, q, i)] = {bid(x, y): bid(x_bx.dh(p, q, i, x),
                                                   dn.d(p, i, y))
                                    for x in x_bx.level(p, q)
                                    for y in dn.level(p)}
        if q >= 1 and (p, q - 1) in region:
            for i in range(q + 1):
                vface[(p, q, i)] = {bid(x, y): bid(x_bx.dv(p, q, i, x), y)
                                    for x in x_bx.level(p, q)
                                    for y in dn.level(p)}
        if (p + 1, q) in region:
            for j in range(p + 1):
                hdegen[(p, q, j)] = {bid(x, y): bid(x_bx.sh(p, q, j, x),
                                                    dn.s(p, j, y))
                                     for x in x_bx.level(p, q)
                                     for y in dn.level(p)}
        if (p, q + 1) in region:
            for j in range(q + 1):
                vdegen[(p, q, j)] = {bid(x, y): bid(x_bx.sv(p, q, j, x), y)
                                     for x in x_bx.level(p, q)
                                     for y in dn.level(p)}
    return nv.BisimplicialTrunc(region, levels, hface, vface, hdegen, vdegen), pairs
