"""Finite truncated simplicial sets.

A TruncatedSSet stores explicit finite levels up to a cutoff dimension
together with total face/degeneracy maps.  All predicates (simplicial
identities, Kan extension, coskeletality, minimality) are decided by
exhaustive scans over the stored range; every report records the range
it actually checked.

Face/degeneracy identities used throughout (the duals of the generating
relations of the simplex category):

    d_i d_j = d_{j-1} d_i            i < j
    s_i s_j = s_{j+1} s_i            i <= j
    d_i s_j = s_{j-1} d_i            i < j
    d_i s_j = id                     i in {j, j+1}
    d_i s_j = s_j d_{i-1}            i > j + 1
"""

import os
from .groups import FiniteGroup


class SimplicialError(Exception):
    pass


class DimensionOutOfRange(SimplicialError):
    pass


class BadHornIndex(SimplicialError):
    pass


class NotCoskeletal(SimplicialError):
    pass


class NotSubcomplex(SimplicialError):
    pass


class NotKan(SimplicialError):
    pass


class SearchBudgetExceeded(SimplicialError):
    pass


DEFAULT_BUDGET = 10 ** 7


def enumeration_budget():
    raw = os.environ.get("KANFORGE_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_BUDGET


class ValidationReport:
    def __init__(self, violations, checked):
        self.violations = violations
        self.checked = checked

    @property
    def ok(self):
        return not self.violations

    def __repr__(self):
        if self.ok:
            return "ValidationReport(ok, checked=%r)" % (self.checked,)
        return "ValidationReport(%d violations)" % len(self.violations)


class TruncatedSSet:
    """Levelwise finite simplicial set truncated at `dim`.

    levels[k]   list of simplex ids (strings), 0 <= k <= dim
    face[k,i]   dict id -> id, level k -> level k-1, 1 <= k <= dim, 0 <= i <= k
    degen[k,j]  dict id -> id, level k -> level k+1, 0 <= k < dim, 0 <= j <= k
    coskeletal_at  optional c asserting the object is c-coskeletal
    base        optional 0-simplex id (pointed variant)
    """

    def __init__(self, dim, levels, face, degen, coskeletal_at=None, base=None):
        self.dim = dim
        self.levels = [list(l) for l in levels]
        self.face = {k: dict(v) for k, v in face.items()}
        self.degen = {k: dict(v) for k, v in degen.items()}
        self.coskeletal_at = coskeletal_at
        self.base = base
        self._index = [set(l) for l in self.levels]

    # -- basic access ----------------------------------------------------

    def level(self, k):
        if not (0 <= k <= self.dim):
            raise DimensionOutOfRange("no level %d in a %d-truncation" % (k, self.dim))
        return self.levels[k]

    def d(self, k, i, x):
        return self.face[(k, i)][x]

    def s(self, k, j, x):
        return self.degen[(k, j)][x]

    def faces(self, k, x):
        return tuple(self.d(k, i, x) for i in range(k + 1))

    def deg_base(self, n, a=None):
        """The totally degenerate n-simplex s_0^n(a)."""
        a = self.base if a is None else a
        if a is None:
            raise SimplicialError("no base simplex chosen")
        x = a
        for k in range(n):
            x = self.s(k, 0, x)
        return x

    def is_reduced(self):
        return len(self.levels[0]) == 1

    def degenerate_ids(self, k):
        """Ids in level k that are in the image of some degeneracy."""
        if k == 0:
            return set()
        out = set()
        for j in range(k):
            out.update(self.degen[(k - 1, j)].values())
        return out

    def nondegenerate_counts(self):
        return [len(self.levels[k]) - len(self.degenerate_ids(k))
                for k in range(self.dim + 1)]

    # -- validation -------------------------------------------------------

    def validate(self):
        errs = []
        for k in range(1, self.dim + 1):
            for i in range(k + 1):
                m = self.face.get((k, i))
                if m is None:
                    errs.append("missing face map (%d,%d)" % (k, i))
                    continue
                for x in self.levels[k]:
                    if x not in m:
                        errs.append("face (%d,%d) undefined on %s" % (k, i, x))
                    elif m[x] not in self._index[k - 1]:
                        errs.append("face (%d,%d)(%s) lands outside level %d" % (k, i, x, k - 1))
        for k in range(self.dim):
            for j in range(k + 1):
                m = self.degen.get((k, j))
                if m is None:
                    errs.append("missing degeneracy map (%d,%d)" % (k, j))
                    continue
                for x in self.levels[k]:
                    if x not in m:
                        errs.append("degeneracy (%d,%d) undefined on %s" % (k, j, x))
                    elif m[x] not in self._index[k + 1]:
                        errs.append("degeneracy (%d,%d)(%s) lands outside level %d" % (k, j, x, k + 1))
        if errs:
            return ValidationReport(errs, "totality only (maps missing)")

        # d_i d_j = d_{j-1} d_i for i < j
        for k in range(2, self.dim + 1):
            for x in self.levels[k]:
                for j in range(1, k + 1):
                    for i in range(j):
                        if self.d(k - 1, i, self.d(k, j, x)) != \
                           self.d(k - 1, j - 1, self.d(k, i, x)):
                            errs.append("dd identity fails at %s (k=%d,i=%d,j=%d)" % (x, k, i, j))
        # s_i s_j = s_{j+1} s_i for i <= j
        for k in range(self.dim - 1):
            for x in self.levels[k]:
                for j in range(k + 1):
                    for i in range(j + 1):
                        if self.s(k + 1, i, self.s(k, j, x)) != \
                           self.s(k + 1, j + 1, self.s(k, i, x)):
                            errs.append("ss identity fails at %s (k=%d,i=%d,j=%d)" % (x, k, i, j))
        # d_i s_j mixed identities
        for k in range(self.dim):
            for x in self.levels[k]:
                for j in range(k + 1):
                    sx = self.s(k, j, x)
                    for i in range(k + 2):
                        got = self.d(k + 1, i, sx)
                        if i == j or i == j + 1:
                            want = x
                        elif i < j:
                            want = self.s(k - 1, j - 1, self.d(k, i, x))
                        else:
                            want = self.s(k - 1, j, self.d(k, i - 1, x))
                        if got != want:
                            errs.append("ds identity fails at %s (k=%d,i=%d,j=%d)" % (x, k, i, j))
        if self.base is not None and self.base not in self._index[0]:
            errs.append("base %s is not a 0-simplex" % self.base)
        if self.coskeletal_at is not None and not errs:
            c = self.coskeletal_at
            for m in range(max(c, 0), self.dim):
                alpha = boundary_alpha(self, m)
                tuples = boundary_tuples(self, m)
                image = set(alpha.values())
                if len(image) != len(alpha) or image != set(tuples):
                    errs.append("coskeletal_at=%d violated: alpha^%d not bijective" % (c, m))
        return ValidationReport(errs, "identities in dims <= %d" % self.dim)


# -- boundary / horn tuples ---------------------------------------------


def boundary_tuples(x_sset, m):
    """All (m+2)-tuples (a_0..a_{m+1}) of m-simplices with
    d_i a_j = d_{j-1} a_i for i < j; the maps from the boundary of the
    (m+1)-simplex."""
    if not (0 <= m <= x_sset.dim):
        raise DimensionOutOfRange("boundary tuples need level %d" % m)
    lvl = x_sset.level(m)
    if m == 0:
        return [(a, b) for a in lvl for b in lvl]
    out = []
    # backtracking with incremental compatibility checks
    def extend(partial):
        j = len(partial)
        if j == m + 2:
            out.append(tuple(partial))
            return
        for cand in lvl:
            ok = True
            for i in range(j):
                if x_sset.d(m, i, cand) != x_sset.d(m, j - 1, partial[i]):
                    ok = False
                    break
            if ok:
                partial.append(cand)
                extend(partial)
                partial.pop()
    extend([])
    return out


def horn_tuples(x_sset, m, k):
    """Maps out of the k-horn of the (m+1)-simplex, as tuples of length
    m+2 with None in slot k."""
    if not (0 <= m <= x_sset.dim):
        raise DimensionOutOfRange("horn tuples need level %d" % m)
    if not (0 <= k <= m + 1):
        raise BadHornIndex("horn index %d out of range for m=%d" % (k, m))
    lvl = x_sset.level(m)
    slots = [j for j in range(m + 2) if j != k]
    out = []
    def extend(partial, idx):
        if idx == len(slots):
            full = [None] * (m + 2)
            for pos, val in zip(slots, partial):
                full[pos] = val
            out.append(tuple(full))
            return
        j = slots[idx]
        for cand in lvl:
            ok = True
            if m >= 1:
                for pos in range(idx):
                    i = slots[pos]
                    if x_sset.d(m, i, cand) != x_sset.d(m, j - 1, partial[pos]):
                        ok = False
                        break
            if ok:
                partial.append(cand)
                extend(partial, idx + 1)
                partial.pop()
    extend([], 0)
    return out


def boundary_alpha(x_sset, m):
    """alpha^m: level[m+1] -> boundary tuples, x -> (d_0 x, .., d_{m+1} x)."""
    if m + 1 > x_sset.dim:
        raise DimensionOutOfRange("alpha^%d needs level %d" % (m, m + 1))
    return {x: x_sset.faces(m + 1, x) for x in x_sset.level(m + 1)}


def horn_alpha(x_sset, m, k):
    """alpha^{m,k}: level[m+1] -> horn tuples (None in slot k)."""
    if m + 1 > x_sset.dim:
        raise DimensionOutOfRange("alpha^{%d,%d} needs level %d" % (m, k, m + 1))
    out = {}
    for x in x_sset.level(m + 1):
        t = list(x_sset.faces(m + 1, x))
        t[k] = None
        out[x] = tuple(t)
    return out


def horn_fillers(x_sset, m, k, horn):
    """All x in level m+1 whose faces match the horn tuple (None at k)."""
    alpha = horn_alpha(x_sset, m, k)
    return sorted(x for x, t in alpha.items() if t == horn)


class KanRow:
    """Kan status of one dimension: per horn index k, surjectivity and
    injectivity of alpha^{m,k}."""

    def __init__(self, m, flags, witness=None):
        self.m = m
        self.flags = flags          # k -> (surjective, injective)
        self.witness = witness or {}

    @property
    def kan(self):
        return all(s for s, _ in self.flags.values())

    @property
    def strict(self):
        return all(s and i for s, i in self.flags.values())

    @property
    def unique_fillers(self):
        return all(i for _, i in self.flags.values())


def kan_status(x_sset, m):
    """Decide surjectivity/injectivity of alpha^{m,k} for 0 <= k <= m+1.

    If level m+1 is not stored but the complex carries a coskeletal flag,
    the complex is extended first.
    """
    x = _ensure_depth(x_sset, m + 1)
    flags, witness = {}, {}
    for k in range(m + 2):
        horns = horn_tuples(x, m, k)
        alpha = horn_alpha(x, m, k)
        seen = {}
        inj = True
        for s, t in alpha.items():
            if t in seen:
                inj = False
                witness[(k, "inj")] = (seen[t], s)
            else:
                seen[t] = s
        surj = True
        for h in horns:
            if h not in seen:
                surj = False
                witness[(k, "surj")] = h
                break
        flags[k] = (surj, inj)
    return KanRow(m, flags, witness)


class KanReport:
    """Kan rows for every checkable dimension plus the derived flags:
    the largest m with Kan extension in 1..m, and the least dimension
    from which fillers are unique through the checked range."""

    def __init__(self, rows):
        self.rows = rows                   # m -> KanRow
        top = max(rows) if rows else 0
        self.is_kan_up_to = 0
        for m in range(1, top + 1):
            if m in rows and rows[m].kan:
                self.is_kan_up_to = m
            else:
                break
        self.strict_from = None
        for m in sorted(rows, reverse=True):
            if rows[m].unique_fillers:
                self.strict_from = m
            else:
                break

    def __repr__(self):
        return "KanReport(kan_up_to=%d, strict_from=%s, dims=%s)" % (
            self.is_kan_up_to, self.strict_from, sorted(self.rows))


def kan_report(x_sset):
    """Kan status for every dimension the truncation can decide."""
    top = x_sset.dim - 1
    if x_sset.coskeletal_at is not None:
        top = max(top, x_sset.dim)
    rows = {m: kan_status(x_sset, m) for m in range(top + 1)}
    return KanReport(rows)


def _ensure_depth(x_sset, depth):
    if x_sset.dim >= depth:
        return x_sset
    if x_sset.coskeletal_at is not None and x_sset.coskeletal_at <= x_sset.dim + 1:
        return coskeletal_extend(x_sset, depth)
    raise DimensionOutOfRange(
        "need level %d but truncation stops at %d (no coskeletal flag)"
        % (depth, x_sset.dim))


def minimality_at(x_sset, m):
    """Minimality condition in dimension m: simplices of level m+1 whose
    faces agree away from slot k also agree at slot k."""
    x = _ensure_depth(x_sset, m + 1)
    for k in range(m + 2):
        seen = {}
        for s in x.level(m + 1):
            t = list(x.faces(m + 1, s))
            missing = t[k]
            t[k] = None
            key = tuple(t)
            if key in seen and seen[key] != missing:
                return False
            seen.setdefault(key, missing)
    return True


class ClassifyReport:
    def __init__(self, n, n_coskeletal, weakly_n_coskeletal, n_minimal,
                 n_kan_groupoid, checked_dims, detail):
        self.n = n
        self.n_coskeletal = n_coskeletal
        self.weakly_n_coskeletal = weakly_n_coskeletal
        self.n_minimal = n_minimal
        self.n_kan_groupoid = n_kan_groupoid
        self.checked_dims = checked_dims
        self.detail = detail

    def __repr__(self):
        return ("ClassifyReport(n=%d, cosk=%s, weak=%s, min=%s, kan_grpd=%s, dims=%s)"
                % (self.n, self.n_coskeletal, self.weakly_n_coskeletal,
                   self.n_minimal, self.n_kan_groupoid, self.checked_dims))


def classify(x_sset, n):
    """Coskeletal / weakly coskeletal / minimal / n-Kan-groupoid flags.

    n_kan_groupoid is decided per the characterisation: weakly
    n-coskeletal, Kan extension in dimensions 1..n+1 and minimality in
    dimension n.  Checks run over the stored range only.
    """
    x = x_sset
    detail = {}
    top = x.dim - 1      # largest m with level m+1 stored

    def alpha_bij(m):
        alpha = boundary_alpha(x, m)
        tuples = boundary_tuples(x, m)
        image = list(alpha.values())
        inj = len(set(image)) == len(image)
        surj = set(image) == set(tuples)
        return surj, inj

    cosk = True
    for m in range(n, top + 1):
        s, i = alpha_bij(m)
        detail[("alpha", m)] = (s, i)
        if not (s and i):
            cosk = False
    weak = True
    if n <= top:
        s, i = detail.get(("alpha", n)) or alpha_bij(n)
        detail[("alpha", n)] = (s, i)
        if not i:
            weak = False
    for m in range(n + 1, top + 1):
        s, i = detail[("alpha", m)]
        if not (s and i):
            weak = False
    minimal = True
    for m in range(n, top + 1):
        ok = minimality_at(x, m)
        detail[("minimal", m)] = ok
        if not ok:
            minimal = False
    kan_ok = True
    for m in range(1, min(n + 1, top) + 1):
        row = kan_status(x, m)
        detail[("kan", m)] = row.flags
        if not row.kan:
            kan_ok = False
    min_at_n = detail.get(("minimal", n), None)
    if min_at_n is None and n <= top:
        min_at_n = minimality_at(x, n)
        detail[("minimal", n)] = min_at_n
    groupoid = bool(weak and kan_ok and (min_at_n is not False))
    checked = "alpha on %d..%d, kan on 1..%d" % (n, top, min(n + 1, top))
    return ClassifyReport(n, cosk, weak, minimal, groupoid, checked, detail)


# -- coskeletal machinery -------------------------------------------------


def _tuple_id(parts):
    return "(" + ",".join(parts) + ")"


def coskeletal_extend(x_sset, to_dim):
    """Extend levels above the stored cutoff with boundary tuples.

    New faces are projections; new degeneracies follow
    s_i(a) = (b_0..b_{m+1}) with b_k = s_{i-1} d_k a for k < i,
    b_k = a for k in {i, i+1} and b_k = s_i d_{k-1} a for k > i+1.
    """
    if x_sset.coskeletal_at is None:
        raise NotCoskeletal("complex carries no coskeletal flag")
    if x_sset.coskeletal_at > x_sset.dim + 1:
        raise NotCoskeletal("flag %d exceeds stored dim+1" % x_sset.coskeletal_at)
    if to_dim <= x_sset.dim:
        return x_sset
    levels = [list(l) for l in x_sset.levels]
    face = {k: dict(v) for k, v in x_sset.face.items()}
    degen = {k: dict(v) for k, v in x_sset.degen.items()}

    cur = TruncatedSSet(x_sset.dim, levels, face, degen,
                        coskeletal_at=x_sset.coskeletal_at, base=x_sset.base)
    for new_dim in range(x_sset.dim + 1, to_dim + 1):
        m = new_dim - 1
        tuples = boundary_tuples(cur, m)
        ids = [_tuple_id(t) for t in tuples]
        levels.append(ids)
        for i in range(new_dim + 1):
            face[(new_dim, i)] = {_tuple_id(t): t[i] for t in tuples}
        for j in range(m + 1):
            mapping = {}
            for a in cur.level(m):
                parts = []
                for k in range(new_dim + 1):
                    if k <= j - 1:
                        parts.append(cur.s(m - 1, j - 1, cur.d(m, k, a)))
                    elif k <= j + 1:
                        parts.append(a)
                    else:
                        parts.append(cur.s(m - 1, j, cur.d(m, k - 1, a)))
                mapping[a] = _tuple_id(tuple(parts))
            degen[(m, j)] = mapping
        cur = TruncatedSSet(new_dim, levels, face, degen,
                            coskeletal_at=x_sset.coskeletal_at, base=x_sset.base)
    return cur


def csq_prime(x_sset, n):
    """Quotient level n+1 by the equal-faces relation and rebuild the
    levels above coskeletally.  Returns (Y, level_maps) where level_maps
    sends old ids to new ids on levels 0..n+1."""
    if n + 1 > x_sset.dim:
        raise DimensionOutOfRange("csq' needs level %d" % (n + 1))
    x = x_sset
    # classes of the equal-faces relation on level n+1
    byfaces = {}
    for s in x.level(n + 1):
        byfaces.setdefault(x.faces(n + 1, s), []).append(s)
    rep = {}
    for cls in byfaces.values():
        r = min(cls)
        for s in cls:
            rep[s] = r
    levels = [list(x.levels[k]) for k in range(n + 1)]
    levels.append(sorted(set(rep.values())))
    face = {}
    degen = {}
    for k in range(1, n + 1):
        for i in range(k + 1):
            face[(k, i)] = dict(x.face[(k, i)])
    for k in range(n):
        for j in range(k + 1):
            degen[(k, j)] = dict(x.degen[(k, j)])
    for i in range(n + 2):
        face[(n + 1, i)] = {rep[s]: x.d(n + 1, i, s) for s in x.level(n + 1)}
    for j in range(n + 1):
        degen[(n, j)] = {a: rep[x.s(n, j, a)] for a in x.level(n)}
    out = TruncatedSSet(n + 1, levels, face, degen,
                        coskeletal_at=n + 1, base=x.base)
    if x.dim > n + 1:
        out = coskeletal_extend(out, x.dim)
    maps = {k: {s: s for s in x.levels[k]} for k in range(n + 1)}
    maps[n + 1] = dict(rep)
    return out, maps


# -- shift and loop spaces -------------------------------------------------


def shift(x_sset):
    """The decalage: level n = old level n+1 with faces d_0..d_n and
    degeneracies s_0..s_{n-1}."""
    if x_sset.dim < 1:
        raise DimensionOutOfRange("shift needs dim >= 1")
    dim = x_sset.dim - 1
    levels = [list(x_sset.levels[k + 1]) for k in range(dim + 1)]
    face = {}
    degen = {}
    for k in range(1, dim + 1):
        for i in range(k + 1):
            face[(k, i)] = dict(x_sset.face[(k + 1, i)])
    for k in range(dim):
        for j in range(k + 1):
            degen[(k, j)] = dict(x_sset.degen[(k + 1, j)])
    base = None
    if x_sset.is_reduced():
        base = x_sset.s(0, 0, x_sset.level(0)[0])
    return TruncatedSSet(dim, levels, face, degen, base=base)


def shift_retraction_check(x_sset):
    """Verify alpha_X . beta_X = id on the vertex level and that
    H(t)_n = s_n..s_t d_t..d_n is a combinatorial homotopy from
    beta.alpha to the identity of the shifted complex."""
    x = x_sset
    errs = []
    dim = x.dim - 1
    if dim < 0:
        return ["shift undefined"]

    def alpha_map(n, a):      # d_0^{n+1} : X_{n+1} -> X_0
        cur = a
        for k in range(n + 1, 0, -1):
            cur = x.d(k, 0, cur)
        return cur

    def beta_map(n, v):       # s_0^{n+1} : X_0 -> X_{n+1}
        cur = v
        for k in range(n + 1):
            cur = x.s(k, 0, cur)
        return cur

    for v in x.level(0):
        for n in range(dim + 1):
            if n + 1 > x.dim:
                break
            if alpha_map(n, beta_map(n, v)) != v:
                errs.append("alpha.beta != id at %s (n=%d)" % (v, n))

    def h(t, n, a):
        # H(t)_n = s_n .. s_t d_t .. d_n on level n of the shift = X_{n+1};
        # in the composite d_t o ... o d_n the rightmost face acts first
        cur = a
        lvl = n + 1
        for i in range(n, t - 1, -1):
            cur = x.d(lvl, i, cur)
            lvl -= 1
        for i in range(t, n + 1):
            cur = x.s(lvl, i, cur)
            lvl += 1
        return cur

    top = min(dim, x.dim - 1)
    for n in range(top + 1):
        for a in x.level(n + 1):
            if h(n + 1, n, a) != a:
                errs.append("H(n+1) != id at %s (n=%d)" % (a, n))
            if h(0, n, a) != beta_map(n, alpha_map(n, a)):
                errs.append("H(0) != beta.alpha at %s (n=%d)" % (a, n))
    # homotopy identities of the combinatorial-homotopy lemma
    for n in range(1, top + 1):
        for a in x.level(n + 1):
            for t in range(n + 2):
                for i in range(n + 1):
                    got = x.d(n + 1, i, h(t, n, a))
                    if t <= i:
                        want = h(t, n - 1, x.d(n + 1, i, a))
                    else:
                        want = h(t - 1, n - 1, x.d(n + 1, i, a))
                    if got != want:
                        errs.append("homotopy d-identity fails (n=%d,t=%d,i=%d,%s)" % (n, t, i, a))
    for n in range(top):
        for a in x.level(n + 1):
            for t in range(n + 2):
                for j in range(n + 1):
                    got = x.s(n + 1, j, h(t, n, a))
                    if t <= j:
                        want = h(t, n + 1, x.s(n + 1, j, a))
                    else:
                        want = h(t + 1, n + 1, x.s(n + 1, j, a))
                    if got != want:
                        errs.append("homotopy s-identity fails (n=%d,t=%d,j=%d,%s)" % (n, t, j, a))
    return errs


def loop_space(x_sset, variant="plain", base=None):
    """Combinatorial loop space.

    plain:   level n = simplices of level n+1 whose last face is the
             totally degenerate base.
    reduced: input must be reduced; additionally every iterated face
             d_{i_j} (indices 0 <= i_j <= top-1 at each step) lands on
             the degenerate 1-simplex.
    """
    x = x_sset
    if x.dim < 2:
        raise DimensionOutOfRange("loop space needs dim >= 2")
    if variant == "reduced" and not x.is_reduced():
        raise SimplicialError("reduced loop space needs a reduced complex")
    a = base if base is not None else (x.base or (x.level(0)[0] if x.is_reduced() else None))
    if a is None:
        raise SimplicialError("no base point")
    dim = x.dim - 1
    keep = []
    star1 = x.deg_base(1, a)
    for n in range(dim + 1):
        bn = x.deg_base(n, a)
        lvl = []
        for s in x.level(n + 1):
            if x.d(n + 1, n + 1, s) != bn:
                continue
            if variant == "reduced" and n == 0 and s != star1:
                # level 0 of the reduced variant is the degenerate loop only
                continue
            if variant == "reduced" and n >= 1:
                ok = True
                frontier = {s}
                lvl_k = n + 1
                while lvl_k > 1 and ok:
                    nxt = set()
                    for t in frontier:
                        for i in range(lvl_k):      # 0 <= i <= lvl_k - 1
                            nxt.add(x.d(lvl_k, i, t))
                    frontier = nxt
                    lvl_k -= 1
                if any(t != star1 for t in frontier):
                    ok = False
                if not ok:
                    continue
            lvl.append(s)
        keep.append(lvl)
    sets = [set(l) for l in keep]
    face = {}
    degen = {}
    for k in range(1, dim + 1):
        for i in range(k + 1):
            face[(k, i)] = {s: x.d(k + 1, i, s) for s in keep[k]}
    for k in range(dim):
        for j in range(k + 1):
            degen[(k, j)] = {s: x.s(k + 1, j, s) for s in keep[k]}
    for (k, i), m in face.items():
        for s, t in m.items():
            if t not in sets[k - 1]:
                raise SimplicialError("loop space not closed under faces")
    newbase = x.deg_base(1, a)
    return TruncatedSSet(dim, keep, face, degen, base=newbase)


# -- homotopy groups -------------------------------------------------------


def pi0(x_sset):
    """Coequalizer of d_0, d_1 : level 1 -> level 0."""
    parent = {v: v for v in x_sset.level(0)}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    if x_sset.dim >= 1:
        for e in x_sset.level(1):
            union(x_sset.d(1, 0, e), x_sset.d(1, 1, e))
    classes = {}
    for v in x_sset.level(0):
        classes.setdefault(find(v), []).append(v)
    return sorted(classes)


def pi(x_sset, m, base=None):
    """Combinatorial homotopy group in dimension m >= 1 at the base.

    Requires Kan certification in dimensions 1..m+1 (extending a flagged
    coskeletal complex when the top level is missing); refuses otherwise.
    """
    return pi_with_classes(x_sset, m, base)[0]


def pi_with_classes(x_sset, m, base=None):
    """Like pi() but also returns the sphere -> class-representative map."""
    a = base if base is not None else x_sset.base
    if m == 0:
        return pi0(x_sset), {}
    if a is None:
        raise SimplicialError("pi_m needs a base 0-simplex")
    x = _ensure_depth(x_sset, m + 2) if (
        x_sset.coskeletal_at is not None and x_sset.dim < m + 2) else x_sset
    if x.dim < m + 1:
        raise DimensionOutOfRange("pi_%d needs level %d" % (m, m + 1))
    certified_to = min(m + 1, x.dim - 1)
    for mm in range(1, certified_to + 1):
        if not kan_status(x, mm).kan:
            raise NotKan("Kan extension fails in dimension %d" % mm)
    if certified_to < m:
        raise NotKan("cannot certify Kan up to dimension %d (range stops at %d)"
                     % (m, certified_to))

    bm = x.deg_base(m, a)
    bm1 = x.deg_base(m - 1, a)
    spheres = [s for s in x.level(m)
               if all(x.d(m, i, s) == bm1 for i in range(m + 1))]
    sset = set(spheres)

    # identification relation via level m+1
    rel = set()
    for w in x.level(m + 1):
        fs = x.faces(m + 1, w)
        if all(fs[i] == bm for i in range(m)) and fs[m] in sset and fs[m + 1] in sset:
            rel.add((fs[m + 1], fs[m]))
    for s in spheres:
        if (s, s) not in rel:
            raise NotKan("homotopy relation not reflexive at %s" % s)
    if any((b2, a2) not in rel for (a2, b2) in rel):
        raise NotKan("homotopy relation not symmetric")
    for (p, q) in list(rel):
        for (q2, r) in list(rel):
            if q2 == q and (p, r) not in rel:
                raise NotKan("homotopy relation not transitive")
    classes = {}
    for s in spheres:
        cls = min(t for t in spheres if (s, t) in rel)
        classes[s] = cls
    reps = sorted(set(classes.values()))

    # product via the filler condition: for z in level m+1 with
    # d_{m+1} z = x, d_{m-1} z = y and lower faces at the base,
    # x*y = d_m z.
    table = {}
    for z in x.level(m + 1):
        fs = x.faces(m + 1, z)
        if any(fs[i] != bm for i in range(m - 1)):
            continue
        if fs[m + 1] in sset and fs[m - 1] in sset and fs[m] in sset:
            key = (classes[fs[m + 1]], classes[fs[m - 1]])
            val = classes[fs[m]]
            if key in table and table[key] != val:
                raise NotKan("product not well defined at %r" % (key,))
            table[key] = val
    for p in reps:
        for q in reps:
            if (p, q) not in table:
                raise NotKan("product undefined at (%s, %s)" % (p, q))
    unit = classes[bm]
    g = FiniteGroup(reps, table, unit, name="pi_%d" % m)
    errs = g.validate()
    if errs:
        raise NotKan("group axioms fail: %s" % errs[0])
    return g, classes


# -- standard complexes ----------------------------------------------------


def _monotone_maps(k, n):
    """Nondecreasing maps [k] -> [n], as tuples."""
    out = []
    def rec(prefix):
        if len(prefix) == k + 1:
            out.append(tuple(prefix))
            return
        lo = prefix[-1] if prefix else 0
        for v in range(lo, n + 1):
            prefix.append(v)
            rec(prefix)
            prefix.pop()
    rec([])
    return out


def _mid(t):
    return "".join(str(v) for v in t)


def standard_simplex(n, dim):
    """The n-simplex truncated at `dim`; simplices are digit strings of
    nondecreasing vertex sequences."""
    levels = [[_mid(t) for t in _monotone_maps(k, n)] for k in range(dim + 1)]
    face = {}
    degen = {}
    for k in range(1, dim + 1):
        for i in range(k + 1):
            face[(k, i)] = {_mid(t): _mid(t[:i] + t[i + 1:])
                            for t in _monotone_maps(k, n)}
    for k in range(dim):
        for j in range(k + 1):
            degen[(k, j)] = {_mid(t): _mid(t[:j + 1] + t[j:])
                             for t in _monotone_maps(k, n)}
    return TruncatedSSet(dim, levels, face, degen, coskeletal_at=0 if n == 0 else n)


def generated_subcomplex(x_sset, seeds):
    """Ids per level of the smallest subcomplex containing the seeds.

    seeds: dict level -> iterable of ids.
    """
    keep = [set() for _ in range(x_sset.dim + 1)]
    stack = []
    for k, ids in seeds.items():
        for s in ids:
            if s not in keep[k]:
                keep[k].add(s)
                stack.append((k, s))
    while stack:
        k, s = stack.pop()
        if k >= 1:
            for i in range(k + 1):
                t = x_sset.d(k, i, s)
                if t not in keep[k - 1]:
                    keep[k - 1].add(t)
                    stack.append((k - 1, t))
        if k < x_sset.dim:
            for j in range(k + 1):
                t = x_sset.s(k, j, s)
                if t not in keep[k + 1]:
                    keep[k + 1].add(t)
                    stack.append((k + 1, t))
    return [sorted(l) for l in keep]


def is_subcomplex(x_sset, ids_per_level):
    sets = [set(l) for l in ids_per_level]
    while len(sets) < x_sset.dim + 1:
        sets.append(set())
    for k in range(x_sset.dim + 1):
        for s in sets[k]:
            if s not in x_sset._index[k]:
                return False
            if k >= 1:
                for i in range(k + 1):
                    if x_sset.d(k, i, s) not in sets[k - 1]:
                        return False
            if k < x_sset.dim:
                for j in range(k + 1):
                    if x_sset.s(k, j, s) not in sets[k + 1]:
                        return False
    return True


def boundary_simplex(n, dim):
    """The boundary of the n-simplex, as a subcomplex of it."""
    full = standard_simplex(n, dim)
    seeds = {}
    if n >= 1:
        faces = [t for t in _monotone_maps(n - 1, n)
                 if len(set(t)) == n]  # injective (n-1)-faces
        seeds[n - 1] = [_mid(t) for t in faces]
    else:
        seeds[0] = []
    ids = generated_subcomplex(full, seeds)
    return restrict_to_subcomplex(full, ids)


def horn_complex(n, k, dim):
    """The k-horn of the n-simplex: the facets are the injective maps
    missing exactly one vertex, and the one missing vertex k is dropped."""
    full = standard_simplex(n, dim)
    faces = [t for t in _monotone_maps(n - 1, n)
             if len(set(t)) == n and (set(range(n + 1)) - set(t)) != {k}]
    ids = generated_subcomplex(full, {n - 1: [_mid(t) for t in faces]})
    return restrict_to_subcomplex(full, ids)


def restrict_to_subcomplex(x_sset, ids_per_level):
    if not is_subcomplex(x_sset, ids_per_level):
        raise NotSubcomplex("ids are not closed under faces/degeneracies")
    levels = [sorted(l) for l in ids_per_level]
    sets = [set(l) for l in levels]
    face = {}
    degen = {}
    for k in range(1, x_sset.dim + 1):
        for i in range(k + 1):
            face[(k, i)] = {s: x_sset.d(k, i, s) for s in levels[k]}
    for k in range(x_sset.dim):
        for j in range(k + 1):
            degen[(k, j)] = {s: x_sset.s(k, j, s) for s in levels[k]}
    base = x_sset.base if (x_sset.base in sets[0]) else None
    return TruncatedSSet(x_sset.dim, levels, face, degen, base=base)


def product(x_sset, y_sset):
    """Levelwise product with pair ids (x|y)."""
    dim = min(x_sset.dim, y_sset.dim)
    def pid(a, b):
        return "(%s|%s)" % (a, b)
    levels = [[pid(a, b) for a in x_sset.level(k) for b in y_sset.level(k)]
              for k in range(dim + 1)]
    face = {}
    degen = {}
    for k in range(1, dim + 1):
        for i in range(k + 1):
            face[(k, i)] = {pid(a, b): pid(x_sset.d(k, i, a), y_sset.d(k, i, b))
                            for a in x_sset.level(k) for b in y_sset.level(k)}
    for k in range(dim):
        for j in range(k + 1):
            degen[(k, j)] = {pid(a, b): pid(x_sset.s(k, j, a), y_sset.s(k, j, b))
                             for a in x_sset.level(k) for b in y_sset.level(k)}
    base = None
    if x_sset.base is not None and y_sset.base is not None:
        base = pid(x_sset.base, y_sset.base)
    cosk = None
    if x_sset.coskeletal_at is not None and y_sset.coskeletal_at is not None:
        cosk = max(x_sset.coskeletal_at, y_sset.coskeletal_at)
    return TruncatedSSet(dim, levels, face, degen, coskeletal_at=cosk, base=base)


def disjoint_union(x_sset, y_sset):
    dim = min(x_sset.dim, y_sset.dim)
    def lid(tag, s):
        return "%s:%s" % (tag, s)
    levels = [[lid("L", s) for s in x_sset.level(k)] +
              [lid("R", s) for s in y_sset.level(k)] for k in range(dim + 1)]
    face = {}
    degen = {}
    for k in range(1, dim + 1):
        for i in range(k + 1):
            m = {lid("L", s): lid("L", x_sset.d(k, i, s)) for s in x_sset.level(k)}
            m.update({lid("R", s): lid("R", y_sset.d(k, i, s)) for s in y_sset.level(k)})
            face[(k, i)] = m
    for k in range(dim):
        for j in range(k + 1):
            m = {lid("L", s): lid("L", x_sset.s(k, j, s)) for s in x_sset.level(k)}
            m.update({lid("R", s): lid("R", y_sset.s(k, j, s)) for s in y_sset.level(k)})
            degen[(k, j)] = m
    return TruncatedSSet(dim, levels, face, degen)


def quotient_by_subcomplex(x_sset, ids_per_level):
    """Collapse a subcomplex to a point levelwise; class representatives
    are the least ids."""
    if not is_subcomplex(x_sset, ids_per_level):
        raise NotSubcomplex("quotient needs a subcomplex")
    sets = [set(l) for l in ids_per_level]
    while len(sets) < x_sset.dim + 1:
        sets.append(set())
    rep = []
    for k in range(x_sset.dim + 1):
        if sets[k]:
            r = min(sets[k])
            rep.append({s: (r if s in sets[k] else s) for s in x_sset.level(k)})
        else:
            rep.append({s: s for s in x_sset.level(k)})
    levels = [sorted(set(rep[k].values())) for k in range(x_sset.dim + 1)]
    face = {}
    degen = {}
    for k in range(1, x_sset.dim + 1):
        for i in range(k + 1):
            m = {}
            for s in x_sset.level(k):
                m[rep[k][s]] = rep[k - 1][x_sset.d(k, i, s)]
            face[(k, i)] = m
    for k in range(x_sset.dim):
        for j in range(k + 1):
            m = {}
            for s in x_sset.level(k):
                m[rep[k][s]] = rep[k + 1][x_sset.s(k, j, s)]
            degen[(k, j)] = m
    base = None
    if sets[0]:
        base = rep[0][min(sets[0])]
    return TruncatedSSet(x_sset.dim, levels, face, degen, base=base)


def sq0_subcomplex(x_sset):
    """The subcomplex generated by all vertices (totally degenerate part)."""
    return generated_subcomplex(x_sset, {0: x_sset.level(0)})


def reduce_by_vertices(x_sset):
    """X / sq_0 X: identify all totally degenerate simplices levelwise."""
    return quotient_by_subcomplex(x_sset, sq0_subcomplex(x_sset))


def sphere(m, dim):
    """Delta^m / boundary, truncated at `dim`."""
    full = standard_simplex(m, dim)
    if m == 0:
        return full
    bnd = boundary_simplex(m, dim)
    ids = [sorted(bnd.level(k)) for k in range(dim + 1)]
    return quotient_by_subcomplex(full, ids)


def constant_sset(points, dim):
    levels = [list(points) for _ in range(dim + 1)]
    face = {}
    degen = {}
    for k in range(1, dim + 1):
        for i in range(k + 1):
            face[(k, i)] = {p: p for p in points}
    for k in range(dim):
        for j in range(k + 1):
            degen[(k, j)] = {p: p for p in points}
    return TruncatedSSet(dim, levels, face, degen, coskeletal_at=0)


# -- simplicial map enumeration -------------------------------------------


class SSetMap:
    """Levelwise map between truncated simplicial sets."""

    def __init__(self, src, dst, components):
        self.src = src
        self.dst = dst
        self.components = components    # level -> dict id -> id

    def __call__(self, k, s):
        return self.components[k][s]

    def key(self):
        return tuple(tuple(sorted(self.components[k].items()))
                     for k in sorted(self.components))

    def is_iso(self):
        for k, comp in self.components.items():
            vals = list(comp.values())
            if len(set(vals)) != len(vals):
                return False
            if set(vals) != set(self.dst.level(k)):
                return False
        return True


def _candidate_index(y_sset, k):
    """dict full-face-tuple -> sorted ids at level k of Y."""
    idx = {}
    for s in y_sset.level(k):
        idx.setdefault(y_sset.faces(k, s), []).append(s)
    for v in idx.values():
        v.sort()
    return idx


def enumerate_maps(x_sset, y_sset, upto=None, budget=None, limit=None):
    """All simplicial maps tau_d(X) -> tau_d(Y) at d = min dim (or `upto`).

    Deterministic order; degenerate simplices are forced, nondegenerate
    ones are chosen from face-compatible candidates, with forward
    checking: as soon as all faces of a higher simplex are assigned its
    fillability in Y is tested.  Raises SearchBudgetExceeded past the
    evaluation cap.
    """
    d = min(x_sset.dim, y_sset.dim) if upto is None else upto
    if y_sset.dim < d:
        y_sset = _ensure_depth(y_sset, d)
    if x_sset.dim < d:
        raise DimensionOutOfRange("source truncation too shallow")
    cap = budget if budget is not None else enumeration_budget()
    counter = [0]
    indices = {k: _candidate_index(y_sset, k) for k in range(1, d + 1)}

    # per level: degeneracy presentations for forcing
    deg_presentations = []
    for k in range(d + 1):
        pres = {}
        if k >= 1:
            for j in range(k):
                for a, sa in x_sset.degen[(k - 1, j)].items():
                    pres.setdefault(sa, []).append((j, a))
        deg_presentations.append(pres)

    # forward-check bookkeeping: for each simplex of level k+1, its faces;
    # for each level-k simplex, the higher cells it supports
    faces_of = {}
    supports = [dict() for _ in range(d + 1)]
    for k in range(1, d + 1):
        for s in x_sset.level(k):
            fs = x_sset.faces(k, s)
            faces_of[(k, s)] = fs
            for f in set(fs):
                supports[k - 1].setdefault(f, []).append((k, s))

    results = []
    comps = [dict() for _ in range(d + 1)]

    def tick():
        counter[0] += 1
        if counter[0] > cap:
            raise SearchBudgetExceeded("map enumeration exceeded %d evaluations" % cap)

    def fillable(k, s):
        """Face tuple of the level-k cell s is complete; is there a
        candidate in Y?"""
        want = tuple(comps[k - 1].get(f) for f in faces_of[(k, s)])
        if any(w is None for w in want):
            return True
        return want in indices[k]

    def forward_ok(k, s):
        for (k2, hi) in supports[k].get(s, ()):
            if k2 > d:
                continue
            if not fillable(k2, hi):
                return False
        return True

    def assign_level(k):
        if k > d:
            results.append(SSetMap(x_sset, y_sset,
                                   {kk: dict(comps[kk]) for kk in range(d + 1)}))
            return limit is not None and len(results) >= limit
        level = x_sset.level(k)
        forced = {}
        frees = []
        pres = deg_presentations[k]
        ok = True
        for s in level:
            if s in pres:
                vals = set()
                for (j, a) in pres[s]:
                    vals.add(y_sset.s(k - 1, j, comps[k - 1][a]))
                if len(vals) != 1:
                    ok = False
                    break
                v = vals.pop()
                if k >= 1:
                    want = tuple(comps[k - 1][x_sset.d(k, i, s)] for i in range(k + 1))
                    if y_sset.faces(k, v) != want:
                        ok = False
                        break
                forced[s] = v
            else:
                frees.append(s)
        if not ok:
            return False
        comps[k].update(forced)
        if k < d and not all(forward_ok(k, s) for s in forced):
            comps[k] = {}
            return False
        cand_lists = []
        for s in frees:
            tick()
            if k == 0:
                cands = list(y_sset.level(0))
            else:
                want = tuple(comps[k - 1][x_sset.d(k, i, s)] for i in range(k + 1))
                cands = indices[k].get(want, [])
            if not cands:
                comps[k] = {}
                return False
            cand_lists.append(cands)

        def choose(idx):
            if idx == len(frees):
                stop = assign_level(k + 1)
                return stop
            s = frees[idx]
            for v in cand_lists[idx]:
                tick()
                comps[k][s] = v
                if k >= d or forward_ok(k, s):
                    if choose(idx + 1):
                        return True
                del comps[k][s]
            return False

        stop = choose(0)
        comps[k] = {}
        return stop

    # pointed/reduced compatibility is a consequence when both are reduced;
    # base preservation is enforced when both carry explicit bases.
    assign_level(0)
    if x_sset.base is not None and y_sset.base is not None:
        results = [f for f in results if f(0, x_sset.base) == y_sset.base]
    return results


def find_isomorphism(x_sset, y_sset, budget=None):
    """An isomorphism X -> Y of truncations, or None."""
    d = min(x_sset.dim, y_sset.dim)
    for k in range(d + 1):
        if len(x_sset.level(k)) != len(y_sset.level(k)):
            return None
    for f in enumerate_maps(x_sset, y_sset, upto=d, budget=budget):
        if f.is_iso():
            return f
    return None
