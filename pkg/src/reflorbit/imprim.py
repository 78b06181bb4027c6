"""Combinatorial model of the imprimitive reflection groups G(m, p, n).

Elements are kept symbolic as (exponent vector, permutation): the element
[a_1, ..., a_n | sigma] is the matrix with zeta_m^(a_i) in position
(i, sigma(i)) and zeros elsewhere.  Multiplication, inversion, eigenvalue
residues, closure and the generating-set criteria all run on small integers;
matrices over a cyclotomic field are produced only on demand.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from reflorbit.cyclo import RootOfUnity, make_field
from reflorbit.linalg import Mat


class CapExceeded(RuntimeError):
    """An enumeration or closure outgrew its cap."""


class UnsupportedConfiguration(ValueError):
    """Reflection configuration outside the implemented classification."""


def compose_perm(p, q):
    """Permutation of the product M_p * M_q: i -> q[p[i]]."""
    return tuple(q[i] for i in p)


def invert_perm(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


@dataclass(frozen=True)
class GpnElement:
    """[a_1, ..., a_n | sigma] in G(m, p, n); exponents live mod m."""

    m: int
    exps: tuple
    perm: tuple

    @classmethod
    def create(cls, m, exps, perm):
        return cls(m, tuple(e % m for e in exps), tuple(perm))

    @classmethod
    def identity(cls, m, n):
        return cls(m, (0,) * n, tuple(range(n)))

    @property
    def n(self):
        return len(self.exps)

    def __mul__(self, other):
        exps = tuple(
            (a + other.exps[s]) % self.m for a, s in zip(self.exps, self.perm)
        )
        return GpnElement(self.m, exps, compose_perm(self.perm, other.perm))

    def inverse(self):
        ip = invert_perm(self.perm)
        exps = tuple((-self.exps[ip[i]]) % self.m for i in range(self.n))
        return GpnElement(self.m, exps, ip)

    def exponent_sum(self):
        return sum(self.exps) % self.m

    def in_group(self, p):
        return self.exponent_sum() % p == 0

    def to_matrix(self, field=None):
        """Matrix with zeta_m^(a_i) at (i, sigma(i))."""
        if field is None:
            field = make_field(self.m if self.m > 1 else 1)
        n = self.n
        c = field.conductor
        if c % self.m != 0:
            raise ValueError(f"field conductor {c} not divisible by m={self.m}")
        step = c // self.m
        zero = field.zero()
        rows = [[zero] * n for _ in range(n)]
        for i, (a, s) in enumerate(zip(self.exps, self.perm)):
            rows[i][s] = field.root(a * step)
        return Mat.from_rows(field, rows)

    def eig_residues(self):
        """Eigenvalue multiset as reduced residues (Fractions in [0, 1)).

        Each cycle (i1 .. ik) of sigma contributes the k-th roots of
        zeta_m^(sum of a_i over the cycle): residues (s + t*m)/(k*m).
        """
        out = []
        seen = [False] * self.n
        for start in range(self.n):
            if seen[start]:
                continue
            k = 0
            s = 0
            i = start
            while not seen[i]:
                seen[i] = True
                s += self.exps[i]
                k += 1
                i = self.perm[i]
            for t in range(k):
                r = Fraction(s + t * self.m, k * self.m)
                out.append(r - (r.numerator // r.denominator))
        out.sort()
        return tuple(out)

    def order(self):
        e = GpnElement.identity(self.m, self.n)
        acc = self
        k = 1
        while acc != e:
            acc = acc * self
            k += 1
        return k


def phi(g):
    """The natural projection G(m, p, n) -> S_n."""
    return g.perm


def group_order(m, p, n):
    return m**n * _factorial(n) // p


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def degrees(m, p, n):
    q = m // p
    return sorted([m * k for k in range(1, n)] + [q * n])


# -- typed reflections ------------------------------------------------------------


@dataclass(frozen=True, order=True)
class TypedReflection:
    """Type 1 generalized transposition s(i, j; a) or Type 2 diagonal s(i; a)."""

    kind: str  # "T1" | "T2"
    i: int
    j: int  # unused for T2 (set to i)
    a: int
    m: int

    @classmethod
    def t1(cls, i, j, a, m):
        if i == j:
            raise ValueError("type 1 needs two distinct indices")
        if j < i:
            i, j, a = j, i, -a  # s(i,j;a) = s(j,i;-a)
        return cls("T1", i, j, a % m, m)

    @classmethod
    def t2(cls, i, a, m):
        if a % m == 0:
            raise ValueError("type 2 needs a nontrivial exponent")
        return cls("T2", i, i, a % m, m)

    def to_element(self, n):
        if self.kind == "T1":
            exps = [0] * n
            exps[self.i] = self.a
            exps[self.j] = (-self.a) % self.m
            perm = list(range(n))
            perm[self.i], perm[self.j] = self.j, self.i
            return GpnElement.create(self.m, exps, perm)
        exps = [0] * n
        exps[self.i] = self.a
        return GpnElement.create(self.m, exps, tuple(range(n)))

    def nontrivial_eigenvalue(self):
        if self.kind == "T1":
            return RootOfUnity(2, 1)
        return RootOfUnity(self.m, self.a)

    def __repr__(self):
        if self.kind == "T1":
            return f"s({self.i + 1},{self.j + 1};{self.a})"
        return f"s({self.i + 1};{self.a})"


def reflections_of(m, p, n):
    """All reflections of G(m, p, n) as TypedReflection values."""
    out = []
    for i, j in itertools.combinations(range(n), 2):
        for a in range(m):
            out.append(TypedReflection.t1(i, j, a, m))
    if p < m:
        for i in range(n):
            for a in range(p, m, p):
                out.append(TypedReflection.t2(i, a, m))
    return out


# -- reflection graph and subgroup identification -------------------------------------


@dataclass(frozen=True)
class ReflectionGraph:
    nodes: tuple
    t1_edges: tuple  # TypedReflection list
    t2_nodes: tuple
    connected: bool
    cycle_count: int  # cyclomatic number E - N + components


def reflection_graph(X):
    t1 = tuple(r for r in X if r.kind == "T1")
    t2 = tuple(r for r in X if r.kind == "T2")
    nodes = set()
    for r in t1:
        nodes.add(r.i)
        nodes.add(r.j)
    for r in t2:
        nodes.add(r.i)
    nodes = tuple(sorted(nodes))
    # union-find over T1 edges, then T2 nodes must be attached
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for r in t1:
        parent[find(r.i)] = find(r.j)
    comps = len({find(v) for v in nodes})
    cyc = len(t1) - len(nodes) + comps
    return ReflectionGraph(nodes, t1, tuple(r.i for r in t2), comps == 1, cyc)


def _cycle_sum(t1_edges):
    """Signed exponent sum around the unique cycle of the T1 multigraph."""
    adj = {}
    for idx, r in enumerate(t1_edges):
        adj.setdefault(r.i, []).append((idx, r.j))
        adj.setdefault(r.j, []).append((idx, r.i))
    deg = {v: len(vs) for v, vs in adj.items()}
    # peel leaves; what remains is the cycle
    alive = set(range(len(t1_edges)))
    changed = True
    while changed:
        changed = False
        for v, d in list(deg.items()):
            if d == 1:
                for idx, w in adj[v]:
                    if idx in alive:
                        alive.discard(idx)
                        deg[v] -= 1
                        deg[w] -= 1
                        changed = True
    cyc = [t1_edges[i] for i in sorted(alive)]
    if not cyc:
        return None
    # walk the cycle, orienting edges along the traversal
    remaining = list(cyc)
    first = remaining.pop(0)
    total = first.a
    start, cur = first.i, first.j
    while cur != start:
        for k, r in enumerate(remaining):
            if r.i == cur:
                total += r.a
                cur = r.j
                remaining.pop(k)
                break
            if r.j == cur:
                total -= r.a
                cur = r.i
                remaining.pop(k)
                break
        else:
            raise UnsupportedConfiguration("cycle walk failed")
    if remaining:
        raise UnsupportedConfiguration("more than one cycle")
    return abs(total)


def delta(X):
    """|sum of cycle exponents| for a connected one-cycle graph, else None."""
    g = reflection_graph([r for r in X if r.kind == "T1"])
    if not g.t1_edges or not g.connected or g.cycle_count != 1:
        return None
    return _cycle_sum(g.t1_edges)


@dataclass(frozen=True)
class Identification:
    """Outcome of the generating-set criteria for a reflection set."""

    group: tuple | None  # (m, p, n) when the subgroup is named exactly
    full: bool  # generates the ambient G(m, p, n)


def identify_subgroup(X, m, p, n):
    """Which imprimitive group a reflection set generates.

    Covers: all-Type-1 sets whose graph is connected with exactly one cycle
    (full iff gcd(delta, m) = 1); sets with exactly one Type-2 reflection
    whose Type-1 graph is connected with one cycle, or is a connected tree.
    Anything else raises UnsupportedConfiguration.
    """
    g = reflection_graph(X)
    if not g.connected:
        raise UnsupportedConfiguration("graph is disconnected")
    t2 = [r for r in X if r.kind == "T2"]
    n1 = len(g.nodes)
    spanning = n1 == n
    if not t2:
        if g.cycle_count != 1:
            raise UnsupportedConfiguration("type-1 graph is not a one-cycle graph")
        d = _cycle_sum(g.t1_edges)
        full = spanning and gcd(d, m) == 1 and p == m
        group = (m, m, n1) if gcd(d, m) == 1 else None
        return Identification(group, full)
    if len(t2) != 1:
        raise UnsupportedConfiguration("more than one type-2 reflection")
    b = t2[0].a
    if g.cycle_count == 1:
        d = _cycle_sum(g.t1_edges)
        m1 = gcd(b, m, d)
        group = (m // m1, gcd(b, m) // m1, n1)
    elif g.cycle_count == 0:
        group = (m // gcd(b, m), 1, n1)
    else:
        raise UnsupportedConfiguration("type-1 graph has several cycles")
    full = spanning and group == (m, p, n)
    return Identification(group, full)


def identify_general(X, m):
    """Subgroup generated by an arbitrary connected reflection set.

    Conjugating by a diagonal matrix built from spanning-tree potentials
    turns every tree edge into s(i, j; 0); the leftover data are the signed
    cycle residuals of the non-tree edges and the Type-2 exponents.  With
    g0 = gcd(m, residuals) and d = gcd(m, type-2 exponents) (both m when
    empty) and c = gcd(g0, d), the group is G(m/c, d/c, #nodes) on its node
    set.  Returns None when the graph is disconnected.  Cross-checked
    against symbolic closures in the test suite.
    """
    t1 = [r for r in X if r.kind == "T1"]
    t2 = [r for r in X if r.kind == "T2"]
    nodes = set()
    for r in t1:
        nodes.update((r.i, r.j))
    for r in t2:
        nodes.add(r.i)
    if not nodes:
        return None
    adj = {}
    for idx, r in enumerate(t1):
        adj.setdefault(r.i, []).append((idx, r.j, r.a))
        adj.setdefault(r.j, []).append((idx, r.i, -r.a))
    start = min(nodes)
    pot = {start: 0}
    used = set()
    stack = [start]
    while stack:
        v = stack.pop()
        for idx, w, a in adj.get(v, ()):
            if w not in pot:
                pot[w] = (pot[v] - a) % m
                used.add(idx)
                stack.append(w)
    if set(pot) != nodes:
        return None
    residuals = [
        (r.a - (pot[r.i] - pot[r.j])) % m
        for idx, r in enumerate(t1)
        if idx not in used
    ]
    g0 = gcd(m, *residuals) if residuals else m
    d = gcd(m, *(r.a for r in t2)) if t2 else m
    c = gcd(g0, d)
    if not t1:
        # pure diagonal set: reducible, acts trivially on permutations
        return ("diagonal", len(nodes))
    return (m // c, d // c, len(nodes))


# -- closure (symbolic) ------------------------------------------------------------


def closure_elements(gens, cap=None):
    """BFS closure of symbolic elements; raises CapExceeded past ``cap``."""
    els = set(gens)
    first = next(iter(els))
    els.add(GpnElement.identity(first.m, first.n))
    frontier = list(els)
    gens = list(gens)
    while frontier:
        new = []
        for g in gens:
            for h in frontier:
                c = g * h
                if c not in els:
                    els.add(c)
                    new.append(c)
                    if cap is not None and len(els) > cap:
                        raise CapExceeded(f"closure exceeded cap {cap}")
        frontier = new
    return els


def generates_group(X, m, p, n, use_closure=False):
    """Exact test that the reflections in X generate G(m, p, n)."""
    if use_closure:
        target = group_order(m, p, n)
        els = closure_elements([r.to_element(n) for r in X], cap=target)
        return len(els) == target
    ident = identify_general(X, m)
    return ident == (m, p, n)


# -- constructive witnesses -----------------------------------------------------------


def _mc_parameter(product, T):
    """Inverse of the smallest-residue nontrivial multiplicity-(T-2)
    eigenvalue of the tuple product."""
    res = product.eig_residues()
    counts = {}
    for r in res:
        counts[r] = counts.get(r, 0) + 1
    for r in sorted(counts):
        if r != 0 and counts[r] == T - 2:
            return RootOfUnity(r.denominator, -r.numerator)
    return None


def construct_nice(m, p, n, T):
    """Explicit nice T-tuple in G(m, p, n) plus its convolution parameter,
    or None when no such tuple exists.  Supported (n, T): (3,3), (3,4),
    (4,4), (4,5)."""
    if (n, T) not in {(3, 3), (3, 4), (4, 4), (4, 5)}:
        raise UnsupportedConfiguration(f"(n, T) = {(n, T)} not supported")
    if m % p != 0:
        raise ValueError("p must divide m")
    refl = None
    if (n, T) == (3, 3):
        if m > 1 and p == 1:
            refl = [
                TypedReflection.t1(1, 2, 1, m),
                TypedReflection.t1(0, 1, 1, m),
                TypedReflection.t2(2, 1, m),
            ]
        elif m > 1 and p == m:
            refl = [
                TypedReflection.t1(1, 2, 1, m),
                TypedReflection.t1(0, 1, 1, m),
                TypedReflection.t1(0, 1, 0, m),
            ]
    elif (n, T) == (3, 4):
        if p == m and m != 3 and m > 1:
            refl = [
                TypedReflection.t1(0, 1, 1, m),
                TypedReflection.t1(0, 1, 0, m),
                TypedReflection.t1(1, 2, 2, m),
                TypedReflection.t1(1, 2, 0, m),
            ]
        elif (p == 1 and gcd(m, 3) == 1 and m > 1) or (p == 3 and p not in (1, m)):
            # order matters: this ordering gives the multiplicity-2 eigenvalue
            refl = [
                TypedReflection.t2(2, m - 3, m),
                TypedReflection.t1(1, 2, -1, m),
                TypedReflection.t1(1, 2, 1, m),
                TypedReflection.t1(0, 1, 0, m),
            ]
    elif (n, T) == (4, 4):
        if p == m and m == 4:
            refl = [
                TypedReflection.t1(0, 3, -1, m),
                TypedReflection.t1(0, 3, 0, m),
                TypedReflection.t1(0, 1, -1, m),
                TypedReflection.t1(1, 2, 0, m),
            ]
        elif p == m and m == 2:
            refl = [
                TypedReflection.t1(0, 3, 1, m),
                TypedReflection.t1(0, 3, 0, m),
                TypedReflection.t1(0, 1, 0, m),
                TypedReflection.t1(1, 2, 0, m),
            ]
    elif (n, T) == (4, 5):
        if p == m and m == 4:
            refl = [
                TypedReflection.t1(0, 1, 1, m),
                TypedReflection.t1(0, 2, 0, m),
                TypedReflection.t1(0, 1, 0, m),
                TypedReflection.t1(1, 2, 1, m),
                TypedReflection.t1(1, 3, 1, m),
            ]
        elif p == m and m == 2:
            refl = [
                TypedReflection.t1(0, 1, 1, m),
                TypedReflection.t1(0, 2, 0, m),
                TypedReflection.t1(0, 1, 0, m),
                TypedReflection.t1(1, 2, 1, m),
                TypedReflection.t1(1, 3, 0, m),
            ]
    if refl is None:
        return None
    prod = _tuple_product(refl, n)
    lam = _mc_parameter(prod, T)
    assert lam is not None, "witness product lost its multiplicity"
    assert generates_group(refl, m, p, n), "witness fails to generate"
    return refl, lam


def _tuple_product(refl, n):
    prod = GpnElement.identity(refl[0].m, n)
    for r in refl:
        prod = prod * r.to_element(n)
    return prod


# -- brute search ------------------------------------------------------------------


def _nice_residue(residues, T):
    """Nontrivial residue of multiplicity exactly T-2, if any."""
    counts = {}
    for r in residues:
        counts[r] = counts.get(r, 0) + 1
    for r, c in counts.items():
        if r != 0 and c == T - 2:
            return r
    return None


def _nice_residue_int(exps, perm, m, T):
    """Integer-only version of the multiplicity-(T-2) test on [exps | perm].

    Eigenvalue residues of a cycle (length L, exponent sum s) are
    (s + t*m)/(L*m); everything is rescaled to the common denominator
    m*lcm(cycle lengths) so the multiset comparison is on small ints.
    """
    n = len(perm)
    cycles = []
    seen = 0
    lens = 1
    for start in range(n):
        if not (seen >> start) & 1:
            L = 0
            s = 0
            i = start
            while not (seen >> i) & 1:
                seen |= 1 << i
                s += exps[i]
                L += 1
                i = perm[i]
            cycles.append((L, s))
            lens = lens * L // gcd(lens, L)
    D = m * lens
    vals = []
    for L, s in cycles:
        f = D // (L * m)
        base = s * f
        step = m * f
        for t in range(L):
            vals.append((base + t * step) % D)
    need = T - 2
    for v in vals:
        if v and vals.count(v) == need:
            return Fraction(v, D)
    return None


def _cycle_count(perm):
    cnt = 0
    seen = 0
    for start in range(len(perm)):
        if not (seen >> start) & 1:
            cnt += 1
            i = start
            while not (seen >> i) & 1:
                seen |= 1 << i
                i = perm[i]
    return cnt


@dataclass(frozen=True)
class _SymTable:
    """Multiplication table of S_n on permutation ids (our composition)."""

    perms: tuple
    index: dict
    mult: tuple
    cycles: tuple


_SYM_CACHE = {}


def _sym_table(n):
    if n in _SYM_CACHE:
        return _SYM_CACHE[n]
    perms = tuple(itertools.permutations(range(n)))
    index = {q: i for i, q in enumerate(perms)}
    mult = tuple(
        tuple(index[compose_perm(a, b)] for b in perms) for a in perms
    )
    cycles = tuple(_cycle_count(q) for q in perms)
    t = _SymTable(perms, index, mult, cycles)
    _SYM_CACHE[n] = t
    return t


@lru_cache(maxsize=None)
def _ordering_patterns(profile):
    """Index orderings of a multiset with the given multiplicity profile,
    slot 0 pinned to the minimal element (covers every rotation class)."""
    items = []
    for sym, count in enumerate(profile):
        items.extend([sym] * count)
    rest = items[1:]
    seen = set()
    out = []
    for q in itertools.permutations(rest):
        if q not in seen:
            seen.add(q)
            out.append((items[0],) + q)
    # translate symbol sequences to positions within the sorted multiset
    starts = []
    pos = 0
    for count in profile:
        starts.append(pos)
        pos += count
    patterns = []
    for order in out:
        used = [0] * len(profile)
        pat = []
        for sym in order:
            pat.append(starts[sym] + used[sym])
            used[sym] += 1
        patterns.append(tuple(pat))
    return tuple(patterns)


def _nice_candidates(m, p, n, T):
    """Yield (ordering, residue, multiset) for every rotation class whose
    product has a nontrivial eigenvalue of multiplicity T-2.

    Sound prunes only: the reflection graph must span and connect all n
    indices (irreducibility), and the product permutation must have at least
    T-2 cycles (each length-L cycle contributes L distinct eigenvalues, so a
    fixed eigenvalue picks up at most one per cycle).
    """
    refl = reflections_of(m, p, n)
    elements = [r.to_element(n) for r in refl]
    sym = _sym_table(n)
    pid = [sym.index[e.perm] for e in elements]
    exps = [e.exps for e in elements]
    masks = [
        (1 << r.i) | (1 << r.j if r.kind == "T1" else 1 << r.i) for r in refl
    ]
    full = (1 << n) - 1
    mult_tab = sym.mult
    cyc = sym.cycles
    perms = sym.perms
    need = T - 2
    nrefl = len(refl)
    for combo in itertools.combinations_with_replacement(range(nrefl), T):
        # spanning connectivity over node bitmasks
        comp = masks[combo[0]]
        pending = [masks[i] for i in combo[1:]]
        grew = True
        while grew and pending:
            grew = False
            for k, mk in enumerate(pending):
                if comp & mk:
                    comp |= mk
                    del pending[k]
                    grew = True
                    break
        if pending or comp != full:
            continue
        # multiplicity profile -> cached ordering patterns
        profile = []
        prev = None
        for i in combo:
            if i == prev:
                profile[-1] += 1
            else:
                profile.append(1)
                prev = i
        patterns = _ordering_patterns(tuple(profile))
        pp = [pid[i] for i in combo]
        for pat in patterns:
            q = pp[pat[0]]
            for s in pat[1:]:
                q = mult_tab[q][pp[s]]
            if cyc[q] < need:
                continue
            # compose exponent vectors along the ordering
            acc = exps[combo[pat[0]]]
            qid = pp[pat[0]]
            for s in pat[1:]:
                idx = combo[s]
                b = exps[idx]
                ap = perms[qid]
                acc = tuple((a + b[t]) % m for a, t in zip(acc, ap))
                qid = mult_tab[qid][pp[s]]
            lam = _nice_residue_int(acc, perms[qid], m, T)
            if lam is not None:
                yield tuple(refl[combo[s]] for s in pat), lam, tuple(
                    refl[i] for i in combo
                )


def brute_nice_search(m, p, n, T, cap=200_000):
    """Exhaustive nice-tuple enumeration in G(m, p, n), orderings up to
    cyclic rotation (both generation and the product spectrum are rotation
    invariant).  Used as the oracle for the constructive theorems."""
    if group_order(m, p, n) > cap:
        raise CapExceeded(f"|G({m},{p},{n})| exceeds cap {cap}")
    gen_cache = {}
    found = []
    for order, lam, multiset in _nice_candidates(m, p, n, T):
        key = frozenset(multiset)
        if key not in gen_cache:
            gen_cache[key] = generates_group(list(set(multiset)), m, p, n)
        if gen_cache[key]:
            found.append((list(order), lam))
    return found


def exists_nice(m, p, n, T, cap=200_000):
    """Existence-only wrapper around brute_nice_search (early exit)."""
    if group_order(m, p, n) > cap:
        raise CapExceeded(f"|G({m},{p},{n})| exceeds cap {cap}")
    gen_cache = {}
    for order, lam, multiset in _nice_candidates(m, p, n, T):
        key = frozenset(multiset)
        if key not in gen_cache:
            gen_cache[key] = generates_group(list(set(multiset)), m, p, n)
        if gen_cache[key]:
            return True
    return False
