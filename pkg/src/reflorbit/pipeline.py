"""End-to-end orchestration: nice-tuple search, type partitioning, middle
convolution per admissible parameter, inducing to SL2, orbit enumeration,
subgroup recognition, and reporting.

A nice T-tuple is T reflections generating the group whose inverse product
has an eigenvalue lambda != 1 of multiplicity exactly T-2; the search fixes
the first entry to a conjugacy-class representative (every tuple can be
simultaneously conjugated and cyclically rotated into that form, and both
moves preserve niceness and the type) and re-verifies every emitted tuple
independently of the pruning.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from reflorbit.braid import OrbitCapExceeded, orbit, signature
from reflorbit.cyclo import RootOfUnity
from reflorbit.linalg import Mat, eigenvalue_multiset, root_multiplicity_of
from reflorbit.midconv import MatTuple, middle_convolution, tuple_from_text, tuple_to_text
from reflorbit.refgroup import generates, load_catalog
from reflorbit.sl2 import gl2_size, induce, subgroup_id


class SearchCapExceeded(RuntimeError):
    """The tuple enumeration outgrew its cap (incomplete search)."""


@dataclass
class NiceTuple:
    group_id: str
    matrices: MatTuple
    inv_residues: tuple  # sorted residues (Fractions) of the inverse product
    witnesses: dict

    def serialized(self):
        return tuple_to_text(self.matrices)


@dataclass
class TupleType:
    key: tuple  # sorted residue multiset of the inverse product
    members: list
    exemplar: NiceTuple
    label: str = ""
    inverse_key: tuple = ()

    @property
    def self_inverse(self):
        return self.key == self.inverse_key

    def admissible_parameters(self, T):
        """Multiplicity-(T-2) eigenvalues != 1 of the inverse product."""
        counts = {}
        for r in self.key:
            counts[r] = counts.get(r, 0) + 1
        out = []
        for r in sorted(counts):
            if r != 0 and counts[r] == T - 2:
                out.append(RootOfUnity(r.denominator, r.numerator))
        return out


def _inverse_residues(key):
    return tuple(sorted((1 - r) if r != 0 else r for r in key))


def search_nice(entry_or_id, T, cap=5_000_000, progress=None):
    """All nice T-tuples, up to simultaneous conjugation and rotation.

    ``cap`` bounds the number of examined orderings; exceeding it raises
    SearchCapExceeded (incomplete search), as for the rank-4 5-tuple spaces.
    """
    entry = (
        load_catalog(entry_or_id) if isinstance(entry_or_id, str) else entry_or_id
    )
    refl = entry.reflection_set()
    members = list(refl)
    lam_candidates = entry.eigenvalue_candidates(T - 2)
    all_candidates = entry.eigenvalue_candidates(1)
    require_full = entry.id != "G32"  # 5.3.3-style reduction: see ledger
    gen_cache = {}
    found = []
    examined = 0
    classes = sorted({r.class_id for r in members})
    for c in classes:
        rep = next(r for r in members if r.class_id == c)
        pool = [i for i, r in enumerate(members) if r.class_id >= c]
        rep_idx = members.index(rep)
        for combo in itertools.combinations_with_replacement(pool, T - 1):
            examined += 1
            if examined > cap:
                raise SearchCapExceeded(
                    f"search cap {cap} exceeded with {len(found)} tuples found"
                )
            seen_orders = set()
            for perm in itertools.permutations(combo):
                if perm in seen_orders:
                    continue
                seen_orders.add(perm)
                idxs = (rep_idx,) + perm
                prod = members[idxs[0]].element
                for i in idxs[1:]:
                    prod = prod * members[i].element
                cp = prod.charpoly()
                lam_inv = None
                for root in lam_candidates:
                    if root.order == 1:
                        continue
                    if root_multiplicity_of(cp, root) == T - 2:
                        lam_inv = root
                        break
                if lam_inv is None:
                    continue
                key = frozenset(idxs)
                if key not in gen_cache:
                    gen_cache[key] = generates(
                        [members[i].element for i in set(idxs)], entry
                    )
                if not gen_cache[key]:
                    continue
                tup = MatTuple([members[i].element for i in idxs])
                nt = _certify_nice(entry, tup, all_candidates, T, require_full)
                if nt is not None:
                    found.append(nt)
    if progress:
        progress(f"{entry.id} T={T}: {len(found)} nice tuples")
    return found


def _certify_nice(entry, tup, candidates, T, require_full=True):
    """Re-verify all three conditions independently of the search pruning and
    record the witnesses."""
    ident = Mat.identity(tup.field, tup.dim)
    for M in tup:
        if (M - ident).rank() != 1:
            return None
    inv = tup.inverse_product()
    try:
        ms = eigenvalue_multiset(inv, candidates, require_full=True)
    except ValueError:
        if require_full:
            raise
        return None  # spectrum leaves the searched field: excluded case
    residues = []
    for root, mult in ms:
        residues.extend([root.residue] * mult)
    counts = {}
    for r in residues:
        counts[r] = counts.get(r, 0) + 1
    if not any(r != 0 and c == T - 2 for r, c in counts.items()):
        return None
    if not generates(list(tup.entries), entry):
        return None
    return NiceTuple(
        group_id=entry.id,
        matrices=tup,
        inv_residues=tuple(sorted(residues)),
        witnesses={"eigenvalues": ms, "generates": True},
    )


def partition_types(tuples):
    """Group nice tuples by the eigenvalue multiset of the inverse product,
    pair inverse types, pick lexicographically-least exemplars."""
    by_key = {}
    for nt in tuples:
        by_key.setdefault(nt.inv_residues, []).append(nt)
    types = []
    for key in sorted(by_key):
        members = by_key[key]
        exemplar = min(members, key=lambda nt: nt.serialized())
        types.append(
            TupleType(
                key=key,
                members=members,
                exemplar=exemplar,
                inverse_key=_inverse_residues(key),
            )
        )
    for i, t in enumerate(types):
        t.label = _label(i)
    return types


def _label(i):
    out = ""
    i += 1
    while i:
        i, r = divmod(i - 1, 26)
        out = chr(ord("A") + r) + out
    return out


def inverse_pairs(types):
    """Types grouped into inverse pairs (self-paired types stand alone)."""
    by_key = {t.key: t for t in types}
    pairs = []
    seen = set()
    for t in types:
        if t.key in seen:
            continue
        seen.add(t.key)
        partner = by_key.get(t.inverse_key)
        if partner is not None and partner.key != t.key:
            seen.add(partner.key)
            pairs.append((t, partner))
        else:
            pairs.append((t, None))
    return pairs


@dataclass
class ReportRow:
    group: str
    T: int
    type_label: str
    type_key: tuple
    xi: Fraction
    lam: RootOfUnity
    mc: MatTuple
    induced: MatTuple
    character: list
    orbit_size: int
    orbit_complete: bool
    s_size: int
    sl2: object
    identity_collapse: bool = False
    reduced_orbit_size: int = 0
    orbit_obj: object = dataclass_field(default=None, repr=False)

    def columns(self):
        return {
            "group": self.group,
            "T": str(self.T),
            "type": self.type_label,
            "xi": str(self.xi),
            "lambda": f"{self.lam.order}:{self.lam.exponent}",
            "character": ";".join(
                f"{c.field.conductor}:{list(c.coeffs())}" for c in self.character
            ),
            "o_size": ("%d" % self.orbit_size)
            if self.orbit_complete
            else (">=%d" % self.orbit_size),
            "s_size": str(self.s_size),
            "sl2": repr(self.sl2),
            "reduces": "4-tuple" if self.identity_collapse else "",
        }


def convolve_row(entry, ttype, lam, T, orbit_cap=1_000_000):
    """One report row: MC at lambda, GL2 size, induced tuple, orbit, SL2 id."""
    mc = middle_convolution(ttype.exemplar.matrices, lam)
    s_size = gl2_size(mc)
    induced, char = induce(mc)
    collapse = any(M.is_identity() for M in induced)
    reduced_size = 0
    try:
        orb = orbit(induced, cap=orbit_cap)
        osize, complete = orb.size, True
    except OrbitCapExceeded as e:
        orb = e.partial
        osize, complete = orb.size, False
    if collapse and len(induced) == 5:
        reduced = MatTuple([M for M in induced if not M.is_identity()])
        if len(reduced) == 4:
            try:
                reduced_size = orbit(reduced, cap=orbit_cap).size
            except OrbitCapExceeded as e:
                reduced_size = e.partial.size
    return ReportRow(
        group=entry.id,
        T=T,
        type_label=ttype.label,
        type_key=ttype.key,
        xi=lam.residue,
        lam=lam,
        mc=mc,
        induced=induced,
        character=char,
        orbit_size=osize,
        orbit_complete=complete,
        s_size=s_size,
        sl2=subgroup_id(induced),
        identity_collapse=collapse,
        reduced_orbit_size=reduced_size,
        orbit_obj=orb,
    )


def run_group(
    gid,
    T,
    orbit_cap=1_000_000,
    search_cap=5_000_000,
    check_members=25,
    check_inverses=True,
    store=None,
    progress=None,
):
    """Steps 5-10 for one group: rows for each type exemplar and admissible
    parameter, plus the member/inverse-tuple consistency checks."""
    entry = load_catalog(gid) if isinstance(gid, str) else gid
    tuples = search_nice(entry, T, cap=search_cap, progress=progress)
    types = partition_types(tuples)
    rows = []
    for ttype, partner in inverse_pairs(types):
        for lam in ttype.admissible_parameters(T):
            row = convolve_row(entry, ttype, lam, T, orbit_cap=orbit_cap)
            rows.append(row)
            if store is not None:
                store.save_row(row)
            if progress:
                progress(
                    f"{entry.id} T={T} type {ttype.label} xi={row.xi}: "
                    f"orbit {row.orbit_size} s_size {row.s_size}"
                )
        _step9_checks(entry, ttype, partner, T, rows, check_members, check_inverses)
    return rows, types


def _step9_checks(entry, ttype, partner, T, rows, check_members, check_inverses):
    """Other members and the inverse exemplar must land in computed orbits."""
    my_rows = [r for r in rows if r.type_key == ttype.key]
    if check_members:
        sample = ttype.members[:check_members]
        for nt in sample:
            if nt is ttype.exemplar:
                continue
            for row in my_rows:
                mc = middle_convolution(nt.matrices, row.lam)
                ind, _ = induce(mc)
                key = signature(ind.embed_to(row.induced.field)).key()
                if key not in row.orbit_obj.signatures:
                    if row.orbit_complete:
                        raise AssertionError(
                            f"{entry.id} type {ttype.label}: member escaped the "
                            f"exemplar orbit at xi={row.xi}"
                        )
    if check_inverses:
        from reflorbit.braid import same_orbit

        inv_exemplar = (
            partner.exemplar if partner is not None else ttype.exemplar
        )
        for row in my_rows:
            if not row.orbit_complete:
                continue
            # Dettweiler-Reiter inversion: the induced inverse of the row's
            # convolution shares its orbit with the inverse-type exemplar
            # convolved at the inverse parameter
            mc = middle_convolution(inv_exemplar.matrices, row.lam.inverse())
            ind, _ = induce(mc)
            row_inv, _ = induce(row.mc.inverse_tuple())
            if not same_orbit(row_inv, ind):
                raise AssertionError(
                    f"{entry.id} type {ttype.label}: inverse-tuple consistency "
                    f"failed at xi={row.xi}"
                )


def even_sign_patterns(k):
    """Sign vectors of length k with product +1 (the character ambiguity of
    an induced tuple: any two valid characters differ by such a pattern)."""
    out = []
    for bits in range(1 << (k - 1)):
        pattern = [1] * k
        parity = 1
        for i in range(k - 1):
            if (bits >> i) & 1:
                pattern[i] = -1
                parity = -parity
        pattern[k - 1] = parity
        out.append(tuple(pattern))
    return out


def _sign_twists(M):
    for pattern in even_sign_patterns(len(M)):
        yield MatTuple(
            [(-mat if s < 0 else mat) for mat, s in zip(M.entries, pattern)]
        )


def distinct_orbit_count(rows, up_to_characters=True):
    """Number of pairwise-distinct orbits among the rows.

    Orbits are equal iff they share a signature; with ``up_to_characters``
    the comparison also ranges over the even sign patterns of the induced
    tuple, since the inducing character is only canonical up to such a
    twist."""
    groups = []
    for row in rows:
        placed = False
        for g in groups:
            if _same_orbit_rows(g[0], row, up_to_characters):
                g.append(row)
                placed = True
                break
        if not placed:
            groups.append([row])
    return len(groups), groups


def _row_membership(r1, r2, up_to_characters):
    """signature of (a twist of) r2's tuple lies in r1's orbit."""
    f1 = r1.induced.field
    tup = (
        r2.induced
        if r2.induced.field.conductor == f1.conductor
        else r2.induced.embed_to(f1)
        if f1.conductor % r2.induced.field.conductor == 0
        else None
    )
    if tup is None:
        from reflorbit.cyclo import make_field
        from math import lcm as _lcm

        f = make_field(_lcm(f1.conductor, r2.induced.field.conductor))
        return _membership_in(r1, r2, f, up_to_characters)
    variants = _sign_twists(tup) if up_to_characters else [tup]
    for v in variants:
        if signature(v).key() in r1.orbit_obj.signatures:
            return True
    return False


def _membership_in(r1, r2, f, up_to_characters):
    # recompute r1's orbit over the compositum field (rare path)
    orb = orbit(r1.induced.embed_to(f))
    tup = r2.induced.embed_to(f)
    variants = _sign_twists(tup) if up_to_characters else [tup]
    return any(signature(v).key() in orb.signatures for v in variants)


def _same_orbit_rows(r1, r2, up_to_characters=True):
    if r1.orbit_complete or not r2.orbit_complete:
        return _row_membership(r1, r2, up_to_characters)
    return _row_membership(r2, r1, up_to_characters)


# -- result store ---------------------------------------------------------------------


class ResultStore:
    """Append-only directory store: one file per row keyed by the signature
    hash, plus an index TSV updated atomically."""

    def __init__(self, root):
        self.root = root
        os.makedirs(root, exist_ok=True)

    def _dir(self, group, T):
        d = os.path.join(self.root, f"{group}_T{T}")
        os.makedirs(d, exist_ok=True)
        return d

    def row_key(self, row):
        sig = signature(row.induced)
        blob = repr(sig.key()).encode()
        return hashlib.sha256(blob).hexdigest()[:16]

    def save_row(self, row):
        d = self._dir(row.group, row.T)
        key = self.row_key(row)
        path = os.path.join(d, f"{key}.row")
        payload = {
            "columns": row.columns(),
            "mc": tuple_to_text(row.mc),
            "induced": tuple_to_text(row.induced),
        }
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(payload, fh, indent=1)
        os.replace(tmp, path)
        self._update_index(row, key)
        return key

    def _update_index(self, row, key):
        d = self._dir(row.group, row.T)
        index = os.path.join(d, "index.tsv")
        cols = row.columns()
        header = "key\t" + "\t".join(cols) + "\n"
        line = key + "\t" + "\t".join(cols.values()) + "\n"
        existing = ""
        if os.path.exists(index):
            with open(index) as fh:
                existing = fh.read()
        if not existing:
            existing = header
        if key not in existing:
            existing += line
        tmp = index + ".tmp"
        with open(tmp, "w") as fh:
            fh.write(existing)
        os.replace(tmp, index)

    def load_rows(self, group, T):
        d = self._dir(group, T)
        out = []
        for name in sorted(os.listdir(d)):
            if name.endswith(".row"):
                with open(os.path.join(d, name)) as fh:
                    payload = json.load(fh)
                payload["mc"] = tuple_from_text(payload["mc"])
                payload["induced"] = tuple_from_text(payload["induced"])
                out.append(payload)
        return out


def report(rows, fmt="tsv"):
    """Appendix-style table: xi, lambda, matrices, character, sizes."""
    cols = ["group", "T", "type", "xi", "lambda", "character", "o_size",
            "s_size", "sl2", "reduces"]
    if fmt == "tsv":
        lines = ["\t".join(cols)]
        for row in rows:
            c = row.columns()
            lines.append("\t".join(c[k] for k in cols))
        return "\n".join(lines) + "\n"
    if fmt == "md":
        lines = ["| " + " | ".join(cols) + " |",
                 "|" + "---|" * len(cols)]
        for row in rows:
            c = row.columns()
            lines.append("| " + " | ".join(c[k] for k in cols) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
