"""Desk-scale regularity oracle for binomial edge ideals.

The quotient by the binomial edge ideal of a graph on n vertices lives
in 2n variables x_0..x_{n-1}, y_0..y_{n-1} (variable index i is x_i,
n+i is y_i).  Under the lexicographic order x_0 > ... > x_{n-1} > y_0 >
... > y_{n-1} the initial ideal is squarefree and generated by one
monomial per label-valid path: a simple path from i to j (i < j), each
of whose interior vertices is either < i or > j, contributes
x_i * y_j * prod(x_k for interior k > j) * prod(y_k for interior k < i).
Regularity transfers across this squarefree degeneration; that single
external fact is the oracle's one trust point, and the acceptance suite
stress-tests it against independently known values.

Regularity of the squarefree monomial ideal is then read off reduced
simplicial homology of induced subcomplexes of its Stanley-Reisner
complex: reg = max(t + 1) over vertex subsets W and degrees t with
nonzero reduced homology of the restriction to W.  Homology is computed
exactly over GF(2) and GF(3) via boundary-matrix ranks; the two fields
must agree or an error is raised.

Disconnected graphs are handled component by component (the quotient is
a tensor product over disjoint variable sets, so regularity adds and
witnesses join), which also keeps the per-scan variable count at
2 * (component size).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import FieldDisagreementError, ResourceLimitError
from .graphs import Graph, bits, popcount
from .rank_modp import rank_gf2, rank_modp

DEFAULT_COMPONENT_CAP = 8
DEFAULT_VAR_CAP = 16
DEFAULT_FIELDS = (2, 3)

_POP16 = None


def _pop_table() -> np.ndarray:
    global _POP16
    if _POP16 is None:
        bytes16 = np.arange(1 << 16, dtype=">u2").view(np.uint8).reshape(-1, 2)
        _POP16 = np.unpackbits(bytes16, axis=1).sum(axis=1).astype(np.uint8)
    return _POP16


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# -- squarefree monomial ideals -------------------------------------------


def minimalize(masks: Iterable[int]) -> tuple[int, ...]:
    """Minimal elements of a set of support bitmasks under divisibility."""
    ordered = sorted(set(masks), key=lambda m: (popcount(m), m))
    kept: list[int] = []
    for m in ordered:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SquarefreeIdeal:
    """Minimal squarefree monomial generators, as variable bitmasks."""

    num_vars: int
    gens: tuple[int, ...]

    @classmethod
    def from_supports(cls, num_vars: int, supports: Iterable[Iterable[int]]) -> "SquarefreeIdeal":
        masks = []
        for sup in supports:
            m = 0
            for v in sup:
                if not 0 <= v < num_vars:
                    raise ValueError(f"variable index {v} out of range")
                m |= 1 << v
            if m == 0:
                raise ValueError("empty generator (unit ideal) not supported")
            masks.append(m)
        return cls(num_vars, minimalize(masks))

    def supports(self) -> list[tuple[int, ...]]:
        return [tuple(bits(m)) for m in self.gens]


def variable_name(idx: int, n: int) -> str:
    return f"x{idx}" if idx < n else f"y{idx - n}"


# -- initial ideal of the binomial edge ideal ------------------------------


def label_valid_path_monomials(g: Graph) -> set[int]:
    """Monomial bitmasks of every label-valid simple path of g."""
    n = g.n
    out: set[int] = set()
    for i in range(n):
        low = (1 << i) - 1  # vertices < i
        for j in range(i + 1, n):
            high = g.full_mask() & ~((1 << (j + 1)) - 1)  # vertices > j
            allowed = low | high

            def walk(cur: int, visited: int, interior: int) -> None:
                if g.adj[cur] >> j & 1:
                    mono = 1 << i | 1 << (n + j)
                    mono |= interior & high
                    for k in bits(interior & low):
                        mono |= 1 << (n + k)
                    out.add(mono)
                for nxt in bits(g.adj[cur] & allowed & ~visited):
                    walk(nxt, visited | 1 << nxt, interior | 1 << nxt)

            walk(i, 1 << i, 0)
    return out


def initial_ideal(g: Graph, max_vertices: int = DEFAULT_COMPONENT_CAP) -> SquarefreeIdeal:
    """Squarefree initial ideal of the binomial edge ideal of g.

    Enumerates all label-valid simple paths and minimalizes; shortcut
    monomials divide longer ones, so this equals the minimal generating
    set without needing a path-minimality test.
    """
    if g.n > max_vertices:
        raise ResourceLimitError(
            f"initial ideal capped at {max_vertices} vertices (got {g.n})"
        )
    return SquarefreeIdeal(2 * g.n, minimalize(label_valid_path_monomials(g)))


# -- induced subcomplex homology -------------------------------------------


def _faces_by_size(local_gens: list[int], k: int) -> list[np.ndarray]:
    """Faces of the complex on k vertices avoiding every generator.

    Returns arrays of face bitmasks grouped by face size (index 0 holds
    the empty face); each array ascends, so orderings are reproducible.
    """
    idx = np.arange(1 << k, dtype=np.uint32)
    nonface = np.zeros(1 << k, dtype=bool)
    for cg in local_gens:
        nonface |= (idx & cg) == cg
    faces = idx[~nonface]
    pops = _pop_table()[faces]
    top = int(pops.max()) if faces.size else 0
    return [faces[pops == s] for s in range(top + 1)]


def _chain_ranks(by_size: list[np.ndarray], fields: tuple[int, ...]) -> dict[int, list[int]]:
    """Rank of each boundary map (size-s faces -> size-(s-1) faces) per field."""
    ranks = {p: [0] * (len(by_size) + 1) for p in fields}
    odd = [p for p in fields if p != 2]
    for s in range(1, len(by_size)):
        lower = {int(m): c for c, m in enumerate(by_size[s - 1])}
        upper = by_size[s]
        if upper.size == 0 or not lower:
            continue
        gf2_rows = [] if 2 in fields else None
        signed = np.zeros((upper.size, len(lower)), dtype=np.int8) if odd else None
        for r, fm in enumerate(upper):
            fm = int(fm)
            row = 0
            for pos, b in enumerate(bits(fm)):
                col = lower[fm ^ (1 << b)]
                if signed is not None:
                    signed[r, col] = 1 if pos % 2 == 0 else -1
                row |= 1 << col
            if gf2_rows is not None:
                gf2_rows.append(row)
        if gf2_rows is not None:
            ranks[2][s] = rank_gf2(gf2_rows)
        for p in odd:
            ranks[p][s] = rank_modp(signed, p)
    return ranks


def _reduced_homology(by_size: list[np.ndarray], fields: tuple[int, ...]) -> dict[int, dict[int, int]]:
    """Reduced homology dimensions {field: {degree t: dim}}, t from -1."""
    ranks = _chain_ranks(by_size, fields)
    out: dict[int, dict[int, int]] = {}
    for p in fields:
        dims = {}
        for s, faces in enumerate(by_size):
            r_s = ranks[p][s]
            r_next = ranks[p][s + 1] if s + 1 < len(ranks[p]) else 0
            dims[s - 1] = int(faces.size) - r_s - r_next
        out[p] = dims
    return out


def _compress(gens: Iterable[int], wmask: int) -> tuple[list[int], int]:
    wbits = list(bits(wmask))
    pos = {b: i for i, b in enumerate(wbits)}
    local = [sum(1 << pos[b] for b in bits(g)) for g in gens]
    return local, len(wbits)


def homology_dims(ideal: SquarefreeIdeal, w: Iterable[int], p: int) -> dict[int, int]:
    """Reduced homology dimensions of the Stanley-Reisner complex of
    ``ideal`` restricted to the variable subset ``w``, over GF(p).

    Keys run from -1 (the empty complex {()} reports dimension 1 there)
    to the dimension of the restricted complex.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    wmask = 0
    for v in w:
        if not 0 <= v < ideal.num_vars:
            raise ValueError(f"variable index {v} out of range")
        wmask |= 1 << v
    contained = [g for g in ideal.gens if g & ~wmask == 0]
    local, k = _compress(contained, wmask)
    return _reduced_homology(_faces_by_size(local, k), (p,))[p]


# -- regularity of squarefree ideals ---------------------------------------


def _scan_ideal(
    ideal: SquarefreeIdeal, fields: tuple[int, ...]
) -> dict[int, tuple[int, int, int]]:
    """Max (t+1) over induced subcomplexes, per field.

    Returns {field: (value, witness_mask, witness_degree)}.  Subsets are
    scanned by descending size, ascending variable tuple; only subsets
    equal to the union of their contained generators can carry homology
    (anything else has a cone vertex), and a subset of size s cannot
    beat a value of s - 1, which bounds the scan.
    """
    best = {p: (0, 0, -1) for p in fields}
    gens = ideal.gens
    if not gens:
        return best
    nv = ideal.num_vars
    for size in range(nv, 0, -1):
        if size - 1 <= min(b[0] for b in best.values()):
            break
        for combo in combinations(range(nv), size):
            wmask = 0
            for v in combo:
                wmask |= 1 << v
            contained = [g for g in gens if g & ~wmask == 0]
            if not contained:
                continue
            support = 0
            for g in contained:
                support |= g
            if support != wmask:
                continue  # cone vertex: acyclic
            local, k = _compress(contained, wmask)
            by_size = _faces_by_size(local, k)
            top_value = len(by_size) - 1  # value <= max face size
            todo = tuple(p for p in fields if top_value > best[p][0])
            if not todo:
                continue
            dims = _reduced_homology(by_size, todo)
            for p in todo:
                for t in sorted(dims[p], reverse=True):
                    if dims[p][t] > 0 and t + 1 > best[p][0]:
                        best[p] = (t + 1, wmask, t)
                        break
    return best


def regularity_squarefree(
    ideal: SquarefreeIdeal, p: int, max_vars: int = DEFAULT_VAR_CAP
) -> "RegularityResult":
    """Regularity of the quotient by a squarefree monomial ideal over GF(p)."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if ideal.num_vars > max_vars:
        raise ResourceLimitError(
            f"subset scan capped at {max_vars} variables (got {ideal.num_vars})"
        )
    if max_vars > DEFAULT_VAR_CAP:
        warnings.warn(
            f"variable cap raised to {max_vars}; the subset scan is exponential",
            RuntimeWarning,
            stacklevel=2,
        )
    value, wmask, t = _scan_ideal(ideal, (p,))[p]
    return RegularityResult(value, frozenset(bits(wmask)), t, (p,), True)


# -- regularity of binomial edge ideals ------------------------------------


@dataclass(frozen=True)
class RegularityResult:
    """Regularity value with a reproducible homology witness.

    ``witness_vars`` is a variable subset W and ``witness_degree`` a
    degree t with nonzero reduced homology of the induced subcomplex on
    W; value = t + 1.  The zero witness is (empty W, degree -1).
    """

    value: int
    witness_vars: frozenset[int]
    witness_degree: int
    fields_used: tuple[int, ...]
    agreement: bool


def require_field_agreement(values_by_prime: dict[int, int]) -> None:
    """Raise with every per-field value on disagreement; never pick one."""
    if len(set(values_by_prime.values())) > 1:
        raise FieldDisagreementError(values_by_prime)


@lru_cache(maxsize=None)
def _component_regularity(
    g: Graph, fields: tuple[int, ...], cap: int
) -> tuple[int, int, int]:
    """(value, witness_mask, witness_degree) for a connected graph."""
    ideal = initial_ideal(g, max_vertices=cap)
    best = _scan_ideal(ideal, fields)
    require_field_agreement({p: best[p][0] for p in fields})
    value, wmask, t = best[fields[0]]
    return value, wmask, t


def regularity_bei(
    g: Graph,
    fields: tuple[int, ...] = DEFAULT_FIELDS,
    component_cap: int = DEFAULT_COMPONENT_CAP,
) -> RegularityResult:
    """Regularity of the quotient by the binomial edge ideal of g.

    Computed per connected component (values add; witnesses join with
    degrees t = sum(t_i + 1) - 1) over every requested field.  The cap
    applies to each component's vertex count.
    """
    for p in fields:
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
    if component_cap > DEFAULT_COMPONENT_CAP:
        warnings.warn(
            f"component cap raised to {component_cap}; scans grow as 4^n",
            RuntimeWarning,
            stacklevel=2,
        )
    total = 0
    witness: set[int] = set()
    for comp_mask in g.component_masks():
        outside = g.full_mask() & ~comp_mask
        sub = g.induced_delete(bits(outside))
        back = g.deletion_map(bits(outside))
        if sub.n > component_cap:
            raise ResourceLimitError(
                f"component with {sub.n} vertices exceeds cap {component_cap}"
            )
        value, wmask, _t = _component_regularity(sub, tuple(fields), component_cap)
        total += value
        for v in bits(wmask):
            witness.add(back[v] if v < sub.n else g.n + back[v - sub.n])
    return RegularityResult(total, frozenset(witness), total - 1, tuple(fields), True)
