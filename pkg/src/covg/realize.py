"""Build COMs from rational affine arrangements restricted to open polyhedral
regions, via exact LP feasibility of strict sign systems; plus the braid
family and shipped fixtures.

The LP maximizes a slack t with every strict inequality relaxed to >= t and
t capped at 1; the open system is feasible exactly when the optimum is
positive.  The simplex runs over Fractions with Bland's rule, so there is no
cycling and no tolerance anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from itertools import product

from .com import COM, GroundSet, SignedPermutation, SignedVector
from .config import DEFAULT_LIMITS


class RealizeError(Exception):
    pass


class EmptyRegionError(RealizeError):
    pass


def fraction_to_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class AffineForm:
    """a . x + c with exact rational coefficients."""

    coeffs: tuple
    const: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(v) for v in self.coeffs))
        object.__setattr__(self, "const", Fraction(self.const))

    @property
    def dimension(self):
        return len(self.coeffs)

    def evaluate(self, point):
        return sum((a * x for a, x in zip(self.coeffs, point)), self.const)

    def __neg__(self):
        return AffineForm(tuple(-a for a in self.coeffs), -self.const)

    def to_json_dict(self):
        return {
            "coeffs": [fraction_to_str(a) for a in self.coeffs],
            "const": fraction_to_str(self.const),
        }

    @classmethod
    def from_json_dict(cls, data):
        return cls(tuple(Fraction(s) for s in data["coeffs"]), Fraction(data["const"]))


@dataclass(frozen=True)
class Arrangement:
    """Labeled affine forms plus an open polyhedral region (strict inequalities)."""

    dimension: int
    labels: tuple
    forms: tuple
    region: tuple

    def __post_init__(self):
        if len(self.labels) != len(self.forms):
            raise RealizeError("one label per form")
        if len(set(self.labels)) != len(self.labels):
            raise RealizeError("form labels must be distinct")
        for f in self.forms + self.region:
            if f.dimension != self.dimension:
                raise RealizeError("all forms must share the ambient dimension")

    def to_json_dict(self):
        return {
            "dimension": self.dimension,
            "forms": {l: f.to_json_dict() for l, f in zip(self.labels, self.forms)},
            "region": [f.to_json_dict() for f in self.region],
        }

    @classmethod
    def from_json_dict(cls, data):
        labels = tuple(data["forms"].keys())
        forms = tuple(AffineForm.from_json_dict(d) for d in data["forms"].values())
        region = tuple(AffineForm.from_json_dict(d) for d in data.get("region", []))
        return cls(int(data["dimension"]), labels, forms, region)


# ---------------------------------------------------------------------------
# exact simplex


def _pivot(T, basis, r, c):
    piv = T[r][c]
    T[r] = [x / piv for x in T[r]]
    row_r = T[r]
    for i, row in enumerate(T):
        if i != r and row[c]:
            f = row[c]
            T[i] = [x - f * y for x, y in zip(row, row_r)]
    basis[r] = c


def _optimize(T, basis, cost, ncols):
    """Bland-rule maximization of cost over the current tableau (in place)."""
    m = len(T)
    while True:
        y = [cost[basis[i]] for i in range(m)]
        entering = None
        for j in range(ncols):
            if j in basis:
                continue
            rc = cost[j] - sum(y[i] * T[i][j] for i in range(m))
            if rc > 0:
                entering = j
                break
        if entering is None:
            return "optimal"
        leaving = None
        best = None
        for i in range(m):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][-1] / a
                key = (ratio, basis[i])
                if best is None or key < best:
                    best = key
                    leaving = i
        if leaving is None:
            return "unbounded"
        _pivot(T, basis, leaving, entering)


def simplex_max(A, b, c):
    """Maximize c.x subject to A x = b, x >= 0, over exact rationals.

    Returns (status, value, x) with status 'optimal'|'infeasible'|'unbounded'.
    """
    m, n = len(A), len(c)
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    c = [Fraction(v) for v in c]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]

    # phase 1: artificial basis, maximize minus their sum
    T = [A[i] + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    cost1 = [Fraction(0)] * n + [Fraction(-1)] * m
    _optimize(T, basis, cost1, n + m)
    if sum(T[i][-1] for i in range(m) if basis[i] >= n) != 0:
        return "infeasible", None, None

    # pivot artificials out of the basis; rows that cannot pivot are redundant
    drop = []
    for i in range(m):
        if basis[i] >= n:
            for j in range(n):
                if T[i][j] != 0:
                    _pivot(T, basis, i, j)
                    break
            else:
                drop.append(i)
    if drop:
        T = [row for i, row in enumerate(T) if i not in drop]
        basis = [v for i, v in enumerate(basis) if i not in drop]
    T = [row[:n] + [row[-1]] for row in T]

    status = _optimize(T, basis, c, n)
    if status == "unbounded":
        return "unbounded", None, None
    x = [Fraction(0)] * n
    for i, v in enumerate(basis):
        x[v] = T[i][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return "optimal", value, x


@dataclass
class LPResult:
    feasible: bool
    witness: tuple | None


def lp_strict_feasible(strict, equalities, dimension):
    """Decide whether all strict forms can be made positive on the equality locus.

    Maximizes t subject to form(x) >= t for each strict form, form(x) = 0 for
    each equality, and t <= 1; strictly feasible iff the optimum is positive.
    The witness is an exact rational point.
    """
    strict = list(strict)
    equalities = list(equalities)
    d = dimension
    # columns: u (d) | v (d) | t+ | t- | surplus per strict | cap slack
    nvars = 2 * d + 2 + len(strict) + 1
    tp, tm = 2 * d, 2 * d + 1
    A, b = [], []
    for k, f in enumerate(strict):
        row = [Fraction(0)] * nvars
        for i, a in enumerate(f.coeffs):
            row[i] = a
            row[d + i] = -a
        row[tp] = Fraction(-1)
        row[tm] = Fraction(1)
        row[2 * d + 2 + k] = Fraction(-1)
        A.append(row)
        b.append(-f.const)
    for f in equalities:
        row = [Fraction(0)] * nvars
        for i, a in enumerate(f.coeffs):
            row[i] = a
            row[d + i] = -a
        A.append(row)
        b.append(-f.const)
    row = [Fraction(0)] * nvars
    row[tp], row[tm], row[-1] = Fraction(1), Fraction(-1), Fraction(1)
    A.append(row)
    b.append(Fraction(1))
    c = [Fraction(0)] * nvars
    c[tp], c[tm] = Fraction(1), Fraction(-1)

    status, value, x = simplex_max(A, b, c)
    if status != "optimal" or value <= 0:
        return LPResult(False, None)
    witness = tuple(x[i] - x[d + i] for i in range(d))
    return LPResult(True, witness)


def enumerate_covectors(arr, limits=DEFAULT_LIMITS):
    """All sign vectors of the arrangement whose open cell meets the region.

    Depth-first over sign prefixes; an infeasible prefix prunes its whole
    subtree, which is sound because prefixes only gain constraints.
    """
    m = len(arr.forms)
    if m > limits.max_forms:
        raise RealizeError(f"enumeration capped at {limits.max_forms} forms, got {m}")
    region = list(arr.region)
    if not lp_strict_feasible(region, [], arr.dimension).feasible:
        raise EmptyRegionError("the region is empty")

    found = []
    signs = [0] * m

    def descend(k, strict, eqs):
        if k == m:
            found.append(SignedVector(tuple(signs)))
            return
        form = arr.forms[k]
        for s, add_strict, add_eq in ((1, form, None), (-1, -form, None), (0, None, form)):
            signs[k] = s
            new_strict = strict + [add_strict] if add_strict is not None else strict
            new_eqs = eqs + [add_eq] if add_eq is not None else eqs
            if lp_strict_feasible(new_strict, new_eqs, arr.dimension).feasible:
                descend(k + 1, new_strict, new_eqs)
        signs[k] = 0

    descend(0, region, [])
    return COM(GroundSet(arr.labels), found)


# ---------------------------------------------------------------------------
# braid family


def braid_pairs(n):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def braid_labels(n):
    return tuple(f"{i}{j}" for i, j in braid_pairs(n))


def braid_arrangement(n):
    """Forms x_i - x_j for i < j in R^n, with no region restriction."""
    forms = []
    for i, j in braid_pairs(n):
        coeffs = [Fraction(0)] * n
        coeffs[i - 1] = Fraction(1)
        coeffs[j - 1] = Fraction(-1)
        forms.append(AffineForm(tuple(coeffs), Fraction(0)))
    return Arrangement(n, braid_labels(n), tuple(forms), ())


def ordered_set_partitions(n):
    """All ordered set partitions of 1..n as tuples of blocks (frozensets)."""
    out = []
    for k in range(1, n + 1):
        for assign in product(range(k), repeat=n):
            if set(assign) != set(range(k)):
                continue
            blocks = tuple(
                frozenset(i + 1 for i in range(n) if assign[i] == t) for t in range(k)
            )
            out.append(blocks)
    return out


def braid_covector(n, blocks):
    """Sign vector of an ordered set partition: earlier block means larger coordinate."""
    level = {}
    for depth, block in enumerate(blocks):
        for i in block:
            level[i] = depth
    signs = []
    for i, j in braid_pairs(n):
        if level[i] < level[j]:
            signs.append(1)
        elif level[i] > level[j]:
            signs.append(-1)
        else:
            signs.append(0)
    return SignedVector(signs)


def braid_com(n, check=None, limits=DEFAULT_LIMITS):
    """The COM of the arrangement x_i = x_j; covectors are ordered set partitions.

    Axiom validation is cubic in the covector count, so generated braid COMs
    are validated up to n = 5 by default and constructed unchecked beyond.
    """
    if n < 1:
        raise RealizeError("braid family needs n >= 1")
    if n > limits.max_braid_n:
        raise RealizeError(f"braid family capped at n = {limits.max_braid_n}")
    if check is None:
        check = n <= 5
    covectors = [braid_covector(n, blocks) for blocks in ordered_set_partitions(n)]
    return COM(GroundSet(braid_labels(n)), covectors, check=check)


def braid_automorphism_generators(n):
    """Adjacent transpositions of 1..n acting on the pair ground set.

    Swapping k and k+1 maps the pair (i,j) to (s(i), s(j)); when the images
    arrive out of order the pair flips orientation, hence a -1 sign.
    """
    pairs = braid_pairs(n)
    index = {p: k for k, p in enumerate(pairs)}
    gens = []
    for k in range(1, n):
        s = {i: i for i in range(1, n + 1)}
        s[k], s[k + 1] = k + 1, k
        perm, signs = [], []
        for i, j in pairs:
            a, b = s[i], s[j]
            if a < b:
                perm.append(index[(a, b)])
                signs.append(1)
            else:
                perm.append(index[(b, a)])
                signs.append(-1)
        gens.append(SignedPermutation(tuple(perm), tuple(signs)))
    return gens


# ---------------------------------------------------------------------------
# fixtures

FIXTURE_NAMES = ("figure1", "figure1-rectangle")


def fixture(name, check=True):
    """A COM shipped as data; see data/*.json."""
    files = {"figure1": "figure1.json", "figure1-rectangle": "figure1_rectangle.json"}
    if name not in files:
        raise RealizeError(f"unknown fixture {name!r}; available: {', '.join(FIXTURE_NAMES)}")
    text = resources.files("covg.data").joinpath(files[name]).read_text()
    return COM.from_json_dict(json.loads(text), check=check)
