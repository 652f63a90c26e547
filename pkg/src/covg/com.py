"""Conditional oriented matroids: signed vectors, axiom checking, flats,
restriction/contraction, and signed-permutation actions.

A signed vector assigns +, - or 0 to every ground element; a conditional
oriented matroid (COM) is a family of signed vectors closed under face
symmetry and strong elimination.  Sign values are the ints +1, -1, 0, and
the canonical order on covectors is lexicographic on the per-element codes
0 -> 0, + -> 1, - -> 2 (two bits per element when packed).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

SIGN_CHARS = {1: "+", -1: "-", 0: "0"}
CHAR_SIGNS = {"+": 1, "-": -1, "0": 0}
CODE_OF_SIGN = {0: 0, 1: 1, -1: 2}


class COMError(Exception):
    pass


class AxiomError(COMError):
    """Raised when a covector family fails the COM axioms."""


@dataclass(frozen=True)
class GroundSet:
    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(str(l) for l in self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise COMError("ground-set labels must be distinct")

    @property
    def size(self):
        return len(self.labels)

    def index(self, label):
        return self.labels.index(str(label))

    def __iter__(self):
        return iter(range(self.size))


class SignedVector:
    """Immutable sign assignment over a ground set, entries in {+1,-1,0}."""

    __slots__ = ("signs",)

    def __init__(self, signs):
        signs = tuple(signs)
        if any(s not in (1, -1, 0) for s in signs):
            raise COMError(f"signs must be +1, -1 or 0, got {signs}")
        object.__setattr__(self, "signs", signs)

    def __setattr__(self, *a):
        raise AttributeError("SignedVector is immutable")

    @classmethod
    def from_string(cls, s):
        try:
            return cls(CHAR_SIGNS[ch] for ch in s)
        except KeyError:
            raise COMError(f"covector string {s!r} must use only '+', '-', '0'")

    def to_string(self):
        return "".join(SIGN_CHARS[s] for s in self.signs)

    def __len__(self):
        return len(self.signs)

    def __getitem__(self, i):
        return self.signs[i]

    def __eq__(self, other):
        return isinstance(other, SignedVector) and self.signs == other.signs

    def __hash__(self):
        return hash(self.signs)

    def __repr__(self):
        return f"SignedVector({self.to_string()!r})"

    def sort_key(self):
        return tuple(CODE_OF_SIGN[s] for s in self.signs)

    def __neg__(self):
        return SignedVector(-s for s in self.signs)

    def support(self):
        return frozenset(i for i, s in enumerate(self.signs) if s)

    def zero_set(self):
        return frozenset(i for i, s in enumerate(self.signs) if not s)

    def is_tope(self):
        return all(self.signs)

    def restrict(self, indices):
        return SignedVector(self.signs[i] for i in indices)


def compose(x, y):
    """x with zeros filled from y: (x o y)(i) = x(i) if nonzero else y(i)."""
    if len(x) != len(y):
        raise COMError("compose needs vectors of equal length")
    return SignedVector(a if a else b for a, b in zip(x.signs, y.signs))


def separator(x, y):
    """Indices where x and y carry opposite nonzero signs."""
    if len(x) != len(y):
        raise COMError("separator needs vectors of equal length")
    return frozenset(i for i, (a, b) in enumerate(zip(x.signs, y.signs)) if a and a == -b)


@dataclass
class AxiomReport:
    face_symmetry_ok: bool
    face_symmetry_witness: tuple | None
    strong_elimination_ok: bool
    strong_elimination_witness: tuple | None

    @property
    def ok(self):
        return self.face_symmetry_ok and self.strong_elimination_ok

    def as_dict(self):
        fs = self.face_symmetry_witness
        se = self.strong_elimination_witness
        return {
            "face_symmetry": {
                "ok": self.face_symmetry_ok,
                "witness": None if fs is None else [fs[0].to_string(), fs[1].to_string()],
            },
            "strong_elimination": {
                "ok": self.strong_elimination_ok,
                "witness": None
                if se is None
                else [se[0].to_string(), se[1].to_string(), se[2]],
            },
            "ok": self.ok,
        }


def _signs_matrix(vectors, n):
    return np.array([v.signs for v in vectors], dtype=np.int8).reshape(len(vectors), n)


_PAIR_CHUNK_ENTRIES = 200_000_000  # face-symmetry scan memory budget, in array cells


def check_axioms(vectors):
    """Check face symmetry and strong elimination for a covector family.

    Returns an AxiomReport; a failing axiom carries the first violating
    witness (X, Y) resp. (X, Y, i) in canonical scan order.
    """
    vectors = sorted(set(vectors), key=SignedVector.sort_key)
    if not vectors:
        return AxiomReport(True, None, True, None)
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise COMError("covectors must all have the same length")
    m = len(vectors)
    V = _signs_matrix(vectors, n)
    if n > 39:
        raise COMError("axiom checking supports at most 39 ground elements")
    pow3 = 3 ** np.arange(n, dtype=np.int64)
    keys = np.sort((V % 3).astype(np.int64) @ pow3)

    # face symmetry: X o -Y must stay in the family, for all ordered pairs
    fs_ok, fs_witness = True, None
    block = max(1, _PAIR_CHUNK_ENTRIES // max(1, m * n))
    for start in range(0, m, block):
        X = V[start : start + block][:, None, :]
        comp = np.where(X != 0, X, -V[None, :, :])
        comp_keys = (comp % 3).astype(np.int64) @ pow3
        present = np.isin(comp_keys, keys)
        if not present.all():
            a, b = np.argwhere(~present)[0]
            fs_ok, fs_witness = False, (vectors[start + a], vectors[b])
            break

    # strong elimination: for i in Sep(X,Y) some Z has Z(i)=0 and Z = X o Y off Sep
    se_ok, se_witness = True, None
    zero = (V == 0).astype(np.float64)
    for b in range(m):
        y = V[b]
        sep = (V == -y[None, :]) & (V != 0)
        rows = np.nonzero(sep.any(axis=1))[0]
        if rows.size == 0:
            continue
        W = np.where(V[rows] != 0, V[rows], y[None, :])
        agree = ((V[None, :, :] == W[:, None, :]) | sep[rows][:, None, :]).all(axis=2)
        counts = agree.astype(np.float64) @ zero
        bad = sep[rows] & (counts < 0.5)
        if bad.any():
            r, i = np.argwhere(bad)[0]
            se_ok, se_witness = False, (vectors[rows[r]], vectors[b], int(i))
            break

    return AxiomReport(fs_ok, fs_witness, se_ok, se_witness)


class COM:
    """A ground set plus a deduplicated, canonically sorted covector family."""

    __slots__ = ("ground", "covectors", "_set", "_signs")

    def __init__(self, ground, covectors, check=True):
        if not isinstance(ground, GroundSet):
            ground = GroundSet(tuple(ground))
        covectors = sorted(set(covectors), key=SignedVector.sort_key)
        if not covectors:
            raise COMError("a COM needs at least one covector")
        if any(len(v) != ground.size for v in covectors):
            raise COMError("covector length does not match ground-set size")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "covectors", tuple(covectors))
        object.__setattr__(self, "_set", frozenset(covectors))
        object.__setattr__(self, "_signs", None)
        if check:
            report = check_axioms(self.covectors)
            if not report.ok:
                raise AxiomError(f"covector family fails the COM axioms: {report.as_dict()}")

    def __setattr__(self, *a):
        raise AttributeError("COM is immutable")

    @classmethod
    def unchecked(cls, ground, covectors):
        """Skip axiom validation; for negative tests and generated families."""
        return cls(ground, covectors, check=False)

    def __contains__(self, v):
        return v in self._set

    def __len__(self):
        return len(self.covectors)

    def __eq__(self, other):
        return (
            isinstance(other, COM)
            and self.ground.labels == other.ground.labels
            and self.covectors == other.covectors
        )

    def __hash__(self):
        return hash((self.ground.labels, self.covectors))

    def __repr__(self):
        return f"COM({len(self)} covectors on {list(self.ground.labels)})"

    def signs_matrix(self):
        if self._signs is None:
            object.__setattr__(self, "_signs", _signs_matrix(self.covectors, self.ground.size))
        return self._signs

    def to_json_dict(self):
        return {
            "ground": list(self.ground.labels),
            "covectors": [v.to_string() for v in self.covectors],
        }

    @classmethod
    def from_json_dict(cls, data, check=True):
        ground = GroundSet(tuple(data["ground"]))
        covectors = [SignedVector.from_string(s) for s in data["covectors"]]
        return cls(ground, covectors, check=check)


def topes(M):
    """Covectors with full support (empty when M has a coloop)."""
    return tuple(v for v in M.covectors if v.is_tope())


def coloops(M):
    """Elements that are zero in every covector."""
    out = set(range(M.ground.size))
    for v in M.covectors:
        out &= v.zero_set()
        if not out:
            break
    return frozenset(out)


@dataclass(frozen=True)
class FlatPoset:
    """The zero sets of covectors, ordered by containment (a meet-semilattice)."""

    flats: tuple  # frozensets of ground indices, sorted by (size, content)

    def __contains__(self, f):
        return frozenset(f) in set(self.flats)

    def __iter__(self):
        return iter(self.flats)

    def __len__(self):
        return len(self.flats)

    @property
    def minimum(self):
        return self.flats[0]

    def covers(self):
        """Cover pairs (f, g) with f properly contained in g and nothing between."""
        out = []
        for f in self.flats:
            for g in self.flats:
                if f < g and not any(f < h < g for h in self.flats):
                    out.append((f, g))
        return out


def flat_poset(M):
    flats = {v.zero_set() for v in M.covectors}
    for f in flats:
        for g in flats:
            if f & g not in flats:
                raise COMError(
                    "flat family is not intersection-closed; the covector family "
                    "cannot satisfy the COM axioms"
                )
    ordered = tuple(sorted(flats, key=lambda f: (len(f), tuple(sorted(f)))))
    poset = FlatPoset(ordered)
    if poset.minimum != coloops(M):
        raise COMError("minimum flat does not equal the coloop set")
    return poset


def _require_flat(M, F):
    F = frozenset(F)
    if F not in {v.zero_set() for v in M.covectors}:
        raise COMError(f"{sorted(F)} is not a flat of this COM")
    return F


def restrict(M, F):
    """Restriction to a flat F: covectors cut down to the coordinates in F."""
    F = _require_flat(M, F)
    keep = [i for i in range(M.ground.size) if i in F]
    ground = GroundSet(tuple(M.ground.labels[i] for i in keep))
    vectors = {v.restrict(keep) for v in M.covectors}
    out = COM(ground, vectors)
    if SignedVector((0,) * len(keep)) not in out:
        raise COMError("restriction to a flat must contain the zero covector")
    return out


def contract(M, F):
    """Contraction at a flat F: covectors vanishing on F, restricted to the rest."""
    F = _require_flat(M, F)
    keep = [i for i in range(M.ground.size) if i not in F]
    ground = GroundSet(tuple(M.ground.labels[i] for i in keep))
    vectors = {v.restrict(keep) for v in M.covectors if F <= v.zero_set()}
    out = COM(ground, vectors)
    if coloops(out):
        raise COMError("a contraction at a flat can never have coloops")
    return out


@dataclass(frozen=True)
class SignedPermutation:
    """A permutation of ground indices with a sign attached to each source index."""

    perm: tuple
    signs: tuple

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "signs", tuple(self.signs))
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise COMError("perm must be a bijection of 0..n-1")
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise COMError("signs must be +1/-1, one per index")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)), (1,) * n)

    def __len__(self):
        return len(self.perm)

    def compose(self, other):
        """self after other: (self * other)(X) = self(other(X))."""
        perm = tuple(self.perm[other.perm[i]] for i in range(len(self)))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(len(self)))
        return SignedPermutation(perm, signs)

    def inverse(self):
        n = len(self)
        perm = [0] * n
        signs = [1] * n
        for i in range(n):
            perm[self.perm[i]] = i
            signs[self.perm[i]] = self.signs[i]
        return SignedPermutation(tuple(perm), tuple(signs))


def act(w, x):
    """Apply a signed permutation to a signed vector: (w.x)(w(i)) = sign_i x(i)."""
    if len(w) != len(x):
        raise COMError("signed permutation and vector sizes differ")
    out = [0] * len(x)
    for i, s in enumerate(x.signs):
        out[w.perm[i]] = w.signs[i] * s
    return SignedVector(out)


def verify_automorphism(M, w):
    """True iff w maps the covector set into itself."""
    return all(act(w, v) in M for v in M.covectors)


@lru_cache(maxsize=256)
def _flats_cached(M):
    return flat_poset(M)


def flats_of(M):
    """Cached flat poset of M."""
    return _flats_cached(M)
