"""Partially symmetric tensors and their eigenscheme matrices.

A partially symmetric tensor on P^n of order d is an (n+1)-tuple of
homogeneous degree-(d-1) forms (g_0,...,g_n).  Its eigenscheme is cut out
by the 2x2 minors of the matrix pairing the coordinate row (x_0,...,x_n)
with the slice row (g_0,...,g_n).  A symmetric tensor is the gradient
case g_i = d_i f for a single degree-d form f.
"""

from __future__ import annotations

from itertools import combinations

from .multipoly import Polynomial
from .rationals import rational


class PartialSymTensor:
    """An (n+1)-tuple of degree-(d-1) forms in n+1 variables."""

    __slots__ = ("n", "d", "slices")

    def __init__(self, n: int, d: int, slices):
        if n < 2 or d < 2:
            raise ValueError("need n >= 2 and d >= 2")
        slices = list(slices)
        if len(slices) != n + 1:
            raise ValueError(f"expected {n + 1} slices, got {len(slices)}")
        for g in slices:
            if g.nvars != n + 1:
                raise ValueError("slice has wrong variable count")
            if not g.is_zero() and (not g.is_homogeneous() or g.degree() != d - 1):
                raise ValueError(f"slice {g!r} is not homogeneous of degree {d - 1}")
        self.n = n
        self.d = d
        self.slices = slices

    def __eq__(self, other):
        return (
            isinstance(other, PartialSymTensor)
            and (self.n, self.d) == (other.n, other.d)
            and self.slices == other.slices
        )

    def scale(self, c) -> "PartialSymTensor":
        return PartialSymTensor(self.n, self.d, [g * c for g in self.slices])

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self.slices)

    def matrix(self, deleted=()) -> "EigenMatrix":
        return EigenMatrix(self, deleted)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "kind": "partial",
            "slices": [g.to_json() for g in self.slices],
        }

    def __repr__(self):
        return f"PartialSymTensor(n={self.n}, d={self.d})"


class SymmetricTensor:
    """A single degree-d form; its tensor slices are the partial derivatives."""

    __slots__ = ("n", "d", "f")

    def __init__(self, f: Polynomial):
        if f.is_zero() or not f.is_homogeneous():
            raise ValueError("need a nonzero homogeneous form")
        self.f = f
        self.n = f.nvars - 1
        self.d = f.degree()
        if self.n < 2 or self.d < 2:
            raise ValueError("need n >= 2 and d >= 2")

    def to_partial(self) -> PartialSymTensor:
        grads = [self.f.partial_derivative(i) for i in range(self.n + 1)]
        return PartialSymTensor(self.n, self.d, grads)

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "kind": "symmetric", "f": self.f.to_json()}

    def __repr__(self):
        return f"SymmetricTensor(n={self.n}, d={self.d})"


class EigenMatrix:
    """The 2-row eigenscheme matrix, possibly with deleted columns.

    Column j pairs x_j with g_j; deleting columns yields the matrices whose
    minors cut out the determinantal curves (one deletion) and surfaces
    (two deletions).
    """

    __slots__ = ("tensor", "deleted")

    def __init__(self, tensor: PartialSymTensor, deleted=()):
        deleted = tuple(sorted(set(deleted)))
        if len(deleted) > 2:
            raise ValueError("at most two columns may be deleted")
        for i in deleted:
            if not 0 <= i <= tensor.n:
                raise IndexError(f"deleted column {i} out of range")
        self.tensor = tensor
        self.deleted = deleted

    @property
    def columns(self):
        return [j for j in range(self.tensor.n + 1) if j not in self.deleted]

    def __repr__(self):
        return f"EigenMatrix(n={self.tensor.n}, deleted={self.deleted})"


def minor_ideal_generators(m: EigenMatrix) -> list[Polynomial]:
    """The 2x2 minors x_i g_j - x_j g_i over retained column pairs i < j."""
    cols = m.columns
    if len(cols) < 2:
        raise ValueError("need at least two columns to form minors")
    t = m.tensor
    nv = t.n + 1
    gens = []
    for i, j in combinations(cols, 2):
        xi = Polynomial.variable(i, nv)
        xj = Polynomial.variable(j, nv)
        gens.append(xi * t.slices[j] - xj * t.slices[i])
    return gens


def fermat_tensor(n: int, d: int) -> SymmetricTensor:
    """The Fermat form x_0^d + ... + x_n^d."""
    if n < 2 or d < 3:
        raise ValueError("need n >= 2 and d >= 3")
    nv = n + 1
    terms = {}
    for i in range(nv):
        mono = tuple(d if k == i else 0 for k in range(nv))
        terms[mono] = rational(1)
    return SymmetricTensor(Polynomial(nv, terms))


def degenerate_shift(t: PartialSymTensor, h: Polynomial) -> PartialSymTensor:
    """Shift slices by (x_0 h, ..., x_n h); the minor ideal is unchanged.

    h must be homogeneous of degree d-2 (or zero).
    """
    if h.nvars != t.n + 1:
        raise ValueError("h has wrong variable count")
    if not h.is_zero() and (not h.is_homogeneous() or h.degree() != t.d - 2):
        raise ValueError(f"h must be homogeneous of degree {t.d - 2}")
    nv = t.n + 1
    shifted = [t.slices[i] + Polynomial.variable(i, nv) * h for i in range(nv)]
    return PartialSymTensor(t.n, t.d, shifted)


def degenerate_tensor(n: int, d: int, h: Polynomial) -> PartialSymTensor:
    """The tensor (x_0 h, ..., x_n h); every eigenscheme minor vanishes."""
    zero = [Polynomial.zero(n + 1)] * (n + 1)
    return degenerate_shift(PartialSymTensor(n, d, zero), h)


def tensor_from_json(data: dict):
    kind = data.get("kind", "partial")
    if kind == "symmetric":
        return SymmetricTensor(Polynomial.from_json(data["f"]))
    if kind == "partial":
        n, d = int(data["n"]), int(data["d"])
        slices = [Polynomial.from_json(s) for s in data["slices"]]
        return PartialSymTensor(n, d, slices)
    raise ValueError(f"unknown tensor kind {kind!r}")
