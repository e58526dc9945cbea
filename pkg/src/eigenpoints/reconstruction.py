"""Reconstructing tensors from prescribed eigenpoint configurations.

Requiring the eigenscheme minors to vanish at given points is linear in
the tensor's coefficients, so all tensors whose eigenscheme contains a
point set form the kernel of an explicit matrix over the tensor-space
basis.  That kernel always contains the degenerate tensors (x_0 h, ...,
x_n h), which never move the minors; a configuration is an eigenscheme
precisely when some kernel element beyond that subspace forward-solves
to exactly the given points.  The same machinery embeds small general
point sets into full eigenschemes.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import comb

import numpy as np

from .configuration import subset_on_hypersurface
from .counts import expected_count
from .exact_linalg import ExactMatrix
from .multipoly import Polynomial
from .points import PointSet
from .rationals import ZERO, rational
from .solver import eigenpoints
from .tensors import PartialSymTensor, SymmetricTensor


class TensorSpaceBasis:
    """Coordinates on (n+1)-tuples of degree-(d-1) forms.

    Slice i occupies the block i*M..(i+1)*M-1 where M is the number of
    degree-(d-1) monomials in graded-lex descending order.
    """

    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        self.monomials = _monomials(n + 1, d - 1)
        self.block = len(self.monomials)
        self.dimension = (n + 1) * self.block
        self._index = {m: k for k, m in enumerate(self.monomials)}

    def index(self, slice_i: int, mono: tuple) -> int:
        return slice_i * self.block + self._index[mono]

    def tensor_to_vector(self, t: PartialSymTensor):
        if (t.n, t.d) != (self.n, self.d):
            raise ValueError("tensor does not match this basis")
        v = [ZERO] * self.dimension
        for i, g in enumerate(t.slices):
            for mono, c in g.terms.items():
                v[self.index(i, mono)] = c
        return v

    def vector_to_tensor(self, v) -> PartialSymTensor:
        nv = self.n + 1
        slices = []
        for i in range(nv):
            terms = {}
            for k, mono in enumerate(self.monomials):
                c = v[i * self.block + k]
                if c != 0:
                    terms[mono] = c
            slices.append(Polynomial(nv, terms))
        return PartialSymTensor(self.n, self.d, slices)


def _monomials(nvars: int, e: int):
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for a in range(remaining, -1, -1):
            rec(prefix + (a,), remaining - a, slots - 1)

    rec((), e, nvars)
    return out


class KernelReport:
    """Kernel of the point-containment conditions on tensor space."""

    def __init__(
        self,
        basis,
        kernel_vectors,
        degenerate_dim,
        symmetric,
        sym_dim,
        numeric,
        rationalized=False,
    ):
        self.basis = basis
        self.kernel_vectors = kernel_vectors
        self.dimension = len(kernel_vectors)
        self.degenerate_dimension = degenerate_dim
        self.contains_proper_tensor = self.dimension > degenerate_dim
        self.symmetric = symmetric
        self.symmetric_subspace_dimension = sym_dim
        self.numeric = numeric
        # numeric kernels of real configurations are rational subspaces;
        # when the echelon basis rationalizes and re-verifies, exact
        # operations (membership, witness draws) become available
        self.rationalized = rationalized

    @property
    def exact_vectors_available(self) -> bool:
        return not self.numeric or self.rationalized

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "degenerateDimension": self.degenerate_dimension,
            "containsProperTensor": self.contains_proper_tensor,
            "symmetric": self.symmetric,
            "symmetricSubspaceDimension": self.symmetric_subspace_dimension,
            "numeric": self.numeric,
            "rationalized": self.rationalized,
        }


def containment_system(points, n: int, d: int) -> ExactMatrix:
    """One row per (point, column pair): the minor evaluated at the point.

    The kernel of this matrix is the space of tensors whose eigenscheme
    contains every given point.  Exact rational coordinates required.
    """
    basis = TensorSpaceBasis(n, d)
    rows = []
    for p in _point_list(points, n):
        if not p.exact:
            raise ValueError("containment_system needs exact rational points")
        coords = list(p.coords)
        mono_vals = [_mono_value(coords, m) for m in basis.monomials]
        for i, j in combinations(range(n + 1), 2):
            row = [ZERO] * basis.dimension
            xi, xj = coords[i], coords[j]
            for k in range(basis.block):
                mv = mono_vals[k]
                if mv == 0:
                    continue
                if xi != 0:
                    row[basis.index(j, basis.monomials[k])] = xi * mv
                if xj != 0:
                    row[basis.index(i, basis.monomials[k])] = -xj * mv
            rows.append(row)
    if not rows:
        # no conditions: the kernel is all of tensor space
        rows = [[ZERO] * basis.dimension]
    return ExactMatrix(rows)


def _mono_value(coords, mono):
    val = rational(1)
    for c, e in zip(coords, mono):
        if e:
            val = val * c**e
    return val


def _point_list(points, n):
    if isinstance(points, PointSet):
        if points.n != n:
            raise ValueError("point set has wrong ambient dimension")
        return list(points)
    return list(points)


def degenerate_subspace(n: int, d: int):
    """Vectors of the tensors (x_0 h, ..., x_n h), h of degree d-2."""
    basis = TensorSpaceBasis(n, d)
    out = []
    nv = n + 1
    for h_mono in _monomials(nv, d - 2):
        v = [ZERO] * basis.dimension
        for i in range(nv):
            mono = tuple(e + (1 if k == i else 0) for k, e in enumerate(h_mono))
            v[basis.index(i, mono)] = rational(1)
        out.append(v)
    return out


def _symmetry_rows(basis: TensorSpaceBasis):
    """Exactness conditions d_j g_i = d_i g_j as rows over tensor space."""
    n, d = basis.n, basis.d
    nv = n + 1
    rows = []
    for i, j in combinations(range(nv), 2):
        for mu in _monomials(nv, d - 2):
            row = [ZERO] * basis.dimension
            m_i = tuple(e + (1 if k == j else 0) for k, e in enumerate(mu))
            m_j = tuple(e + (1 if k == i else 0) for k, e in enumerate(mu))
            row[basis.index(i, m_i)] = rational(mu[j] + 1)
            row[basis.index(j, m_j)] = row[basis.index(j, m_j)] - rational(mu[i] + 1)
            rows.append(row)
    return rows


def eigenscheme_kernel(points, n: int, d: int, symmetric: bool = False) -> KernelReport:
    """All tensors whose eigenscheme contains the points, as a kernel report.

    With the symmetric flag the kernel is intersected with the exactness
    subspace (tuples that are gradients); the degenerate dimension is then
    the dimension of the degenerate tensors surviving that intersection.
    """
    pts = _point_list(points, n)
    basis = TensorSpaceBasis(n, d)
    if pts and not all(p.exact for p in pts):
        return _numeric_kernel(pts, basis, symmetric)
    matrix = containment_system(pts, n, d)
    sym_dim = None
    if symmetric:
        rows = matrix.entries + _symmetry_rows(basis)
        matrix = ExactMatrix(rows)
    kernel = matrix.right_kernel()
    if symmetric:
        sym_dim = len(kernel)
        degenerate_dim = _span_intersection_dim(degenerate_subspace(n, d), kernel)
    else:
        degenerate_dim = comb(n + d - 2, n)
    return KernelReport(basis, kernel, degenerate_dim, symmetric, sym_dim, numeric=False)


def _numeric_kernel(pts, basis: TensorSpaceBasis, symmetric: bool) -> KernelReport:
    """Floating-point mirror: SVD rank decisions, flagged numeric.

    A real configuration's kernel is a subspace defined over Q, so its
    reduced row echelon basis has rational entries; we recover them by
    continued fractions and re-verify against the matrix.  When that
    succeeds the report carries exact vectors despite the numeric route.
    """
    n, d = basis.n, basis.d
    rows = []
    for p in pts:
        coords = list(p.as_complex())
        mono_vals = [_mono_value_c(coords, m) for m in basis.monomials]
        for i, j in combinations(range(n + 1), 2):
            row = [0j] * basis.dimension
            for k in range(basis.block):
                row[basis.index(j, basis.monomials[k])] = coords[i] * mono_vals[k]
                row[basis.index(i, basis.monomials[k])] = -coords[j] * mono_vals[k]
            rows.append(row)
    if symmetric:
        for row in _symmetry_rows(basis):
            rows.append([complex(x) for x in row])
    m = np.array(rows, dtype=complex)
    _, s, vh = np.linalg.svd(m)
    tol = 1e-8 * (s[0] if len(s) and s[0] > 0 else 1.0)
    rank = int(np.sum(s > tol))
    kernel = [vh[k].conj() for k in range(rank, vh.shape[0])]
    rational_kernel = _rationalize_kernel(kernel, m) if kernel else []
    if rational_kernel:
        if symmetric:
            degenerate_dim = _span_intersection_dim(
                degenerate_subspace(n, d), rational_kernel
            )
        else:
            degenerate_dim = comb(n + d - 2, n)
        sym_dim = len(rational_kernel) if symmetric else None
        return KernelReport(
            basis,
            rational_kernel,
            degenerate_dim,
            symmetric,
            sym_dim,
            numeric=True,
            rationalized=True,
        )
    degenerate_dim = _numeric_degenerate_intersection_dim(basis, kernel, symmetric)
    sym_dim = len(kernel) if symmetric else None
    return KernelReport(
        basis, [list(v) for v in kernel], degenerate_dim, symmetric, sym_dim, numeric=True
    )


def _numeric_degenerate_intersection_dim(basis, kernel, symmetric):
    n, d = basis.n, basis.d
    if not symmetric:
        return comb(n + d - 2, n)
    if not kernel:
        return 0
    degenerate = [[float(x) for x in v] for v in degenerate_subspace(n, d)]
    stacked = np.array(degenerate + [list(v) for v in kernel], dtype=complex)
    s = np.linalg.svd(stacked, compute_uv=False)
    tol = 1e-8 * (s[0] if len(s) and s[0] > 0 else 1.0)
    union = int(np.sum(s > tol))
    return len(degenerate) + len(kernel) - union


def _rationalize_kernel(kernel, matrix, den_bound: int = 10**6, tol: float = 1e-6):
    """Rational reduced-echelon basis of a numerically computed kernel."""
    from fractions import Fraction

    rows = [np.array(v, dtype=complex) for v in kernel]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        pivot_row = max(range(r, len(rows)), key=lambda k: abs(rows[k][c]))
        if abs(rows[pivot_row][c]) < 1e-9:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        rows[r] = rows[r] / rows[r][c]
        for k in range(len(rows)):
            if k != r and abs(rows[k][c]) > 1e-14:
                rows[k] = rows[k] - rows[k][c] * rows[r]
        pivots.append(c)
        r += 1
    out = []
    scale = float(np.max(np.abs(matrix))) or 1.0
    for row in rows[:r]:
        vec = []
        for z in row:
            z = complex(z)
            if abs(z.imag) > tol:
                return None
            fr = Fraction(z.real).limit_denominator(den_bound)
            if abs(z.real - float(fr)) > tol:
                return None
            vec.append(rational(fr.numerator, fr.denominator))
        residual = np.max(np.abs(matrix @ np.array([float(x) for x in vec])))
        if residual > 1e-6 * scale * max(1.0, float(max(abs(x) for x in vec))):
            return None
        out.append(vec)
    return out


def _mono_value_c(coords, mono):
    val = 1 + 0j
    for c, e in zip(coords, mono):
        if e:
            val = val * c**e
    return val


def _span_intersection_dim(span_a, span_b) -> int:
    """dim(span_a intersect span_b) = dim A + dim B - dim(A + B)."""
    if not span_a or not span_b:
        return 0
    stacked = ExactMatrix(list(span_a) + list(span_b))
    dim_sum = stacked.transpose().rank()
    ra = ExactMatrix(list(span_a)).transpose().rank()
    rb = ExactMatrix(list(span_b)).transpose().rank()
    return ra + rb - dim_sum


def in_kernel_span(report: KernelReport, tensor: PartialSymTensor) -> bool:
    """Exact membership of a tensor in the kernel span."""
    if not report.kernel_vectors:
        return False
    vec = report.basis.tensor_to_vector(tensor)
    cols = ExactMatrix(list(report.kernel_vectors)).transpose()
    return cols.solve(vec) is not None


def _complement_vectors(report: KernelReport):
    """Kernel basis vectors extending the degenerate subspace."""
    n, d = report.basis.n, report.basis.d
    degenerate = degenerate_subspace(n, d)
    rows = [list(v) for v in degenerate]
    base_rank = ExactMatrix(rows).transpose().rank() if rows else 0
    complement = []
    for v in report.kernel_vectors:
        trial = rows + [list(v)]
        r = ExactMatrix(trial).transpose().rank()
        if r > base_rank:
            rows = trial
            base_rank = r
            complement.append(v)
    return complement


def symmetric_form_from_tensor(t: PartialSymTensor) -> SymmetricTensor:
    """Recover f with grad f = slices via the Euler relation; verifies exactness."""
    nv = t.n + 1
    total = Polynomial.zero(nv)
    for i in range(nv):
        total = total + Polynomial.variable(i, nv) * t.slices[i]
    f = total * rational(1, t.d)
    for i in range(nv):
        if f.partial_derivative(i) != t.slices[i]:
            raise ValueError("tensor is not a gradient: exactness fails")
    return SymmetricTensor(f)


def is_eigenscheme(
    points,
    n: int,
    d: int,
    symmetric: bool = False,
    seed: int = 0,
    retries: int = 8,
) -> dict:
    """Decide whether a point set is exactly the eigenscheme of some tensor.

    YES requires a verified witness: a random kernel element beyond the
    degenerate subspace whose forward solve certifies and reproduces the
    input exactly.  NO is returned when the kernel is degenerate-only.
    Everything else is UNDECIDED, with diagnostics.
    """
    pts = _point_list(points, n)
    report = eigenscheme_kernel(pts, n, d, symmetric)
    expected = expected_count(n, d)
    out = {
        "decision": "UNDECIDED",
        "witness": None,
        "kernel": report.to_json(),
        "seeds_used": [],
        "diagnostics": [],
        "expected": expected,
        "count": len(pts),
    }
    if len(pts) != expected:
        out["diagnostics"].append(
            f"cardinality {len(pts)} differs from the generic length {expected}"
        )
    if report.numeric:
        if report.rationalized:
            out["diagnostics"].append(
                "floating input: kernel rationalized from the numeric echelon"
            )
        else:
            out["diagnostics"].append("floating input: numeric kernel, no certification")
            if not report.contains_proper_tensor:
                out["decision"] = "NO"
            return out
    if not report.contains_proper_tensor:
        out["decision"] = "NO"
        return out
    if len(pts) != expected:
        return out
    complement = _complement_vectors(report)
    if not complement:
        out["decision"] = "NO"
        return out
    target = PointSet(n)
    for p in pts:
        target.add(p)
    rng = random.Random(seed)
    for attempt in range(retries):
        draw_seed = rng.randint(0, 2**32 - 1)
        out["seeds_used"].append(draw_seed)
        draw_rng = random.Random(draw_seed)
        vec = [ZERO] * report.basis.dimension
        for v in complement:
            c = rational(draw_rng.randint(-5, 5))
            if c == 0:
                c = rational(1)
            vec = [a + c * b for a, b in zip(vec, v)]
        try:
            witness = report.basis.vector_to_tensor(vec)
        except ValueError:
            continue
        if witness.is_zero():
            continue
        solution = eigenpoints(witness, seed=draw_seed)
        if solution.certified and solution.point_set().same_set(target):
            out["decision"] = "YES"
            out["witness"] = witness
            out["solution"] = solution
            return out
        out["diagnostics"].append(
            f"draw {attempt}: certified={solution.certified},"
            f" count={solution.total_multiplicity}"
        )
    out["diagnostics"].append("no draw certified and reproduced the input")
    return out


def enlarge(points, d: int, seed: int = 0, retries: int = 8) -> dict:
    """Embed a small general point set W in P^3 into a full eigenscheme.

    Enforces the counting bound k <= C(d-1,3) + 3 C(d,2) + 1, then samples
    kernel elements beyond the degenerate subspace until a forward solve
    certifies with the full expected length and contains W exactly.
    """
    n = 3
    pts = _point_list(points, n)
    k = len(pts)
    bound = comb(d - 1, 3) + 3 * comb(d, 2) + 1
    if k > bound:
        raise ValueError(f"{k} points exceed the enlargement bound; bound is {bound}")
    report = eigenscheme_kernel(pts, n, d, symmetric=False)
    out = {
        "bound": bound,
        "kernel": report.to_json(),
        "seeds_used": [],
        "diagnostics": [],
        "tensor": None,
        "solution": None,
    }
    if not report.contains_proper_tensor:
        out["diagnostics"].append("kernel reduces to the degenerate subspace")
        return out
    complement = _complement_vectors(report)
    expected = expected_count(n, d)
    w_set = PointSet(n)
    for p in pts:
        w_set.add(p)
    rng = random.Random(seed)
    for attempt in range(retries):
        draw_seed = rng.randint(0, 2**32 - 1)
        out["seeds_used"].append(draw_seed)
        draw_rng = random.Random(draw_seed)
        vec = [ZERO] * report.basis.dimension
        for v in complement:
            c = rational(draw_rng.randint(-5, 5))
            if c == 0:
                c = rational(1)
            vec = [a + c * b for a, b in zip(vec, v)]
        witness = report.basis.vector_to_tensor(vec)
        if witness.is_zero():
            continue
        solution = eigenpoints(witness, seed=draw_seed)
        if (
            solution.certified
            and solution.total_multiplicity == expected
            and w_set.is_subset_of(solution.point_set())
        ):
            out["tensor"] = witness
            out["solution"] = solution
            return out
        out["diagnostics"].append(
            f"draw {attempt}: certified={solution.certified},"
            f" count={solution.total_multiplicity}"
        )
    out["diagnostics"].append("all retries failed to certify an enlargement")
    return out


def converse_hypothesis_report(points, d: int, enumeration_cap: int = 10**6) -> dict:
    """Check hypothesis (1) of the planarity-free converse and report targets.

    Condition (1): no (d-1)(d^2-d+1) points on a surface of degree d-1.
    The curve-side conditions (2)-(4) are not decidable from a point list;
    their target degree d^2-d+1 and genus d^3 - 7d(d-1)/2 - 1 are reported
    as values a complete-intersection presentation must attain.
    """
    n = 3
    pts = _point_list(points, n)
    expected = expected_count(n, d)
    if len(pts) != expected:
        raise ValueError(f"need exactly {expected} points, got {len(pts)}")
    threshold = (d - 1) * (d * d - d + 1)
    ps = PointSet(n)
    for p in pts:
        ps.add(p)
    rep = subset_on_hypersurface(ps, d - 1, threshold, enumeration_cap)
    return {
        "d": d,
        "threshold": threshold,
        "condition1_holds": not rep.found,
        "offending_subset": rep.witness if rep.found else None,
        "degree_target": d * d - d + 1,
        "genus_target": d**3 - 7 * d * (d - 1) // 2 - 1,
        "numeric": rep.numeric,
    }
