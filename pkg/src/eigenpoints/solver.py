"""Eigenpoint enumeration by chart reduction and hyperplane recursion.

In the chart x_j = 1 the 2x2 minors collapse to the square system
g_k - x_k g_j = 0 (k != j); the remaining eigenpoints lie on x_j = 0 and
satisfy the eigenproblem of the restricted tensor together with the
vanishing of the restricted g_j, so the solver recurses into one lower
projective dimension.  Planar charts are eliminated with resultants,
space charts with a grevlex basis followed by FGLM, both after a random
separating shear with recorded seed.  Points with rational coordinates
are produced exactly; the rest are polished floating complex points.
"""

from __future__ import annotations

import random

import numpy as np

from . import resultants, unipoly
from . import groebner as gb_engine
from .counts import expected_count
from .multipoly import Polynomial
from .points import ProjectivePoint, point_from_json
from .rationals import is_rational, rational
from .roots import univariate_roots
from .tensors import EigenMatrix, PartialSymTensor, minor_ideal_generators

RESIDUAL_TOL = 1e-8
SHEAR_RETRIES = 6


class EigenSolution:
    """Solved eigenpoint set with multiplicities and certification."""

    def __init__(self, n, d, points, charts_solved, certified, diagnostics, seed_info):
        self.n = n
        self.d = d
        self.points = points  # list of (ProjectivePoint, multiplicity)
        self.charts_solved = charts_solved
        self.certified = certified
        self.diagnostics = diagnostics
        self.seed_info = seed_info
        self.expected = expected_count(n, d)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.points)

    def real_points(self, tol: float = RESIDUAL_TOL):
        return [(p, m) for p, m in self.points if p.is_real(tol)]

    def point_set(self):
        from .points import PointSet

        ps = PointSet(self.n)
        for p, _ in self.points:
            ps.add(p)
        return ps

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "expected": self.expected,
            "count": self.total_multiplicity,
            "points": [
                {"coords": p.coords_json(), "mult": m} for p, m in self.points
            ],
            "certified": self.certified,
            "chartsSolved": self.charts_solved,
            "diagnostics": self.diagnostics,
            "seedInfo": self.seed_info,
        }

    @classmethod
    def from_json(cls, data: dict) -> "EigenSolution":
        points = [
            (point_from_json(e["coords"]), int(e.get("mult", 1)))
            for e in data["points"]
        ]
        return cls(
            int(data["n"]),
            int(data["d"]),
            points,
            list(data.get("chartsSolved", [])),
            bool(data.get("certified", False)),
            list(data.get("diagnostics", [])),
            dict(data.get("seedInfo", {})),
        )

    def __repr__(self):
        return (
            f"EigenSolution(n={self.n}, d={self.d}, count={self.total_multiplicity},"
            f" expected={self.expected}, certified={self.certified})"
        )


def chart_system(t: PartialSymTensor, j: int) -> list:
    """The square system cutting out E(T) in the chart x_j = 1."""
    if not 0 <= j <= t.n:
        raise IndexError(f"chart index {j} out of range")
    return _chart_system(t.slices, j)


def _chart_system(slices, j):
    nv = slices[0].nvars
    xj_slice = slices[j]
    out = []
    for k in range(nv):
        if k == j:
            continue
        p = slices[k] - Polynomial.variable(k, nv) * xj_slice
        out.append(p.dehomogenize(j))
    return out


# -- numeric helpers ---------------------------------------------------------


def _poly_scale(p: Polynomial) -> float:
    if p.is_zero():
        return 1.0
    return max(abs(float(c)) for c in p.terms.values())


def _newton_polish(system, jacobian, coords, iterations=3):
    v = np.array([complex(c) for c in coords], dtype=complex)
    k = len(coords)
    for _ in range(iterations):
        f = np.array([p.evaluate(list(v)) for p in system], dtype=complex)
        if max(abs(x) for x in f) < 1e-14:
            break
        jm = np.array(
            [
                [jacobian[i][j].evaluate(list(v)) for j in range(k)]
                for i in range(len(system))
            ],
            dtype=complex,
        )
        try:
            if jm.shape[0] == jm.shape[1]:
                step = np.linalg.solve(jm, f)
            else:
                step = np.linalg.lstsq(jm, f, rcond=None)[0]
        except np.linalg.LinAlgError:
            break
        v = v - step
    return [complex(x) for x in v]


def _jacobian(system, k):
    return [[p.partial_derivative(j) for j in range(k)] for p in system]


# -- chart solving -----------------------------------------------------------


class ChartResult:
    __slots__ = ("solutions", "positive_dimensional", "notes", "shear")

    def __init__(self, solutions, positive_dimensional=False, notes=(), shear=None):
        self.solutions = solutions  # list of (coords tuple, multiplicity)
        self.positive_dimensional = positive_dimensional
        self.notes = list(notes)
        self.shear = shear


def solve_zero_dimensional(system, rng=None, max_retries: int = SHEAR_RETRIES):
    """All isolated solutions of a square polynomial system (1..3 unknowns).

    Returns a ChartResult; positive-dimensional systems are reported, not
    silently dropped.
    """
    rng = rng or random.Random(0)
    system = list(system)
    if not system:
        raise ValueError("empty system")
    k = system[0].nvars
    nonzero = [p for p in system if not p.is_zero()]
    if not nonzero:
        return ChartResult([], positive_dimensional=True, notes=["all equations vanish"])
    if k == 1:
        coeffs = unipoly.from_multipoly(nonzero[0])
        for p in nonzero[1:]:
            g = unipoly.gcd(coeffs, unipoly.from_multipoly(p))
            coeffs = g
        if unipoly.deg(coeffs) <= 0:
            return ChartResult([])
        sols = [((r,), m) for r, m in univariate_roots(coeffs)]
        return ChartResult(sols)
    if k == 2:
        return _solve_planar(nonzero, rng, max_retries)
    return _solve_by_elimination(nonzero, k, rng, max_retries)


def _shear_sub(k: int, coeffs):
    """Substitution sending the last variable Z to Z - sum coeffs[i] x_i."""
    z = Polynomial.variable(k - 1, k)
    expr = z
    for i, c in enumerate(coeffs):
        expr = expr - Polynomial.variable(i, k) * rational(c)
    return {k - 1: expr}


def _unshear(coords, coeffs):
    *rest, zp = coords
    z = zp
    for c, x in zip(coeffs, rest):
        z = z - rational(c) * x if not isinstance(x, complex) else z - c * x
    return tuple(rest) + (z,)


def _solve_planar(polys, rng, max_retries):
    """Bivariate resultant elimination with a separating shear on x."""
    if len(polys) == 1:
        p = polys[0]
        return ChartResult(
            [], positive_dimensional=p.degree() > 0, notes=["single planar equation"]
        ) if p.degree() > 0 else ChartResult([])
    p1, p2 = polys[0], polys[1]
    last_result = None
    for attempt in range(max_retries + 1):
        s = 0 if attempt == 0 else rng.randint(1, 30) * rng.choice([1, -1])
        sub = {0: Polynomial.variable(0, 2) - Polynomial.variable(1, 2) * rational(s)}
        q1 = p1.substitute(sub) if s else p1
        q2 = p2.substitute(sub) if s else p2
        try:
            elim = resultants.eliminate_y(q1, q2)
        except resultants.EliminationDegenerate as exc:
            return ChartResult([], positive_dimensional=True, notes=[str(exc)])
        if not elim.eliminant:
            return ChartResult([], positive_dimensional=True, notes=["vanishing resultant"])
        if unipoly.deg(elim.eliminant) == 0:
            sols = []
        else:
            squarefree = unipoly.is_squarefree(elim.eliminant)
            sols = _planar_back_substitute(q1, q2, elim, s)
            if sols is None:
                last_result = None
                continue
        if unipoly.deg(elim.eliminant) == 0 or squarefree or attempt == max_retries:
            extra = []
            if unipoly.deg(elim.eliminant) > 0 and not squarefree:
                extra.append("eliminant not squarefree after retries: multiplicity reported")
            # check the extras against remaining equations of overdetermined systems
            sols = _filter_extra_equations(sols, polys[2:])
            return ChartResult(sols, notes=extra, shear=[s])
        last_result = ChartResult(
            _filter_extra_equations(sols, polys[2:]) if sols else [],
            notes=["eliminant not squarefree"],
            shear=[s],
        )
    return last_result or ChartResult([], notes=["planar elimination failed"])


def _filter_extra_equations(sols, extra_polys, tol=RESIDUAL_TOL):
    if not extra_polys:
        return sols
    kept = []
    for coords, mult in sols:
        ok = True
        for p in extra_polys:
            val = p.evaluate(list(coords))
            if all(not isinstance(c, complex) for c in coords):
                if val != 0:
                    ok = False
                    break
            elif abs(complex(val)) > tol * _poly_scale(p):
                ok = False
                break
        if ok:
            kept.append((coords, mult))
    return kept


def _planar_unshear(x0, y0, s):
    """Undo the shear X = x + s y on the first coordinate."""
    if s == 0:
        return (x0, y0)
    if isinstance(x0, complex) or isinstance(y0, complex):
        return (complex(x0) - s * complex(y0), y0)
    return (x0 - rational(s) * y0, y0)


def _planar_back_substitute(q1, q2, elim, s):
    b1 = resultants.to_bivar(q1)
    b2 = resultants.to_bivar(q2)
    jac = _jacobian([q1, q2], 2)
    sols = []
    for x0, mult in univariate_roots(elim.eliminant):
        if is_rational(x0):
            u1 = resultants.specialize_x(b1, x0)
            u2 = resultants.specialize_x(b2, x0)
            g = unipoly.gcd(u1, u2)
            if unipoly.deg(g) == 1:
                y0 = -g[0] / g[1]
                sols.append((_planar_unshear(x0, y0, s), mult))
                continue
            if unipoly.deg(g) <= 0:
                return None  # spurious root: retry with another shear
            return None  # several points share this abscissa: retry
        else:
            y0 = None
            if elim.sub1 is not None:
                u, v = elim.sub1
                x_ref, (uv, vv) = unipoly.refined_values(elim.eliminant, [u, v], x0)
                if uv != 0:
                    cand = complex(-vv / uv)
                    if abs(cand) < 1e12:
                        y0 = cand
                        x0 = complex(x_ref)
            if y0 is None:
                cand = _numeric_fiber(b1, b2, x0)
                if cand is None:
                    return None
                y0 = cand
            xy = _newton_polish([q1, q2], jac, (x0, y0))
            sols.append((_planar_unshear(xy[0], xy[1], s), mult))
    return sols


def _numeric_fiber(b1, b2, x0):
    u1 = [complex(unipoly.evaluate(col, x0)) if col else 0j for col in b1]
    while u1 and abs(u1[-1]) < 1e-12:
        u1.pop()
    if len(u1) < 2:
        return None
    roots = np.roots(list(reversed(u1)))
    best, best_val = None, None
    for y in roots:
        val = abs(complex(_bivar_eval(b2, x0, complex(y))))
        if best_val is None or val < best_val:
            best, best_val = complex(y), val
    return best


def _bivar_eval(b, x0, y0):
    total = 0j
    for j, col in enumerate(b):
        if col:
            total += complex(unipoly.evaluate(col, x0)) * y0**j
    return total


def _solve_by_elimination(polys, k, rng, max_retries):
    """Shear to shape position, grevlex basis, FGLM, univariate roots."""
    jac = _jacobian(polys, k)
    last_note = None
    for attempt in range(max_retries + 1):
        if attempt == 0:
            coeffs = [0] * (k - 1)
        else:
            coeffs = [rng.randint(1, 30) * rng.choice([1, -1]) for _ in range(k - 1)]
        if any(coeffs):
            sub = _shear_sub(k, coeffs)
            sheared = [p.substitute(sub) for p in polys]
        else:
            sheared = polys
        try:
            basis = gb_engine.buchberger(sheared, k)
            lex = gb_engine.fglm(basis, k)
        except gb_engine.PositiveDimensionalError as exc:
            return ChartResult([], positive_dimensional=True, notes=[str(exc)])
        if lex.dimension == 0:
            return ChartResult([], shear=coeffs)
        if len(lex.eliminant) - 1 == lex.dimension and lex.in_shape_position():
            sols = _shape_back_substitute(polys, jac, lex, coeffs, k)
            notes = []
            if not unipoly.is_squarefree(lex.eliminant):
                notes.append("eliminant not squarefree: multiplicity reported")
            return ChartResult(sols, notes=notes, shear=coeffs)
        last_note = (
            f"eliminant degree {len(lex.eliminant) - 1} below quotient dimension"
            f" {lex.dimension}"
        )
    return ChartResult(
        _eigenvector_fallback(polys, k, rng),
        notes=[last_note or "no separating shear found", "numeric eigenvector fallback"],
        shear=None,
    )


def _shape_back_substitute(polys, jac, lex, coeffs, k):
    shapes = [lex.shape[i] for i in range(k - 1)]
    sols = []
    for z0, mult in univariate_roots(lex.eliminant):
        if is_rational(z0):
            coords = tuple(unipoly.evaluate(h, z0) for h in shapes) + (z0,)
        else:
            z_ref, values = unipoly.refined_values(lex.eliminant, shapes, z0)
            coords = tuple(complex(v) for v in values) + (complex(z_ref),)
        coords = _unshear(coords, coeffs) if any(coeffs) else coords
        if not is_rational(z0):
            coords = tuple(_newton_polish(polys, jac, coords))
        sols.append((coords, mult))
    return sols


def _eigenvector_fallback(polys, k, rng):
    """Numeric multiplication-operator eigenvectors; degenerate systems only."""
    try:
        basis = gb_engine.buchberger(polys, k)
        monos = gb_engine.quotient_basis(basis, k)
    except gb_engine.EliminationError:
        return []
    if not monos:
        return []
    mats = gb_engine.multiplication_matrices(basis, monos, k)
    idx = {m: i for i, m in enumerate(monos)}
    unit = idx.get(tuple([0] * k))
    var_rows = []
    for i in range(k):
        mono = tuple(1 if j == i else 0 for j in range(k))
        var_rows.append(idx.get(mono))
    if unit is None or any(r is None for r in var_rows):
        return []
    coeffs = [rng.randint(1, 9) for _ in range(k)]
    D = len(monos)
    m_op = np.zeros((D, D), dtype=complex)
    for i in range(k):
        cols = mats[i]
        m = np.array([[complex(cols[j][r]) for j in range(D)] for r in range(D)])
        m_op += coeffs[i] * m
    _, vecs = np.linalg.eig(m_op.T)
    clusters = []
    for pos in range(D):
        w = vecs[:, pos]
        if abs(w[unit]) < 1e-10:
            continue
        coords = tuple(complex(w[r] / w[unit]) for r in var_rows)
        for j, (c, m) in enumerate(clusters):
            if max(abs(a - b) for a, b in zip(coords, c)) < 1e-6:
                clusters[j] = (c, m + 1)
                break
        else:
            clusters.append((coords, 1))
    return clusters


# -- full eigenpoint enumeration --------------------------------------------


def eigenpoints(
    t,
    seed: int = 0,
    allow_large_n: bool = False,
    max_retries: int = SHEAR_RETRIES,
) -> EigenSolution:
    """The complete eigenpoint set of a tensor, chart by chart.

    Solves the chart x_0 = 1; when the count falls short of the generic
    length, recurses into the hyperplane x_0 = 0, where eigenpoints are
    eigenpoints of the restricted tensor that also kill the restricted
    g_0.  Certification requires the full expected count with all
    multiplicities one.
    """
    if hasattr(t, "to_partial"):
        t = t.to_partial()
    if t.n not in (2, 3) and not allow_large_n:
        raise ValueError("exact path supports n in {2, 3}; pass allow_large_n=True to override")
    rng = random.Random(seed)
    expected = expected_count(t.n, t.d)
    charts = []
    diagnostics = []
    shears = {}
    positive_dim = False

    collected = _solve_projective(
        t.slices, [], rng, charts, diagnostics, shears, "", expected, max_retries
    )
    if collected is None:
        positive_dim = True
        collected = []

    # deduplicate defensively and sort lexicographically
    points = []
    for coords, mult in collected:
        p = ProjectivePoint(list(coords))
        merged = False
        for i, (q, m) in enumerate(points):
            if p.same_point(q):
                points[i] = (q, m + mult)
                merged = True
                break
        if not merged:
            points.append((p, mult))
    points.sort(key=lambda pm: pm[0].sort_key())

    gens = minor_ideal_generators(EigenMatrix(t))
    residual_ok = _check_residuals(points, gens, diagnostics)

    total = sum(m for _, m in points)
    certified = (
        not positive_dim
        and residual_ok
        and total == expected
        and all(m == 1 for _, m in points)
    )
    if positive_dim:
        diagnostics.append("eigenscheme is positive-dimensional or degenerate")
    elif not certified:
        if total != expected:
            diagnostics.append(
                f"found total multiplicity {total}, generic length is {expected}"
            )
        fat = [(repr(p), m) for p, m in points if m > 1]
        if fat:
            diagnostics.append(f"non-reduced points detected: {fat}")
    seed_info = {"seed": seed, "shears": shears}
    return EigenSolution(t.n, t.d, points, charts, certified, diagnostics, seed_info)


def _solve_projective(
    slices, filters, rng, charts, diagnostics, shears, prefix, budget, max_retries
):
    """Eigenpoints of the tensor given by ``slices`` passing all filters.

    Returns a list of (projective coords, mult) or None when a
    positive-dimensional locus was detected at this level.
    """
    m = len(slices) - 1
    filters = [f for f in filters if not f.is_zero()]
    label = prefix or "top"

    if m == 0:
        coords = (rational(1),)
        if _passes_filters(coords, filters):
            return [(coords, 1)]
        return []

    if all(g.is_zero() for g in slices):
        diagnostics.append(f"{label}: all slices vanish; positive-dimensional")
        return None

    if m == 1:
        binary = (
            Polynomial.variable(0, 2) * slices[1]
            - Polynomial.variable(1, 2) * slices[0]
        )
        if binary.is_zero():
            diagnostics.append(f"{label}: binary minor vanishes; positive-dimensional")
            return None
        coeffs = unipoly.from_multipoly(binary.dehomogenize(0))
        out = []
        if unipoly.deg(coeffs) > 0:
            for r, mult in univariate_roots(coeffs):
                coords = (rational(1), r) if is_rational(r) else (1.0 + 0j, r)
                if _passes_filters(coords, filters):
                    out.append((coords, mult))
        # the degree drop of the dehomogenization is the multiplicity at (0:1)
        drop = binary.degree() - max(unipoly.deg(coeffs), 0)
        if drop > 0:
            coords = (rational(0), rational(1))
            if _passes_filters(coords, filters):
                out.append((coords, drop))
        charts.append(f"{prefix}P1")
        return out

    # chart x_first = 1 (x0 names the first coordinate of the current level)
    system = _chart_system(slices, 0)
    chart_name = f"{prefix}x0=1"
    out = []
    if all(p.is_zero() for p in system):
        diagnostics.append(f"{label}: chart system vanishes identically; positive-dimensional")
        return None
    result = solve_zero_dimensional(system, rng, max_retries)
    charts.append(chart_name)
    if result.shear is not None:
        shears[chart_name] = result.shear
    for note in result.notes:
        diagnostics.append(f"{chart_name}: {note}")
    if result.positive_dimensional:
        diagnostics.append(f"{chart_name}: positive-dimensional chart")
        return None
    for coords, mult in result.solutions:
        full = (rational(1),) + tuple(coords) if all(
            not isinstance(c, complex) for c in coords
        ) else (1.0 + 0j,) + tuple(coords)
        if _passes_filters(full, filters):
            out.append((full, mult))

    found = sum(mult for _, mult in out)
    if budget is not None and found >= budget and not filters:
        return out

    # recurse into the hyperplane x_first = 0
    restricted = [g.restrict_zero(0) for g in slices[1:]]
    new_filters = [f.restrict_zero(0) for f in filters]
    g0_restricted = slices[0].restrict_zero(0)
    new_filters.append(g0_restricted)
    sub = _solve_projective(
        restricted,
        new_filters,
        rng,
        charts,
        diagnostics,
        shears,
        prefix + "x0=0|",
        None,
        max_retries,
    )
    if sub is None:
        return None
    for coords, mult in sub:
        exact = all(not isinstance(c, complex) for c in coords)
        zero = rational(0) if exact else 0j
        out.append(((zero,) + tuple(coords), mult))
    return out


def _passes_filters(coords, filters, tol=RESIDUAL_TOL):
    exact = all(not isinstance(c, complex) for c in coords)
    for f in filters:
        val = f.evaluate(list(coords))
        if exact:
            if val != 0:
                return False
        elif abs(complex(val)) > tol * _poly_scale(f):
            return False
    return True


def _check_residuals(points, gens, diagnostics) -> bool:
    ok = True
    for p, _ in points:
        if p.exact:
            for g in gens:
                if g.evaluate(list(p.coords)) != 0:
                    diagnostics.append(f"exact point {p!r} fails minor {g.to_text()}")
                    ok = False
                    break
        else:
            coords = list(p.as_complex())
            for g in gens:
                val = abs(complex(g.evaluate(coords)))
                if val > RESIDUAL_TOL * _poly_scale(g):
                    diagnostics.append(f"point {p!r} residual {val:.2e} on a minor")
                    ok = False
                    break
    return ok


def curve_membership_check(t: PartialSymTensor, i: int, j: int, solution: EigenSolution) -> dict:
    """Verify every solved point sits on the deleted-column curves C_i and C_j."""
    if i == j:
        raise ValueError("need two distinct deleted columns")
    report = {"i": i, "j": j, "max_residual": 0.0, "all_exact_zero": True, "count": 0}
    for deleted in (i, j):
        gens = minor_ideal_generators(EigenMatrix(t, (deleted,)))
        for p, _ in solution.points:
            report["count"] += 1
            if p.exact:
                for g in gens:
                    if g.evaluate(list(p.coords)) != 0:
                        report["all_exact_zero"] = False
                        report["max_residual"] = float("inf")
            else:
                report["all_exact_zero"] = False
                coords = list(p.as_complex())
                for g in gens:
                    val = abs(complex(g.evaluate(coords))) / _poly_scale(g)
                    report["max_residual"] = max(report["max_residual"], val)
    report["passes"] = report["max_residual"] <= RESIDUAL_TOL or report["all_exact_zero"]
    return report
