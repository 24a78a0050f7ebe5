"""Degree-truncated cohomology of differential graded algebras.

The free algebra is infinite-dimensional, so every computation here is
truncated at an explicit maximal degree (default 24).  Ranks and kernels are
computed by exact fraction-free elimination over the monomial basis of each
degree; representative cocycles are the first kernel vectors extending the
image span under the fixed pivot order, so identical inputs always produce
identical tables and representatives.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .algebra import AlgebraElement, DgaModel, GcaError, Monomial, apply_differential

DEFAULT_MAX_DEGREE = 24
DEFAULT_BASIS_LIMIT = 200_000


class BasisLimitError(GcaError):
    """Monomial basis enumeration exceeded the configured limit."""

    def __init__(self, degree: int, size: int, limit: int):
        super().__init__(
            f"monomial basis at degree {degree} has {size} elements, exceeding the limit {limit}"
        )
        self.degree = degree
        self.size = size
        self.limit = limit


@dataclass(frozen=True)
class BettiTable:
    """Cohomology dimensions for degrees 0..max_degree."""

    max_degree: int
    dims: tuple[int, ...]
    representatives: tuple[tuple[AlgebraElement, ...], ...] | None = None

    def __post_init__(self):
        if self.max_degree < 0:
            raise ValueError(f"max_degree must be >= 0, got {self.max_degree}")
        if len(self.dims) != self.max_degree + 1:
            raise ValueError(f"expected {self.max_degree + 1} dimensions, got {len(self.dims)}")
        if any(not isinstance(d, int) or d < 0 for d in self.dims):
            raise ValueError("dimensions must be non-negative integers")
        if self.representatives is not None:
            if len(self.representatives) != self.max_degree + 1:
                raise ValueError("one representative tuple per degree is required")
            for d, (n, reps) in enumerate(zip(self.dims, self.representatives)):
                if len(reps) != n:
                    raise ValueError(f"degree {d}: {len(reps)} representatives for dimension {n}")

    @classmethod
    def from_dims(cls, dims: Sequence[int]) -> "BettiTable":
        return cls(len(dims) - 1, tuple(dims))

    def dim(self, degree: int) -> int:
        if 0 <= degree <= self.max_degree:
            return self.dims[degree]
        return 0


@dataclass(frozen=True)
class DegreeData:
    """Cochain data of one degree: basis, kernel, incoming image, chosen
    representatives (coordinate vectors over the basis), and the rank of the
    outgoing differential."""

    degree: int
    basis: tuple[Monomial, ...]
    kernel: tuple[tuple[Fraction, ...], ...]
    image: tuple[tuple[Fraction, ...], ...]
    reps: tuple[tuple[Fraction, ...], ...]
    rank_out: int


class ComplexData:
    """Truncated cochain complex of a model, one :class:`DegreeData` per degree."""

    def __init__(self, model: DgaModel, max_degree: int, degrees: tuple[DegreeData, ...]):
        self.model = model
        self.max_degree = max_degree
        self.degrees = degrees

    def betti(self, with_representatives: bool = False) -> BettiTable:
        dims = tuple(len(d.reps) for d in self.degrees)
        reps = None
        if with_representatives:
            reps = tuple(
                tuple(self.model.from_coords(d.basis, vec) for vec in d.reps) for d in self.degrees
            )
        return BettiTable(self.max_degree, dims, reps)

    def representative_elements(self, degree: int) -> list[AlgebraElement]:
        d = self.degrees[degree]
        return [self.model.from_coords(d.basis, vec) for vec in d.reps]

    def is_exact(self, element: AlgebraElement, degree: int) -> bool:
        """Whether a cocycle of the given degree is a coboundary."""
        coords = self.class_coordinates(element, degree)
        return not any(coords)

    def class_coordinates(self, element: AlgebraElement, degree: int) -> list[Fraction]:
        """Coordinates of a cocycle's class in the representative basis."""
        if degree > self.max_degree:
            raise GcaError(f"degree {degree} exceeds the truncation {self.max_degree}")
        if not element.is_zero and element.homogeneous_degree() != degree:
            raise GcaError("element is not homogeneous of the requested degree")
        data = self.degrees[degree]
        if not data.reps and not data.image:
            if element.is_zero:
                return []
            raise GcaError("nonzero element in a degree with trivial cocycle space")
        columns = [list(v) for v in data.reps] + [list(v) for v in data.image]
        rhs = element.coords(data.basis)
        solution = linalg.solve(columns, rhs)
        if solution is None:
            raise GcaError(f"element of degree {degree} is not a cocycle class")
        return solution[: len(data.reps)]


def differential_matrix(model: DgaModel, degree: int) -> list[list[Fraction]]:
    """Matrix of d from degree to degree+1 over the monomial bases
    (rows indexed by the target basis, columns by the source basis)."""
    source = model.basis(degree)
    target = model.basis(degree + 1)
    index = {m: i for i, m in enumerate(target)}
    rows = [[Fraction(0)] * len(source) for _ in target]
    for j, mon in enumerate(source):
        image = apply_differential(model.monomial_element(mon))
        for m, c in image.terms.items():
            try:
                rows[index[m]][j] = c
            except KeyError:
                raise GcaError(
                    f"differential does not raise degree by one on {model.format_monomial(mon)}"
                ) from None
    return rows


def cochain_complex(
    model: DgaModel,
    max_degree: int,
    *,
    basis_limit: int = DEFAULT_BASIS_LIMIT,
    validate: bool = True,
) -> ComplexData:
    if max_degree < 0:
        raise GcaError(f"max_degree must be >= 0, got {max_degree}")
    if validate:
        report = check_model(model)
        if not report.ok:
            raise GcaError("model fails validation: " + "; ".join(report.failure_messages()))
    for d in range(max_degree + 2):
        size = len(model.basis(d))
        if size > basis_limit:
            raise BasisLimitError(d, size, basis_limit)
    matrices = [differential_matrix(model, d) for d in range(max_degree + 1)]
    degrees = []
    for d in range(max_degree + 1):
        basis = model.basis(d)
        kernel = linalg.nullspace(matrices[d], len(basis))
        rank_out = len(basis) - len(kernel)
        if d == 0:
            image: list[tuple[Fraction, ...]] = []
        else:
            image = linalg.column_space_basis(matrices[d - 1], len(model.basis(d - 1)))
        span = linalg.IncrementalSpan(len(basis))
        for vec in image:
            span.add(vec)
        reps = tuple(vec for vec in kernel if span.add(vec))
        degrees.append(DegreeData(d, basis, tuple(kernel), tuple(image), reps, rank_out))
    return ComplexData(model, max_degree, tuple(degrees))


def cohomology(
    model: DgaModel,
    max_degree: int = DEFAULT_MAX_DEGREE,
    *,
    with_representatives: bool = False,
    basis_limit: int = DEFAULT_BASIS_LIMIT,
) -> BettiTable:
    """Betti table of the model up to ``max_degree``.

    dims[d] = dim ker(d_d) - dim im(d_{d-1}), by exact rational rank over the
    monomial basis of each degree.  Requires a model that passes
    :func:`check_model`.
    """
    data = cochain_complex(model, max_degree, basis_limit=basis_limit)
    return data.betti(with_representatives=with_representatives)


# ---------------------------------------------------------------------------
# model validation


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ModelReport:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failure_messages(self) -> list[str]:
        return [f"{c.name}: {c.detail}" for c in self.checks if not c.passed]

    def format(self) -> str:
        lines = []
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            suffix = f"  ({c.detail})" if c.detail and not c.passed else ""
            lines.append(f"{status}  {c.name}{suffix}")
        return "\n".join(lines)


def check_model(model: DgaModel) -> ModelReport:
    """Validate the differential: degree-raising, d^2 = 0, minimality, and
    absence of silently vanishing (degenerate) differential declarations."""
    raising_bad = []
    square_bad = []
    minimality_bad = []
    for g in model.generators:
        dg = model.differential_of(g.name)
        if not dg.is_zero:
            try:
                if dg.homogeneous_degree() != g.degree + 1:
                    raising_bad.append(f"d{g.name} has degree {dg.homogeneous_degree()}, expected {g.degree + 1}")
            except GcaError:
                raising_bad.append(f"d{g.name} is not homogeneous")
            for mon in dg.terms:
                used = model.exponent_map(mon)
                high = [n for n in used if model.generator(n).degree >= g.degree]
                if high:
                    minimality_bad.append(
                        f"d{g.name} uses {', '.join(sorted(high))} of degree >= {g.degree}"
                    )
                    break
        if not apply_differential(dg).is_zero:
            square_bad.append(f"d(d{g.name}) != 0")
    collapsed = sorted(model.collapsed)
    degenerate = ""
    if collapsed:
        degenerate = (
            f"degenerate input: the declared differential of {', '.join(collapsed)} "
            "vanishes identically"
        )
    checks = (
        CheckResult("degree-raising", not raising_bad, "; ".join(raising_bad)),
        CheckResult("d-squared", not square_bad, "; ".join(square_bad)),
        CheckResult("minimality", not minimality_bad, "; ".join(minimality_bad)),
        CheckResult("odd-square-exclusion", not collapsed, degenerate),
    )
    return ModelReport(checks)


# ---------------------------------------------------------------------------
# ring presentations


@dataclass(frozen=True)
class RingPresentation:
    """The truncated polynomial ring Q[w, z] / (w^nilpotency)."""

    deg_w: int
    deg_z: int
    nilpotency: int

    def __post_init__(self):
        if self.deg_w < 1 or self.deg_z < 1:
            raise ValueError("generator degrees must be >= 1")
        if self.nilpotency < 1:
            raise ValueError("nilpotency exponent must be >= 1")


def quotient_ring_dims(presentation: RingPresentation, max_degree: int) -> list[int]:
    """Monomial counts of Q[w,z]/(w^a) per degree, honouring skew rules
    (an odd-degree generator has exponent at most 1)."""
    a = presentation.nilpotency
    w_cap = min(a - 1, 1) if presentation.deg_w % 2 else a - 1
    dims = [0] * (max_degree + 1)
    for i in range(w_cap + 1):
        base = i * presentation.deg_w
        if base > max_degree:
            break
        j = 0
        while True:
            d = base + j * presentation.deg_z
            if d > max_degree:
                break
            dims[d] += 1
            if presentation.deg_z % 2 and j == 1:
                break
            j += 1
    return dims


@dataclass(frozen=True)
class RingReport:
    passed: bool
    presentation: RingPresentation
    max_degree: int
    expected_dims: tuple[int, ...]
    actual_dims: tuple[int, ...]
    first_mismatch: int | None
    w: AlgebraElement | None
    z: AlgebraElement | None
    messages: tuple[str, ...]

    def format(self) -> str:
        head = "pass" if self.passed else "FAIL"
        lines = [f"{head}  H* = Q[w,z]/(w^{self.presentation.nilpotency}), "
                 f"deg w = {self.presentation.deg_w}, deg z = {self.presentation.deg_z}, "
                 f"up to degree {self.max_degree}"]
        if self.w is not None:
            lines.append(f"w = {self.w.model.format_element(self.w)}")
        if self.z is not None:
            lines.append(f"z = {self.z.model.format_element(self.z)}")
        lines.extend(self.messages)
        return "\n".join(lines)


def _candidate_coefficients(dim: int):
    """Small integer coefficient vectors, scaling-normalised (first nonzero
    positive), in a deterministic order that tries basis vectors first."""
    vectors = []
    for vec in itertools.product(range(-2, 3), repeat=dim):
        nz = [c for c in vec if c]
        if not nz or nz[0] < 0:
            continue
        vectors.append(vec)
    vectors.sort(key=lambda v: (sum(abs(c) for c in v), tuple(-c for c in v)))
    return vectors


def verify_ring_presentation(
    model: DgaModel,
    presentation: RingPresentation,
    max_degree: int,
    *,
    basis_limit: int = DEFAULT_BASIS_LIMIT,
) -> RingReport:
    """Confirm that the model's cohomology ring is Q[w,z]/(w^a) up to the
    truncation degree.

    Three checks: (i) Betti numbers equal the monomial counts of the
    presented quotient; (ii) some degree-deg_w class w has w^a exact while
    w^(a-1) is not; (iii) for some degree-deg_z class z, the products
    w^i z^j are linearly independent in cohomology.  Candidates for w and z
    are searched over small integer combinations of the computed
    representatives, which is exhaustive up to scaling for the coefficient
    range -2..2.
    """
    a = presentation.nilpotency
    needed = max(max_degree, a * presentation.deg_w)
    data = cochain_complex(model, needed, basis_limit=basis_limit)
    actual = tuple(len(d.reps) for d in data.degrees[: max_degree + 1])
    expected = tuple(quotient_ring_dims(presentation, max_degree))

    messages: list[str] = []
    first_mismatch = None
    for d, (e, got) in enumerate(zip(expected, actual)):
        if e != got:
            first_mismatch = d
            messages.append(f"degree {d}: dimension {got}, presentation predicts {e}")
            break
    if first_mismatch is not None:
        return RingReport(False, presentation, max_degree, expected, actual,
                          first_mismatch, None, None, tuple(messages))

    w = _find_w(data, presentation)
    if w is None:
        messages.append(f"no degree-{presentation.deg_w} class w with w^{a} exact "
                        f"and w^{a - 1} non-exact was found")
        return RingReport(False, presentation, max_degree, expected, actual,
                          None, None, None, tuple(messages))

    z = _find_z(data, presentation, w, max_degree)
    if z is None:
        messages.append(f"no degree-{presentation.deg_z} class z with independent "
                        f"products w^i z^j was found")
        return RingReport(False, presentation, max_degree, expected, actual,
                          None, w, None, tuple(messages))

    return RingReport(True, presentation, max_degree, expected, actual, None, w, z, ())


_CANDIDATE_DIM_LIMIT = 4


def _class_candidates(data: ComplexData, degree: int):
    reps = data.representative_elements(degree)
    if not reps:
        return
    if len(reps) > _CANDIDATE_DIM_LIMIT:
        raise GcaError(
            f"representative space at degree {degree} has dimension {len(reps)}; "
            f"the candidate search handles at most {_CANDIDATE_DIM_LIMIT}"
        )
    zero = data.model.zero()
    for coeffs in _candidate_coefficients(len(reps)):
        candidate = zero
        for c, rep in zip(coeffs, reps):
            if c:
                candidate = candidate + rep.scale(c)
        yield candidate


def _find_w(data: ComplexData, presentation: RingPresentation) -> AlgebraElement | None:
    a = presentation.nilpotency
    deg = presentation.deg_w
    for candidate in _class_candidates(data, deg):
        top = candidate**a
        if not data.is_exact(top, a * deg):
            continue
        below = candidate ** (a - 1)
        if a > 1 and data.is_exact(below, (a - 1) * deg):
            continue
        return candidate
    return None


def _find_z(
    data: ComplexData,
    presentation: RingPresentation,
    w: AlgebraElement,
    max_degree: int,
) -> AlgebraElement | None:
    for candidate in _class_candidates(data, presentation.deg_z):
        if _products_independent(data, presentation, w, candidate, max_degree):
            return candidate
    return None


def _products_independent(
    data: ComplexData,
    presentation: RingPresentation,
    w: AlgebraElement,
    z: AlgebraElement,
    max_degree: int,
) -> bool:
    a = presentation.nilpotency
    w_cap = min(a - 1, 1) if presentation.deg_w % 2 else a - 1
    w_powers = [w**i for i in range(w_cap + 1)]
    for d in range(max_degree + 1):
        products = []
        for i in range(w_cap + 1):
            rest = d - i * presentation.deg_w
            if rest < 0 or rest % presentation.deg_z:
                continue
            j = rest // presentation.deg_z
            if presentation.deg_z % 2 and j > 1:
                continue
            products.append(w_powers[i] * z**j)
        if not products:
            continue
        dd = data.degrees[d]
        span = linalg.IncrementalSpan(len(dd.basis))
        for vec in dd.image:
            span.add(vec)
        for p in products:
            if p.is_zero or not span.add(p.coords(dd.basis)):
                return False
    return True
