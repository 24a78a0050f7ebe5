"""Rational homotopy and cohomology of free-loop spaces of spherical space forms.

A space form here is a quotient S^n / Gamma of the round n-sphere by a
finite group acting freely and isometrically, together with a nontrivial
class h of its fundamental group.  The module computes, by exact rank
bookkeeping over Q:

* homotopy tables of the loop component Lambda(M)[h] from the evaluation
  fibration's exact sequence (``loop_space_dims``, ``theorem1_table``);
* homotopy tables of the SO(2) homotopy quotient (``theorem2_table``);
* the minimal model of the quotient and its cohomology ring
  (``theorem3_model``);
* Euler-class rank consistency for circle bundles (``gysin_check``).

Conventions: out-of-range degrees contribute zero maps and zero groups;
torsion is dropped everywhere except pi_1, which is finite cyclic for these
quotients and is recorded by its order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .gca import linalg
from .gca.algebra import AlgebraElement, DgaModel
from .gca.cohomology import (
    DEFAULT_BASIS_LIMIT,
    DEFAULT_MAX_DEGREE,
    BettiTable,
    ComplexData,
    cochain_complex,
)

Matrix = tuple[tuple[Fraction, ...], ...]


def _matrix(rows: Sequence[Sequence], nrows: int, ncols: int, what: str) -> Matrix:
    out = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if len(out) != nrows or any(len(row) != ncols for row in out):
        raise ValueError(f"{what}: expected a {nrows}x{ncols} matrix")
    return out


@dataclass(frozen=True)
class SpaceFormSpec:
    """S^n / Gamma with a marked nontrivial element h.

    ``r`` is the order of the centralizer C(h), which is cyclic for these
    groups; ``element_order`` is the order of h and divides r.  An
    even-dimensional sphere admits only the antipodal Z_2 action, so even n
    forces r = element_order = 2.
    """

    n: int
    r: int
    element_order: int = 2

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"sphere dimension must be an integer >= 2, got {self.n}")
        if not isinstance(self.r, int) or self.r < 2:
            raise ValueError(f"centralizer order must be an integer >= 2, got {self.r}")
        if not isinstance(self.element_order, int) or self.element_order < 2:
            raise ValueError(f"element order must be >= 2 (h is nontrivial), got {self.element_order}")
        if self.n % 2 == 0 and (self.r != 2 or self.element_order != 2):
            raise ValueError(
                f"S^{self.n} is even-dimensional: the only free isometric action is Z_2, "
                f"so r = element_order = 2 is required"
            )
        if self.r % self.element_order:
            raise ValueError(f"element order {self.element_order} must divide r = {self.r}")

    @property
    def parity(self) -> str:
        return "even" if self.n % 2 == 0 else "odd"


def sphere_rational_homotopy(n: int, i: int) -> int:
    """dim pi_i(S^n) tensor Q: one-dimensional exactly at i = n and, for even
    n, also at i = 2n - 1; zero otherwise."""
    if n < 2 or i < 2:
        raise ValueError("sphere_rational_homotopy requires n >= 2 and i >= 2")
    if n % 2 == 0:
        return 1 if i in (n, 2 * n - 1) else 0
    return 1 if i == n else 0


@dataclass(frozen=True)
class ActionEntry:
    """One degree of the h-action data: dim pi_i^Q(M) and the matrix of
    f_i = h_i - id on it."""

    degree: int
    dim: int
    matrix: Matrix

    def __post_init__(self):
        if self.degree < 2:
            raise ValueError(f"action degrees start at 2, got {self.degree}")
        if self.dim < 0:
            raise ValueError("dimension must be non-negative")
        object.__setattr__(self, "matrix", _matrix(self.matrix, self.dim, self.dim, f"f_{self.degree}"))


@dataclass(frozen=True)
class ActionData:
    entries: tuple[ActionEntry, ...]

    def __post_init__(self):
        entries = tuple(
            e if isinstance(e, ActionEntry) else ActionEntry(*e) for e in self.entries
        )
        degrees = [e.degree for e in entries]
        if degrees != sorted(set(degrees)):
            raise ValueError("action degrees must be strictly increasing")
        object.__setattr__(self, "entries", entries)

    def entry(self, degree: int) -> ActionEntry | None:
        for e in self.entries:
            if e.degree == degree:
                return e
        return None

    def kernel_dim(self, degree: int) -> int:
        e = self.entry(degree)
        if e is None or e.dim == 0:
            return 0
        return e.dim - linalg.rank(e.matrix)

    # the matrices are square, so kernel and cokernel dimensions coincide;
    # both names are kept for readability at the call sites
    cokernel_dim = kernel_dim


@dataclass(frozen=True)
class HomotopyTable:
    """dim pi_i^Q per degree i >= 2, plus the order of the finite cyclic
    pi_1 (0 means "not computed", 1 means trivial)."""

    dims: tuple[tuple[int, int], ...]
    pi1: int = 0

    def __post_init__(self):
        cleaned = tuple(sorted((d, v) for d, v in self.dims if v))
        if any(d < 2 or v < 0 for d, v in cleaned):
            raise ValueError("homotopy dimensions live in degrees >= 2 and are non-negative")
        if self.pi1 < 0:
            raise ValueError("pi_1 order must be >= 1, or 0 for 'not computed'")
        object.__setattr__(self, "dims", cleaned)

    def dim(self, degree: int) -> int:
        for d, v in self.dims:
            if d == degree:
                return v
        return 0

    def nonzero_degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.dims)

    def as_dict(self) -> dict[int, int]:
        return dict(self.dims)


def loop_space_dims(action: ActionData, max_degree: int) -> HomotopyTable:
    """Ranks of pi_i^Q of the loop component from the exact sequence of the
    evaluation fibration: dims[i] = dim ker(f_i) + dim coker(f_{i+1}).

    Degrees absent from the action data carry zero groups, hence contribute
    nothing; pi_1 is left as "not computed".
    """
    dims = []
    for i in range(2, max_degree + 1):
        v = action.kernel_dim(i) + action.cokernel_dim(i + 1)
        if v:
            dims.append((i, v))
    return HomotopyTable(tuple(dims), pi1=0)


def standard_action_data(spec: SpaceFormSpec) -> ActionData:
    """The h-action on pi_*^Q(S^n/Gamma) for a nontrivial h.

    Fixture facts about deck transformations: on an odd sphere every deck
    transformation is a rotation, homotopic to the identity, so f_n = 0.
    On an even sphere the deck transformation is the antipodal map of
    degree -1, so f_{2k} = -2 on pi_2k = Z; the top rational class in
    degree 4k-1 is the Whitehead square of the degree-2k generator, which h
    fixes, so f_{4k-1} = 0.
    """
    if spec.n % 2:
        return ActionData(((spec.n, 1, ((Fraction(0),),)),))
    k = spec.n // 2
    return ActionData(
        (
            (2 * k, 1, ((Fraction(-2),),)),
            (4 * k - 1, 1, ((Fraction(0),),)),
        )
    )


def theorem1_table(spec: SpaceFormSpec, max_degree: int = DEFAULT_MAX_DEGREE) -> HomotopyTable:
    """Homotopy table of the loop component Lambda(M)[h].

    Rational dimensions come from ``loop_space_dims`` over the standard
    action data; pi_1 equals the centralizer order r for n >= 3, and is
    cyclic of order 4 for the projective plane, where the boundary class
    [kappa] of the fibration is twice a lift [eta].
    """
    table = loop_space_dims(standard_action_data(spec), max_degree)
    if spec.n == 2:
        pi1 = classify_order4_extension(True).order
    else:
        pi1 = spec.r
    return HomotopyTable(table.dims, pi1=pi1)


def theorem2_table(spec: SpaceFormSpec, max_degree: int = DEFAULT_MAX_DEGREE) -> HomotopyTable:
    """Homotopy table of the SO(2) homotopy quotient of the loop component.

    The circle fibration over the quotient adds one rational dimension in
    degree 2; pi_1 becomes C(h)/<h> (order r / element_order) for odd n >= 3
    and is trivial for even n.
    """
    base = theorem1_table(spec, max_degree)
    dims = dict(base.dims)
    if max_degree >= 2:
        dims[2] = dims.get(2, 0) + 1
    if spec.n % 2:
        pi1 = spec.r // spec.element_order
    else:
        pi1 = 1
    return HomotopyTable(tuple(dims.items()), pi1=pi1)


# ---------------------------------------------------------------------------
# order-4 extension arithmetic


@dataclass(frozen=True)
class AbelianGroup:
    """A finite abelian group given by invariant factors, e.g. (4,) or (2, 2)."""

    invariant_factors: tuple[int, ...]

    @property
    def order(self) -> int:
        n = 1
        for f in self.invariant_factors:
            n *= f
        return n

    @property
    def name(self) -> str:
        return " x ".join(f"Z{f}" for f in self.invariant_factors)

    def elements(self) -> list[tuple[int, ...]]:
        out = [()]
        for f in self.invariant_factors:
            out = [e + (x,) for e in out for x in range(f)]
        return out

    def add(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((x + y) % f for x, y, f in zip(a, b, self.invariant_factors))

    def element_order(self, a: tuple[int, ...]) -> int:
        acc = a
        n = 1
        zero = (0,) * len(self.invariant_factors)
        while acc != zero:
            acc = self.add(acc, a)
            n += 1
        return n

    def has_element_of_order(self, n: int) -> bool:
        return any(self.element_order(e) == n for e in self.elements())


CYCLIC4 = AbelianGroup((4,))
KLEIN4 = AbelianGroup((2, 2))


def _admits_kappa_eq_two_eta(group: AbelianGroup) -> bool:
    # exhaustive search for kappa != 0 with 2*kappa = 0 and eta with 2*eta = kappa
    zero = (0,) * len(group.invariant_factors)
    for kappa in group.elements():
        if kappa == zero or group.add(kappa, kappa) != zero:
            continue
        for eta in group.elements():
            if group.add(eta, eta) == kappa:
                return True
    return False


def classify_order4_extension(kappa_equals_two_eta: bool) -> AbelianGroup:
    """Identify the middle group of 0 -> Z2 -> G -> Z2 -> 0 by exhaustive
    check over the two groups of order 4.

    The kernel is generated by a class [kappa] with 2[kappa] = 0; when some
    lift [eta] of the quotient generator satisfies 2[eta] = [kappa] != 0 the
    group has an element of order 4 and is cyclic, otherwise the extension
    splits.
    """
    matching = [g for g in (CYCLIC4, KLEIN4) if _admits_kappa_eq_two_eta(g) == kappa_equals_two_eta]
    if kappa_equals_two_eta:
        assert matching == [CYCLIC4]
        return CYCLIC4
    assert KLEIN4 in matching
    return KLEIN4


# ---------------------------------------------------------------------------
# minimal models of the circle quotients


def theorem3_model(spec: SpaceFormSpec) -> DgaModel:
    """Minimal model of the SO(2) homotopy quotient of the loop component.

    For n = 2k the generators have degrees 2, 4k-2, 4k-1 with the top
    differential u2^(2k) (the exponent is forced by degree accounting, since
    the differential raises degree by exactly one).  For n = 2k+1 they have
    degrees 2, 2k, 2k+1 with top differential u2^(k+1).  When the middle
    generator also has degree 2 it is named v2.
    """
    if spec.n % 2 == 0:
        k = spec.n // 2
        mid, top, power = 4 * k - 2, 4 * k - 1, 2 * k
    else:
        k = (spec.n - 1) // 2
        mid, top, power = 2 * k, 2 * k + 1, k + 1
    mid_name = "v2" if mid == 2 else f"u{mid}"
    top_name = f"u{top}"
    return DgaModel(
        [("u2", 2), (mid_name, mid), (top_name, top)],
        {top_name: [(1, {"u2": power})]},
        name=f"loop_quotient_s{spec.n}",
    )


def euler_class(model: DgaModel) -> AlgebraElement:
    """The degree-2 Euler class of the circle fibration over the model:
    the first degree-2 generator with zero differential."""
    for g in model.generators:
        if g.degree == 2 and model.differential_of(g.name).is_zero:
            return model.gen(g.name)
    raise ValueError(f"model {model.name!r} has no closed degree-2 generator")


def euler_action_matrices(
    data: ComplexData, euler: AlgebraElement | None = None
) -> list[Matrix]:
    """Cup product by the Euler class on representative bases: the matrix at
    index p sends the degree-p classes to degree p+2."""
    if euler is None:
        euler = euler_class(data.model)
    matrices: list[Matrix] = []
    for p in range(data.max_degree - 1):
        source = data.representative_elements(p)
        target_dim = len(data.degrees[p + 2].reps)
        columns = []
        for rep in source:
            coords = data.class_coordinates(euler * rep, p + 2)
            columns.append(coords)
        rows = tuple(
            tuple(columns[j][i] for j in range(len(source))) for i in range(target_dim)
        )
        matrices.append(rows)
    return matrices


# ---------------------------------------------------------------------------
# Gysin rank consistency


@dataclass(frozen=True)
class GysinInput:
    """Data of a circle bundle: base Betti table, cup-by-Euler-class
    matrices (index p maps degree p to p+2), and the claimed total-space
    Betti table.  Both tables share one truncation degree."""

    base: BettiTable
    euler: tuple[Matrix | None, ...]
    total: BettiTable

    def __post_init__(self):
        if self.base.max_degree != self.total.max_degree:
            raise ValueError("base and total tables must share max_degree")
        euler = []
        for p, m in enumerate(self.euler):
            if m is None:
                euler.append(None)
                continue
            nrows = self.base.dim(p + 2)
            ncols = self.base.dim(p)
            euler.append(_matrix(m, nrows, ncols, f"euler action at degree {p}"))
        object.__setattr__(self, "euler", tuple(euler))

    def euler_rank(self, p: int) -> int:
        if p < 0 or p >= len(self.euler) or self.euler[p] is None:
            return 0
        return linalg.rank(self.euler[p])


GYSIN_CONVENTIONS = (
    "out-of-range degrees carry zero groups and zero maps; "
    "euler maps beyond the supplied list are zero"
)


@dataclass(frozen=True)
class GysinReport:
    passed: bool
    checked_up_to: int
    first_failure: int | None
    detail: str
    conventions: str = GYSIN_CONVENTIONS

    def format(self) -> str:
        if self.passed:
            return (
                f"pass  rank identity holds for degrees 0..{self.checked_up_to}\n"
                f"note: {self.conventions}"
            )
        return (
            f"FAIL at degree {self.first_failure}: {self.detail}\n"
            f"note: {self.conventions}"
        )


def gysin_check(inputs: GysinInput) -> GysinReport:
    """Verify the circle-bundle rank identity
    total[p] = dim coker(euler at p-2) + dim ker(euler at p-1)
    for every p up to max_degree - 2 (higher degrees would consult maps
    beyond the truncation)."""
    top = inputs.base.max_degree - 2
    for p in range(0, top + 1):
        coker = inputs.base.dim(p) - inputs.euler_rank(p - 2)
        ker = inputs.base.dim(p - 1) - inputs.euler_rank(p - 1)
        expected = coker + ker
        got = inputs.total.dim(p)
        if expected != got:
            detail = (
                f"total dimension is {got} but coker({p - 2}->{p}) + ker({p - 1}->{p + 1}) "
                f"= {coker} + {ker} = {expected}"
            )
            return GysinReport(False, top, p, detail)
    return GysinReport(True, top, None, "")


def rank_identity_totals(base: BettiTable, euler: Sequence[Matrix | None]) -> BettiTable:
    """The total-space Betti table forced by the rank identity (degrees
    within max_degree - 2; the last two degrees are filled by the same
    formula with out-of-range maps treated as zero)."""
    inputs = GysinInput(base, tuple(euler), BettiTable.from_dims([0] * (base.max_degree + 1)))
    dims = []
    for p in range(base.max_degree + 1):
        coker = base.dim(p) - inputs.euler_rank(p - 2)
        ker = base.dim(p - 1) - inputs.euler_rank(p - 1)
        dims.append(coker + ker)
    return BettiTable.from_dims(dims)


def circle_quotient_gysin_input(
    spec: SpaceFormSpec,
    max_degree: int = DEFAULT_MAX_DEGREE,
    *,
    basis_limit: int = DEFAULT_BASIS_LIMIT,
) -> GysinInput:
    """Self-consistency fixture: base = cohomology of the quotient's minimal
    model, Euler action = cup product by u2, totals derived from the rank
    identity."""
    model = theorem3_model(spec)
    data = cochain_complex(model, max_degree, basis_limit=basis_limit)
    base = data.betti()
    euler = tuple(euler_action_matrices(data))
    total = rank_identity_totals(base, euler)
    return GysinInput(base, euler, total)
