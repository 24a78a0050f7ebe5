"""Exact Bott index iteration and geodesic-multiplicity certificates.

The index function I of a closed geodesic is a step function on the unit
circle: the index of the m-th iterate is the sum of I over the m-th roots
of unity.  Angles are exact rationals measured in turns (the angle is
2*pi*turns), so membership of a root of unity in an arc is decided exactly;
no floating point appears anywhere.

The certificate searches replay two contradiction arguments: the
projective-plane two-geodesic argument (``certify_theorem4``) and the
even-cell fundamental-group argument for odd-dimensional space forms
(``certify_theorem5``).  Certificates carry their full parameters and a
per-candidate transcript so they can be re-checked independently.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .gca.cohomology import BettiTable, RingPresentation, quotient_ring_dims
from .spaceforms import SpaceFormSpec, theorem2_table

HALF = Fraction(1, 2)

CONTRADICTION_ESTABLISHED = "contradiction-established"
INCONCLUSIVE = "inconclusive"


def normalize_turn(value) -> Fraction:
    """Exact angle in turns, reduced into [0, 1)."""
    return Fraction(value) % 1


@dataclass(frozen=True)
class BottFunction:
    """A non-negative integer step function on the circle.

    ``discontinuities`` are sorted turns in [0, 1); ``arc_values[i]`` is the
    value on the open arc following discontinuity i (cyclically), and
    ``point_values[i]`` the value exactly at discontinuity i.  A function
    with no discontinuities stores its constant value as the single arc
    value.  The discontinuity set must be invariant under complex
    conjugation (turns -> 1 - turns) with matching values.
    """

    discontinuities: tuple[Fraction, ...]
    arc_values: tuple[int, ...]
    point_values: tuple[int, ...]

    def __post_init__(self):
        disc = self.discontinuities
        if list(disc) != sorted(set(disc)):
            raise ValueError("discontinuities must be strictly increasing")
        if any(not (0 <= t < 1) for t in disc):
            raise ValueError("discontinuities must be turns in [0, 1)")
        n_arcs = len(disc) if disc else 1
        if len(self.arc_values) != n_arcs:
            raise ValueError(f"expected {n_arcs} arc values, got {len(self.arc_values)}")
        if len(self.point_values) != len(disc):
            raise ValueError(f"expected {len(disc)} point values, got {len(self.point_values)}")
        values = self.arc_values + self.point_values
        if any(not isinstance(v, int) or v < 0 for v in values):
            raise ValueError("values of the index function are non-negative integers")
        self._check_conjugation_symmetry()

    def _check_conjugation_symmetry(self):
        disc = self.discontinuities
        if not disc:
            return
        index = {t: i for i, t in enumerate(disc)}
        k = len(disc)
        for t in disc:
            if (1 - t) % 1 not in index:
                raise ValueError(
                    f"discontinuity set is not conjugation symmetric: {t} has no partner {(1 - t) % 1}"
                )
        for i, t in enumerate(disc):
            j = index[(1 - t) % 1]
            if self.point_values[i] != self.point_values[j]:
                raise ValueError(f"point values at {t} and {(1 - t) % 1} differ")
            # the arc after disc i maps to the arc after the conjugate of disc i+1
            partner = index[(1 - disc[(i + 1) % k]) % 1]
            if self.arc_values[i] != self.arc_values[partner]:
                raise ValueError(
                    f"arc values are not conjugation symmetric "
                    f"(arc after {t} vs arc after {disc[partner]})"
                )

    @classmethod
    def build(
        cls,
        discontinuities: Iterable,
        arc_values: Iterable[int],
        point_values: Iterable[int] | None = None,
        *,
        ambient_dim: int | None = None,
    ) -> "BottFunction":
        """Construct from possibly unsorted data.

        Discontinuities are normalised into [0, 1) and sorted together with
        their arc and point values.  Omitted point values default to the
        minimum of the two adjacent arc values.  With ``ambient_dim`` = n the
        number of discontinuities is checked against the bound 2n - 2 on
        unit-circle eigenvalues of a linearised Poincare map.
        """
        disc = [normalize_turn(t) for t in discontinuities]
        arcs = [int(v) for v in arc_values]
        if len(set(disc)) != len(disc):
            raise ValueError("duplicate discontinuities")
        if ambient_dim is not None and len(disc) > 2 * ambient_dim - 2:
            raise ValueError(
                f"{len(disc)} discontinuities exceed the bound 2n-2 = {2 * ambient_dim - 2}"
            )
        if disc:
            order = sorted(range(len(disc)), key=lambda i: disc[i])
            if len(arcs) != len(disc):
                raise ValueError(f"expected {len(disc)} arc values, got {len(arcs)}")
            disc_sorted = [disc[i] for i in order]
            arcs_sorted = [arcs[i] for i in order]
            if point_values is None:
                points_sorted = [
                    min(arcs_sorted[i - 1], arcs_sorted[i]) for i in range(len(disc_sorted))
                ]
            else:
                points = [int(v) for v in point_values]
                if len(points) != len(disc):
                    raise ValueError(f"expected {len(disc)} point values, got {len(points)}")
                points_sorted = [points[i] for i in order]
            return cls(tuple(disc_sorted), tuple(arcs_sorted), tuple(points_sorted))
        if point_values is not None and list(point_values):
            raise ValueError("point values require discontinuities")
        return cls((), tuple(arcs), ())

    @classmethod
    def constant(cls, value: int) -> "BottFunction":
        return cls((), (int(value),), ())

    def arc_after(self, i: int) -> tuple[Fraction, Fraction]:
        """Endpoints of the open arc following discontinuity i; the last arc
        wraps, ending at discontinuities[0] + 1."""
        disc = self.discontinuities
        if i + 1 < len(disc):
            return disc[i], disc[i + 1]
        return disc[i], disc[0] + 1

    def value_at(self, turns) -> int:
        """I at the given angle: the point value on a discontinuity, else
        the value of the enclosing open arc."""
        t = normalize_turn(turns)
        disc = self.discontinuities
        if not disc:
            return self.arc_values[0]
        i = bisect_right(disc, t) - 1
        if i >= 0 and disc[i] == t:
            return self.point_values[i]
        return self.arc_values[i if i >= 0 else len(disc) - 1]


def quarter_turn_function() -> BottFunction:
    """The step function with jumps at quarter turns: 0 on the arc through
    angle 0, 1 on the opposite arc.  This is the index function of the
    minimal non-contractible geodesic in the projective-plane argument."""
    return BottFunction.build((Fraction(1, 4), Fraction(3, 4)), (1, 0), (0, 0))


def _integers_strictly_between(lo: Fraction, hi: Fraction) -> int:
    first = math.floor(lo) + 1
    last = math.ceil(hi) - 1
    return max(0, last - first + 1)


def bott_index(f: BottFunction, m: int) -> int:
    """Index of the m-th iterate: the exact sum of I over the m-th roots of
    unity (turns j/m, j = 0..m-1).

    Evaluated by counting the roots inside each open arc and adding point
    values for roots that hit discontinuities.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"iterate must be a positive integer, got {m!r}")
    disc = f.discontinuities
    if not disc:
        return m * f.arc_values[0]
    total = 0
    for i, t in enumerate(disc):
        if (m * t).denominator == 1:
            total += f.point_values[i]
        lo, hi = f.arc_after(i)
        total += f.arc_values[i] * _integers_strictly_between(m * lo, m * hi)
    return total


def is_nondegenerate(f: BottFunction, m: int) -> bool:
    """True when no discontinuity angle lands on +-1 after m-fold iteration,
    i.e. m * turns is never an integer or a half-integer."""
    if m < 1:
        raise ValueError(f"iterate must be a positive integer, got {m!r}")
    for t in f.discontinuities:
        r = (m * t) % 1
        if r == 0 or r == HALF:
            return False
    return True


def schwarz_even(f: BottFunction, m: int) -> bool:
    """Whether ind(m-th iterate) - ind(first iterate) is even; this is the
    condition for the iterate to contribute to equivariant rational homology."""
    return (bott_index(f, m) - bott_index(f, 1)) % 2 == 0


def index_parity(f: BottFunction, m: int) -> int:
    """Parity (0 or 1) of the m-th index.  By conjugation symmetry non-real
    roots contribute in pairs, so this equals the parity of I(1) for odd m
    and of I(1) + I(-1) for even m."""
    return bott_index(f, m) % 2


@dataclass(frozen=True)
class IndexSequence:
    """Indices of selected iterates, (m, index) with m strictly increasing."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ms = [m for m, _ in self.entries]
        if ms != sorted(set(ms)) or any(m < 1 for m in ms):
            raise ValueError("iterates must be strictly increasing positive integers")
        if any(i < 0 for _, i in self.entries):
            raise ValueError("indices are non-negative")

    @classmethod
    def from_function(cls, f: BottFunction, iterates: Iterable[int]) -> "IndexSequence":
        return cls(tuple((m, bott_index(f, m)) for m in iterates))

    def indices(self) -> tuple[int, ...]:
        return tuple(i for _, i in self.entries)


def morse_matches_betti(seq: IndexSequence, betti: BettiTable) -> bool:
    """Perfect equivariant Morse matching against a Betti table.

    Each entry stands for one non-degenerate critical orbit contributing one
    dimension in its index degree.  True when the multiset of indices at
    most betti.max_degree equals the multiset of degrees counted with
    multiplicity betti.dims[d]; entries above the cutoff are ignored.
    """
    cutoff = betti.max_degree
    counted = Counter(i for _, i in seq.entries if i <= cutoff)
    target = Counter({d: n for d, n in enumerate(betti.dims) if n})
    return counted == target


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable transcript of a contradiction search.

    ``verdict`` is contradiction-established exactly when every survivor
    fails a required condition recorded in the transcript; otherwise the
    search is inconclusive.  Parameters echo everything needed to replay the
    search.
    """

    kind: str
    parameters: dict
    survivors: tuple
    verdict: str
    transcript: tuple

    @property
    def established(self) -> bool:
        return self.verdict == CONTRADICTION_ESTABLISHED


def _candidate_payload(f: BottFunction) -> dict:
    return {
        "disc": list(f.discontinuities),
        "arcs": list(f.arc_values),
        "points": list(f.point_values),
    }


def _match_against_targets(
    f: BottFunction, iterate_cutoff: int, target: Counter, degree_cutoff: int
) -> tuple[bool, str]:
    counts: Counter = Counter()
    for m in range(1, iterate_cutoff + 1, 2):
        ind = bott_index(f, m)
        if ind > degree_cutoff:
            continue
        if target.get(ind, 0) == 0:
            return False, f"iterate {m} has index {ind}, not covered by the Betti targets"
        counts[ind] += 1
        if counts[ind] > target[ind]:
            return False, f"iterate {m} overfills index {ind} (multiplicity {target[ind]})"
    for d in sorted(target):
        if counts[d] != target[d]:
            return False, f"index {d} covered {counts[d]} times, target {target[d]}"
    return True, ""


QUARTER_TURNS = (Fraction(1, 4), Fraction(3, 4))


def certify_theorem4(
    grid_denominator: int, value_bound: int, iterate_cutoff: int
) -> Certificate:
    """Exhaustive two-geodesic certificate for the projective plane.

    Enumerates every step function with at most one conjugate pair of
    discontinuities on the grid j/N, values bounded by V, and value 0 on the
    arc through angle 0 (a minimal geodesic has index 0).  A candidate
    survives when its odd-iterate index sequence up to M is a perfect Morse
    match for the Betti numbers Q[w,z]/(w^2), deg w = deg z = 2, of the
    equivariant loop space.  The verdict is contradiction-established when
    survivors exist and every survivor jumps exactly at quarter turns and is
    degenerate at the doubled iterate - i.e. the single-geodesic hypothesis
    contradicts bumpiness.  With no survivors the Morse-matching premise
    itself failed and the search is inconclusive.

    Preconditions: N even and >= 2 (so quarter turns can lie on the grid),
    M odd with M >= 2N + 1 (iterates beyond the grid denominator are what
    eliminate the off-quarter candidates).
    """
    N, V, M = grid_denominator, value_bound, iterate_cutoff
    if not isinstance(N, int) or N < 2 or N % 2:
        raise ValueError(f"grid denominator must be an even integer >= 2, got {N!r}")
    if not isinstance(V, int) or V < 0:
        raise ValueError(f"value bound must be a non-negative integer, got {V!r}")
    if not isinstance(M, int) or M % 2 == 0 or M < 2 * N + 1:
        raise ValueError(f"iterate cutoff must be an odd integer >= 2N+1 = {2 * N + 1}, got {M!r}")

    degree_cutoff = 2 * (((M - 1) // 2) // 2)
    betti = BettiTable.from_dims(quotient_ring_dims(RingPresentation(2, 2, 2), degree_cutoff))
    target = Counter({d: n for d, n in enumerate(betti.dims) if n})

    candidates: list[BottFunction] = [BottFunction.constant(0)]
    for j in range(1, (N - 1) // 2 + 1):
        t = Fraction(j, N)
        for a in range(0, V + 1):
            candidates.append(BottFunction.build((t, 1 - t), (a, 0)))

    transcript: list[dict] = []
    survivors: list[BottFunction] = []
    for f in candidates:
        matched, reason = _match_against_targets(f, M, target, degree_cutoff)
        entry = {"candidate": _candidate_payload(f), "matched": matched}
        if not matched:
            entry["reason"] = reason
        transcript.append(entry)
        if matched:
            seq = IndexSequence.from_function(f, range(1, M + 1, 2))
            assert morse_matches_betti(seq, betti)
            survivors.append(f)

    survivors.sort(key=lambda f: (f.discontinuities, f.arc_values))
    all_fail_required = bool(survivors)
    for f in survivors:
        quarter = f.discontinuities == QUARTER_TURNS
        degenerate = not is_nondegenerate(f, 2)
        transcript.append(
            {
                "survivor": _candidate_payload(f),
                "quarter_turns": quarter,
                "degenerate_at_iterate_2": degenerate,
                "fails_nondegeneracy": quarter and degenerate,
            }
        )
        if not (quarter and degenerate):
            all_fail_required = False

    if not survivors:
        verdict = INCONCLUSIVE
        transcript.append({"note": "no candidate matched the Betti targets; the Morse premise failed"})
    else:
        verdict = CONTRADICTION_ESTABLISHED if all_fail_required else INCONCLUSIVE

    parameters = {
        "grid_denominator": N,
        "value_bound": V,
        "iterate_cutoff": M,
        "degree_cutoff": degree_cutoff,
        "betti_targets": list(betti.dims),
        "candidates": len(candidates),
        "search_space": "conjugate pairs {j/N, 1-j/N}, 0 < j < N/2, plus the zero function; "
        "inner arc through angle 0 fixed to 0; point values at the minimum "
        "of adjacent arcs",
    }
    return Certificate(
        kind="theorem4",
        parameters=parameters,
        survivors=tuple(_candidate_payload(f) for f in survivors),
        verdict=verdict,
        transcript=tuple(transcript),
    )


def certify_theorem5(
    spec: SpaceFormSpec,
    pairwise_nonconjugate: bool,
    k: int,
    f: BottFunction,
    iterate_count: int,
) -> Certificate:
    """Even-parity certificate for a single-geodesic hypothesis on an
    odd-dimensional space form.

    Hypotheses: h has even order 2p, centralizer elements are pairwise
    non-conjugate (taken as an input flag), and the minimal closed geodesic
    of the class is the k-th iterate of a simple geodesic with index
    function f, so bott_index(f, k) must be 0.  The certificate computes
    pi_1 of the equivariant loop space; when it is nontrivial and the
    indices of the iterates k(1 + 2pl), l = 0..L, are all even, the handle
    decomposition would consist of even cells only, contradicting the
    fundamental group - verdict contradiction-established.  An odd index or
    a trivial pi_1 makes the search inconclusive.

    The step from all-even indices to the contradiction uses the handle
    decomposition of the quotient and is recorded as an assumption in the
    parameters, not recomputed.
    """
    if spec.element_order % 2:
        raise ValueError(f"h must have even order, got {spec.element_order}")
    if not pairwise_nonconjugate:
        raise ValueError("the certificate requires pairwise non-conjugate centralizer elements")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if not isinstance(iterate_count, int) or iterate_count < 0:
        raise ValueError(f"iterate count must be >= 0, got {iterate_count!r}")
    if bott_index(f, k) != 0:
        raise ValueError(
            f"the minimal geodesic must have index 0, got bott_index(f, {k}) = {bott_index(f, k)}"
        )

    p2 = spec.element_order
    pi1 = theorem2_table(spec, 3).pi1
    parameters = {
        "n": spec.n,
        "r": spec.r,
        "element_order": p2,
        "k": k,
        "iterate_count": iterate_count,
        "pi1_order": pi1,
        "pairwise_nonconjugate": pairwise_nonconjugate,
        "assumption": "a handle decomposition with only even-dimensional cells "
        "forces a trivial fundamental group",
    }
    survivor = {"bott_function": _candidate_payload(f), "k": k}

    if pi1 <= 1:
        return Certificate(
            kind="theorem5",
            parameters=parameters,
            survivors=(survivor,),
            verdict=INCONCLUSIVE,
            transcript=(
                {"note": "pi_1 of the equivariant loop space is trivial; no contradiction available"},
            ),
        )

    transcript = []
    offending = None
    for l in range(iterate_count + 1):
        m = k * (1 + p2 * l)
        ind = bott_index(f, m)
        parity = ind % 2
        transcript.append({"l": l, "iterate": m, "index": ind, "parity": "odd" if parity else "even"})
        if parity and offending is None:
            offending = m
    if offending is None:
        verdict = CONTRADICTION_ESTABLISHED
        transcript.append(
            {
                "note": f"all listed indices are even while pi_1 has order {pi1}; "
                "the single-geodesic hypothesis fails"
            }
        )
    else:
        verdict = INCONCLUSIVE
        transcript.append({"note": f"iterate {offending} has odd index; no parity obstruction"})
    return Certificate(
        kind="theorem5",
        parameters=parameters,
        survivors=(survivor,),
        verdict=verdict,
        transcript=tuple(transcript),
    )


def parity_distinct(ind_a: int, ind_b: int) -> bool:
    """Whether two homology-contributing geodesics of these indices are
    forced distinct because their indices have different parity."""
    if ind_a < 0 or ind_b < 0:
        raise ValueError("indices are non-negative")
    return (ind_a - ind_b) % 2 == 1


def parity_remark_certificate(ind_a: int, ind_b: int) -> Certificate:
    """Certificate form of the parity test for a pair of geodesics."""
    distinct = parity_distinct(ind_a, ind_b)
    return Certificate(
        kind="parity-remark",
        parameters={"ind_a": ind_a, "ind_b": ind_b},
        survivors=({"indices": [ind_a, ind_b]},),
        verdict=CONTRADICTION_ESTABLISHED if distinct else INCONCLUSIVE,
        transcript=(
            {
                "note": "indices have different parity; the geodesics are distinct"
                if distinct
                else "indices share parity; no conclusion"
            },
        ),
    )
