"""Free graded skew-commutative algebras over the rationals.

A :class:`DgaModel` is a free graded-commutative algebra on finitely many
homogeneous generators together with a degree-raising differential.  All
coefficients are exact :class:`fractions.Fraction` values; no floating point
enters any computation.

Monomials are kept in a canonical form: generators are ordered by
(degree, declaration order) and products are normalised to that order,
accumulating Koszul signs.  A generator of odd degree squares to zero, so its
exponent in any stored monomial is 0 or 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union


class GcaError(ValueError):
    """Invalid algebraic input."""


class UnknownGeneratorError(GcaError):
    """An operand mentions a generator the model does not declare."""


class MixedDegreeError(GcaError):
    """A homogeneous-degree query was made on a mixed-degree element."""


CoeffLike = Union[int, str, Fraction]
ExponentsLike = Union[Mapping[str, int], Iterable[tuple[str, int]]]
#: Raw polynomial: list of (coefficient, exponent map) pairs, e.g.
#: ``[(1, {"u2": 2})]`` for u2^2.  Used to declare differentials before the
#: model exists.
RawPoly = Iterable[tuple[CoeffLike, ExponentsLike]]


@dataclass(frozen=True, slots=True)
class Generator:
    """A homogeneous algebra generator; degree must be >= 1."""

    name: str
    degree: int

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise GcaError(f"generator name must be a non-empty string, got {self.name!r}")
        if not isinstance(self.degree, int) or self.degree < 1:
            raise GcaError(f"generator {self.name!r} must have integer degree >= 1, got {self.degree!r}")


@dataclass(frozen=True, slots=True)
class Monomial:
    """Exponent vector over a model's generators, in canonical order."""

    exps: tuple[int, ...]

    @property
    def is_one(self) -> bool:
        return not any(self.exps)


def _coeff(value: CoeffLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise GcaError(f"coefficient must be exact (int, Fraction or 'p/q' string), got {value!r}")


class DgaModel:
    """A free graded skew-commutative algebra with a differential.

    ``generators`` may be :class:`Generator` instances or ``(name, degree)``
    pairs; they are stored stably sorted by degree, which fixes the canonical
    monomial order.  ``differentials`` maps generator names to raw
    polynomials (see :data:`RawPoly`); omitted generators get differential 0.

    Construction is permissive about the *calculus*: differentials that fail
    degree-raising, minimality or d^2 = 0 are representable and are reported
    by :func:`loopspace.gca.cohomology.check_model` rather than rejected
    here.  Structural problems (duplicate names, unknown generators, bad
    coefficients) raise :class:`GcaError`.

    Generators whose declared differential mentions at least one nonzero
    term but normalises to the zero element (an odd square, or exact
    cancellation) are recorded in ``collapsed``; ``check_model`` flags such
    models as degenerate.
    """

    __slots__ = ("name", "generators", "collapsed", "_index", "_diffs", "_odd", "_basis_cache")

    def __init__(
        self,
        generators: Sequence[Generator | tuple[str, int]],
        differentials: Mapping[str, RawPoly] | None = None,
        *,
        name: str = "model",
    ):
        gens = tuple(g if isinstance(g, Generator) else Generator(*g) for g in generators)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            dup = sorted({n for n in names if names.count(n) > 1})
            raise GcaError(f"duplicate generator names: {', '.join(dup)}")
        self.name = name
        self.generators = tuple(sorted(gens, key=lambda g: g.degree))
        self._index = {g.name: i for i, g in enumerate(self.generators)}
        self._odd = tuple(i for i, g in enumerate(self.generators) if g.degree % 2 == 1)
        self._basis_cache: dict[int, tuple[Monomial, ...]] = {}

        diffs: dict[str, dict[Monomial, Fraction]] = {g.name: {} for g in self.generators}
        collapsed = []
        for target, raw in (differentials or {}).items():
            if target not in self._index:
                raise UnknownGeneratorError(f"differential declared for unknown generator {target!r}")
            terms, had_nonzero = self._normalize_raw(raw)
            diffs[target] = terms
            if had_nonzero and not terms:
                collapsed.append(target)
        self._diffs = diffs
        self.collapsed = frozenset(collapsed)

    # -- introspection -------------------------------------------------

    def generator(self, name: str) -> Generator:
        try:
            return self.generators[self._index[name]]
        except KeyError:
            raise UnknownGeneratorError(f"unknown generator {name!r}") from None

    def generator_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownGeneratorError(f"unknown generator {name!r}") from None

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def monomial_degree(self, mon: Monomial) -> int:
        return sum(e * g.degree for e, g in zip(mon.exps, self.generators))

    def exponent_map(self, mon: Monomial) -> dict[str, int]:
        return {g.name: e for g, e in zip(self.generators, mon.exps) if e}

    # -- construction of elements --------------------------------------

    def monomial(self, exponents: ExponentsLike) -> Monomial:
        """Canonical monomial from a {name: exponent} mapping.

        Raises on unknown generators, negative exponents, and exponents >= 2
        on odd-degree generators (such monomials are identically zero).
        """
        exps = [0] * self.ngens
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        for gname, e in items:
            i = self.generator_index(gname)
            if not isinstance(e, int) or e < 0:
                raise GcaError(f"exponent of {gname!r} must be a non-negative integer, got {e!r}")
            exps[i] += e
        for i in self._odd:
            if exps[i] > 1:
                g = self.generators[i]
                raise GcaError(f"odd-degree generator {g.name!r} squared is zero (exponent {exps[i]})")
        return Monomial(tuple(exps))

    def element(self, raw: RawPoly) -> "AlgebraElement":
        """Element from raw terms; odd-square terms vanish silently."""
        terms, _ = self._normalize_raw(raw)
        return AlgebraElement(self, terms)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {Monomial((0,) * self.ngens): Fraction(1)})

    def gen(self, name: str) -> "AlgebraElement":
        return AlgebraElement(self, {self.monomial({name: 1}): Fraction(1)})

    def monomial_element(self, mon: Monomial, coeff: CoeffLike = 1) -> "AlgebraElement":
        c = _coeff(coeff)
        return AlgebraElement(self, {mon: c} if c else {})

    def from_coords(self, basis: Sequence[Monomial], coords: Sequence[Fraction]) -> "AlgebraElement":
        terms = {m: Fraction(c) for m, c in zip(basis, coords) if c}
        return AlgebraElement(self, terms)

    def _normalize_raw(self, raw: RawPoly) -> tuple[dict[Monomial, Fraction], bool]:
        terms: dict[Monomial, Fraction] = {}
        had_nonzero = False
        for coeff, exponents in raw:
            c = _coeff(coeff)
            if not c:
                continue
            had_nonzero = True
            exps = [0] * self.ngens
            items = exponents.items() if isinstance(exponents, Mapping) else exponents
            for gname, e in items:
                i = self.generator_index(gname)
                if not isinstance(e, int) or e < 0:
                    raise GcaError(f"exponent of {gname!r} must be a non-negative integer, got {e!r}")
                exps[i] += e
            if any(exps[i] > 1 for i in self._odd):
                continue  # odd square: the term is zero
            mon = Monomial(tuple(exps))
            acc = terms.get(mon, Fraction(0)) + c
            if acc:
                terms[mon] = acc
            else:
                terms.pop(mon, None)
        return terms, had_nonzero

    # -- differential ---------------------------------------------------

    def differential_of(self, name: str) -> "AlgebraElement":
        self.generator_index(name)
        return AlgebraElement(self, dict(self._diffs[name]))

    # -- monomial arithmetic --------------------------------------------

    def multiply_monomials(self, a: Monomial, b: Monomial) -> tuple[int, Monomial] | None:
        """Koszul-signed product; None when an odd generator would square."""
        sign = 1
        for i in self._odd:
            if a.exps[i] and b.exps[i]:
                return None
        a_odd = [i for i in self._odd if a.exps[i]]
        b_odd = [i for i in self._odd if b.exps[i]]
        if a_odd and b_odd:
            inversions = sum(1 for i in a_odd for j in b_odd if i > j)
            if inversions % 2:
                sign = -1
        exps = tuple(x + y for x, y in zip(a.exps, b.exps))
        return sign, Monomial(exps)

    # -- basis enumeration ------------------------------------------------

    def basis(self, degree: int) -> tuple[Monomial, ...]:
        """All monomials of the given total degree, lexicographically
        descending in the canonical exponent vector."""
        if degree < 0:
            return ()
        cached = self._basis_cache.get(degree)
        if cached is None:
            out: list[Monomial] = []
            exps = [0] * self.ngens
            self._enumerate(0, degree, exps, out)
            cached = tuple(out)
            self._basis_cache[degree] = cached
        return cached

    def _enumerate(self, i: int, remaining: int, exps: list[int], out: list[Monomial]) -> None:
        if remaining == 0:
            out.append(Monomial(tuple(exps[:i]) + (0,) * (self.ngens - i)))
            return
        if i == self.ngens:
            return
        g = self.generators[i]
        top = remaining // g.degree
        if g.degree % 2 == 1:
            top = min(top, 1)
        for e in range(top, -1, -1):
            exps[i] = e
            self._enumerate(i + 1, remaining - e * g.degree, exps, out)
        exps[i] = 0

    # -- value semantics ---------------------------------------------------

    def signature(self) -> tuple:
        return (
            self.name,
            self.generators,
            tuple((g.name, tuple(sorted(self._diffs[g.name].items(), key=lambda t: t[0].exps)))
                  for g in self.generators),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, DgaModel):
            return NotImplemented
        return self.signature() == other.signature()

    def __hash__(self) -> int:
        return hash(self.signature())

    def __repr__(self) -> str:
        gens = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"DgaModel({self.name!r}, [{gens}])"

    # -- formatting ---------------------------------------------------------

    def format_monomial(self, mon: Monomial) -> str:
        if mon.is_one:
            return "1"
        parts = []
        for g, e in zip(self.generators, mon.exps):
            if e == 1:
                parts.append(g.name)
            elif e > 1:
                parts.append(f"{g.name}^{e}")
        return "*".join(parts)

    def format_element(self, x: "AlgebraElement") -> str:
        if x.is_zero:
            return "0"
        parts = []
        for mon, c in x.sorted_terms():
            if mon.is_one:
                parts.append(str(c))
            elif c == 1:
                parts.append(self.format_monomial(mon))
            else:
                parts.append(f"{c}*{self.format_monomial(mon)}")
        return " + ".join(parts)


class AlgebraElement:
    """A finite rational combination of canonical monomials of one model."""

    __slots__ = ("model", "terms")

    def __init__(self, model: DgaModel, terms: dict[Monomial, Fraction]):
        self.model = model
        self.terms = terms

    # -- queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mon: Monomial) -> Fraction:
        return self.terms.get(mon, Fraction(0))

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({self.model.monomial_degree(m) for m in self.terms}))

    def homogeneous_degree(self) -> int | None:
        """Common degree of all terms; None for the zero element.

        Raises :class:`MixedDegreeError` when terms of different degrees are
        present.
        """
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise MixedDegreeError(f"element mixes degrees {list(degs)}")
        return degs[0]

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(
            self.terms.items(),
            key=lambda t: (self.model.monomial_degree(t[0]), tuple(-e for e in t[0].exps)),
        )

    def coords(self, basis: Sequence[Monomial]) -> list[Fraction]:
        return [self.terms.get(m, Fraction(0)) for m in basis]

    # -- arithmetic ------------------------------------------------------

    def _check_compatible(self, other: "AlgebraElement") -> None:
        if self.model is not other.model and self.model != other.model:
            raise UnknownGeneratorError("operands belong to different models")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m, Fraction(0)) + c
            if acc:
                terms[m] = acc
            else:
                terms.pop(m, None)
        return AlgebraElement(self.model, terms)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.model, {m: -c for m, c in self.terms.items()})

    def scale(self, value: CoeffLike) -> "AlgebraElement":
        c = _coeff(value)
        if not c:
            return AlgebraElement(self.model, {})
        return AlgebraElement(self.model, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check_compatible(other)
            out: dict[Monomial, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    prod = self.model.multiply_monomials(m1, m2)
                    if prod is None:
                        continue
                    sign, mon = prod
                    acc = out.get(mon, Fraction(0)) + sign * c1 * c2
                    if acc:
                        out[mon] = acc
                    else:
                        out.pop(mon, None)
            return AlgebraElement(self.model, out)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "AlgebraElement":
        if not isinstance(n, int) or n < 0:
            raise GcaError(f"exponent must be a non-negative integer, got {n!r}")
        result = self.model.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.model == other.model and self.terms == other.terms

    __hash__ = None  # mutable-dict backed; identity hashing would mislead

    def __repr__(self) -> str:
        return f"<{self.model.format_element(self)}>"


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Graded-commutative product with Koszul signs.

    Swapping homogeneous factors of degrees p and q multiplies by (-1)^(pq);
    odd-degree generators square to zero.
    """
    if not isinstance(a, AlgebraElement) or not isinstance(b, AlgebraElement):
        raise GcaError("multiply expects two algebra elements")
    return a * b


def apply_differential(x: AlgebraElement, model: DgaModel | None = None) -> AlgebraElement:
    """Extend the model's differential to ``x`` by the graded Leibniz rule.

    d(ab) = (da)b + (-1)^deg(a) a(db); the differential of each term has
    degree one above the term whenever the model's generator differentials
    raise degree by one.
    """
    if model is not None and model is not x.model and model != x.model:
        raise UnknownGeneratorError("element does not belong to the given model")
    mod = x.model
    result = mod.zero()
    for mon, coeff in x.terms.items():
        prefix_deg = 0
        for i, e in enumerate(mon.exps):
            g = mod.generators[i]
            if e:
                dg = mod.differential_of(g.name)
                if not dg.is_zero:
                    rest = list(mon.exps)
                    rest[i] = e - 1
                    before = Monomial(tuple(rest[: i + 1]) + (0,) * (mod.ngens - i - 1))
                    after = Monomial((0,) * (i + 1) + tuple(rest[i + 1 :]))
                    sign = -1 if prefix_deg % 2 else 1
                    piece = mod.monomial_element(before, coeff * sign * e) * dg * mod.monomial_element(after)
                    result = result + piece
                prefix_deg += e * g.degree
    return result
