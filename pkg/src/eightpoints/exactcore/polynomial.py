"""Sparse multivariate polynomials with exact coefficients.

A polynomial is a map from exponent tuples (one entry per declared variable)
to nonzero exact coefficients. Terms are always reported in graded
reverse-lexicographic order, largest first, so printed forms and artifact
files are canonical.
"""

from __future__ import annotations

import logging
import operator
from collections import defaultdict
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from eightpoints.errors import DimensionMismatchError, MissingAssignmentError, VariableMismatchError
from eightpoints.exactcore.scalars import ExactScalar, exact

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Terms = Dict[Monomial, ExactScalar]


def grevlex_key(exps: Monomial) -> Tuple[int, Tuple[int, ...]]:
    """Sort key: larger key means larger monomial in graded reverse-lex order."""
    return sum(exps), tuple(-e for e in reversed(exps))


def monomials_of_degree(nvars: int, degree: int) -> List[Monomial]:
    """All exponent tuples of a given total degree, largest first."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    out.sort(key=grevlex_key, reverse=True)
    return out


def _add_exps(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(operator.add, a, b))


def _multiply_terms(a: Mapping[Monomial, ExactScalar], b: Mapping[Monomial, ExactScalar]) -> Terms:
    out: Dict[Monomial, ExactScalar] = defaultdict(int)
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[_add_exps(ea, eb)] += ca * cb
    return {e: exact(c) for e, c in out.items() if c}


class SparsePolynomial:
    __slots__ = ("_variables", "_terms")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Monomial, ExactScalar]] = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise VariableMismatchError(f"repeated variable names in {variables}")
        cleaned: Terms = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise DimensionMismatchError(f"exponent tuple {exps} does not match {len(variables)} variables")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            coeff = exact(coeff)
            if coeff:
                cleaned[exps] = exact(cleaned.get(exps, 0) + coeff)
                if not cleaned[exps]:
                    del cleaned[exps]
        self._variables = variables
        self._terms = cleaned

    @classmethod
    def _raw(cls, variables: Tuple[str, ...], terms: Terms) -> "SparsePolynomial":
        # trusted constructor: terms already cleaned
        poly = cls.__new__(cls)
        poly._variables = variables
        poly._terms = terms
        return poly

    # -----------------------
    # Constructors
    # -----------------------
    @classmethod
    def zero(cls, variables: Sequence[str]) -> "SparsePolynomial":
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, variables: Sequence[str], value: ExactScalar) -> "SparsePolynomial":
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "SparsePolynomial":
        variables = tuple(variables)
        if name not in variables:
            raise VariableMismatchError(f"unknown variable {name!r}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls._raw(variables, {exps: 1})

    @classmethod
    def generators(cls, variables: Sequence[str]) -> List["SparsePolynomial"]:
        """One polynomial per declared variable."""
        return [cls.variable(variables, v) for v in variables]

    @classmethod
    def from_monomial_string(cls, variables: Sequence[str], factors: Iterable[str], coeff: ExactScalar = 1) -> "SparsePolynomial":
        """Build coeff * product of the named factors (repeats allowed)."""
        variables = tuple(variables)
        exps = [0] * len(variables)
        for name in factors:
            if name not in variables:
                raise VariableMismatchError(f"unknown variable {name!r}")
            exps[variables.index(name)] += 1
        return cls(variables, {tuple(exps): coeff})

    # -----------------------
    # Accessors
    # -----------------------
    @property
    def variables(self) -> Tuple[str, ...]:
        return self._variables

    @property
    def terms(self) -> Mapping[Monomial, ExactScalar]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        degrees = {sum(e) for e in self._terms}
        if not degrees:
            return True
        if len(degrees) != 1:
            return False
        return degree is None or degrees == {degree}

    def sorted_terms(self) -> List[Tuple[Monomial, ExactScalar]]:
        """Terms in canonical order, largest monomial first."""
        return sorted(self._terms.items(), key=lambda item: grevlex_key(item[0]), reverse=True)

    def leading_term(self) -> Tuple[Monomial, ExactScalar]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms.items(), key=lambda item: grevlex_key(item[0]))

    def coefficient(self, exps: Monomial) -> ExactScalar:
        return self._terms.get(tuple(exps), 0)

    def coefficient_of(self, *factors: str) -> ExactScalar:
        """Coefficient of the monomial given as variable names, e.g. ("X1", "X2", "Z1")."""
        exps = [0] * len(self._variables)
        for name in factors:
            if name not in self._variables:
                raise VariableMismatchError(f"unknown variable {name!r}")
            exps[self._variables.index(name)] += 1
        return self._terms.get(tuple(exps), 0)

    # -----------------------
    # Arithmetic
    # -----------------------
    def _check_compatible(self, other: "SparsePolynomial") -> None:
        if self._variables != other._variables:
            raise VariableMismatchError(
                f"variable lists differ: {self._variables} vs {other._variables}"
            )

    def _coerce(self, other) -> "SparsePolynomial":
        if isinstance(other, SparsePolynomial):
            self._check_compatible(other)
            return other
        return SparsePolynomial.constant(self._variables, exact(other))

    def __add__(self, other) -> "SparsePolynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            total = out.get(e, 0) + c
            if total:
                out[e] = exact(total)
            else:
                out.pop(e, None)
        return SparsePolynomial._raw(self._variables, out)

    __radd__ = __add__

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial._raw(self._variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "SparsePolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "SparsePolynomial":
        return self._coerce(other) - self

    def scale(self, factor: ExactScalar) -> "SparsePolynomial":
        factor = exact(factor)
        if not factor:
            return SparsePolynomial.zero(self._variables)
        return SparsePolynomial._raw(self._variables, {e: exact(c * factor) for e, c in self._terms.items()})

    def __mul__(self, other) -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            return self.scale(other)
        self._check_compatible(other)
        return SparsePolynomial._raw(self._variables, _multiply_terms(self._terms, other._terms))

    def __rmul__(self, other) -> "SparsePolynomial":
        return self.scale(other)

    def __pow__(self, n: int) -> "SparsePolynomial":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = SparsePolynomial.constant(self._variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePolynomial):
            return self._variables == other._variables and self._terms == other._terms
        try:
            return self._terms == SparsePolynomial.constant(self._variables, exact(other))._terms
        except TypeError:
            return NotImplemented

    __hash__ = None

    # -----------------------
    # Calculus and evaluation
    # -----------------------
    def derivative(self, name: str) -> "SparsePolynomial":
        if name not in self._variables:
            raise VariableMismatchError(f"unknown variable {name!r}")
        i = self._variables.index(name)
        out: Terms = {}
        for e, c in self._terms.items():
            if e[i]:
                lowered = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[lowered] = exact(c * e[i])
        return SparsePolynomial._raw(self._variables, out)

    def gradient(self) -> List["SparsePolynomial"]:
        return [self.derivative(v) for v in self._variables]

    def evaluate(self, point: Union[Mapping[str, ExactScalar], Sequence[ExactScalar]]):
        """Exact value at a point; values may be scalars or any ring elements."""
        if isinstance(point, Mapping):
            missing = [v for v in self._variables if v not in point]
            if missing:
                raise MissingAssignmentError(f"no value for {missing}")
            values = [point[v] for v in self._variables]
        else:
            values = list(point)
            if len(values) != len(self._variables):
                raise MissingAssignmentError(
                    f"expected {len(self._variables)} values, got {len(values)}"
                )
        powers: Dict[Tuple[int, int], object] = {}
        total = 0
        for e, c in self._terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in powers:
                        powers[key] = values[i] ** k
                    term = term * powers[key]
            total = total + term
        return exact(total) if isinstance(total, (int, Fraction)) else total

    def substitute(self, images: Sequence["SparsePolynomial"]) -> "SparsePolynomial":
        """Replace the i-th variable by images[i]; images share one variable list."""
        if len(images) != len(self._variables):
            raise DimensionMismatchError(f"need {len(self._variables)} images, got {len(images)}")
        target = images[0].variables if images else self._variables
        for img in images:
            if img.variables != target:
                raise VariableMismatchError("substitution images must share a variable list")
        unit = (0,) * len(target)
        power_cache: Dict[Tuple[int, int], Terms] = {}

        def power(i: int, k: int) -> Terms:
            key = (i, k)
            if key not in power_cache:
                if k == 1:
                    power_cache[key] = dict(images[i]._terms)
                else:
                    power_cache[key] = _multiply_terms(power(i, k - 1), images[i]._terms)
            return power_cache[key]

        result: Dict[Monomial, ExactScalar] = defaultdict(int)
        for e, c in self._terms.items():
            acc: Terms = {unit: c}
            for i, k in enumerate(e):
                if k:
                    acc = _multiply_terms(acc, power(i, k))
                    if not acc:
                        break
            for m, v in acc.items():
                result[m] += v
        return SparsePolynomial._raw(tuple(target), {m: exact(v) for m, v in result.items() if v})

    def linear_substitution(self, columns: Sequence[Mapping[int, ExactScalar]]) -> "SparsePolynomial":
        """Apply x_v -> sum_w columns[v][w] * x_w on the same variable list."""
        k = len(self._variables)
        images = []
        for col in columns:
            terms = {}
            for w, c in col.items():
                if c:
                    exps = [0] * k
                    exps[w] = 1
                    terms[tuple(exps)] = exact(c)
            images.append(SparsePolynomial._raw(self._variables, terms))
        return self.substitute(images)

    # -----------------------
    # Normalisation
    # -----------------------
    def content(self) -> Fraction:
        """Positive rational c with self / c integral and primitive."""
        if not self._terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self._terms.values():
            c = Fraction(c)
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "SparsePolynomial":
        """Integer coefficients with content 1 and a positive leading coefficient."""
        if not self._terms:
            return self
        c = self.content()
        if self.leading_term()[1] < 0:
            c = -c
        return SparsePolynomial._raw(
            self._variables, {e: exact(Fraction(v) / c) for e, v in self._terms.items()}
        )

    def coefficient_vector(self, monomials: Sequence[Monomial]) -> List[ExactScalar]:
        return [self._terms.get(m, 0) for m in monomials]

    def __repr__(self) -> str:
        return f"SparsePolynomial({len(self._terms)} terms in {len(self._variables)} variables)"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            factors = []
            for name, k in zip(self._variables, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            body = "*".join(factors)
            if not body:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(body)
            elif c == -1:
                pieces.append(f"-{body}")
            else:
                pieces.append(f"{c}*{body}")
        return " + ".join(pieces).replace("+ -", "- ")


# -----------------------
# Functional interface
# -----------------------
def poly_arithmetic(a: SparsePolynomial, b: SparsePolynomial, op: str) -> SparsePolynomial:
    """Exact add or multiply of two polynomials over the same variables."""
    a._check_compatible(b)
    if op == "add":
        return a + b
    if op == "multiply":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(p: SparsePolynomial, v: str) -> SparsePolynomial:
    return p.derivative(v)


def evaluate(p: SparsePolynomial, point: Union[Mapping[str, ExactScalar], Sequence[ExactScalar]]) -> ExactScalar:
    return p.evaluate(point)


# -----------------------
# Canonical file format
# -----------------------
HEADER_PREFIX = "#variables\t"


def dumps_polynomial(p: SparsePolynomial) -> str:
    """Header naming the variables, then coefficient<TAB>exponents per term."""
    lines = [HEADER_PREFIX + ",".join(p.variables)]
    for e, c in p.sorted_terms():
        lines.append(f"{c}\t{','.join(str(k) for k in e)}")
    return "\n".join(lines) + "\n"


def loads_polynomial(text: str) -> SparsePolynomial:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith(HEADER_PREFIX):
        raise ValueError("missing variables header")
    header = lines[0][len(HEADER_PREFIX):]
    variables = header.split(",") if header else []
    terms: Dict[Monomial, ExactScalar] = {}
    for line in lines[1:]:
        coeff, exps = line.split("\t")
        key = tuple(int(k) for k in exps.split(",")) if exps else ()
        if key in terms:
            raise ValueError(f"duplicate monomial {key}")
        terms[key] = exact(coeff)
    return SparsePolynomial(variables, terms)
