"""Sparse multivariate polynomials with exact rational coefficients.

Monomials are exponent tuples, one entry per ambient variable.  Coefficients
are `fractions.Fraction` throughout; no floats enter this module.  Parameters
(rho, alpha, ...) are ordinary extra variables, so a single polynomial type
carries forms, ideal generators and symbolic matrix entries alike.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]

# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------


def grevlex_key(mono: tuple) -> tuple:
    """Sort key: m1 > m2 in grevlex iff grevlex_key(m1) > grevlex_key(m2)."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


def lex_key(mono: tuple) -> tuple:
    return mono


@dataclass(frozen=True)
class MonomialOrder:
    """A total multiplicative well-order on monomials.

    kind is one of "grevlex", "lex", "block".  A block order eliminates the
    first `split` variables: monomials are compared grevlex on the leading
    block first, then grevlex on the tail.
    """

    kind: str = "grevlex"
    split: int = 0

    def key(self, mono: tuple) -> tuple:
        if self.kind == "grevlex":
            return grevlex_key(mono)
        if self.kind == "lex":
            return lex_key(mono)
        if self.kind == "block":
            head, tail = mono[: self.split], mono[self.split :]
            return (grevlex_key(head), grevlex_key(tail))
        raise ValueError(f"unknown monomial order kind {self.kind!r}")


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_order(split: int) -> MonomialOrder:
    return MonomialOrder("block", split)


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: tuple) -> int:
    return sum(a)


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class MultiPoly:
    """Immutable sparse polynomial over the rationals.

    `vars` is the ordered tuple of variable names; `terms` maps exponent
    tuples to nonzero Fractions.  Arithmetic is exact.  Division by
    polynomials is deliberately absent; only scalar division is provided.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Scalar]):
        self.vars = tuple(variables)
        clean = {}
        nv = len(self.vars)
        for mono, c in terms.items():
            if not isinstance(c, Fraction):
                c = Fraction(c)
            if c == 0:
                continue
            if len(mono) != nv:
                raise ValueError(f"monomial {mono} does not match {nv} variables")
            clean[tuple(mono)] = c
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def const(cls, variables: Sequence[str], c: Scalar) -> "MultiPoly":
        return cls(variables, {tuple([0] * len(variables)): Fraction(c)})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        idx = list(variables).index(name)
        mono = [0] * len(variables)
        mono[idx] = 1
        return cls(variables, {tuple(mono): Fraction(1)})

    @classmethod
    def monomial(cls, variables: Sequence[str], mono: tuple, c: Scalar = 1) -> "MultiPoly":
        return cls(variables, {tuple(mono): Fraction(c)})

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get(tuple([0] * len(self.vars)), Fraction(0))

    def used_variables(self) -> set:
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(i)
        return used

    def coefficient(self, mono: tuple) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def leading(self, order: MonomialOrder = GREVLEX) -> tuple:
        """(monomial, coefficient) of the leading term under `order`."""
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        """Terms sorted descending; grevlex is the canonical storage order."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        return MultiPoly.const(self.vars, other)

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return MultiPoly.zero(self.vars)
            return MultiPoly(self.vars, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "MultiPoly":
        if isinstance(scalar, MultiPoly):
            raise TypeError("polynomial division is not a ring operation here")
        scalar = Fraction(scalar)
        if scalar == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (1 / scalar)

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and substitution -------------------------------------------

    def partial_derivative(self, var: int) -> "MultiPoly":
        """Exact formal derivative with respect to the var-th variable."""
        if not (0 <= var < len(self.vars)):
            raise IndexError(f"variable index {var} out of range")
        out: dict = {}
        for m, c in self.terms.items():
            e = m[var]
            if e == 0:
                continue
            dm = list(m)
            dm[var] = e - 1
            out[tuple(dm)] = c * e
        return MultiPoly(self.vars, out)

    def gradient(self) -> list:
        return [self.partial_derivative(i) for i in range(len(self.vars))]

    def substitute(self, assignment: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials (or scalars) for the named variables.

        Unlisted variables are kept.  The result lives in the variable set of
        the first substituted polynomial if all variables are replaced by
        polynomials over a common ring; otherwise in the original ring.
        """
        subs = {}
        for name, val in assignment.items():
            idx = self.vars.index(name)
            if not isinstance(val, MultiPoly):
                val = MultiPoly.const(self.vars, val)
            subs[idx] = val
        if not subs:
            return self
        target_vars = next(iter(subs.values())).vars
        out = MultiPoly.zero(target_vars)
        for m, c in self.terms.items():
            term = MultiPoly.const(target_vars, c)
            for i, e in enumerate(m):
                if e == 0:
                    continue
                if i in subs:
                    term = term * subs[i] ** e
                else:
                    base = MultiPoly.variable(target_vars, self.vars[i])
                    term = term * base**e
            out = out + term
        return out

    def rename(self, variables: Sequence[str]) -> "MultiPoly":
        """Reinterpret over a superset ring (variables matched by name)."""
        variables = tuple(variables)
        positions = [variables.index(v) for v in self.vars]
        out = {}
        for m, c in self.terms.items():
            mono = [0] * len(variables)
            for i, e in enumerate(m):
                mono[positions[i]] = e
            out[tuple(mono)] = c
        return MultiPoly(variables, out)

    def drop_unused(self, keep: Sequence[str]) -> "MultiPoly":
        """Project onto the named variables; the others must not occur."""
        keep = tuple(keep)
        idxs = [self.vars.index(v) for v in keep]
        idxset = set(idxs)
        out = {}
        for m, c in self.terms.items():
            for i, e in enumerate(m):
                if e and i not in idxset:
                    raise ValueError(f"variable {self.vars[i]} still occurs")
            out[tuple(m[i] for i in idxs)] = c
        return MultiPoly(keep, out)

    def eval_exact(self, point: Sequence[Scalar]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def eval_numeric(self, point: Sequence[complex]) -> complex:
        total = 0j
        for m, c in self.terms.items():
            v = complex(c)
            for x, e in zip(point, m):
                if e:
                    v *= x**e
            total += v
        return total

    # -- printing -------------------------------------------------------------

    def to_string(self) -> str:
        """Canonical rendering in the input grammar, terms grevlex descending."""
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms(GREVLEX):
            factors = []
            for name, e in zip(self.vars, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            coeff_str = str(abs(c))
            if factors and abs(c) == 1:
                body = "*".join(factors)
            elif factors:
                body = "*".join([coeff_str] + factors)
            else:
                body = coeff_str
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"MultiPoly({self.to_string()!r})"


# ---------------------------------------------------------------------------
# Helpers shared by downstream modules
# ---------------------------------------------------------------------------


def poly_content(f: MultiPoly) -> Fraction:
    """Positive rational c with f/c integer, primitive; 0 for the zero poly."""
    if f.is_zero():
        return Fraction(0)
    num = 0
    den = 1
    for c in f.terms.values():
        num = math.gcd(num, c.numerator)
        den = den * c.denominator // math.gcd(den, c.denominator)
    return Fraction(num, den)


def monomials_of_degree(nvars: int, degree: int) -> Iterable[tuple]:
    """All exponent tuples of the given total degree, lexicographic."""
    if nvars == 1:
        yield (degree,)
        return
    for e in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - e):
            yield (e,) + rest


def monomials_up_to_degree(nvars: int, degree: int) -> Iterable[tuple]:
    for d in range(degree + 1):
        yield from monomials_of_degree(nvars, d)


def random_poly(rng, variables, degree, terms=6, coeff_bound=9, homogeneous=False):
    """Small random polynomial for tests and sampling pipelines."""
    nvars = len(variables)
    pool = (
        list(monomials_of_degree(nvars, degree))
        if homogeneous
        else list(monomials_up_to_degree(nvars, degree))
    )
    out = {}
    for _ in range(terms):
        m = pool[rng.randrange(len(pool))]
        c = rng.randint(-coeff_bound, coeff_bound)
        if c:
            out[m] = out.get(m, Fraction(0)) + c
    return MultiPoly(variables, out)
