"""Buchberger-based ideal arithmetic over the rationals.

The computational core works on primitive integer coefficient dictionaries
(content-stripped after every full reduction) to keep arithmetic fast; the
public API speaks MultiPoly.  Budgets cap the number of S-pairs processed and
the degree of intermediate polynomials; exceeding a budget raises
BudgetExceededError and is never turned into a mathematical answer.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import (
    GREVLEX,
    MonomialOrder,
    MultiPoly,
    block_order,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

IntPoly = Dict[tuple, int]


class BudgetExceededError(RuntimeError):
    """Resource cap hit; distinct from any mathematical failure."""


class NotZeroDimensionalError(ValueError):
    """Operation requires a zero-dimensional ideal."""


@dataclass
class GroebnerBudget:
    max_pairs: int = 50_000
    max_degree: int = 80

    def check_degree(self, deg: int):
        if deg > self.max_degree:
            raise BudgetExceededError(
                f"polynomial degree {deg} exceeds budget {self.max_degree}"
            )


DEFAULT_BUDGET = GroebnerBudget()


# ---------------------------------------------------------------------------
# integer-coefficient kernels
# ---------------------------------------------------------------------------


def _to_int_poly(f: MultiPoly) -> IntPoly:
    if f.is_zero():
        return {}
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    out = {m: int(c * den) for m, c in f.terms.items()}
    g = 0
    for v in out.values():
        g = math.gcd(g, v)
    if g > 1:
        out = {m: v // g for m, v in out.items()}
    return out


def _content(p: IntPoly) -> int:
    g = 0
    for v in p.values():
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g


def _make_primitive(p: IntPoly, key) -> IntPoly:
    if not p:
        return p
    g = _content(p)
    lt = max(p, key=key)
    if p[lt] < 0:
        g = -g
    if g != 1:
        p = {m: v // g for m, v in p.items()}
    return p


def _from_int_poly(p: IntPoly, variables) -> MultiPoly:
    return MultiPoly(variables, {m: Fraction(v) for m, v in p.items()})


def _spoly(g1: Tuple[tuple, int, IntPoly], g2: Tuple[tuple, int, IntPoly]) -> IntPoly:
    lt1, lc1, p1 = g1
    lt2, lc2, p2 = g2
    lcm = mono_lcm(lt1, lt2)
    m1, m2 = mono_div(lcm, lt1), mono_div(lcm, lt2)
    g = math.gcd(lc1, lc2)
    a, b = lc2 // g, lc1 // g
    out: IntPoly = {}
    for m, c in p1.items():
        out[mono_mul(m, m1)] = a * c
    for m, c in p2.items():
        mm = mono_mul(m, m2)
        s = out.get(mm, 0) - b * c
        if s:
            out[mm] = s
        else:
            out.pop(mm, None)
    return out


def _reduce_full(
    p: IntPoly,
    basis: List[Tuple[tuple, int, IntPoly]],
    key,
    budget: GroebnerBudget,
) -> Tuple[IntPoly, int]:
    """Fully reduce p modulo basis.

    Returns (r, mult) with mult > 0 and mult * p == r modulo the ideal; r has
    no monomial divisible by any basis leading term.
    """
    work = dict(p)
    done: IntPoly = {}
    mult = 1
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        budget.check_degree(sum(m))
        reducer = None
        for lt, lc, q in basis:
            if mono_divides(lt, m):
                reducer = (lt, lc, q)
                break
        if reducer is None:
            done[m] = c
            continue
        lt, lc, q = reducer
        shift = mono_div(m, lt)
        g = math.gcd(c, lc)
        a, b = lc // g, c // g
        if a < 0:
            a, b = -a, -b
        if a != 1:
            mult *= a
            for k in done:
                done[k] *= a
            for k in work:
                work[k] *= a
        for qm, qc in q.items():
            if qm == lt:
                continue
            mm = mono_mul(qm, shift)
            s = work.get(mm, 0) - b * qc
            if s:
                work[mm] = s
            else:
                work.pop(mm, None)
    if done:
        g = _content(done)
        g = math.gcd(g, mult)
        if g > 1:
            done = {m: v // g for m, v in done.items()}
            mult //= g
    else:
        mult = 1
    return done, mult


def _buchberger(
    gens: List[IntPoly], key, budget: GroebnerBudget
) -> List[IntPoly]:
    basis: List[Tuple[tuple, int, IntPoly]] = []
    for p in gens:
        if not p:
            continue
        r, _ = _reduce_full(p, basis, key, budget)
        if r:
            r = _make_primitive(r, key)
            basis.append((max(r, key=key), r[max(r, key=key)], r))

    def lt(i):
        return basis[i][0]

    pairs = set()
    for i, j in combinations(range(len(basis)), 2):
        pairs.add((i, j))

    processed = 0
    handled = set()
    while pairs:
        # normal strategy: smallest lcm first
        best = min(pairs, key=lambda ij: (sum(mono_lcm(lt(ij[0]), lt(ij[1]))), key(mono_lcm(lt(ij[0]), lt(ij[1])))))
        pairs.discard(best)
        i, j = best
        handled.add(best)
        lcm = mono_lcm(lt(i), lt(j))
        # first criterion: coprime leading terms
        if lcm == mono_mul(lt(i), lt(j)):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if mono_divides(lt(k), lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pairs and pjk not in pairs:
                    skip = True
                    break
        if skip:
            continue
        processed += 1
        if processed > budget.max_pairs:
            raise BudgetExceededError(
                f"S-pair budget {budget.max_pairs} exceeded"
            )
        s = _spoly(basis[i], basis[j])
        r, _ = _reduce_full(s, basis, key, budget)
        if not r:
            continue
        r = _make_primitive(r, key)
        new_idx = len(basis)
        basis.append((max(r, key=key), r[max(r, key=key)], r))
        for k in range(new_idx):
            pairs.add((k, new_idx))

    # inter-reduce to the unique reduced basis
    polys = [b[2] for b in basis]
    changed = True
    while changed:
        changed = False
        polys.sort(key=lambda p: key(max(p, key=key)))
        for idx in range(len(polys)):
            others = [
                (max(q, key=key), q[max(q, key=key)], q)
                for t, q in enumerate(polys)
                if t != idx and q
            ]
            if not polys[idx]:
                continue
            r, _ = _reduce_full(polys[idx], others, key, budget)
            r = _make_primitive(r, key)
            if r != polys[idx]:
                polys[idx] = r
                changed = True
        polys = [p for p in polys if p]
    polys.sort(key=lambda p: key(max(p, key=key)))
    return polys


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------


class IdealBasis:
    """Generator set plus a lazily computed reduced Groebner basis.

    Values are immutable; the cache is filled once under a lock and then
    only read, so instances are safe to share across threads.
    """

    def __init__(
        self,
        generators: Sequence[MultiPoly],
        order: MonomialOrder = GREVLEX,
        budget: Optional[GroebnerBudget] = None,
    ):
        gens = [g for g in generators if not g.is_zero()]
        if not gens and generators:
            # all generators are zero: keep one zero to remember the ring
            gens = [generators[0]]
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        self.vars = gens[0].vars
        for g in gens:
            if g.vars != self.vars:
                raise ValueError("generators live in different rings")
        self.generators = tuple(gens)
        self.order = order
        self.budget = budget or DEFAULT_BUDGET
        self._gb: Optional[List[MultiPoly]] = None
        self._gb_int: Optional[List[IntPoly]] = None
        self._lock = threading.Lock()

    def groebner(self) -> List[MultiPoly]:
        """Reduced Groebner basis (primitive integer coefficients, LC > 0)."""
        with self._lock:
            if self._gb is None:
                key = self.order.key
                gens = [_to_int_poly(g) for g in self.generators]
                gb_int = _buchberger(gens, key, self.budget)
                if not gb_int:
                    gb_int = [{}]
                self._gb_int = gb_int
                self._gb = [_from_int_poly(p, self.vars) for p in gb_int if p]
                if not self._gb:
                    self._gb = [MultiPoly.zero(self.vars)]
            return self._gb

    def _gb_triples(self):
        self.groebner()
        key = self.order.key
        return [
            (max(p, key=key), p[max(p, key=key)], p)
            for p in self._gb_int
            if p
        ]


def groebner_basis(ideal: IdealBasis) -> IdealBasis:
    """Idempotent: returns the same ideal with its basis cache filled."""
    ideal.groebner()
    return ideal


def normal_form(f: MultiPoly, ideal: IdealBasis) -> MultiPoly:
    """The unique remainder of f modulo the reduced basis of the ideal."""
    if f.vars != ideal.vars:
        raise ValueError("polynomial ring mismatch")
    key = ideal.order.key
    triples = ideal._gb_triples()
    r, mult = _reduce_full(_to_int_poly(f), triples, key, ideal.budget)
    # scale back: NF(f) = (r / mult) * (original content of f)
    if not r:
        return MultiPoly.zero(f.vars)
    content = _poly_rational_content(f)
    return MultiPoly(
        f.vars, {m: Fraction(v, mult) * content for m, v in r.items()}
    )


def _poly_rational_content(f: MultiPoly) -> Fraction:
    # positive rational c with f == c * _to_int_poly(f)
    den = 1
    for c in f.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    num = 0
    for c in f.terms.values():
        num = math.gcd(num, int(c * den))
    if num == 0:
        return Fraction(0)
    return Fraction(num, den)


def ideal_member(f: MultiPoly, ideal: IdealBasis) -> bool:
    return normal_form(f, ideal).is_zero()


def contains_one(ideal: IdealBasis) -> bool:
    """True iff the reduced basis is {1}: the complex variety is empty."""
    gb = ideal.groebner()
    return len(gb) == 1 and gb[0].is_constant() and not gb[0].is_zero()


def leading_terms(ideal: IdealBasis) -> List[tuple]:
    key = ideal.order.key
    ideal.groebner()
    return [max(p, key=key) for p in ideal._gb_int if p]


def ideal_dimension(ideal: IdealBasis) -> int:
    """Krull dimension of the affine zero set; -1 if empty over C.

    Computed combinatorially as the largest set S of variables such that no
    leading monomial of the reduced basis has support inside S.
    """
    if contains_one(ideal):
        return -1
    lts = leading_terms(ideal)
    n = len(ideal.vars)
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in lts]
    if frozenset() in supports:
        return -1
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            sset = set(subset)
            if all(not s <= sset for s in supports):
                return size
    return 0


def colength(ideal: IdealBasis) -> Optional[int]:
    """Vector-space dimension of the quotient ring; None when infinite."""
    if contains_one(ideal):
        return 0
    lts = leading_terms(ideal)
    n = len(ideal.vars)
    bounds = [None] * n
    for m in lts:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
    if any(b is None for b in bounds):
        return None
    return len(staircase_monomials(lts, bounds))


def staircase_monomials(lts: List[tuple], bounds: List[int]) -> List[tuple]:
    """Monomials outside the staircase of `lts`, within the pure-power box."""
    out = []
    n = len(bounds)

    def rec(prefix, i):
        if i == n:
            mono = tuple(prefix)
            if not any(mono_divides(lt, mono) for lt in lts):
                out.append(mono)
            return
        for e in range(bounds[i]):
            rec(prefix + [e], i + 1)

    rec([], 0)
    return out


def quotient_basis(ideal: IdealBasis) -> List[tuple]:
    """Staircase monomial basis of the quotient, sorted ascending."""
    if contains_one(ideal):
        return []
    lts = leading_terms(ideal)
    n = len(ideal.vars)
    bounds = [None] * n
    for m in lts:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
    if any(b is None for b in bounds):
        raise NotZeroDimensionalError("quotient is infinite-dimensional")
    monos = staircase_monomials(lts, bounds)
    monos.sort(key=ideal.order.key)
    return monos


def eliminate(ideal: IdealBasis, keep: Sequence[str], budget=None) -> IdealBasis:
    """Generators of the elimination ideal in the kept variables."""
    keep = tuple(keep)
    drop = [v for v in ideal.vars if v not in keep]
    if not drop:
        return ideal
    new_vars = tuple(drop) + keep
    gens = [g.rename(new_vars) for g in ideal.generators]
    block = block_order(len(drop))
    work = IdealBasis(gens, block, budget or ideal.budget)
    gb = work.groebner()
    kept_gens = []
    drop_count = len(drop)
    for g in gb:
        if all(all(e == 0 for e in m[:drop_count]) for m in g.terms):
            kept_gens.append(g.drop_unused(keep))
    if not kept_gens:
        kept_gens = [MultiPoly.zero(keep)]
    return IdealBasis(kept_gens, GREVLEX, ideal.budget)


def spoly_normal_forms_vanish(ideal: IdealBasis) -> bool:
    """Buchberger's criterion as a post-check on the emitted basis."""
    gb = ideal.groebner()
    key = ideal.order.key
    triples = ideal._gb_triples()
    for (a, b) in combinations(triples, 2):
        s = _spoly(a, b)
        r, _ = _reduce_full(s, triples, key, ideal.budget)
        if r:
            return False
    return True


def saturate_by_variable(
    ideal: IdealBasis, poly: MultiPoly, aux_name: str = "w_sat"
) -> IdealBasis:
    """Rabinowitsch trick: I : poly^inf via an auxiliary inverse variable.

    Returns an ideal in the original variables; 1 is in the result iff poly
    vanishes on every component of V(I).
    """
    new_vars = ideal.vars + (aux_name,)
    gens = [g.rename(new_vars) for g in ideal.generators]
    w = MultiPoly.variable(new_vars, aux_name)
    gens.append(poly.rename(new_vars) * w - 1)
    extended = IdealBasis(gens, GREVLEX, ideal.budget)
    return eliminate(extended, ideal.vars)


def radical_membership(f: MultiPoly, ideal: IdealBasis) -> bool:
    """f in radical(I), via the Rabinowitsch trick."""
    new_vars = ideal.vars + ("w_rad",)
    gens = [g.rename(new_vars) for g in ideal.generators]
    w = MultiPoly.variable(new_vars, "w_rad")
    gens.append(f.rename(new_vars) * w - 1)
    return contains_one(IdealBasis(gens, GREVLEX, ideal.budget))
