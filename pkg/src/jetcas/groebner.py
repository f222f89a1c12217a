"""Groebner bases and ideal algebra.

The engine is Buchberger's algorithm with the normal selection strategy
(smallest lcm degree first, index order as tie break), the coprime-lead
criterion, and the chain criterion applied at selection time.  Over QQ every
intermediate polynomial is rescaled to integer coefficients with content 1,
which keeps Fraction arithmetic cheap.  Output bases are reduced: monic,
auto-reduced, sorted descending by leading monomial, hence canonical for the
ideal and the order, and recomputation is bit-identical.

All potentially long-running entry points accept a ``Budget``; when it runs
out a ``BudgetExceededError`` propagates and no partial result is cached.
"""

from __future__ import annotations

import heapq
import os
import time
from dataclasses import dataclass

from .errors import BudgetExceededError, InputError
from .orders import GREVLEX, LEX, Block, Grevlex, Lex, Weighted
from .ring import (
    Poly,
    PolyRing,
    content_normalize,
    fresh_name,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

DEFAULT_BUDGET_MS = 60000


class Budget:
    """Wall-clock and size limits for one computation.

    ``max_ms`` defaults to the JET_BUDGET_MS environment variable.  Time is
    checked every 256 ticks to keep the hot loops cheap.
    """

    __slots__ = ("max_ms", "max_basis", "max_degree", "_deadline", "_tick")

    def __init__(
        self,
        max_ms: int | None = None,
        max_basis: int = 25000,
        max_degree: int = 512,
    ):
        if max_ms is None:
            max_ms = int(os.environ.get("JET_BUDGET_MS", DEFAULT_BUDGET_MS))
        self.max_ms = int(max_ms)
        self.max_basis = max_basis
        self.max_degree = max_degree
        self._deadline: float | None = None
        self._tick = 0

    @classmethod
    def from_env(cls) -> "Budget":
        return cls()

    def start(self) -> "Budget":
        self._deadline = time.monotonic() + self.max_ms / 1000.0
        return self

    def check_time(self):
        self._tick += 1
        if self._tick & 0xFF:
            return
        if self._deadline is None:
            self.start()
        if time.monotonic() > self._deadline:
            raise BudgetExceededError(
                f"time budget of {self.max_ms} ms exceeded"
            )

    def check_basis(self, n: int):
        if n > self.max_basis:
            raise BudgetExceededError(
                f"basis size cap of {self.max_basis} exceeded"
            )

    def check_degree(self, d: int):
        if d > self.max_degree:
            raise BudgetExceededError(
                f"degree cap of {self.max_degree} exceeded"
            )


def _ensure_budget(budget: Budget | None) -> Budget:
    if budget is None:
        return Budget().start()
    if budget._deadline is None:
        budget.start()
    return budget


class Ideal:
    """An ideal given by explicit generators, with a per-order basis cache."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: PolyRing, gens):
        clean = []
        for g in gens:
            if not isinstance(g, Poly):
                raise TypeError("ideal generators must be polynomials")
            if g.ring != ring:
                raise ValueError("generator lives in a different ring")
            if g:
                clean.append(g)
        self.ring = ring
        self.gens = tuple(clean)
        self._gb: dict = {}

    def with_extra(self, *fs: Poly) -> "Ideal":
        return Ideal(self.ring, self.gens + tuple(fs))

    def __repr__(self) -> str:
        inside = ", ".join(str(g) for g in self.gens) or "0"
        return f"Ideal({inside})"


@dataclass(frozen=True)
class DimReport:
    """Krull dimension of the quotient by an ideal, with evidence."""

    dim: int
    witness: tuple[str, ...]
    basis_size: int
    elapsed_ms: float


class _Engine:
    """Stateful worker bound to one ring, one order and one budget."""

    def __init__(self, ring: PolyRing, order, budget: Budget):
        self.ring = ring
        self.dom = ring.domain
        self.order = order
        self.budget = budget
        self._memo: dict = {}

    def mkey(self, e):
        k = self._memo.get(e)
        if k is None:
            k = self.order.key(e)
            self._memo[e] = k
        return k

    def lead(self, f: Poly):
        return max(f.terms, key=self.mkey)

    def reduce(self, f: Poly, basis: list[Poly], lms=None) -> Poly:
        """Full normal form of f modulo an ordered list of reducers."""
        if lms is None:
            lms = [self.lead(g) for g in basis]
        dom = self.dom
        zero = dom.convert(0)
        work = dict(f.terms)
        out: dict = {}
        while work:
            self.budget.check_time()
            e = max(work, key=self.mkey)
            c = work.pop(e)
            for g, lmg in zip(basis, lms):
                q = mono_div(e, lmg)
                if q is None:
                    continue
                factor = dom.div(c, g.terms[lmg])
                for eg, cg in g.terms.items():
                    if eg == lmg:
                        continue
                    em = mono_mul(eg, q)
                    s = dom.sub(work.get(em, zero), dom.mul(cg, factor))
                    if s:
                        work[em] = s
                    else:
                        work.pop(em, None)
                break
            else:
                out[e] = c
        return Poly(self.ring, out)

    def exact_div(self, g: Poly, f: Poly) -> Poly:
        """g / f when f divides g exactly; anything else is a caller bug."""
        dom = self.dom
        zero = dom.convert(0)
        lmf = self.lead(f)
        lcf = f.terms[lmf]
        rem = dict(g.terms)
        quot: dict = {}
        while rem:
            self.budget.check_time()
            e = max(rem, key=self.mkey)
            c = rem.pop(e)
            d = mono_div(e, lmf)
            if d is None:
                raise RuntimeError(
                    "internal error: exact division has a remainder"
                )
            coeff = dom.div(c, lcf)
            quot[d] = coeff
            for ef, cf in f.terms.items():
                if ef == lmf:
                    continue
                em = mono_mul(ef, d)
                s = dom.sub(rem.get(em, zero), dom.mul(cf, coeff))
                if s:
                    rem[em] = s
                else:
                    rem.pop(em, None)
        return Poly(self.ring, quot)

    def spoly(self, f: Poly, lmf, g: Poly, lmg) -> Poly:
        dom = self.dom
        l = mono_lcm(lmf, lmg)
        a = f.mul_term(mono_div(l, lmf), dom.inv(f.terms[lmf]))
        b = g.mul_term(mono_div(l, lmg), dom.inv(g.terms[lmg]))
        return a - b

    def run(self, gens) -> tuple[Poly, ...]:
        basis = [content_normalize(g) for g in gens if g]
        lms = [self.lead(g) for g in basis]
        # normal strategy: the heap pops the pair with the smallest lcm
        # degree, ties broken by index
        pending: set = set()
        heap: list = []

        def add_pairs(j: int):
            for i in range(j):
                pending.add((i, j))
                heapq.heappush(
                    heap, (mono_deg(mono_lcm(lms[i], lms[j])), i, j)
                )

        for j in range(len(basis)):
            add_pairs(j)
        while heap:
            self.budget.check_time()
            _, i, j = heapq.heappop(heap)
            pending.discard((i, j))
            li, lj = lms[i], lms[j]
            l = mono_lcm(li, lj)
            if mono_deg(l) == mono_deg(li) + mono_deg(lj):
                continue  # coprime leads: the S-polynomial reduces to zero
            if self._chain(i, j, l, pending, lms):
                continue
            r = self.reduce(self.spoly(basis[i], li, basis[j], lj), basis, lms)
            if not r:
                continue
            r = content_normalize(r)
            self.budget.check_degree(r.degree())
            basis.append(r)
            lms.append(self.lead(r))
            self.budget.check_basis(len(basis))
            add_pairs(len(basis) - 1)
        final = self._reduced(basis, lms)
        self._certify(gens, final)
        return final

    def _chain(self, i: int, j: int, l, pending, lms) -> bool:
        # skip (i, j) when some k with lead dividing lcm(i, j) has both of
        # its pairs with i and j already handled
        for k in range(len(lms)):
            if k == i or k == j:
                continue
            if not mono_divides(lms[k], l):
                continue
            a = (i, k) if i < k else (k, i)
            b = (j, k) if j < k else (k, j)
            if a not in pending and b not in pending:
                return True
        return False

    def _reduced(self, basis, lms) -> tuple[Poly, ...]:
        by_lead = sorted(range(len(basis)), key=lambda i: self.mkey(lms[i]))
        kept: list[int] = []
        for i in by_lead:
            if not any(mono_divides(lms[k], lms[i]) for k in kept):
                kept.append(i)
        polys = [basis[i] for i in kept]
        # leads are pairwise non-divisible, so one tail-reduction pass
        # against the fixed lead set fully auto-reduces the basis
        for idx in range(len(polys)):
            others = polys[:idx] + polys[idx + 1 :]
            polys[idx] = self.reduce(polys[idx], others)
        polys = [p.monic() for p in polys]
        polys.sort(key=lambda p: self.mkey(self.lead(p)), reverse=True)
        return tuple(polys)

    def _certify(self, gens, gb):
        reducers = list(gb)
        for g in gens:
            if g and self.reduce(g, reducers):
                raise RuntimeError(
                    "internal error: an input generator does not reduce "
                    "to zero against the computed basis"
                )


def groebner_basis(I: Ideal, order=None, budget: Budget | None = None):
    """Reduced Groebner basis of I, cached per order on the ideal."""
    if order is None:
        order = I.ring.order
    cached = I._gb.get(order)
    if cached is not None:
        return cached
    gb = _Engine(I.ring, order, _ensure_budget(budget)).run(I.gens)
    I._gb[order] = gb
    return gb


def normal_form(f: Poly, I: Ideal, order=None, budget: Budget | None = None):
    """Remainder of f on division by the reduced basis of I."""
    if f.ring != I.ring:
        raise ValueError("polynomial and ideal live in different rings")
    if order is None:
        order = I.ring.order
    gb = groebner_basis(I, order, budget)
    engine = _Engine(I.ring, order, _ensure_budget(budget))
    return engine.reduce(f, list(gb))


def is_member(f: Poly, I: Ideal, budget: Budget | None = None) -> bool:
    return not normal_form(f, I, None, budget)


def ideal_contains(I: Ideal, J: Ideal, budget: Budget | None = None) -> bool:
    """True when every generator of J lies in I."""
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    gb = groebner_basis(I, GREVLEX, budget)
    engine = _Engine(I.ring, GREVLEX, _ensure_budget(budget))
    reducers = list(gb)
    return all(not engine.reduce(g, reducers) for g in J.gens)


def ideal_equal(I: Ideal, J: Ideal, budget: Budget | None = None) -> bool:
    """Equality via the canonical reduced bases."""
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    return groebner_basis(I, GREVLEX, budget) == groebner_basis(
        J, GREVLEX, budget
    )


def _permute_poly(f: Poly, target: PolyRing, perm) -> Poly:
    """Transport f along the variable placement perm[i] -> target index."""
    nt = target.nvars
    out = {}
    for e, c in f.terms.items():
        ee = [0] * nt
        for i, x in enumerate(e):
            if x:
                ee[perm[i]] = x
        out[tuple(ee)] = c
    return Poly(target, out)


def _restrict_poly(f: Poly, target: PolyRing, proj) -> Poly:
    """Transport f to a subring; proj[i] is the target index or -1."""
    nt = target.nvars
    out = {}
    for e, c in f.terms.items():
        ee = [0] * nt
        for i, x in enumerate(e):
            if not x:
                continue
            if proj[i] < 0:
                raise RuntimeError(
                    "internal error: polynomial is not free of the "
                    "eliminated variables"
                )
            ee[proj[i]] = x
        out[tuple(ee)] = c
    return Poly(target, out)


def _restrict_order(order, old_vars, keep):
    if isinstance(order, Lex):
        return LEX
    if isinstance(order, Weighted):
        wmap = dict(zip(old_vars, order.weights))
        return Weighted(tuple(wmap[v] for v in keep))
    return GREVLEX


def eliminate(I: Ideal, drop, budget: Budget | None = None) -> Ideal:
    """Intersection of I with the subring omitting the given variables.

    Computes a basis under an elimination block order and keeps the part
    free of the dropped block.  That part is a reduced grevlex basis of the
    result, so the returned ideal has its basis cache pre-filled.
    """
    drop = list(drop)
    for v in drop:
        I.ring.index(v)
    if len(set(drop)) != len(drop):
        raise InputError("repeated variable in elimination list")
    dropset = set(drop)
    head = [v for v in I.ring.vars if v in dropset]
    keep = [v for v in I.ring.vars if v not in dropset]
    work = PolyRing(tuple(head + keep), Block(len(head)), I.ring.domain)
    perm = [work.index(v) for v in I.ring.vars]
    wgens = tuple(_permute_poly(g, work, perm) for g in I.gens)
    gb = _Engine(work, work.order, _ensure_budget(budget)).run(wgens)
    nhead = len(head)
    survivors = [
        g
        for g in gb
        if all(not e[i] for e in g.terms for i in range(nhead))
    ]
    sub_weights = None
    if I.ring.weights is not None:
        wmap = dict(zip(I.ring.vars, I.ring.weights))
        sub_weights = tuple(wmap[v] for v in keep)
    sub = PolyRing(
        tuple(keep),
        _restrict_order(I.ring.order, I.ring.vars, keep),
        I.ring.domain,
        sub_weights,
    )
    proj = [-1] * nhead + [sub.index(v) for v in work.vars[nhead:]]
    out_gens = [_restrict_poly(g, sub, proj) for g in survivors]
    result = Ideal(sub, out_gens)
    # survivors inherit the block order's descending sort, which restricts
    # to grevlex on the kept block
    result._gb[GREVLEX] = tuple(out_gens)
    return result


def _rewrap(I: Ideal, ring: PolyRing) -> Ideal:
    """Re-tag an ideal onto a ring with the same variables and domain."""
    if I.ring == ring:
        return I
    if I.ring.vars != ring.vars or I.ring.domain != ring.domain:
        raise ValueError("cannot transport the ideal onto that ring")
    out = Ideal(ring, [Poly(ring, dict(g.terms)) for g in I.gens])
    gb = I._gb.get(GREVLEX)
    if gb is not None:
        out._gb[GREVLEX] = tuple(Poly(ring, dict(g.terms)) for g in gb)
    return out


def _extend_order(order, weights_len: int):
    if isinstance(order, Lex):
        return LEX
    if isinstance(order, Weighted):
        return Weighted(order.weights + (0,))
    return GREVLEX


def intersect(I: Ideal, J: Ideal, budget: Budget | None = None) -> Ideal:
    """I intersected with J, by eliminating a fresh scaling variable."""
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    ring = I.ring
    if not I.gens or not J.gens:
        return Ideal(ring, ())
    tname = fresh_name(ring.vars)
    ext_weights = None
    if ring.weights is not None:
        ext_weights = ring.weights + (0,)
    ext = PolyRing(
        ring.vars + (tname,),
        _extend_order(ring.order, ring.nvars),
        ring.domain,
        ext_weights,
    )
    perm = list(range(ring.nvars))
    t = ext.var(tname)
    one = ext.one()
    gens = [t * _permute_poly(f, ext, perm) for f in I.gens]
    gens += [(one - t) * _permute_poly(g, ext, perm) for g in J.gens]
    elim = eliminate(Ideal(ext, gens), [tname], budget)
    return _rewrap(elim, ring)


def quotient(I: Ideal, f: Poly, budget: Budget | None = None) -> Ideal:
    """The colon ideal of I by the principal ideal of f."""
    if f.ring != I.ring:
        raise ValueError("polynomial and ideal live in different rings")
    if not f:
        raise InputError("cannot form a quotient by the zero polynomial")
    if not I.gens:
        return Ideal(I.ring, ())
    K = intersect(I, Ideal(I.ring, (f,)), budget)
    engine = _Engine(I.ring, GREVLEX, _ensure_budget(budget))
    return Ideal(I.ring, [engine.exact_div(g, f) for g in K.gens])


def saturate(I: Ideal, J, budget: Budget | None = None) -> Ideal:
    """Saturation of I by J: iterate quotients until they stabilize.

    For several generators the result is the intersection of the single
    saturations, since a power of the whole ideal lands inside I exactly
    when a power of each generator does.
    """
    if isinstance(J, Poly):
        J = Ideal(I.ring, (J,))
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    if not J.gens:
        raise InputError("saturation by the zero ideal is undefined")
    budget = _ensure_budget(budget)
    parts = []
    for f in J.gens:
        cur = I
        while True:
            nxt = quotient(cur, f, budget)
            if ideal_contains(cur, nxt, budget):
                break
            cur = nxt
        parts.append(cur)
    out = parts[0]
    for p in parts[1:]:
        out = intersect(out, p, budget)
    return out


def _min_hitting_set(supports, nvars: int) -> list[int]:
    """Smallest variable set meeting every support, deterministically."""
    sets = sorted(
        {frozenset(s) for s in supports}, key=lambda s: (len(s), sorted(s))
    )
    minimal: list[frozenset] = []
    for s in sets:
        if not any(t <= s for t in minimal):
            minimal.append(s)
    best: list[int] | None = None
    chosen: list[int] = []

    def search():
        nonlocal best
        if best is not None and len(chosen) >= len(best):
            return
        pending = None
        for s in minimal:
            if not any(v in s for v in chosen):
                pending = s
                break
        if pending is None:
            best = list(chosen)
            return
        for v in sorted(pending):
            chosen.append(v)
            search()
            chosen.pop()

    search()
    return best if best is not None else []


def krull_dim(I: Ideal, budget: Budget | None = None) -> DimReport:
    """Dimension of the zero set of I, via the staircase of lead monomials.

    The dimension equals the largest number of variables no lead-monomial
    support fits inside, i.e. the variable count minus a minimum hitting
    set of the supports.  The witness is that maximal coordinate subspace.
    The unit ideal reports dimension -1 with an empty witness.
    """
    t0 = time.monotonic()
    gb = groebner_basis(I, GREVLEX, budget)
    n = I.ring.nvars
    elapsed = lambda: (time.monotonic() - t0) * 1000.0
    if any(p.is_constant() for p in gb):
        return DimReport(-1, (), len(gb), elapsed())
    if not gb:
        return DimReport(n, tuple(I.ring.vars), len(gb), elapsed())
    supports = []
    for p in gb:
        lm = max(p.terms, key=GREVLEX.key)
        supports.append(frozenset(i for i, x in enumerate(lm) if x))
    hit = set(_min_hitting_set(supports, n))
    witness = tuple(v for i, v in enumerate(I.ring.vars) if i not in hit)
    return DimReport(n - len(hit), witness, len(gb), elapsed())


def radical_member(f: Poly, I: Ideal, budget: Budget | None = None) -> bool:
    """Membership of f in the radical of I, by inverting f formally."""
    if f.ring != I.ring:
        raise ValueError("polynomial and ideal live in different rings")
    if not f:
        return True
    ring = I.ring
    zname = fresh_name(ring.vars, "z")
    ext = PolyRing(ring.vars + (zname,), GREVLEX, ring.domain)
    perm = list(range(ring.nvars))
    gens = [_permute_poly(g, ext, perm) for g in I.gens]
    gens.append(ext.one() - ext.var(zname) * _permute_poly(f, ext, perm))
    gb = groebner_basis(Ideal(ext, gens), GREVLEX, budget)
    return any(p.is_constant() for p in gb)
