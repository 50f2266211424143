"""The positive semigroup Sg(alpha), its rational cone, and exact counting.

Everything here reduces to integer linear algebra through the coordinate
matrix A of the generators: semigroup membership is the integer feasibility
of A x = b with x >= 0, cone membership is its rational relaxation, and the
box |x| <= M(alpha, beta) makes representation enumeration provably
complete. Cone decisions run on the exact simplex; enumeration uses
LP-pruned backtracking in deterministic order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import simplex
from .embeddings import certify_total_nonneg, embed
from .errors import (
    BoxTooLarge,
    InternalCrossCheckFailure,
    NotRepresentable,
    PreconditionViolated,
    WorkLimitExceeded,
)
from .heights import (
    DEFAULT_EPS,
    Comparison,
    HeightValue,
    compare_height,
    height_elem,
    height_vector,
)
from .intervals import RealEnclosure, nth_root, sqrt
from .linalg import hnf_diagonal_product, minor_gcd
from .measures import CoordMatrix, coord_matrix, m_measure
from .nf_core import FieldElement, NumberField

DEFAULT_WORK_LIMIT = 10**8


class ConeMembership(Enum):
    NOT_IN_CONE = "NotInCone"
    IN_CONE = "InCone"
    IN_INTERIOR = "InInterior"


@dataclass(frozen=True)
class GeneratorSystem:
    """A validated generator tuple with its certificates.

    spanning:        A Z^n = Z^d (lattice index 1, checked two ways)
    totally_positive: every generator is a nonzero element of O_K+
    pointed:         {x >= 0 : A x = 0} = {0}
    """

    field: NumberField
    alphas: tuple[FieldElement, ...]
    matrix: CoordMatrix
    spanning: bool
    totally_positive: bool
    pointed: bool

    @property
    def n(self) -> int:
        return len(self.alphas)

    @property
    def d(self) -> int:
        return self.field.degree

    def all_certified(self) -> bool:
        return self.spanning and self.totally_positive and self.pointed

    def require(self, *certs: str):
        for c in certs:
            if not getattr(self, c):
                raise PreconditionViolated(f"generator system is not {c}")

    def element(self, coords) -> FieldElement:
        return self.field.element(coords)


@dataclass(frozen=True)
class RepresentationSet:
    """All x in Z^n_{>=0} with sum x_i alpha_i = beta, provably complete."""

    beta: FieldElement
    box_radius: int
    reps: tuple[tuple[int, ...], ...]   # sorted lexicographically
    complete: bool

    @property
    def count(self) -> int:
        """r(beta), the number of distinct representations."""
        return len(self.reps)


def check_generators(alphas) -> GeneratorSystem:
    """Compute the three certificates of a generator tuple exactly."""
    alphas = tuple(alphas)
    if not alphas:
        raise ValueError("empty generator tuple")
    field = alphas[0].field
    n, d = len(alphas), field.degree
    if n < d:
        raise ValueError(f"need at least d generators ({n} < {d})")
    a = coord_matrix(alphas)

    index = hnf_diagonal_product([list(r) for r in a.rows])
    gcd_minors = minor_gcd([list(r) for r in a.rows])
    if index != gcd_minors:
        raise InternalCrossCheckFailure(
            f"lattice index {index} != minor gcd {gcd_minors}")
    spanning = index == 1

    totally_positive = all(
        not alpha.is_zero() and certify_total_nonneg(alpha) for alpha in alphas)

    if totally_positive:
        # nonzero totally nonnegative elements embed strictly positively,
        # so A x = 0 with x >= 0 forces x = 0
        pointed = True
    else:
        rows = [list(r) for r in a.rows]
        status, value, _ = simplex.solve(rows, [0] * d, [1] * n)
        pointed = status is simplex.LPStatus.OPTIMAL and value == 0

    return GeneratorSystem(field, alphas, a, spanning, totally_positive, pointed)


def cone_membership(sys: GeneratorSystem, beta: FieldElement) -> ConeMembership:
    """Exact position of beta relative to the rational cone of the generators.

    Interior is decided by the epsilon-LP max{eps : A(y + eps 1) = b,
    y >= 0, eps >= 0}: infeasible means outside, positive optimum (or
    unbounded) means interior, optimum zero means boundary.
    """
    sys.require("pointed", "spanning")
    if beta.field != sys.field:
        raise PreconditionViolated("beta lives in a different field")
    rows = [list(r) for r in sys.matrix.rows]
    col_sum = [sum(r) for r in rows]
    ext = [r + [col_sum[i]] for i, r in enumerate(rows)]
    c = [0] * sys.n + [1]
    status, value, _ = simplex.solve(ext, list(beta.coords), c)
    if status is simplex.LPStatus.INFEASIBLE:
        return ConeMembership.NOT_IN_CONE
    if status is simplex.LPStatus.UNBOUNDED or value > 0:
        return ConeMembership.IN_INTERIOR
    return ConeMembership.IN_CONE


def enumerate_representations(sys: GeneratorSystem, beta: FieldElement,
                              work_limit: int = DEFAULT_WORK_LIMIT
                              ) -> RepresentationSet:
    """The complete set of nonnegative integer representations of beta.

    Completeness: every solution satisfies |x| <= M(alpha, beta), so the
    LP-pruned backtracking below, which also respects that box, cannot miss
    one. Branches fix x_n first and run downward from the LP upper bound of
    the current coordinate; a node dies when the rational relaxation of its
    residual system is infeasible.
    """
    sys.require("totally_positive", "spanning")
    if beta.field != sys.field:
        raise PreconditionViolated("beta lives in a different field")
    box = m_measure(sys.alphas, beta)
    n, d = sys.n, sys.d
    cols = [sys.matrix.column(j) for j in range(n)]
    rows = [list(r) for r in sys.matrix.rows]
    sols: list[tuple[int, ...]] = []
    nodes = 0

    def rec(j: int, residual: list[int], suffix: tuple[int, ...]):
        nonlocal nodes
        nodes += 1
        if nodes > work_limit:
            raise WorkLimitExceeded(f"representation search passed {work_limit} nodes")
        if j == 1:
            col = cols[0]
            i0 = next(i for i in range(d) if col[i] != 0)
            v, rem = divmod(residual[i0], col[i0])
            if rem == 0 and 0 <= v <= box and all(
                    v * col[i] == residual[i] for i in range(d)):
                sols.append((v,) + suffix)
            return
        prefix_rows = [r[:j] for r in rows]
        if not simplex.feasible(prefix_rows, residual):
            return
        status, vmax, _ = simplex.maximize_coordinate(prefix_rows, residual, j - 1)
        if status is not simplex.LPStatus.OPTIMAL:
            raise PreconditionViolated("unbounded fiber; system is not pointed")
        hi = min(math.floor(vmax), box)
        col = cols[j - 1]
        for v in range(hi, -1, -1):
            rec(j - 1, [residual[i] - v * col[i] for i in range(d)],
                (v,) + suffix)

    rec(n, list(beta.coords), ())
    sols.sort()
    return RepresentationSet(beta, box, tuple(sols), True)


@dataclass(frozen=True)
class SandwichCheck:
    """Theorem-style norm bounds evaluated on every representation."""

    lower: RealEnclosure          # (1/n) (H_K(beta)/H_K(alpha))^(1/d)
    upper: int                    # M(alpha, beta)
    verdicts: tuple[tuple[tuple[int, ...], bool, bool], ...]

    @property
    def all_hold(self) -> bool:
        return all(lo and up for _, lo, up in self.verdicts)


def representation_sandwich(sys: GeneratorSystem, beta: FieldElement,
                            reps: RepresentationSet,
                            eps=DEFAULT_EPS) -> SandwichCheck:
    """Check the norm sandwich on every representation of beta.

    The lower bound is judged against the enclosure's lower end (it cannot
    produce a spurious violation) and is skipped for the zero vector, which
    only represents zero and carries no height information.
    """
    h_beta = height_elem(beta, eps)
    h_alpha = height_vector(sys.alphas, eps)
    ratio = h_beta.enclosure / h_alpha.enclosure
    lo_root = nth_root(ratio.lo, sys.d, Fraction(eps)).lo
    hi_root = nth_root(ratio.hi, sys.d, Fraction(eps)).hi
    lower = RealEnclosure(lo_root / sys.n, hi_root / sys.n)
    verdicts = []
    for x in reps.reps:
        norm = max(abs(v) for v in x)
        ok_lower = norm >= lower.lo if norm > 0 else True
        ok_upper = norm <= reps.box_radius
        verdicts.append((x, ok_lower, ok_upper))
    return SandwichCheck(lower, reps.box_radius, tuple(verdicts))


def min_representation(sys: GeneratorSystem, beta: FieldElement,
                       eps=DEFAULT_EPS) -> tuple[tuple[int, ...], SandwichCheck]:
    """A representation minimizing the sup norm, ties broken lexicographically,
    plus the sandwich certificate over all representations."""
    reps = enumerate_representations(sys, beta)
    if not reps.reps:
        raise NotRepresentable("beta has no nonnegative integer representation")
    best = min(reps.reps, key=lambda x: (max(abs(v) for v in x), x))
    return best, representation_sandwich(sys, beta, reps, eps)


def witness_search(sys: GeneratorSystem, coord_box: int
                   ) -> FieldElement | None:
    """First cone point with no representation, scanning |b|_inf shells
    outward and lexicographically inside each shell; None if the box holds
    no gap."""
    sys.require("pointed", "spanning", "totally_positive")
    d = sys.d
    for shell in range(coord_box + 1):
        for b in itertools.product(range(-shell, shell + 1), repeat=d):
            if max((abs(v) for v in b), default=0) != shell:
                continue
            beta = sys.field.element(b)
            if cone_membership(sys, beta) is ConeMembership.NOT_IN_CONE:
                continue
            if enumerate_representations(sys, beta).count == 0:
                return beta
    return None


@dataclass(frozen=True)
class CountReport:
    """Exact height-windowed counting with the theorem bound evaluations.

    Counts come in (excluding, including) pairs; the two agree unless some
    boundary height comparison stayed ambiguous at the refinement cap.
    """

    s: int
    t1: Fraction
    t2: Fraction
    x_box: int
    members: tuple[tuple[tuple[int, ...], int], ...]  # (coords, r), certain
    ambiguous: tuple[tuple[tuple[int, ...], int], ...]
    sum_r: tuple[int, int]
    sg_s_count: tuple[int, int]
    base_window_sum_r: tuple[int, int]   # window 1 <= H <= t2, feeds the lower bound
    upper_bound: RealEnclosure
    lower_bound_value: int
    upper_holds: bool | None
    lower_holds: bool | None


def _positive_embeddings(sys: GeneratorSystem, eps: Fraction
                         ) -> list[list[RealEnclosure]]:
    """enc[i][j] ~ sigma_{i+1}(alpha_{j+1}), refined until strictly positive."""
    out = []
    for place in range(1, sys.d + 1):
        row = []
        for alpha in sys.alphas:
            e = eps
            enc = embed(alpha, place, e)
            while enc.lo <= 0:
                e /= 16
                enc = embed(alpha, place, e)
            row.append(enc)
        out.append(row)
    return out


def _floor_stable(make_enclosure, eps: Fraction, rounds: int = 12
                  ) -> tuple[int, int]:
    """(floor(lo), floor(hi)) of a refinable enclosure, refined until the two
    floors agree when possible."""
    for _ in range(rounds):
        enc = make_enclosure(eps)
        flo, fhi = math.floor(enc.lo), math.floor(enc.hi)
        if flo == fhi:
            return flo, fhi
        eps /= 2 ** 8
    return flo, fhi


def count_by_height(sys: GeneratorSystem, s: int, t1, t2,
                    eps=DEFAULT_EPS,
                    work_limit: int = DEFAULT_WORK_LIMIT) -> CountReport:
    """Exact |Sg_s(alpha, T1, T2)| and sum of r(beta), with the counting
    theorem's two inequalities evaluated in certified directions.

    Enumeration walks x >= 0 with two complete cutoffs: the global box
    |x| <= ceil(d! H_K(alpha) T2 / sqrt|Delta|) (every representation of
    every beta with H_K(beta) <= T2 lies inside), and per-place pruning once
    sum_j x_j sigma_i(alpha_j) certifiably exceeds T2 (heights of totally
    positive sums only grow). Grouping by the value beta then yields exact
    representation counts inside the window.
    """
    sys.require("pointed", "spanning", "totally_positive")
    t1, t2 = Fraction(t1), Fraction(t2)
    if not 0 <= t1 < t2:
        raise ValueError("need 0 <= T1 < T2")
    if s < 1:
        raise ValueError("s must be >= 1")
    eps = Fraction(eps)
    n, d = sys.n, sys.d
    h_alpha = height_vector(sys.alphas, eps)
    disc_root = sqrt(abs(sys.field.discriminant), Fraction(1, 10**12))
    q_enc = (RealEnclosure.point(math.factorial(d)) * h_alpha.enclosure
             * RealEnclosure.point(t2)) / disc_root
    x_box = math.ceil(q_enc.hi)

    emb = _positive_embeddings(sys, Fraction(1, 1024))
    caps = []
    for j in range(n):
        cap = min(math.floor(t2 / emb[i][j].lo) for i in range(d))
        caps.append(min(cap, x_box))
    estimate = 1
    for cap in caps:
        estimate *= cap + 1
        if estimate > work_limit:
            raise BoxTooLarge(
                f"estimated {estimate}+ lattice points exceed the work limit; "
                "shrink T2 or raise the limit")

    cols = [sys.matrix.column(j) for j in range(n)]
    groups: dict[tuple[int, ...], int] = {}
    nodes = 0

    def walk(j: int, coords: tuple[int, ...], sums: list[RealEnclosure]):
        nonlocal nodes
        nodes += 1
        if nodes > work_limit:
            raise BoxTooLarge(f"lattice walk passed {work_limit} nodes")
        if any(sums[i].lo > t2 for i in range(d)):
            return
        if j == n:
            groups[coords] = groups.get(coords, 0) + 1
            return
        col = cols[j]
        cur = coords
        cur_sums = sums
        for v in range(caps[j] + 1):
            if v > 0:
                cur = tuple(c + col[i] for i, c in enumerate(cur))
                cur_sums = [cur_sums[i] + emb[i][j] for i in range(d)]
                if any(cur_sums[i].lo > t2 for i in range(d)):
                    return
            walk(j + 1, cur, cur_sums)

    walk(0, tuple([0] * d), [RealEnclosure.point(0)] * d)

    members: list[tuple[tuple[int, ...], int]] = []
    ambiguous: list[tuple[tuple[int, ...], int]] = []
    base_excl = base_incl = 0
    for coords in sorted(groups):
        beta = sys.field.element(coords)
        r = groups[coords]
        h = height_elem(beta, eps)
        vs_t2 = compare_height(h, t2)
        if vs_t2 is Comparison.ABOVE:
            continue
        if vs_t2 is Comparison.AMBIGUOUS:
            base_incl += r
            ambiguous.append((coords, r))
            continue
        base_excl += r
        base_incl += r
        vs_t1 = compare_height(h, t1)
        if vs_t1 is Comparison.BELOW:
            continue
        if vs_t1 is Comparison.AMBIGUOUS:
            ambiguous.append((coords, r))
            continue
        members.append((coords, r))

    sum_r_excl = sum(r for _, r in members)
    sum_r_incl = sum_r_excl + sum(r for _, r in ambiguous)
    sg_excl = sum(1 for _, r in members if r >= s)
    sg_incl = sg_excl + sum(1 for _, r in ambiguous if r >= s)

    def t1_term(e):
        num = nth_root(t1, d, e)
        den = RealEnclosure.point(n) * RealEnclosure(
            nth_root(h_alpha.enclosure.lo, d, e).lo,
            nth_root(h_alpha.enclosure.hi, d, e).hi)
        return RealEnclosure(num.lo, num.hi) / den

    def t2_term(e):
        num = nth_root(t2, d, e)
        den = RealEnclosure.point(n) * RealEnclosure(
            nth_root(h_alpha.enclosure.lo, d, e).lo,
            nth_root(h_alpha.enclosure.hi, d, e).hi)
        return RealEnclosure(num.lo, num.hi) / den

    f1_lo, f1_hi = _floor_stable(t1_term, Fraction(1, 10**6))
    f2_lo, f2_hi = _floor_stable(t2_term, Fraction(1, 10**6))

    ub_lo = (q_enc.lo + 1) ** n - Fraction(f1_hi) ** n
    ub_hi = (q_enc.hi + 1) ** n - Fraction(f1_lo) ** n
    upper_bound = RealEnclosure(ub_lo, ub_hi)
    if Fraction(sum_r_incl) <= ub_lo:
        upper_holds: bool | None = True
    elif Fraction(sum_r_excl) > ub_hi:
        upper_holds = False
    else:
        upper_holds = None

    lower_bound_value = f2_lo ** n
    if base_excl >= f2_hi ** n:
        lower_holds: bool | None = True
    elif base_incl < lower_bound_value:
        lower_holds = False
    else:
        lower_holds = None

    return CountReport(
        s=s, t1=t1, t2=t2, x_box=x_box,
        members=tuple(members), ambiguous=tuple(ambiguous),
        sum_r=(sum_r_excl, sum_r_incl),
        sg_s_count=(sg_excl, sg_incl),
        base_window_sum_r=(base_excl, base_incl),
        upper_bound=upper_bound,
        lower_bound_value=lower_bound_value,
        upper_holds=upper_holds,
        lower_holds=lower_holds,
    )
