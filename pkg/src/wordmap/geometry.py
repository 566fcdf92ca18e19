"""SL2-specific geometry: closed forms, fiber membership, witness families for the
catalogued representation-variety components, jet-based dimension certificates,
and relation scanning."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DegenerateLambda,
    DimensionMismatch,
    InvalidParams,
    RingLacksRoots,
)
from .matrices import (
    SquareMatrix,
    eps_part_matrix,
    lift_matrix,
    rank,
    random_sl2,
    real_part_matrix,
)
from .rings import (
    DualNumbers,
    PrimeField,
    RingDescriptor,
    Scalar,
    primitive_root_of_unity,
    sqrt_in_ring,
    sqrt_minus_one,
)
from .evaluate import (
    SL2_DIRECTIONS,
    _direction_matrix,
    eval_group,
    jet_sweep,
)
from .words import (
    Word,
    WordWithConstants,
    commutator,
    parse,
    power,
    pure,
    word,
    zero_exponent_sum_in_y,
)


# ---------------------------------------------------------------------------
# small constructors


def diag(lam: Scalar) -> SquareMatrix:
    ring = lam.ring
    return SquareMatrix.from_rows(ring, [[lam, ring.zero], [ring.zero, lam.inv()]])


def upper_unitriangular(u: Scalar) -> SquareMatrix:
    ring = u.ring
    return SquareMatrix.from_rows(ring, [[ring.one, u], [ring.zero, ring.one]])


def off_diagonal(mu: Scalar) -> SquareMatrix:
    """[[0, mu], [-1/mu, 0]]; the Q8-type generator."""
    ring = mu.ring
    return SquareMatrix.from_rows(ring, [[ring.zero, mu], [-mu.inv(), ring.zero]])


def weyl_rep(ring: RingDescriptor) -> SquareMatrix:
    """The torus-normalizer representative [[0, 1], [-1, 0]]."""
    return SquareMatrix.from_rows(ring, [[0, 1], [-1, 0]])


def conjugate(g: SquareMatrix, m: SquareMatrix) -> SquareMatrix:
    return g * m * g.inverse()


def _coerce(s: Scalar, ring: RingDescriptor) -> Scalar:
    """Move a base scalar into ring, lifting into dual numbers when needed."""
    if s.ring == ring:
        return s
    if isinstance(ring, DualNumbers) and ring.base == s.ring:
        return ring.lift(s)
    raise InvalidParams(f"cannot coerce scalar from {s.ring} into {ring}")


# ---------------------------------------------------------------------------
# closed forms around the commutator with a torus element


def commutator_closed_form(t: SquareMatrix, g: SquareMatrix) -> SquareMatrix:
    """The commutator [t, g] for t = diag(lam, 1/lam), written out entrywise."""
    ring = t.ring
    lam = t[0, 0]
    if t != diag(lam):
        raise InvalidParams("t must be diag(lam, 1/lam)")
    al, be = g.entries[0]
    ga, de = g.entries[1]
    l2 = lam * lam
    l2i = l2.inv()
    return SquareMatrix.from_rows(
        ring,
        [
            [al * de - be * ga * l2, al * be * (l2 - ring.one)],
            [ga * de * (l2i - ring.one), al * de - be * ga * l2i],
        ],
    )


def commutator_trace(lam: Scalar, be: Scalar, ga: Scalar) -> Scalar:
    """tr [diag(lam, 1/lam), g] = 2 - beta*gamma*(lam - 1/lam)^2."""
    ring = lam.ring
    d = lam - lam.inv()
    return ring.from_int(2) - be * ga * d * d


@dataclass(frozen=True)
class Sl2Pair:
    g1: SquareMatrix
    g2: SquareMatrix

    def __iter__(self):
        return iter((self.g1, self.g2))


def trace_preimage_commutator(a: Scalar, lam: Scalar, be: Scalar) -> Sl2Pair:
    """A pair (t, g) with tr [t, g] = a exactly.

    beta*gamma = p = (2-a)/(lam-1/lam)^2 and alpha*delta = q = p + 1, so
    det g = q - p = 1 automatically.
    """
    ring = a.ring
    if lam == ring.one or lam == ring.from_int(-1):
        raise DegenerateLambda("lambda must differ from +-1")
    if be.is_zero():
        raise InvalidParams("beta must be nonzero")
    d = lam - lam.inv()
    p = (ring.from_int(2) - a) / (d * d)
    q = p + ring.one
    ga = p / be
    if q.is_zero():
        al, de = ring.zero, ring.zero
    else:
        al, de = q, ring.one
    g = SquareMatrix.from_rows(ring, [[al, be], [ga, de]])
    return Sl2Pair(diag(lam), g)


# ---------------------------------------------------------------------------
# fiber membership and separation witnesses


@dataclass(frozen=True)
class FiberMembership:
    in_W: bool
    in_T: bool


def fiber_membership(w: WordWithConstants, tup) -> FiberMembership:
    value = eval_group(w, list(tup))
    if value.n != 2:
        raise DimensionMismatch("fiber membership is defined for SL2")
    in_w = value == SquareMatrix.identity(value.ring, 2)
    in_t = value.trace() == value.ring.from_int(2)
    return FiberMembership(in_W=in_w, in_T=in_t)


def separation_witness(w: WordWithConstants, ring: RingDescriptor):
    """A point with tr(w^) = 2 and w^ != 1, from the catalogue parametrizations."""
    two = ring.from_int(2)
    three = ring.from_int(3)
    ident = SquareMatrix.identity(ring, 2)
    candidates = [
        Sl2Pair(diag(two), upper_unitriangular(ring.one)),
        Sl2Pair(diag(two), weyl_rep(ring) * upper_unitriangular(ring.one)),
        Sl2Pair(diag(three), upper_unitriangular(ring.one)),
        Sl2Pair(upper_unitriangular(ring.one), diag(two)),
    ]
    for p in candidates:
        value = eval_group(w, list(p))
        if value != ident and value.trace() == two:
            return p
    return None


# ---------------------------------------------------------------------------
# jet Jacobians of fiber equations


@dataclass(frozen=True)
class JetJacobian:
    rows: tuple
    rank: int


def jet_jacobian(w: WordWithConstants, point, equations: str = "W") -> JetJacobian:
    """Jacobian of the fiber equations at an SL2^m point.

    ``W``: the three equations w11 - 1 = w12 = w21 = 0; ``T``: tr(w^) - 2 = 0.
    Rows are directional derivatives along (I + eps X) g_i for X in {E, F, H}.
    """
    if equations not in ("W", "T"):
        raise ValueError("equations must be 'W' or 'T'")
    rows = []
    for _i, _name, deriv, _base in jet_sweep(w, list(point)):
        if equations == "W":
            rows.append((deriv[0, 0], deriv[0, 1], deriv[1, 0]))
        else:
            rows.append((deriv.trace(),))
    ring = point[0].ring
    return JetJacobian(rows=tuple(rows), rank=rank([list(r) for r in rows], ring))


# ---------------------------------------------------------------------------
# component catalogue


@dataclass
class ComponentInstance:
    """A catalogued irreducible-component family, pinned to a ring and base parameters.

    ``family(scalars, mats)`` maps parameters to a pair in G x G; ``equations``
    are local defining equations of the component that vanish on the witness.
    """

    id: str
    ring: RingDescriptor
    word: WordWithConstants
    claimed: int
    scalars: list
    mats: list
    family: object
    equations: object  # fn(tup) -> list of Scalar over tup's ring

    def witness(self) -> Sl2Pair:
        return Sl2Pair(*self.family(self.scalars, self.mats))


@dataclass(frozen=True)
class DimensionCertificate:
    component: str
    point: Sl2Pair
    lower: int
    upper: int
    claimed: int
    confirmed: bool


COMPONENT_IDS = (
    "ex1.W",
    "ex1.T",
    "ex2.Wj",
    "ex3.W1",
    "ex4.Tj",
    "ex5.W1",
    "ex5.T1",
    "ex5.T2",
    "Sa",
)

_EX5_TEXT = "[ [x,y] , x [x,y] x^-1 ]"


def _wfiber_equations(w: WordWithConstants):
    def eqs(tup):
        ring = tup[0].ring
        v = eval_group(w, list(tup))
        return [v[0, 0] - ring.one, v[0, 1], v[1, 0]]

    return eqs


def _trace_equation(w: WordWithConstants, target: Scalar):
    def eqs(tup):
        ring = tup[0].ring
        v = eval_group(w, list(tup))
        return [v.trace() - _coerce(target, ring)]

    return eqs


def _first_factor_trace_equation(target: Scalar):
    def eqs(tup):
        return [tup[0].trace() - _coerce(target, tup[0].ring)]

    return eqs


def _default_conjugator(ring: RingDescriptor) -> SquareMatrix:
    return SquareMatrix.from_rows(ring, [[1, 1], [1, 2]])


def _default_free_point(ring: RingDescriptor) -> SquareMatrix:
    return SquareMatrix.from_rows(ring, [[2, 1], [1, 1]])


def _need_i(ring: RingDescriptor) -> Scalar:
    s = sqrt_minus_one(ring)
    if s is None:
        raise RingLacksRoots(f"{ring} has no square root of -1")
    return s


def _generic_lambda(ring: RingDescriptor, avoid=()):
    """A lambda with lam^4 != 1 avoiding the supplied predicates."""
    for n in (2, 3, 5, 7, 11, 13):
        lam = ring.from_int(n)
        if lam.is_zero() or not lam.is_invertible():
            continue
        if (lam ** 4) == ring.one:
            continue
        if any(pred(lam) for pred in avoid):
            continue
        return lam
    raise InvalidParams(f"no generic torus parameter found in {ring}")


def component(
    cid: str,
    ring: RingDescriptor,
    p: int = 5,
    j: int = 1,
    a: Scalar | None = None,
) -> ComponentInstance:
    """Instantiate a catalogued component over a concrete ring.

    ``p``/``j`` select the Ex4 component (w = [x,y]^p, trace target
    zeta_p^j + zeta_p^-j); ``a`` fixes the trace level of the Sa hypersurface.
    """
    g0 = _default_conjugator(ring)
    xy = pure(commutator(word([(1, 1)]), word([(2, 1)])))

    if cid == "ex1.W":
        lam1, lam2 = ring.from_int(2), ring.from_int(3)
        _check_torus(lam1), _check_torus(lam2)

        def family(scalars, mats):
            l1, l2 = scalars
            (g,) = mats
            return conjugate(g, diag(l1)), conjugate(g, diag(l2))

        return ComponentInstance(
            cid, ring, xy, 4, [lam1, lam2], [g0], family, _wfiber_equations(xy)
        )

    if cid == "ex1.T":
        lam, mu, u = ring.from_int(2), ring.from_int(3), ring.one
        _check_torus(lam)

        def family(scalars, mats):
            l, m, uu = scalars
            (g,) = mats
            b = diag(m) * upper_unitriangular(uu)
            return conjugate(g, diag(l)), conjugate(g, b)

        return ComponentInstance(
            cid, ring, xy, 5, [lam, mu, u], [g0], family,
            _trace_equation(xy, ring.from_int(2)),
        )

    if cid == "ex2.Wj":
        # the C_j x G component of w = [x^(j/2), y], shown for j = 4 (needs i)
        if j != 4:
            raise InvalidParams("ex2.Wj is catalogued for j = 4")
        i_scalar = _need_i(ring)
        w = pure(commutator(word([(1, 2)]), word([(2, 1)])))
        h0 = _default_free_point(ring)

        def family(scalars, mats):
            g, h = mats
            x0 = diag(_coerce(i_scalar, g.ring))
            return conjugate(g, x0), h

        return ComponentInstance(
            cid, ring, w, 5, [], [g0, h0], family,
            _first_factor_trace_equation(ring.zero),
        )

    if cid == "ex3.W1":
        i_scalar = _need_i(ring)
        w = pure(power(commutator(word([(1, 1)]), word([(2, 1)])), 2))
        mu = ring.from_int(2)

        def family(scalars, mats):
            (m,) = scalars
            (g,) = mats
            t0 = diag(_coerce(i_scalar, m.ring))
            return conjugate(g, t0), conjugate(g, off_diagonal(m))

        return ComponentInstance(
            cid, ring, w, 3, [mu], [g0], family, _wfiber_equations(w)
        )

    if cid == "ex4.Tj" or cid == "Sa":
        if cid == "ex4.Tj":
            if not isinstance(ring, PrimeField):
                raise InvalidParams("ex4.Tj is instantiated over a prime field F_q")
            zeta = primitive_root_of_unity(ring, p)
            if zeta is None:
                raise RingLacksRoots(f"F_{ring.p} has no primitive {p}-th root of unity")
            target = zeta ** j + zeta ** (-j)
            w = pure(power(commutator(word([(1, 1)]), word([(2, 1)])), p))
        else:
            target = a if a is not None else ring.from_int(5)
            w = xy
        lam = _generic_lambda(
            ring,
            avoid=[lambda l: (l * l + (l * l).inv() - target).is_zero()],
        )
        be, c = ring.one, ring.one

        def family(scalars, mats):
            l, b, cc = scalars
            (g,) = mats
            ring_l = l.ring
            t = _coerce(target, ring_l)
            d = l - l.inv()
            pa = (ring_l.from_int(2) - t) / (d * d)
            qa = pa + ring_l.one
            m2 = SquareMatrix.from_rows(
                ring_l, [[cc, b], [pa / b, qa / cc]]
            )
            return conjugate(g, diag(l)), conjugate(g, m2)

        return ComponentInstance(
            cid, ring, w, 5, [lam, be, c], [g0], family, _trace_equation(xy, target)
        )

    if cid == "ex5.W1":
        w = parse(_EX5_TEXT)
        lam1 = _generic_lambda(ring)
        lam2 = ring.from_int(3)

        def family(scalars, mats):
            l1, l2 = scalars
            (g,) = mats
            wd = weyl_rep(l1.ring)
            return conjugate(g, diag(l1)), conjugate(g, wd * diag(l2))

        return ComponentInstance(
            cid, ring, w, 4, [lam1, lam2], [g0], family, _wfiber_equations(w)
        )

    if cid == "ex5.T1":
        w = parse(_EX5_TEXT)
        lam = _generic_lambda(ring)
        mu, u = ring.from_int(3), ring.one

        def family(scalars, mats):
            l, m, uu = scalars
            (g,) = mats
            wd = weyl_rep(l.ring)
            b = diag(m) * upper_unitriangular(uu)
            return conjugate(g, diag(l)), conjugate(g, wd * b)

        return ComponentInstance(
            cid, ring, w, 5, [lam, mu, u], [g0], family,
            _trace_equation(w, ring.from_int(2)),
        )

    if cid == "ex5.T2":
        w = parse(_EX5_TEXT)
        h0 = _default_free_point(ring)

        def family(scalars, mats):
            g, h = mats
            return conjugate(g, weyl_rep(g.ring)), h

        return ComponentInstance(
            cid, ring, w, 5, [], [g0, h0], family,
            _first_factor_trace_equation(ring.zero),
        )

    raise InvalidParams(f"unknown component id {cid!r}; known: {COMPONENT_IDS}")


def _check_torus(lam: Scalar):
    if lam == lam.ring.one or lam == lam.ring.from_int(-1):
        raise DegenerateLambda("torus parameter is +-1")


def parametrization_rank(comp: ComponentInstance) -> int:
    """Rank of the differential of the parametrizing map at the base point.

    Columns: one dual-number jet per scalar parameter plus three sl2 directions
    per matrix parameter; rows: the six tangent coordinates of the image pair.
    """
    ring = comp.ring
    dual = DualNumbers(ring)
    eps = dual.eps
    lifted_scalars = [dual.lift(s) for s in comp.scalars]
    lifted_mats = [lift_matrix(m, dual) for m in comp.mats]
    base_pair = comp.family(lifted_scalars, lifted_mats)
    base_real = [real_part_matrix(m) for m in base_pair]
    ident = SquareMatrix.identity(dual, 2)

    columns = []

    def tangent_column(pair):
        coords = []
        for k in range(2):
            a = eps_part_matrix(pair[k]) * base_real[k].inverse()
            coords.extend([a[0, 0], a[0, 1], a[1, 0]])
        return coords

    for idx in range(len(comp.scalars)):
        scalars = list(lifted_scalars)
        scalars[idx] = scalars[idx] + eps
        columns.append(tangent_column(comp.family(scalars, lifted_mats)))
    for idx in range(len(comp.mats)):
        for name in SL2_DIRECTIONS:
            x = _direction_matrix(dual, name).scaled(eps)
            mats = list(lifted_mats)
            mats[idx] = (ident + x) * mats[idx]
            columns.append(tangent_column(comp.family(lifted_scalars, mats)))
    # rank of the transpose equals rank of the Jacobian
    return rank(columns, ring)


def _equation_jacobian_rank(comp: ComponentInstance, point: Sl2Pair) -> int:
    ring = comp.ring
    dual = DualNumbers(ring)
    eps = dual.eps
    lifted = [lift_matrix(m, dual) for m in point]
    ident = SquareMatrix.identity(dual, 2)
    columns = []
    for idx in range(2):
        for name in SL2_DIRECTIONS:
            x = _direction_matrix(dual, name).scaled(eps)
            tup = list(lifted)
            tup[idx] = (ident + x) * tup[idx]
            values = comp.equations(tup)
            columns.append([dual.eps_part(v) for v in values])
    return rank(columns, ring)


def dimension_certificate(comp: ComponentInstance) -> DimensionCertificate:
    """Sandwich the component dimension: parametrization rank from below,
    6 minus the fiber-equation Jacobian rank from above."""
    point = comp.witness()
    residuals = comp.equations(list(point))
    if any(not v.is_zero() for v in residuals):
        raise InvalidParams(f"witness for {comp.id} does not satisfy its equations")
    lower = parametrization_rank(comp)
    upper = 6 - _equation_jacobian_rank(comp, point)
    return DimensionCertificate(
        component=comp.id,
        point=point,
        lower=lower,
        upper=upper,
        claimed=comp.claimed,
        confirmed=(lower == comp.claimed and upper == comp.claimed),
    )


def q8_witness(ring: RingDescriptor, mu: Scalar | None = None) -> Sl2Pair:
    """(diag(i, -i), [[0, mu], [-1/mu, 0]]): the pair generating Q8."""
    i_scalar = _need_i(ring)
    mu = mu if mu is not None else ring.one
    return Sl2Pair(diag(i_scalar), off_diagonal(mu))


# ---------------------------------------------------------------------------
# relation scanning and group closure


@dataclass(frozen=True)
class RelationScanResult:
    trivial: bool
    relations: tuple  # of Word


_SCAN_MAX = 12


def relation_scan(pair: Sl2Pair, max_len: int) -> RelationScanResult:
    """All reduced words in F_2 of length <= max_len vanishing at the pair."""
    if max_len > _SCAN_MAX:
        raise InvalidParams(f"max_len capped at {_SCAN_MAX}")
    ring = pair.g1.ring
    ident = SquareMatrix.identity(ring, 2)
    if pair.g1 == ident and pair.g2 == ident:
        return RelationScanResult(trivial=True, relations=())
    gens = {
        (1, 1): pair.g1,
        (1, -1): pair.g1.inverse(),
        (2, 1): pair.g2,
        (2, -1): pair.g2.inverse(),
    }
    letters = [(1, 1), (1, -1), (2, 1), (2, -1)]
    found = []

    def extend(prefix, matrix, remaining):
        for gen, sgn in letters:
            if prefix and prefix[-1] == (gen, -sgn):
                continue  # keep the word reduced
            m2 = matrix * gens[(gen, sgn)]
            w2 = prefix + [(gen, sgn)]
            if m2 == ident:
                found.append(word(w2))
            if remaining > 1:
                extend(w2, m2, remaining - 1)

    extend([], ident, max_len)
    found.sort(key=lambda w: (w.length(), tuple((l.gen, l.exp) for l in w.letters)))
    return RelationScanResult(trivial=False, relations=tuple(found))


def generated_group(mats, cap: int = 10000):
    """Closure of the given SL2 elements under multiplication (BFS)."""
    frontier = list(mats)
    seen = set(frontier)
    gens = list(mats) + [m.inverse() for m in mats]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = m * g
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
                    if len(seen) > cap:
                        raise InvalidParams(f"group closure exceeded cap {cap}")
        frontier = nxt
    return seen


# ---------------------------------------------------------------------------
# executable lemma checks


@dataclass(frozen=True)
class Lemma78Report:
    value: SquareMatrix
    in_Uminus: bool
    trivial_iff_unit: bool


def lemma78_check(lam: Scalar, u_param: Scalar) -> Lemma78Report:
    """w = [[x,y], x[x,y]x^-1] at (diag(lam), wdot * unitriangular(u)):
    lower unitriangular, trivial exactly when u = 0."""
    ring = lam.ring
    if (lam ** 4) == ring.one:
        raise DegenerateLambda("lambda^4 must differ from 1")
    w = parse(_EX5_TEXT)
    s = diag(lam)
    h = weyl_rep(ring) * upper_unitriangular(u_param)
    v = eval_group(w, [s, h])
    in_uminus = (
        v[0, 0] == ring.one and v[1, 1] == ring.one and v[0, 1].is_zero()
    )
    is_identity = v == SquareMatrix.identity(ring, 2)
    return Lemma78Report(
        value=v,
        in_Uminus=in_uminus,
        trivial_iff_unit=(is_identity == u_param.is_zero()),
    )


@dataclass(frozen=True)
class Lemma101Report:
    z: SquareMatrix
    intermediate: SquareMatrix
    final_trace: Scalar
    ok: bool


def lemma101_check(ring: RingDescriptor) -> Lemma101Report:
    """The explicit unipotent-class computation: z = [u, g] = [[0, 1/2], [-2, 0]],
    then w(u, g) = ([[-1, 1], [4, -5]])^2 with trace 34 != 2."""
    i_scalar = _need_i(ring)
    s2 = sqrt_in_ring(ring, 2)
    if s2 is None:
        raise RingLacksRoots(f"{ring} has no sqrt(2)")
    half = ring.from_int(2).inv()
    u = upper_unitriangular(ring.one)
    g = SquareMatrix.from_rows(
        ring,
        [
            [i_scalar * s2 * half, -(i_scalar * s2 * half)],
            [-(i_scalar * s2), ring.zero],
        ],
    )
    z = u * g * u.inverse() * g.inverse()
    z_expected = SquareMatrix.from_rows(ring, [[ring.zero, half], [ring.from_int(-2), ring.zero]])
    intermediate = z * u * z * u.inverse()
    inter_expected = SquareMatrix.from_rows(ring, [[-1, 1], [4, -5]])
    w = parse(_EX5_TEXT)
    final = eval_group(w, [u, g])
    ok = (
        z == z_expected
        and intermediate == inter_expected
        and final == intermediate ** 2
        and final.trace() == ring.from_int(34)
        and final.trace() != ring.from_int(2)
    )
    return Lemma101Report(
        z=z, intermediate=intermediate, final_trace=final.trace(), ok=ok
    )


# ---------------------------------------------------------------------------
# trace probe after substituting a constant for the distinguished variable


@dataclass(frozen=True)
class TraceProbeResult:
    distinct_traces: tuple
    verdict: str  # "ConstantSoFar" | "TakesManyValues"


_TRACE_CAP = 32


def wsigma_trace_probe(
    w: Word, sigma: SquareMatrix, rng, samples: int, y_gen: int = 2
) -> TraceProbeResult:
    """Sample tr(w^_sigma) with sigma substituted for the distinguished variable."""
    if not zero_exponent_sum_in_y(w, y_gen):
        raise InvalidParams("the distinguished-variable exponents must sum to zero")
    ring = sigma.ring
    m = max(w.max_generator(), y_gen)
    ww = pure(w)
    seen = []
    for _ in range(samples):
        tup = [random_sl2(ring, rng) for _ in range(m)]
        tup[y_gen - 1] = sigma
        value = eval_group(ww, tup).trace()
        if value not in seen:
            seen.append(value)
            if len(seen) >= _TRACE_CAP:
                break
    verdict = "ConstantSoFar" if len(seen) <= 1 else "TakesManyValues"
    return TraceProbeResult(distinct_traces=tuple(seen), verdict=verdict)
