"""Case tags and parabolic root data for the seven Hermitian families.

Each case fixes a coordinate realization of a simple root system together
with a parabolic of abelian type: an ordered simple system, the single
noncompact simple root, the Levi and nilradical halves of the positive
roots, the half-sum rho, the highest nilradical root gamma, and the scalar
direction zeta (orthogonal to the Levi, normalized against gamma).

Data are built once per case, validated against structural invariants, and
cached; every field is an immutable tuple, safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvariantError
from .ratvec import Weight, inner, pairing, scale, weight

CASE_TAGS = ("AIII", "CI", "BI", "DI", "DIII", "EIII", "EVII")

# Tags whose rank-2 orthogonal instance degenerates: so(4) = sl(2) + sl(2),
# so the D2 picture has no highest root and (for DI) an empty Levi system.
_D2_DEGENERATE = {("DI", 2), ("DIII", 2)}


@dataclass(frozen=True)
class HermitianCase:
    """A case tag plus its integer parameters.

    AIII takes (p, q) with p, q >= 1; CI, BI, DI, DIII take n >= 2;
    EIII and EVII take no parameters.
    """

    tag: str
    p: int | None = None
    q: int | None = None
    n: int | None = None

    def __post_init__(self) -> None:
        if self.tag not in CASE_TAGS:
            raise ValueError(f"unknown case tag {self.tag!r}; expected one of {CASE_TAGS}")
        if self.tag == "AIII":
            if self.n is not None or self.p is None or self.q is None:
                raise ValueError("AIII takes parameters p and q only")
            if self.p < 1 or self.q < 1:
                raise ValueError(f"AIII needs p, q >= 1, got p={self.p}, q={self.q}")
        elif self.tag in ("CI", "BI", "DI", "DIII"):
            if self.p is not None or self.q is not None or self.n is None:
                raise ValueError(f"{self.tag} takes the single parameter n")
            if self.n < 2:
                raise ValueError(f"{self.tag} needs n >= 2, got n={self.n}")
        else:
            if self.p is not None or self.q is not None or self.n is not None:
                raise ValueError(f"{self.tag} takes no parameters")

    @property
    def label(self) -> str:
        if self.tag == "AIII":
            return f"AIII({self.p},{self.q})"
        if self.n is not None:
            return f"{self.tag}({self.n})"
        return self.tag


@dataclass(frozen=True)
class ParabolicRootDatum:
    """The full exact root datum of one case instance."""

    case: HermitianCase
    ambient_dim: int
    simple_roots: tuple[Weight, ...]
    levi_simples: tuple[Weight, ...]
    noncompact_simple: Weight
    positive_roots: tuple[Weight, ...]
    levi_positive: tuple[Weight, ...]
    nilradical_roots: tuple[Weight, ...]
    rho: Weight
    gamma: Weight
    zeta: Weight
    theta_u: Weight


def case_notes(case: HermitianCase) -> tuple[str, ...]:
    """Degeneracy flags worth surfacing in output metadata."""
    if (case.tag, case.n) == ("DIII", 2):
        return ("ambient algebra so(4) is not simple",)
    if (case.tag, case.n) == ("DI", 2):
        return ("both simple roots are noncompact; the Levi is a torus",)
    return ()


def build_datum(case: HermitianCase) -> ParabolicRootDatum:
    """Build (or fetch the cached) validated root datum for a case."""
    return _build(case)


def scalar_parameter_weight(datum: ParabolicRootDatum, c) -> Weight:
    """The scalar highest weight c * zeta."""
    return scale(Fraction(c), datum.zeta)


def sign_pattern_root(pattern, sixth_sign: int) -> Weight:
    """A half-coordinate exceptional root from a five-place sign pattern.

    ``pattern`` gives the signs of e1..e5: a string over "+-" (U+2212 also
    accepted), or five parities with 0 meaning "+" and 1 meaning "-".
    ``sixth_sign`` (+1 or -1) is the sign of e6; e7 and e8 always carry
    -1/2 and +1/2.
    """
    signs = parse_pattern(pattern)
    if sixth_sign not in (1, -1):
        raise ValueError(f"sixth_sign must be +1 or -1, got {sixth_sign!r}")
    h = Fraction(1, 2)
    return tuple([s * h for s in signs] + [sixth_sign * h, -h, h])


def parse_pattern(pattern) -> tuple[int, ...]:
    """Normalize a five-place sign pattern to a tuple of +1/-1 signs."""
    if isinstance(pattern, str):
        s = pattern.replace("−", "-")
        if len(s) != 5 or any(ch not in "+-" for ch in s):
            raise ValueError(f"bad sign pattern {pattern!r}")
        return tuple(1 if ch == "+" else -1 for ch in s)
    signs = tuple(pattern)
    if len(signs) != 5 or any(v not in (0, 1) for v in signs):
        raise ValueError(f"bad parity pattern {pattern!r}")
    return tuple(1 if v == 0 else -1 for v in signs)


def pattern_string(signs: Sequence[int]) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


# ---------------------------------------------------------------------------
# per-case construction


def _e(i: int, dim: int) -> Weight:
    return tuple(Fraction(1 if j == i else 0) for j in range(1, dim + 1))


def _sorted(roots: Iterable[Weight]) -> tuple[Weight, ...]:
    # Fixed lexicographic coordinate order keeps every downstream listing
    # (supports, certificates, JSON dumps) byte-stable.
    return tuple(sorted(roots))


def _aiii(p: int, q: int):
    dim = p + q
    e = lambda i: _e(i, dim)
    delta = tuple(tuple(a - b for a, b in zip(e(i), e(i + 1))) for i in range(1, dim))
    alpha_u = delta[p - 1]
    pos = _sorted(
        tuple(a - b for a, b in zip(e(i), e(j))) for i in range(1, dim) for j in range(i + 1, dim + 1)
    )
    nil = _sorted(
        tuple(a - b for a, b in zip(e(i), e(j)))
        for i in range(1, p + 1)
        for j in range(p + 1, dim + 1)
    )
    rho = tuple(Fraction(dim + 1, 2) - i for i in range(1, dim + 1))
    gamma = tuple(a - b for a, b in zip(e(1), e(dim)))
    zeta = tuple([Fraction(q, dim)] * p + [-Fraction(p, dim)] * q)
    return dim, delta, alpha_u, pos, nil, rho, gamma, zeta


def _ci(n: int):
    e = lambda i: _e(i, n)
    delta = tuple(
        tuple(a - b for a, b in zip(e(i), e(i + 1))) for i in range(1, n)
    ) + (scale(2, e(n)),)
    alpha_u = delta[-1]
    longs = [scale(2, e(k)) for k in range(1, n + 1)]
    sums = [tuple(a + b for a, b in zip(e(i), e(j))) for i in range(1, n) for j in range(i + 1, n + 1)]
    diffs = [tuple(a - b for a, b in zip(e(i), e(j))) for i in range(1, n) for j in range(i + 1, n + 1)]
    pos = _sorted(diffs + sums + longs)
    nil = _sorted(sums + longs)
    rho = tuple(Fraction(n - i + 1) for i in range(1, n + 1))
    gamma = scale(2, e(1))
    zeta = tuple([Fraction(1)] * n)
    return n, delta, alpha_u, pos, nil, rho, gamma, zeta


def _bi(n: int):
    e = lambda i: _e(i, n)
    delta = tuple(
        tuple(a - b for a, b in zip(e(i), e(i + 1))) for i in range(1, n)
    ) + (e(n),)
    alpha_u = delta[0]
    shorts = [e(k) for k in range(1, n + 1)]
    sums = [tuple(a + b for a, b in zip(e(i), e(j))) for i in range(1, n) for j in range(i + 1, n + 1)]
    diffs = [tuple(a - b for a, b in zip(e(i), e(j))) for i in range(1, n) for j in range(i + 1, n + 1)]
    pos = _sorted(diffs + sums + shorts)
    nil = _sorted(
        [tuple(a + b for a, b in zip(e(1), e(j))) for j in range(2, n + 1)]
        + [tuple(a - b for a, b in zip(e(1), e(j))) for j in range(2, n + 1)]
        + [e(1)]
    )
    rho = tuple(Fraction(n - i) + Fraction(1, 2) for i in range(1, n + 1))
    gamma = tuple(a + b for a, b in zip(e(1), e(2)))
    zeta = e(1)
    return n, delta, alpha_u, pos, nil, rho, gamma, zeta


def _d_delta(n: int) -> tuple[Weight, ...]:
    e = lambda i: _e(i, n)
    return tuple(
        tuple(a - b for a, b in zip(e(i), e(i + 1))) for i in range(1, n)
    ) + (tuple(a + b for a, b in zip(e(n - 1), e(n))),)


def _di(n: int):
    e = lambda i: _e(i, n)
    delta = _d_delta(n)
    alpha_u = delta[0]
    sums = [tuple(a + b for a, b in zip(e(i), e(j))) for i in range(1, n) for j in range(i + 1, n + 1)]
    diffs = [tuple(a - b for a, b in zip(e(i), e(j))) for i in range(1, n) for j in range(i + 1, n + 1)]
    pos = _sorted(diffs + sums)
    nil = _sorted(
        [tuple(a + b for a, b in zip(e(1), e(j))) for j in range(2, n + 1)]
        + [tuple(a - b for a, b in zip(e(1), e(j))) for j in range(2, n + 1)]
    )
    rho = tuple(Fraction(n - i) for i in range(1, n + 1))
    gamma = tuple(a + b for a, b in zip(e(1), e(2)))
    zeta = e(1)
    return n, delta, alpha_u, pos, nil, rho, gamma, zeta


def _diii(n: int):
    e = lambda i: _e(i, n)
    delta = _d_delta(n)
    alpha_u = delta[-1]
    sums = [tuple(a + b for a, b in zip(e(i), e(j))) for i in range(1, n) for j in range(i + 1, n + 1)]
    diffs = [tuple(a - b for a, b in zip(e(i), e(j))) for i in range(1, n) for j in range(i + 1, n + 1)]
    pos = _sorted(diffs + sums)
    nil = _sorted(sums)
    rho = tuple(Fraction(n - i) for i in range(1, n + 1))
    gamma = tuple(a + b for a, b in zip(e(1), e(2)))
    zeta = tuple([Fraction(1, 2)] * n)
    return n, delta, alpha_u, pos, nil, rho, gamma, zeta


def _e6_simples() -> tuple[Weight, ...]:
    h = Fraction(1, 2)
    alpha1 = (h, -h, -h, -h, -h, -h, -h, h)
    alpha2 = weight((1, 1, 0, 0, 0, 0, 0, 0))
    rest = tuple(
        tuple(a - b for a, b in zip(_e(i - 1, 8), _e(i - 2, 8))) for i in range(3, 7)
    )
    return (alpha1, alpha2) + rest


def _d5_positive_high() -> list[Weight]:
    # e_j +/- e_i for 1 <= i < j <= 5 inside R^8: positivity favors the
    # higher index, matching the exceptional simple systems above.
    e = lambda i: _e(i, 8)
    out = []
    for i in range(1, 5):
        for j in range(i + 1, 6):
            out.append(tuple(a - b for a, b in zip(e(j), e(i))))
            out.append(tuple(a + b for a, b in zip(e(j), e(i))))
    return out


def _half_roots(sixth_sign: int, parity: int) -> list[Weight]:
    # All 16 sign-pattern roots with the given e6 sign and sign-count parity.
    out = []
    for m in range(32):
        v = tuple((m >> k) & 1 for k in range(5))
        if sum(v) % 2 == parity:
            out.append(sign_pattern_root(v, sixth_sign))
    return out


def _eiii():
    delta = _e6_simples()
    alpha_u = delta[0]
    nil = _sorted(_half_roots(-1, 0))
    levi = _d5_positive_high()
    pos = _sorted(levi + list(nil))
    rho = weight((0, 1, 2, 3, 4, -4, -4, 4))
    gamma = sign_pattern_root("+++++", -1)
    zeta = weight((0, 0, 0, 0, 0, "-2/3", "-2/3", "2/3"))
    return 8, delta, alpha_u, pos, nil, rho, gamma, zeta


def _evii():
    e = lambda i: _e(i, 8)
    delta = _e6_simples() + (tuple(a - b for a, b in zip(e(6), e(5))),)
    alpha_u = delta[-1]
    e6_pos = _d5_positive_high() + _half_roots(-1, 0)
    nil = _sorted(
        [tuple(a + b for a, b in zip(e(6), e(i))) for i in range(1, 6)]
        + [tuple(a - b for a, b in zip(e(6), e(i))) for i in range(1, 6)]
        + [tuple(a - b for a, b in zip(e(8), e(7)))]
        + _half_roots(1, 1)
    )
    pos = _sorted(e6_pos + list(nil))
    rho = weight((0, 1, 2, 3, 4, 5, "-17/2", "17/2"))
    gamma = tuple(a - b for a, b in zip(e(8), e(7)))
    zeta = weight((0, 0, 0, 0, 0, 1, "-1/2", "1/2"))
    return 8, delta, alpha_u, pos, nil, rho, gamma, zeta


@lru_cache(maxsize=None)
def _build(case: HermitianCase) -> ParabolicRootDatum:
    if case.tag == "AIII":
        dim, delta, alpha_u, pos, nil, rho, gamma, zeta = _aiii(case.p, case.q)
    elif case.tag == "CI":
        dim, delta, alpha_u, pos, nil, rho, gamma, zeta = _ci(case.n)
    elif case.tag == "BI":
        dim, delta, alpha_u, pos, nil, rho, gamma, zeta = _bi(case.n)
    elif case.tag == "DI":
        dim, delta, alpha_u, pos, nil, rho, gamma, zeta = _di(case.n)
    elif case.tag == "DIII":
        dim, delta, alpha_u, pos, nil, rho, gamma, zeta = _diii(case.n)
    elif case.tag == "EIII":
        dim, delta, alpha_u, pos, nil, rho, gamma, zeta = _eiii()
    else:
        dim, delta, alpha_u, pos, nil, rho, gamma, zeta = _evii()

    nil_set = set(nil)
    levi_pos = tuple(b for b in pos if b not in nil_set)
    levi_set = set(levi_pos)
    levi_simples = tuple(a for a in delta if a in levi_set)
    theta_u = scale(1 / pairing(zeta, alpha_u), zeta)

    datum = ParabolicRootDatum(
        case=case,
        ambient_dim=dim,
        simple_roots=delta,
        levi_simples=levi_simples,
        noncompact_simple=alpha_u,
        positive_roots=pos,
        levi_positive=levi_pos,
        nilradical_roots=nil,
        rho=rho,
        gamma=gamma,
        zeta=zeta,
        theta_u=theta_u,
    )
    _validate(datum)
    return datum


def _validate(d: ParabolicRootDatum) -> None:
    def need(cond: bool, msg: str) -> None:
        if not cond:
            raise InvariantError(f"{d.case.label}: {msg}")

    dim = d.ambient_dim
    for w in (d.rho, d.gamma, d.zeta, d.theta_u) + d.simple_roots + d.positive_roots:
        need(len(w) == dim, "weight of wrong dimension")

    pos_set = set(d.positive_roots)
    need(len(pos_set) == len(d.positive_roots), "duplicate positive roots")
    need(set(d.nilradical_roots) <= pos_set, "nilradical outside positive system")
    need(
        set(d.levi_positive) | set(d.nilradical_roots) == pos_set
        and not set(d.levi_positive) & set(d.nilradical_roots),
        "Levi/nilradical halves do not partition the positive roots",
    )
    need(all(a in pos_set for a in d.simple_roots), "simple root missing from positive system")
    need(d.noncompact_simple in set(d.simple_roots), "noncompact simple not simple")
    need(d.noncompact_simple in set(d.nilradical_roots), "noncompact simple not in nilradical")

    degenerate = (d.case.tag, d.case.n) in _D2_DEGENERATE
    if not degenerate:
        need(
            set(d.levi_simples) == set(d.simple_roots) - {d.noncompact_simple},
            "Levi simples are not the simple system minus the noncompact root",
        )

    two_rho = tuple(sum(col, Fraction(0)) for col in zip(*d.positive_roots))
    need(two_rho == scale(2, d.rho), "positive roots do not sum to twice rho")

    need(d.gamma in set(d.nilradical_roots), "gamma is not a nilradical root")
    if not degenerate:
        # gamma dominates every positive root via simple-root descents.
        seen = {d.gamma}
        frontier = [d.gamma]
        while frontier:
            beta = frontier.pop()
            for a in d.simple_roots:
                down = tuple(x - y for x, y in zip(beta, a))
                if down in pos_set and down not in seen:
                    seen.add(down)
                    frontier.append(down)
        need(seen == pos_set, "gamma is not the highest root")

    need(all(inner(d.zeta, a) == 0 for a in d.levi_positive), "zeta not orthogonal to the Levi")
    need(pairing(d.zeta, d.gamma) == 1, "zeta not normalized against gamma")
    need(
        all(pairing(d.zeta, b) > 0 for b in d.nilradical_roots),
        "zeta not positive on the nilradical",
    )

    need(pairing(d.theta_u, d.noncompact_simple) == 1, "theta_u misnormalized")
    need(
        all(inner(d.theta_u, a) == 0 for a in d.levi_positive),
        "theta_u not fixed by the Levi",
    )

    for i, b1 in enumerate(d.nilradical_roots):
        for b2 in d.nilradical_roots[i:]:
            need(
                tuple(x + y for x, y in zip(b1, b2)) not in pos_set,
                "nilradical is not abelian",
            )

    if d.case.tag in ("EIII", "EVII"):
        walls = [weight((0, 0, 0, 0, 0, 0, 1, 1))]
        if d.case.tag == "EIII":
            walls.append(weight((0, 0, 0, 0, 0, 1, -1, 0)))
        for w in walls:
            for v in (d.rho, d.gamma, d.zeta) + d.positive_roots:
                need(inner(v, w) == 0, "weight leaves the defining subspace")
