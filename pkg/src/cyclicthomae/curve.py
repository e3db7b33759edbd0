"""Cyclic covers y^N = prod (x - lam_i)^{R_i} of the sphere: exact combinatorial data.

Everything in this module is exact integer / rational arithmetic.  Floating
point enters only in the analytic modules (surface, periods, theta, ...).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class CurveError(ValueError):
    """Invalid curve data (non-prime cover order, bad exponents, ...)."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def reduce_mod(j: int, n: int) -> int:
    """Representative of j mod n in {0, ..., n-1}.

    The residue-class operator used throughout the divisor combinatorics;
    0 maps to 0, not to n.
    """
    if n < 2:
        raise CurveError("modulus must be >= 2")
    return j % n


@dataclass(frozen=True)
class CurveSpec:
    """The cover y^N = prod_i (x - lam_i)^{R_i} with a marked base point.

    N is the (prime) order of the covering group, R the ramification
    exponents with gcd(R_i, N) = 1, lam the finite pairwise-distinct branch
    points and base_x a regular base point on the x-line.
    """

    N: int
    R: tuple[int, ...]
    lam: tuple[complex, ...]
    base_x: complex

    def __post_init__(self):
        object.__setattr__(self, "R", tuple(int(r) for r in self.R))
        object.__setattr__(self, "lam", tuple(complex(z) for z in self.lam))
        object.__setattr__(self, "base_x", complex(self.base_x))

    @property
    def m(self) -> int:
        return len(self.R)

    @property
    def r_total(self) -> int:
        """Total ramification m(N-1)."""
        return self.m * (self.N - 1)

    @property
    def genus(self) -> int:
        return (self.N - 1) * (self.m - 2) // 2


@dataclass(frozen=True)
class RamificationData:
    """Derived counts: total ramification r, genus g, d(l) table, t_j counts.

    d(l) is the number of holomorphic differentials z^{j-1} dz / s_l(z) in
    the character-l eigenspace; sum_l d(l) = g.
    """

    r: int
    g: int
    d: dict[int, int]
    t: dict[int, int]


def validate_curve(spec: CurveSpec) -> RamificationData:
    """Check all curve invariants and return the ramification table.

    Rejects non-prime N, exponents outside 1..N-1, sum R_i != 0 mod N,
    repeated or infinite branch points, and a base point on a branch point.
    """
    N, R, lam = spec.N, spec.R, spec.lam
    m = len(R)
    if not _is_prime(N):
        raise CurveError(f"cover order N={N} must be prime")
    if m < 3:
        raise CurveError("need at least 3 branch points")
    if len(lam) != m:
        raise CurveError(f"got {m} exponents but {len(lam)} branch points")
    for r_i in R:
        if not 1 <= r_i <= N - 1:
            raise CurveError(f"exponent {r_i} outside 1..{N - 1}")
        # automatic for prime N, asserted anyway
        if _gcd(r_i, N) != 1:
            raise CurveError(f"gcd(R_i={r_i}, N={N}) != 1")
    if sum(R) % N != 0:
        raise CurveError(f"sum of exponents {sum(R)} != 0 mod {N}")
    for z in lam:
        if not (abs(z.real) < float("inf") and abs(z.imag) < float("inf")):
            raise CurveError("branch points must be finite")
    for i in range(m):
        for j in range(i + 1, m):
            if lam[i] == lam[j]:
                raise CurveError(f"branch points {i} and {j} coincide")
    if spec.base_x in lam:
        raise CurveError("base point coincides with a branch point")

    r = m * (N - 1)
    if r % 2 != 0:
        raise CurveError(f"total ramification r={r} is odd")
    g = (N - 1) * (m - 2) // 2

    d = {}
    for l in range(1, N):
        s = sum(reduce_mod(l * R_i, N) for R_i in R)
        if s % N != 0:
            raise CurveError(f"residue sum for l={l} not divisible by N")
        d[l] = s // N - 1
        if d[l] < 0:
            raise CurveError(f"negative differential count d({l})")
    if sum(d.values()) != g:
        raise CurveError(f"sum d(l) = {sum(d.values())} != genus {g}")

    t = {j: sum(1 for R_i in R if R_i == j) for j in range(1, N)}
    return RamificationData(r=r, g=g, d=d, t=t)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def frac_part(p: int, q: int) -> Fraction:
    """Fractional part {p/q} as an exact rational."""
    return Fraction(reduce_mod(p, q), q)


def gamma_exponent(spec: CurveSpec, i: int, j: int) -> Fraction:
    """gamma_ij = sum_{w=0}^{N-1} {w R_i / N} {w R_j / N}, exact.

    Symmetric in (i, j); indices are 0-based.
    """
    N = spec.N
    return sum(
        (frac_part(w * spec.R[i], N) * frac_part(w * spec.R[j], N) for w in range(N)),
        Fraction(0),
    )


def q_exponent(spec: CurveSpec, beta: tuple[int, ...] | list[int], i: int, j: int) -> Fraction:
    """q(beta_i, beta_j) = sum_k {(beta_i + k R_i)/N} {(beta_j + k R_j)/N}, exact."""
    N = spec.N
    return sum(
        (
            frac_part(beta[i] + k * spec.R[i], N) * frac_part(beta[j] + k * spec.R[j], N)
            for k in range(N)
        ),
        Fraction(0),
    )


def q_centered(spec: CurveSpec, beta, i: int, j: int) -> Fraction:
    """Centered pair exponent sum_k a_ik a_jk with a_ik = {(beta_i+kR_i)/N} - (N-1)/2N.

    Equals q_exponent - (N-1)^2 / 4N.  This is the coefficient that actually
    appears in the kernel expansion and in the branch-point product: the
    half-form weights are the residues shifted by the mean (N-1)/2N, and the
    uniform shift does not drop out of the diagonal pairing.
    """
    N = spec.N
    return q_exponent(spec, beta, i, j) - Fraction((N - 1) ** 2, 4 * N)


def gamma_matrix(spec: CurveSpec) -> list[list[Fraction]]:
    m = spec.m
    return [[gamma_exponent(spec, i, j) for j in range(m)] for i in range(m)]


def q_matrix(spec: CurveSpec, beta) -> list[list[Fraction]]:
    m = spec.m
    return [[q_exponent(spec, beta, i, j) for j in range(m)] for i in range(m)]
