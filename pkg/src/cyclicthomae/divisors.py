"""Residue profiles, theta vanishing orders and admissible divisor vectors.

A vector beta in {0..N-1}^m with sum beta_i = r/2 mod N carries a profile
tau_0..tau_{N-1} defined by sum_i reduce(beta_i + k R_i) = r/2 - N tau_k.
The theta function vanishes to order sum_k max(0, tau_k) at the associated
point of the Jacobian, so the all-zero profiles are exactly the
non-vanishing divisors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import CurveSpec, CurveError, reduce_mod, validate_curve

# refuse exhaustive enumeration beyond ~10^9 candidates
_ENUM_LOG2_LIMIT = 30.0


class DivisorError(ValueError):
    """Invalid divisor vector (range or congruence violation)."""


@dataclass(frozen=True)
class BetaVector:
    beta: tuple[int, ...]
    tau: tuple[int, ...]
    order: int


def tau_profile(spec: CurveSpec, beta) -> BetaVector:
    """Profile tau_k = (r/2 - sum_i reduce(beta_i + k R_i)) / N and its order.

    Raises DivisorError unless each beta_i lies in 0..N-1 and
    sum beta_i = r/2 mod N (which makes every tau_k an integer).
    """
    N = spec.N
    beta = tuple(int(b) for b in beta)
    if len(beta) != spec.m:
        raise DivisorError(f"beta has length {len(beta)}, expected {spec.m}")
    for b in beta:
        if not 0 <= b <= N - 1:
            raise DivisorError(f"beta entry {b} outside 0..{N - 1}")
    half_r = spec.r_total // 2
    if (sum(beta) - half_r) % N != 0:
        raise DivisorError(
            f"sum(beta)={sum(beta)} != r/2={half_r} mod {N}: no integral profile"
        )
    tau = []
    for k in range(N):
        s = sum(reduce_mod(b + k * r_i, N) for b, r_i in zip(beta, spec.R))
        if (half_r - s) % N != 0:
            raise DivisorError(f"profile entry k={k} not integral")
        tau.append((half_r - s) // N)
    order = sum(max(0, t) for t in tau)
    return BetaVector(beta=beta, tau=tuple(tau), order=order)


def enumerate_admissible(spec: CurveSpec) -> list[BetaVector]:
    """All beta in {0..N-1}^m with identically zero profile, in lex order.

    Exhaustive search with pruning on the running residue sum; refuses when
    the search space N^m exceeds 2**30.
    """
    import math

    N, m = spec.N, spec.m
    validate_curve(spec)
    if m * math.log2(N) > _ENUM_LOG2_LIMIT:
        raise DivisorError(f"search space N^m = {N}^{m} too large to enumerate")
    half_r = spec.r_total // 2
    R = spec.R

    # tau_k = 0 for all k <=> for each k the residue sum equals r/2
    out: list[BetaVector] = []
    targets = [half_r] * N

    def rec(i: int, sums: list[int]):
        if i == m:
            if all(s == t for s, t in zip(sums, targets)):
                out.append(tau_profile(spec, tuple(prefix)))
            return
        remaining = m - i - 1
        for b in range(N):
            new = [s + reduce_mod(b + k * R[i], N) for k, s in enumerate(sums)]
            # each later entry adds between 0 and N-1 to every sum
            if any(s > t for s, t in zip(new, targets)):
                continue
            if any(s + remaining * (N - 1) < t for s, t in zip(new, targets)):
                continue
            prefix.append(b)
            rec(i + 1, new)
            prefix.pop()

    prefix: list[int] = []
    rec(0, [0] * N)
    out.sort(key=lambda bv: bv.beta)
    return out


def nonsingular_rule(spec: CurveSpec, beta) -> bool:
    """Counting criterion for covers with all R_i = 1 and N | m.

    The profile vanishes iff every residue value 0..N-1 is taken by beta
    exactly m/N times.  Only valid in the non-singular case.
    """
    N = spec.N
    if any(r_i != 1 for r_i in spec.R):
        raise DivisorError("counting rule requires all exponents R_i = 1")
    if spec.m % N != 0:
        raise DivisorError("counting rule requires N | m")
    beta = tuple(int(b) for b in beta)
    k = spec.m // N
    return all(sum(1 for b in beta if b == v) == k for v in range(N))


def equivalence_shift(spec: CurveSpec, beta, k: int):
    """Shifted representative E_i = reduce(beta_i + k R_i) and cofactor exponents.

    h_i = (beta_i + k R_i - E_i) / N are the integer exponents for which
    y^{-k} prod (x - lam_i)^{h_i} has divisor sum (beta_i - E_i) P_i.
    Returns (E, h).
    """
    N = spec.N
    if not 0 <= k <= N - 1:
        raise DivisorError(f"shift k={k} outside 0..{N - 1}")
    beta = tuple(int(b) for b in beta)
    E = tuple(reduce_mod(b + k * r_i, N) for b, r_i in zip(beta, spec.R))
    h = tuple((b + k * r_i - e) // N for b, r_i, e in zip(beta, spec.R, E))
    return E, h


def negate(spec: CurveSpec, beta) -> tuple[int, ...]:
    """Dual vector beta'_i = N - 1 - beta_i (negation of the divisor class)."""
    return tuple(spec.N - 1 - int(b) for b in beta)
