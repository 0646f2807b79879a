"""Highest weights for type A: partitions, triples, and the Kostka-to-LR reindexing.

A weight is a weakly decreasing tuple of nonnegative integers.  A triple
(lambda, mu, nu) at rank r is stored with exactly r + 1 parts each; the hive
triangle built from it has side r, so every weight may use at most r nonzero
parts.  Zero padding never changes any coefficient computed downstream.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import WeightError

Weight = tuple[int, ...]


def validate_weight(parts) -> Weight:
    """Check weak decrease and nonnegativity; return a normalized tuple."""
    w = tuple(int(x) for x in parts)
    for x in w:
        if x < 0:
            raise WeightError(f"negative part in weight {w}")
    for a, b in zip(w, w[1:]):
        if a < b:
            raise WeightError(f"weight {w} is not weakly decreasing")
    return w


def parse_weight(text: str) -> Weight:
    """Parse a comma-separated weight such as '9,7,3,0,0'."""
    items = [t.strip() for t in text.split(",") if t.strip() != ""]
    if not items:
        raise WeightError(f"empty weight {text!r}")
    try:
        parts = [int(t) for t in items]
    except ValueError as exc:
        raise WeightError(f"cannot parse weight {text!r}") from exc
    return validate_weight(parts)


def format_weight(w) -> str:
    return ",".join(str(x) for x in w)


def weight_size(w) -> int:
    return sum(w)


def zero_pad(w, length: int) -> Weight:
    w = tuple(w)
    if len(w) > length:
        if any(x != 0 for x in w[length:]):
            raise WeightError(f"weight {w} has more than {length} nonzero parts")
        return w[:length]
    return w + (0,) * (length - len(w))


def nonzero_length(w) -> int:
    n = len(w)
    while n > 0 and w[n - 1] == 0:
        n -= 1
    return n


def dilate(w, n: int) -> Weight:
    if n < 0:
        raise WeightError(f"dilation factor {n} is negative")
    return tuple(n * x for x in w)


def partial_sums(w) -> tuple[int, ...]:
    """Prefix sums (w1, w1+w2, ...), same length as w."""
    out = []
    acc = 0
    for x in w:
        acc += x
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class WeightTriple:
    """Input triple for a rank-r hive: each weight stored with r + 1 parts.

    The last stored part of each weight must be zero; a weight with r + 1
    nonzero parts needs a rank-(r+1) triple instead (pad and re-declare).
    """

    lam: Weight
    mu: Weight
    nu: Weight
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise WeightError(f"rank {self.rank} must be >= 1")
        for name, w in (("lambda", self.lam), ("mu", self.mu), ("nu", self.nu)):
            validate_weight(w)
            if len(w) != self.rank + 1:
                raise WeightError(
                    f"{name} = {w} has {len(w)} parts, expected rank + 1 = {self.rank + 1}"
                )
            if w[-1] != 0:
                raise WeightError(
                    f"{name} = {w} uses {self.rank + 1} nonzero parts; rank {self.rank} "
                    f"admits at most {self.rank}"
                )

    @property
    def sizes(self) -> tuple[int, int, int]:
        return (weight_size(self.lam), weight_size(self.mu), weight_size(self.nu))

    def size_consistent(self) -> bool:
        a, b, c = self.sizes
        return c == a + b


def make_triple(lam, mu, nu, rank: int | None = None) -> WeightTriple:
    """Build a WeightTriple, inferring rank from the longest listed weight."""
    lam, mu, nu = validate_weight(lam), validate_weight(mu), validate_weight(nu)
    if rank is None:
        rank = max(len(lam), len(mu), len(nu), 1)
    return WeightTriple(
        zero_pad(lam, rank + 1), zero_pad(mu, rank + 1), zero_pad(nu, rank + 1), rank
    )


def dilate_triple(t: WeightTriple, n: int) -> WeightTriple:
    return WeightTriple(dilate(t.lam, n), dilate(t.mu, n), dilate(t.nu, n), t.rank)


def kostka_to_lr(lam, mu) -> tuple[Weight, Weight]:
    """Rewrite the Kostka number K_{lam,mu} as an LR coefficient c_{sigma,lam}^tau.

    mu is a content vector (any nonnegative integers, order significant);
    tau_i = mu_i + mu_{i+1} + ... and sigma_i = mu_{i+1} + ... are the suffix
    sums, so tau - sigma = mu and both are partitions.  Requires |lam| = |mu|.
    """
    lam = validate_weight(lam)
    mu = tuple(int(x) for x in mu)
    if any(x < 0 for x in mu):
        raise WeightError(f"content {mu} has a negative part")
    if weight_size(lam) != weight_size(mu):
        raise WeightError(
            f"|lambda| = {weight_size(lam)} differs from |mu| = {weight_size(mu)}"
        )
    n = max(len(lam), len(mu), 1)
    mu = mu + (0,) * (n - len(mu))
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + mu[i]
    tau = tuple(suffix[:n])
    sigma = tuple(suffix[1:])
    return sigma, tau
