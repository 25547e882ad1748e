"""Character-graded corepresentation bookkeeping.

A corepresentation of the circle is a finite multiset of integer weights.
Restricting the fundamental corepresentation of the rank-``m`` quantum
special unitary group along the diagonal circle embedding (with the
compensating power on the last slot) gives ``m - 1`` copies of weight
``-1`` plus a single weight ``m - 1``.  In this diagonal situation the
cotensor product with the sphere algebra reduces to weight bookkeeping:
a weight-``lam`` vector contributes the spectral-subspace line bundle of
degree ``lam``, so the class of the associated bundle is a sum of line
classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import Counter

from .kclasses import KClass, line_class


@dataclass(frozen=True)
class WeightVector:
    """A nonempty multiset of circle weights, stored sorted."""

    weights: tuple[int, ...]

    def __init__(self, weights):
        ws = tuple(sorted(int(w) for w in weights))
        if not ws:
            raise ValueError("weight vector must be nonempty")
        object.__setattr__(self, "weights", ws)

    def total(self) -> int:
        return sum(self.weights)

    def counts(self) -> Counter:
        return Counter(self.weights)

    def union(self, other: "WeightVector") -> "WeightVector":
        """Multiset union (direct sum of corepresentations)."""
        return WeightVector(self.weights + other.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)


def fundamental_weights(m: int) -> WeightVector:
    """Circle weights of the restricted rank-``m`` fundamental corepresentation.

    The diagonal entries map to ``u^-1`` except the last, which maps to
    ``u^(m-1)`` so that the quantum determinant lands on ``1``.
    """
    if m < 2:
        raise ValueError(f"rank must be at least 2, got {m}")
    return WeightVector((-1,) * (m - 1) + (m - 1,))


def satisfies_determinant_condition(w: WeightVector) -> bool:
    """Necessary condition for a diagonal Hopf surjection to be well defined.

    A diagonal image sends the quantum determinant to ``u`` raised to the
    total weight, which must be the unit, so the weights must sum to zero.
    """
    return w.total() == 0


def associated_class(n: int, w: WeightVector) -> KClass:
    """K-class of the vector bundle associated to a weight multiset.

    Weightwise cotensor: each weight ``lam`` contributes the line class of
    the degree-``lam`` spectral subspace.
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    total = KClass.zero(n)
    for lam, mult in w.counts().items():
        total = total + mult * line_class(n, lam)
    return total


def fundamental_decomposition(n: int, m: int) -> WeightVector:
    """Line-bundle labels of the associated fundamental bundle.

    The rank-``m`` fundamental bundle over the dimension-``n`` space splits
    as ``m - 1`` copies of the tautological line bundle (label ``-1``) plus
    the degree-``m-1`` bundle.  Valid for ``2 <= m <= n``.
    """
    if not 2 <= m <= n:
        raise ValueError(f"rank must satisfy 2 <= m <= {n}, got {m}")
    return fundamental_weights(m)
