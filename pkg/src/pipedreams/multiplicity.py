"""Multiplicity of a Schubert variety at the identity point, through the
pipe dream count of the complementary permutation, together with the
q-Catalan specialization report for the zigzag family."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .catalan import catalan, q_catalan
from .perm import Permutation, local_equations_condition, longest_element, zigzag
from .poly import QPolynomial, schubert_polynomial


class ConditionNotSatisfiedError(ValueError):
    """The degree formula is only justified for permutations w where every
    (i, j) with i + j > m has (w0 w)^{-1}(i) <= j or (w0 w)(j) <= i."""


def schubert_multiplicity_at_identity(w: Permutation) -> int:
    """Multiplicity of the Schubert variety of w at the identity flag.

    For permutations in the guarded class the local equations at that point
    are exactly the matrix Schubert equations, whose degree is the value of
    the Schubert polynomial of w0*w at all ones.  Permutations outside the
    class are refused rather than approximated.
    """
    if not local_equations_condition(w):
        raise ConditionNotSatisfiedError(
            f"permutation {w} fails the local-equations condition "
            "((w0 w)^{-1}(i) <= j or (w0 w)(j) <= i for all i + j > m), "
            "so the degree formula does not apply"
        )
    return schubert_polynomial(longest_element(w.size) * w).evaluate_all_ones()


@dataclass(frozen=True)
class SpecializationReport:
    """Outcome of checking the principal specialization of the zigzag
    Schubert polynomial against q^binom(n,3) times the q-Catalan polynomial.

    ``recurrence_ok`` additionally confirms the turn-row recurrence: the
    specialization decomposes as a sum over the turn row k of
    q^e(k) F_{k-1} F_{n-k} with
    e(k) = (k-1) C(n-k, 2) + (n-k+1) C(k-1, 2) + C(n, 2) - C(k, 2),
    and the right side matches its own defining recurrence.
    """

    n: int
    lhs: QPolynomial
    rhs: QPolynomial
    equal: bool
    count: int
    recurrence_ok: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "equal": self.equal,
            "count": str(self.count),
        }


@lru_cache(maxsize=None)
def _zigzag_specialization(k: int) -> QPolynomial:
    return schubert_polynomial(zigzag(k)).principal_specialization()


def verify_catalan_specialization(n: int) -> SpecializationReport:
    """Build the specialization report for the zigzag of n."""
    if n < 1:
        raise ValueError("n must be positive")
    lhs = _zigzag_specialization(n)
    rhs = QPolynomial.q_power(comb(n, 3)) * q_catalan(n)

    recurrence = QPolynomial.zero()
    for k in range(1, n + 1):
        e = (
            (k - 1) * comb(n - k, 2)
            + (n - k + 1) * comb(k - 1, 2)
            + comb(n, 2)
            - comb(k, 2)
        )
        recurrence = recurrence + (
            QPolynomial.q_power(e)
            * _zigzag_specialization(k - 1)
            * _zigzag_specialization(n - k)
        )
    restated = QPolynomial.zero()
    for k in range(n):
        restated = restated + (
            QPolynomial.q_power(comb(n, 3) + k)
            * q_catalan(n - k - 1)
            * q_catalan(k)
        )

    return SpecializationReport(
        n=n,
        lhs=lhs,
        rhs=rhs,
        equal=lhs == rhs,
        count=lhs.at_one(),
        recurrence_ok=(recurrence == lhs and restated == rhs),
    )
