"""Generalized Cassini, d'Ocagne, Vajda and Catalan determinant identities
for n-step Fibonacci numbers, verified exactly at arbitrary parameters.

Each family builds its n x n matrix of sequence terms, evaluates the
determinant exactly, and compares it with the predicted closed form.
Nothing is rounded and nothing is assumed: ``verify_*`` returns the full
record, pass or fail, and ``convention_probe`` reports which seed
convention actually satisfies each family instead of taking either for
granted. Verification defaults to the classic convention, which is the one
the probe shows to hold across all four families.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_linalg import (
    DimensionError,
    IntMatrix,
    det_bareiss,
    select_columns,
)
from .nstep_seq import CLASSIC, PAPER_POWERS, Convention, term, terms_range
from .construction import extend_columns

__all__ = [
    "CASSINI",
    "CATALAN",
    "DOCAGNE",
    "GEN_DOCAGNE",
    "RATIO_INVARIANCE",
    "VAJDA",
    "RegularityError",
    "IdentityCase",
    "VerificationRecord",
    "case_to_dict",
    "cassini_matrix",
    "verify_cassini",
    "docagne_matrix",
    "verify_docagne",
    "vajda_matrix",
    "verify_vajda",
    "verify_catalan",
    "generalized_docagne",
    "ratio_invariance",
    "convention_probe",
]

CASSINI = "cassini"
CATALAN = "catalan"
DOCAGNE = "docagne"
GEN_DOCAGNE = "gen-docagne"
RATIO_INVARIANCE = "ratio-invariance"
VAJDA = "vajda"


class RegularityError(ValueError):
    """A matrix that must be nonsingular has determinant zero."""


@dataclass(frozen=True)
class IdentityCase:
    """An identity kind plus the parameters it actually uses."""

    kind: str
    n: int
    r: int
    convention: str
    s: int | None = None
    p: int | None = None
    q: int | None = None


@dataclass(frozen=True)
class VerificationRecord:
    """Exact left-hand side vs predicted right-hand side for one case."""

    case: IdentityCase
    lhs: int
    rhs: int
    passed: bool
    matrix_order: int


def case_to_dict(case: IdentityCase, trial: int | None = None) -> dict:
    """Case as a plain dict with a fixed key order (for reports)."""
    out: dict = {"kind": case.kind, "n": case.n, "r": case.r}
    if case.s is not None:
        out["s"] = case.s
    if case.p is not None:
        out["p"] = case.p
    if case.q is not None:
        out["q"] = case.q
    if trial is not None:
        out["trial"] = trial
    out["convention"] = case.convention
    return out


def _sign(exponent: int) -> int:
    return 1 if exponent % 2 == 0 else -1


def _check_positive(**params: int) -> None:
    for name, value in params.items():
        if value < 1:
            raise ValueError(f"parameter {name} must be >= 1, got {value}")


def _term_window(n: int, conv: Convention, lo: int, hi: int):
    """Index-addressable slice of the sequence, fetched in one pass."""
    values = terms_range(n, conv, lo, hi)
    return lambda k: values[k - lo]


def cassini_matrix(n: int, r: int, conv: Convention = CLASSIC) -> IntMatrix:
    """n x n matrix with entry (i, k) = term r+k-i+1; constant diagonals."""
    _check_positive(r=r)
    f = _term_window(n, conv, r - n + 2, r + n)
    return IntMatrix.from_rows(
        [[f(r + k - i + 1) for k in range(1, n + 1)] for i in range(1, n + 1)])


def verify_cassini(n: int, r: int, conv: Convention = CLASSIC) -> VerificationRecord:
    """Cassini: det = (-1)^((n-1)r)."""
    lhs = det_bareiss(cassini_matrix(n, r, conv))
    rhs = _sign((n - 1) * r)
    return VerificationRecord(
        IdentityCase(CASSINI, n, r, conv.name), lhs, rhs, lhs == rhs, n)


def docagne_matrix(n: int, r: int, s: int, conv: Convention = CLASSIC) -> IntMatrix:
    """Cassini matrix with its last column pushed s-1 indices ahead:
    entry (i, n) = term r+n+s-i. At s = 1 it is the Cassini matrix."""
    _check_positive(r=r, s=s)
    f = _term_window(n, conv, r - n + 2, r + n + s - 1)
    rows = []
    for i in range(1, n + 1):
        row = [f(r + k - i + 1) for k in range(1, n)]
        row.append(f(r + n + s - i))
        rows.append(row)
    return IntMatrix.from_rows(rows)


def verify_docagne(n: int, r: int, s: int, conv: Convention = CLASSIC) -> VerificationRecord:
    """d'Ocagne: det = (-1)^((n-1)r) * term(s)."""
    lhs = det_bareiss(docagne_matrix(n, r, s, conv))
    rhs = _sign((n - 1) * r) * term(n, conv, s)
    return VerificationRecord(
        IdentityCase(DOCAGNE, n, r, conv.name, s=s), lhs, rhs, lhs == rhs, n)


def vajda_matrix(n: int, r: int, p: int, q: int, conv: Convention = CLASSIC) -> IntMatrix:
    """Symmetric-layout matrix whose last column jumps by p and last row by q.

    For i < n: entry (i, k) = term r-n+i+k, entry (i, n) = term p+r+i-1.
    Row n:     entry (n, k) = term q+r+k-1, entry (n, n) = term p+q+r+n-2.
    """
    _check_positive(r=r, p=p, q=q)
    f = _term_window(n, conv, r - n + 2, p + q + r + n - 2)
    rows = []
    for i in range(1, n):
        row = [f(r - n + i + k) for k in range(1, n)]
        row.append(f(p + r + i - 1))
        rows.append(row)
    last = [f(q + r + k - 1) for k in range(1, n)]
    last.append(f(p + q + r + n - 2))
    rows.append(last)
    return IntMatrix.from_rows(rows)


def verify_vajda(n: int, r: int, p: int, q: int, conv: Convention = CLASSIC) -> VerificationRecord:
    """Vajda: det = (-1)^((n-1)r + floor(n/2)) * term(p) * term(q)."""
    lhs = det_bareiss(vajda_matrix(n, r, p, q, conv))
    rhs = _sign((n - 1) * r + n // 2) * term(n, conv, p) * term(n, conv, q)
    return VerificationRecord(
        IdentityCase(VAJDA, n, r, conv.name, p=p, q=q), lhs, rhs, lhs == rhs, n)


def verify_catalan(n: int, r: int, p: int, conv: Convention = CLASSIC) -> VerificationRecord:
    """Catalan is Vajda at q = p: det = signed square of term(p)."""
    base = verify_vajda(n, r, p, p, conv)
    return VerificationRecord(
        IdentityCase(CATALAN, n, r, conv.name, p=p, q=p),
        base.lhs, base.rhs, base.passed, base.matrix_order)


def _leading_minor_det(a: IntMatrix, r: int) -> int:
    """det of columns {1..n-1, n+r} of the r-step extension of ``a``."""
    n = a.rows
    kept = list(range(1, n)) + [n + r]
    return det_bareiss(select_columns(extend_columns(a, r), kept))


def generalized_docagne(a: IntMatrix, r: int) -> VerificationRecord:
    """Extension minor in columns {1..n-1, n+r} equals term(r) * det(a).

    The predicted factor uses the power seeding, matching the band-matrix
    determinants of ``construction.q_fib_det``. Holds for singular ``a``
    too (both sides zero).
    """
    if not a.is_square:
        raise DimensionError(
            f"generalized_docagne needs a square matrix, got {a.rows}x{a.cols}")
    _check_positive(r=r)
    n = a.rows
    lhs = _leading_minor_det(a, r)
    rhs = term(n, PAPER_POWERS, r) * det_bareiss(a)
    return VerificationRecord(
        IdentityCase(GEN_DOCAGNE, n, r, PAPER_POWERS.name), lhs, rhs, lhs == rhs, n)


def ratio_invariance(a: IntMatrix, b: IntMatrix, r: int) -> VerificationRecord:
    """The ratio minor/det is the same for any two nonsingular matrices.

    Checked cross-multiplied so everything stays an integer:
    minor(a) * det(b) == minor(b) * det(a).
    """
    if not a.is_square or not b.is_square:
        raise DimensionError("ratio_invariance needs square matrices")
    if a.rows != b.rows:
        raise DimensionError(
            f"matrices must have equal order, got {a.rows} and {b.rows}")
    _check_positive(r=r)
    n = a.rows
    det_a = det_bareiss(a)
    det_b = det_bareiss(b)
    if det_a == 0 or det_b == 0:
        raise RegularityError("ratio_invariance needs nonsingular matrices")
    lhs = _leading_minor_det(a, r) * det_b
    rhs = _leading_minor_det(b, r) * det_a
    return VerificationRecord(
        IdentityCase(RATIO_INVARIANCE, n, r, PAPER_POWERS.name), lhs, rhs, lhs == rhs, n)


def convention_probe(
    n_values=(2, 3, 4),
    r_values=(1, 2, 3, 4, 5, 6),
    s_values=(1, 2, 3, 4),
    p_values=(1, 2, 3),
    q_values=(1, 2, 3),
    conventions=(CLASSIC, PAPER_POWERS),
) -> dict:
    """Pass grid of the four sequence-matrix families under each convention.

    Nothing is asserted here: each family is swept under every convention
    and the counts plus the failing cases are reported, so the artifact
    documents which seeding satisfies which family. ``resolution`` lists,
    per family, the conventions with a clean sweep.
    """
    sweeps = {
        CASSINI: lambda conv: [
            verify_cassini(n, r, conv) for n in n_values for r in r_values],
        CATALAN: lambda conv: [
            verify_catalan(n, r, p, conv)
            for n in n_values for r in r_values for p in p_values],
        DOCAGNE: lambda conv: [
            verify_docagne(n, r, s, conv)
            for n in n_values for r in r_values for s in s_values],
        VAJDA: lambda conv: [
            verify_vajda(n, r, p, q, conv)
            for n in n_values for r in r_values
            for p in p_values for q in q_values],
    }
    families: dict = {}
    resolution: dict = {}
    for family in sorted(sweeps):
        per_conv: dict = {}
        for conv in conventions:
            records = sweeps[family](conv)
            failed = [rec for rec in records if not rec.passed]
            per_conv[conv.name] = {
                "total": len(records),
                "passed": len(records) - len(failed),
                "failed": len(failed),
                "failures": [case_to_dict(rec.case) for rec in failed],
            }
        families[family] = per_conv
        resolution[family] = [
            conv.name for conv in conventions
            if per_conv[conv.name]["failed"] == 0]
    return {
        "params": {
            "n": list(n_values),
            "r": list(r_values),
            "s": list(s_values),
            "p": list(p_values),
            "q": list(q_values),
            "conventions": [conv.name for conv in conventions],
        },
        "families": families,
        "resolution": resolution,
    }
