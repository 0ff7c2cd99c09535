"""End-to-end verification checks behind the command line ``verify``.

Each check mirrors one acceptance property of the library: all of them are
exact (no tolerances), and each returns a CheckResult carrying a pass flag
and a short human-readable detail line.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations as all_words
from math import comb

from .bijections import (
    bracketing_of,
    dyck_to_partition,
    partition_of,
    partition_to_dyck,
    rcgraph_of,
    reverse_bracketing,
)
from .catalan import (
    catalan,
    enumerate_staircase_partitions,
    fits_staircase,
    q_catalan,
    q_catalan_via_partitions,
    staircase,
)
from .eg import (
    eg_insert,
    eg_partition_of,
    eg_word,
    evacuate,
    q_label_row_check,
    reading_direction_report,
)
from .multiplicity import schubert_multiplicity_at_identity, verify_catalan_specialization
from .perm import (
    Permutation,
    dominant_singular,
    local_equations_condition,
    make_perm,
    zigzag,
)
from .poly import schubert_polynomial, schubert_via_divided_differences
from .rcgraph import enumerate_rcgraphs, split

SUITES = ("prop1", "bijections", "eg", "transpose", "all")


@dataclass
class CheckResult:
    ident: str
    name: str
    suite: str
    passed: bool
    detail: str


def _result(ident, name, suite, failures, detail_ok):
    if failures:
        return CheckResult(ident, name, suite, False, "; ".join(failures))
    return CheckResult(ident, name, suite, True, detail_ok)


def check_figure_family() -> CheckResult:
    """The five fillings of 1,4,3,2 and their monomials."""
    graphs = enumerate_rcgraphs(make_perm((1, 4, 3, 2)))
    expected = Counter({(0, 2, 1): 1, (1, 1, 1): 1, (2, 0, 1): 1, (1, 2): 1, (2, 1): 1})
    failures = []
    if len(graphs) != 5:
        failures.append(f"expected 5 fillings, found {len(graphs)}")
    got = Counter(g.monomial() for g in graphs)
    if got != expected:
        failures.append(f"monomial multiset {dict(got)} != {dict(expected)}")
    return _result("1", "five fillings of 1,4,3,2", "prop1", failures,
                   "5 fillings with the expected monomials")


def check_specialization(max_n: int) -> CheckResult:
    """Principal specialization equals q^binom(n,3) C_n(q), with the
    turn-row recurrence confirmed along the way."""
    failures = []
    for n in range(1, max_n + 1):
        report = verify_catalan_specialization(n)
        if not report.equal:
            failures.append(f"n={n}: specialization mismatch")
        if not report.recurrence_ok:
            failures.append(f"n={n}: recurrence restatement mismatch")
    return _result("2", "q-Catalan specialization identity", "prop1", failures,
                   f"exact for n=1..{max_n}")


def check_counting(max_n: int) -> CheckResult:
    """The zigzag of n has exactly catalan(n) fillings."""
    failures = []
    counts = []
    for n in range(1, max_n + 1):
        got = len(enumerate_rcgraphs(zigzag(n)))
        counts.append(got)
        if got != catalan(n):
            failures.append(f"n={n}: {got} fillings, expected {catalan(n)}")
    return _result("3", "Catalan counting of zigzag fillings", "prop1", failures,
                   f"counts {counts} for n=1..{max_n}")


def check_oracle(zig_max: int = 5) -> CheckResult:
    """Pipe dream sum equals the divided-difference construction."""
    failures = []
    for word in all_words(range(1, 5)):
        w = make_perm(word)
        if schubert_polynomial(w) != schubert_via_divided_differences(w):
            failures.append(f"S_4 mismatch at {w}")
    for n in range(1, zig_max + 1):
        w = zigzag(n)
        if schubert_polynomial(w) != schubert_via_divided_differences(w):
            failures.append(f"zigzag mismatch at n={n}")
    return _result("4", "divided-difference oracle equivalence", "prop1", failures,
                   f"all of S_4 and zigzag n<={zig_max}")


def check_partition_bijection(max_n: int) -> CheckResult:
    """partition_of is a bijection onto the staircase partitions, with
    rcgraph_of as inverse and the weight law binom(n+1,3) - |p|."""
    failures = []
    for n in range(1, max_n + 1):
        graphs = enumerate_rcgraphs(zigzag(n))
        seen = {}
        for d in graphs:
            p = partition_of(d)
            if not fits_staircase(p, n):
                failures.append(f"n={n}: {p} outside the staircase")
            if p in seen:
                failures.append(f"n={n}: {p} hit twice")
            seen[p] = d
            if d.weight() != comb(n + 1, 3) - p.size:
                failures.append(f"n={n}: weight law fails for {p}")
            if rcgraph_of(p, n) != d:
                failures.append(f"n={n}: rcgraph_of does not invert at {p}")
        targets = enumerate_staircase_partitions(n)
        if sorted(seen, key=lambda q: q.parts) != targets:
            failures.append(f"n={n}: image is not all of the staircase set")
        for p in targets:
            if partition_of(rcgraph_of(p, n)) != p:
                failures.append(f"n={n}: round trip fails at {p}")
    return _result("5", "elementary partition bijection", "bijections", failures,
                   f"bijective with inverse and weight law for n<={max_n}")


def check_dyck_transport(max_n: int) -> CheckResult:
    """Dyck path coding round-trips and carries the area statistic."""
    failures = []
    for n in range(1, max_n + 1):
        for p in enumerate_staircase_partitions(n):
            path = partition_to_dyck(p, n)
            if dyck_to_partition(path) != p:
                failures.append(f"n={n}: path round trip fails at {p}")
            area = 0
            x = y = 0
            for step in path.steps:
                if step == "U":
                    y += 1
                else:
                    area += y - x - 1
                    x += 1
            if area != comb(n, 2) - p.size:
                failures.append(f"n={n}: area transport fails at {p}")
    return _result("5d", "Dyck path coding", "bijections", failures,
                   f"round trips and area transport for n<={max_n}")


def check_eg(max_n: int, evac_max: int = 5) -> CheckResult:
    """Insertion-tableau constancy, recording-label rows, agreement with the
    elementary bijection, and the evacuation round trip."""
    failures = []
    for n in range(1, max_n + 1):
        graphs = enumerate_rcgraphs(zigzag(n))
        p_seen = set()
        q_seen = set()
        for d in graphs:
            p, q = eg_insert(eg_word(d))
            p_seen.add(p.rows)
            q_seen.add(q.rows)
            if not q_label_row_check(q):
                failures.append(f"n={n}: label-row property fails")
            if eg_partition_of(d) != partition_of(d):
                failures.append(f"n={n}: insertion and elementary bijections differ")
            if n <= evac_max and evacuate(q, n) != eg_word(d):
                failures.append(f"n={n}: evacuation does not invert insertion")
        if len(p_seen) != 1:
            failures.append(f"n={n}: insertion tableau is not constant")
        else:
            shape = tuple(len(r) for r in next(iter(p_seen)))
            if shape != staircase(n).parts:
                failures.append(f"n={n}: insertion tableau shape {shape}")
        if len(q_seen) != len(graphs):
            failures.append(f"n={n}: recording tableaux are not distinct")
    # n = 3 is the smallest family where the two scans disagree
    report = reading_direction_report(3)
    if report["usable"] != ["right-to-left"]:
        failures.append(f"reading-direction diagnostic: usable={report['usable']}")
    return _result("6", "Edelman-Greene correspondence", "eg", failures,
                   f"constant insertion tableau and round trips for n<={max_n}; "
                   "right-to-left is the single usable reading direction")


def check_transpose(max_n: int) -> CheckResult:
    """Transposing a filling reverses its bracketing."""
    failures = []
    for n in range(1, max_n + 1):
        for d in enumerate_rcgraphs(zigzag(n)):
            b = bracketing_of(d)
            if len(b.pairs) != n:
                failures.append(f"n={n}: bracketing has {len(b.pairs)} pairs")
            if str(bracketing_of(d.transpose())) != str(reverse_bracketing(b)):
                failures.append(f"n={n}: transpose is not string reversal")
    return _result("7", "transposition reverses bracketings", "transpose", failures,
                   f"checked every filling for n<={max_n}")


def check_split(max_n: int) -> CheckResult:
    """The turn-row decomposition satisfies the exact weight identity."""
    failures = []
    for n in range(1, max_n + 1):
        for d in enumerate_rcgraphs(zigzag(n)):
            k, south, north = split(d)
            expected = (
                north.weight()
                + (k - 1) * comb(n - k, 2)
                + south.weight()
                + (n + 1 - k) * comb(k - 1, 2)
                + comb(n, 2)
                - comb(k, 2)
            )
            if d.weight() != expected:
                failures.append(f"n={n}: weight identity fails at k={k}")
    return _result("8", "split weight identity", "prop1", failures,
                   f"exact for every filling with n<={max_n}")


def check_multiplicity(max_n: int) -> CheckResult:
    """Multiplicity of the singular family equals the Catalan numbers."""
    failures = []
    for n in range(1, max_n + 1):
        w = dominant_singular(n)
        if not local_equations_condition(w):
            failures.append(f"n={n}: local-equations condition fails")
        if schubert_multiplicity_at_identity(w) != catalan(n):
            failures.append(f"n={n}: multiplicity is not catalan({n})")
    return _result("9", "Catalan multiplicity", "prop1", failures,
                   f"equals catalan(n) for n<={max_n}")


def check_q_catalan(cross_max: int = 10, one_max: int = 12) -> CheckResult:
    """Recurrence and partition-sum routes agree; value at q=1 is Catalan."""
    failures = []
    for n in range(cross_max + 1):
        if q_catalan(n) != q_catalan_via_partitions(n):
            failures.append(f"n={n}: the two q-Catalan routes differ")
    for n in range(one_max + 1):
        if q_catalan(n).at_one() != catalan(n):
            failures.append(f"n={n}: value at q=1 differs from catalan(n)")
    return _result("10", "q-Catalan cross-method", "prop1", failures,
                   f"routes agree for n<={cross_max}, q=1 values for n<={one_max}")


def run_checks(suite: str = "all", max_n: int = 6) -> list[CheckResult]:
    """Run the requested suite.  Family checks run up to max_n; the
    q-Catalan bounds never drop below their stated 10 and 12."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    results = [
        check_figure_family(),
        check_specialization(max_n),
        check_counting(max_n),
        check_oracle(min(max_n, 5)),
        check_partition_bijection(max_n),
        check_dyck_transport(max_n),
        check_eg(max_n, evac_max=min(max_n, 5)),
        check_transpose(max_n),
        check_split(max_n),
        check_multiplicity(max_n),
        check_q_catalan(max(10, max_n), max(12, max_n)),
    ]
    if suite != "all":
        results = [r for r in results if r.suite == suite]
    return results
