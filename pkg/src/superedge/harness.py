"""Theorem verification: per-graph verdicts, sufficiency scans and counterexample search.

A theorem here is "every connected graph free of these patterns, other than
the listed exceptions, satisfies this conclusion". Scans classify every graph
from a source and report the violations; reports never depend on the number
of worker processes.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Iterable, Iterator, Literal, Optional

from .connectivity import (
    CutWitness,
    edge_connectivity,
    is_super_edge_connected,
    vertex_connectivity,
)
from .enumeration import EnumSpec, connected_classes, enumerate_labeled, labeled_count
from .families import ExceptionList, is_exception, make, registry_instances
from .graph import Graph, is_connected, path
from .graph6 import encode_graph6
from .patterns import (
    PairSpec,
    Pattern,
    PatternError,
    induced_subgraph_of,
    is_free,
    pair_precedes,
)

log = logging.getLogger(__name__)

Conclusion = Literal["super", "maximal", "kappa_lambda"]
CONCLUSIONS = ("super", "maximal", "kappa_lambda")
REPORT_VERSION = 1


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class TheoremSpec:
    name: str
    pair: PairSpec
    conclusion: Conclusion
    exceptions: Optional[ExceptionList] = None
    # Members may not be induced subgraphs of this path (P3 or P4).
    not_induced_in: Optional[int] = None

    def __post_init__(self) -> None:
        if self.conclusion not in CONCLUSIONS:
            raise SpecError(f"unknown conclusion {self.conclusion!r}")
        if self.not_induced_in is not None:
            host = path(self.not_induced_in)
            for p in self.pair.members:
                if induced_subgraph_of(p, host):
                    raise SpecError(
                        f"{p.name} is an induced subgraph of P{self.not_induced_in}; "
                        f"theorem {self.name} assumes every forbidden graph is not"
                    )

    def describe(self) -> str:
        exc = f" except {self.exceptions.describe()}" if self.exceptions else ""
        return f"connected {self.pair}-free => {self.conclusion}{exc}"


@dataclass(frozen=True)
class Verdict:
    graph_id: str
    hypothesis_holds: bool
    exception: bool
    conclusion_holds: bool
    violation: bool
    witness: Optional[CutWitness] = None

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph_id,
            "hypothesis_holds": self.hypothesis_holds,
            "exception": self.exception,
            "conclusion_holds": self.conclusion_holds,
            "violation": self.violation,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


def evaluate_conclusion(g: Graph, conclusion: Conclusion) -> tuple[bool, Optional[CutWitness]]:
    """Decide the conclusion predicate; cut-based conclusions return a witness when false."""
    if g.n == 1:
        return True, None
    if conclusion == "super":
        ok, witness = is_super_edge_connected(g)
        return ok, None if ok else witness
    lam, witness = edge_connectivity(g)
    if conclusion == "maximal":
        ok = lam == min(g.degrees())
        return ok, None if ok else witness
    return vertex_connectivity(g) == lam, None


def classify(g: Graph, spec: TheoremSpec) -> Verdict:
    hyp = is_free(g, spec.pair)
    exc = spec.exceptions is not None and is_exception(g, spec.exceptions.mode)
    ok, witness = evaluate_conclusion(g, spec.conclusion)
    return Verdict(encode_graph6(g), hyp, exc, ok, hyp and not exc and not ok, witness)


# -- scan reports ----------------------------------------------------------


@dataclass
class ScanReport:
    theorem: str
    statement: str
    source: str
    scanned: int = 0
    skipped_disconnected: int = 0
    hypothesis: int = 0
    exceptions: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def success(self) -> bool:
        return not self.violations

    def add(self, index: int, v: Verdict) -> None:
        self.scanned += 1
        if v.hypothesis_holds:
            self.hypothesis += 1
            if v.exception:
                self.exceptions += 1
        if v.violation:
            entry = v.to_dict()
            entry["index"] = index
            self.violations.append(entry)

    def merge(self, other: "ScanReport") -> None:
        self.scanned += other.scanned
        self.skipped_disconnected += other.skipped_disconnected
        self.hypothesis += other.hypothesis
        self.exceptions += other.exceptions
        self.violations.extend(other.violations)

    def to_dict(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "theorem": self.theorem,
            "statement": self.statement,
            "source": self.source,
            "scanned": self.scanned,
            "skipped_disconnected": self.skipped_disconnected,
            "hypothesis_satisfied": self.hypothesis,
            "exceptions": self.exceptions,
            "violation_count": len(self.violations),
            "violations": self.violations,
            "success": self.success,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [
            f"theorem:      {self.theorem}",
            f"statement:    {self.statement}",
            f"source:       {self.source}",
            f"scanned:      {self.scanned}",
            f"disconnected: {self.skipped_disconnected}",
            f"hypothesis:   {self.hypothesis}",
            f"exceptions:   {self.exceptions}",
            f"violations: {len(self.violations)}",
        ]
        for v in self.violations:
            side = v["witness"]["side"] if v["witness"] else "-"
            lines.append(f"  #{v['index']} {v['graph6']} cut side {side}")
        return "\n".join(lines) + "\n"


def _classify_batch(spec: TheoremSpec, batch: list[tuple[int, Graph]]) -> list[tuple[int, Optional[Verdict]]]:
    return [(i, classify(g, spec) if is_connected(g) else None) for i, g in batch]


def _batches(source: Iterable[tuple[int, Graph]], size: int) -> Iterator[list[tuple[int, Graph]]]:
    it = iter(source)
    while True:
        batch = list(islice(it, size))
        if not batch:
            return
        yield batch


def verify_sufficiency(
    spec: TheoremSpec,
    source: Iterable[tuple[int, Graph]],
    source_label: str = "graphs",
    jobs: int = 1,
    batch_size: int = 64,
) -> ScanReport:
    """Classify every graph of ``source`` (``(index, graph)`` pairs) in order.

    Disconnected graphs are counted and skipped. With ``jobs > 1`` batches go
    to a process pool and come back in submission order.
    """
    report = ScanReport(spec.name, spec.describe(), source_label)

    def consume(results: Iterable[list[tuple[int, Optional[Verdict]]]]) -> None:
        for chunk in results:
            for index, verdict in chunk:
                if verdict is None:
                    report.skipped_disconnected += 1
                else:
                    report.add(index, verdict)

    if jobs <= 1:
        consume(_classify_batch(spec, b) for b in _batches(source, batch_size))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = _batches(source, batch_size)
            consume(pool.map(_classify_batch, _repeat(spec), batches))
    return report


def _repeat(x):
    while True:
        yield x


def class_source(n_max: int, n_min: int = 1) -> Iterator[tuple[int, Graph]]:
    """Connected class representatives of orders ``n_min..n_max``, numbered from 1."""
    index = 0
    for n in range(n_min, n_max + 1):
        for g in connected_classes(n):
            index += 1
            yield index, g


def _scan_mask_range(spec: TheoremSpec, n: int, lo: int, hi: int) -> ScanReport:
    part = ScanReport(spec.name, spec.describe(), "")
    for offset, g in enumerate(enumerate_labeled(EnumSpec(n, connected=False), lo, hi)):
        if not is_connected(g):
            part.skipped_disconnected += 1
            continue
        if not is_free(g, spec.pair):
            part.scanned += 1
            continue
        part.add(lo + offset + 1, classify(g, spec))
    return part


def verify_labeled(
    spec: TheoremSpec, n: int, jobs: int = 1, chunk: int = 1 << 16, progress: bool = False
) -> ScanReport:
    """Scan every labelled graph on ``n`` vertices; indices are ``mask + 1``.

    Graphs failing the hypothesis are counted without evaluating the
    conclusion, which is what makes the n = 8 scan affordable. The mask range
    is cut into fixed chunks, so the merged report is the same for any
    number of workers.
    """
    total = labeled_count(n)
    ranges = [(lo, min(total, lo + chunk)) for lo in range(0, total, chunk)]
    report = ScanReport(spec.name, spec.describe(), f"labelled graphs n={n}")
    if jobs <= 1:
        parts = (_scan_mask_range(spec, n, lo, hi) for lo, hi in ranges)
        for k, part in enumerate(parts, 1):
            report.merge(part)
            if progress:
                log.info("chunk %d/%d done", k, len(ranges))
        return report
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_scan_mask_range, spec, n, lo, hi) for lo, hi in ranges]
        for k, fut in enumerate(futures, 1):
            report.merge(fut.result())
            if progress:
                log.info("chunk %d/%d done", k, len(ranges))
    return report


# -- the characterization and its prior results ------------------------------

H0_P4 = PairSpec.of("H0", "P4")
Z1_T112 = PairSpec.of("Z1", "T112")


def theorem_specs(token: str, extra: dict[str, Pattern] | None = None) -> list[TheoremSpec]:
    """Theorem specs for a CLI token: 2.1, 2.2i, 2.2ii, 1.1, 1.2, 1.3, 1.4.

    1.4 includes its {H1, P5} branch only when a pattern named H1 is supplied.
    """
    extra = extra or {}
    if token == "2.1":
        return [TheoremSpec("2.1", PairSpec.of("P3"), "super")]
    if token == "2.2i":
        return [TheoremSpec("2.2i", H0_P4, "super", ExceptionList("i"), not_induced_in=3)]
    if token == "2.2ii":
        return [TheoremSpec("2.2ii", Z1_T112, "super", ExceptionList("ii"), not_induced_in=3)]
    if token == "1.1":
        return [TheoremSpec("1.1", PairSpec.of("P3"), "kappa_lambda")]
    if token == "1.2":
        pairs = [("Z1", "P5"), ("Z1", "K14"), ("Z1", "T112"), ("H0", "P4"), ("H0", "K13")]
        return [
            TheoremSpec(f"1.2{{{a},{b}}}", PairSpec.of(a, b), "kappa_lambda", not_induced_in=3)
            for a, b in pairs
        ]
    if token == "1.3":
        return [TheoremSpec("1.3", PairSpec.of("P4"), "maximal")]
    if token == "1.4":
        pairs = [("Z2", "P6"), ("Z2", "T113")]
        if "H1" in extra:
            pairs.insert(0, ("H1", "P5"))
        else:
            log.info("theorem 1.4: no H1 pattern registered, skipping the {H1,P5} branch")
        return [
            TheoremSpec(f"1.4{{{a},{b}}}", PairSpec.of(a, b, extra=extra), "maximal", not_induced_in=4)
            for a, b in pairs
        ]
    raise SpecError(f"unknown theorem {token!r}; choose from 2.1, 2.2i, 2.2ii, 1.1, 1.2, 1.3, 1.4")


THEOREM_TOKENS = ("2.1", "2.2i", "2.2ii", "1.1", "1.2", "1.3", "1.4")


def _check_pair(pair: PairSpec) -> None:
    p3 = path(3)
    for p in pair.members:
        if induced_subgraph_of(p, p3):
            raise SpecError(
                f"{p.name} is an induced subgraph of P3; every connected graph free of it "
                "is complete, so theorem 2.1 already settles this pair"
            )


def precedence_gate(pair: PairSpec) -> bool:
    """Predicted answer: does freeness of ``pair`` force super-edge-connectivity up to exceptions?

    True when ``pair ⪯ {H0, P4}`` or ``pair ⪯ {Z1, T112}``, so that every
    ``pair``-free graph is free of one of the two sufficient pairs.
    """
    _check_pair(pair)
    return pair_precedes(pair, H0_P4) or pair_precedes(pair, Z1_T112)


def _is_counterexample(g: Graph, pair: PairSpec) -> Optional[CutWitness]:
    if g.n < 3 or is_exception(g, "ii") or not is_free(g, pair):
        return None
    ok, witness = is_super_edge_connected(g)
    return None if ok else witness


def search_counterexample(
    pair: PairSpec, n_max: int = 8, families: Iterable | None = None
) -> Optional[Graph]:
    """First connected, ``pair``-free, non-super graph outside every listed exception.

    Class representatives are searched by ascending order first, then the
    registered families. Returns ``None`` if nothing turns up within budget.
    """
    for n in range(1, n_max + 1):
        for g in connected_classes(n):
            if _is_counterexample(g, pair) is not None:
                return g
    for spec in registry_instances() if families is None else families:
        g = make(spec)
        if _is_counterexample(g, pair) is not None:
            return g
    return None


@dataclass
class ConsistencyReport:
    pair: str
    predicted: bool
    status: Literal["agree", "disagree", "inconclusive (budget)"]
    n_max: int
    counterexample: Optional[str] = None
    scan: Optional[ScanReport] = None

    @property
    def agrees(self) -> bool:
        return self.status == "agree"

    def to_dict(self) -> dict:
        return {
            "pair": self.pair,
            "predicted_sufficient": self.predicted,
            "status": self.status,
            "n_max": self.n_max,
            "counterexample": self.counterexample,
            "scan": None if self.scan is None else self.scan.to_dict(),
        }

    def to_text(self) -> str:
        lines = [f"pair:      {self.pair}", f"predicted: {'sufficient' if self.predicted else 'not sufficient'}"]
        if self.counterexample is not None:
            lines.append(f"counterexample: {self.counterexample}")
        elif not self.predicted:
            lines.append("counterexample: none within budget")
        if self.scan is not None:
            lines.append(f"violations: {len(self.scan.violations)}")
        lines.append(f"status:    {self.status}")
        return "\n".join(lines) + "\n"


def pair_theorem(pair: PairSpec) -> TheoremSpec:
    """The sufficiency statement predicted for a pair that passes the gate."""
    mode = "i" if pair_precedes(pair, H0_P4) else "ii"
    return TheoremSpec(f"2.2{mode}{pair}", pair, "super", ExceptionList(mode), not_induced_in=3)


def cross_validate(pair: PairSpec, n_max: int = 7, jobs: int = 1) -> ConsistencyReport:
    """Compare the predicted answer for ``pair`` with what the scans find.

    A failed counterexample search is reported as inconclusive, never as
    evidence against the prediction.
    """
    predicted = precedence_gate(pair)
    if predicted:
        scan = verify_sufficiency(pair_theorem(pair), class_source(n_max), f"classes n<={n_max}", jobs)
        return ConsistencyReport(str(pair), True, "agree" if scan.success else "disagree", n_max, scan=scan)
    g = search_counterexample(pair, n_max)
    if g is None:
        return ConsistencyReport(str(pair), False, "inconclusive (budget)", n_max)
    return ConsistencyReport(str(pair), False, "agree", n_max, counterexample=encode_graph6(g))


__all__ = [
    "THEOREM_TOKENS",
    "ConsistencyReport",
    "PatternError",
    "ScanReport",
    "SpecError",
    "TheoremSpec",
    "Verdict",
    "class_source",
    "classify",
    "cross_validate",
    "evaluate_conclusion",
    "pair_theorem",
    "precedence_gate",
    "search_counterexample",
    "theorem_specs",
    "verify_labeled",
    "verify_sufficiency",
]
