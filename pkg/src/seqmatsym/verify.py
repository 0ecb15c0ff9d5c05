"""Exhaustive verification of the identities over parameter ranges.

Every check is a function of one integer parameter (``n`` for sequential
matrices, ``m`` or ``p`` for moduli) returning the number of cases it covered
and the failing cases. Parameters outside a check's domain (e.g. odd ``n``
for the Jacobi checks) are skipped, never failed.

The parameter list is cut into fixed-size chunks which are either run in
process or mapped over a :mod:`multiprocessing` pool. Chunk results are merged
in parameter order, so a report only depends on the range, never on the
number of workers (wall time aside).
"""

from __future__ import annotations

import json
import logging
import multiprocessing
import time
from collections.abc import Callable
from dataclasses import asdict, dataclass, field
from importlib import resources

import dbetto

from seqmatsym import multfunc, seqmatrix, zolotarev
from seqmatsym.multfunc import JacobiMap, UnitIndicatorMap

log = logging.getLogger(__name__)

Failure = tuple[int, ...]


@dataclass(frozen=True)
class Check:
    name: str
    description: str
    domain: str
    accepts: Callable[[int], bool]
    run: Callable[[int], tuple[int, list[Failure]]]


def _any_n(n: int) -> bool:
    return n >= 1


def _even_n(n: int) -> bool:
    return n >= 2 and n % 2 == 0


def _odd_m(m: int) -> bool:
    return m >= 3 and m % 2 == 1


def _odd_prime(p: int) -> bool:
    return p >= 3 and multfunc.is_prime(p)


def _single(predicate: Callable[[int], bool]) -> Callable[[int], tuple[int, list[Failure]]]:
    def run(x: int) -> tuple[int, list[Failure]]:
        return 1, [] if predicate(x) else [(x,)]

    run.__name__ = predicate.__name__
    return run


def _corollary(n: int) -> bool:
    m = n * n + 1
    return multfunc.check_corollary(JacobiMap(m), n) and multfunc.check_corollary(UnitIndicatorMap(m), n)


def _jacobi_theorem(n: int) -> bool:
    return multfunc.check_jacobi_theorem(n) and multfunc.check_centro_symmetry(n)


def _bridge(n: int) -> bool:
    induced = seqmatrix.induced_permutation(seqmatrix.DihedralElement.RHO, n)
    return induced == zolotarev.mult_perm(n, n * n + 1)


def _zolotarev(m: int) -> tuple[int, list[Failure]]:
    cases, failing = zolotarev.check_zolotarev_range(m)
    return cases, [(m, a) for a in failing]


def _oracles(p: int) -> tuple[int, list[Failure]]:
    return p, [(p, a) for a in multfunc.check_oracles(p)]


def _multiplicativity(m: int) -> tuple[int, list[Failure]]:
    phi = JacobiMap(m)
    ok = multfunc.check_multiplicative(phi) and multfunc.check_zero_locus(m)
    return m * m, [] if ok else [(m,)]


CHECKS: dict[str, Check] = {
    c.name: c
    for c in (
        Check("theorem1", "rho(Q_n) = n Q_n", "n >= 1", _any_n, _single(seqmatrix.check_theorem1)),
        Check(
            "table",
            "sigma(Q_n) for all eight sigma in D4",
            "n >= 1",
            _any_n,
            _single(seqmatrix.check_value_table),
        ),
        Check(
            "corollary",
            "phi(rho(Q_n)) = phi(n) phi(Q_n) and sigma(phi(Q_n)) = phi(sigma(Q_n))",
            "even n",
            _even_n,
            _single(_corollary),
        ),
        Check(
            "jacobi-theorem",
            "(rho(Q_n)/m) = +-(Q_n/m) by n mod 4",
            "even n",
            _even_n,
            _single(_jacobi_theorem),
        ),
        Check(
            "basic-symmetry",
            "(a/m) = (-a/m) and (-1/m) = 1",
            "even n",
            _even_n,
            _single(multfunc.check_basic_symmetry),
        ),
        Check("lemma", "(n/m) = (-1)^(n^2/4)", "even n", _even_n, _single(zolotarev.check_lemma)),
        Check(
            "cycles",
            "x -> nx is (0) and n^2/4 four-cycles",
            "even n",
            _even_n,
            _single(zolotarev.check_cycle_structure),
        ),
        Check("zolotarev", "(a/m) = sgn(x -> ax) for all units a", "odd m", _odd_m, _zolotarev),
        Check("oracles", "jacobi = Euler criterion = brute force", "odd prime p", _odd_prime, _oracles),
        Check("multiplicativity", "(ab/m) = (a/m)(b/m)", "odd m", _odd_m, _multiplicativity),
        Check("bridge", "induced rho = x -> nx", "even n", _even_n, _single(_bridge)),
    )
}


@dataclass
class VerificationReport:
    """Outcome of one check over an inclusive parameter range."""

    check: str
    start: int
    stop: int
    cases: int = 0
    skipped: int = 0
    total_failures: int = 0
    failures: list[list[int]] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.total_failures == 0

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [
            f"check:     {self.check}",
            f"range:     {self.start}..{self.stop}",
            f"cases:     {self.cases}",
            f"skipped:   {self.skipped}",
            f"failures:  {self.total_failures}",
        ]
        if self.failures:
            shown = ", ".join("(" + ", ".join(map(str, f)) + ")" for f in self.failures)
            lines.append(f"first:     {shown}")
        lines.append(f"status:    {'ok' if self.ok else 'FAILED'}")
        lines.append(f"wall time: {self.wall_time:.3f} s")
        return "\n".join(lines) + "\n"


def get_check(name: str) -> Check:
    try:
        return CHECKS[name]
    except KeyError:
        msg = f"unknown check {name!r}, must be one of {', '.join(CHECKS)}"
        raise ValueError(msg) from None


def parse_range(text: str) -> tuple[int, int]:
    """Parse an inclusive range ``"a..b"`` (or a single ``"a"``)."""
    start, sep, stop = text.partition("..")
    try:
        bounds = (int(start), int(stop) if sep else int(start))
    except ValueError:
        msg = f"invalid range {text!r}, expected a..b"
        raise ValueError(msg) from None
    if bounds[0] < 1 or bounds[1] < bounds[0]:
        msg = f"invalid range {text!r}, bounds must be positive and ordered"
        raise ValueError(msg)
    return bounds


def default_config() -> dbetto.AttrsDict:
    """Packaged defaults, see ``configs/verify.yaml``."""
    return dbetto.AttrsDict(dbetto.utils.load_dict(resources.files("seqmatsym") / "configs" / "verify.yaml"))


def _run_chunk(job: tuple[str, list[int]]) -> tuple[int, list[Failure]]:
    name, params = job
    check = CHECKS[name]
    cases = 0
    failures = []
    for x in params:
        c, f = check.run(x)
        cases += c
        failures.extend(f)
        if f:
            log.debug("%s: %d failure(s) at %d", name, len(f), x)
    return cases, failures


def run_check(
    name: str,
    start: int,
    stop: int,
    *,
    workers: int = 1,
    chunk_size: int = 16,
    max_failures: int = 10,
) -> VerificationReport:
    """Run the check ``name`` over ``start..stop`` (inclusive).

    Raises
    ------
    ValueError
        unknown check, invalid bounds, or no parameter of the range in the
        check's domain.
    """
    check = get_check(name)
    if start < 1 or stop < start:
        msg = f"invalid range {start}..{stop}"
        raise ValueError(msg)
    if workers < 1 or chunk_size < 1:
        msg = f"workers and chunk_size must be positive, got {workers} and {chunk_size}"
        raise ValueError(msg)

    params = [x for x in range(start, stop + 1) if check.accepts(x)]
    skipped = stop - start + 1 - len(params)
    if not params:
        msg = f"empty effective range {start}..{stop} for {name} (domain: {check.domain})"
        raise ValueError(msg)
    if skipped:
        log.warning("%s: skipping %d parameter(s) outside the domain (%s)", name, skipped, check.domain)

    jobs = [(name, params[i : i + chunk_size]) for i in range(0, len(params), chunk_size)]
    log.info("%s: %d parameter(s) in %d chunk(s) on %d worker(s)", name, len(params), len(jobs), workers)

    t0 = time.perf_counter()
    if workers == 1:
        outcomes = [_run_chunk(job) for job in jobs]
    else:
        with multiprocessing.get_context("spawn").Pool(workers) as pool:
            outcomes = pool.map(_run_chunk, jobs)
    wall_time = time.perf_counter() - t0

    report = VerificationReport(check=name, start=start, stop=stop, skipped=skipped, wall_time=wall_time)
    all_failures: list[Failure] = []
    for cases, failures in outcomes:
        report.cases += cases
        all_failures.extend(failures)

    all_failures.sort()
    report.total_failures = len(all_failures)
    report.failures = [list(f) for f in all_failures[:max_failures]]
    if report.total_failures > max_failures:
        log.warning("%s: listing %d of %d failures", name, max_failures, report.total_failures)

    log.info("%s: %d case(s), %d failure(s) in %.3f s", name, report.cases, report.total_failures, wall_time)
    return report
