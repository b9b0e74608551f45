"""Command line interface and verification harness.

`verify` runs identity checkers over a seeded (m, n, trial) grid and emits
a deterministic machine-readable report: one JSON line per failure with the
inputs embedded for replay, then a summary object.  `eval` applies a single
operation to JSON matrix files, `paths` counts non-intersecting lattice
path families three independent ways, and `schur` prints a skew Schur
polynomial in canonical text form.

Reports are byte-stable: equal configs produce identical bytes regardless
of worker count, so timing and concurrency never enter the serialized form.
Random inputs are derived per (identity, m, n, trial) by hashing the seed
with those coordinates; filtering the suite never shifts other trials.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Tuple

import click

from .combinat import IndexSet
from .errors import ConfigError, MinorSumError, UnknownIdentityError
from .identities import (
    IDENTITY_IDS,
    check_ab,
    check_ab2,
    check_byun,
    check_cauchy_binet_pf,
    check_closed_forms,
    check_cor7,
    check_det_pf_square,
    check_iswa,
    check_lemma_aux,
    check_lemma_iswa,
    check_main1,
    check_main2,
    check_okada,
    check_rank1,
    f_AB,
    g_AB,
    minor_sum,
)
from .matrix import (
    Matrix,
    det_bareiss,
    matrix_from_json_dict,
    matrix_to_json_dict,
    pfaffian_laplace,
)
from .paths import PathProblem, count_free
from .ring import PolynomialRing, ZZ
from .symfun import skew_schur, xy_ring


# ---------------------------------------------------------------------------
# configuration and report types


@dataclass(frozen=True)
class VerifyConfig:
    """A verification run: which identities, over which grid, how seeded."""

    identities: Tuple[str, ...]
    ms: Tuple[int, ...]
    ns: Tuple[int, ...]
    trials: int = 20
    seed: int = 0
    ring: str = "int"
    bound: int = 5
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "identities", tuple(self.identities))
        object.__setattr__(self, "ms", tuple(self.ms))
        object.__setattr__(self, "ns", tuple(self.ns))
        for ident in self.identities:
            if ident not in _REGISTRY:
                raise UnknownIdentityError(ident, IDENTITY_IDS)
        if not self.identities:
            raise ConfigError("no identities selected")
        if not self.ms or not self.ns:
            raise ConfigError("m and n ranges must be non-empty")
        if any(v < 1 for v in self.ms + self.ns):
            raise ConfigError("m and n values must be >= 1")
        if self.trials < 1:
            raise ConfigError("trials must be >= 1")
        if self.ring not in ("int", "poly"):
            raise ConfigError(f"ring must be 'int' or 'poly', got {self.ring!r}")
        if self.bound < 1:
            raise ConfigError("bound must be >= 1")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")

    def echo(self) -> dict:
        # worker count deliberately absent: it must not change report bytes
        return {
            "identities": list(self.identities),
            "ms": list(self.ms),
            "ns": list(self.ns),
            "trials": self.trials,
            "seed": self.seed,
            "ring": self.ring,
            "bound": self.bound,
        }


@dataclass
class RunReport:
    """Outcome of run_verify.  wall_time stays in memory only; serialized
    reports must be identical for identical configs."""

    config: dict
    failures: list
    summary: dict
    wall_time: float

    def to_json_lines(self) -> str:
        lines = [_json_line(f) for f in self.failures]
        lines.append(_json_line({"config": self.config, "summary": self.summary}))
        return "\n".join(lines) + "\n"


def _json_line(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _trial_rng(seed: int, identity_id: str, m: int, n: int, trial: int) -> random.Random:
    key = f"{seed}:{identity_id}:{m}:{n}:{trial}".encode()
    return random.Random(int.from_bytes(hashlib.sha256(key).digest()[:16], "big"))


# ---------------------------------------------------------------------------
# input builders


def _int_matrix(rng, rows: int, cols: int, bound: int) -> Matrix:
    return Matrix(
        ZZ,
        [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)],
    )


def _int_skew(rng, size: int, bound: int) -> Matrix:
    rows = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            v = rng.randint(-bound, bound)
            rows[i][j] = v
            rows[j][i] = -v
    return Matrix(ZZ, rows)


def _matrix_names(prefix: str, rows: int, cols: int):
    return [
        f"{prefix}{i}_{j}"
        for i in range(1, rows + 1)
        for j in range(1, cols + 1)
    ]


def _generic_matrices(shapes):
    """Matrices of fresh independent variables sharing one ring.

    shapes: sequence of (prefix, rows, cols).  Returns one Matrix per shape.
    """
    names = []
    for prefix, rows, cols in shapes:
        names.extend(_matrix_names(prefix, rows, cols))
    ring = PolynomialRing(tuple(names))
    gens = ring.gens()
    out = []
    pos = 0
    for _, rows, cols in shapes:
        out.append(
            Matrix(
                ring,
                [
                    [gens[pos + r * cols + c] for c in range(cols)]
                    for r in range(rows)
                ],
            )
        )
        pos += rows * cols
    return out


def _generic_skew(size: int, vector_prefixes=()):
    """Skew matrix of fresh variables, plus optional generic vectors."""
    names = [
        f"y{i}_{j}" for i in range(1, size + 1) for j in range(i + 1, size + 1)
    ]
    for prefix in vector_prefixes:
        names.extend(f"{prefix}{i}" for i in range(1, size + 1))
    ring = PolynomialRing(tuple(names))
    gens = ring.gens()
    rows = [[ring.zero] * size for _ in range(size)]
    pos = 0
    for i in range(size):
        for j in range(i + 1, size):
            rows[i][j] = gens[pos]
            rows[j][i] = -gens[pos]
            pos += 1
    vectors = []
    for _ in vector_prefixes:
        vectors.append(list(gens[pos : pos + size]))
        pos += size
    return ring, Matrix(ring, rows), vectors


def _vector_doc(ring, values) -> dict:
    return [ring.format(v) for v in values]


def _abx(mode: str, rng, m: int, n: int, bound: int, with_b: bool, with_x: bool):
    shapes = [("a", m, n)]
    if with_b:
        shapes.append(("b", m, n))
    if with_x:
        shapes.append(("x", n, n))
    if mode == "poly":
        mats = _generic_matrices(shapes)
    else:
        mats = [_int_matrix(rng, r, c, bound) for _, r, c in shapes]
    doc = {
        name.upper(): matrix_to_json_dict(mat)
        for (name, _, _), mat in zip(shapes, mats)
    }
    return mats, doc


# ---------------------------------------------------------------------------
# identity registry: how to generate inputs and run each checker


@dataclass(frozen=True)
class _RegistryEntry:
    run: Callable  # (mode, rng, m, n, bound, trial) -> (IdentityReport, inputs)
    applicable: Callable  # (m, n, cfg) -> bool


def _run_okada(mode, rng, m, n, bound, trial):
    (A,), doc = _abx(mode, rng, m, n, bound, False, False)
    return check_okada(A), doc


def _run_byun(mode, rng, m, n, bound, trial):
    (A,), doc = _abx(mode, rng, m, n, bound, False, False)
    return check_byun(A), doc


def _run_main1(mode, rng, m, n, bound, trial):
    (A, B, X), doc = _abx(mode, rng, m, n, bound, True, True)
    return check_main1(A, B, X), doc


def _run_main2(mode, rng, m, n, bound, trial):
    (A, B, X), doc = _abx(mode, rng, m, n, bound, True, True)
    return check_main2(A, B, X), doc


def _run_lemma_aux(mode, rng, m, n, bound, trial):
    (A, B, X), doc = _abx(mode, rng, m, n, bound, True, True)
    return check_lemma_aux(A, B, X), doc


def _run_cor7(mode, rng, m, n, bound, trial):
    (A, X), doc = _abx(mode, rng, m, n, bound, False, True)
    return check_cor7(A, X), doc


def _run_ab(mode, rng, m, n, bound, trial):
    (A, B), doc = _abx(mode, rng, m, n, bound, True, False)
    return check_ab(A, B), doc


def _run_ab2(mode, rng, m, n, bound, trial):
    (A, B), doc = _abx(mode, rng, m, n, bound, True, False)
    return check_ab2(A, B), doc


def _run_cbpf(mode, rng, m, n, bound, trial):
    (A, B), doc = _abx(mode, rng, m, n, bound, True, False)
    return check_cauchy_binet_pf(A, B), doc


def _run_rank1(mode, rng, m, n, bound, trial):
    if mode == "poly":
        ring, Y, (a, b) = _generic_skew(m, ("u", "v"))
    else:
        ring = ZZ
        Y = _int_skew(rng, m, bound)
        a = [rng.randint(-bound, bound) for _ in range(m)]
        # every fifth trial exercises the equal-vector specialization
        b = list(a) if trial % 5 == 4 else [
            rng.randint(-bound, bound) for _ in range(m)
        ]
    doc = {
        "Y": matrix_to_json_dict(Y),
        "a": _vector_doc(ring, a),
        "b": _vector_doc(ring, b),
    }
    return check_rank1(Y, a, b), doc


def _run_iswa(mode, rng, m, n, bound, trial):
    if mode == "poly":
        names = tuple(_matrix_names("a", m, n)) + tuple(
            f"y{i}_{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)
        )
        ring = PolynomialRing(names)
        gens = ring.gens()
        A = Matrix(
            ring,
            [[gens[r * n + c] for c in range(n)] for r in range(m)],
        )
        rows = [[ring.zero] * n for _ in range(n)]
        pos = m * n
        for i in range(n):
            for j in range(i + 1, n):
                rows[i][j] = gens[pos]
                rows[j][i] = -gens[pos]
                pos += 1
        Y = Matrix(ring, rows)
    else:
        A = _int_matrix(rng, m, n, bound)
        Y = _int_skew(rng, n, bound)
    doc = {"A": matrix_to_json_dict(A), "Y": matrix_to_json_dict(Y)}
    return check_iswa(A, Y), doc


def _run_lemma_iswa(mode, rng, m, n, bound, trial):
    if mode == "poly":
        _, Y, _ = _generic_skew(n)
    else:
        Y = _int_skew(rng, n, bound)
    I = IndexSet(n, rng.sample(range(1, n + 1), m))
    doc = {"Y": matrix_to_json_dict(Y), "I": list(I.indices)}
    return check_lemma_iswa(Y, I), doc


def _run_det_pf_square(mode, rng, m, n, bound, trial):
    if mode == "poly":
        _, Y, _ = _generic_skew(m)
    else:
        Y = _int_skew(rng, m, bound)
    return check_det_pf_square(Y), {"Y": matrix_to_json_dict(Y)}


def _run_closed_forms(mode, rng, m, n, bound, trial):
    if mode == "poly":
        ring = PolynomialRing(tuple(f"d{i}" for i in range(1, n + 1)))
        diag = list(ring.gens())
    else:
        ring = ZZ
        diag = [rng.randint(-bound, bound) for _ in range(n)]
    doc = {"ring": ring.to_json_tag(), "diag": _vector_doc(ring, diag)}
    return check_closed_forms(ring, diag), doc


def _app_any(m, n, cfg):
    return True


def _app_fits(m, n, cfg):
    return m <= n


def _app_even_fits(m, n, cfg):
    return m % 2 == 0 and m <= n


def _app_odd_fits(m, n, cfg):
    return m % 2 == 1 and m <= n


def _app_square_only(m, n, cfg):
    # the input is m x m; run once per m at the smallest configured n
    return n == min(cfg.ns)


def _app_even_square_only(m, n, cfg):
    return m % 2 == 0 and n == min(cfg.ns)


def _app_diagonal_only(m, n, cfg):
    # the input is an n-vector; run once per n at the smallest configured m.
    # The exhaustive pair scan grows like 4^n, so cap n (tighter for the
    # symbolic ring, where every minor is a polynomial determinant).
    cap = 4 if cfg.ring == "poly" else 6
    return m == min(cfg.ms) and n <= cap


_REGISTRY = {
    "okada": _RegistryEntry(_run_okada, _app_any),
    "byun": _RegistryEntry(_run_byun, _app_any),
    "main1": _RegistryEntry(_run_main1, _app_fits),
    "main2": _RegistryEntry(_run_main2, _app_even_fits),
    "rank1": _RegistryEntry(_run_rank1, _app_square_only),
    "lemma-aux": _RegistryEntry(_run_lemma_aux, _app_odd_fits),
    "iswa": _RegistryEntry(_run_iswa, _app_even_fits),
    "lemma-iswa": _RegistryEntry(_run_lemma_iswa, _app_even_fits),
    "ab": _RegistryEntry(_run_ab, _app_fits),
    "ab2": _RegistryEntry(_run_ab2, _app_even_fits),
    "cor7": _RegistryEntry(_run_cor7, _app_even_fits),
    "closed-forms": _RegistryEntry(_run_closed_forms, _app_diagonal_only),
    "det-pf-square": _RegistryEntry(_run_det_pf_square, _app_even_square_only),
    "cauchy-binet-pf": _RegistryEntry(_run_cbpf, _app_even_fits),
}

assert tuple(_REGISTRY) == IDENTITY_IDS


def run_verify(cfg: VerifyConfig) -> RunReport:
    """Run the configured identity suite; deterministic given the config."""
    t0 = time.perf_counter()
    jobs = []
    for ident in cfg.identities:
        entry = _REGISTRY[ident]
        for m in cfg.ms:
            for n in cfg.ns:
                if not entry.applicable(m, n, cfg):
                    continue
                for trial in range(cfg.trials):
                    jobs.append((ident, m, n, trial))

    def execute(job):
        ident, m, n, trial = job
        rng = _trial_rng(cfg.seed, ident, m, n, trial)
        return _REGISTRY[ident].run(cfg.ring, rng, m, n, cfg.bound, trial)

    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(execute, jobs))
    else:
        results = [execute(job) for job in jobs]

    failures = []
    per_identity: dict = {}
    for (ident, m, n, trial), (report, inputs) in zip(jobs, results):
        stats = per_identity.setdefault(ident, {"trials": 0, "failed": 0})
        stats["trials"] += 1
        if not report.passed:
            stats["failed"] += 1
            failures.append(
                {
                    "identity": ident,
                    "m": m,
                    "n": n,
                    "trial": trial,
                    "input_digest": report.input_digest,
                    "lhs": report.lhs,
                    "rhs": report.rhs,
                    "details": report.details,
                    "inputs": inputs,
                }
            )
    summary = {
        "total_trials": len(jobs),
        "failures": len(failures),
        "per_identity": per_identity,
    }
    return RunReport(
        config=cfg.echo(),
        failures=failures,
        summary=summary,
        wall_time=time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# click commands


@click.group()
def main():
    """Exact minor-summation and Pfaffian identity toolkit."""


def _parse_range(text: str, flag: str) -> Tuple[int, ...]:
    values = []
    try:
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            if ".." in chunk:
                lo, hi = chunk.split("..", 1)
                values.extend(range(int(lo), int(hi) + 1))
            else:
                values.append(int(chunk))
    except ValueError:
        raise click.BadParameter(
            f'expected an integer, range "lo..hi", or comma list; got {text!r}',
            param_hint=flag,
        )
    return tuple(values)


@main.command()
@click.option("--identity", default="all", help='Identity id, comma list, or "all".')
@click.option("--m", "m_range", default="1..4", help='m values: "3", "1..4", or "2,4".')
@click.option("--n", "n_range", default="1..5", help='n values, same syntax as --m.')
@click.option("--trials", default=20, show_default=True, help="Trials per (identity, m, n).")
@click.option("--seed", default=0, show_default=True, help="Base seed for input derivation.")
@click.option("--ring", default="int", type=click.Choice(["int", "poly"]), show_default=True,
              help="Integer entries, or fully generic polynomial entries.")
@click.option("--bound", default=5, show_default=True, help="Integer entries lie in [-bound, bound].")
@click.option("--workers", default=1, show_default=True, help="Concurrent trial executors.")
@click.option("--out", "out_path", default=None, type=click.Path(dir_okay=False),
              help="Write the JSON-lines report here instead of stdout.")
def verify(identity, m_range, n_range, trials, seed, ring, bound, workers, out_path):
    """Check identities on seeded random or generic inputs over an (m, n) grid.

    Emits one JSON line per failing trial (inputs included for replay) and a
    final summary object.  Exit status is 0 exactly when nothing failed.
    """
    if identity == "all":
        ids = IDENTITY_IDS
    else:
        ids = tuple(s.strip() for s in identity.split(",") if s.strip())
    try:
        cfg = VerifyConfig(
            identities=ids,
            ms=_parse_range(m_range, "--m"),
            ns=_parse_range(n_range, "--n"),
            trials=trials,
            seed=seed,
            ring=ring,
            bound=bound,
            workers=workers,
        )
        report = run_verify(cfg)
    except MinorSumError as exc:
        raise click.ClickException(str(exc))
    payload = report.to_json_lines()
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(payload)
        click.echo(
            f"{report.summary['total_trials']} trials, "
            f"{report.summary['failures']} failures -> {out_path}"
        )
    else:
        click.echo(payload, nl=False)
    if report.summary["failures"]:
        raise SystemExit(1)


def _load_matrix(path: str) -> Matrix:
    with open(path) as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise click.ClickException(
            f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}"
        ) from None
    try:
        return matrix_from_json_dict(data)
    except MinorSumError as exc:
        raise click.ClickException(f"{path}: {exc}") from None


@main.command("eval")
@click.argument("operation", type=click.Choice(["pf", "det", "minorsum", "f", "g"]))
@click.argument("files", nargs=-1, type=click.Path(exists=True, dir_okay=False))
def eval_cmd(operation, files):
    """Apply one operation to JSON matrix files.

    pf/det/minorsum take one matrix; f and g take three (A, B, X) and
    evaluate the half-size or bordered double minor sums.
    """
    arity = 3 if operation in ("f", "g") else 1
    if len(files) != arity:
        raise click.UsageError(
            f"{operation} takes {arity} matrix file{'s' if arity > 1 else ''}, got {len(files)}"
        )
    mats = [_load_matrix(path) for path in files]
    try:
        if operation == "pf":
            value = pfaffian_laplace(mats[0])
        elif operation == "det":
            value = det_bareiss(mats[0])
        elif operation == "minorsum":
            value = minor_sum(mats[0])
        elif operation == "f":
            value = f_AB(mats[0], mats[1], mats[2])
        else:
            value = g_AB(mats[0], mats[1], mats[2])
    except MinorSumError as exc:
        raise click.ClickException(str(exc))
    click.echo(mats[0].ring.format(value))


@main.command("paths")
@click.argument("problem_file", type=click.Path(exists=True, dir_okay=False))
def paths_cmd(problem_file):
    """Count non-intersecting path families with free endpoints.

    The problem file holds {"starts": [[x,y],...], "ends": [[x,y],...],
    "choose": m}; output reports the count and all three routes.
    """
    with open(problem_file) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise click.ClickException(
                f"{problem_file}:{exc.lineno}:{exc.colno}: {exc.msg}"
            ) from None
    try:
        problem = PathProblem(
            starts=tuple(tuple(pt) for pt in data.get("starts", ())),
            candidate_ends=tuple(tuple(pt) for pt in data.get("ends", ())),
            choose=data.get("choose"),
            steps=tuple(tuple(s) for s in data.get("steps", ((1, 0), (0, 1)))),
        )
        count = count_free(problem)
    except MinorSumError as exc:
        raise click.ClickException(str(exc))
    # count_free already asserted all three routes agree
    result = {
        "count": count,
        "routes": {"brute": count, "okada": count, "byun": count},
    }
    click.echo(_json_line(result))


def _parse_partition(text: str, flag: str) -> Tuple[int, ...]:
    parts = []
    try:
        for chunk in text.split(","):
            chunk = chunk.strip()
            if chunk:
                parts.append(int(chunk))
    except ValueError:
        raise click.BadParameter(
            f"expected a comma-separated partition, got {text!r}", param_hint=flag
        )
    return tuple(parts)


@main.command()
@click.option("--lam", required=True, help='Outer partition, e.g. "3,1".')
@click.option("--mu", default="", help="Inner partition (default: empty).")
@click.option("--nvars", default=3, show_default=True, help="Number of variables.")
def schur(lam, mu, nvars):
    """Print a skew Schur polynomial in canonical text form."""
    if nvars < 1:
        raise click.BadParameter("need at least one variable", param_hint="--nvars")
    ring, xs, _ = xy_ring(nvars, 0)
    try:
        value = skew_schur(
            ring, _parse_partition(lam, "--lam"), _parse_partition(mu, "--mu"), xs
        )
    except MinorSumError as exc:
        raise click.ClickException(str(exc))
    click.echo(ring.format(value))


if __name__ == "__main__":
    main()
