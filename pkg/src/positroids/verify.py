"""The claim-by-claim verification harness.

Each ``verify_*`` function runs one paper-scale claim exhaustively within
its configured caps and returns a structured report.  Caps are refusals:
a run outside the supported range comes back with outcome ``partial`` and
an explicit scope note instead of silently truncating.

Reports serialize to JSON (schema pinned below), a CSV summary, and a
matplotlib overview figure; wall-clock timestamps and environment details
live in a separate run manifest so reports stay byte-comparable.
"""

from __future__ import annotations

import csv
import json
import platform
import random
import time
from dataclasses import asdict, dataclass, field

from .core import Matroid, MatroidError, mask_of, to_text
from .constructions import (
    all_parallel_connection_trees,
    catalog,
    extremal_family,
    principal_extension,
    uniform,
    whirl_like,
    whirl_like_plus,
)
from .isomorphism import are_isomorphic, iso_fingerprint
from .minors import (
    CATALOG_SEARCH_ORDER,
    find_catalog_minor,
    has_uniform_line_minor,
    prop31_hypothesis,
    prop32_hypothesis,
    simple_rank3_matroids,
)
from .positroid import ENUMERATION_CAP, enumerate_positroids, is_positroid

SCHEMA_VERSION = 1
PROP32_GENERATOR = "pex-rank4-v1"


@dataclass
class VerificationReport:
    claim_id: str
    params: dict
    outcome: str  # verified | counterexample | partial
    counts: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    elapsed_ms: int = 0

    def add_witness(self, context: str, m: Matroid | None = None, kind: str = "witness"):
        entry = {"kind": kind, "context": context}
        if m is not None:
            entry["matroid"] = to_text(m)
        self.witnesses.append(entry)

    def counterexamples(self) -> list:
        return [w for w in self.witnesses if w["kind"] == "counterexample"]


def _finish(report: VerificationReport, started: float) -> VerificationReport:
    report.elapsed_ms = int((time.monotonic() - started) * 1000)
    return report


def verify_theorem_main(r: int, ell: int, threads: int = 1) -> VerificationReport:
    """Size bound and equality characterization at one (rank, line) pair.

    (a) no simple rank-r positroid without a U_{2,ell+2} minor exists on
    bound+1 elements; (b) on exactly bound elements every such positroid
    is an iterated parallel connection of copies of U_{2,ell+1}.
    """
    started = time.monotonic()
    bound = ell * (r - 1) + 1
    rep = VerificationReport("THM_MAIN", {"r": r, "l": ell, "bound": bound}, "partial")
    if bound + 1 > ENUMERATION_CAP:
        rep.counts["note"] = (
            f"bound+1 = {bound + 1} exceeds the exhaustive cap n <= {ENUMERATION_CAP}; refusing"
        )
        return _finish(rep, started)
    over = enumerate_positroids(
        bound + 1, rank=r, simple=True, no_uniform_line_minor=ell + 2, threads=threads
    )
    rep.counts["scanned_above_bound"] = over.scanned
    rep.counts["classes_above_bound"] = len(over.classes)
    for m in over.classes:
        rep.add_witness(f"simple rank-{r} positroid on {bound + 1} elements with no "
                        f"U_{{2,{ell + 2}}}-minor", m, kind="counterexample")

    at = enumerate_positroids(
        bound, rank=r, simple=True, no_uniform_line_minor=ell + 2, threads=threads
    )
    trees = all_parallel_connection_trees(r, ell)
    rep.counts["scanned_at_bound"] = at.scanned
    rep.counts["extremal_classes"] = len(at.classes)
    rep.counts["tree_classes"] = len(trees)
    unmatched = [
        m for m in at.classes if all(are_isomorphic(m, t) is None for t in trees)
    ]
    for m in unmatched:
        rep.add_witness("extremal positroid not matching any parallel-connection tree",
                        m, kind="counterexample")
    rep.outcome = "verified" if not rep.counterexamples() else "counterexample"
    return _finish(rep, started)


def verify_excluded_catalog() -> VerificationReport:
    """Each catalog entry is a non-positroid whose single-element minors
    are all positroids (excluded-minor minimality)."""
    started = time.monotonic()
    rep = VerificationReport("EXCLUDED_MINIMALITY", {"entries": list(CATALOG_SEARCH_ORDER)}, "partial")
    checked = 0
    for cid in CATALOG_SEARCH_ORDER:
        m = catalog(cid)
        entry_ok = True
        if is_positroid(m):
            rep.add_witness(f"{cid} unexpectedly passes the positroid check", m,
                            kind="counterexample")
            entry_ok = False
        for e in range(m.n):
            deletion = m.delete({e})
            if not is_positroid(deletion.simplify()[0]):
                rep.add_witness(f"{cid} \\ {e} is not a positroid", deletion, kind="counterexample")
                entry_ok = False
            contraction = m.contract({e})
            if not is_positroid(contraction.simplify()[0]):
                rep.add_witness(f"{cid} / {e} is not a positroid", contraction, kind="counterexample")
                entry_ok = False
        checked += 1
        rep.counts[cid] = "ok" if entry_ok else "failed"
    rep.counts["entries_checked"] = checked
    rep.outcome = "verified" if not rep.counterexamples() else "counterexample"
    return _finish(rep, started)


def verify_prop31(max_n: int = 8, allow_n9: bool = False) -> VerificationReport:
    """Every simple rank-3 matroid up to max_n elements satisfying the
    three-busy-points hypothesis has a rank-3 catalog minor and fails the
    positroid check."""
    started = time.monotonic()
    rep = VerificationReport("PROP_3_1", {"max_n": max_n, "allow_n9": allow_n9}, "partial")
    cap = 9 if allow_n9 else 8
    if max_n > cap:
        rep.counts["note"] = f"max_n {max_n} exceeds cap {cap}; pass allow_n9 for n = 9"
        return _finish(rep, started)
    total = hypo = 0
    for n in range(3, max_n + 1):
        corpus = simple_rank3_matroids(n)
        rep.counts[f"classes_n{n}"] = len(corpus)
        for m in corpus:
            total += 1
            if prop31_hypothesis(m) is None:
                continue
            hypo += 1
            found = find_catalog_minor(m)
            if found is None:
                rep.add_witness("hypothesis-satisfying matroid with no catalog minor",
                                m, kind="counterexample")
            elif found[0] == "FIG2":
                rep.add_witness("rank-3 host matched the rank-4 catalog entry", m,
                                kind="counterexample")
            if is_positroid(m):
                rep.add_witness("hypothesis-satisfying matroid passes the positroid check",
                                m, kind="counterexample")
    rep.counts["classes_total"] = total
    rep.counts["hypothesis_instances"] = hypo
    rep.outcome = "verified" if not rep.counterexamples() else "counterexample"
    return _finish(rep, started)


def _random_rank4_instance(rng: random.Random) -> Matroid:
    """One seeded rank-4 instance grown by principal extensions so that a
    spine line carries three points, each on a second long line inside its
    own plane through the spine (generator id pex-rank4-v1)."""
    m = uniform(4, 4)
    for _ in range(rng.randint(1, 2)):
        m = principal_extension(m, m.closure_mask(mask_of({0, 1})))
    spine = sorted(i for i in range(m.n) if (m.closure_mask(mask_of({0, 1})) >> i) & 1)
    directions = [2, 3]
    if rng.random() < 0.7:
        m = principal_extension(m, (1 << m.n) - 1)  # a free point: a third plane
        directions.append(m.n - 1)
    rng.shuffle(directions)
    anchors = rng.sample(spine, 3)
    for i in range(3):
        d = directions[i % len(directions)]
        for _ in range(rng.randint(1, 2)):
            m = principal_extension(m, m.closure_mask(mask_of({anchors[i], d})))
            if m.n >= 12:
                break
    return m


def verify_prop32(samples: int = 100, seed: int = 2024) -> VerificationReport:
    """Seeded rank-4 instances satisfying the line/plane hypothesis all have
    a catalog minor and fail the positroid check; FIG2 itself included."""
    started = time.monotonic()
    rep = VerificationReport(
        "PROP_3_2",
        {"samples": samples, "seed": seed, "generator": PROP32_GENERATOR},
        "partial",
    )
    rng = random.Random(seed)
    generated = accepted = 0
    to_check = [catalog("FIG2")]
    attempts = 0
    while accepted < samples and attempts < samples * 20:
        attempts += 1
        m = _random_rank4_instance(rng)
        generated += 1
        if not m.is_simple() or m.rank != 4:
            continue
        if prop32_hypothesis(m) is None:
            continue
        accepted += 1
        to_check.append(m)
    for m in to_check:
        if find_catalog_minor(m) is None:
            rep.add_witness("hypothesis-satisfying rank-4 matroid with no catalog minor",
                            m, kind="counterexample")
        if is_positroid(m):
            rep.add_witness("hypothesis-satisfying rank-4 matroid passes the positroid check",
                            m, kind="counterexample")
    rep.counts["generated"] = generated
    rep.counts["hypothesis_instances"] = accepted
    rep.counts["checked"] = len(to_check)
    rep.outcome = "verified" if not rep.counterexamples() else "counterexample"
    return _finish(rep, started)


def verify_lemma43(r_max: int = 5, l_max: int = 3) -> VerificationReport:
    """Every iterated parallel connection of copies of U_{2,l+1} is a simple
    rank-r positroid of size l(r-1)+1 with no U_{2,l+2} minor."""
    started = time.monotonic()
    rep = VerificationReport("LEMMA_4_3", {"r_max": r_max, "l_max": l_max}, "partial")
    skipped = []
    checked = 0
    for r in range(2, r_max + 1):
        for ell in range(1, l_max + 1):
            size = ell * (r - 1) + 1
            if size > 13:
                skipped.append((r, ell))
                continue
            trees = all_parallel_connection_trees(r, ell)
            rep.counts[f"tree_classes_r{r}_l{ell}"] = len(trees)
            for t in trees:
                checked += 1
                problems = []
                if not t.is_simple():
                    problems.append("not simple")
                if t.rank != r:
                    problems.append(f"rank {t.rank} != {r}")
                if t.n != size:
                    problems.append(f"size {t.n} != {size}")
                if not is_positroid(t):
                    problems.append("not a positroid")
                if has_uniform_line_minor(t, ell + 2):
                    problems.append(f"has a U_{{2,{ell + 2}}} minor")
                if problems:
                    rep.add_witness(f"(r={r}, l={ell}): " + "; ".join(problems), t,
                                    kind="counterexample")
    rep.counts["trees_checked"] = checked
    if skipped:
        rep.counts["skipped_pairs_beyond_n13"] = [list(p) for p in skipped]
    if rep.counterexamples():
        rep.outcome = "counterexample"
    else:
        rep.outcome = "verified" if not skipped else "partial"
    return _finish(rep, started)


def verify_conjecture61_rank3(ell: int, threads: int = 1) -> VerificationReport:
    """Rank-3 evidence: no 3-connected simple rank-3 positroid beats the
    conjectured bound, and the whirl-like construction attains it."""
    started = time.monotonic()
    if ell < 3:
        raise MatroidError("the conjecture concerns l >= 3")
    bound = 3 + 3 * ((ell - 1) // 2) + (1 if ell % 2 == 0 else 0)
    rep = VerificationReport("CONJ_6_1_R3", {"l": ell, "bound": bound}, "partial")
    if bound + 1 > ENUMERATION_CAP:
        rep.counts["note"] = (
            f"bound+1 = {bound + 1} exceeds the exhaustive cap n <= {ENUMERATION_CAP}; refusing"
        )
        return _finish(rep, started)
    over = enumerate_positroids(
        bound + 1, rank=3, simple=True, three_connected=True,
        no_uniform_line_minor=ell + 2, threads=threads,
    )
    rep.counts["scanned_above_bound"] = over.scanned
    rep.counts["classes_above_bound"] = len(over.classes)
    for m in over.classes:
        rep.add_witness(f"3-connected rank-3 positroid on {bound + 1} elements with no "
                        f"U_{{2,{ell + 2}}}-minor", m, kind="counterexample")

    attaining = whirl_like_plus(3, ell) if ell % 2 == 0 else whirl_like(3, ell)
    name = "whirl_like_plus(3, %d)" % ell if ell % 2 == 0 else "whirl_like(3, %d)" % ell
    problems = []
    if attaining.n != bound:
        problems.append(f"size {attaining.n} != bound {bound}")
    if not attaining.is_3connected():
        problems.append("not 3-connected")
    if not is_positroid(attaining):
        problems.append("not a positroid")
    if has_uniform_line_minor(attaining, ell + 2):
        problems.append(f"has a U_{{2,{ell + 2}}} minor")
    rep.counts["attaining_construction"] = name
    rep.counts["attaining_size"] = attaining.n
    if problems:
        rep.add_witness(f"{name}: " + "; ".join(problems), attaining, kind="counterexample")
    rep.outcome = "verified" if not rep.counterexamples() else "counterexample"
    return _finish(rep, started)


def verify_oracle_agreement(max_n: int = 7, threads: int = 1) -> VerificationReport:
    """Necklace-generated positroids and Bonin-check positives coincide as
    isomorphism-class sets, and the enumerated class set is minor-closed."""
    started = time.monotonic()
    rep = VerificationReport("ORACLE_AGREEMENT", {"max_n": max_n}, "partial")
    if max_n > 7:
        rep.counts["note"] = f"max_n {max_n} exceeds the agreement-suite cap 7"
        return _finish(rep, started)
    enum_classes: dict[int, list[Matroid]] = {}
    for n in range(1, max_n + 1):
        result = enumerate_positroids(n, threads=threads)
        enum_classes[n] = result.classes
        rep.counts[f"positroid_classes_n{n}"] = len(result.classes)
        rep.counts[f"scanned_n{n}"] = result.scanned
        for m in result.classes:
            if not is_positroid(m):
                rep.add_witness("necklace positroid fails the Bonin check", m,
                                kind="counterexample")

    def in_classes(n: int, m: Matroid) -> bool:
        key = iso_fingerprint(m)
        return any(
            iso_fingerprint(c) == key and are_isomorphic(m, c) is not None
            for c in enum_classes.get(n, [])
        )

    minors_checked = 0
    for n in range(2, max_n + 1):
        for m in enum_classes[n]:
            for e in range(n):
                for kind, child in (("deletion", m.delete({e})), ("contraction", m.contract({e}))):
                    minors_checked += 1
                    if not in_classes(n - 1, child):
                        rep.add_witness(
                            f"single-element {kind} of an enumerated positroid missing "
                            f"from the n={n - 1} enumeration", child, kind="counterexample")
    rep.counts["minors_checked"] = minors_checked

    corpus_checked = 0
    for n in range(1, max_n + 1):
        corpus: list[Matroid] = []
        if n == 1:
            corpus.append(uniform(1, 1))
        if n >= 2:
            corpus.append(uniform(2, n))
        if n >= 3:
            corpus.extend(simple_rank3_matroids(n))
        for m in corpus:
            corpus_checked += 1
            bonin_positive = is_positroid(m)
            enumerated = in_classes(n, m)
            if bonin_positive != enumerated:
                rep.add_witness(
                    f"corpus matroid: bonin={bonin_positive} but enumerated={enumerated}",
                    m, kind="counterexample")
    rep.counts["corpus_checked"] = corpus_checked
    rep.outcome = "verified" if not rep.counterexamples() else "counterexample"
    return _finish(rep, started)


# -- orchestration --------------------------------------------------------------


@dataclass
class VerifyOptions:
    theorem_pairs: list = field(default_factory=lambda: [(3, 2), (4, 2), (3, 3)])
    prop31_max_n: int = 8
    allow_n9: bool = False
    prop32_samples: int = 100
    seed: int = 2024
    lemma43_r_max: int = 5
    lemma43_l_max: int = 3
    conj61_ls: list = field(default_factory=lambda: [3, 4])
    oracle_max_n: int = 7
    threads: int = 1


def run_all(options: VerifyOptions | None = None) -> list[VerificationReport]:
    opts = options or VerifyOptions()
    reports = []
    for r, ell in opts.theorem_pairs:
        reports.append(verify_theorem_main(r, ell, threads=opts.threads))
    reports.append(verify_excluded_catalog())
    reports.append(verify_prop31(opts.prop31_max_n, opts.allow_n9))
    reports.append(verify_prop32(opts.prop32_samples, opts.seed))
    reports.append(verify_lemma43(opts.lemma43_r_max, opts.lemma43_l_max))
    for ell in opts.conj61_ls:
        reports.append(verify_conjecture61_rank3(ell, threads=opts.threads))
    reports.append(verify_oracle_agreement(opts.oracle_max_n, threads=opts.threads))
    return reports


def report_payload(reports: list[VerificationReport]) -> dict:
    return {"schema_version": SCHEMA_VERSION, "reports": [asdict(r) for r in reports]}


def write_reports(reports, out_path, options=None, figures=True):
    """Write report JSON plus CSV summary (and a PNG overview) next to it.

    Returns the list of paths written.  Wall-clock data goes to a separate
    ``*.manifest.json`` so the report itself stays comparable across runs.
    """
    import pathlib

    out = pathlib.Path(out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    written = []

    with open(out, "w", encoding="utf-8") as fh:
        json.dump(report_payload(reports), fh, indent=2)
        fh.write("\n")
    written.append(out)

    csv_path = out.with_suffix(".csv")
    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["claim_id", "outcome", "params", "counts", "witnesses", "elapsed_ms"])
        for r in reports:
            writer.writerow([
                r.claim_id,
                r.outcome,
                json.dumps(r.params, sort_keys=True),
                json.dumps(r.counts, sort_keys=True),
                len(r.witnesses),
                r.elapsed_ms,
            ])
    written.append(csv_path)

    manifest_path = out.with_name(out.stem + ".manifest.json")
    manifest = {
        "schema_version": SCHEMA_VERSION,
        "written_at": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
        "python": platform.python_version(),
        "platform": platform.platform(),
        "options": asdict(options) if options is not None else None,
        "prop32_generator": PROP32_GENERATOR,
        "claims": [
            {"claim_id": r.claim_id, "outcome": r.outcome, "elapsed_ms": r.elapsed_ms}
            for r in reports
        ],
    }
    with open(manifest_path, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
    written.append(manifest_path)

    if figures:
        written.append(render_report_figure(reports, out.with_suffix(".png")))

    failures = [r for r in reports if r.outcome == "counterexample"]
    for i, r in enumerate(failures):
        for j, w in enumerate(r.counterexamples()):
            if "matroid" in w:
                repro = out.with_name(f"counterexample_{r.claim_id}_{i}_{j}.matroid")
                with open(repro, "w", encoding="utf-8") as fh:
                    fh.write(w["matroid"])
                written.append(repro)
    return written


_OUTCOME_COLORS = {"verified": "#2a9d48", "counterexample": "#c9303e", "partial": "#e0a31b"}


def render_report_figure(reports, png_path):
    """One overview chart: elapsed time per claim, colored by outcome."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = [f"{r.claim_id}\n{_short_params(r.params)}" for r in reports]
    elapsed = [max(r.elapsed_ms, 1) / 1000.0 for r in reports]
    colors = [_OUTCOME_COLORS.get(r.outcome, "#888888") for r in reports]

    fig, ax = plt.subplots(figsize=(9, 0.55 * len(reports) + 1.8))
    ypos = range(len(reports))
    ax.barh(list(ypos), elapsed, color=colors)
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(labels, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("elapsed (s)")
    ax.set_title("verification run")
    handles = [plt.Rectangle((0, 0), 1, 1, color=c) for c in _OUTCOME_COLORS.values()]
    ax.legend(handles, list(_OUTCOME_COLORS), fontsize=8, loc="lower right")
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return png_path


def _short_params(params: dict) -> str:
    keep = {k: v for k, v in params.items() if isinstance(v, (int, str)) and k != "generator"}
    return ", ".join(f"{k}={v}" for k, v in list(keep.items())[:3])
