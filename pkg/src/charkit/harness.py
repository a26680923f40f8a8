"""Executable checks for the squaring structure of irreducible characters.

Each check takes a computed character table, decides whether its hypothesis
applies to that group (constructor metadata only; unknown flags are skipped,
never guessed), and verifies the claimed conclusion exhaustively over the
relevant irreducibles. Results are structured: every failure carries enough
witness data to replay it, and every skip carries a reason, so a report can
be audited without rerunning anything.

The built-in corpus covers the families where the verified statements are
sharp: both branches of the degree-2 split, both branches of the prime
degree dichotomy, the kernel/center sharpness witness of order 21, and the
two prime groups where the eta bound collapses below (p+1)/2.
"""

import hashlib
import json
import os
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .cache import cached_table
from .chartable import (
    CharacterTable,
    char_center,
    char_kernel,
    second_power,
    second_power_permutation,
    square_root_char,
)
from .errors import (
    BadCorpusSpec,
    BadParameters,
    CharkitError,
    InternalInconsistency,
)
from .groups import from_spec, is_prime
from .version import VERSION

H_SATISFIED = "satisfied"
H_UNKNOWN = "skipped:flag-unknown"
H_VIOLATED = "violated"

WITNESS_CAP = 10


@dataclass(frozen=True)
class Witness:
    """One replayable data point: a character and how its square decomposed."""

    chi_index: int
    multiplicities: tuple
    data: dict = field(default_factory=dict)

    def to_obj(self):
        return {
            "chi_index": self.chi_index,
            "multiplicities": list(self.multiplicities),
            "data": {k: self.data[k] for k in sorted(self.data)},
        }


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    group_spec: str
    hypothesis_status: str
    verdict: Optional[str]
    witnesses: tuple = ()
    notes: tuple = ()

    def __post_init__(self):
        if self.hypothesis_status == H_SATISFIED:
            if self.verdict not in ("pass", "fail"):
                raise InternalInconsistency("satisfied hypothesis needs a verdict")
            if self.verdict == "fail" and not self.witnesses:
                raise InternalInconsistency("a failure must carry a witness")
        else:
            if self.verdict is not None:
                raise InternalInconsistency("skipped checks cannot carry a verdict")
            if not self.notes:
                raise InternalInconsistency("every skip must be explained")

    def to_obj(self):
        return {
            "check_id": self.check_id,
            "group_spec": self.group_spec,
            "hypothesis_status": self.hypothesis_status,
            "verdict": self.verdict,
            "witnesses": [w.to_obj() for w in self.witnesses],
            "notes": list(self.notes),
        }


def _shape(table: CharacterTable, dec) -> list:
    return sorted(
        (table.degrees[k], dec.multiplicities[k]) for k in dec.nonzero()
    )


# -- individual checks ----------------------------------------------------


def check_square_automorphism(table: CharacterTable) -> CheckResult:
    """Odd order: chi -> chi(g^2) permutes the irreducibles; each square has
    exactly one odd multiplicity constituent, namely the image; the square
    root recovered by exhaustive scan matches the closed form."""
    cid = "square_automorphism"
    G = table.group
    if G.order % 2 == 0:
        return CheckResult(
            cid, G.spec, H_VIOLATED, None,
            notes=("group order is even; squaring need not permute the irreducibles",),
        )
    M = second_power_permutation(table)
    r = len(table)
    bad = []
    notes = []
    for i in range(r):
        dec = table.decompose_square(i)
        odd = tuple(k for k, m in enumerate(dec.multiplicities) if m % 2)
        if M.images[i] is None or odd != (M.images[i],):
            bad.append(
                Witness(i, dec.multiplicities,
                        {"odd_constituents": list(odd), "image": M.images[i]})
            )
    if not M.is_permutation:
        notes.append("the squaring map is not a bijection on the irreducibles")
        if not bad:
            bad.append(Witness(0, table.decompose_square(0).multiplicities,
                               {"images": list(M.images)}))
    for c in range(r):
        scan = tuple(
            j for j in range(r)
            if table.decompose_square(j).multiplicities[c] % 2
        )
        try:
            direct = square_root_char(table, c)
        except InternalInconsistency:
            direct = None
        if direct is None or scan != (direct,) or M.images[direct] != c:
            bad.append(
                Witness(c, table.decompose_square(c).multiplicities,
                        {"odd_roots_by_scan": list(scan),
                         "closed_form_root": direct})
            )
    if bad:
        return CheckResult(cid, G.spec, H_SATISFIED, "fail",
                           tuple(bad[:WITNESS_CAP]), tuple(notes))
    s = table.degrees.index(max(table.degrees))
    sample = Witness(
        s, table.decompose_square(s).multiplicities,
        {"image": M.images[s], "degree": table.degrees[s]},
    )
    notes.append(f"irreducibles verified: {r}; scan and closed form square roots agree")
    return CheckResult(cid, G.spec, H_SATISFIED, "pass", (sample,), tuple(notes))


def _split_case(table: CharacterTable, dec) -> Optional[str]:
    # branch (i): two distinct linears and one degree 2, all multiplicity 1
    # branch (ii): four distinct linears, all multiplicity 1
    if any(dec.multiplicities[k] != 1 for k in dec.nonzero()):
        return None
    degs = sorted(table.degrees[k] for k in dec.nonzero())
    if degs == [1, 1, 2]:
        return "i"
    if degs == [1, 1, 1, 1]:
        return "ii"
    return None


def check_degree2_square_split(table: CharacterTable) -> CheckResult:
    """Monomial chi of degree 2: chi^2 is either two linears plus a degree 2
    irreducible, or four distinct linears."""
    cid = "degree2_square_split"
    G = table.group
    md = G.metadata
    deg2 = [i for i, d in enumerate(table.degrees) if d == 2]
    if md.all_irreducibles_monomial is None:
        return CheckResult(
            cid, G.spec, H_UNKNOWN, None,
            notes=("monomiality of the irreducibles is unknown for this construction",),
        )
    if md.all_irreducibles_monomial is False:
        notes = ["not every irreducible is monomial"]
        for i in deg2[:1]:
            dec = table.decompose_square(i)
            case = _split_case(table, dec)
            if case is None:
                notes.append(
                    f"chi_{i} of degree 2 squares into (degree, multiplicity) "
                    f"pairs {_shape(table, dec)}; neither branch applies"
                )
            else:
                notes.append(f"chi_{i} still lands in branch ({case})")
        return CheckResult(cid, G.spec, H_VIOLATED, None, notes=tuple(notes))
    if not deg2:
        return CheckResult(cid, G.spec, H_VIOLATED, None,
                           notes=("no irreducible has degree 2",))
    bad = []
    samples = {}
    for i in deg2:
        dec = table.decompose_square(i)
        case = _split_case(table, dec)
        if case is None:
            bad.append(Witness(i, dec.multiplicities,
                               {"shape": _shape(table, dec)}))
        elif case not in samples:
            samples[case] = Witness(i, dec.multiplicities,
                                    {"case": case, "eta": dec.eta})
    if bad:
        return CheckResult(cid, G.spec, H_SATISFIED, "fail",
                           tuple(bad[:WITNESS_CAP]))
    wit = tuple(samples[c] for c in sorted(samples))
    note = (f"degree 2 irreducibles checked: {len(deg2)}; "
            f"branches seen: {', '.join(sorted(samples))}")
    return CheckResult(cid, G.spec, H_SATISFIED, "pass", wit, (note,))


def check_prime_degree_square_dichotomy(table: CharacterTable) -> CheckResult:
    """Nilpotent G, chi of odd prime degree p: all constituents of chi^2 have
    degree p, and either chi^2 = p * image (chi vanishing off its center) or
    eta = (p+1)/2 with the image once and (p-1)/2 others twice."""
    cid = "prime_degree_square_dichotomy"
    G = table.group
    md = G.metadata
    targets = [
        i for i, d in enumerate(table.degrees)
        if d > 2 and d % 2 == 1 and is_prime(d)
    ]
    if md.nilpotent is None:
        return CheckResult(cid, G.spec, H_UNKNOWN, None,
                           notes=("nilpotency is unknown for this construction",))
    if md.nilpotent is False:
        notes = ["group is not nilpotent"]
        for i in targets[:1]:
            ok, detail = _dichotomy_holds(table, i)
            if ok:
                notes.append(f"chi_{i} incidentally satisfies the conclusion ({detail})")
            else:
                notes.append(f"chi_{i} escapes the conclusion: {detail}")
        return CheckResult(cid, G.spec, H_VIOLATED, None, notes=tuple(notes))
    if not targets:
        return CheckResult(cid, G.spec, H_VIOLATED, None,
                           notes=("no irreducible of odd prime degree",))
    bad = []
    samples = {}
    for i in targets:
        ok, detail = _dichotomy_holds(table, i)
        dec = table.decompose_square(i)
        if not ok:
            bad.append(Witness(i, dec.multiplicities, {"reason": detail}))
        elif detail not in samples:
            samples[detail] = Witness(
                i, dec.multiplicities,
                {"case": detail, "p": table.degrees[i], "eta": dec.eta},
            )
    if bad:
        return CheckResult(cid, G.spec, H_SATISFIED, "fail",
                           tuple(bad[:WITNESS_CAP]))
    wit = tuple(samples[c] for c in sorted(samples))
    note = (f"odd prime degree irreducibles checked: {len(targets)}; "
            f"branches seen: {', '.join(sorted(samples))}")
    return CheckResult(cid, G.spec, H_SATISFIED, "pass", wit, (note,))


def _dichotomy_holds(table: CharacterTable, i: int):
    G = table.group
    p = table.degrees[i]
    chi = table.irreducibles[i]
    dec = table.decompose_square(i)
    if any(table.degrees[k] != p for k in dec.nonzero()):
        return False, (
            f"constituent degrees {sorted(table.degrees[k] for k in dec.nonzero())}"
            f" are not all {p}"
        )
    img = table.index_of(second_power(chi))
    if img is None:
        return False, "the second power image is not irreducible"
    if dec.eta == 1:
        if dec.multiplicities[img] != p:
            return False, f"single constituent has multiplicity {dec.multiplicities[img]}, not {p}"
        center_classes = {
            int(G.classes.class_of[m]) for m in char_center(chi).members
        }
        zero = chi.values[0].ctx.zero
        off = [
            c for c in range(G.classes.num_classes)
            if c not in center_classes and chi.values[c] != zero
        ]
        if off:
            return False, f"does not vanish outside its center (classes {off})"
        return True, "i"
    if dec.eta == (p + 1) // 2:
        if dec.multiplicities[img] != 1:
            return False, f"image multiplicity {dec.multiplicities[img]}, expected 1"
        others = [k for k in dec.nonzero() if k != img]
        wrong = [k for k in others if dec.multiplicities[k] != 2]
        if wrong:
            return False, f"constituents {wrong} do not have multiplicity 2"
        return True, "ii"
    return False, f"eta is {dec.eta}, expected 1 or {(p + 1) // 2}"


def check_eta_lower_bound(table: CharacterTable) -> CheckResult:
    """Supersolvable G, chi of degree 2^n > 1: chi^2 has at least two
    distinct irreducible constituents. When G is also nilpotent the same
    holds for every even degree (a square that is a multiple of a single
    irreducible forces odd degree)."""
    cid = "eta_lower_bound"
    G = table.group
    md = G.metadata
    if md.supersolvable is None:
        return CheckResult(cid, G.spec, H_UNKNOWN, None,
                           notes=("supersolvability is unknown for this construction",))
    if md.supersolvable is False:
        return CheckResult(cid, G.spec, H_VIOLATED, None,
                           notes=("group is not supersolvable",))
    two_power = [
        i for i, d in enumerate(table.degrees)
        if d > 1 and d & (d - 1) == 0
    ]
    scope = list(two_power)
    clause = f"two power degree irreducibles checked: {len(two_power)}"
    if md.nilpotent is True:
        scope = [i for i, d in enumerate(table.degrees) if d % 2 == 0]
        clause += f"; nilpotent clause widened the scope to {len(scope)} even degrees"
    if not scope:
        return CheckResult(cid, G.spec, H_VIOLATED, None,
                           notes=("no irreducible of even degree",))
    bad = []
    for i in scope:
        dec = table.decompose_square(i)
        if dec.eta < 2:
            bad.append(Witness(i, dec.multiplicities, {"eta": dec.eta}))
    if bad:
        return CheckResult(cid, G.spec, H_SATISFIED, "fail",
                           tuple(bad[:WITNESS_CAP]))
    s = scope[0]
    sample = Witness(s, table.decompose_square(s).multiplicities,
                     {"eta": table.decompose_square(s).eta})
    return CheckResult(cid, G.spec, H_SATISFIED, "pass", (sample,), (clause,))


def check_no_linear_in_square(table: CharacterTable) -> CheckResult:
    """Odd order, nonlinear chi: chi^2 has no linear constituent."""
    cid = "no_linear_in_square"
    G = table.group
    lins = table.linears()
    nonlin = [i for i, d in enumerate(table.degrees) if d > 1]
    if G.order % 2 == 0:
        notes = ["group order is even"]
        for i in nonlin:
            dec = table.decompose_square(i)
            hit = next((k for k in lins if dec.multiplicities[k]), None)
            if hit is not None:
                notes.append(
                    f"and the conclusion really fails here: "
                    f"[chi_{i}^2, chi_{hit}] = {dec.multiplicities[hit]}"
                )
                break
        return CheckResult(cid, G.spec, H_VIOLATED, None, notes=tuple(notes))
    if not nonlin:
        return CheckResult(cid, G.spec, H_VIOLATED, None,
                           notes=("every irreducible is linear",))
    bad = []
    for i in nonlin:
        dec = table.decompose_square(i)
        for k in lins:
            if dec.multiplicities[k]:
                bad.append(Witness(i, dec.multiplicities,
                                   {"linear_index": k,
                                    "multiplicity": dec.multiplicities[k]}))
                break
    if bad:
        return CheckResult(cid, G.spec, H_SATISFIED, "fail",
                           tuple(bad[:WITNESS_CAP]))
    s = nonlin[0]
    sample = Witness(s, table.decompose_square(s).multiplicities,
                     {"linear_count": len(lins)})
    note = (f"nonlinear irreducibles checked: {len(nonlin)}, "
            f"against {len(lins)} linear characters")
    return CheckResult(cid, G.spec, H_SATISFIED, "pass", (sample,), (note,))


def check_kernel_center_vanishing(table: CharacterTable) -> CheckResult:
    """Ker(chi) != Z(chi) forces [chi^2, chi] = 0; in a p-group the same
    holds for every nontrivial chi. Groups where a character with equal
    kernel and center has [chi^2, chi] != 0 are recorded as sharpness data."""
    cid = "kernel_center_vanishing"
    G = table.group
    bad = []
    notes = []
    sharp = None
    sample = None
    for i, chi in enumerate(table.irreducibles):
        ker = char_kernel(chi)
        cen = char_center(chi)
        m = table.decompose_square(i).multiplicities[i]
        if set(ker.members) != set(cen.members):
            if m != 0:
                bad.append(Witness(
                    i, table.decompose_square(i).multiplicities,
                    {"kernel_order": ker.order, "center_order": cen.order,
                     "self_multiplicity": m},
                ))
            elif sample is None:
                sample = Witness(
                    i, table.decompose_square(i).multiplicities,
                    {"kernel_order": ker.order, "center_order": cen.order,
                     "self_multiplicity": 0},
                )
        elif m != 0 and table.degrees[i] > 1 and sharp is None:
            sharp = (i, m)
    if G.p_group:
        notes.append("p group clause applied to every nontrivial irreducible")
        for i in range(1, len(table)):
            m = table.decompose_square(i).multiplicities[i]
            if m != 0:
                bad.append(Witness(i, table.decompose_square(i).multiplicities,
                                   {"self_multiplicity": m, "clause": "p-group"}))
    if sharp is not None:
        notes.append(
            f"chi_{sharp[0]} has kernel equal to center and "
            f"[chi_{sharp[0]}^2, chi_{sharp[0]}] = {sharp[1]}: "
            "the hypothesis cannot be dropped"
        )
    if bad:
        return CheckResult(cid, G.spec, H_SATISFIED, "fail",
                           tuple(bad[:WITNESS_CAP]), tuple(notes))
    wit = (sample,) if sample is not None else ()
    notes.insert(0, f"irreducibles checked: {len(table)}")
    return CheckResult(cid, G.spec, H_SATISFIED, "pass", wit, tuple(notes))


def check_pq_sharpness(table: CharacterTable) -> CheckResult:
    """Nonabelian group of order pq with q = rp + 1 and 1 < r < (p+1)/2:
    exactly p linears and r irreducibles of degree p; every degree p square
    avoids linears and has 2 <= eta <= r, so neither dichotomy branch can
    apply."""
    cid = "pq_sharpness"
    G = table.group
    md = G.metadata
    if md.family != "metacyclic":
        return CheckResult(cid, G.spec, H_VIOLATED, None,
                           notes=("not a two prime metacyclic group",))
    q, p, _ = md.params
    r = (q - 1) // p
    if not (1 < r and 2 * r < p + 1):
        return CheckResult(
            cid, G.spec, H_VIOLATED, None,
            notes=(f"r = (q-1)/p = {r} violates 1 < r < (p+1)/2 for p = {p}",),
        )
    bad = []
    lins = table.linears()
    degp = [i for i, d in enumerate(table.degrees) if d == p]
    if len(lins) != p or len(degp) != r or len(table) != p + r:
        return CheckResult(
            cid, G.spec, H_SATISFIED, "fail",
            (Witness(0, table.degrees,
                     {"linears": len(lins), "degree_p": len(degp),
                      "expected": [p, r]}),),
        )
    wit = []
    for i in degp:
        dec = table.decompose_square(i)
        linear_hits = [k for k in lins if dec.multiplicities[k]]
        if linear_hits or not (2 <= dec.eta <= r):
            bad.append(Witness(i, dec.multiplicities,
                               {"eta": dec.eta, "linear_hits": linear_hits}))
        else:
            wit.append(Witness(i, dec.multiplicities, {"eta": dec.eta, "r": r}))
    if bad:
        return CheckResult(cid, G.spec, H_SATISFIED, "fail",
                           tuple(bad[:WITNESS_CAP]))
    note = (f"p = {p}, q = {q}, r = {r}: every degree {p} square has "
            f"2 <= eta <= {r} < (p+1)/2 = {(p + 1) // 2}")
    return CheckResult(cid, G.spec, H_SATISFIED, "pass", tuple(wit), (note,))


CHECKS: dict[str, Callable[[CharacterTable], CheckResult]] = {
    "square_automorphism": check_square_automorphism,
    "degree2_square_split": check_degree2_square_split,
    "prime_degree_square_dichotomy": check_prime_degree_square_dichotomy,
    "eta_lower_bound": check_eta_lower_bound,
    "no_linear_in_square": check_no_linear_in_square,
    "kernel_center_vanishing": check_kernel_center_vanishing,
    "pq_sharpness": check_pq_sharpness,
}

SUITES: dict[str, tuple[str, ...]] = {
    "A": ("square_automorphism",),
    "B": ("degree2_square_split",),
    "C": ("prime_degree_square_dichotomy",),
    "eta": ("eta_lower_bound",),
    "props": ("no_linear_in_square", "kernel_center_vanishing"),
    "super": ("pq_sharpness",),
    "all": tuple(CHECKS),
}

DEFAULT_CORPUS: tuple[str, ...] = (
    "cyclic:3",
    "cyclic:5",
    "cyclic:7",
    "cyclic:9",
    "cyclic:15",
    "cyclic:21",
    "cyclic:27",
    "dihedral:8",
    "quaternion:8",
    "sl23",
    "heisenberg:3",
    "heisenberg:5",
    "heisenberg:7",
    "extraspecial_exp_p2:3",
    "extraspecial_exp_p2:5",
    "wreath_cyclic:3",
    "remark2:2",
    "remark2:3",
    "metacyclic:7:3:2",
    "metacyclic:11:5:3",
    "metacyclic:13:3:3",
    "metacyclic:23:11:2",
    "metacyclic:31:5:2",
    "direct:heisenberg:3:cyclic:5",
)


@dataclass
class Report:
    """Everything one corpus run produced, in deterministic order.

    Timings are kept for interactive inspection but deliberately left out
    of both renderings so that output is byte for byte reproducible."""

    corpus_id: str
    suite: str
    results: tuple
    provenance: dict
    timings: dict
    version: str = VERSION

    def tallies(self) -> dict:
        out: dict = {}
        for res in self.results:
            row = out.setdefault(res.check_id, {"pass": 0, "fail": 0, "skipped": 0})
            if res.hypothesis_status != H_SATISFIED:
                row["skipped"] += 1
            else:
                row[res.verdict] += 1
        return out

    def failures(self) -> tuple:
        return tuple(r for r in self.results if r.verdict == "fail")

    def unexplained_skips(self) -> tuple:
        return tuple(
            r for r in self.results
            if r.hypothesis_status != H_SATISFIED and not r.notes
        )

    def ok(self) -> bool:
        return not self.failures() and not self.unexplained_skips()

    def group_specs(self) -> tuple:
        seen = []
        for r in self.results:
            if r.group_spec not in seen:
                seen.append(r.group_spec)
        return tuple(seen)

    def to_machine(self) -> str:
        doc = {
            "corpus": self.corpus_id,
            "suite": self.suite,
            "version": self.version,
            "group_count": len(self.group_specs()),
            "result_count": len(self.results),
            "failure_count": len(self.failures()),
            "unexplained_skip_count": len(self.unexplained_skips()),
            "tallies": self.tallies(),
            "provenance": self.provenance,
            "results": [r.to_obj() for r in self.results],
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [
            "verification report",
            f"corpus: {self.corpus_id} ({len(self.group_specs())} groups)",
            f"suite: {self.suite}",
            f"version: {self.version}",
            "",
        ]
        tallies = self.tallies()
        if tallies:
            width = max(len(c) for c in tallies)
            lines.append(f"{'check'.ljust(width)}  pass  fail  skip")
            for cid in tallies:
                row = tallies[cid]
                lines.append(
                    f"{cid.ljust(width)}  {row['pass']:4d}  {row['fail']:4d}"
                    f"  {row['skipped']:4d}"
                )
            lines.append("")
        fails = self.failures()
        if fails:
            lines.append(f"failures ({len(fails)}):")
            for res in fails:
                lines.append(f"  {res.check_id} on {res.group_spec}")
                for w in res.witnesses:
                    lines.append(
                        f"    chi_{w.chi_index}: multiplicities "
                        f"{list(w.multiplicities)} {w.to_obj()['data']}"
                    )
                for note in res.notes:
                    lines.append(f"    note: {note}")
        else:
            lines.append("failures: none")
        skips = [r for r in self.results if r.hypothesis_status != H_SATISFIED]
        if skips:
            lines.append("")
            lines.append(f"skips ({len(skips)}):")
            for res in skips:
                lines.append(
                    f"  {res.check_id} on {res.group_spec}"
                    f" [{res.hypothesis_status}]: {res.notes[0]}"
                )
        return "\n".join(lines) + "\n"


def _provenance_digest(table: CharacterTable) -> str:
    p = table.provenance
    text = (
        f"{table.group.spec}|{table.conductor}|{p.prime}|{p.zeta_image}|"
        f"{p.version}|{','.join(str(d) for d in table.degrees)}"
    )
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def corpus_specs(corpus: str) -> tuple:
    """Resolve a corpus name or file path into an ordered spec tuple."""
    if corpus == "default":
        return DEFAULT_CORPUS
    if os.path.isfile(corpus):
        specs = []
        try:
            with open(corpus) as fh:
                for line in fh:
                    line = line.strip()
                    if line and not line.startswith("#"):
                        specs.append(line)
        except OSError as exc:
            raise BadCorpusSpec(f"cannot read corpus file {corpus}: {exc}") from exc
        return tuple(specs)
    raise BadCorpusSpec(f"unknown corpus {corpus!r} (not a name or a readable file)")


def run_corpus(
    corpus: str = "default",
    suite: str = "all",
    cache_dir: Optional[str] = None,
    use_cache: bool = True,
) -> Report:
    """Run a suite of checks over every group of a corpus."""
    if suite not in SUITES:
        raise BadParameters(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    specs = corpus_specs(corpus)
    results = []
    provenance = {}
    timings = {}
    for spec in specs:
        try:
            G = from_spec(spec)
        except CharkitError as exc:
            raise BadCorpusSpec(f"bad corpus entry {spec!r}: {exc}") from exc
        table = cached_table(G, cache_dir=cache_dir, use_cache=use_cache)
        provenance[spec] = _provenance_digest(table)
        for cid in SUITES[suite]:
            start = time.perf_counter()
            results.append(CHECKS[cid](table))
            timings[(spec, cid)] = time.perf_counter() - start
    return Report(
        corpus_id=corpus,
        suite=suite,
        results=tuple(results),
        provenance=provenance,
        timings=timings,
    )
