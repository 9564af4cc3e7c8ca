"""
``symring``: command-line front end.

Exit status 0 on success, 1 for unreadable or invalid input, 2 when a degree
exceeds the guard and ``--force`` was not given. Output is deterministic and
every number is printed as an exact fraction.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import io
from .characters import PartitionMultiset, character_table, lr_product, plethysm
from .dft import fourier, inverse_fourier
from .errors import GuardError, SymringError
from .identities import orthogonal_identities, reduce_expression
from .ideal_decomp import decompose, generated_multiplicities
from .partitions import format_partition, parse_partition
from .perm import DEFAULT_GUARD, check_guard, enumerate_group
from .tensor_symmetry import MetricSignature, contraction_space_blocks, symmetry_ideal_from_identities
from .wedderburn import left_ideal_basis

__all__ = ["RunConfig", "main", "build_parser"]


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    guard: int = DEFAULT_GUARD
    force: bool = False
    json: bool = False
    side: str = "left"
    use_multiplicities: bool = False
    mode: str = "universal"
    d: int | None = None
    signature: MetricSignature | None = None

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        sig = io.parse_signature(args.signature) if getattr(args, "signature", None) else None
        d = getattr(args, "d", None)
        if sig is not None:
            if d is not None and d != sig.dim:
                raise ValueError(f"-d {d} disagrees with a signature of length {sig.dim}")
            d = sig.dim
        inputs = [str(x) for x in (getattr(args, "file", None), getattr(args, "symmetry", None)) if x]
        return cls(
            command=args.command, inputs=inputs, guard=args.guard, force=args.force, json=args.json,
            side=getattr(args, "side", "left"), use_multiplicities=getattr(args, "use_multiplicities", False),
            mode=getattr(args, "mode", "universal"), d=d, signature=sig,
        )

    def check(self, r: int) -> None:
        check_guard(r, self.guard, self.force)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="largest degree accepted without --force (default 8)")
    p.add_argument("--force", action="store_true", help="run even when the degree exceeds the guard")
    p.add_argument("--json", action="store_true", help="emit a JSON document instead of text")
    return p


def _w_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=["universal", "dim-limited"], default="universal")
    p.add_argument("-d", type=int, default=None, help="vector space dimension (dim-limited mode)")
    p.add_argument("--signature", default=None, help="metric signature such as +,+,+,-")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="symring", description=__doc__.split("\n\n")[0].strip(), parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chartable", parents=[common], help="character table of S_r")
    p.add_argument("r", type=int)
    p.add_argument("--figure", help="also write a heatmap to this image file")

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson product of partitions")
    p.add_argument("partitions", nargs="+", help="partitions such as 2,1")

    p = sub.add_parser("plethysm", parents=[common], help="constituents of alpha (.) [n]")
    p.add_argument("alpha", help="partition such as 2 or a multiset such as '[2] + [1,1]'")
    p.add_argument("-n", type=int, required=True)

    p = sub.add_parser("dft", parents=[common], help="Fourier transform of a group-ring element file")
    p.add_argument("file")
    p.add_argument("--inverse", action="store_true", help="read a block file and print the group-ring element")

    p = sub.add_parser("decompose", parents=[common], help="primitive idempotents of the ideal generated by a file")
    p.add_argument("file", help="group-ring element file (blank-line separated stanzas give several generators)")
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.add_argument("--use-multiplicities", action="store_true", help="prune the sweep with constituent multiplicities")
    p.add_argument("--out", help="directory receiving h_XX.txt, total.txt and summary.tsv")
    p.add_argument("--figure", help="also write a bar chart of the constituents")

    p = sub.add_parser("symclass", parents=[common], help="symmetry class from a symmetry spec file")
    p.add_argument("file")
    p.add_argument("--out", help="write the class idempotent to this element file")

    p = sub.add_parser("wspace", parents=[common], help="the space W of a contraction pattern")
    p.add_argument("file", help="symmetry spec file")
    p.add_argument("--contraction", required=True, help="'l=<l> b0=<i,..>' or a file containing it")
    _w_options(p)
    p.add_argument("--elements", action="store_true", help="print the basis as group-ring elements")

    p = sub.add_parser("identities", parents=[common], help="linear identities of a symmetry class")
    p.add_argument("file", help="symmetry spec file")
    p.add_argument("--contraction", help="'l=<l> b0=<i,..>' or a file containing it")
    p.add_argument("--candidates", help="expression file whose support is the candidate set (default: all of S_r)")
    _w_options(p)

    p = sub.add_parser("reduce", parents=[common], help="normal form of an expression file")
    p.add_argument("file", help="expression file")
    p.add_argument("--symmetry", required=True, help="symmetry spec file")
    p.add_argument("--all-candidates", action="store_true", help="reduce over all of S_r instead of the expression support")
    _w_options(p)
    return parser


# --------------------------------------------------------------------------- helpers


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _read(path: str) -> str:
    try:
        return io.read_text(path)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror}") from None


def _parse_elements(text: str, source: str) -> list:
    """One element per blank-line separated stanza; a leading ``r=`` header applies to all of them."""
    lines = text.splitlines()
    header: int | None = None
    stanzas: list[list[int]] = [[]]
    for n, raw in enumerate(lines):
        content = raw.split("#", 1)[0].strip()
        if not content:
            if stanzas[-1]:
                stanzas.append([])
        elif content.startswith("r=") and header is None and not any(stanzas):
            header = n
        else:
            stanzas[-1].append(n)
    stanzas = [st for st in stanzas if st]
    if not stanzas:
        return [io.parse_element(text, source)]
    out = []
    for st in stanzas:
        keep = set(st) | {header}
        # blank out other lines so parse errors keep their original line numbers
        body = [raw if n in keep else "" for n, raw in enumerate(lines)]
        out.append(io.parse_element("\n".join(body), source))
    return out


def _contraction(text: str, r: int):
    path = Path(text)
    if path.is_file():
        text = _read(text).split("#", 1)[0]
    return io.parse_contraction(text, r, source=str(path) if path.is_file() else None)


def _symmetry(cfg: RunConfig, path: str, decompose_class: bool = False):
    r, gens = io.parse_symmetry(_read(path), path)
    cfg.check(r)
    return symmetry_ideal_from_identities(gens, decompose_class=decompose_class, degree=r)


def _w_basis(cfg: RunConfig, sc, spec):
    mode = "dim_limited" if cfg.mode == "dim-limited" else "universal"
    if mode == "dim_limited" and cfg.d is None:
        raise ValueError("--mode dim-limited needs -d or --signature")
    return contraction_space_blocks(sc.idempotent, spec, mode, cfg.d, cfg.signature)


def _multiset_json(m: PartitionMultiset) -> dict:
    return {"text": str(m), "constituents": m.to_json()}


# --------------------------------------------------------------------------- commands


def cmd_chartable(cfg: RunConfig, args) -> None:
    cfg.check(args.r)
    table = character_table(args.r, cfg.guard, cfg.force)
    if args.figure:
        from .report import character_table_figure
        character_table_figure(table, args.figure)
    if cfg.json:
        _emit(io.dumps_json({
            "r": table.degree,
            "irreps": [list(lam) for lam in table.irreps],
            "classes": [list(mu) for mu in table.classes],
            "class_sizes": list(table.class_sizes),
            "values": [[str(v) for v in row] for row in table.values],
        }))
    else:
        _emit(table.to_tsv())


def _parse_multiset(text: str) -> PartitionMultiset:
    if "[" in text or "+" in text or "*" in text:
        return PartitionMultiset.parse(text)
    return PartitionMultiset({parse_partition(text): 1})


def cmd_lr(cfg: RunConfig, args) -> None:
    factors = [_parse_multiset(x) for x in args.partitions]
    cfg.check(sum(f.weight or 0 for f in factors))
    m = lr_product(factors)
    _emit(io.dumps_json(_multiset_json(m)) if cfg.json else f"{m}\n")


def cmd_plethysm(cfg: RunConfig, args) -> None:
    alpha = _parse_multiset(args.alpha)
    if alpha.weight is None:
        raise ValueError("alpha must be nonzero and homogeneous")
    m = plethysm(alpha, args.n, cfg.guard, cfg.force)
    _emit(io.dumps_json(_multiset_json(m)) if cfg.json else f"{m}\n")


def cmd_dft(cfg: RunConfig, args) -> None:
    text = _read(args.file)
    if args.inverse:
        A = io.parse_blocks(text, args.file)
        cfg.check(A.degree)
        a = inverse_fourier(A, cfg.guard, cfg.force)
        _emit(io.dumps_json(io.element_to_json(a)) if cfg.json else io.format_element(a))
    else:
        a = io.parse_element(text, args.file)
        cfg.check(a.degree)
        A = fourier(a)
        _emit(io.dumps_json(io.blocks_to_json(A)) if cfg.json else io.format_blocks(A))


def cmd_decompose(cfg: RunConfig, args) -> None:
    gens = _parse_elements(_read(args.file), args.file)
    r = gens[0].degree
    if any(g.degree != r for g in gens):
        raise ValueError("generators have different degrees")
    cfg.check(r)
    bounds = generated_multiplicities(gens, cfg.side) if cfg.use_multiplicities else None
    res = decompose(gens, cfg.side, bounds)
    rows = []
    for k, (lam, seed, h) in enumerate(zip(res.labels, res.seeds, res.idempotents), 1):
        rows.append((k, format_partition(lam), h.ideal_dimension(), str(seed)))
    mult = res.multiplicities()
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        width = max(2, len(str(len(res))))
        for k, h in enumerate(res.group_ring_idempotents(), 1):
            (out / f"h_{k:0{width}d}.txt").write_text(io.format_element(h))
        (out / "total.txt").write_text(io.format_element(res.total_group_ring()))
        (out / "summary.tsv").write_text(_summary_tsv(rows))
    if args.figure:
        from .report import multiplicity_figure
        multiplicity_figure(mult, args.figure, f"{cfg.side} ideal of dimension {res.dimension()}")
    if cfg.json:
        doc = {
            "r": r, "side": cfg.side, "dimension": res.dimension(), "multiplicities": _multiset_json(mult),
            "inspections": res.inspections,
            "components": [{"index": k, "partition": lam, "dimension": dim, "seed": seed} for k, lam, dim, seed in rows],
        }
        _emit(io.dumps_json(doc))
        return
    _emit(_summary_tsv(rows))
    _emit(f"# dimension {res.dimension()}\n# constituents {mult}\n# seed inspections {res.inspections}\n")


def _summary_tsv(rows) -> str:
    lines = ["k\tpartition\tdimension\tseed"]
    lines.extend(f"{k}\t{lam}\t{dim}\t{seed}" for k, lam, dim, seed in rows)
    return "\n".join(lines) + "\n"


def cmd_symclass(cfg: RunConfig, args) -> None:
    sc = _symmetry(cfg, args.file)
    mult = sc.multiplicities()
    if args.out:
        Path(args.out).write_text(io.format_element(sc.group_ring_idempotent()))
    if cfg.json:
        _emit(io.dumps_json({"r": sc.degree, "empty": sc.empty, "dimension": sc.dimension,
                             "multiplicities": _multiset_json(mult)}))
    else:
        _emit(f"r={sc.degree}\nempty={'yes' if sc.empty else 'no'}\ndimension={sc.dimension}\nconstituents={mult}\n")


def cmd_wspace(cfg: RunConfig, args) -> None:
    sc = _symmetry(cfg, args.file)
    spec = _contraction(args.contraction, sc.degree)
    basis = _w_basis(cfg, sc, spec)
    counts: dict = {}
    for x in basis:
        counts[x.partition] = counts.get(x.partition, 0) + 1
    ordered = sorted(counts.items(), reverse=True)
    elems = [x.to_group_ring() for x in basis] if args.elements else None
    if cfg.json:
        doc = {"r": sc.degree, "contraction": io.format_contraction(spec), "mode": cfg.mode,
               "dimension": len(basis), "blocks": [{"partition": list(k), "dimension": v} for k, v in ordered]}
        if elems is not None:
            doc["basis"] = [io.element_to_json(a) for a in elems]
        _emit(io.dumps_json(doc))
        return
    lines = [f"r={sc.degree} {io.format_contraction(spec)}", f"dimension={len(basis)}"]
    lines.extend(f"block {format_partition(k)}\t{v}" for k, v in ordered)
    _emit("\n".join(lines) + "\n")
    if elems is not None:
        for a in elems:
            _emit("\n" + io.format_element(a, header=False))


def _identity_basis(cfg: RunConfig, sc, spec, candidates):
    if spec is None:
        basis = left_ideal_basis(sc.idempotent)
    else:
        basis = _w_basis(cfg, sc, spec)
    return orthogonal_identities(basis, candidates)


def cmd_identities(cfg: RunConfig, args) -> None:
    sc = _symmetry(cfg, args.file)
    spec = _contraction(args.contraction, sc.degree) if args.contraction else None
    if args.candidates:
        tau = io.parse_expression(_read(args.candidates), args.candidates)
        if tau.degree != sc.degree:
            raise ValueError("candidate file and symmetry spec have different degrees")
        cands = tau.support()
        if not cands:
            raise ValueError("candidate expression is empty")
    else:
        cands = list(enumerate_group(sc.degree, cfg.guard, cfg.force))
    ids = _identity_basis(cfg, sc, spec, cands)
    if cfg.json:
        doc = {"r": sc.degree, "contraction": io.format_contraction(spec) if spec else None,
               "candidates": len(ids.candidates), "identities": [io.element_to_json(e.to_element())["terms"] for e in ids.expressions()]}
        _emit(io.dumps_json(doc))
    else:
        _emit(io.format_identities(ids, spec))


def cmd_reduce(cfg: RunConfig, args) -> None:
    tau = io.parse_expression(_read(args.file), args.file)
    sc = _symmetry(cfg, args.symmetry)
    if sc.degree != tau.degree:
        raise ValueError("expression and symmetry spec have different degrees")
    cands = list(enumerate_group(tau.degree, cfg.guard, cfg.force)) if args.all_candidates else tau.support()
    if not cands:
        _emit(io.format_expression(tau))
        return
    ids = _identity_basis(cfg, sc, tau.spec, cands)
    red = reduce_expression(tau, ids)
    if cfg.json:
        _emit(io.dumps_json({"r": red.degree, "contraction": io.format_contraction(red.spec) if red.spec else None,
                             "terms": io.element_to_json(red.to_element())["terms"]}))
    else:
        _emit(io.format_expression(red))


_COMMANDS = {
    "chartable": cmd_chartable, "lr": cmd_lr, "plethysm": cmd_plethysm, "dft": cmd_dft,
    "decompose": cmd_decompose, "symclass": cmd_symclass, "wspace": cmd_wspace,
    "identities": cmd_identities, "reduce": cmd_reduce,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        _COMMANDS[args.command](cfg, args)
    except GuardError as exc:
        print(f"symring: {exc}", file=sys.stderr)
        return 2
    except (SymringError, ValueError, ArithmeticError, OSError) as exc:
        print(f"symring: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
