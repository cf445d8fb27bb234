"""Command line interface.

Exit status: 0 success, 1 a lemma or theorem check failed, 2 bad input or
an invalid drawing, 3 search budget exceeded.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Optional

import click

from .construct import SearchExhausted, enumerate_gt, random_gt_word, twisted
from .cylinder import SweepWord, realize, validate_sweep_word
from .drawing import Drawing, DrawingError, crossing_set, planarize, validate_simple
from .exactgeom import Rat, rat_str
from .formats import (drawing_from_json, dumps, render_svg, serialize_drawing,
                      serialize_report, serialize_word, triangle_report_json, word_from_json)
from .triangles import (Level, analyze_triangles, count_empty, empty_star_triangles_at,
                        verify_suite)

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _plain(obj):
    """Turn witnesses (tuples, points, rationals) into JSON values."""
    if isinstance(obj, Rat):
        return rat_str(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_plain(x) for x in items]
    return obj


def _fail_input(exc: DrawingError):
    witness = "" if exc.witness is None else " " + json.dumps(_plain(exc.witness))
    raise _Exit(EXIT_INPUT, f"error: {exc}{witness}")


def _load(path: str) -> Drawing:
    """Read a drawing file, or a sweep-word file which is then realized."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Exit(EXIT_INPUT, f"error: cannot read {path}: {exc.strerror}")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _Exit(EXIT_INPUT, f"error: SCHEMA_ERROR: line {exc.lineno}: {exc.msg}")
    try:
        if isinstance(obj, dict) and "events" in obj:
            w = word_from_json(obj)
            validate_sweep_word(w).raise_if_failed()
            return realize(w)
        return drawing_from_json(obj)
    except DrawingError as exc:
        _fail_input(exc)


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _word_path(path: Path) -> Path:
    stem = path.name[:-5] if path.name.endswith(".json") else path.name
    return path.with_name(stem + ".word.json")


def _run(fn):
    """Map library errors onto exit codes."""
    try:
        fn()
    except _Exit as exc:
        click.echo(str(exc), err=True)
        sys.exit(exc.code)
    except SearchExhausted as exc:
        click.echo(f"error: SEARCH_EXHAUSTED: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    except DrawingError as exc:
        try:
            _fail_input(exc)
        except _Exit as ex2:
            click.echo(str(ex2), err=True)
            sys.exit(ex2.code)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)


@click.group()
@click.version_option(package_name="gtwist")
def main():
    """Generalized twisted drawings: generate, analyze, verify, enumerate."""


# --------------------------------------------------------------------------
# gen

def _gen_output(d: Drawing, w: Optional[SweepWord], out: Optional[str], svg: Optional[str], fmt: str):
    validate_simple(d).raise_if_failed()
    if out:
        path = Path(out)
        path.write_text(serialize_drawing(d), encoding="utf-8")
        if w is not None:
            _word_path(path).write_text(serialize_word(w), encoding="utf-8")
    if svg:
        Path(svg).write_text(render_svg(d, analyze_triangles(d)), encoding="utf-8")
    stats = {"crossings": len(crossing_set(d)), "empty": count_empty(d)}
    if fmt == "json":
        click.echo(dumps(stats), nl=False)
    else:
        click.echo(f"crossings={stats['crossings']} empty={stats['empty']}")


_format = click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
                       show_default=True)


@main.group()
def gen():
    """Write a drawing (and its sweep word) and print its statistics."""


@gen.command("twisted")
@click.option("--n", "n", type=int, required=True)
@click.option("-o", "--output", "out", type=click.Path(dir_okay=False))
@click.option("--svg", type=click.Path(dir_okay=False), help="also render an SVG picture")
@_format
def gen_twisted(n, out, svg, fmt):
    """Harborth's twisted drawing T_n."""
    def go():
        if n < 3:
            raise _Exit(EXIT_INPUT, "error: twisted drawings need --n >= 3")
        from .cylinder import extract_sweep_word
        d = twisted(n)
        _gen_output(d, extract_sweep_word(d), out, svg, fmt)
    _run(go)


@gen.command("random")
@click.option("--n", "n", type=int, required=True)
@click.option("--seed", type=int, required=True)
@click.option("--budget", type=int, default=None, help="node budget of the search")
@click.option("-o", "--output", "out", type=click.Path(dir_okay=False))
@click.option("--svg", type=click.Path(dir_okay=False))
@_format
def gen_random(n, seed, budget, out, svg, fmt):
    """A seeded random gt drawing of K_n."""
    def go():
        if n < 3:
            raise _Exit(EXIT_INPUT, "error: random gt drawings need --n >= 3")
        w = random_gt_word(n, seed) if budget is None else random_gt_word(n, seed, budget)
        _gen_output(realize(w), w, out, svg, fmt)
    _run(go)


# --------------------------------------------------------------------------
# analyze / verify / render

def _report_empty(d):
    reps = [r for r in analyze_triangles(d) if r.empty]
    obj = {"n": d.n, "count": len(reps), "triangles": [triangle_report_json(r) for r in reps]}
    lines = [f"empty={len(reps)}"]
    lines += [f"{'-'.join(map(str, r.triangle))} side={r.empty_side.value}" for r in reps]
    return obj, lines


def _report_star(d):
    per = {x: empty_star_triangles_at(d, x) for x in range(1, d.n + 1)}
    obj = {"n": d.n, "empty_star": {str(x): [list(t) for t in ts] for x, ts in per.items()}}
    lines = [f"{x}: " + " ".join("-".join(map(str, t)) for t in ts) for x, ts in per.items()]
    return obj, lines


def _report_crossings(d):
    cs = crossing_set(d)
    text = cs.export()
    pairs = text.splitlines()
    return {"n": d.n, "count": len(pairs), "pairs": pairs}, [f"crossings={len(pairs)}"] + pairs


def _report_cells(d):
    arr = planarize(d)
    cells = []
    for c in range(len(arr.faces)):
        cells.append({"id": c, "vertices": sorted(arr.cell_vertices(c))})
    obj = {"n": d.n, "count": len(cells), "outer": arr.outer, "cells": cells}
    if arr.o_cell is not None:
        obj["o_cell"] = arr.o_cell
    lines = [f"cells={len(cells)}"]
    for c in cells:
        tags = []
        if c["id"] == arr.outer:
            tags.append("outer")
        if c["id"] == arr.o_cell:
            tags.append("O")
        lines.append(f"{c['id']}: {' '.join(map(str, c['vertices']))}"
                     + (f" [{','.join(tags)}]" if tags else ""))
    return obj, lines


_REPORTS = {"empty": _report_empty, "star": _report_star, "crossings": _report_crossings,
            "cells": _report_cells}


@main.command()
@click.argument("path", type=click.Path())
@click.option("--report", type=click.Choice(sorted(_REPORTS)), default="empty", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="json",
              show_default=True)
@click.option("-o", "--output", "out", type=click.Path(dir_okay=False))
def analyze(path, report, fmt, out):
    """Empty triangles, star triangles, crossings or cells of a drawing."""
    def go():
        d = _load(path)
        validate_simple(d).raise_if_failed()
        obj, lines = _REPORTS[report](d)
        _emit(dumps(obj) if fmt == "json" else "\n".join(lines) + "\n", out)
    _run(go)


@main.command()
@click.argument("path", type=click.Path())
@click.option("--suite", type=click.Choice(["simple", "gt"]), default="gt", show_default=True)
@_format
def verify(path, suite, fmt):
    """Run the lemma checks; exit 1 on the first failing one."""
    def go():
        d = _load(path)
        rep = verify_suite(d, Level(suite))
        fail = rep.first_failure()
        if fmt == "json":
            click.echo(serialize_report(rep), nl=False)
        else:
            for key, r in rep.results.items():
                state = {True: "pass", False: "FAIL", None: "n/a"}[r.passed]
                click.echo(f"{key} {state}")
        if fail is not None:
            key, r = fail
            witness = json.dumps(_plain(r.witness), sort_keys=True)
            raise _Exit(EXIT_VERIFY, f"failed: {key} witness={witness}")
    _run(go)


@main.command()
@click.argument("path", type=click.Path())
@click.option("-o", "--output", "out", type=click.Path(dir_okay=False), required=True)
@click.option("--unroll", is_flag=True, help="strip view instead of the polar view")
@click.option("--no-empty", is_flag=True, help="do not highlight empty triangles")
def render(path, out, unroll, no_empty):
    """Render a drawing as SVG."""
    from .formats import RenderStyle

    def go():
        d = _load(path)
        validate_simple(d).raise_if_failed()
        reps = None if no_empty else analyze_triangles(d)
        _emit(render_svg(d, reps, RenderStyle(unroll=unroll)), out)
    _run(go)


# --------------------------------------------------------------------------
# enum

@main.command("enum")
@click.option("--n", "n", type=int, required=True)
@click.option("--budget", type=int, default=None, help="node budget (default: unlimited)")
@click.option("-o", "--output", "out", type=click.Path(file_okay=False), required=True)
@_format
def enum_cmd(n, budget, out, fmt):
    """All gt drawings of K_n up to weak isomorphism, one file set per class."""
    def go():
        if n < 2:
            raise _Exit(EXIT_INPUT, "error: --n must be at least 2")
        res = enumerate_gt(n, budget)
        root = Path(out)
        root.mkdir(parents=True, exist_ok=True)
        index = []
        for key, w in res.classes:
            d = realize(w)
            tag = key.digest()
            (root / f"{tag}.word.json").write_text(serialize_word(w), encoding="utf-8")
            (root / f"{tag}.drawing.json").write_text(serialize_drawing(d), encoding="utf-8")
            (root / f"{tag}.crossings.txt").write_text(crossing_set(d).export(), encoding="utf-8")
            index.append({"key": tag, "canonical": key.encode().decode(),
                          "size": res.sizes.get(key, 0), "empty": count_empty(d)})
        summary = {"n": n, "exhaustive": res.exhaustive, "nodes": res.nodes,
                   "classes": index}
        (root / "index.json").write_text(dumps(summary), encoding="utf-8")
        if fmt == "json":
            click.echo(dumps(summary), nl=False)
        else:
            click.echo(f"classes={len(index)} exhaustive={str(res.exhaustive).lower()}")
            for item in index:
                click.echo(f"{item['key']} empty={item['empty']}")
        if not res.exhaustive:
            raise _Exit(EXIT_BUDGET, f"budget exceeded after {res.nodes} nodes; partial result")
    _run(go)


if __name__ == "__main__":  # pragma: no cover
    main()
