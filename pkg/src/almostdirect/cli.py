"""Command line interface and the spec file format.

A spec file describes an almost-direct product of free groups::

    # comments run to end of line
    ranks = 1 2 2
    mode = magnus
    action 2 1 1 = B(1,2) T(1;2,3)^-1    # x(1,1) acting on block 2

The header ``ranks`` lists the block ranks.  ``mode`` is ``magnus``
(default) or ``images``; it fixes the shape of the action lines.  A magnus
action line ``action J I P = <IA word>`` gives the automorphism by which
``x(I,P)`` acts on block ``J``, written in the basic IA generators
``B(a,b)`` and ``T(a;s,t)`` with optional integer exponents.  An images
action line ``action J I P : Q -> <word>`` gives the image of ``x(J,Q)``
instead; omitted generators keep their identity image.  Omitted action
lines mean the trivial action.  A file may instead consist of a single
``builtin NAME ARG...`` line.

Subcommands: ``present``, ``cohomology``, ``hilbert``, ``lcs``, ``zcl``,
``tc`` and ``verify``.  Each takes the spec as a file path or an inline
``builtin:NAME:ARG...`` reference, and ``--porcelain`` switches to a
stable line-based format (first token is the record type; words, monomials
and ring elements are single space-free tokens).  Exit codes: 0 on
success, 1 on usage, parse or validation errors, 2 when a verification
fails.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .adp import (
    BUILTINS,
    IMAGES,
    MAGNUS,
    AdpSpec,
    build_presentation,
)
from .exterior import CohomologyRing, deg_lex_key, cohomology_ring
from .homology import h2_matrix, kernel_basis, verify_chain_map
from .invariants import (
    lcs_identity_holds,
    lcs_ranks,
    poincare_vector,
    tc_certificate,
    zcl_witness,
)
from .words import IAWord, Word, x

__all__ = ["SpecFileError", "parse_spec", "format_spec", "load_spec", "main"]


class SpecFileError(Exception):
    """A syntax or validation error with a source position."""

    def __init__(self, line, col, message):
        super().__init__(message)
        self.line = line
        self.col = col
        self.message = message

    def __str__(self):
        return "line %d, column %d: %s" % (self.line, self.col, self.message)


def _fail(lineno, col, message):
    raise SpecFileError(lineno, col, message)


_TOKEN_RE = re.compile(r"\S+")


def parse_spec(text):
    """Parse the spec file grammar into an :class:`AdpSpec`."""
    ranks = None
    mode = None
    builtin = None
    magnus_actions = {}
    image_maps = {}
    first_line = {}
    saw_statement = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = _TOKEN_RE.finditer(line)
        tokens = [(m.group(), m.start() + 1) for m in tokens]
        if not tokens:
            continue
        head, col = tokens[0]
        if builtin is not None:
            _fail(lineno, col, "builtin line must be the whole spec")
        if head == "builtin":
            if saw_statement:
                _fail(lineno, col, "builtin line must be the whole spec")
            builtin = _parse_builtin(lineno, tokens)
        elif head == "ranks":
            if ranks is not None:
                _fail(lineno, col, "duplicate ranks line")
            ranks = _parse_ranks(lineno, tokens)
        elif head == "mode":
            if mode is not None:
                _fail(lineno, col, "duplicate mode line")
            if magnus_actions or image_maps:
                _fail(lineno, col, "mode must come before action lines")
            mode = _parse_mode(lineno, tokens)
        elif head == "action":
            if ranks is None:
                _fail(lineno, col, "ranks must come before action lines")
            _parse_action(
                lineno,
                line,
                tokens,
                ranks,
                mode or MAGNUS,
                magnus_actions,
                image_maps,
                first_line,
            )
        else:
            _fail(lineno, col, "unknown directive %r" % head)
        saw_statement = True
    if builtin is not None:
        return builtin
    if ranks is None:
        _fail(1, 1, "spec has no ranks line")
    actions = {key: (MAGNUS, ia) for key, ia in magnus_actions.items()}
    for (i, j, p), qmap in image_maps.items():
        images = tuple(
            qmap.get(q, x(j, q)) for q in range(1, ranks[j - 1] + 1)
        )
        actions[(i, j, p)] = (IMAGES, images)
    try:
        return AdpSpec(ranks, actions)
    except ValueError as err:
        line, col = min(first_line.values(), default=(1, 1))
        _fail(line, col, str(err))


def _expect_int(lineno, token, col, minimum=None, what="integer"):
    try:
        value = int(token)
    except ValueError:
        _fail(lineno, col, "expected %s, got %r" % (what, token))
    if minimum is not None and value < minimum:
        _fail(lineno, col, "%s must be at least %d" % (what, minimum))
    return value


def _parse_builtin(lineno, tokens):
    if len(tokens) < 2:
        _fail(lineno, tokens[0][1], "builtin needs a name")
    name, col = tokens[1]
    if name not in BUILTINS:
        _fail(
            lineno,
            col,
            "unknown builtin %r (choose from %s)"
            % (name, ", ".join(sorted(BUILTINS))),
        )
    fn, nargs = BUILTINS[name]
    args = tokens[2:]
    if len(args) != nargs:
        _fail(
            lineno,
            tokens[0][1],
            "builtin %s takes %d argument(s), got %d"
            % (name, nargs, len(args)),
        )
    values = [
        _expect_int(lineno, tok, col, what="builtin argument")
        for tok, col in args
    ]
    try:
        return fn(*values)
    except ValueError as err:
        _fail(lineno, tokens[0][1], str(err))


def _parse_ranks(lineno, tokens):
    if len(tokens) < 2 or tokens[1][0] != "=":
        _fail(lineno, tokens[0][1], "expected 'ranks = n1 n2 ...'")
    if len(tokens) < 3:
        _fail(lineno, tokens[1][1], "ranks needs at least one block")
    return tuple(
        _expect_int(lineno, tok, col, minimum=1, what="rank")
        for tok, col in tokens[2:]
    )


def _parse_mode(lineno, tokens):
    if len(tokens) != 3 or tokens[1][0] != "=":
        _fail(lineno, tokens[0][1], "expected 'mode = magnus' or 'mode = images'")
    value, col = tokens[2]
    if value not in (MAGNUS, IMAGES):
        _fail(lineno, col, "mode must be 'magnus' or 'images'")
    return value


def _parse_action(
    lineno, line, tokens, ranks, mode, magnus_actions, image_maps, first_line
):
    if len(tokens) < 5:
        _fail(lineno, tokens[0][1], "action line too short")
    j = _expect_int(lineno, *tokens[1], what="target block")
    i = _expect_int(lineno, *tokens[2], what="acting block")
    p = _expect_int(lineno, *tokens[3], what="acting index")
    l = len(ranks)
    if not (1 <= i < j <= l):
        _fail(lineno, tokens[1][1], "blocks must satisfy 1 <= I < J <= %d" % l)
    if not (1 <= p <= ranks[i - 1]):
        _fail(
            lineno,
            tokens[3][1],
            "acting index %d exceeds rank %d of block %d"
            % (p, ranks[i - 1], i),
        )
    sep, sep_col = tokens[4]
    if sep == "=":
        if mode != MAGNUS:
            _fail(lineno, sep_col, "'=' action line in images mode")
        if (i, j, p) in magnus_actions:
            _fail(lineno, tokens[0][1], "duplicate action %d %d %d" % (j, i, p))
        payload_col = sep_col + 1
        payload = line[sep_col:]
        try:
            ia = IAWord.parse(ranks[j - 1], payload)
        except ValueError as err:
            _fail(lineno, payload_col + 1, str(err))
        magnus_actions[(i, j, p)] = ia
        first_line.setdefault((i, j, p), (lineno, tokens[0][1]))
    elif sep == ":":
        if mode != IMAGES:
            _fail(lineno, sep_col, "':' action line needs 'mode = images'")
        if len(tokens) < 7 or tokens[6][0] != "->":
            _fail(lineno, sep_col, "expected 'action J I P : Q -> word'")
        q = _expect_int(lineno, *tokens[5], what="image index")
        if not (1 <= q <= ranks[j - 1]):
            _fail(
                lineno,
                tokens[5][1],
                "image index %d exceeds rank %d of block %d"
                % (q, ranks[j - 1], j),
            )
        qmap = image_maps.setdefault((i, j, p), {})
        if q in qmap:
            _fail(
                lineno,
                tokens[5][1],
                "duplicate image for x(%d,%d) under action %d %d %d"
                % (j, q, j, i, p),
            )
        payload_col = tokens[6][1] + 2
        payload = line[payload_col - 1 :]
        try:
            qmap[q] = Word.parse(payload)
        except ValueError as err:
            _fail(lineno, payload_col, str(err))
        first_line.setdefault((i, j, p), (lineno, tokens[0][1]))
    else:
        _fail(lineno, sep_col, "expected '=' or ':' after the action key")


def format_spec(spec):
    """Write a spec in the file grammar; inverse of :func:`parse_spec`.

    All-magnus specs print as magnus files; anything else normalizes to
    images mode.
    """
    lines = ["ranks = " + " ".join(str(n) for n in spec.ranks)]
    kinds = {kind for kind, _ in spec.actions.values()}
    keys = sorted(spec.actions, key=lambda k: (k[1], k[0], k[2]))
    if kinds <= {MAGNUS}:
        lines.append("mode = magnus")
        for i, j, p in keys:
            _, ia = spec.actions[(i, j, p)]
            lines.append("action %d %d %d = %s" % (j, i, p, ia))
    else:
        lines.append("mode = images")
        for i, j, p in keys:
            for q in range(1, spec.ranks[j - 1] + 1):
                image = spec.action_image(i, j, p, q)
                if image != x(j, q):
                    lines.append(
                        "action %d %d %d : %d -> %s" % (j, i, p, q, image)
                    )
    return "\n".join(lines) + "\n"


def load_spec(argument):
    """Load a spec from a path or an inline ``builtin:NAME:ARG`` reference."""
    if argument.startswith("builtin:"):
        parts = argument.split(":")
        name = parts[1] if len(parts) > 1 else ""
        if name not in BUILTINS:
            raise ValueError(
                "unknown builtin %r (choose from %s)"
                % (name, ", ".join(sorted(BUILTINS)))
            )
        fn, nargs = BUILTINS[name]
        raw = parts[2:]
        if len(raw) != nargs:
            raise ValueError(
                "builtin %s takes %d argument(s), got %d"
                % (name, nargs, len(raw))
            )
        return fn(*[int(a) for a in raw])
    text = Path(argument).read_text(encoding="utf-8")
    return parse_spec(text)


def word_token(w):
    return str(w).replace(" ", "")


def mono_token(mono):
    return "".join("e(%d,%d)" % g for g in mono) or "1"


def elem_token(elem):
    if elem.is_zero():
        return "0"
    parts = []
    for mono in sorted(elem.terms, key=deg_lex_key):
        c = elem.terms[mono]
        parts.append("%s%s*%s" % ("+" if c > 0 else "", c, mono_token(mono)))
    return "".join(parts)


def tensor_token(elem):
    if elem.is_zero():
        return "0"
    parts = []
    for ml, mr in sorted(elem.terms):
        c = elem.terms[(ml, mr)]
        parts.append(
            "%s%s*%s(x)%s"
            % ("+" if c > 0 else "", c, mono_token(ml), mono_token(mr))
        )
    return "".join(parts)


def _elem_pretty(elem):
    return str(elem)


def _spec_header(spec, porcelain):
    if porcelain:
        return ["ranks " + " ".join(str(n) for n in spec.ranks)]
    label = spec.name or "spec"
    return [
        "%s: blocks %s" % (label, " ".join(str(n) for n in spec.ranks)),
    ]


def cmd_present(args):
    spec = load_spec(args.spec)
    pres = build_presentation(spec, pairing=args.pairing)
    out = _spec_header(spec, args.porcelain)
    if args.porcelain:
        for key in pres.keys():
            rel = pres[key]
            i, j, p, q = key
            out.append(
                "relation %d %d %d %d %s" % (i, j, p, q, word_token(rel.word))
            )
            for k, (u, v) in enumerate(rel.pairs, start=1):
                out.append(
                    "pair %d %d %d %d %d %s %s"
                    % (i, j, p, q, k, word_token(u), word_token(v))
                )
    else:
        gens = " ".join("x(%d,%d)" % g for g in spec.generators())
        out.append("generators: " + gens)
        out.append("relations: %d" % len(pres))
        for key in pres.keys():
            rel = pres[key]
            out.append(
                "  x(%d,%d) x(%d,%d) = x(%d,%d) x(%d,%d) w,  w = %s"
                % (rel.j, rel.q, rel.i, rel.p, rel.i, rel.p, rel.j, rel.q, rel.word)
            )
            if rel.pairs:
                pairs = "  ".join(
                    "[%s, %s]" % (u, v) for u, v in rel.pairs
                )
                out.append("    w as commutators: " + pairs)
    print("\n".join(out))
    return 0


def cmd_cohomology(args):
    spec = load_spec(args.spec)
    ring = cohomology_ring(spec)
    out = _spec_header(spec, args.porcelain)
    if args.porcelain:
        out.append("generators " + " ".join(mono_token((g,)) for g in ring.gens))
        for k in ring.relations:
            out.append(
                "eta %d %d %d %s"
                % (k.j, k.p, k.q, elem_token(ring.eta(k.j, k.p, k.q)))
            )
        if args.basis:
            for deg in range(0, ring.num_blocks + 1):
                monos = " ".join(mono_token(m) for m in ring.basis(deg))
                out.append("basis %d %s" % (deg, monos or "-"))
    else:
        out.append(
            "generators: " + " ".join(mono_token((g,)) for g in ring.gens)
        )
        out.append("relations (ideal generators):")
        for k in ring.relations:
            out.append(
                "  eta(%d;%d,%d) = %s"
                % (k.j, k.p, k.q, ring.eta(k.j, k.p, k.q))
            )
        if args.basis:
            for deg in range(0, ring.num_blocks + 1):
                monos = ring.basis(deg)
                shown = " ".join(mono_token(m) for m in monos) or "-"
                out.append("H^%d basis (%d): %s" % (deg, len(monos), shown))
    print("\n".join(out))
    return 0


def cmd_hilbert(args):
    spec = load_spec(args.spec)
    betti = poincare_vector(spec.ranks)
    out = _spec_header(spec, args.porcelain)
    if args.porcelain:
        out.append("poincare " + " ".join(str(b) for b in betti))
    else:
        out.append(
            "poincare polynomial coefficients: "
            + " ".join(str(b) for b in betti)
        )
    failed = False
    if args.check:
        ring = cohomology_ring(spec)
        for deg, expected in enumerate(betti):
            actual = ring.dimension(deg)
            ok = actual == expected
            failed = failed or not ok
            if args.porcelain:
                out.append(
                    "dim %d %d %d %s"
                    % (deg, actual, expected, "ok" if ok else "fail")
                )
            else:
                out.append(
                    "  H^%d: basis %d, poincare %d %s"
                    % (deg, actual, expected, "ok" if ok else "MISMATCH")
                )
    print("\n".join(out))
    return 2 if failed else 0


def cmd_lcs(args):
    spec = load_spec(args.spec)
    phi = lcs_ranks(spec.ranks, args.max_k)
    ok = lcs_identity_holds(spec.ranks, args.max_k)
    out = _spec_header(spec, args.porcelain)
    if args.porcelain:
        for k, value in enumerate(phi, start=1):
            out.append("phi %d %d" % (k, value))
        out.append("lcs-identity %s" % ("ok" if ok else "fail"))
    else:
        out.append(
            "lower central series ranks: "
            + " ".join(
                "phi_%d=%d" % (k, v) for k, v in enumerate(phi, start=1)
            )
        )
        out.append(
            "product identity through degree %d: %s"
            % (args.max_k, "ok" if ok else "MISMATCH")
        )
    print("\n".join(out))
    return 0 if ok else 2


def cmd_zcl(args):
    spec = load_spec(args.spec)
    from .adp import extend_with_torus

    ext = extend_with_torus(spec, args.torus)
    ring = cohomology_ring(ext)
    wit = zcl_witness(ring)
    out = _spec_header(ext, args.porcelain)
    if args.porcelain:
        out.append("zcl-length %d" % wit.length)
        out.append("zcl-factors %d" % wit.num_factors)
        out.append("zcl-element %s" % tensor_token(wit.element))
    else:
        out.append(
            "longest nonzero zero-divisor product: %d of %d factors"
            % (wit.length, wit.num_factors)
        )
        out.append("witness element: %s" % wit.element)
    print("\n".join(out))
    return 0


def cmd_tc(args):
    spec = load_spec(args.spec)
    cert = tc_certificate(spec, torus_rank=args.torus)
    from .adp import extend_with_torus

    ext = extend_with_torus(spec, args.torus)
    out = _spec_header(ext, args.porcelain)
    if args.porcelain:
        out.append("tc-lower %d" % cert.lower_bound)
        out.append("tc-upper %d" % cert.upper_bound)
        out.append(
            "tc-exact %s" % (cert.exact if cert.exact is not None else "none")
        )
        out.append("tc-witness-degree %d" % cert.witness_degree)
        out.append("tc-free-blocks %d" % cert.free_blocks)
        out.append("tc-torus-blocks %d" % cert.torus_blocks)
    else:
        out.append(
            "lower bound %d = witness product length %d + 1"
            % (cert.lower_bound, cert.witness_degree)
        )
        out.append(
            "upper bound %d = 2*%d blocks + %d torus blocks + 1"
            % (cert.upper_bound, cert.free_blocks, cert.torus_blocks)
        )
        if cert.exact is not None:
            out.append("tc = %d (bounds agree)" % cert.exact)
        else:
            out.append(
                "tc in [%d, %d] (bounds differ)"
                % (cert.lower_bound, cert.upper_bound)
            )
    print("\n".join(out))
    return 0


def cmd_verify(args):
    spec = load_spec(args.spec)
    results = []

    pres = build_presentation(spec)
    report = verify_chain_map(pres)
    results.append(("chain-map", report.ok, ""))

    matrix = h2_matrix(pres)
    results.append(("matrix-rank", matrix.has_full_row_rank(), ""))

    kernel = kernel_basis(matrix)
    in_kernel = True
    for elem in kernel:
        terms = elem.terms()
        for row_label in matrix.row_labels:
            total = 0
            for col, value in matrix.row(row_label).items():
                total += value * terms.get(col, 0)
            if total:
                in_kernel = False
    results.append(("kernel", in_kernel, ""))

    pres_last = build_presentation(spec, pairing="last")
    same = h2_matrix(pres_last).entries == matrix.entries
    results.append(("pairing-independence", same, ""))

    ring = CohomologyRing(spec.ranks, kernel)
    g_report = ring.groebner_verify()
    detail = "degrees 2..%d" % (ring.num_blocks + 1)
    results.append(("groebner", g_report.ok, detail))

    betti = poincare_vector(spec.ranks)
    hilbert_ok = all(
        ring.dimension(k) == betti[k] for k in range(len(betti))
    ) and ring.dimension(len(betti)) == 0
    results.append(("hilbert", hilbert_ok, ""))

    results.append(("lcs-identity", lcs_identity_holds(spec.ranks, 10), ""))

    normalized = parse_spec(format_spec(spec))
    round_trip = parse_spec(format_spec(normalized)) == normalized
    if {kind for kind, _ in spec.actions.values()} <= {MAGNUS}:
        round_trip = round_trip and normalized == spec
    results.append(("round-trip", round_trip, ""))

    out = _spec_header(spec, args.porcelain)
    if spec.has_uncertified_images and not args.porcelain:
        out.append(
            "note: images checked on the abelianization only;"
            " invertibility is not certified"
        )
    failed = False
    for name, ok, detail in results:
        failed = failed or not ok
        status = "ok" if ok else "fail"
        if args.porcelain:
            out.append("verify %s %s" % (name, status))
        else:
            extra = " (%s)" % detail if detail else ""
            out.append("  %-22s %s%s" % (name, status, extra))
    if args.porcelain:
        out.append("verify-summary %s" % ("fail" if failed else "ok"))
    else:
        out.append("summary: %s" % ("FAIL" if failed else "all checks passed"))
    print("\n".join(out))
    return 2 if failed else 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("error: %s\n" % message)
        raise SystemExit(1)


def build_parser():
    parser = _Parser(
        prog="almostdirect",
        description="Presentations, cohomology and topological complexity"
        " of almost-direct products of free groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "spec",
            help="path to a spec file, or builtin:NAME:ARG"
            " (builtins: %s)" % ", ".join(sorted(BUILTINS)),
        )
        p.add_argument(
            "--porcelain",
            action="store_true",
            help="stable machine-readable output",
        )
        p.set_defaults(func=func)
        return p

    p = add("present", cmd_present, "print the commutator presentation")
    p.add_argument(
        "--pairing",
        choices=("first", "last"),
        default="first",
        help="commutator decomposition strategy",
    )
    p = add("cohomology", cmd_cohomology, "print the cohomology ring")
    p.add_argument(
        "--basis", action="store_true", help="also list the quotient basis"
    )
    p = add("hilbert", cmd_hilbert, "print the Poincare polynomial")
    p.add_argument(
        "--check",
        action="store_true",
        help="cross-check against the computed quotient basis",
    )
    p = add("lcs", cmd_lcs, "print lower central series ranks")
    p.add_argument(
        "--max-k", type=int, default=10, help="largest degree to print"
    )
    p = add("zcl", cmd_zcl, "print the zero-divisor cup length witness")
    p.add_argument(
        "--torus", type=int, default=0, help="multiply by Z^M first"
    )
    p = add("tc", cmd_tc, "certify topological complexity")
    p.add_argument(
        "--torus", type=int, default=0, help="multiply by Z^M first"
    )
    add("verify", cmd_verify, "run all internal consistency checks")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 1
    try:
        return args.func(args)
    except SpecFileError as err:
        print("error: %s" % err, file=sys.stderr)
        return 1
    except (OSError, ValueError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
