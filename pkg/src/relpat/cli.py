"""Command-line front end.

Every subcommand prints one JSON object on stdout.  Decisions are data:
a refuted equivalence still exits 0.  Exit codes: 2 parse error,
3 precondition violation, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import charset, member as member_mod, nf, reversal
from .core import decomposition_vector, is_p23
from .errors import BudgetExceeded, ParseError, PreconditionViolated, RelPatError
from .subst import Sampled
from .text import expand_word, parse_pattern_file, pattern_text, serialize

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BUDGET, EXIT_INTERNAL = 0, 2, 3, 4, 1


def load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_pattern_file(text)


def guards(args) -> dict:
    return {"var_guard": args.var_guard, "word_guard": args.word_guard}


def _guards_for(rp, args) -> dict:
    return guards(args) if rp.kind != "len" else {}


def cmd_parse(args):
    rp = load(args.file)
    table = rp.groups
    out = {
        "alphabet": list(rp.alphabet),
        "relation": rp.kind,
        "pattern": pattern_text(rp),
        "groups": [list(g) for g in table.groups],
        "blocks": {
            "variable": [list(b) for b in rp.blocks.variable_blocks],
            "terminal": list(rp.blocks.terminal_blocks),
        },
        "decomposition_vectors": {g[0]: list(decomposition_vector(rp, k)) for k, g in enumerate(table.groups)},
    }
    if rp.kind == "rev":
        out["reversed"] = sorted(table.reversed_vars)
    if rp.kind == "len":
        ok, report = is_p23(rp)
        out["p23"] = ok
        out["p23_violations"] = report
    out["serialized"] = serialize(rp)
    return out


def cmd_member(args):
    rp = load(args.file)
    w = expand_word(args.word, rp.alphabet)
    wit = member_mod.member(w, rp, not args.non_erasing, **_guards_for(rp, args))
    out = {"member": wit is not None}
    if wit is not None:
        out["witness"] = wit.to_json()
    return out


def cmd_enumerate(args):
    rp = load(args.file)
    words = member_mod.lang_upto(rp, args.max_len, not args.non_erasing, args.cap, **_guards_for(rp, args))
    return {"words": words, "bound": args.max_len, "count": len(words)}


def cmd_normalize(args):
    rp = load(args.file)
    result, removed = nf.normal_form_steps(rp, args.reading)
    return {
        "pattern": pattern_text(result),
        "serialized": serialize(result),
        "removed": [
            {"group": list(r.group), "vector": list(r.vector), "coefficients": r.coefficients}
            for r in removed
        ],
    }


def cmd_charset(args):
    rp = load(args.file)
    content = Sampled(args.sample, args.seed) if args.sample else "all"
    mode = args.mode
    if mode == "s2":
        sample = charset.gen_s2_nonerasing(rp, content, args.cap)
    elif mode in ("seps1", "seps2"):
        sample = charset.gen_seps(rp, int(mode[-1]), content, args.cap)
    elif mode == "sigma3-witness":
        sample = charset.witness_set_sigma3(rp)
    else:
        sample = charset.witness_set_binary_congruous(rp)
    return {"words": sample.words(), "generator": sample.generator}


def cmd_equiv(args):
    a, b = load(args.first), load(args.second)
    v = charset.decide_equiv(a, b, args.method, not args.non_erasing, args.max_len, **_guards_for(a, args))
    return v.to_json()


def cmd_include(args):
    a, b = load(args.first), load(args.second)
    v = charset.decide_inclusion(a, b, args.max_len, erasing=not args.non_erasing, **_guards_for(a, args))
    return v.to_json()


def cmd_classify(args):
    return charset.classify_incongruous_pair(load(args.first), load(args.second))


def parse_decompositions(text: str) -> list[tuple[int, int, int]]:
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        m = re.fullmatch(r"\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)", chunk)
        if not m:
            raise ParseError(f"bad decomposition {chunk!r}; expected (a,b,c)")
        out.append(tuple(int(g) for g in m.groups()))
    return out


def cmd_anti_telltale(args):
    alphabet = tuple(args.alphabet)
    words = [expand_word(w, alphabet) for w in args.words]
    decomps = parse_decompositions(args.decompositions) if args.decompositions else None
    result = reversal.anti_telltale(words, decomps, alphabet)
    out = {
        "pattern": pattern_text(result.pattern),
        "signed": reversal.signed_str(result.signed),
        "pairs": [list(p) for p in sorted(result.pattern.pairs)],
        "decompositions": [list(d) for d in result.decompositions],
        "witnesses": [{k: v for k, v in s.items() if v} for s in result.witnesses],
        "morphism": {k: reversal.signed_str(v) for k, v in result.morphism.items()},
    }
    found = reversal.properness_witness(reversal.square_source(alphabet), result.pattern, args.bound, **guards(args))
    if found is not None:
        out["properness_witness"] = found
    return out


def cmd_morphism(args):
    source, target = load(args.source), load(args.target)
    m = reversal.morphism_search(reversal.signed_form(source), reversal.signed_form(target), **guards(args))
    out = {"found": m is not None}
    if m is not None:
        out["morphism"] = {k: reversal.signed_str(v) for k, v in m.items()}
        out["meaning"] = "language of target is included in language of source"
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--non-erasing", action="store_true", help="forbid empty substitutions")
    common.add_argument("--max-len", type=int, default=12, help="slice bound (default 12)")
    common.add_argument("--cap", type=int, default=1 << 20, help="enumeration cap (default 1048576)")
    common.add_argument("--var-guard", type=int, default=12, help="max groups for backtracking matchers")
    common.add_argument("--word-guard", type=int, default=30, help="max word length for backtracking matchers")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="plain", action="store_false", help="JSON output (default)")
    fmt.add_argument("--plain", dest="plain", action="store_true", help="key: value output")
    common.set_defaults(plain=False)

    parser = argparse.ArgumentParser(prog="relpat", description="Relational pattern languages toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="show groups, blocks and vectors")
    p.add_argument("file")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("member", parents=[common], help="decide membership of a word")
    p.add_argument("file")
    p.add_argument("--word", required=True, help="word, e.g. a^2aba^9")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("enumerate", parents=[common], help="all member words up to --max-len")
    p.add_argument("file")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("normalize", parents=[common], help="equal-length normal form")
    p.add_argument("file")
    p.add_argument("--reading", choices=nf.READINGS, default="subset")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("charset", parents=[common], help="characteristic sample words")
    p.add_argument("file")
    p.add_argument("--mode", choices=["s2", "seps1", "seps2", "sigma3-witness", "p23-witness"], default="seps1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample", type=int, default=0, help="draw this many random items instead of all")
    p.set_defaults(func=cmd_charset)

    for name, func, helptext in (
        ("equiv", cmd_equiv, "decide language equivalence"),
        ("include", cmd_include, "decide inclusion of the first language in the second"),
        ("classify", cmd_classify, "structural report on a binary pair"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("first")
        p.add_argument("second")
        if name == "equiv":
            p.add_argument("--method", choices=["auto", "sigma3", "binary-p23", "slice", "morphism"], default="auto")
        p.set_defaults(func=func)

    p = sub.add_parser("anti-telltale", parents=[common], help="pattern covering the words with a smaller language")
    p.add_argument("words", nargs="+")
    p.add_argument("--decompositions", help='per-word lengths, e.g. "(1,1,1);(2,1,2)"')
    p.add_argument("--alphabet", default="ab")
    p.add_argument("--bound", type=int, default=4, help="exponent bound for the properness search")
    p.set_defaults(func=cmd_anti_telltale)

    p = sub.add_parser("morphism", parents=[common], help="morphism between terminal-free reversal patterns")
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(func=cmd_morphism)
    return parser


def _plain(obj, prefix="") -> list[str]:
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not all(isinstance(x, (str, int)) for x in (v if isinstance(v, list) else [])):
                lines.append(f"{prefix}{k}:")
                lines.extend(_plain(v, prefix + "  "))
            elif isinstance(v, list) and any(isinstance(x, str) and " " in x for x in v):
                lines.append(f"{prefix}{k}:")
                lines.extend(f"{prefix}  - {x}" for x in v)
            elif isinstance(v, list):
                lines.append(f"{prefix}{k}: {' '.join(str(x) if x != '' else 'ε' for x in v)}")
            elif isinstance(v, str) and "\n" in v:
                lines.append(f"{prefix}{k}:")
                lines.extend(prefix + "  " + ln for ln in v.splitlines())
            else:
                lines.append(f"{prefix}{k}: {v}")
    elif isinstance(obj, list):
        for x in obj:
            lines.extend(_plain(x, prefix + "- ") if isinstance(x, (dict, list)) else [f"{prefix}- {x}"])
    return lines


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except ParseError as exc:
        return _fail(exc, EXIT_PARSE)
    except PreconditionViolated as exc:
        return _fail(exc, EXIT_PRECONDITION)
    except BudgetExceeded as exc:
        return _fail(exc, EXIT_BUDGET)
    except RelPatError as exc:
        return _fail(exc, EXIT_INTERNAL)
    if args.plain:
        print("\n".join(_plain(result)), file=out)
    else:
        print(json.dumps(result, ensure_ascii=False, sort_keys=False), file=out)
    return EXIT_OK


def _fail(exc: Exception, code: int) -> int:
    print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
