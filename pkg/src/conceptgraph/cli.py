"""Command-line entry point tying the pipeline together.

Subcommands: ``index`` builds and persists an index from a corpus,
``keywords`` prints ranked keywords and keyphrases for one document,
``graph`` prints a term's ranked neighbors, ``export`` writes the full
entity-relationship graph, ``serve`` starts the HTTP API.

Exit codes: 0 on success, 1 on usage errors, 2 on data errors.  Output is a
human-readable table by default; ``--json`` switches to machine output.
Flag defaults may come from an optional ``key=value`` config file, with
explicit flags taking precedence.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import cooccur, ergraph, keywords, service
from .corpus import CORPUS_FORMATS, TokenizerConfig, ingest, load_stopwords, make_document
from .errors import ConceptGraphError, UsageError
from .index import build_index, load_index, save_index

_CONFIG_KEYS = {
    "format": str,
    "k": int,
    "variant": str,
    "measure": str,
    "min_support": int,
    "max_n": int,
    "neighbors": int,
    "depth": int,
    "host": str,
    "port": int,
}

_DEFAULTS = {
    "format": "jsonl",
    "k": keywords.DEFAULT_K,
    "variant": keywords.DEFAULT_VARIANT,
    "measure": cooccur.DEFAULT_MEASURE,
    "min_support": cooccur.DEFAULT_MIN_SUPPORT,
    "max_n": keywords.DEFAULT_MAX_N,
    "neighbors": cooccur.DEFAULT_NEIGHBORS,
    "depth": 1,
    "host": service.DEFAULT_HOST,
    "port": service.DEFAULT_PORT,
}


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; map that onto the usage exit code instead
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _read_config_file(path) -> dict:
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    values = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}: line {lineno}: expected key = value")
        key, _, raw = line.partition("=")
        key = key.strip()
        raw = raw.strip().strip("\"'")
        if key not in _CONFIG_KEYS:
            raise UsageError(f"{path}: line {lineno}: unknown config key {key!r}")
        try:
            values[key] = _CONFIG_KEYS[key](raw)
        except ValueError as exc:
            raise UsageError(f"{path}: line {lineno}: bad value for {key}: {raw!r}") from exc
    return values


def _setting(args, name: str):
    """Flag value if given, else config-file value, else built-in default."""
    flag = getattr(args, name, None)
    if flag is not None:
        return flag
    file_values = getattr(args, "_file_values", {})
    if name in file_values:
        return file_values[name]
    return _DEFAULTS[name]


def build_parser() -> _Parser:
    parser = _Parser(prog="conceptgraph", description=__doc__.splitlines()[0])
    parser.add_argument("--config", metavar="FILE", help="key=value file with flag defaults")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)

    p_index = sub.add_parser("index", help="build an index from a corpus")
    p_index.add_argument("corpus", help="corpus path (jsonl file or directory of .txt files)")
    p_index.add_argument("-o", "--output", required=True, help="index file to write")
    p_index.add_argument("--format", choices=CORPUS_FORMATS, help="corpus layout (default jsonl)")
    p_index.add_argument("--stopwords", metavar="FILE", help="override the packaged stopword list")
    p_index.add_argument("--min-term-length", type=int, default=None)
    p_index.add_argument("--no-fold-case", action="store_true")

    p_kw = sub.add_parser("keywords", help="ranked keywords for one document")
    p_kw.add_argument("index_file")
    p_kw.add_argument("--doc", required=True, metavar="ID")
    p_kw.add_argument("--k", type=int, default=None, help="keywords per document (default 10)")
    p_kw.add_argument("--variant", choices=keywords.VARIANTS, default=None)
    p_kw.add_argument("--max-n", type=int, default=None, help="longest keyphrase (default 3)")
    p_kw.add_argument("--json", action="store_true")

    p_graph = sub.add_parser("graph", help="ranked neighbors of a term")
    p_graph.add_argument("index_file")
    p_graph.add_argument("--term", action="append", required=True, metavar="TERM")
    p_graph.add_argument("--measure", choices=cooccur.MEASURES, default=None)
    p_graph.add_argument("--neighbors", type=int, default=None, help="neighbors per term (default 7)")
    p_graph.add_argument("--k", type=int, default=None)
    p_graph.add_argument("--variant", choices=keywords.VARIANTS, default=None)
    p_graph.add_argument("--min-support", type=int, default=None)
    p_graph.add_argument("--json", action="store_true")

    p_export = sub.add_parser("export", help="write the full concept graph")
    p_export.add_argument("index_file")
    p_export.add_argument("--format", choices=ergraph.EXPORT_FORMATS, default="json")
    p_export.add_argument("-o", "--output", required=True)
    p_export.add_argument("--measure", choices=cooccur.MEASURES, default=None)
    p_export.add_argument("--neighbors", type=int, default=None)
    p_export.add_argument("--k", type=int, default=None)
    p_export.add_argument("--variant", choices=keywords.VARIANTS, default=None)
    p_export.add_argument("--min-support", type=int, default=None)

    p_serve = sub.add_parser("serve", help="start the HTTP API")
    p_serve.add_argument("index_file")
    p_serve.add_argument("--host", default=None)
    p_serve.add_argument("--port", type=int, default=None)
    p_serve.add_argument("--k", type=int, default=None)
    p_serve.add_argument("--variant", choices=keywords.VARIANTS, default=None)
    p_serve.add_argument("--min-support", type=int, default=None)
    p_serve.add_argument("--max-n", type=int, default=None)
    p_serve.add_argument("--neighbors", type=int, default=None)

    return parser


def _tokenizer_config(args) -> TokenizerConfig:
    kwargs = {}
    if args.stopwords:
        kwargs["stopwords"] = load_stopwords(args.stopwords)
    if args.min_term_length is not None:
        kwargs["min_term_length"] = args.min_term_length
    if args.no_fold_case:
        kwargs["fold_case"] = False
    return TokenizerConfig(**kwargs)


def _pair_table(index, args):
    tx = cooccur.build_transactions(index, _setting(args, "k"), _setting(args, "variant"))
    return tx, cooccur.pair_counts(tx, _setting(args, "min_support"))


def cmd_index(args) -> int:
    fmt = _setting(args, "format")
    docs = ingest(args.corpus, fmt, _tokenizer_config(args))
    index = build_index(docs)
    save_index(index, args.output)
    print(f"indexed {index.n} documents, {len(index.postings)} terms -> {args.output}")
    return 0


def cmd_keywords(args) -> int:
    index = load_index(args.index_file)
    k, variant, max_n = _setting(args, "k"), _setting(args, "variant"), _setting(args, "max_n")
    ranked = keywords.extract_keywords(index, args.doc, k, variant)
    title, text = index.doc_meta[args.doc]
    doc = make_document(args.doc, title, text, index.config)
    phrases = keywords.combine_ngrams(doc, ranked, max_n)
    if args.json:
        print(
            json.dumps(
                {
                    "doc_id": args.doc,
                    "keywords": [{"term": ks.term, "score": ks.score} for ks in ranked],
                    "keyphrases": [
                        {"terms": list(p.terms), "score": p.score, "spans": [list(s) for s in p.spans]}
                        for p in phrases
                    ],
                },
                ensure_ascii=False,
            )
        )
        return 0
    print(f"keywords for {args.doc} ({variant}, k={k}):")
    for ks in ranked:
        print(f"  {ks.score:12.6f}  {ks.term}")
    print("keyphrases:")
    for p in phrases:
        print(f"  {p.score:12.6f}  {' '.join(p.terms)}  x{len(p.spans)}")
    return 0


def cmd_graph(args) -> int:
    index = load_index(args.index_file)
    measure, neighbors = _setting(args, "measure"), _setting(args, "neighbors")
    _, stats = _pair_table(index, args)
    if args.json:
        out = {
            term: [{"term": n, "score": s} for n, s in cooccur.related_terms(stats, term, measure, neighbors)]
            for term in args.term
        }
        print(json.dumps(out, ensure_ascii=False))
        return 0
    for term in args.term:
        print(f"{measure} neighbors of {term!r}:")
        related = cooccur.related_terms(stats, term, measure, neighbors)
        if not related:
            print("  (none)")
        for neighbor, value in related:
            print(f"  {value:12.6f}  {neighbor}")
    return 0


def cmd_export(args) -> int:
    index = load_index(args.index_file)
    measure, neighbors = _setting(args, "measure"), _setting(args, "neighbors")
    tx, stats = _pair_table(index, args)
    model = ergraph.build_er_model(tx, stats, measure, neighbors)
    payload = ergraph.export_graph(model, args.format)
    Path(args.output).write_bytes(payload)
    print(f"wrote {len(model.entities)} entities, {len(model.relationships)} relationships -> {args.output}")
    return 0


def cmd_serve(args) -> int:
    index = load_index(args.index_file)
    _, stats = _pair_table(index, args)
    app = service.create_app(
        index,
        stats,
        keyword_k=_setting(args, "k"),
        variant=_setting(args, "variant"),
        max_n=_setting(args, "max_n"),
    )
    service.serve(app, _setting(args, "host"), _setting(args, "port"))
    return 0


_COMMANDS = {
    "index": cmd_index,
    "keywords": cmd_keywords,
    "graph": cmd_graph,
    "export": cmd_export,
    "serve": cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            parser.print_usage(sys.stderr)
            print("error: a command is required", file=sys.stderr)
            return 1
        args._file_values = _read_config_file(args.config) if args.config else {}
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ConceptGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
