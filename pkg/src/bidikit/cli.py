"""Command-line client.

Subcommands mirror the service endpoints one to one; the CLI parses the graph
file locally for early diagnostics, then sends the document through the HTTP
layer -- against a remote server when ``--server`` is given, otherwise
against an in-process instance of the application.  Reports print as JSON
with sorted keys; ``export-dot`` prints raw DOT text.

Exit codes: 0 success, 1 infeasible or failed-verification outcomes, 2 input
errors.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path
from typing import Any

import httpx

from . import __version__, documents
from .errors import InputError


def _sign_value(text: str) -> str:
    value = "-" if text == "−" else text
    if value not in ("+", "-"):
        raise argparse.ArgumentTypeError("sign must be '+' or '-'")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bidikit",
        description="Bidirected graph analysis: reachability, circular "
        "components, Kotzig-Lovasz decompositions, b-factors.",
    )
    parser.add_argument("--version", action="version", version=f"bidikit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("graph", help="path to a JSON graph document")
    common.add_argument("--server", help="base URL of a running service (default: in-process)")
    common.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("reach", parents=[common], help="ditrail reachability profile for a vertex pair")
    p.add_argument("--from", dest="source", required=True, metavar="ID")
    p.add_argument("--to", dest="target", required=True, metavar="ID")

    sub.add_parser("circular", parents=[common], help="list the circular edges")
    sub.add_parser("components", parents=[common], help="circular components partition")

    p = sub.add_parser("kl", parents=[common], help="Kotzig-Lovasz decomposition for one sign")
    p.add_argument("--sign", required=True, type=_sign_value, metavar="{+|-}")

    p = sub.add_parser("bfactor", parents=[common], help="search for a b-factor")
    p.add_argument("--force", action="append", default=[], metavar="EDGEID")
    p.add_argument("--forbid", action="append", default=[], metavar="EDGEID")

    p = sub.add_parser("bkl", parents=[common], help="b-factor decomposition for one sign")
    p.add_argument("--sign", required=True, type=_sign_value, metavar="{+|-}")
    p.add_argument("--method", choices=["direct", "reduction"], default="direct")

    p = sub.add_parser("export-dot", parents=[common], help="Graphviz DOT export")
    p.add_argument("--sign", type=_sign_value, metavar="{+|-}",
                   help="color vertices by the decomposition for this sign")

    sub.add_parser("verify", parents=[common], help="run the invariant suite on the graph")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


_PATHS = {
    "reach": "/reach",
    "circular": "/circular",
    "components": "/components",
    "kl": "/kl",
    "bfactor": "/bfactor",
    "bkl": "/bkl",
    "export-dot": "/export-dot",
    "verify": "/verify",
}


def _post(server: str | None, path: str, payload: dict[str, Any]) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=300.0) as client:
            return client.post(path, json=payload)

    from .service.app import create_app

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://bidikit.internal"
        ) as client:
            return await client.post(path, json=payload, timeout=300.0)

    return asyncio.run(go())


def _build_payload(args: argparse.Namespace, doc_mapping: dict[str, Any]) -> dict[str, Any]:
    payload: dict[str, Any] = {"graph": doc_mapping}
    if args.command == "reach":
        payload["from"] = args.source
        payload["to"] = args.target
    elif args.command in ("kl", "bkl"):
        payload["sign"] = args.sign
    elif args.command == "bfactor":
        payload["force"] = args.force
        payload["forbid"] = args.forbid
    elif args.command == "export-dot" and args.sign is not None:
        payload["sign"] = args.sign
    if args.command == "bkl":
        payload["method"] = args.method
    return payload


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service.app import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0

    try:
        raw = Path(args.graph).read_bytes()
    except OSError as exc:
        print(f"error[IO]: cannot read {args.graph}: {exc}", file=sys.stderr)
        return 2
    try:
        doc = documents.parse_graph_file(raw)
    except InputError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 2

    payload = _build_payload(args, documents.document_to_mapping(doc))
    try:
        resp = _post(args.server, _PATHS[args.command], payload)
    except httpx.HTTPError as exc:
        print(f"error[CONNECTION]: {exc}", file=sys.stderr)
        return 2

    if resp.status_code != 200:
        try:
            detail = resp.json()
        except ValueError:
            detail = resp.text
        print(f"error[HTTP {resp.status_code}]: {json.dumps(detail, sort_keys=True)}",
              file=sys.stderr)
        return 2

    if args.command == "export-dot":
        _emit(resp.text, args.out)
        return 0

    body = resp.json()
    _emit(json.dumps(body, indent=2, sort_keys=True) + "\n", args.out)
    return 0 if body.get("status") == "ok" else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
