#!/usr/bin/env python3
"""steiner-kit command-line front end.

Builds orientals, decomposes cells into composites of generators, certifies
complexes and runs the verification suites. Every command prints one JSON
envelope on stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

_SCRIPT_ROOT = Path(__file__).resolve().parents[1]
if str(_SCRIPT_ROOT) not in sys.path:
    sys.path.insert(0, str(_SCRIPT_ROOT))

from steiner_kit.adc import is_loop_free, is_unitary  # noqa: E402
from steiner_kit.chain_calculus import comp_degree  # noqa: E402
from steiner_kit.config import (  # noqa: E402
    configure_logging,
    detect_project_root,
    ensure_project_layout,
    load_config,
    load_dotenv,
)
from steiner_kit.decomposition import decompose_full, evaluate, render  # noqa: E402
from steiner_kit.documents import (  # noqa: E402
    adc_document,
    is_table_payload,
    parse_adc,
    parse_chain,
    parse_simplicial,
    parse_table,
    tree_to_dict,
)
from steiner_kit.errors import SteinerError  # noqa: E402
from steiner_kit.horns import horn_equation  # noqa: E402
from steiner_kit.omega import chain_of_table, make_cell, table_of_chain  # noqa: E402
from steiner_kit.simplicial import oriental  # noqa: E402
from steiner_kit.verify import SUITES, VerifyOptions, check_simplicial_set, run_suites  # noqa: E402

logger = logging.getLogger("steiner_cli")

COMMANDS = ("oriental", "decompose", "check", "verify", "horn")
ERROR_CODES = {"E_INPUT", "E_CONFIG", "E_CHECK", "E_INTERNAL"}


@dataclass(frozen=True)
class RuntimeConfig:
    """Runtime configuration after defaults, file config, and CLI overrides."""

    output: str
    seed: int
    max_n: int
    samples: int
    morphism_pairs: int
    log_level: str


class CLIError(RuntimeError):
    """Known CLI-level exception with stable error code."""

    def __init__(self, code: str, message: str, kind: str = "CLIError"):
        if code not in ERROR_CODES:
            raise ValueError(f"Unknown CLI error code: {code}")
        super().__init__(message)
        self.code = code
        self.message = message
        self.kind = kind


def resolve_runtime_config(args: argparse.Namespace, config: dict[str, Any]) -> RuntimeConfig:
    """Resolve runtime config with CLI overrides taking precedence."""

    def pick(name: str, key: str, default: Any) -> Any:
        value = getattr(args, name, None)
        return config.get(key, default) if value is None else value

    try:
        return RuntimeConfig(
            output=str(args.output or config.get("output.default", "json")),
            seed=int(pick("seed", "verify.seed", 1729)),
            max_n=int(pick("max_n", "verify.max_n", 5)),
            samples=int(pick("samples", "verify.samples", 1000)),
            morphism_pairs=int(config.get("verify.morphism_pairs", 200)),
            log_level=str(config.get("log.level", "WARNING")),
        )
    except (TypeError, ValueError) as exc:
        raise CLIError("E_CONFIG", f"Invalid config value: {exc}") from exc


def _build_response(
    *,
    ok: bool,
    command: str,
    data: dict[str, Any],
    warnings: list[str],
    errors: list[dict[str, str]],
) -> dict[str, Any]:
    """Build the response envelope."""
    return {"ok": ok, "command": command, "data": data, "warnings": warnings, "errors": errors}


def _resolve_path(args: argparse.Namespace, raw: str) -> Path:
    path = Path(raw)
    return path if path.is_absolute() else Path(args.cwd or ".").resolve() / path


def _is_inline(raw: str) -> bool:
    return raw.lstrip().startswith(("{", "["))


def _document_name(raw: str, default: str) -> str:
    """File stem for a document path, ``default`` for inline JSON."""
    return default if _is_inline(raw) else Path(raw).stem


def _read_json(args: argparse.Namespace, raw: str) -> Any:
    """Parse ``raw`` as inline JSON, or read it from a file when it names one."""
    if _is_inline(raw):
        text = raw
    else:
        path = _resolve_path(args, raw)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise CLIError("E_INPUT", f"Cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CLIError("E_INPUT", f"Invalid JSON in {raw!r}: {exc}", kind="MalformedInput") from exc


def _command_oriental(args: argparse.Namespace) -> dict[str, Any]:
    if args.n < 0:
        raise CLIError("E_INPUT", f"n must be ≥ 0, got {args.n}", kind="BadIndex")
    K, _ = oriental(args.n)
    return adc_document(K)


def _command_decompose(args: argparse.Namespace) -> dict[str, Any]:
    K = parse_adc(_read_json(args, args.adc), _document_name(args.adc, "K"))
    payload = _read_json(args, args.chain)
    if is_table_payload(payload):
        from_table = chain_of_table(K, parse_table(K, payload))
        cell = make_cell(K, from_table.chain, from_table.dim if args.dim is None else args.dim)
    else:
        cell = make_cell(K, parse_chain(K, payload), args.dim)
    chain = cell.chain
    tree = decompose_full(K, cell)
    return {
        "chain": chain.to_mapping(),
        "dim": cell.dim,
        "comp_degree": comp_degree(chain),
        "table": table_of_chain(K, cell).to_dict(),
        "render": render(tree),
        "tree": tree_to_dict(tree),
        "check": evaluate(K, tree, cell.dim) == cell,
    }


def _command_check(args: argparse.Namespace) -> dict[str, Any]:
    K = parse_adc(_read_json(args, args.adc), _document_name(args.adc, "K"))
    unitary = is_unitary(K)
    loops = is_loop_free(K)
    return {
        "ok": unitary.ok and loops.ok,
        "complex": K.name,
        "unitary": unitary.to_dict(),
        "loop_free": loops.to_dict(),
    }


def _command_verify(args: argparse.Namespace, runtime: RuntimeConfig) -> dict[str, Any]:
    if args.complex:
        S = parse_simplicial(_read_json(args, args.complex), _document_name(args.complex, "S"))
        reports = [check_simplicial_set(S)]
    else:
        if runtime.max_n < 0:
            raise CLIError("E_INPUT", f"--max-n must be ≥ 0, got {runtime.max_n}", kind="BadIndex")
        names = list(SUITES) if args.suite == "all" else [args.suite]
        opts = VerifyOptions(
            max_n=runtime.max_n,
            seed=runtime.seed,
            samples=runtime.samples,
            morphism_pairs=runtime.morphism_pairs,
        )
        reports = run_suites(names, opts)
    return {
        "ok": all(r.ok for r in reports),
        "seed": runtime.seed,
        "max_n": runtime.max_n,
        "suites": [r.to_dict() for r in reports],
    }


def _command_horn(args: argparse.Namespace) -> dict[str, Any]:
    report = horn_equation(args.n, args.i).to_dict()
    report["ok"] = report["check"]
    return report


def _execute_handler(args: argparse.Namespace, runtime: RuntimeConfig) -> tuple[dict[str, Any], list[str]]:
    """Dispatch command handlers and return data/warnings."""
    cmd = args.command
    warnings: list[str] = []
    if cmd == "oriental":
        return _command_oriental(args), warnings
    if cmd == "decompose":
        return _command_decompose(args), warnings
    if cmd == "check":
        return _command_check(args), warnings
    if cmd == "verify":
        return _command_verify(args, runtime), warnings
    if cmd == "horn":
        return _command_horn(args), warnings
    raise ValueError(f"Unknown command: {cmd}")


def _write_payload(args: argparse.Namespace, data: dict[str, Any]) -> None:
    target = _resolve_path(args, args.out)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n", encoding="utf-8")


def execute_command(args: argparse.Namespace) -> tuple[int, dict[str, Any]]:
    """Execute a parsed command and return (exit_code, response)."""
    cwd = Path(args.cwd or ".").resolve()
    command = args.command
    try:
        project_root = detect_project_root(cwd)
        ensure_project_layout(project_root)
        load_dotenv(project_root)
        config = load_config(project_root)
        runtime = resolve_runtime_config(args, config)
        configure_logging(runtime.log_level)
        setattr(args, "_runtime", runtime)
        if runtime.output not in {"text", "json"}:
            raise CLIError("E_CONFIG", "Invalid output mode. Expected 'text' or 'json'.")
        data, warnings = _execute_handler(args, runtime)
    except CLIError as exc:
        error = {"code": exc.code, "message": exc.message, "kind": exc.kind}
        return 2, _build_response(ok=False, command=command, data={}, warnings=[], errors=[error])
    except SteinerError as exc:
        logger.debug("input rejected", exc_info=True)
        error = {"code": "E_INPUT", "message": str(exc), "kind": exc.code}
        return 2, _build_response(ok=False, command=command, data={}, warnings=[], errors=[error])
    except Exception as exc:
        logger.exception("command %s failed", command)
        error = {"code": "E_INTERNAL", "message": str(exc), "kind": type(exc).__name__}
        return 1, _build_response(ok=False, command=command, data={}, warnings=[], errors=[error])

    if getattr(args, "out", None):
        _write_payload(args, data)
    if data.get("ok", True):
        return 0, _build_response(ok=True, command=command, data=data, warnings=warnings, errors=[])
    error = {"code": "E_CHECK", "message": f"{command} found failing checks", "kind": "CheckFailed"}
    return 1, _build_response(ok=False, command=command, data=data, warnings=warnings, errors=[error])


def _print_text_response(response: dict[str, Any]) -> None:
    """Render response in compact human-readable form."""
    print(f"command: {response['command']}  ok: {response['ok']}")
    if response["warnings"]:
        print("warnings:")
        for warning in response["warnings"]:
            print(f"- {warning}")
    if response["errors"]:
        print("errors:")
        for err in response["errors"]:
            print(f"- {err['code']} [{err['kind']}]: {err['message']}")
    data = response.get("data") or {}
    if "render" in data:
        print(f"render: {data['render']}")
    if "equation" in data:
        print(f"equation: {data['equation']}")
    for suite in data.get("suites", []):
        print(f"suite {suite['name']}: checked={suite['checked']} failures={len(suite['failures'])}")


def _build_parser() -> argparse.ArgumentParser:
    """Construct CLI parser."""
    parser = argparse.ArgumentParser(
        prog="steiner",
        description="Steiner complexes, orientals and horn equations",
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--output", choices=["text", "json"], default=None)
    shared.add_argument("--cwd", default=".")
    shared.add_argument("--out", default=None, help="Also write the data payload to this file.")

    sub = parser.add_subparsers(dest="command", required=True)
    oriental_p = sub.add_parser("oriental", parents=[shared], help="Emit C_•(Δ[n]) as JSON.")
    oriental_p.add_argument("n", type=int)

    decompose_p = sub.add_parser("decompose", parents=[shared], help="Decompose a cell into generators.")
    decompose_p.add_argument("adc", help="Complex JSON document, inline or as a path.")
    decompose_p.add_argument("chain", help="Chain or Steiner table as inline JSON or a path to a JSON file.")
    decompose_p.add_argument("dim", type=int, nargs="?", default=None)

    check_p = sub.add_parser("check", parents=[shared], help="Validate a complex and certify its basis.")
    check_p.add_argument("adc", help="Complex JSON document, inline or as a path.")

    verify_p = sub.add_parser("verify", parents=[shared], help="Run verification suites.")
    verify_p.add_argument("--max-n", dest="max_n", type=int, default=None)
    verify_p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    verify_p.add_argument("--seed", type=int, default=None)
    verify_p.add_argument("--samples", type=int, default=None)
    verify_p.add_argument("--complex", default=None, help="Check a simplicial set JSON document instead.")

    horn_p = sub.add_parser("horn", parents=[shared], help="Horn equation for Λ^i[n].")
    horn_p.add_argument("n", type=int)
    horn_p.add_argument("i", type=int)
    return parser


def _parse(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    return parser.parse_args(argv)


def run_cli(argv: list[str] | None = None) -> tuple[int, dict[str, Any]]:
    """Run CLI programmatically and return (exit_code, response)."""
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    args = _parse(parser, argv)
    code, response = execute_command(args)
    runtime = getattr(args, "_runtime", None)
    out_mode = args.output or (runtime.output if runtime else "json")
    if out_mode != "text":
        print(json.dumps(response, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        _print_text_response(response)
    return code, response


def main() -> None:
    """CLI entry point."""
    try:
        code, _ = run_cli()
    except KeyboardInterrupt:
        print("\nInterrupted.", file=sys.stderr)
        code = 130
    raise SystemExit(code)


if __name__ == "__main__":
    main()
