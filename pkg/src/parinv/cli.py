"""Command line client for the service.

Every command goes through the HTTP interface, by default against an
in-process application, so a terminal session and a deployed server see
exactly the same behavior. Exit codes: 0 success, 1 verification or check
failure, 2 bad input, 3 degenerate orbit.
"""

from __future__ import annotations

import asyncio
import json
import sys

import click
import httpx

from . import __version__
from .verify import SUITES

EXIT_FAILURE = 1
EXIT_BAD_INPUT = 2
EXIT_DEGENERATE = 3

_FORMATS = click.Choice(["text", "json"])


def _call(server: str | None, path: str, payload: dict) -> tuple[int, dict]:
    """POST to the service and return (status, parsed body)."""
    try:
        if server:
            with httpx.Client(base_url=server, timeout=httpx.Timeout(None)) as client:
                resp = client.post(path, json=payload)
                return resp.status_code, resp.json()

        async def go() -> tuple[int, dict]:
            from .service import app

            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://parinv", timeout=httpx.Timeout(None)
            ) as client:
                resp = await client.post(path, json=payload)
                return resp.status_code, resp.json()

        return asyncio.run(go())
    except (httpx.HTTPError, json.JSONDecodeError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_FAILURE)


def _require_ok(status: int, body: dict) -> None:
    if status == 200:
        return
    error = body.get("error", {}) if isinstance(body, dict) else {}
    click.echo(f"error: {error.get('message', 'request failed')}", err=True)
    if status == 409:
        sys.exit(EXIT_DEGENERATE)
    if status in (400, 422):
        sys.exit(EXIT_BAD_INPUT)
    sys.exit(EXIT_FAILURE)


def _parse_blocks_arg(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        click.echo(f"error: bad block list {text!r}", err=True)
        sys.exit(EXIT_BAD_INPUT)


def _load_matrix(path: str, blocks: str | None) -> dict:
    try:
        with open(path) as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(f"error: cannot read matrix file {path}: {exc}", err=True)
        sys.exit(EXIT_BAD_INPUT)
    if not isinstance(data, dict):
        click.echo(f"error: matrix file {path} is not a JSON object", err=True)
        sys.exit(EXIT_BAD_INPUT)
    if blocks is not None and data.get("blocks") != _parse_blocks_arg(blocks):
        click.echo("error: --blocks disagrees with the matrix file", err=True)
        sys.exit(EXIT_BAD_INPUT)
    return data


def _dump(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2)


@click.group()
@click.version_option(version=__version__, prog_name="parinv")
@click.option(
    "--server",
    envvar="PARINV_SERVER",
    default=None,
    metavar="URL",
    help="Base URL of a running service; without it the service runs in process.",
)
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Exact invariants and canonical forms for block nilradicals."""
    ctx.obj = server


@main.command()
@click.option("--blocks", required=True, help="Comma separated block sizes, e.g. 1,3,2.")
@click.option(
    "--layers",
    default="s,phi",
    show_default=True,
    help="Comma separated layer tags out of s, phi, psi, t, principal.",
)
@click.option("--format", "fmt", type=_FORMATS, default="text", show_default=True)
@click.pass_obj
def diagram(server: str | None, blocks: str, layers: str, fmt: str) -> None:
    """Draw marked positions of a block structure."""
    payload = {"blocks": _parse_blocks_arg(blocks), "layers": layers.split(",")}
    status, body = _call(server, "/diagram", payload)
    _require_ok(status, body)
    if fmt == "text":
        click.echo(body["text"])
    else:
        click.echo(_dump(body["data"]))


@main.command()
@click.option("--matrix", "matrix_path", required=True, metavar="FILE", help="JSON matrix file.")
@click.option("--blocks", default=None, help="Expected block sizes; must match the file.")
@click.option("--format", "fmt", type=_FORMATS, default="text", show_default=True)
@click.pass_obj
def invariants(server: str | None, matrix_path: str, blocks: str | None, fmt: str) -> None:
    """Evaluate every generator at a nilradical element."""
    payload = {"matrix": _load_matrix(matrix_path, blocks)}
    status, body = _call(server, "/invariants", payload)
    _require_ok(status, body)
    if fmt == "json":
        click.echo(_dump({"base": body["base"], "derived": body["derived"]}))
        return
    for kind in ("base", "derived"):
        for entry in body[kind]:
            click.echo(f"{kind} ({entry['i']},{entry['j']}) = {entry['value']}")


@main.command()
@click.option("--matrix", "matrix_path", required=True, metavar="FILE", help="JSON matrix file.")
@click.option("--blocks", default=None, help="Expected block sizes; must match the file.")
@click.option("--witness", is_flag=True, help="Include a conjugating group element.")
@click.option(
    "--check",
    "check_flag",
    is_flag=True,
    help="Re-verify the witness and the generator values; fail loudly on mismatch.",
)
@click.option("--format", "fmt", type=_FORMATS, default="text", show_default=True)
@click.pass_obj
def canonicalize(
    server: str | None,
    matrix_path: str,
    blocks: str | None,
    witness: bool,
    check_flag: bool,
    fmt: str,
) -> None:
    """Move a nilradical element to its canonical representative."""
    payload = {
        "matrix": _load_matrix(matrix_path, blocks),
        "witness": witness,
        "check": check_flag,
    }
    status, body = _call(server, "/canonicalize", payload)
    _require_ok(status, body)
    if fmt == "json":
        out = {"point": body["point"], "zero_coefficients": body["zero_coefficients"]}
        if witness:
            out["witness"] = body["witness"]
        if check_flag:
            out["check_passed"] = body["check_passed"]
        click.echo(_dump(out))
    else:
        for entry in body["point"]["coeffs"]:
            click.echo(f"({entry['i']},{entry['j']}) = {entry['value']}")
        zeros = body["zero_coefficients"]
        if zeros:
            spots = ", ".join(f"({i},{j})" for i, j in zeros)
            click.echo(f"zero coefficients at {spots}")
        if witness:
            click.echo("witness:")
            for entry in body["witness"]["entries"]:
                click.echo(f"g({entry['i']},{entry['j']}) = {entry['value']}")
        if check_flag:
            click.echo("check passed" if body["check_passed"] else "check FAILED")
    if check_flag and not body["check_passed"]:
        sys.exit(EXIT_FAILURE)


@main.command()
@click.option("--max-n", default=5, show_default=True, help="Largest total size to sweep.")
@click.option("--trials", default=10, show_default=True, help="Random trials per check.")
@click.option("--seed", default=0, show_default=True, envvar="PARINV_SEED")
@click.option(
    "--suite",
    "suites",
    multiple=True,
    default=("all",),
    show_default=True,
    type=click.Choice(list(SUITES) + ["all"]),
    help="Repeat to run several suites.",
)
@click.option("--format", "fmt", type=_FORMATS, default="text", show_default=True)
@click.pass_obj
def verify(
    server: str | None, max_n: int, trials: int, seed: int, suites: tuple[str, ...], fmt: str
) -> None:
    """Run fixture and randomized checks over small block structures."""
    payload = {"max_n": max_n, "trials": trials, "seed": seed, "suites": list(suites)}
    status, body = _call(server, "/verify", payload)
    _require_ok(status, body)
    if fmt == "json":
        click.echo(_dump(body))
    else:
        for check in body["checks"]:
            mark = "pass" if check["passed"] else "FAIL"
            line = f"{mark}  {check['suite']}/{check['name']}  trials={check['trials']}"
            if not check["passed"] and check["detail"]:
                line += f"  [{check['detail']}]"
            click.echo(line)
        good = sum(1 for check in body["checks"] if check["passed"])
        click.echo(f"{good}/{len(body['checks'])} checks passed (seed {seed})")
    if not body["ok"]:
        sys.exit(EXIT_FAILURE)


@main.command()
@click.option("--n", required=True, type=int, help="Total size to enumerate.")
@click.option("--out", "out_path", default="-", show_default=True, metavar="FILE")
@click.pass_obj
def sweep(server: str | None, n: int, out_path: str) -> None:
    """Tabulate generator counts for every block structure of one size."""
    status, body = _call(server, "/sweep", {"n": n})
    _require_ok(status, body)
    text = _dump({"n": body["n"], "rows": body["rows"]}) + "\n"
    if out_path == "-":
        click.echo(text, nl=False)
        return
    try:
        with open(out_path, "w") as handle:
            handle.write(text)
    except OSError as exc:
        click.echo(f"error: cannot write {out_path}: {exc}", err=True)
        sys.exit(EXIT_BAD_INPUT)


if __name__ == "__main__":
    main()
