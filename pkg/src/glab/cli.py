"""Command-line client for the HTTP surface.

Every command goes through the service API: against a remote server when
--server (or GLAB_SERVER) is set, otherwise against the app mounted
in-process, so single-machine use needs no running daemon.
"""

from __future__ import annotations

import asyncio
import json
import pathlib
import re

import click
import httpx

from . import __version__


class ServiceClient:
    """Synchronous facade; in-process mode drives the ASGI app directly."""

    def __init__(self, server: str | None):
        self._server = server
        self._app = None
        if server is None:
            from .service.app import create_app

            self._app = create_app()

    def post(self, path: str, payload: dict) -> dict:
        if self._server is not None:
            with httpx.Client(base_url=self._server, timeout=None) as client:
                return self._unwrap(client.post(path, json=payload))

        async def go() -> httpx.Response:
            transport = httpx.ASGITransport(app=self._app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://glab.local", timeout=None
            ) as client:
                return await client.post(path, json=payload)

        return self._unwrap(asyncio.run(go()))

    @staticmethod
    def _unwrap(r: httpx.Response) -> dict:
        if r.status_code != 200:
            try:
                detail = r.json().get("detail", r.text)
            except ValueError:
                detail = r.text
            raise click.ClickException(f"{r.status_code}: {detail}")
        return r.json()


_GP_RE = re.compile(r"^gp:(\d+)$")


def _warn_small_p(group_id: str) -> None:
    m = _GP_RE.match(group_id)
    if m and int(m.group(1)) < 20:
        click.echo(
            f"warning: {group_id} has p < 20; the length bounds here are "
            "tuned for p >= 20",
            err=True,
        )


_GROUP_OPT = click.option(
    "--group", "group_id", required=True, metavar="ID",
    help="Group id: zd:N, free:N, bs:P, gp:P, h1, h2, h.",
)


@click.group()
@click.version_option(__version__)
@click.option(
    "--server", envvar="GLAB_SERVER", default=None, metavar="URL",
    help="Service URL; default runs the service in-process.",
)
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Exact computation lab for Baumslag-Solitar towers."""
    ctx.obj = ServiceClient(server)


@main.group("group")
def group_cmd() -> None:
    """Word-problem queries."""


@group_cmd.command("eval")
@_GROUP_OPT
@click.option("--word", required=True, help='Word text, e.g. "t^-1 a t a^-2".')
@click.pass_obj
def group_eval(client: ServiceClient, group_id: str, word: str) -> None:
    """Canonical form of a word (plus its a-power when it is one)."""
    _warn_small_p(group_id)
    out = client.post("/eval", {"group": group_id, "word": word})
    click.echo(out["key"])
    if out["a_power"] is not None:
        click.echo(f"a^{out['a_power']}")


@group_cmd.command("equal")
@_GROUP_OPT
@click.option("--word", "words", required=True, multiple=True,
              help="Give exactly twice: the two words to compare.")
@click.pass_context
def group_equal(ctx: click.Context, group_id: str, words: tuple[str, ...]) -> None:
    """Compare two words; exit 0 when they define the same element."""
    if len(words) != 2:
        raise click.UsageError("--word must be given exactly twice")
    _warn_small_p(group_id)
    out = ctx.obj.post(
        "/equal", {"group": group_id, "left": words[0], "right": words[1]}
    )
    click.echo("equal" if out["equal"] else "distinct")
    ctx.exit(0 if out["equal"] else 1)


@main.command("ball")
@_GROUP_OPT
@click.option("--radius", type=int, required=True)
@click.option("--cap", type=int, default=None, help="Entry cap; truncates to whole layers.")
@click.option("--workers", type=int, default=1, show_default=True)
@click.option("--out", "out_path", default=None, metavar="FILE",
              help="Also save the ball to this file.")
@click.pass_obj
def ball_cmd(client: ServiceClient, group_id: str, radius: int,
             cap: int | None, workers: int, out_path: str | None) -> None:
    """Breadth-first ball around the identity."""
    _warn_small_p(group_id)
    payload: dict = {"group": group_id, "radius": radius, "workers": workers}
    if cap is not None:
        payload["cap"] = cap
    if out_path is not None:
        payload["save_path"] = out_path
    out = client.post("/ball", payload)
    state = "complete" if out["complete"] else "truncated"
    click.echo(f"{out['group']} radius {out['radius']}: {out['entries']} elements ({state})")
    click.echo("spheres: " + " ".join(str(s) for s in out["sphere_sizes"]))
    if out["saved_to"]:
        click.echo(f"saved to {out['saved_to']}")


@main.command("dist")
@click.option("--ball", "ball_path", required=True, metavar="FILE",
              help="Ball file produced by `glab ball --out`.")
@click.option("--word", required=True)
@click.pass_obj
def dist_cmd(client: ServiceClient, ball_path: str, word: str) -> None:
    """Distance from the identity, exact or '>radius'."""
    out = client.post("/distance", {"ball_path": ball_path, "word": word})
    click.echo(out["display"])


@main.command("growth")
@_GROUP_OPT
@click.option("--element", required=True, help="Word text for the element.")
@click.option("--radius", type=int, required=True)
@click.option("--power-bound", type=int, default=None)
@click.option("--csv", "csv_path", default=None, metavar="FILE",
              help="Write the table as CSV.")
@click.pass_obj
def growth_cmd(client: ServiceClient, group_id: str, element: str, radius: int,
               power_bound: int | None, csv_path: str | None) -> None:
    """Growth-of-element table w(n) for n = 0..radius."""
    _warn_small_p(group_id)
    payload: dict = {"group": group_id, "element": element, "radius": radius}
    if power_bound is not None:
        payload["power_bound"] = power_bound
    out = client.post("/growth", payload)
    for n, w in out["rows"]:
        click.echo(f"w({n}) = {w}")
    if not out["scan_complete"]:
        click.echo("note: power scan stopped at the representability budget", err=True)
    if csv_path is not None:
        pathlib.Path(csv_path).write_text(out["csv"], encoding="utf-8")
        click.echo(f"saved to {csv_path}")


@main.command("cone")
@_GROUP_OPT
@click.option("--element", required=True)
@click.option("--target", required=True)
@click.option("--alpha", default="0", show_default=True, metavar="NUM[/DEN]")
@click.option("--c", "c_term", type=int, default=0, show_default=True)
@click.option("--n-range", type=int, required=True)
@click.option("--radius", type=int, required=True)
@click.pass_context
def cone_cmd(ctx: click.Context, group_id: str, element: str, target: str,
             alpha: str, c_term: int, n_range: int, radius: int) -> None:
    """Membership of a target in the (alpha, c) cone around an orbit ray."""
    _warn_small_p(group_id)
    num, _, den = alpha.partition("/")
    try:
        alpha_num, alpha_den = int(num), int(den) if den else 1
    except ValueError:
        raise click.UsageError(f"malformed --alpha {alpha!r}") from None
    out = ctx.obj.post("/cone", {
        "group": group_id, "element": element, "target": target,
        "alpha_num": alpha_num, "alpha_den": alpha_den, "c": c_term,
        "n_range": n_range, "radius": radius,
    })
    click.echo("inside" if out["contains"] else "outside")
    ctx.exit(0 if out["contains"] else 1)


def _parse_c_grid(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError:
        raise click.UsageError(f"malformed --c-grid {text!r}") from None


@main.command("estimate-s")
@_GROUP_OPT
@click.option("--g", "g_text", required=True)
@click.option("--h", "h_text", required=True)
@click.option("--radius", type=int, required=True)
@click.option("--i-max", type=int, required=True)
@click.option("--c-grid", default="0,1,2", show_default=True)
@click.option("--j-limit", type=int, default=None)
@click.pass_obj
def estimate_cmd(client: ServiceClient, group_id: str, g_text: str, h_text: str,
                 radius: int, i_max: int, c_grid: str, j_limit: int | None) -> None:
    """Finite-scale lower bound on the boundary separation of two rays."""
    _warn_small_p(group_id)
    out = client.post("/estimate-s", {
        "group": group_id, "g": g_text, "h": h_text, "radius": radius,
        "i_max": i_max, "c_grid": _parse_c_grid(c_grid), "j_limit": j_limit,
    })
    click.echo(json.dumps(out, indent=2, sort_keys=True))


@main.command("antipodal")
@_GROUP_OPT
@click.option("--g", "g_text", required=True)
@click.option("--radius", type=int, required=True)
@click.option("--i-max", type=int, required=True)
@click.option("--c-grid", default="0,1,2", show_default=True)
@click.option("--j-limit", type=int, default=None)
@click.pass_obj
def antipodal_cmd(client: ServiceClient, group_id: str, g_text: str,
                  radius: int, i_max: int, c_grid: str, j_limit: int | None) -> None:
    """Antipodality of a ray and its inverse, reported on the t scale."""
    _warn_small_p(group_id)
    out = client.post("/antipodal", {
        "group": group_id, "g": g_text, "radius": radius,
        "i_max": i_max, "c_grid": _parse_c_grid(c_grid), "j_limit": j_limit,
    })
    click.echo(json.dumps(out, indent=2, sort_keys=True))


@main.command("tmin")
@click.option("--d", type=int, required=True, help="Generator count.")
@click.option("--gamma", type=float, required=True)
@click.option("--delta", type=float, required=True)
@click.pass_obj
def tmin_cmd(client: ServiceClient, d: int, gamma: float, delta: float) -> None:
    """Antipodal separation floor sqrt(log(gamma/delta)/log((2d-1)gamma))."""
    out = client.post("/tmin", {"d": d, "gamma": gamma, "delta": delta})
    click.echo(out["t"])


@main.command("check-all")
@click.option("--p", type=int, default=None, help="Tower base exponent (default 20).")
@click.option("--config", "config_path", default=None, metavar="FILE",
              type=click.Path(exists=True, dir_okay=False),
              help="JSON file of configuration overrides.")
@click.option("--report", "report_path", default=None, metavar="FILE",
              help="Write the JSON report here.")
@click.pass_context
def check_all_cmd(ctx: click.Context, p: int | None, config_path: str | None,
                  report_path: str | None) -> None:
    """Run every verifier; one line per check, exit 0 iff none failed."""
    overrides: dict = {}
    if config_path is not None:
        try:
            loaded = json.loads(pathlib.Path(config_path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise click.UsageError(f"malformed --config file: {e}")
        if not isinstance(loaded, dict):
            raise click.UsageError("--config file must hold a JSON object")
        overrides.update(loaded)
    if p is not None:
        overrides["p"] = p
    _warn_small_p(f"gp:{overrides.get('p', 20)}")
    out = ctx.obj.post("/checks/run", {"config": overrides})
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for entry in out["results"]:
        counts[entry["status"]] += 1
        click.echo(f"[{entry['status'].upper():7s}] {entry['check_id']} "
                   f"({entry['runtime_s']:.2f}s)")
    click.echo(f"{len(out['results'])} checks: {counts['pass']} passed, "
               f"{counts['fail']} failed, {counts['skipped']} skipped")
    if report_path is not None:
        pathlib.Path(report_path).write_text(
            json.dumps(out, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        click.echo(f"report saved to {report_path}")
    ctx.exit(0 if out["passed"] else 1)


@main.group("word")
def word_cmd() -> None:
    """Explicit word families: recursion words and log-length shortcuts."""


def _word_command(kind: str, help_text: str):
    @word_cmd.command(kind, help=help_text)
    @click.argument("k", type=int)
    @click.pass_obj
    def cmd(client: ServiceClient, k: int) -> None:
        out = client.post(f"/words/{kind}", {"k": k})
        click.echo(out["text"])
        click.echo(f"length {out['length']}", err=True)

    return cmd


_word_command("wk", "Recursion word w_k over (a, t); w_k = a^(k-fold tower).")
_word_command("wkprime", "Indexed form of w_k, one letter per a with its t-level.")
_word_command("sk", "Log-length word equal to s^k in the amalgam.")
_word_command("g1g2", "Log-length word equal to a^(2^(k+1)-2) in the amalgam.")


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve_cmd(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
