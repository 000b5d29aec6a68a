import logging
from typing import Optional

import click

from src.config import Settings, configure_logging
from src.errors import EXIT_DOMAIN, CollatzError, exit_code_for
from src.managers.command_manager import FORMATS, CommandManager

logger = logging.getLogger(__name__)


class TermType(click.ParamType):
    """Positive integer of any size, written in plain decimal."""

    name = "term"

    def convert(self, value, param, ctx):
        if isinstance(value, int):
            return value
        text = str(value).strip()
        if not text.isdigit():
            self.fail(f"{value!r} is not a decimal integer", param, ctx)
        return int(text)


TERM = TermType()
KIND = click.Choice(["t", "h"])


class CollatzGroup(click.Group):
    """Usage errors are domain errors here: exit 1, leaving 2 for cap/guard exhaustion."""

    def make_context(self, *args, **kwargs):
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            e.exit_code = EXIT_DOMAIN
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_DOMAIN
            raise


def _emit(ctx: click.Context, name: str, /, fail_on=None, color: Optional[bool] = None, **params):
    manager: CommandManager = ctx.obj
    fmt = ctx.find_root().params["fmt"]
    try:
        result = manager.run(name, **params)
        click.echo(manager.render(name, result, fmt, **params), color=color)
    except CollatzError as e:
        logger.debug("command %s failed", name, exc_info=True)
        click.echo(f"error: {e}", err=True)
        ctx.exit(exit_code_for(e))
    if fail_on is not None and fail_on(result):
        ctx.exit(EXIT_DOMAIN)


@click.group(cls=CollatzGroup)
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True,
              help="Output format on stdout.")
@click.option("--threads", type=click.IntRange(min=1), default=None,
              help="Worker processes for residue scans (default COLLATZ_THREADS).")
@click.option("--unsafe-guard", is_flag=True, help="Lift the enumeration guards.")
@click.option("--log-level", default=None, help="Overrides COLLATZ_LOG_LEVEL.")
@click.pass_context
def cli(ctx, fmt, threads, unsafe_guard, log_level):
    """Collatz subsequence decomposition, stopping-time classes and limits."""
    settings = Settings.from_env().with_overrides(threads=threads, log_level=log_level and log_level.upper())
    if unsafe_guard:
        settings = settings.unsafe()
    configure_logging(settings.log_level)
    ctx.obj = CommandManager(settings)


@cli.command()
@click.argument("s", type=TERM)
@click.option("--cap", type=click.IntRange(min=1), default=None, help="Maximum number of terms.")
@click.pass_context
def traj(ctx, s, cap):
    """Trajectory of S down to 1."""
    _emit(ctx, "traj", s=s, cap=cap)


@cli.command()
@click.argument("s", type=TERM)
@click.option("--max", "max_", type=click.IntRange(min=1), default=None, help="Maximum number of subsequences.")
@click.pass_context
def decompose(ctx, s, max_):
    """Preamble, C^h and C^t blocks of the trajectory of S."""
    _emit(ctx, "decompose", s=s, max=max_)


@cli.command()
@click.argument("s", type=TERM)
@click.pass_context
def subseq(ctx, s):
    """The subsequence starting at S (S ≡ 3, 7, 9 mod 12)."""
    _emit(ctx, "subseq", s=s)


@cli.command("list")
@click.option("--kind", type=KIND, required=True)
@click.option("--max", "max_", type=TERM, required=True, help="Largest start.")
@click.pass_context
def list_(ctx, kind, max_):
    """First subsequences of one kind for every start up to --max."""
    _emit(ctx, "list", kind=kind, max=max_)


@cli.command("enum-length")
@click.option("--kind", type=KIND, required=True)
@click.option("--len", "length", type=click.IntRange(min=2), required=True)
@click.option("--brute", "method", flag_value="brute", help="Scan every residue.")
@click.option("--symbolic", "method", flag_value="symbolic", default=True, help="Refine affine traces (default).")
@click.pass_context
def enum_length(ctx, kind, length, method):
    """Residue classes whose subsequences have length index --len."""
    _emit(ctx, "enum_length", kind=kind, length=length, method=method)


@cli.command()
@click.argument("s", type=TERM)
@click.pass_context
def sigma(ctx, s):
    """Stopping time of S."""
    _emit(ctx, "sigma", s=s)


@cli.command()
@click.argument("s", type=TERM)
@click.pass_context
def tau(ctx, s):
    """Stopping time and C^t count of S (S ≡ 3, 7 mod 12)."""
    _emit(ctx, "tau", s=s)


@cli.command("enum-sigma")
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.option("--method", type=click.Choice(["coefficient", "direct"]), default="coefficient", show_default=True)
@click.pass_context
def enum_sigma(ctx, n, method):
    """Residue classes mod 2^σ with stopping time σ(n)."""
    _emit(ctx, "enum_sigma", n=n, method=method)


@cli.command("enum-tau")
@click.option("--n", "n", type=click.IntRange(min=2), required=True)
@click.option("--tau", "tau_", type=click.IntRange(min=1), default=None)
@click.pass_context
def enum_tau(ctx, n, tau_):
    """Residue classes mod 3·2^σ grouped by τ."""
    _emit(ctx, "enum_tau", n=n, tau=tau_)


@cli.command()
@click.option("--nmax", type=click.IntRange(min=2), required=True)
@click.pass_context
def table(ctx, nmax):
    """The A_τ(n) table."""
    _emit(ctx, "table", nmax=nmax)


@cli.command()
@click.argument("s", type=TERM)
@click.option("--max", "max_", type=click.IntRange(min=1), default=None)
@click.option("--ansi/--plain", default=False, help="Red stopping-sequences instead of a '*' prefix.")
@click.pass_context
def profile(ctx, s, max_, ansi):
    """Glyph profile of the decomposition of S."""
    _emit(ctx, "profile", color=True if ansi else None, s=s, max=max_, ansi=ansi)


@cli.command("eval")
@click.argument("name")
@click.pass_context
def eval_(ctx, name):
    """Score a regenerated reference fixture."""
    _emit(ctx, "eval", name=name)


@cli.command()
@click.pass_context
def commands(ctx):
    """List the command registry."""
    for name, spec in ctx.obj.describe().items():
        click.echo(f"{name}: {spec['description']}")


@cli.group(cls=CollatzGroup)
def verify():
    """Check the counting conjectures."""


def _any_failed(checks) -> bool:
    return not all(c.match for c in checks)


@verify.command("fib")
@click.option("--kind", type=KIND, required=True)
@click.option("--max", "max_", type=click.IntRange(min=2), required=True)
@click.pass_context
def verify_fib(ctx, kind, max_):
    """Class counts against F(h-1) and 2·F(t+1)-2."""
    _emit(ctx, "verify_fib", fail_on=_any_failed, kind=kind, max=max_)


@verify.command("c3")
@click.option("--n", "n", type=click.IntRange(min=2), required=True)
@click.option("--to", "to", type=click.IntRange(min=2), default=None)
@click.pass_context
def verify_c3(ctx, n, to):
    """z(n) = (1/2)·Σ_τ A_τ(n)."""
    _emit(ctx, "verify_c3", fail_on=_any_failed, n=n, to=to)


@verify.command("c4")
@click.option("--n", "n", type=click.IntRange(min=2), required=True)
@click.option("--to", "to", type=click.IntRange(min=2), default=None)
@click.pass_context
def verify_c4(ctx, n, to):
    """A_1(n) = 2^m."""
    _emit(ctx, "verify_c4", fail_on=_any_failed, n=n, to=to)


@cli.group(cls=CollatzGroup)
def limits():
    """Exact quotient limits."""


@limits.command("t5")
@click.option("--G", "G", type=click.IntRange(min=2), required=True)
@click.option("--G-to", "G_to", type=click.IntRange(min=2), default=None)
@click.pass_context
def limits_t5(ctx, G, G_to):
    """2^(G-1) / Σ 2^(G-n-β_n)."""
    _emit(ctx, "limits_t5", G=G, G_to=G_to)


@limits.command("t6")
@click.option("--G", "G", type=click.IntRange(min=2), required=True)
@click.option("--G-to", "G_to", type=click.IntRange(min=2), default=None)
@click.option("--z-file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="'n<TAB>z(n)' file with a '# source:' header (default: bundled).")
@click.option("--computed-z", "computed", is_flag=True,
              help="Enumerate z(n) with enum-sigma instead of reading a file (n up to the σ guard).")
@click.pass_context
def limits_t6(ctx, G, G_to, z_file, computed):
    """2^(G-1) / Σ 2^(G-⌊n·log₂3⌋)·z(n)."""
    _emit(ctx, "limits_t6", G=G, G_to=G_to, z_file=z_file, computed=computed)


def main():
    cli(prog_name="collatz")


if __name__ == "__main__":
    main()
