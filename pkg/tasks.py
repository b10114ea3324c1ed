"""
tasks.py
--------
Project invoke tasks

Available commands
  invoke --list
  invoke fmt
  invoke sort
  invoke check
  invoke lint
  invoke test
  invoke verify
"""
import invoke

TARGETS_DESCRIPTION = "Paths/directories to format. [default: totgraph tests tasks.py ]"
SOURCES = "totgraph tests tasks.py"


@invoke.task(help={"targets": TARGETS_DESCRIPTION})
def sort(ctx, targets=SOURCES):
    """Sort module imports."""
    print("sorting imports ...")
    args = ["isort", "--atomic", targets]
    ctx.run(" ".join(args))


@invoke.task(pre=[sort], help={"targets": TARGETS_DESCRIPTION})
def fmt(ctx, targets=SOURCES):
    """Format python source code & sort imports."""
    print("formatting ...")
    args = ["black", targets]
    ctx.run(" ".join(args))


@invoke.task
def check(ctx, fmt=False, sort=False, diff=False):  # pylint: disable=redefined-outer-name
    """Check code format and import order; fails when either check fails."""
    if not any([fmt, sort]):
        fmt = True
        sort = True

    commands = []
    if fmt:
        commands.append(["black", "--check", SOURCES])
    if sort:
        commands.append(["isort", "--check", SOURCES])

    failed = []
    for args in commands:
        if diff:
            args.append("--diff")
        if not ctx.run(" ".join(args), warn=True).ok:
            failed.append(args[0])
    if failed:
        raise invoke.Exit(message=f"check failed: {', '.join(failed)}", code=1)


@invoke.task
def lint(ctx):
    """Run linter."""
    ctx.run(" ".join(["pylint", "totgraph"]))


@invoke.task
def test(ctx, cov=False):
    """Run pytest tests."""
    args = ["pytest", "-v"]
    if cov:
        args.extend(["--cov=totgraph", "--cov-report=term-missing"])
    ctx.run(" ".join(args))


@invoke.task(help={"which": "total, reg or conjecture", "max_order": "Largest ring order."})
def verify(ctx, which="total", max_order=64, report=None):
    """Run a verification suite through the CLI."""
    group = "explore" if which == "conjecture" else "verify"
    args = ["totgraph", group, which, "--max-order", str(max_order)]
    if report:
        args.extend(["--report", report])
    ctx.run(" ".join(args))
