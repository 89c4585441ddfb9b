"""Cross-language execution checks for rendered packages.

For every requested target whose toolchain is installed, render the package
into a scratch directory, compile it if the target needs compiling, run it
with scripted argv/stdin, and compare normalized stdout across targets.
Targets without a local toolchain are reported "skipped" and never count as
failures, so a machine with only python3 still gets a meaningful (if
one-sided) report.

Toolchain discovery probes PATH for conventional executable names; each can
be overridden by environment variable:

    OOGEN_PYTHON  python3
    OOGEN_JAVAC   javac          OOGEN_JAVA  java
    OOGEN_CSC     mcs, csc       OOGEN_MONO  mono
    OOGEN_CXX     g++, c++, clang++

Stdout normalization (targets legitimately differ in formatting): line
endings become \\n, per-line trailing whitespace is stripped, True/False
word tokens are lowercased, and numeric tokens containing a decimal point
are rewritten to Python's shortest round-trip form.
"""

from __future__ import annotations

import difflib
import os
import re
import shutil
import subprocess
from dataclasses import dataclass, field

from . import ir
from .backends import TARGETS, get_backend
from .errors import NoMainModule

# (env override, default candidates) per tool; a target is available only
# when every one of its tools resolves.
_TOOL_SPECS: dict[str, tuple[tuple[str, tuple[str, ...]], ...]] = {
    "python": (("OOGEN_PYTHON", ("python3",)),),
    "java": (("OOGEN_JAVAC", ("javac",)), ("OOGEN_JAVA", ("java",))),
    "csharp": (("OOGEN_CSC", ("mcs", "csc")), ("OOGEN_MONO", ("mono",))),
    "cpp": (("OOGEN_CXX", ("g++", "c++", "clang++")),),
}

_STEP_TIMEOUT = 60  # seconds per compile or run step

_BOOL_WORD = re.compile(r"\b(True|False|true|false)\b")
_FLOAT_TOKEN = re.compile(r"-?\d+\.\d+(?:[eE][+-]?\d+)?")


def normalize_stdout(text: str) -> str:
    lines = text.replace("\r\n", "\n").splitlines()
    out = []
    for line in lines:
        line = line.rstrip()
        line = _BOOL_WORD.sub(lambda m: m.group(0).lower(), line)
        line = _FLOAT_TOKEN.sub(lambda m: repr(float(m.group(0))), line)
        out.append(line)
    return "\n".join(out)


def find_toolchain(target: str) -> tuple[str, ...] | None:
    """Resolved executable paths for `target`, or None if any tool is absent."""
    resolved = []
    for env, defaults in _TOOL_SPECS[target]:
        candidates = (os.environ[env],) if os.environ.get(env) else defaults
        path = next((w for c in candidates if (w := shutil.which(c))), None)
        if path is None:
            return None
        resolved.append(path)
    return tuple(resolved)


@dataclass(frozen=True)
class ToolReport:
    """Outcome of one target's render/compile/run attempt."""

    target: str
    status: str  # "ok" | "skipped" | "compile-error" | "runtime-error"
    detail: str = ""
    stdout: str | None = None  # normalized; only for status "ok"


@dataclass(frozen=True)
class VerifyReport:
    runs: tuple[ToolReport, ...]

    @property
    def executed(self) -> tuple[ToolReport, ...]:
        return tuple(r for r in self.runs if r.status == "ok")

    @property
    def agree(self) -> bool:
        return len({r.stdout for r in self.executed}) <= 1

    @property
    def compile_failed(self) -> bool:
        return any(r.status == "compile-error" for r in self.runs)

    @property
    def run_failed(self) -> bool:
        return any(r.status == "runtime-error" for r in self.runs)

    def diffs(self) -> list[str]:
        texts = []
        baseline = None
        for report in self.executed:
            if baseline is None:
                baseline = report
                continue
            if report.stdout != baseline.stdout:
                diff = difflib.unified_diff(
                    (baseline.stdout or "").splitlines(keepends=True),
                    (report.stdout or "").splitlines(keepends=True),
                    fromfile=baseline.target, tofile=report.target)
                texts.append("".join(diff))
        return texts

    def summary(self) -> str:
        lines = []
        for r in self.runs:
            note = f" ({r.detail})" if r.detail and r.status != "ok" else ""
            lines.append(f"{r.target:7s} {r.status}{note}")
        if not self.executed:
            lines.append("no toolchain available; nothing executed")
        elif self.agree and not self.run_failed and not self.compile_failed:
            lines.append(f"{len(self.executed)} executed target(s) agree")
        else:
            lines.extend(self.diffs())
        return "\n".join(lines)


def _run_step(argv: list[str], cwd: str, stdin: str = "") -> subprocess.CompletedProcess:
    return subprocess.run(argv, cwd=cwd, input=stdin, capture_output=True,
                          text=True, timeout=_STEP_TIMEOUT)


def run_target(pkg: ir.PackageTree, target: str, workdir: str,
               args: tuple[str, ...] = (), stdin: str = "") -> ToolReport:
    """Render `pkg` for one target into `workdir`, compile, and execute."""
    tools = find_toolchain(target)
    if tools is None:
        names = ", ".join(" or ".join(defaults) for _, defaults in _TOOL_SPECS[target])
        return ToolReport(target, "skipped", detail=f"no {names} on PATH")
    main = pkg.main_module
    if main is None:
        raise NoMainModule(f"package {pkg.name!r} has no main module to execute")

    files = get_backend(target).render_package(pkg)
    for f in files:
        path = os.path.join(workdir, f.path)
        with open(path, "w") as fh:
            fh.write(f.text)

    if target == "python":
        run_argv = [tools[0], f"{main.name}.py", *args]
    elif target == "java":
        javac, java = tools
        sources = sorted(f.path for f in files if f.path.endswith(".java"))
        compiled = _run_step([javac, *sources], workdir)
        if compiled.returncode != 0:
            return ToolReport(target, "compile-error", detail=compiled.stderr)
        run_argv = [java, main.name, *args]
    elif target == "csharp":
        csc, mono = tools
        sources = sorted(f.path for f in files if f.path.endswith(".cs"))
        exe = f"{pkg.name}.exe"
        compiled = _run_step([csc, f"-out:{exe}", *sources], workdir)
        if compiled.returncode != 0:
            return ToolReport(target, "compile-error",
                              detail=compiled.stdout + compiled.stderr)
        run_argv = [mono, exe, *args]
    elif target == "cpp":
        sources = sorted(f.path for f in files if f.path.endswith(".cpp"))
        compiled = _run_step([tools[0], "-o", "prog", *sources], workdir)
        if compiled.returncode != 0:
            return ToolReport(target, "compile-error", detail=compiled.stderr)
        run_argv = [os.path.join(workdir, "prog"), *args]
    else:
        raise ValueError(f"unknown target {target!r}")

    try:
        ran = _run_step(run_argv, workdir, stdin=stdin)
    except subprocess.TimeoutExpired:
        return ToolReport(target, "runtime-error", detail="timed out")
    if ran.returncode != 0:
        return ToolReport(target, "runtime-error",
                          detail=f"exit {ran.returncode}: {ran.stderr}")
    return ToolReport(target, "ok", stdout=normalize_stdout(ran.stdout))


def verify_package(pkg: ir.PackageTree, targets: tuple[str, ...] = TARGETS,
                   args: tuple[str, ...] = (), stdin: str = "",
                   root_dir: str | None = None) -> VerifyReport:
    """Run `pkg` on every available target toolchain and compare stdout.

    Each target gets its own subdirectory of `root_dir` (a fresh temp dir
    when None), so renders never collide.
    """
    import tempfile

    own_root = root_dir is None
    root = tempfile.mkdtemp(prefix="oogen-verify-") if own_root else root_dir
    try:
        runs = []
        for target in targets:
            workdir = os.path.join(root, target)
            os.makedirs(workdir, exist_ok=True)
            runs.append(run_target(pkg, target, workdir, args=args, stdin=stdin))
        return VerifyReport(tuple(runs))
    finally:
        if own_root:
            shutil.rmtree(root, ignore_errors=True)
