#!/usr/bin/env python3
"""Run curvetool on the documented examples, check exit codes and results, and
validate every JSON report against docs/report.schema.json."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

TOOL = sys.argv[1]
ROOT = sys.argv[2]
DATA = os.path.join(ROOT, "tests", "data")

with open(os.path.join(ROOT, "docs", "report.schema.json")) as fh:
    SCHEMA = json.load(fh)
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)

failures = []


def run(args, code, env=None, fmt="json"):
    cmd = [TOOL] + args + (["--format", "json"] if fmt == "json" else [])
    full_env = dict(os.environ)
    full_env.pop("CURVETOOL_TRUNC", None)
    if env:
        full_env.update(env)
    p = subprocess.run(cmd, capture_output=True, text=True, env=full_env)
    label = " ".join(args)
    if p.returncode != code:
        failures.append(f"{label}: exit {p.returncode}, expected {code}\n{p.stdout}{p.stderr}")
        return None
    if fmt != "json":
        return p.stdout
    try:
        report = json.loads(p.stdout)
    except json.JSONDecodeError as e:
        failures.append(f"{label}: output is not JSON ({e})")
        return None
    errors = sorted(VALIDATOR.iter_errors(report), key=lambda e: list(e.path))
    for e in errors:
        failures.append(f"{label}: schema: {'/'.join(map(str, e.path))}: {e.message}")
    if report.get("exit_code") != code:
        failures.append(f"{label}: report exit_code {report.get('exit_code')}, expected {code}")
    return report


def expect(label, cond, detail=""):
    if not cond:
        failures.append(f"{label}: {detail}")


def verdict(report, prefix):
    for v in report["verdicts"]:
        if v["check"].startswith(prefix):
            return v
    return None


def lines_of(report):
    return {a["line"] for a in report["results"]["asymptotes"]}


# asymptotes
r = run(["analyze", "x*y - 5", "--asymptotes"], 0)
if r:
    expect("xy - 5", lines_of(r) == {"x = 0", "y = 0"}, lines_of(r))
    expect("xy - 5 exact", {a["t0"] for a in r["results"]["asymptotes"]} == {"0/1"})
r = run(["analyze", "x^2 - y", "--asymptotes"], 0)
if r:
    expect("parabola", lines_of(r) == set(), lines_of(r))
r = run(["analyze", "x*y - (x^3 + x^2 + x + 1)", "--asymptotes"], 0)
if r:
    expect("trident", lines_of(r) == {"x = 0"}, lines_of(r))
r = run(["analyze", "x^2 + y^2 - 1", "--asymptotes"], 0)
if r:
    a = r["results"]["asymptotes"]
    expect("circle asymptotes", len(a) == 1 and isinstance(a[0]["a"], dict) and a[0]["conjugates"] == 2, a)

# presentation
r = run(["analyze", "x^2 + y^2 - 1", "--present"], 0)
if r:
    xs = {f["x"] for f in r["results"]["presentation"]["critical_fibres"]}
    expect("circle critical abscissae", xs == {"-1/1", "1/1"}, xs)
r = run(["analyze", "y^4 - y^2 + x^2", "--present"], 1)
if r:
    v = verdict(r, "presentation c4")
    expect("quartic c4", v and v["status"] == "FAIL" and "x = 1/2: gcd(F, F_y) has degree 2" in v["witness"], v)
r = run(["analyze", "y^2 - x*(x-1)*(x-2)", "--present"], 1)
if r:
    v = verdict(r, "presentation c1")
    expect("cubic c1", v and v["status"] == "FAIL", v)

# default analysis, factorization, classification, points
r = run(["analyze", "(y-1)*(y-2)*(y+3) + x*(x*y + 2*y - 4)"], 0)
if r:
    expect("default runs presentation and asymptotes", "presentation" in r["results"] and "asymptotes" in r["results"])
r = run(["analyze", "(y-1)*(y-2)*(y+3) + x*(x*y + 2*y - 4)", "--factor", "12"], 0)
if r:
    f = r["results"]["factor"]
    expect("factor", f["vieta_ok"] and f["schemes_agree"] and f["N"] == 12 and len(f["sheets"]) == 3, f)
r = run(["analyze", "x^2 + y^2 - 1", "--classify"], 0)
if r:
    expect("classify", r["results"]["classify"]["axis_0"]["verdict"] == "uniform-silver", r["results"]["classify"])
r = run(["analyze", "x^2 + y^2 - 25", "--emit-points", "6"], 0)
if r:
    pts = {tuple(p) for p in r["results"]["points"]}
    expect("points", ("3/1", "4/1") in pts and ("0/1", "-5/1") in pts and len(pts) == 7, pts)

# truncation from the environment and the flag
r = run(["analyze", "x*y - 1", "--asymptotes"], 0, env={"CURVETOOL_TRUNC": "9"})
if r:
    expect("env trunc", r["inputs"]["flags"]["trunc"] == 9, r["inputs"]["flags"])
r = run(["--trunc", "5", "analyze", "x*y - 1", "--asymptotes"], 0, env={"CURVETOOL_TRUNC": "9"})
if r:
    expect("flag trunc", r["inputs"]["flags"]["trunc"] == 5, r["inputs"]["flags"])

# input errors and the extension budget
r = run(["analyze", "x^2 + (y"], 2)
if r:
    expect("parse error kind", r["error"]["kind"] == "parse", r["error"])
r = run(["analyze", "2x + y"], 2)
if r:
    expect("implicit multiplication", "implicit multiplication" in r["error"]["message"], r["error"])
run(["analyze", "x*y*t - 1"], 2)
r = run(["--tower-depth", "1", "analyze", "(y^2-2)^2 + x", "--classify"], 3)
if r:
    expect("budget kind", r["error"]["kind"] == "extension-budget", r["error"])
run(["analyze", "(y^2-2)^2 + x", "--classify"], 0)

# transforms
r = run(["transform", "x*z - 1", "--step", "shear-to-q1 alpha=1", "--verify"], 0)
if r:
    s = r["results"]["steps"][0]
    expect("shear top form", s["top_form"] == "x^3" and s["rounds"] == 3, s)
    expect("shear verify", s["verify"]["disagree"] == 0 and s["verify"]["agree"] > 0, s["verify"])
r = run(["transform", "(z - x)*(z - 2*x + 1) + (x - 1)^3", "--step", "isolate at=1,1"], 0)
if r:
    iso = r["results"]["steps"][0]["isolation"]
    expect("isolate rounds", all(b["rounds"] == 1 for b in iso), iso)
    expect("isolate centres", {b["centers"][-1] for b in iso} == {"(1, 0)", "(1, 1)"}, iso)
r = run(["transform", "x^2 + z^2 - 1", "--step", "identity"], 0)
if r:
    expect("identity", r["results"]["unchanged"] and r["results"]["final_curve"] == "x^2 + z^2 - 1", r["results"])
r = run(["transform", "x*y - 1", "--step", "mobius a=1 b=x c=x d=1", "--step", "shear alpha=2", "--verify"], 0)
if r:
    expect("mobius steps", r["inputs"]["renamed"] == "y -> z" and len(r["results"]["steps"]) == 2, r["inputs"])
    for s in r["results"]["steps"]:
        expect("mobius verify " + s["step"], s["verify"]["disagree"] == 0, s["verify"])
r = run(["transform", "x*z - 1", "--step", "mobius a=0 b=1 c=1 d=0"], 2)
if r:
    expect("invalid map", "b(0) must be 0" in r["error"]["message"], r["error"])
run(["transform", "x*z - 1", "--step", "rotate angle=1"], 2)
run(["transform", "x*z - 1", "--step", "shear beta=1"], 2)
with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as fh:
    fh.write("# a shear, then the identity\nshear alpha=1\n\nidentity\n")
    script = fh.name
r = run(["transform", "x*z - 1", "--script", script], 0)
if r:
    expect("script", [s["step"] for s in r["results"]["steps"]] == ["shear alpha=1", "identity"], r["results"])
os.unlink(script)

# degeneration families
conic = os.path.join(DATA, "conic_mirror.cfg")
cone = os.path.join(DATA, "cubic_cone.cfg")
quartic = os.path.join(DATA, "quartic_mirror.cfg")
r = run(["degenerate", conic, "--fiber", "0"], 0)
if r:
    fib = r["results"]["fibers"][0]
    expect("mirror fibre", fib["fiber"] == "-X^2 + 4*Y^2 + 4*X - 4", fib)
    expect("mirror lines", {l["line"] for l in fib["lines"]} == {"x + 2*y - 2 = 0", "x - 2*y - 2 = 0"}, fib)
    expect("mirror vertex", fib["vertex"] == ["2/1", "0/1"], fib)
r = run(["degenerate", conic, "--check-asymptotic", "strict"], 1)
if r:
    v = verdict(r, "asymptotic degeneration")
    expect("strict witness", v and "(s + 1)/(3*s - 2)" in v["witness"], v)
r = run(["degenerate", conic, "--check-asymptotic", "weak"], 0)
if r:
    expect("weak", r["results"]["asymptotic"]["pass"], r["results"]["asymptotic"])
r = run(["degenerate", cone, "--fiber", "0"], 0)
if r:
    fib = r["results"]["fibers"][0]
    want = {"x - 1/2*y = 0", "x - 1/3*y = 0", "x - 1/4*y = 0"}
    expect("cone lines", {l["line"] for l in fib["lines"]} == want, fib)
    expect("cone notes", r["results"]["family"]["notes"] ==
           ["stripped factor X^3 from the surfaces at infinity", "stripped factor t + 24"], r["results"]["family"])
r = run(["degenerate", cone, "--fiber", "1", "--track", "1,2,1/3"], 0)
if r:
    expect("cone track", len(r["results"]["track"]) == 3 and all(t["nodal"] for t in r["results"]["track"]),
           r["results"]["track"])
    v = verdict(r, "irreducibility")
    expect("cone irreducible", v and v["witness"].startswith("irreducible"), v)
r = run(["degenerate", cone, "--good-spec", "--samples", "4"], 1)
if r:
    expect("cone good spec", r["results"]["good_specialization"]["verdict"] == "FAIL", r["results"])
r = run(["degenerate", quartic, "--good-spec"], 0)
if r:
    g = r["results"]["good_specialization"]
    expect("quartic good spec", g["verdict"] == "PASS" and len(g["paths"][0]["samples"]) == 10, g["detail"])
r = run(["degenerate", os.path.join(DATA, "pencil_form.cfg")], 0)
if r:
    expect("pencil", {l["line"] for l in r["results"]["fibers"][0]["lines"]} == {"x = 0", "y = 0"}, r["results"])
r = run(["degenerate", conic, "--check-asymptotic", "loose"], 2)
if r:
    expect("usage error kind", r["error"]["kind"] == "usage", r["error"])
run(["degenerate", conic, "--fiber", "abc"], 2)

bad = [
    "family = cone\ncurve.F1 = y - x^2\ncurve.F2 = z - x^3\ncenter.origin = 0,0,0\ncenter.direction = 0,0,1\ncolour = red\n",
    "family = mirror\nplane1.u = 1,0,1\nplane1.v = 0,1,0\nplane2.u = 1,0,0\nplane2.v = 0,1,0\ncurve = y^2 - x - 1\n"
    "P = 2,0,0\nQ = 2,0,0\n",
    "family = cone\ncurve.F1 = y - x^2\n",
    "family = form\nH = X*Y - t*W^2\ndegenerate = 1/0\n",
    "family = helix\n",
    "no equals sign here\n",
]
for text in bad:
    with tempfile.NamedTemporaryFile("w", suffix=".cfg", delete=False) as fh:
        fh.write(text)
        path = fh.name
    run(["degenerate", path], 2)
    os.unlink(path)
run(["degenerate", os.path.join(DATA, "missing.cfg")], 2)

# text format
out = run(["analyze", "x*y - 5", "--asymptotes"], 0, fmt="text")
if out is not None:
    expect("text output", "[INFO] asymptotes: {x = 0, y = 0}" in out, out)

if failures:
    print("\n".join(failures))
    print(f"{len(failures)} failure(s)")
    sys.exit(1)
print("all CLI examples passed")
