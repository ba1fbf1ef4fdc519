"""End-to-end checks of the command-line tool: exit codes, JSON schema, round trips."""

import hashlib
import json
import subprocess
import sys
import tempfile
import xml.etree.ElementTree as ET
from pathlib import Path

TOOL = sys.argv[1]
SHANNON = "[-2pi,-pi) | [pi,2pi)"
failures = []


def run(*args):
    p = subprocess.run([TOOL, *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def doc(*args, code=0):
    rc, out, err = run(*args)
    expect(rc == code, f"{args}: exit {rc}, wanted {code}; {err.strip()}")
    if not out:
        return {}
    d = json.loads(out)
    expect(d.get("schema") == 1, f"{args}: schema {d.get('schema')}")
    return d


def expect(ok, what):
    if not ok:
        failures.append(what)


# check
d = doc("check", SHANNON)
expect(d["is_wavelet_set"] is True, "shannon accepted")
expect(d["measure"] == "2", "shannon measure")
d = doc("check", "[0,2pi)", code=1)
expect(d["is_wavelet_set"] is False, "[0,2pi) rejected")
expect(d["dilation"]["ok"] is False and d["dilation"]["overlap"]["expr"] != "empty", "dilation overlap reported")
rc, out, err = run("check", "[0,2pi")
expect(rc == 2 and "line 1, column" in err, "parse error position")
rc, out, err = run("check", "[0,2qi)")
expect(rc == 2 and "'q" in err, "offending token reported")
rc, _, _ = run("frobnicate")
expect(rc == 2, "unknown command is a usage error")
d = doc("check", "[-pi,pi)x[-pi,pi)", code=1)
expect(d["is_wavelet_set"] is False, "square is not a 2D wavelet set")

# catalog and pair
listing = doc("catalog", "list")
names = [e["name"] for e in listing["entries"]]
expect("theorem4_pair" in names and "pine_tree" in names, "catalog list")
meyer = doc("catalog", "get", "meyer_pair")
e, f = meyer["sets"]["E"]["expr"], meyer["sets"]["F"]["expr"]
d = doc("pair", e, f)
for key in ("interpolation_pair", "theorem1", "theorem3_i", "domains_equal", "theorem3_ii"):
    expect(d[key] is True, f"meyer {key}")
t4 = doc("catalog", "get", "theorem4_pair")
expect(t4["ok"] is True, "theorem4 catalog expectations")
e, f = t4["sets"]["E"]["expr"], t4["sets"]["F"]["expr"]
d = doc("pair", e, f)
wanted = dict(interpolation_pair=False, theorem1=False, theorem3_i=False, domains_equal=True, theorem3_ii=True)
for key, v in wanted.items():
    expect(d[key] is v, f"theorem4 {key}")
d = doc("sigma", e, f, "--eval", "33/16pi")
expect(d["value"] == "129/16pi", "sigma at 33/16pi")
d = doc("sigma", e, f, "--image", "[33/16pi,34/16pi)")
expect(d["image"]["expr"] == "[129/16pi, 65/8pi)", "sigma image of E1")
d = doc("sigma", e, f, "--square")
expect(d["is_identity"] is False, "sigma squared is not the identity")
d = doc("domain", e, f)
expect(d["equal"] is True, "theorem4 domains equal")
rc, _, _ = run("pair", SHANNON, "[0,2pi)")
expect(rc == 1, "pair on a non-wavelet set")
rc, _, err = run("catalog", "get", "example10", "0")
expect(rc == 2, "out-of-range catalog parameter")

# every printed set re-parses to itself
for entry in ("shannon", "theorem4_pair", "example7", "example10", "four_corners"):
    item = doc("catalog", "get", entry, "--no-verify")
    for label, s in item["sets"].items():
        rc, out, _ = run("check", s["expr"])
        expect(rc in (0, 1), f"{entry}.{label} re-parses")
        expect(json.loads(out)["measure"] == s["measure"], f"{entry}.{label} measure survives")

# lemma5
d = doc("lemma5", "--E", "[pi,2pi)", "--F", "[-2pi,-pi)", "--n1", "-1", "--n2", "-2", "--k1", "-1", "--k2", "1")
expect(d["result"]["G"]["expr"] == "[-8/3pi, -2pi) | [-pi, -2/3pi)", "lemma5 telescoped output")
d = doc("lemma5", "--E", "[pi,2pi)", "--F", "[-2pi,-pi)", "--n1", "-1", "--n2", "2", "--k1", "-1", "--k2", "1", code=1)
expect(d["ok"] is False and "message" in d["validation"], "invalid lemma5 config")
rc, _, _ = run("lemma5", "--E", "[pi,2pi)", "--F", "[-2pi,-pi)", "--n1", "x", "--n2", "2", "--k1", "-1", "--k2", "1")
expect(rc == 2, "malformed index")

# fuzz
d = doc("fuzz", "--seeds", "12", "--first-seed", "5")
expect(d["ok"] is True and d["seeds"] == 12 and d["counterexamples"] == [], "fuzz summary")
rc, _, _ = run("fuzz", "--seeds", "3", "--base", "meyer")
expect(rc == 2, "bad fuzz base")

# render
with tempfile.TemporaryDirectory() as tmp:
    digests = []
    for i in range(2):
        out = Path(tmp) / f"t4_{i}.svg"
        rc, _, _ = run("render1d", "--catalog", "theorem4_pair", "--arrows", "--out", str(out))
        expect(rc == 0, "render1d")
        digests.append(hashlib.sha256(out.read_bytes()).hexdigest())
        root = ET.parse(out).getroot()
        expect(root.tag.endswith("svg"), "render1d is svg")
    expect(digests[0] == digests[1], "render1d byte-stable")
    rc, svg, _ = run("render2d", "--catalog", "four_corners")
    expect(rc == 0 and svg.startswith("<?xml"), "render2d to stdout")
    rc, _, _ = run("render1d", "--catalog", "four_corners")
    expect(rc == 2, "render1d on a planar entry")

if failures:
    print("\n".join(failures))
    sys.exit(1)
print("cli: all checks passed")
