#!/usr/bin/env python3
"""Run every finite certificate in one sweep and print a summary table.

Usage: python scripts/run_certificates.py [--depth N] [--json]
"""

import argparse
import json
import sys

from ehresmann import coherence as co
from ehresmann.psdp import IntegersAdd, PSetElement


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=4)
    ap.add_argument("--json", action="store_true", help="emit full reports as JSON")
    args = ap.parse_args()
    N = args.depth

    reports = {}
    for name, build, n in (
        ("forbidden-config/fi", co.instance_fi, N),
        ("forbidden-config/freemonoid", co.instance_freemonoid, N),
        ("forbidden-config/mm", co.instance_mm, min(N, 4)),
        ("forbidden-config/fad", co.instance_fad, N),
    ):
        ctx, a, b, e = build()[:4]
        reports[name] = co.check_forbidden_config(a, b, e, n, ctx)

    Z = IntegersAdd()
    g = PSetElement(Z, frozenset(), 1)
    h = PSetElement(Z, frozenset(), -1)
    e = PSetElement(Z, frozenset({0}), 0)
    reports["bgr/S(Z)"] = co.check_bgr_config(g, h, e, N, co.SdpContext(Z))
    from ehresmann.expansions import qn_from_sdp

    q3 = co.QnContext(Z, 3)
    reports["bgr/Q3(Z)"] = co.check_bgr_config(
        qn_from_sdp(g, 3), qn_from_sdp(h, 3), qn_from_sdp(e, 3), N, q3
    )
    reports["ghe/Q3(Z)"] = co.check_ghe_quotient_conditions(1, N, q3)
    reports["triangle/S(x*)"] = co.check_triangle(min(N, 3))

    worst = 0
    for name, rep in sorted(reports.items()):
        mark = {"pass": "ok  ", "fail": "FAIL", "inconclusive": "????"}[rep.verdict]
        print(f"  {mark}  {name:30s} depth={rep.depth}  failures={len(rep.failures)}")
        worst = max(worst, {"pass": 0, "fail": 1, "inconclusive": 2}[rep.verdict])
    if args.json:
        print(json.dumps({k: r.to_json() for k, r in reports.items()}, indent=2))
    return worst


if __name__ == "__main__":
    sys.exit(main())
