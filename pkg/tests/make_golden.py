"""Regenerate the golden report files (run from the repository root)."""

import json
from pathlib import Path

from pertinax.frontend.parser import parse
from pertinax.frontend.runner import run

HERE = Path(__file__).resolve().parent
FIXTURES = HERE.parent / "fixtures"

def main():
    for name in ("kxy_swap", "km1xyz_omega"):
        script = parse((FIXTURES / (name + ".ptx")).read_text())
        report, _ = run(script)
        for t in report["tasks"]:
            t.pop("time_ms", None)
        out = HERE / "golden" / (name + ".json")
        out.write_text(json.dumps(report, indent=2) + "\n")
        print("wrote", out)

if __name__ == "__main__":
    main()
