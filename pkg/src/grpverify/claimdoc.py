"""Render the claim registry as the markdown claim index (docs/claims.md)."""

from __future__ import annotations

import sys

from .claims import builtin_claims


def render() -> str:
    lines = [
        "# Claim index",
        "",
        "Every registered claim with its source statement and checker kind.",
        "Regenerate with: `python3 -m grpverify.claimdoc > docs/claims.md`.",
        "",
        "| id | kind | statement |",
        "|----|------|-----------|",
    ]
    for rec in builtin_claims():
        ref = rec.paper_ref.replace("|", "\\|")
        lines.append(f"| {rec.id} | {rec.kind} | {ref} |")
    lines.append("")
    return "\n".join(lines)


def main() -> int:
    sys.stdout.write(render())
    return 0


if __name__ == "__main__":
    sys.exit(main())
