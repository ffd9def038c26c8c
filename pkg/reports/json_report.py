"""
JSON documents and plain-text tables for command results.

Every command returns a payload dict; build_document wraps it with a meta
block (tool, version, timestamp) unless --no-meta is given, so two runs with
the same flags and --no-meta are byte-identical.
"""
import json
import logging
import os
from datetime import datetime, timezone

import pandas as pd

from shared.errors import InputError
from shared.formatting import to_jsonable

logger = logging.getLogger(__name__)

TOOL_NAME = "dessin-correlators"
TOOL_VERSION = "1.0.0"


def build_document(command, payload, cfg=None):
    doc = {"command": command}
    if cfg is None or not cfg.no_meta:
        doc["meta"] = {
            "tool": TOOL_NAME,
            "version": TOOL_VERSION,
            "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "jobs": None if cfg is None else cfg.jobs,
        }
    doc["result"] = to_jsonable(payload)
    return doc


def error_document(exc):
    return {"error": {"type": type(exc).__name__, "message": str(exc)}}


def render_json(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False)


def write_output(text, output=None):
    """Write to the --output file (atomically) or return the text for stdout."""
    if not output:
        return text
    tmp = output + ".tmp"
    try:
        with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
        os.replace(tmp, output)
    except OSError as exc:
        raise InputError(f"nao foi possivel gravar --output {output}: {exc}") from exc
    logger.info(f"Relatorio gravado em {output}")
    return None


# ─────────────────────────────────────────────────────────
# TABLES
# ─────────────────────────────────────────────────────────

def checks_frame(checks):
    """One row per verify check."""
    rows = [
        {
            "suite": c["suite"],
            "check": c["check"],
            "cases": c["cases"],
            "passed": c["passed"],
            "first_failure": "" if c.get("first_failure") is None else json.dumps(to_jsonable(c["first_failure"])),
        }
        for c in checks
    ]
    return pd.DataFrame(rows, columns=["suite", "check", "cases", "passed", "first_failure"])


def routes_frame(routes):
    """Route name against its value, for `correlator --table`."""
    return pd.DataFrame(
        [{"route": name, "value": to_jsonable(value)} for name, value in routes.items()],
        columns=["route", "value"],
    )


def render_table(df):
    if df.empty:
        return "(vazio)"
    return df.to_string(index=False)
