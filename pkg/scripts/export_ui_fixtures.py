"""Export wire-format fixtures for the frontend tests.

Runs the synthetic sense-shift corpus through the HTTP service and writes
the graph payload, the time-diff report (reference 2), and the interval-0
slice to frontend/tests/fixtures/. The frontend's view-model tests compare
their client-side derivations against these server-side oracles.

Usage: python scripts/export_ui_fixtures.py
"""

from __future__ import annotations

import json
import sys
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from sensegraph.analytics import interval_slice
from sensegraph.api import create_app
from sensegraph.builder import graph_from_dict
from sensegraph.store import Store

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from util import SHIFT_TARGET, write_sense_shift_corpus  # noqa: E402

REQUEST = {
    "corpus_id": "senseshift",
    "target": SHIFT_TARGET,
    "variant": "interval",
    "n": 10,
    "d": 5,
    "interval_indices": [0, 1, 2, 3, 4, 5],
    "seed": 42,
    "iterations": 15,
}


def main() -> None:
    out = ROOT / "frontend" / "tests" / "fixtures"
    out.mkdir(parents=True, exist_ok=True)

    with tempfile.TemporaryDirectory() as tmp:
        source = write_sense_shift_corpus(Path(tmp) / "source")
        store = Store()
        store.ingest(source, "senseshift")
        client = TestClient(create_app(store=store))

        payload = client.post("/api/graph", json=REQUEST)
        payload.raise_for_status()
        (out / "payload.json").write_bytes(payload.content)

        timediff = client.post("/api/timediff", json={**REQUEST, "reference_interval": 2})
        timediff.raise_for_status()
        (out / "timediff.json").write_bytes(timediff.content)

        graph = graph_from_dict(payload.json())
        nodes, edges = interval_slice(graph, 0)
        slice_doc = {
            "interval": 0,
            "nodes": sorted(nodes),
            "edges": sorted([s, t] for s, t in edges),
        }
        (out / "slice0.json").write_text(json.dumps(slice_doc, indent=2) + "\n", encoding="utf-8")

    for name in ("payload.json", "timediff.json", "slice0.json"):
        print(f"wrote {out / name}")


if __name__ == "__main__":
    main()
