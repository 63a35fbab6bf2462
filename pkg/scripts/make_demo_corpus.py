"""Generate a small synthetic demo corpus under data/demo.

The target word mouse/NN keeps a stable 'rodent' sense across all eight
intervals, grows a 'pointing device' sense from interval 4 on, and loses a
small 'timid person' sense after interval 2 — enough structure to exercise
clustering, time-diff coloring, and the evidence panels.

Usage: python scripts/make_demo_corpus.py [target_dir]
"""

from __future__ import annotations

import json
import random
import sys
from itertools import combinations
from pathlib import Path

TARGET = "mouse/NN"
RODENT = ["rat/NN", "squirrel/NN", "hamster/NN", "vole/NN", "shrew/NN", "rabbit/NN"]
DEVICE = ["keyboard/NN", "cursor/NN", "button/NN", "screen/NN", "pointer/NN", "trackpad/NN"]
TIMID = ["coward/NN", "weakling/NN", "milquetoast/NN"]
INTERVALS = [(i, f"{1860 + i * 20}-{1879 + i * 20}", 1860 + i * 20, 1879 + i * 20) for i in range(8)]

SENSES = [
    (RODENT, range(0, 8), "-nn/field/NN"),
    (DEVICE, range(4, 8), "-dobj/click/VB"),
    (TIMID, range(0, 3), "-dep/timid/JJ"),
]


def main(target_dir: str) -> None:
    rng = random.Random(8)
    out = Path(target_dir)
    out.mkdir(parents=True, exist_ok=True)

    with open(out / "intervals.tsv", "w", encoding="utf-8") as fh:
        for index, label, start, end in INTERVALS:
            fh.write(f"{index}\t{label}\t{start}\t{end}\n")

    sim, feats = [], []
    for group, eras, shared in SENSES:
        for t in eras:
            for i, word in enumerate(group):
                sim.append(f"{TARGET}\t{word}\t{rng.randint(18, 30) - i}\t{t}")
                feats.append(f"{word}\t{shared}\t{rng.uniform(4, 9):.2f}\t{t}")
                feats.append(f"{word}\t-nn/{word.split('/')[0]}ish/JJ\t{rng.uniform(1, 4):.2f}\t{t}")
                feats.append(f"{TARGET}\t{shared}\t{rng.uniform(5, 10):.2f}\t{t}")
            for a, b in combinations(group, 2):
                if rng.random() < 0.85:
                    sim.append(f"{a}\t{b}\t{rng.randint(6, 16)}\t{t}")
    (out / "similarity.tsv").write_text("".join(f"{l}\n" for l in sim), encoding="utf-8")
    (out / "features.tsv").write_text("".join(f"{l}\n" for l in feats), encoding="utf-8")

    sentences = []
    texts = {
        RODENT[0]: "a small mouse/NN and a rat/NN ran across the field",
        DEVICE[0]: "move the mouse/NN next to the keyboard/NN and click",
        TIMID[0]: "he was called a mouse/NN , a coward/NN at heart",
    }
    sid = 0
    for group, eras, shared in SENSES:
        for t in eras:
            sentences.append(
                {
                    "sentence_id": f"d{sid:04d}",
                    "text": texts[group[0]],
                    "interval_index": t,
                    "attested": [[TARGET, shared], [group[0], shared]],
                }
            )
            sid += 1
    with open(out / "sentences.jsonl", "w", encoding="utf-8") as fh:
        for obj in sentences:
            fh.write(json.dumps(obj) + "\n")
    (out / "meta.json").write_text(
        json.dumps({"corpus_id": out.name, "name": "Synthetic demo corpus"}) + "\n",
        encoding="utf-8",
    )
    print(f"wrote demo corpus to {out}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/demo")
