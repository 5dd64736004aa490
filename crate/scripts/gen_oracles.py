#!/usr/bin/env python3
"""Regenerate the reference vectors under crates/core/tests/data/.

Needs nltk and scipy:

    python3 scripts/gen_oracles.py [OUT_DIR]
"""
import json
import os
import random
import re
import sys

from nltk.stem.porter import PorterStemmer
from scipy.stats import chi2, chi2_contingency

root = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "crates", "core")
out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(root, "tests", "data")
os.makedirs(out, exist_ok=True)

CLASSIC = """caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing filing happy sky
relational conditional rational valenci hesitanci digitizer conformabli radicalli
differentli vileli analogousli vietnamization predication operator feudalism
decisiveness hopefulness callousness formaliti sensitiviti sensibiliti triplicate
formative formalize electriciti electrical hopeful goodness revival allowance inference
airliner gyroscopic adjustable defensible irritant replacement adjustment dependent
adoption homologou communism activate angulariti homologous effective bowdlerize
probate rate cease controll roll generalizations oscillators pandemic people vaccine
vaccination lockdown quarantine infection""".split()

words = set()
for name in ("lemmas.tsv", "base_lexicon.tsv"):
    with open(os.path.join(root, "data", name), encoding="utf-8") as f:
        for line in f:
            words.update(line.rstrip("\n").split("\t")[:2] if name == "lemmas.tsv" else [line.split("\t")[0]])
words = sorted(w for w in words if re.fullmatch("[a-z]+", w))
sample = sorted(set(random.Random(7).sample(words, 1500)) | set(CLASSIC))

stemmer = PorterStemmer(mode=PorterStemmer.MARTIN_EXTENSIONS)
with open(os.path.join(out, "porter_vectors.tsv"), "w", encoding="utf-8") as f:
    for w in sample:
        f.write(f"{w}\t{stemmer.stem(w)}\n")

xs = [0.01, 0.1, 0.5, 1, 2, 3.84, 5, 7.5, 10, 15, 20, 30, 40, 60, 100]
dfs = [1, 2, 3, 4, 5, 6, 8, 10, 15, 20, 30, 50]
with open(os.path.join(out, "chi2_sf.tsv"), "w") as f:
    for df in dfs:
        for x in xs:
            f.write(f"{x}\t{df}\t{float(chi2.sf(x, df))!r}\n")

TABLES = [
    [[20, 0], [0, 20]],
    [[10, 20, 30], [30, 20, 10]],
    [[9241, 399, 360], [5800, 1400, 2800]],
    [[5, 7], [9, 3]],
    [[12, 5, 9], [4, 11, 6], [7, 7, 7]],
    [[100, 1, 3], [90, 4, 2]],
]
with open(os.path.join(out, "chi2_tables.jsonl"), "w") as f:
    for t in TABLES:
        stat, p, df, _ = chi2_contingency(t, correction=False)
        f.write(json.dumps({"table": t, "statistic": float(stat), "df": int(df), "p_value": float(p)}) + "\n")
