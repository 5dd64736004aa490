#!/usr/bin/env python3
"""Regenerate the bundled data tables under crates/core/data/.

Inputs are the unpacked wheels of `textblob` (en-sentiment.xml, PDDL),
`emoji` (emoji.json, BSD) and `lemminflect` (infl_lu.csv.gz, MIT):

    pip download textblob emoji lemminflect --no-deps -d /tmp/pk
    (cd /tmp/pk && for f in *.whl; do python3 -m zipfile -e $f ${f%%-*}; done)
    python3 scripts/gen_data.py /tmp/pk
"""
import collections
import gzip
import json
import os
import re
import sys
import unicodedata
import xml.etree.ElementTree as ET

src = sys.argv[1]
out = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "data")

# base polarity lexicon: mean polarity over all senses of a word form
tree = ET.parse(os.path.join(src, "textblob/textblob/en/en-sentiment.xml"))
pol = collections.defaultdict(list)
for w in tree.getroot().iter("word"):
    form = w.get("form").lower()
    if re.fullmatch(r"[a-z]+", form):
        pol[form].append(float(w.get("polarity")))
with open(os.path.join(out, "base_lexicon.tsv"), "w") as f:
    for form in sorted(pol):
        v = sum(pol[form]) / len(pol[form])
        f.write(f"{form}\t{round(v, 4):g}\n")

# emoji map: single-codepoint pictographs from the most common blocks
emoji = json.load(open(os.path.join(src, "emoji/emoji/unicode_codes/emoji.json")))
blocks = [(0x1F600, 0x1F64F), (0x1F910, 0x1F97F), (0x1F440, 0x1F4FF), (0x2600, 0x27BF), (0x1F300, 0x1F3FF)]
by_cp = {}
for key, meta in emoji.items():
    base = key.replace("️", "")
    if len(base) != 1 or unicodedata.category(base) != "So":
        continue
    name = re.sub(r"[^a-z]+", "_", meta["en"].strip(":").lower()).strip("_")
    if not name or re.search(r"\d", meta["en"]):
        continue
    by_cp[ord(base)] = name
picked = []
for lo, hi in blocks:
    for cp in range(lo, hi + 1):
        if cp in by_cp and len(picked) < 220:
            picked.append((chr(cp), by_cp[cp]))
with open(os.path.join(out, "emoji_map.tsv"), "w") as f:
    for ch, name in picked:
        f.write(f"{ch}\t{name}\n")

# inflection -> lemma table
rank = {"noun": 0, "verb": 1, "adj": 2, "adv": 3}
lemmas = set()
cands = collections.defaultdict(list)
with gzip.open(os.path.join(src, "lemminflect/lemminflect/resources/infl_lu.csv.gz"), "rt") as f:
    for line in f:
        parts = line.rstrip("\n").split(",")
        lemma, pos, slots = parts[0], parts[1], parts[2:]
        if not re.fullmatch(r"[a-z]+", lemma):
            continue
        lemmas.add(lemma)
        for slot in slots:
            for form in slot.split("/"):
                if form and form != lemma and re.fullmatch(r"[a-z]+", form):
                    cands[form].append((rank.get(pos, 9), lemma))
with open(os.path.join(out, "lemmas.tsv"), "w") as f:
    for form in sorted(cands):
        if form in lemmas:
            continue
        f.write(f"{form}\t{min(cands[form])[1]}\n")
