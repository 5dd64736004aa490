#!/usr/bin/env python3
"""Regenerate the synthetic mini-corpora under crates/core/data/ (deterministic)."""
import csv
import os
import random

out = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "data")
rng = random.Random(42)

POS = ["Recovery numbers look great today", "Got my vaccine, feeling safe and hopeful",
       "So thankful for the nurses, we will recover", "Vaccination drive is going well in our city",
       "Happy to see cases falling, good news", "Immunity is building, stay strong everyone",
       "Great support from the local hospital", "The vaccines work, wonderful progress", "Kids are back at school and children feel safe"]
NEG = ["Another death reported, this crisis is terrible", "Hospitals overwhelmed and deaths rising",
       "Fear and panic everywhere, awful situation", "Oxygen shortage is a dangerous failure",
       "So many people died, the government failed", "Severe cases keep growing, this is bad",
       "Lockdown again, I am sick of this crisis", "Terrible news about the dead in the city",
       "Elderly patients and seniors died in the ward", "Pregnant women fear the crowded hospital"]
NEU = ["Officials will publish the case report tomorrow", "Lockdown rules change on Monday",
       "The ministry held a press briefing", "New testing centres open next week",
       "Schools remain closed according to the notice", "Read the latest update on travel", "Students and adults can book testing slots"]
EXTRAS = ["", "", " https://t.co/{u}", " @WHO", " #covid19", " 😊", " 😷", " 😢", " #StaySafe", " 100%!!", " www.example.org/{u}"]
PLACES = ["Mumbai", "London", "New York", "", "Lagos", "Toronto", "nan"]


def scores(kind):
    if kind == "positive":
        pos = round(rng.uniform(0.3, 0.6), 3); neg = round(rng.uniform(0.0, 0.1), 3)
    elif kind == "negative":
        neg = round(rng.uniform(0.3, 0.6), 3); pos = round(rng.uniform(0.0, 0.1), 3)
    else:
        pos = round(rng.uniform(0.0, 0.1), 3); neg = round(rng.uniform(0.0, 0.1), 3)
    neu = round(1.0 - pos - neg, 3)
    comp = round(pos - neg, 4)
    return comp, neg, neu, pos


def tweet(kind, pools):
    text = rng.choice(pools[kind])
    for _ in range(rng.randint(0, 2)):
        text += rng.choice(EXTRAS).format(u=rng.randint(1000, 9999))
    return text


def write(name, header, rows):
    with open(os.path.join(out, name), "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(header)
        w.writerows(rows)


pools = {"positive": POS, "negative": NEG, "neutral": NEU}
kinds = ["negative"] * 9 + ["positive"] * 6 + ["neutral"] * 5
rows = []
for i in range(204):
    kind = rng.choice(kinds)
    text = tweet(kind, pools)
    if i in (17, 58, 123, 190):
        text = rng.choice(["nan", "", "NaN", "   "])
    day = 1 + i % 28
    month = 4 + (i // 70)
    comp, neg, neu, pos = scores(kind)
    rows.append([f"c{i:04d}", f"2021-{month:02d}-{day:02d} {i % 24:02d}:{i % 60:02d}:00",
                 text, text.lower(), rng.choice(PLACES), kind, comp, neg, neu, pos])
write("mini_covid.csv", ["id", "date", "original_text", "clean_tweet", "place", "sentiment",
                         "compound", "neg", "neu", "pos"], rows)

MPOS = ["Mpox vaccine rollout is a hopeful step", "Recovery stories give me hope",
        "Protected after my second vaccine dose", "Cases are dropping, great work by clinics",
        "Support for patients is wonderful", "Children protected and mothers hopeful"]
MNEG = ["Monkeypox panic spreading fast", "Another death linked to the outbreak, scary",
        "Severe lesions and fear in the community", "Vaccine shortage is a crisis", "Gay men face stigma and fear"]
MNEU = ["WHO meeting on monkeypox scheduled", "Health department shares testing locations",
        "Read the guidance for travellers", "Guidance for men and women published"]
pools = {"positive": MPOS, "negative": MNEG, "neutral": MNEU}
kinds = ["positive"] * 10 + ["negative"] * 6 + ["neutral"] * 4
rows = []
for i in range(153):
    kind = rng.choice(kinds)
    text = tweet(kind, pools).replace("#covid19", "#mpox")
    if i in (9, 77, 140):
        text = "nan"
    rows.append([f"m{i:04d}", f"2022-{8 + i // 80:02d}-{1 + i % 28:02d}T{i % 24:02d}:15:00Z",
                 text, rng.choice(PLACES), kind])
write("mini_mpox.csv", ["id", "created_at", "tweet", "place", "sentiment"], rows)
