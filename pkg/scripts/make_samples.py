#!/usr/bin/env python3
"""Synthesize the bundled sample datasets.

The raw logs behind the published disaster-response statistics are not
public, so `disaster_events.csv` is a synthetic interaction log engineered so
that the four cumulative snapshots reproduce the published actor counts,
distinct-link counts, and interaction totals exactly (43/58/76/98 actors,
46/86/115/153 links, 73/153/213/286 interactions). Structure beyond those
totals (who talks to whom) is random.

`coauthorship_sample.jsonl` is a synthetic 2001-2010 publication corpus with
preferential author selection; it carries no target values and just exercises
the publications path end to end.

Outputs are written into src/netevolve/data/ and committed; rerun only to
regenerate them.
"""

import json
import random
import sys
from datetime import datetime, timedelta
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from netevolve import build_cumulative_snapshots, parse_edge_events_text

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "netevolve" / "data"

BREAKPOINTS = [
    datetime(2009, 2, 7, 11, 50),
    datetime(2009, 2, 7, 13, 5),
    datetime(2009, 2, 7, 16, 0),
    datetime(2009, 2, 8, 0, 0),
]
TARGET_ACTORS = [43, 58, 76, 98]
TARGET_LINKS = [46, 86, 115, 153]
TARGET_WEIGHT = [73, 153, 213, 286]

ROLE_PREFIXES = ["IC", "DIC", "PO", "OO", "FBO", "CFA", "DSE", "POL", "AV", "SES", "BoM", "RD"]

PERIOD_WINDOWS = [
    (datetime(2009, 2, 5, 8, 0), datetime(2009, 2, 7, 11, 50)),
    (datetime(2009, 2, 7, 11, 51), datetime(2009, 2, 7, 13, 5)),
    (datetime(2009, 2, 7, 13, 6), datetime(2009, 2, 7, 16, 0)),
    (datetime(2009, 2, 7, 16, 1), datetime(2009, 2, 7, 23, 59)),
]


def make_disaster_events(rng: random.Random) -> list[tuple[datetime, str, str]]:
    names = []
    counters = {prefix: 0 for prefix in ROLE_PREFIXES}
    for i in range(TARGET_ACTORS[-1]):
        prefix = ROLE_PREFIXES[i % len(ROLE_PREFIXES)]
        counters[prefix] += 1
        names.append(f"{prefix}{counters[prefix]}")

    events: list[tuple[datetime, str, str]] = []
    present: list[str] = []
    linked: set[tuple[str, str]] = set()

    def rand_time(period: int) -> datetime:
        start, end = PERIOD_WINDOWS[period]
        span = int((end - start).total_seconds() // 60)
        return start + timedelta(minutes=rng.randrange(span + 1))

    def add_event(period: int, a: str, b: str) -> None:
        events.append((rand_time(period), a, b))
        linked.add((a, b) if a <= b else (b, a))

    def new_pair(period: int) -> None:
        while True:
            a, b = rng.sample(present, 2)
            key = (a, b) if a <= b else (b, a)
            if key not in linked:
                add_event(period, a, b)
                return

    def repeat_pair(period: int) -> None:
        a, b = rng.choice(sorted(linked))
        events.append((rand_time(period), a, b))

    prev_actors = 0
    prev_links = 0
    prev_weight = 0
    for period in range(4):
        new_actors = TARGET_ACTORS[period] - prev_actors
        new_links = TARGET_LINKS[period] - prev_links
        new_weight = TARGET_WEIGHT[period] - prev_weight
        arrivals = names[prev_actors : prev_actors + new_actors]
        attach_events = 0
        for actor in arrivals:
            if present:
                add_event(period, actor, rng.choice(present))
                attach_events += 1
            present.append(actor)
        for _ in range(new_links - attach_events):
            new_pair(period)
        for _ in range(new_weight - new_links):
            repeat_pair(period)
        prev_actors, prev_links, prev_weight = (
            TARGET_ACTORS[period],
            TARGET_LINKS[period],
            TARGET_WEIGHT[period],
        )
    rng.shuffle(events)
    return events


SURNAMES = [
    "Smith", "Chen", "Garcia", "Kim", "Patel", "Müller", "Nguyen", "Rossi",
    "Tanaka", "Ivanov", "Silva", "Kowalski", "Okafor", "Haddad", "Johansson",
    "Dubois", "Novak", "Costa", "Yamamoto", "OBrien", "Fischer", "Moreau",
    "Santos", "Park", "Weber", "Lindgren", "Ferrari", "Sato", "Varga", "Ali",
    "Petrov", "Janssen", "Castro", "Nakamura", "Svensson", "Ricci", "Wang",
    "Hansen", "Romero", "Keller",
]


def make_publications(rng: random.Random) -> list[dict]:
    """Growing corpus: each paper mixes newly arriving authors with existing
    ones picked preferentially by prior output, so the network stays sparse
    and clique-clustered as it expands."""
    name_stream = (
        f"{surname} {chr(ord('A') + i)}" for i in range(26) for surname in SURNAMES
    )
    pool: list[str] = []
    pub_counts: dict[str, int] = {}
    per_year = {2001 + i: count for i, count in enumerate([22, 26, 30, 34, 38, 44, 50, 56, 62, 68])}
    size_choices = [1, 2, 2, 2, 3, 3, 3, 4, 4, 5, 5, 6]
    new_author_share = 0.28
    records = []
    pub_index = 0
    for year, count in per_year.items():
        for _ in range(count):
            pub_index += 1
            k = rng.choice(size_choices)
            team: list[str] = []
            while len(team) < k:
                if not pool or rng.random() < new_author_share:
                    author = next(name_stream)
                    pool.append(author)
                    pub_counts[author] = 0
                    team.append(author)
                    continue
                weights = [1 + 3 * pub_counts[a] for a in pool]
                pick = rng.choices(pool, weights=weights)[0]
                if pick not in team:
                    team.append(pick)
            for a in team:
                pub_counts[a] += 1
            date = datetime(year, 1, 1) + timedelta(days=rng.randrange(365))
            records.append(
                {
                    "pub_id": f"P{pub_index:04d}",
                    "date": date.strftime("%Y-%m-%d"),
                    "authors": team,
                }
            )
    return records


def main() -> None:
    DATA_DIR.mkdir(parents=True, exist_ok=True)

    rng = random.Random(734)
    events = make_disaster_events(rng)
    lines = ["time,a,b,weight"]
    for t, a, b in events:
        lines.append(f"{t.strftime('%Y-%m-%dT%H:%M')},{a},{b},1")
    csv_text = "\n".join(lines) + "\n"

    parsed, warnings = parse_edge_events_text(csv_text)
    assert not warnings, warnings
    snapshots = build_cumulative_snapshots(
        parsed, BREAKPOINTS, ["T1", "T1-T2", "T1-T3", "T1-T4"]
    )
    assert [s.n_actors for s in snapshots] == TARGET_ACTORS
    assert [s.n_links for s in snapshots] == TARGET_LINKS
    assert [s.sum_links for s in snapshots] == TARGET_WEIGHT
    (DATA_DIR / "disaster_events.csv").write_text(csv_text, encoding="utf-8", newline="")
    print(f"disaster_events.csv: {len(parsed)} events,",
          [(s.n_actors, s.n_links, s.sum_links) for s in snapshots])

    rng = random.Random(2001)
    records = make_publications(rng)
    jsonl = "\n".join(json.dumps(r, ensure_ascii=False) for r in records) + "\n"
    (DATA_DIR / "coauthorship_sample.jsonl").write_text(jsonl, encoding="utf-8", newline="")
    n_authors = len({a for r in records for a in r["authors"]})
    print(f"coauthorship_sample.jsonl: {len(records)} publications, {n_authors} distinct authors")


if __name__ == "__main__":
    main()
