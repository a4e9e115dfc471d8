"""Random instances and brute-force oracles shared by the test modules."""
import random

from tnetcost import canonicalize


def random_raw(rng: random.Random, n_max=50, e_max=2000, step=None):
    """Raw labelled triples on a time grid, with runs so intervals merge.

    Labels are drawn from a pool of ``n`` strings; duplicates are allowed.
    """
    n = rng.randint(2, n_max)
    step = step or rng.choice([1, 2, 5, 20])
    offset = rng.randint(-1000, 1000)
    horizon = rng.randint(1, 80)
    labels = [f"v{k}" for k in range(n)]
    target = rng.randint(0, e_max)
    raw = []
    while len(raw) < target:
        a, b = rng.sample(labels, 2)
        start = rng.randrange(horizon)
        length = rng.choice([1, 1, 2, 3, 8])
        for k in range(length):
            if len(raw) >= target:
                break
            raw.append((offset + (start + k) * step, a, b))
    return raw


def random_stream(rng, **kw):
    return canonicalize(random_raw(rng, **kw))


def brute_intervals(ls, step):
    """Sort each edge's times and merge neighbours exactly ``step`` apart."""
    by_edge = {}
    for t, u, v in ls.events.tolist():
        by_edge.setdefault((u, v), []).append(t)
    out = {}
    for edge in sorted(by_edge):
        times = sorted(by_edge[edge])
        runs = [[times[0], times[0]]]
        for t in times[1:]:
            if t - runs[-1][1] == step:
                runs[-1][1] = t
            else:
                runs.append([t, t])
        out[edge] = [(a, b + step) for a, b in runs]
    return out


def brute_counts(triples):
    """n, m, e, t of labelled triples by plain set counting."""
    events = {(t, min(a, b), max(a, b)) for t, a, b in triples}
    return (
        len({x for _, a, b in events for x in (a, b)}),
        len({(a, b) for _, a, b in events}),
        len(events),
        len({t for t, _, _ in events}),
    )
