"""Bundled pipeline corpus: 50 seeded instances mixing Turan graphs,
planted-member multipartite graphs, and random graphs up to 60 vertices.

Instances where the pattern's minimal family has no single-edge member
carry a supplied step-1 threshold, since the exact extremal value is out
of reach at these orders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, complete_multipartite, named_graph, plant, \
    random_graph, turan_graph
from .pipeline import PipelineParams


@dataclass(frozen=True)
class CorpusInstance:
    name: str
    host: Graph
    pattern: Graph
    params: PipelineParams


def pipeline_corpus() -> list[CorpusInstance]:
    k3 = named_graph("k3")
    k222 = named_graph("k222")
    bowtie = named_graph("bowtie")
    c4 = named_graph("c4")
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    out: list[CorpusInstance] = []

    # Turan graphs: already internally edge-free, every pattern trivial
    for n in (8, 12, 16, 20, 30, 40, 50, 60):
        out.append(CorpusInstance(f"turan2-{n}-k3", turan_graph(n, 2), k3,
                                  PipelineParams()))
    for n in (24, 36):
        out.append(CorpusInstance(f"turan2-{n}-k222", turan_graph(n, 2), k222,
                                  PipelineParams(step1_threshold=0)))

    # planted single edges / members in complete bipartite hosts
    for m in (5, 6, 8, 10, 12):
        base = complete_multipartite([m, m])
        out.append(CorpusInstance(
            f"k{m}{m}+e-k3", base.add_edges([(0, 1)]), k3, PipelineParams()))
    for m in (5, 7, 9, 11):
        base = complete_multipartite([m, m])
        g, _ = plant(base, c4, [0, 1, 2, 3])
        out.append(CorpusInstance(
            f"k{m}{m}+c4-k222", g, k222,
            PipelineParams(beta=0.45, step1_threshold=0)))
    for m in (6, 8, 10):
        base = complete_multipartite([m, m])
        g, _ = plant(base, p3, [0, 1, 2])
        out.append(CorpusInstance(
            f"k{m}{m}+p3-bowtie", g, bowtie,
            PipelineParams(beta=0.45, step1_threshold=0)))
    base = complete_multipartite([10, 10])
    out.append(CorpusInstance(
        "k1010+3e-k3", base.add_edges([(0, 1), (2, 3), (4, 5)]), k3,
        PipelineParams()))
    base = complete_multipartite([7, 7, 7])
    out.append(CorpusInstance(
        "k777+e-k3", base.add_edges([(0, 1)]), k3, PipelineParams()))

    # Turan graphs with seeded noise edges inside the parts: the step-1
    # loop has real work to do and the plants stay below the X threshold
    import random as _random
    for i, (n, extra) in enumerate([(16, 2), (20, 3), (24, 4), (30, 5),
                                    (36, 6), (40, 8), (50, 8), (60, 10)]):
        rng = _random.Random(400 + i)
        g = turan_graph(n, 2)
        half = n - n // 2
        added = set()
        while len(added) < extra:
            u, v = rng.sample(range(half), 2)
            e = (min(u, v), max(u, v))
            if e not in added and not g.has_edge(*e):
                added.add(e)
                g = g.add_edges([e])
        out.append(CorpusInstance(f"noisy-turan-{n}-{i}-k3", g, k3,
                                  PipelineParams(seed=i)))

    # dense random graphs, varied density and seed
    # dominating-apex hosts: the apex lands in X and feeds the step-2 loop
    for m in (6, 8, 10):
        out.append(CorpusInstance(f"cone-{m}-k3",
                                  complete_multipartite([m, m, 1]), k3,
                                  PipelineParams()))

    seeds = [(15, 0.7), (18, 0.75), (20, 0.7), (25, 0.65),
             (30, 0.7), (35, 0.75), (40, 0.7),
             (50, 0.65), (60, 0.7)]
    for i, (n, p) in enumerate(seeds):
        out.append(CorpusInstance(
            f"rand-{n}-{i}-k3", random_graph(n, p, seed=100 + i), k3,
            PipelineParams(seed=i)))
    for i, (n, p) in enumerate([(20, 0.7), (30, 0.65), (40, 0.7)]):
        out.append(CorpusInstance(
            f"rand-{n}-{i}-k222", random_graph(n, p, seed=200 + i), k222,
            PipelineParams(seed=i, step1_threshold=n // 2)))
    for i, (n, p) in enumerate([(20, 0.7), (30, 0.65), (36, 0.7)]):
        out.append(CorpusInstance(
            f"rand-{n}-{i}-bowtie", random_graph(n, p, seed=300 + i), bowtie,
            PipelineParams(seed=i, step1_threshold=n // 2)))

    assert len(out) == 50
    return out
