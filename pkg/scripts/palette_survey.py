"""Compare colors used by each algorithm with the exact dichromatic number.

    python3 scripts/palette_survey.py --count 100 --n 12
"""
import argparse
from collections import Counter
from dataclasses import dataclass

from dichromatic.colorings import (
    brute_force_oracle,
    color_addsink,
    color_locally_complete,
    color_p111,
    color_w3minus_any,
    color_w3plus,
    w3plus_oracle,
)
from dichromatic.generators import GenConfig, random_in_class
from dichromatic.oracle import dichromatic_number, is_valid_acyclic_coloring
from dichromatic.patterns import C3_CLASS, P111_CLASS, W3MINUS_CLASS, W3PLUS_CLASS, locally_complete_class, trans_tour


@dataclass
class SurveyConfig:
    count: int = 100
    n: int = 12
    arc_probability: float = 0.3
    seed: int = 0


def algorithms():
    tt4 = trans_tour(4)
    lc_sub = brute_force_oracle(tt4, 3)
    sink_sub = w3plus_oracle()
    return [
        ("w3plus on C3-free", C3_CLASS, lambda D: color_w3plus(D, D.vertices[0]), 2),
        ("w3plus on W3+-free", W3PLUS_CLASS, lambda D: color_w3plus(D, D.vertices[0]), 2),
        ("w3minus", W3MINUS_CLASS, color_w3minus_any, 4),
        ("addsink, hero C3", W3MINUS_CLASS, lambda D: color_addsink(D, sink_sub), 17),
        ("p111", P111_CLASS, color_p111, 2),
        ("locally complete, hero TT4", locally_complete_class(tt4.graph, "tt4"),
         lambda D: color_locally_complete(D, lc_sub), 6),
    ]


def survey(cfg: SurveyConfig):
    for title, spec, run, bound in algorithms():
        gaps = Counter()
        chis = Counter()
        worst = 0
        for i in range(cfg.count):
            D = random_in_class(GenConfig(cfg.n, cfg.arc_probability, cfg.seed + i), spec)
            if not len(D):
                continue
            c = run(D)
            assert is_valid_acyclic_coloring(D, c)
            used = len(c.colors_used())
            chi = dichromatic_number(D).chi
            chis[chi] += 1
            gaps[used - chi] += 1
            worst = max(worst, used)
        print(f"{title:30s} bound {bound:2d}  max used {worst:2d}  "
              f"chi histogram {dict(sorted(chis.items()))}  excess histogram {dict(sorted(gaps.items()))}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=SurveyConfig.count)
    ap.add_argument("--n", type=int, default=SurveyConfig.n)
    ap.add_argument("--p", type=float, default=SurveyConfig.arc_probability)
    ap.add_argument("--seed", type=int, default=SurveyConfig.seed)
    a = ap.parse_args()
    survey(SurveyConfig(a.count, a.n, a.p, a.seed))


if __name__ == "__main__":
    main()
