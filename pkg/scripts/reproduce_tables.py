"""Reproduce the headline allocation numbers: criterion weights with their
consistency check, the judgment-shift variant, and scores for the three
published indicator rows.

    python scripts/reproduce_tables.py
"""

from pathlib import Path

import numpy as np

from greyalloc import principal_weights, scale_entry, score_ahp
from greyalloc.io_config import load_indicators, load_matrix

DATA = Path(__file__).resolve().parent.parent / "data"


def show_weights(title, wv):
    print(title)
    for label, weight in sorted(zip(wv.labels, wv.weights), key=lambda p: -p[1]):
        print(f"  {label:<24} {weight:.4f}")
    print(f"  lambda_max={wv.lambda_max:.4f}  ci={wv.ci:.4f}  cr={wv.cr:.4f}  "
          f"consistent={wv.consistent}")


def main():
    matrix = load_matrix(DATA / "pairwise_matrix.csv")
    base = principal_weights(matrix)
    show_weights("criterion weights (baseline judgments):", base)

    # soften the unemployment-vs-welfare judgment from 5 to 3
    i = matrix.labels.index("unemployment_rate") + 1
    j = matrix.labels.index("public_welfare_index") + 1
    variant = principal_weights(scale_entry(matrix, i, j, 3 / 5))
    show_weights("\ncriterion weights (5 -> 3 judgment shift):", variant)
    top = base.labels[int(np.argmax(base.weights))]
    print(f"\ndominant criterion under both judgment sets: {top}")

    table = load_indicators(DATA / "indicators.csv", normalized=True)
    scored = score_ahp(table, base)
    print("\ntop 5 / bottom 5 allocation shares (28-row sample table):")
    ranking = scored.ranking()
    ranks = dict(ranking)
    for entity, rank in ranking[:5] + ranking[-5:]:
        idx = table.entity_index(entity)
        print(f"  {rank:>2}. {entity:<16} index={scored.scores[idx]:.6f} "
              f"share={scored.proportions[idx]:.6f}")
    for entity in ("Ireland", "Estonia", "Austria"):
        idx = table.entity_index(entity)
        print(f"  published row {entity}: index={scored.scores[idx]:.6f} rank={ranks[entity]}")


if __name__ == "__main__":
    main()
