#!/usr/bin/env python3
"""Regenerates the covering designs under tests/data/designs.

Algebraic designs are built directly; the remaining ones come from a seeded
annealing search and are checked for coverage before being written.
"""
import itertools
import math
import random
import sys
from pathlib import Path


def covers(blocks, t, v):
    sets = [frozenset(b) for b in blocks]
    return all(any(set(T) <= b for b in sets)
               for T in itertools.combinations(range(1, v + 1), t))


def witt_12():
    # Hexads of S(5,6,12): orbit of {inf,1,3,4,5,9} under PSL(2,11).
    inf = 11
    def mob(z, a, b, c, d):
        if z == inf:
            return inf if c == 0 else (a * pow(c, -1, 11)) % 11
        den = (c * z + d) % 11
        if den == 0:
            return inf
        return ((a * z + b) * pow(den, -1, 11)) % 11
    gens = [(1, 1, 0, 1), (3, 0, 0, 4), (0, 10, 1, 0)]
    start = frozenset([inf, 1, 3, 4, 5, 9])
    seen = {start}
    todo = [start]
    while todo:
        b = todo.pop()
        for g in gens:
            nb = frozenset(mob(z, *g) for z in b)
            if nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return sorted(sorted(p + 1 for p in b) for b in seen)


def anneal(t, k, v, size, seed):
    # Simulated annealing over block lists; objective = uncovered t-subsets.
    rng = random.Random(seed)
    tsets = list(itertools.combinations(range(1, v + 1), t))
    idx = {T: i for i, T in enumerate(tsets)}
    allk = list(itertools.combinations(range(1, v + 1), k))
    cov = {b: [idx[T] for T in itertools.combinations(b, t)] for b in allk}
    blocks = [rng.choice(allk) for _ in range(size)]
    cnt = [0] * len(tsets)
    for b in blocks:
        for i in cov[b]:
            cnt[i] += 1
    unc = sum(c == 0 for c in cnt)
    step = 0
    while unc > 0:
        step += 1
        temp = 0.6 * (1 - (step % 300000) / 300000) + 0.05
        j = rng.randrange(size)
        old = blocks[j]
        s = set(old)
        for _ in range(rng.choice([1, 1, 2])):
            s.remove(rng.choice(sorted(s)))
            s.add(rng.choice([x for x in range(1, v + 1) if x not in s]))
        new = tuple(sorted(s))
        for i in cov[old]:
            cnt[i] -= 1
        delta = (sum(1 for i in cov[old] if cnt[i] == 0)
                 - sum(1 for i in cov[new] if cnt[i] == 0))
        if delta <= 0 or rng.random() < math.exp(-delta / temp):
            for i in cov[new]:
                cnt[i] += 1
            blocks[j] = new
            unc += delta
        else:
            for i in cov[old]:
                cnt[i] += 1
    return sorted(blocks)


def write(path, blocks, t, k, v, note):
    assert covers(blocks, t, v), path
    with open(path, "w") as f:
        f.write(f"# ({t},{k},{v}) covering design, {len(blocks)} blocks. {note}\n")
        for b in blocks:
            f.write(" ".join(map(str, b)) + "\n")


def main(out):
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    w12 = witt_12()
    assert len(w12) == 132
    write(out / "c_12_6_5.txt", w12, 5, 6, 12, "Steiner system S(5,6,12).")
    w11 = [b[:-1] for b in w12 if b[-1] == 12]
    write(out / "c_11_5_4.txt", w11, 4, 5, 11, "Derived Steiner system S(4,5,11).")
    sqs8 = [sorted(x + 1 for x in c) for c in itertools.combinations(range(8), 4)
            if c[0] ^ c[1] ^ c[2] ^ c[3] == 0]
    write(out / "c_8_4_3.txt", sqs8, 3, 4, 8, "Steiner quadruple system SQS(8).")
    fano = [sorted(((x + d) % 7) + 1 for d in (0, 1, 3)) for x in range(7)]
    write(out / "c_7_3_2.txt", sorted(fano), 2, 3, 7, "Fano plane.")
    write(out / "c_7_3_1.txt", [[1, 2, 3], [4, 5, 6], [1, 2, 7]], 1, 3, 7, "")
    write(out / "c_5_4_3.txt", [[1, 2, 3, 4], [1, 2, 3, 5], [1, 2, 4, 5], [1, 3, 4, 5]],
          3, 4, 5, "")
    write(out / "c_5_4_2.txt", [[1, 2, 3, 4], [1, 2, 3, 5], [1, 2, 4, 5]], 2, 4, 5, "")
    write(out / "c_6_6_5.txt", [[1, 2, 3, 4, 5, 6]], 5, 6, 6, "")
    write(out / "c_6_6_4.txt", [[1, 2, 3, 4, 5, 6]], 4, 6, 6, "")
    for (t, k, v, size, seed) in [(2, 4, 8, 6, 1), (3, 5, 11, 30, 1), (4, 6, 12, 41, 2)]:
        found = anneal(t, k, v, size, seed)
        write(out / f"c_{v}_{k}_{t}.txt", found, t, k, v, f"Annealed, seed {seed}.")

if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/designs")
