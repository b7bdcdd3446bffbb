"""Brute-force oracles shared by the tests. Nothing here imports the
package's combinatorics; they only take partitions as plain tuples."""

from itertools import permutations, product


def brute_partitions(n):
    """Every weakly decreasing positive sequence summing to n."""
    found = set()

    def rec(prefix, left):
        if left == 0:
            found.add(tuple(prefix))
            return
        for p in range(1, left + 1):
            rec(prefix + [p], left - p)

    rec([], n)
    return {tuple(sorted(p, reverse=True)) for p in found}


def cells(shape):
    return [(i, j) for i, r in enumerate(shape) for j in range(r)]


def _is_ssyt(shape, fill):
    for (i, j), v in fill.items():
        if j + 1 < shape[i] and fill[(i, j + 1)] < v:
            return False
        if i + 1 < len(shape) and j < shape[i + 1] and fill[(i + 1, j)] <= v:
            return False
    return True


def standard_tableaux(shape):
    cs = cells(shape)
    out = []
    for perm in permutations(range(1, len(cs) + 1)):
        fill = dict(zip(cs, perm))
        if _is_ssyt(shape, fill):
            out.append(fill)
    return out


def count_semistandard(shape, content):
    """SSYT of the given shape whose entry i occurs content[i-1] times."""
    cs = cells(shape)
    word = [i + 1 for i, c in enumerate(content) for _ in range(c)]
    seen = set()
    for perm in set(permutations(word)):
        fill = dict(zip(cs, perm))
        if _is_ssyt(shape, fill):
            seen.add(perm)
    return len(seen)


def major_index_generating(shape):
    """sum over SYT of v^maj, descent i when i+1 sits in a later row.
    Returned as {exponent: count}."""
    out = {}
    for fill in standard_tableaux(shape):
        row = {v: i for (i, _), v in fill.items()}
        maj = sum(i for i in range(1, len(row)) if row[i + 1] > row[i])
        out[maj] = out.get(maj, 0) + 1
    return out


def tabloid_fixed_points(perm, shape):
    """Fixed points of a permutation on row-tabloids of the given shape,
    i.e. the permutation character of S_n on S_n / S_shape."""
    n = len(perm)
    rows = len(shape)
    count = 0
    for labels in product(range(rows), repeat=n):
        if any(labels.count(r) != shape[r] for r in range(rows)):
            continue
        if all(labels[perm[i]] == labels[i] for i in range(n)):
            count += 1
    return count


def cycle_type(perm):
    seen, parts = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        parts.append(length)
    return tuple(sorted(parts, reverse=True))


def dyck_area_sequences(n):
    def rec(seq):
        if len(seq) == n:
            yield tuple(seq)
            return
        for a in range(seq[-1] + 2):
            yield from rec(seq + [a])

    yield from rec([0])


def catalan_area_dinv(n):
    """{(dinv, area): count} over Dyck paths of size n."""
    out = {}
    for a in dyck_area_sequences(n):
        area = sum(a)
        dinv = sum(
            1
            for i in range(n)
            for j in range(i + 1, n)
            if a[i] == a[j] or a[i] == a[j] + 1
        )
        out[(dinv, area)] = out.get((dinv, area), 0) + 1
    return out
